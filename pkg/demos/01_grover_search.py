#!/usr/bin/env python3
"""Demo 01: ricerca di Grover simulata classicamente.

Dimostra:
- probabilita' di successo in forma chiusa e sul vettore di stato
- QSearch con numero di iterazioni casuale
- effetto del rumore depolarizzante sulla curva P(M)
"""
import numpy as np

from quantum_perceptron.models.grover import NESSUN_RUMORE, GroverInstance, NoiseModel
from quantum_perceptron.tools.grover import (
    p_of_m_curve,
    qsearch,
    schedule_bound,
    success_probability,
    theta_from_fraction,
)
from quantum_perceptron.tools.statevector import statevector_marked_probability
from quantum_perceptron.utils.formatting import formatta_percentuale


def main() -> None:
    print("=" * 60)
    print("DEMO 01: Ricerca di Grover - 1 elemento marcato su 64")
    print("=" * 60)

    inst = GroverInstance(64, marked=[17])
    theta = theta_from_fraction(1 / 64)

    print("\n--- Parametri ---")
    print(f"  N elementi:        {inst.n_items}")
    print(f"  Elemento marcato:  17")
    print(f"  theta:             {theta:.6f} rad")
    print(f"  Iterazioni ottime: {round(np.pi / (4 * theta) - 0.5)}")

    # --- Forma chiusa contro vettore di stato ---
    print("\n--- P(successo) dopo j iterazioni ---")
    print(f"  {'j':>3}  {'forma chiusa':>14}  {'statevector':>14}")
    for j in (0, 1, 2, 4, 6, 8):
        esatta = success_probability(theta, j)
        simulata = statevector_marked_probability(inst, j)
        print(f"  {j:>3}  {esatta:>14.6f}  {simulata:>14.6f}")

    # --- QSearch ---
    rng = np.random.default_rng(2024)
    m = schedule_bound(inst.n_items)
    trovati = sum(qsearch(inst, "analytic", NESSUN_RUMORE, rng).index == 17 for _ in range(1000))
    print(f"\n--- QSearch (j uniforme in 0..{m - 1}) ---")
    print(f"  Successi su 1000 ricerche: {formatta_percentuale(trovati / 1000, 1)}")

    # --- Rumore ---
    print("\n--- Curva P(M) con e senza rumore depolarizzante (p = 0.05) ---")
    ideale = p_of_m_curve(inst, NESSUN_RUMORE, 12, 1, rng)
    rumorosa = p_of_m_curve(inst, NoiseModel("depolarizing", 0.05), 12, 1, rng)
    for (mm, pi, _), (_, pr, _) in zip(ideale, rumorosa):
        barra = "#" * int(round(pr * 40))
        print(f"  M={mm:>2}  ideale {pi:.3f}  rumore {pr:.3f}  {barra}")


if __name__ == "__main__":
    main()
