#!/usr/bin/env python3
"""Demo 03: bound sul numero di operazioni e sul rischio atteso."""
from quantum_perceptron.tools.bounds import (
    amplification_rounds,
    bound_sweep,
    classical_risk_bound,
    gaussian_separation_probability,
    generalization_bound,
    novikoff_bound,
    num_hyperplanes,
    pendenze_sweep,
)


def main() -> None:
    print("=" * 60)
    print("DEMO 03: Bound di costo e di rischio")
    print("=" * 60)

    gamma, epsilon = 0.03, 0.05
    k = num_hyperplanes(gamma, epsilon)
    print("\n--- Costanti per gamma = 0.03, epsilon = 0.05 ---")
    print(f"  Aggiornamenti di Novikoff:   {novikoff_bound(gamma)}")
    print(f"  Iperpiani campionati K:      {k}")
    print(f"  Round di amplificazione K2:  {amplification_rounds(k, epsilon)}")

    esatta, approssimata = gaussian_separation_probability(0.1)
    print("\n--- Iperpiano gaussiano su un campione con margine 0.1 ---")
    print(f"  Bound erf:          {esatta:.5f}")
    print(f"  Primo ordine:       {approssimata:.5f}")

    print("\n--- Rischio atteso con N = 99 ---")
    print(f"  Ibrido (gamma 0.07, eps 0.05):     {generalization_bound(99, 0.07, 0.05):.4f}")
    print(f"  Classico (gamma 0.1, M(S) = 50):   {classical_risk_bound(99, 0.1, 50):.4f}")

    print("\n--- Pendenze log-log in 1/gamma (N = 1000) ---")
    tabelle = [bound_sweep(c, "inv_gamma", [10, 30, 100, 300, 1000]) for c in ("online", "hybrid", "version_space")]
    for tabella in tabelle:
        pendenze = pendenze_sweep(tabella, n=1000, gamma=0.01, epsilon=0.05)
        riga = pendenze.iloc[0]
        print(f"  {riga['curve']:<14} grezza {riga['slope']:.3f}  corretta {riga['slope_polylog_corrected']:.3f}")


if __name__ == "__main__":
    main()
