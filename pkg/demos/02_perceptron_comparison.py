#!/usr/bin/env python3
"""Demo 02: perceptron classico e quantistici a confronto.

Addestra i quattro algoritmi sullo stesso campione con margine noto e
confronta il numero di operazioni registrato nel CostLedger.
"""
from quantum_perceptron.tools.bounds import hybrid_bound, num_hyperplanes, online_q_bound, version_space_bound
from quantum_perceptron.tools.datasets import make_hard_dataset, make_planted_margin_dataset, sample_hyperplanes
from quantum_perceptron.tools.margin import margin
from quantum_perceptron.tools.perceptron import classical_online
from quantum_perceptron.tools.quantum_perceptron import hybrid_quantum, online_quantum, version_space_quantum
from quantum_perceptron.utils.formatting import formatta_numero


def main() -> None:
    print("=" * 60)
    print("DEMO 02: Perceptron - classico contro ricerca di Grover")
    print("=" * 60)

    n, d, gamma, epsilon = 400, 3, 0.1, 0.05
    ds = make_planted_margin_dataset(n, d, gamma, seed=11)
    misurato = margin(ds)

    print("\n--- Campione ---")
    print(f"  Punti:             {n}")
    print(f"  Dimensione:        {d}")
    print(f"  Margine imposto:   {gamma}")
    print(f"  Margine misurato:  {misurato.gamma:.4f} ({misurato.method})")

    k = num_hyperplanes(gamma, epsilon)
    iperpiani = sample_hyperplanes(k, d, seed=12)
    risultati = [
        (classical_online(ds), None),
        (online_quantum(ds, gamma, epsilon, seed=13), online_q_bound(n, gamma, epsilon)),
        (version_space_quantum(ds, iperpiani, epsilon, seed=14), version_space_bound(n, gamma, epsilon)),
        (hybrid_quantum(ds, iperpiani, epsilon, seed=15), hybrid_bound(n, gamma, epsilon)),
    ]

    print(f"\n--- Esecuzioni (K = {k} iperpiani campionati) ---")
    print(f"  {'algoritmo':<14} {'separa':>6} {'wall_steps':>12} {'bound':>12}")
    for r, bound in risultati:
        testo_bound = formatta_numero(bound, 0) if bound is not None else "-"
        print(f"  {r.algorithm:<14} {str(r.separates):>6} {formatta_numero(r.ledger.wall_steps, 0):>12} "
              f"{testo_bound:>12}")

    # --- Dataset Hard: il caso peggiore del perceptron classico ---
    hard = make_hard_dataset(200)
    classico = classical_online(hard, protocol="one_update_per_pass")
    print("\n--- Dataset Hard(200) ---")
    print(f"  Aggiornamenti classici: {classico.ledger.updates}")
    print(f"  Wall steps classici:    {formatta_numero(classico.ledger.wall_steps, 0)}")
    print(f"  N(N+1)/2:               {formatta_numero(200 * 201 / 2, 0)}")


if __name__ == "__main__":
    main()
