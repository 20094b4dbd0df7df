"""Studio leave-one-out del rischio atteso del perceptron ibrido.

Per ogni prova si campionano K iperpiani una sola volta, condivisi da
tutti gli N fold: il fold i esegue il perceptron ibrido su S - {x_i} e
controlla se l'ipotesi restituita sbaglia x_i. L'errore leave-one-out
medio stima il rischio atteso con N - 1 punti di training.
"""

from __future__ import annotations

import logging

import numpy as np
import pandas as pd

from quantum_perceptron.models.dataset import LabeledDataset
from quantum_perceptron.models.experiment import ExperimentSpec, LooReport
from quantum_perceptron.models.grover import NoiseModel
from quantum_perceptron.tools.bounds import (
    classical_risk_bound,
    generalization_bound,
    num_hyperplanes,
)
from quantum_perceptron.tools.datasets import make_planted_margin_dataset, sample_hyperplanes
from quantum_perceptron.tools.experiments import scrivi_risultati
from quantum_perceptron.tools.margin import margin
from quantum_perceptron.tools.perceptron import classical_online
from quantum_perceptron.tools.quantum_perceptron import hybrid_quantum
from quantum_perceptron.utils.rng import seme_derivato
from quantum_perceptron.utils.validators import valida_aperto_unitario, valida_intero

logger = logging.getLogger(__name__)

COLONNE_LOO: tuple[str, ...] = (
    "trial_index", "seed", "loo_risk", "separator_drawn", "k", "k_over_n", "generalization_bound",
)


def classical_loo(ds: LabeledDataset) -> tuple[float, int]:
    """Errore leave-one-out del perceptron classico e aggiornamenti M(S) sul campione intero."""
    errori = 0
    for i in range(len(ds)):
        w = classical_online(ds.senza(i)).hyperplane.w
        errori += int(ds.labels[i] * float(ds.features[i] @ w) <= 0.0)
    return errori / len(ds), classical_online(ds).ledger.updates


def run_loo_study(
    ds: LabeledDataset,
    epsilon: float,
    trials: int,
    seed: int = 0,
    backend: str = "analytic",
    noise: NoiseModel | None = None,
) -> LooReport:
    """Errore leave-one-out del perceptron ibrido su ``trials`` prove.

    Parametri
    ---------
    ds : LabeledDataset
        Campione separabile S con N >= 2 punti.
    epsilon : float
        Probabilita' di fallimento dell'algoritmo ibrido.
    trials : int
        Numero di prove (un'estrazione di K iperpiani per prova).
    seed : int
        Seed master; il fold i della prova t usa il seed derivato (t, i).

    Solleva
    -------
    ValueError
        Se il campione non e' separabile o ha meno di due punti.
    """
    epsilon = valida_aperto_unitario(epsilon, "epsilon")
    trials = valida_intero(trials, "trials", minimo=1)
    n = valida_intero(len(ds), "N", minimo=2)
    report_margine = margin(ds)
    if not report_margine.separabile:
        raise ValueError(f"Il campione '{ds.name}' non e' linearmente separabile.")
    gamma = report_margine.gamma
    k = num_hyperplanes(gamma, epsilon)
    z = ds.matrice_segnata

    rischi: list[float] = []
    estratti: list[bool] = []
    for t in range(trials):
        iperpiani = sample_hyperplanes(k, ds.dim, seme_derivato(seed, t))
        # errori[i, j]: il punto i e' sbagliato dall'iperpiano j
        errori = z @ np.vstack([h.w for h in iperpiani]).T <= 0.0
        sbagliati = 0
        for i in range(n):
            esito = hybrid_quantum(
                ds.senza(i),
                iperpiani,
                epsilon,
                backend,
                noise,
                seme_derivato(seed, t, i + 1),
                errori=np.delete(errori, i, axis=0),
            )
            sbagliati += int(z[i] @ esito.hyperplane.w <= 0.0)
        rischi.append(sbagliati / n)
        estratti.append(bool((~errori).all(axis=0).any()))
        logger.debug("LOO prova %d: rischio %.4f, separatore estratto=%s", t, rischi[-1], estratti[-1])

    rischio_classico, aggiornamenti = classical_loo(ds)
    report = LooReport(
        dataset=ds.name,
        n=n,
        gamma=gamma,
        epsilon=epsilon,
        k=k,
        rischi=tuple(rischi),
        separatore_estratto=tuple(estratti),
        classical_loo=rischio_classico,
        classical_bound=classical_risk_bound(n - 1, gamma, aggiornamenti),
        generalization=generalization_bound(n - 1, gamma, epsilon),
    )
    logger.info(
        "LOO su '%s': rischio medio %.4f +/- %.4f, K/N=%.4f, bound=%.4f",
        ds.name, report.rischio_medio, report.errore_standard, report.k_su_n, report.generalization,
    )
    return report


def tabella_loo(report: LooReport, seed: int) -> pd.DataFrame:
    """Una riga per prova con rischio, presenza di un separatore e bound."""
    righe = [
        {
            "trial_index": t,
            "seed": seme_derivato(seed, t),
            "loo_risk": rischio,
            "separator_drawn": estratto,
            "k": report.k,
            "k_over_n": report.k_su_n,
            "generalization_bound": report.generalization,
        }
        for t, (rischio, estratto) in enumerate(zip(report.rischi, report.separatore_estratto))
    ]
    return pd.DataFrame(righe, columns=list(COLONNE_LOO))


def esegui_loo(spec: ExperimentSpec) -> pd.DataFrame:
    """Studio LOO su un dataset piantato costruito dalla specifica ``loo_study``."""
    seed = spec["seed"]
    ds = make_planted_margin_dataset(spec["n"], spec["d"], spec["gamma"], seme_derivato(seed, 0))
    report = run_loo_study(
        ds,
        spec["epsilon"],
        spec["trials"],
        seed=seme_derivato(seed, 1),
        backend=spec["backend"],
        noise=NoiseModel(spec["noise"], spec["p"]),
    )
    tabella = tabella_loo(report, seme_derivato(seed, 1))
    scrivi_risultati(spec, tabella, {
        "gamma_sample": report.gamma,
        "k": report.k,
        "mean_loo_risk": report.rischio_medio,
        "stderr_loo_risk": report.errore_standard,
        "k_over_n": report.k_su_n,
        "generalization_bound": report.generalization,
        "classical_loo_risk": report.classical_loo,
        "classical_risk_bound": report.classical_bound,
    })
    return tabella
