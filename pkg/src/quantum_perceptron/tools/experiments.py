"""Runner degli esperimenti numerici con seed riproducibili.

Ogni runner riceve una ExperimentSpec, scrive ``<output_dir>/<nome>.csv``
e ``<nome>.meta`` (seed master, parametri, versione) e restituisce la
tabella scritta. I flussi casuali di prove e algoritmi sono derivati
dal seed master con ``seme_derivato``: il risultato non dipende
dall'ordine di esecuzione.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Callable, Sequence
from pathlib import Path
from typing import Any

import numpy as np
import pandas as pd

from quantum_perceptron import __version__
from quantum_perceptron.models.dataset import LabeledDataset
from quantum_perceptron.models.experiment import ExperimentSpec, TrialRecord
from quantum_perceptron.models.grover import GroverInstance, NoiseModel
from quantum_perceptron.models.perceptron import COLONNE_RUN_RESULT, RunResult
from quantum_perceptron.tools.bounds import (
    CURVE,
    bound_sweep,
    gaussian_separation_probability,
    num_hyperplanes,
    pendenze_sweep,
)
from quantum_perceptron.tools.datasets import (
    load_two_class_csv,
    make_hard_dataset,
    make_wedge_dataset,
    normalize,
    sample_hyperplanes,
    split_dataset,
    wedge_separation_probability,
)
from quantum_perceptron.tools.grover import p_of_m_curve
from quantum_perceptron.tools.margin import margin
from quantum_perceptron.tools.perceptron import CapExceededError, classical_online
from quantum_perceptron.tools.quantum_perceptron import (
    hybrid_quantum,
    online_quantum,
    version_space_quantum,
)
from quantum_perceptron.utils.math_helpers import (
    ceil_tollerante,
    errore_standard_proporzione,
    griglia_logaritmica,
)
from quantum_perceptron.utils.output_files import scrivi_csv, scrivi_meta
from quantum_perceptron.utils.rng import Seme, crea_generatore, generatore_derivato, seme_derivato
from quantum_perceptron.utils.validators import valida_intero, valida_probabilita

logger = logging.getLogger(__name__)

COLONNE_FIG1: tuple[str, ...] = ("curve", "x_var", "x", "value")
COLONNE_FIG2: tuple[str, ...] = ("dataset", "algorithm", "mean_ratio", "std_ratio", "trials")
COLONNE_FIG3: tuple[str, ...] = ("noise_kind", "M", "p_estimate", "stderr")
COLONNE_LEMMA1: tuple[str, ...] = (
    "gamma", "alpha", "trials", "empirical", "stderr", "exact", "bound_erf", "first_order",
)
COLONNE_HARD_STEPS: tuple[str, ...] = ("n", "train_fraction", "train_size", "wall_steps")

ALGORITMI_QUANTISTICI: tuple[str, ...] = ("online", "version_space", "hybrid")


# ---------------------------------------------------------------------------
# Scrittura dei risultati
# ---------------------------------------------------------------------------

def scrivi_risultati(
    spec: ExperimentSpec,
    tabella: pd.DataFrame,
    extra: dict[str, Any] | None = None,
) -> tuple[Path, Path]:
    """Scrive CSV e .meta dell'esperimento; restituisce i due percorsi."""
    cartella = Path(spec.output_dir)
    percorso_csv = scrivi_csv(tabella, cartella / f"{spec.name}.csv")
    meta = {
        "experiment": spec.name,
        "code_version": __version__,
        "master_seed": spec.params.get("seed", ""),
        **{f"param.{k}": v for k, v in spec.params.items()},
        **(extra or {}),
    }
    percorso_meta = scrivi_meta(cartella / f"{spec.name}.meta", meta)
    return percorso_csv, percorso_meta


def _rumore(spec: ExperimentSpec) -> NoiseModel:
    return NoiseModel(spec["noise"], spec["p"])


def tabella_run_result(records: Sequence[TrialRecord]) -> pd.DataFrame:
    """Tabella delle prove con payload RunResult, ordinata per indice di prova."""
    righe = [
        {"trial_index": r.trial_index, **r.payload.riga_csv()}
        for r in sorted(records, key=lambda r: r.trial_index)
        if isinstance(r.payload, RunResult)
    ]
    return pd.DataFrame(righe, columns=["trial_index", *COLONNE_RUN_RESULT])


# ---------------------------------------------------------------------------
# fig1: curve dei bound
# ---------------------------------------------------------------------------

def run_fig1(spec: ExperimentSpec) -> pd.DataFrame:
    """Valuta i tre bound quantistici lungo N (``fig1_n``) o 1/gamma (``fig1_gamma``).

    Scrive anche ``<nome>_slopes.csv`` con le pendenze log-log di ogni
    curva (grezza e corretta per il fattore polilogaritmico) quando lo
    sweep ha almeno due punti.
    """
    if spec.name not in ("fig1_n", "fig1_gamma"):
        raise ValueError(f"run_fig1 non gestisce l'esperimento '{spec.name}'.")
    valori = griglia_logaritmica(spec["from"], spec["to"], spec["points"])
    epsilon = spec["epsilon"]
    if spec.name == "fig1_n":
        x_var, n, gamma = "n", 1000, spec["gamma"]
    else:
        x_var, n, gamma = "inv_gamma", spec["n"], 0.01

    tabella = pd.concat(
        [bound_sweep(curve, x_var, valori, n=n, gamma=gamma, epsilon=epsilon) for curve in CURVE],
        ignore_index=True,
    )
    pendenze = pendenze_sweep(tabella, n=n, gamma=gamma, epsilon=epsilon)
    extra: dict[str, Any] = {}
    if not pendenze.empty:
        scrivi_csv(pendenze, Path(spec.output_dir) / f"{spec.name}_slopes.csv")
        for riga in pendenze.itertuples(index=False):
            extra[f"slope.{riga.curve}"] = riga.slope
            extra[f"slope_polylog_corrected.{riga.curve}"] = riga.slope_polylog_corrected
    scrivi_risultati(spec, tabella, extra)
    logger.info("%s: %d righe, %d pendenze", spec.name, len(tabella), len(pendenze))
    return tabella


# ---------------------------------------------------------------------------
# fig2: rapporto di operazioni quantistico / classico
# ---------------------------------------------------------------------------

def _prova_fig2(
    train: LabeledDataset,
    protocollo: str,
    epsilon: float,
    backend: str,
    noise: NoiseModel,
    master: int,
    chiave: tuple[int, int],
) -> tuple[RunResult, dict[str, RunResult]]:
    """Una prova: baseline classica e i tre algoritmi quantistici sullo stesso split."""
    classico = classical_online(train, protocollo)
    gamma = margin(train).gamma
    if gamma <= 0.0:
        raise ValueError(f"Lo split di '{train.name}' non e' separabile: rapporto non definito.")
    k = num_hyperplanes(gamma, epsilon)
    iperpiani = sample_hyperplanes(k, train.dim, seme_derivato(master, *chiave, 0))
    quantistici = {
        "online": online_quantum(train, gamma, epsilon, backend, noise, seme_derivato(master, *chiave, 1)),
        "version_space": version_space_quantum(
            train, iperpiani, epsilon, backend, noise, seme_derivato(master, *chiave, 2)
        ),
        "hybrid": hybrid_quantum(train, iperpiani, epsilon, backend, noise, seme_derivato(master, *chiave, 3)),
    }
    return classico, quantistici


def run_fig2(spec: ExperimentSpec) -> pd.DataFrame:
    """Rapporto medio wall_steps(quantistico) / wall_steps(classico) su Iris e Hard.

    Per ogni prova lo split (mescolamento con seed derivato e prefisso)
    e' condiviso tra numeratore e denominatore. La baseline classica usa
    il protocollo ``iris_protocol`` o ``hard_protocol``. Il dettaglio di
    ogni esecuzione e' scritto in ``fig2_ratio_trials.csv``.

    Solleva
    -------
    CapExceededError
        Se il perceptron classico supera il limite di esami.
    """
    master = spec["seed"]
    epsilon = spec["epsilon"]
    backend = spec["backend"]
    noise = _rumore(spec)
    prove = spec["trials"]

    iris = normalize(load_two_class_csv(spec["iris_path"], spec["class_a"], spec["class_b"]))
    sorgenti = [
        ("iris", iris, spec["iris_fraction"], spec["iris_protocol"]),
        ("hard", make_hard_dataset(spec["hard_n"]), spec["hard_fraction"], spec["hard_protocol"]),
    ]

    righe = []
    records: list[TrialRecord] = []
    for indice_ds, (etichetta, ds, frazione, protocollo) in enumerate(sorgenti):
        rapporti: dict[str, list[float]] = {a: [] for a in ALGORITMI_QUANTISTICI}
        for t in range(prove):
            seme_split = seme_derivato(master, indice_ds, t)
            train, _ = split_dataset(ds, frazione, seme_split)
            try:
                classico, quantistici = _prova_fig2(
                    train, protocollo, epsilon, backend, noise, master, (indice_ds, t)
                )
            except CapExceededError as exc:
                logger.error("fig2 interrotto su %s, prova %d: %s", etichetta, t, exc)
                raise CapExceededError(f"fig2_ratio, dataset {etichetta}, prova {t}: {exc}") from exc

            base = len(records)
            records.append(TrialRecord(spec.name, base, seme_split, classico))
            for offset, algoritmo in enumerate(ALGORITMI_QUANTISTICI, start=1):
                risultato = quantistici[algoritmo]
                rapporti[algoritmo].append(risultato.ledger.wall_steps / classico.ledger.wall_steps)
                records.append(TrialRecord(spec.name, base + offset, risultato.seed, risultato))

        for algoritmo in ALGORITMI_QUANTISTICI:
            valori = np.asarray(rapporti[algoritmo])
            righe.append({
                "dataset": etichetta,
                "algorithm": algoritmo,
                "mean_ratio": float(valori.mean()),
                "std_ratio": float(valori.std(ddof=1)) if valori.size > 1 else 0.0,
                "trials": int(valori.size),
            })
        logger.info("fig2 %s: %s", etichetta, {a: round(float(np.mean(r)), 4) for a, r in rapporti.items()})

    tabella = pd.DataFrame(righe, columns=list(COLONNE_FIG2))
    scrivi_csv(tabella_run_result(records), Path(spec.output_dir) / f"{spec.name}_trials.csv")
    scrivi_risultati(spec, tabella)
    return tabella


# ---------------------------------------------------------------------------
# fig3: curve P(M) con rumore
# ---------------------------------------------------------------------------

def run_fig3(spec: ExperimentSpec) -> pd.DataFrame:
    """Curve P(M) per un solo elemento cercato, una per modello di rumore."""
    istanza = GroverInstance(spec["n_items"], marked=[1])
    parti = []
    for k, tipo in enumerate(spec["noise_kinds"]):
        rumore = NoiseModel(tipo, spec["p"])
        curva = p_of_m_curve(
            istanza,
            rumore,
            spec["m_max"],
            spec["trials"],
            generatore_derivato(spec["seed"], k),
            backend=spec["backend"],
        )
        parti.append(pd.DataFrame(
            [{"noise_kind": rumore.kind, "M": m, "p_estimate": p, "stderr": e} for m, p, e in curva],
            columns=list(COLONNE_FIG3),
        ))
    tabella = pd.concat(parti, ignore_index=True)
    scrivi_risultati(spec, tabella, {"marked_count": 1})
    return tabella


# ---------------------------------------------------------------------------
# Passi del perceptron classico sul dataset Hard
# ---------------------------------------------------------------------------

def run_hard_steps(n: int, train_fraction: float) -> int:
    """wall_steps del perceptron classico (one_update_per_pass) sui primi punti di Hard(n).

    Il training e' formato dai primi ceil(train_fraction·n) punti in
    ordine di indice.
    """
    ds = make_hard_dataset(n)
    frazione = valida_probabilita(train_fraction, "train_fraction")
    dimensione = max(1, ceil_tollerante(frazione * len(ds)))
    train = ds.sottoinsieme(np.arange(dimensione), name=f"hard{n}_first{dimensione}")
    return classical_online(train, "one_update_per_pass").ledger.wall_steps


def esegui_hard_steps(spec: ExperimentSpec) -> pd.DataFrame:
    """Versione di ``run_hard_steps`` che scrive CSV e .meta."""
    n, frazione = spec["n"], spec["train_fraction"]
    passi = run_hard_steps(n, frazione)
    tabella = pd.DataFrame(
        [{"n": n, "train_fraction": frazione, "train_size": max(1, ceil_tollerante(frazione * n)),
          "wall_steps": passi}],
        columns=list(COLONNE_HARD_STEPS),
    )
    scrivi_risultati(spec, tabella, {"protocol": "one_update_per_pass"})
    return tabella


# ---------------------------------------------------------------------------
# Monte Carlo della separazione gaussiana
# ---------------------------------------------------------------------------

_BLOCCO_LEMMA1 = 1 << 18


def run_lemma1_mc(
    gamma_values: Sequence[float],
    trials: int,
    rng: Seme | np.random.Generator = None,
) -> pd.DataFrame:
    """Frequenza con cui un iperpiano gaussiano separa il cuneo di margine gamma.

    Per ogni gamma costruisce il cuneo con alpha = asin(gamma) e riporta
    la frequenza empirica, il valore esatto alpha/pi e il bound
    erf(gamma/sqrt(2)) con la sua approssimazione al primo ordine.
    """
    trials = valida_intero(trials, "trials", minimo=1)
    generatore = crea_generatore(rng)
    righe = []
    for gamma in gamma_values:
        if not 0.0 < gamma < 1.0:
            raise ValueError(f"Il margine deve essere in (0, 1), ricevuto: {gamma}")
        alfa = math.asin(gamma)
        z = make_wedge_dataset(alfa).matrice_segnata
        separati = 0
        for inizio in range(0, trials, _BLOCCO_LEMMA1):
            w = generatore.standard_normal((min(_BLOCCO_LEMMA1, trials - inizio), 2))
            separati += int(np.all(w @ z.T > 0.0, axis=1).sum())
        empirica = separati / trials
        bound, primo_ordine = gaussian_separation_probability(gamma)
        righe.append({
            "gamma": gamma,
            "alpha": alfa,
            "trials": trials,
            "empirical": empirica,
            "stderr": errore_standard_proporzione(empirica, trials),
            "exact": wedge_separation_probability(alfa),
            "bound_erf": bound,
            "first_order": primo_ordine,
        })
    return pd.DataFrame(righe, columns=list(COLONNE_LEMMA1))


def esegui_lemma1(spec: ExperimentSpec) -> pd.DataFrame:
    """Versione di ``run_lemma1_mc`` che scrive CSV e .meta."""
    tabella = run_lemma1_mc(spec["gammas"], spec["trials"], generatore_derivato(spec["seed"], 0))
    scrivi_risultati(spec, tabella)
    return tabella


# ---------------------------------------------------------------------------
# Dispatcher
# ---------------------------------------------------------------------------

def _runner(nome: str) -> Callable[[ExperimentSpec], pd.DataFrame]:
    # import locale: loo dipende da questo modulo
    from quantum_perceptron.tools.loo import esegui_loo

    return {
        "fig1_n": run_fig1,
        "fig1_gamma": run_fig1,
        "fig2_ratio": run_fig2,
        "fig3_noise": run_fig3,
        "lemma1_mc": esegui_lemma1,
        "loo_study": esegui_loo,
        "hard_steps": esegui_hard_steps,
    }[nome]


def run_experiment(spec: ExperimentSpec) -> pd.DataFrame:
    """Esegue l'esperimento indicato dalla specifica e ne scrive i risultati."""
    logger.info("Esperimento %s: parametri %s", spec.name, dict(spec.params))
    return _runner(spec.name)(spec)
