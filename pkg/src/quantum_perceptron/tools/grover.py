"""Amplificazione di ampiezza: formule chiuse, backend analitico e QSearch.

Nel piano generato dagli stati marcati e non marcati un'iterazione di
Grover e' una rotazione di 2·theta_a, con theta_a = asin(sqrt(a)) e
a = |M|/N. Dopo j iterazioni la probabilita' di misurare un elemento
marcato e' sin^2((2j+1)·theta_a). QSearch estrae il numero di
iterazioni uniformemente in {0, ..., M-1} con M = schedule_bound(N), e
trova un elemento marcato con probabilita' almeno 1/4 senza conoscere |M|.
"""

from __future__ import annotations

import logging
import math

import numpy as np
import pandas as pd

from quantum_perceptron.config.constants import BACKENDS
from quantum_perceptron.models.grover import GroverInstance, NoiseModel, QSearchOutcome
from quantum_perceptron.tools.statevector import (
    UnsupportedBackendError,
    campiona_traiettorie,
    statevector_grover_sample,
)
from quantum_perceptron.utils.math_helpers import ceil_tollerante
from quantum_perceptron.utils.validators import valida_intero, valida_probabilita, valida_scelta

logger = logging.getLogger(__name__)

COLONNE_CURVA: tuple[str, ...] = (
    "M", "p_estimate", "stderr", "backend", "noise_kind", "noise_p", "n_items", "marked_count", "seed",
)
"""Intestazione CSV di una curva P(M)."""


# ---------------------------------------------------------------------------
# Formule chiuse
# ---------------------------------------------------------------------------

def theta_from_fraction(a: float) -> float:
    """Angolo theta_a = asin(sqrt(a)) in [0, pi/2].

    Solleva
    -------
    ValueError
        Se ``a`` non e' nell'intervallo [0, 1].
    """
    a = valida_probabilita(a, "a")
    return math.asin(math.sqrt(a))


def success_probability(theta: float, j: int) -> float:
    """Probabilita' esatta sin^2((2j+1)·theta) di misurare un elemento marcato dopo j passi."""
    return math.sin((2 * j + 1) * theta) ** 2


def noisy_success_probability(theta: float, j: int, noise: NoiseModel, marked_fraction: float) -> float:
    """Probabilita' di successo dopo j passi con rumore depolarizzante.

    Con probabilita' (1-p)^j nessun errore e' avvenuto e vale la formula
    esatta; altrimenti lo stato, mediato sulle traiettorie, e' quello
    massimamente misto e la probabilita' e' la frazione marcata a.

    Solleva
    -------
    UnsupportedBackendError
        Per il rumore ``bit_flip``, che non e' esprimibile nel piano di rotazione.
    """
    if noise.kind == "bit_flip":
        raise UnsupportedBackendError(
            "Il rumore bit_flip non e' esprimibile nel modello a rotazione: usare il backend statevector."
        )
    esatta = success_probability(theta, j)
    if not noise.attivo:
        return esatta
    integro = (1.0 - noise.p) ** j
    return integro * esatta + (1.0 - integro) * marked_fraction


def schedule_bound(n_items: int) -> int:
    """Ampiezza M = ceil(1/sin(2·asin(sqrt(1/N)))) dell'estrazione uniforme di QSearch.

    Solleva
    -------
    ValueError
        Se N < 2 (la formula e' singolare per N = 1).
    """
    n = valida_intero(n_items, "n_items", minimo=2)
    return ceil_tollerante(1.0 / math.sin(2.0 * math.asin(math.sqrt(1.0 / n))))


def avg_success_probability(theta: float, m_range: int) -> float:
    """Probabilita' media di successo con j uniforme in {0, ..., M-1}.

    Forma chiusa 1/2 · (1 - sin(4·M·theta) / (2·M·sin(2·theta))).

    Solleva
    -------
    ValueError
        Se sin(2·theta) = 0 (theta = 0 oppure pi/2) o M < 1.
    """
    m = valida_intero(m_range, "m_range", minimo=1)
    seno = math.sin(2.0 * theta)
    if not 0.0 < theta < math.pi / 2 or seno <= 0.0:
        raise ValueError(f"theta deve essere in (0, pi/2), ricevuto: {theta}")
    return 0.5 * (1.0 - math.sin(4.0 * m * theta) / (2.0 * m * seno))


def avg_noisy_success_probability(theta: float, m_range: int, noise: NoiseModel, marked_fraction: float) -> float:
    """Media di ``noisy_success_probability`` per j in {0, ..., M-1}."""
    m = valida_intero(m_range, "m_range", minimo=1)
    return math.fsum(noisy_success_probability(theta, j, noise, marked_fraction) for j in range(m)) / m


# ---------------------------------------------------------------------------
# Backend analitico
# ---------------------------------------------------------------------------

def _indice_uniforme(maschera: np.ndarray, marcato: bool, rng: np.random.Generator) -> int:
    candidati = np.flatnonzero(maschera if marcato else ~maschera)
    return int(candidati[rng.integers(candidati.size)]) + 1


def analytic_grover_sample(
    inst: GroverInstance,
    j: int,
    noise: NoiseModel,
    rng: np.random.Generator,
) -> int:
    """Campiona l'indice misurato dopo j iterazioni nel modello a rotazione.

    Con probabilita' P(j) restituisce un indice marcato uniforme,
    altrimenti un indice non marcato uniforme.

    Solleva
    -------
    UnsupportedBackendError
        Se il rumore e' ``bit_flip``.
    """
    a = inst.marked_fraction
    p = noisy_success_probability(theta_from_fraction(a), j, noise, a)
    k = inst.marked_count
    if k == 0:
        return _indice_uniforme(inst.maschera, False, rng)
    if k == inst.n_items:
        return _indice_uniforme(inst.maschera, True, rng)
    return _indice_uniforme(inst.maschera, bool(rng.random() < p), rng)


# ---------------------------------------------------------------------------
# QSearch
# ---------------------------------------------------------------------------

def qsearch(
    inst: GroverInstance,
    backend: str,
    noise: NoiseModel,
    rng: np.random.Generator,
) -> QSearchOutcome:
    """Ricerca con numero di iterazioni casuale in {0, ..., M-1}.

    Con N = 1 restituisce l'indice 1 senza iterazioni. Il campo
    ``was_marked`` resta ``None``: la verifica classica spetta al chiamante.
    """
    backend = valida_scelta(backend, BACKENDS, "backend")
    if inst.n_items == 1:
        return QSearchOutcome(index=1, iterations_used=0)

    m = int(rng.integers(schedule_bound(inst.n_items)))
    if backend == "analytic":
        indice = analytic_grover_sample(inst, m, noise, rng)
    else:
        indice = statevector_grover_sample(inst, m, noise, rng)
    return QSearchOutcome(index=indice, iterations_used=m)


# ---------------------------------------------------------------------------
# Curva P(M)
# ---------------------------------------------------------------------------

def p_of_m_curve(
    inst: GroverInstance,
    noise: NoiseModel,
    m_max: int,
    trials_per_point: int,
    rng: np.random.Generator,
    backend: str = "analytic",
) -> list[tuple[int, float, float]]:
    """Probabilita' di successo di QSearch con estrazione in {0, ..., M-1}, per M = 1..m_max.

    Sul backend analitico senza rumore o con rumore depolarizzante la
    curva e' calcolata in forma chiusa (errore standard 0); negli altri
    casi e' stimata con ``trials_per_point`` traiettorie per punto.

    Restituisce
    -----------
    list[tuple[int, float, float]]
        Terne (M, stima, errore standard).
    """
    m_max = valida_intero(m_max, "m_max", minimo=1)
    prove = valida_intero(trials_per_point, "trials_per_point", minimo=1)
    backend = valida_scelta(backend, BACKENDS, "backend")

    a = inst.marked_fraction
    theta = theta_from_fraction(a)
    curva: list[tuple[int, float, float]] = []

    if backend == "analytic":
        if noise.kind == "bit_flip":
            raise UnsupportedBackendError(
                "Il rumore bit_flip richiede il backend statevector."
            )
        for m in range(1, m_max + 1):
            curva.append((m, avg_noisy_success_probability(theta, m, noise, a), 0.0))
        return curva

    for m in range(1, m_max + 1):
        iterazioni = rng.integers(m, size=prove)
        indici = campiona_traiettorie(inst, iterazioni, noise, rng)
        successi = inst.maschera[indici - 1]
        stima = float(successi.mean())
        errore = math.sqrt(stima * (1.0 - stima) / prove)
        curva.append((m, stima, errore))
        logger.debug("P(M=%d) = %.4f +/- %.4f (%s, p=%.3f)", m, stima, errore, noise.kind, noise.p)
    return curva


def curva_come_tabella(
    curva: list[tuple[int, float, float]],
    inst: GroverInstance,
    noise: NoiseModel,
    backend: str,
    seed: int | None,
) -> pd.DataFrame:
    """Tabella CSV di una curva P(M) con le colonne di COLONNE_CURVA."""
    righe = [
        {
            "M": m,
            "p_estimate": stima,
            "stderr": errore,
            "backend": backend,
            "noise_kind": noise.kind,
            "noise_p": noise.p,
            "n_items": inst.n_items,
            "marked_count": inst.marked_count,
            "seed": seed,
        }
        for m, stima, errore in curva
    ]
    return pd.DataFrame(righe, columns=list(COLONNE_CURVA))
