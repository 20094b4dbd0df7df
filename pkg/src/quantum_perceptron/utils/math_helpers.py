"""Funzioni numeriche di supporto per bound ed esperimenti.

Raccoglie i piccoli calcoli condivisi da piu' moduli: ceiling con
tolleranza relativa, logaritmo in base 3/4, griglie logaritmiche,
media con errore standard e pendenza di una retta in scala log-log.
"""

from __future__ import annotations

import math
from collections.abc import Sequence

import numpy as np

from quantum_perceptron.config.constants import TOLLERANZA_CEIL


# ---------------------------------------------------------------------------
# Ceiling e logaritmi
# ---------------------------------------------------------------------------

def ceil_tollerante(valore: float, tolleranza: float = TOLLERANZA_CEIL) -> int:
    """Ceiling che ignora gli errori di arrotondamento relativi.

    Un quoziente che dovrebbe essere intero (es. 1/0.1^2 = 100) ma che
    in virgola mobile vale 100.00000000000001 restituisce 100 e non 101.

    Parametri
    ---------
    valore : float
        Il valore da arrotondare per eccesso.
    tolleranza : float, opzionale
        Tolleranza relativa sottratta prima del ceiling.

    Restituisce
    -----------
    int
        Il ceiling del valore.
    """
    if not math.isfinite(valore):
        raise ValueError(f"Impossibile calcolare il ceiling di {valore}.")
    margine = tolleranza * max(1.0, abs(valore))
    return int(math.ceil(valore - margine))


def log_tre_quarti(x: float) -> float:
    """Logaritmo in base 3/4 di ``x`` in (0, 1], calcolato come ln(x)/ln(0.75).

    Solleva
    -------
    ValueError
        Se ``x`` non e' nell'intervallo (0, 1].
    """
    if not 0.0 < x <= 1.0:
        raise ValueError(
            f"Il logaritmo in base 3/4 e' definito qui solo per x in (0, 1]. Ricevuto: {x}."
        )
    return math.log(x) / math.log(0.75)


# ---------------------------------------------------------------------------
# Griglie e statistiche
# ---------------------------------------------------------------------------

def griglia_logaritmica(da: float, a: float, punti: int) -> list[float]:
    """Restituisce ``punti`` valori equispaziati in scala logaritmica tra ``da`` e ``a``."""
    if punti < 1:
        raise ValueError(f"Il numero di punti deve essere almeno 1. Ricevuto: {punti}.")
    if da <= 0 or a <= 0:
        raise ValueError("Gli estremi di una griglia logaritmica devono essere positivi.")
    if punti == 1:
        return [float(da)]
    return [float(v) for v in np.logspace(math.log10(da), math.log10(a), punti)]


def media_errore_standard(valori: Sequence[float]) -> tuple[float, float]:
    """Media campionaria ed errore standard (deviazione ddof=1 / sqrt(n)).

    Con un solo valore l'errore standard e' 0.
    """
    arr = np.asarray(valori, dtype=float)
    if arr.size == 0:
        raise ValueError("Impossibile calcolare la media di una sequenza vuota.")
    if arr.size == 1:
        return float(arr[0]), 0.0
    return float(arr.mean()), float(arr.std(ddof=1) / math.sqrt(arr.size))


def errore_standard_proporzione(p: float, prove: int) -> float:
    """Errore standard binomiale sqrt(p(1-p)/n) di una frequenza empirica."""
    if prove < 1:
        raise ValueError(f"Il numero di prove deve essere almeno 1. Ricevuto: {prove}.")
    return math.sqrt(max(p * (1.0 - p), 0.0) / prove)


def pendenza_log_log(x: Sequence[float], y: Sequence[float]) -> float:
    """Pendenza della retta ai minimi quadrati di log10(y) contro log10(x).

    Solleva
    -------
    ValueError
        Se ci sono meno di due punti o valori non positivi.
    """
    ax = np.asarray(x, dtype=float)
    ay = np.asarray(y, dtype=float)
    if ax.size != ay.size:
        raise ValueError("Le sequenze x e y devono avere la stessa lunghezza.")
    if ax.size < 2:
        raise ValueError("Servono almeno due punti per stimare una pendenza.")
    if np.any(ax <= 0) or np.any(ay <= 0):
        raise ValueError("La scala log-log richiede valori strettamente positivi.")
    pendenza, _ = np.polyfit(np.log10(ax), np.log10(ay), 1)
    return float(pendenza)
