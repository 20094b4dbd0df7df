"""Calcolatori in forma chiusa dei bound di complessita' e di rischio.

Ogni bound di complessita' e' il caso peggiore con le costanti esplicite,
ottenuto moltiplicando i limiti dei cicli dell'algoritmo corrispondente:
numero di tentativi QSearch per il numero massimo di operazioni di un
tentativo (M iterazioni di Grover al massimo, verifica inclusa).
Le stesse funzioni servono da oracolo nei test sui registri dei costi.
"""

from __future__ import annotations

import math
from collections.abc import Sequence

import numpy as np
import pandas as pd
from scipy.special import erf

from quantum_perceptron.models.bounds import BoundInputs
from quantum_perceptron.tools.grover import schedule_bound
from quantum_perceptron.utils.math_helpers import ceil_tollerante, log_tre_quarti, pendenza_log_log
from quantum_perceptron.utils.validators import (
    valida_aperto_unitario,
    valida_intero,
    valida_margine,
    valida_non_negativo,
    valida_scelta,
)

CURVE: tuple[str, ...] = ("online", "version_space", "hybrid")
"""Curve di complessita' dei tre algoritmi quantistici."""

VARIABILI_SWEEP: tuple[str, ...] = ("n", "inv_gamma")

COLONNE_SWEEP: tuple[str, ...] = ("curve", "x_var", "x", "value")

_COSTANTE_GAUSSIANA = math.sqrt(2.0 / math.pi)


def _passi_qsearch(n_items: int) -> int:
    """Operazioni massime di un tentativo QSearch su N elementi (verifica inclusa)."""
    return schedule_bound(n_items) if n_items >= 2 else 1


# ---------------------------------------------------------------------------
# Costanti
# ---------------------------------------------------------------------------

def novikoff_bound(gamma: float) -> int:
    """Numero massimo di aggiornamenti del perceptron: ceil(1/gamma^2).

    Solleva
    -------
    ValueError
        Se gamma non e' in (0, 1].
    """
    gamma = valida_margine(gamma, "gamma")
    return ceil_tollerante(1.0 / (gamma * gamma))


def num_hyperplanes(gamma: float, epsilon: float) -> int:
    """Numero K di iperpiani gaussiani da campionare.

    K = ceil(ln(epsilon/2) / ln(1 - sqrt(2/pi)·gamma)): con K iperpiani la
    probabilita' che nessuno separi il campione e' al massimo epsilon/2.

    Solleva
    -------
    ValueError
        Se gamma o epsilon non sono in (0, 1) o se sqrt(2/pi)·gamma >= 1.
    """
    ingressi = BoundInputs(1, gamma, epsilon)
    denominatore = math.log1p(-_COSTANTE_GAUSSIANA * ingressi.gamma)
    return max(1, ceil_tollerante(math.log(ingressi.epsilon / 2.0) / denominatore))


def amplification_rounds(k: int, epsilon: float) -> int:
    """Ripetizioni K2 di QSearch per ogni iperpiano dell'algoritmo ibrido.

    K2 = ceil(log_{3/4}(1 - (1 - epsilon/2)^(1/(K-1)))); con K = 1 vale
    ceil(log_{3/4}(epsilon/2)), che mantiene lo stesso budget di fallimento.
    """
    k = valida_intero(k, "k", minimo=1)
    epsilon = valida_aperto_unitario(epsilon, "epsilon")
    if k == 1:
        return ceil_tollerante(log_tre_quarti(epsilon / 2.0))
    # 1 - (1 - e/2)^(1/(K-1)) calcolato senza cancellazione
    soglia = -math.expm1(math.log1p(-epsilon / 2.0) / (k - 1))
    return ceil_tollerante(log_tre_quarti(soglia))


def online_attempts(gamma: float, epsilon: float) -> int:
    """Tentativi QSearch per round dell'algoritmo online: ceil(log_{3/4}(gamma^2·epsilon))."""
    gamma = valida_margine(gamma, "gamma")
    epsilon = valida_aperto_unitario(epsilon, "epsilon")
    return max(1, ceil_tollerante(log_tre_quarti(gamma * gamma * epsilon)))


def version_space_attempts(epsilon: float) -> int:
    """Tentativi QSearch dell'algoritmo sullo spazio delle versioni: ceil(log_{3/4}(epsilon))."""
    epsilon = valida_aperto_unitario(epsilon, "epsilon")
    return max(1, ceil_tollerante(log_tre_quarti(epsilon)))


# ---------------------------------------------------------------------------
# Bound di complessita'
# ---------------------------------------------------------------------------

def online_q_bound(n: int, gamma: float, epsilon: float) -> int:
    """Caso peggiore del perceptron quantistico online.

    ceil(1/gamma^2) round x ceil(log_{3/4}(gamma^2·epsilon)) tentativi
    x schedule_bound(N) operazioni per tentativo.
    """
    b = BoundInputs(n, gamma, epsilon)
    return novikoff_bound(b.gamma) * online_attempts(b.gamma, b.epsilon) * _passi_qsearch(b.n)


def version_space_bound(n: int, gamma: float, epsilon: float) -> int:
    """Caso peggiore dell'algoritmo sullo spazio delle versioni.

    ceil(log_{3/4}(epsilon)) x schedule_bound(K) x N, con K = num_hyperplanes.
    """
    b = BoundInputs(n, gamma, epsilon)
    k = num_hyperplanes(b.gamma, b.epsilon)
    return version_space_attempts(b.epsilon) * _passi_qsearch(k) * b.n


def hybrid_bound(n: int, gamma: float, epsilon: float) -> int:
    """Caso peggiore del perceptron ibrido: K x K2 x schedule_bound(N)."""
    b = BoundInputs(n, gamma, epsilon)
    k = num_hyperplanes(b.gamma, b.epsilon)
    return k * amplification_rounds(k, b.epsilon) * _passi_qsearch(b.n)


_BOUND = {
    "online": online_q_bound,
    "version_space": version_space_bound,
    "hybrid": hybrid_bound,
}


def fattore_logaritmico(curve: str, gamma: float, epsilon: float) -> int:
    """Fattore polilogaritmico della curva, da dividere per stimarne la pendenza pura.

    online: tentativi per round; hybrid: K2; version_space: tentativi.
    """
    curve = valida_scelta(curve, CURVE, "curve")
    if curve == "online":
        return online_attempts(gamma, epsilon)
    if curve == "hybrid":
        return amplification_rounds(num_hyperplanes(gamma, epsilon), epsilon)
    return version_space_attempts(epsilon)


# ---------------------------------------------------------------------------
# Probabilita' e rischio
# ---------------------------------------------------------------------------

def gaussian_separation_probability(gamma: float) -> tuple[float, float]:
    """Bound superiore sulla probabilita' che un iperpiano gaussiano separi un campione di margine gamma.

    Restituisce
    -----------
    tuple[float, float]
        (erf(gamma/sqrt(2)), sqrt(2/pi)·gamma): il bound esatto e la sua
        approssimazione al primo ordine.
    """
    gamma = valida_aperto_unitario(gamma, "gamma")
    return float(erf(gamma / math.sqrt(2.0))), _COSTANTE_GAUSSIANA * gamma


def generalization_bound(n: int, gamma: float, epsilon: float) -> float:
    """Rischio atteso del perceptron ibrido: ln(1/epsilon) / ((N+1)·gamma)."""
    b = BoundInputs(n, gamma, epsilon)
    return math.log(1.0 / b.epsilon) / ((b.n + 1) * b.gamma)


def classical_risk_bound(n: int, gamma: float, updates: int) -> float:
    """Rischio atteso del perceptron classico: min(M(S), 1/gamma^2) / (N+1).

    ``updates`` e' il numero M(S) di aggiornamenti misurato in addestramento.
    """
    n = valida_intero(n, "n", minimo=1)
    gamma = valida_margine(gamma, "gamma")
    aggiornamenti = valida_non_negativo(updates, "updates")
    return min(aggiornamenti, 1.0 / (gamma * gamma)) / (n + 1)


# ---------------------------------------------------------------------------
# Sweep e pendenze
# ---------------------------------------------------------------------------

def bound_sweep(
    curve: str,
    x_var: str,
    valori: Sequence[float],
    n: int = 1000,
    gamma: float = 0.01,
    epsilon: float = 0.05,
) -> pd.DataFrame:
    """Valuta un bound di complessita' lungo una variabile.

    Parametri
    ---------
    curve : str
        ``online``, ``version_space`` o ``hybrid``.
    x_var : str
        ``n`` (N variabile, gamma fisso) oppure ``inv_gamma`` (1/gamma
        variabile, N fisso).
    valori : Sequence[float]
        Valori della variabile; per ``n`` vengono arrotondati all'intero.
    n, gamma, epsilon
        Parametri fissi.

    Restituisce
    -----------
    pd.DataFrame
        Tabella con colonne ``curve,x_var,x,value``.
    """
    curve = valida_scelta(curve, CURVE, "curve")
    x_var = valida_scelta(x_var, VARIABILI_SWEEP, "x_var")
    if len(valori) == 0:
        raise ValueError("Intervallo di sweep vuoto.")
    calcolo = _BOUND[curve]

    righe = []
    for x in valori:
        if x_var == "n":
            x = int(round(x))
            valore = calcolo(x, gamma, epsilon)
        else:
            valore = calcolo(n, 1.0 / x, epsilon)
        righe.append({"curve": curve, "x_var": x_var, "x": x, "value": valore})
    return pd.DataFrame(righe, columns=list(COLONNE_SWEEP))


def fit_log_log_slope(
    x: Sequence[float],
    y: Sequence[float],
    fattori: Sequence[float] | None = None,
) -> float:
    """Pendenza in scala log-log; con ``fattori`` divide prima y per essi.

    Solleva
    -------
    ValueError
        Con meno di due punti o valori non positivi.
    """
    ay = np.asarray(y, dtype=float)
    if fattori is not None:
        ay = ay / np.asarray(fattori, dtype=float)
    return pendenza_log_log(x, ay)


def pendenze_sweep(
    tabella: pd.DataFrame,
    n: int,
    gamma: float,
    epsilon: float,
) -> pd.DataFrame:
    """Pendenze grezze e corrette di ogni curva di una tabella di sweep.

    La pendenza corretta divide ogni valore per il fattore
    polilogaritmico della curva nel punto corrispondente. Curve con un
    solo punto non producono pendenza.
    """
    righe = []
    for (curve, x_var), gruppo in tabella.groupby(["curve", "x_var"], sort=False):
        if len(gruppo) < 2:
            continue
        xs = gruppo["x"].to_numpy(dtype=float)
        if x_var == "n":
            fattori = [fattore_logaritmico(curve, gamma, epsilon)] * len(xs)
        else:
            fattori = [fattore_logaritmico(curve, 1.0 / x, epsilon) for x in xs]
        righe.append({
            "curve": curve,
            "x_var": x_var,
            "slope": fit_log_log_slope(xs, gruppo["value"]),
            "slope_polylog_corrected": fit_log_log_slope(xs, gruppo["value"], fattori),
        })
    return pd.DataFrame(righe, columns=["curve", "x_var", "slope", "slope_polylog_corrected"])
