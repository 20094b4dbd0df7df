"""Calcolo esatto del margine di separazione lineare.

Il margine di un campione e' gamma = max_w min_i y_i <w, x_i> / ||w||.
Equivale al problema di SVM a margine rigido senza bias:

    min ||w||^2 / 2  con  y_i <w, x_i> >= 1,

il cui ottimo w* da' gamma = 1 / ||w*||. Il calcolo procede in tre
passi: ammissibilita' con programmazione lineare, duale vincolato
risolto con L-BFGS-B, rifinitura esatta sull'insieme attivo con minimi
quadrati. Il gamma restituito e' sempre ricalcolato dal testimone.

In due dimensioni e' disponibile anche una scansione angolare
esaustiva, usata come oracolo di verifica.
"""

from __future__ import annotations

import logging
import math

import numpy as np
from scipy.optimize import linprog, minimize, minimize_scalar

from quantum_perceptron.config.constants import RISOLUZIONE_SWEEP_2D
from quantum_perceptron.models.dataset import METODI_MARGINE, LabeledDataset, MarginReport
from quantum_perceptron.models.perceptron import Hyperplane
from quantum_perceptron.tools.datasets import DatasetError, is_hard_dataset
from quantum_perceptron.utils.validators import valida_scelta

logger = logging.getLogger(__name__)

_TOLLERANZA_ATTIVI = 1e-6
_ANGOLI_PER_BLOCCO = 1 << 15


def margine_di(w: np.ndarray, ds: LabeledDataset) -> float:
    """Margine realizzato da ``w``: min_i y_i <w, x_i> / ||w|| (0 per w nullo)."""
    norma = float(np.linalg.norm(w))
    if norma == 0.0 or len(ds) == 0:
        return 0.0
    return float(np.min(ds.matrice_segnata @ w)) / norma


def _nessun_margine(metodo: str) -> MarginReport:
    return MarginReport(gamma=0.0, witness=None, method=metodo)


def _report(w: np.ndarray, gamma: float, metodo: str) -> MarginReport:
    if gamma <= 0.0:
        return _nessun_margine(metodo)
    return MarginReport(gamma=gamma, witness=Hyperplane(w / np.linalg.norm(w)), method=metodo)


# ---------------------------------------------------------------------------
# Forma analitica
# ---------------------------------------------------------------------------

def margine_analitico(ds: LabeledDataset) -> MarginReport:
    """Margine esatto del dataset Hard: 1/sqrt(n) con w = -(1, ..., 1)/sqrt(n).

    Solleva
    -------
    ValueError
        Se il dataset non e' un dataset Hard.
    """
    if not is_hard_dataset(ds):
        raise ValueError(f"Il margine analitico e' disponibile solo per i dataset Hard (ricevuto '{ds.name}').")
    n = len(ds)
    w = -np.ones(n) / math.sqrt(n)
    return MarginReport(gamma=1.0 / math.sqrt(n), witness=Hyperplane(w), method="analytic")


# ---------------------------------------------------------------------------
# Ottimizzatore
# ---------------------------------------------------------------------------

def _ammissibile(z: np.ndarray) -> np.ndarray | None:
    """Un w con Z w >= 1, oppure None se il sistema e' inammissibile."""
    n, d = z.shape
    esito = linprog(
        c=np.zeros(d),
        A_ub=-z,
        b_ub=-np.ones(n),
        bounds=[(None, None)] * d,
        method="highs",
    )
    if esito.status != 0 or esito.x is None:
        logger.debug("linprog: nessun separatore (status=%d, %s)", esito.status, esito.message)
        return None
    return np.asarray(esito.x, dtype=float)


def _duale(z: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Risolve min 1/2 a^T Q a - sum(a) con a >= 0 e Q = Z Z^T; restituisce (w, a)."""
    q = z @ z.T
    n = q.shape[0]

    def obiettivo(alfa: np.ndarray) -> tuple[float, np.ndarray]:
        qa = q @ alfa
        return 0.5 * float(alfa @ qa) - float(alfa.sum()), qa - 1.0

    esito = minimize(
        obiettivo,
        x0=np.zeros(n),
        jac=True,
        method="L-BFGS-B",
        bounds=[(0.0, None)] * n,
        options={"maxiter": 50_000, "ftol": 1e-16, "gtol": 1e-12, "maxcor": 30},
    )
    alfa = np.clip(esito.x, 0.0, None)
    return z.T @ alfa, alfa


def _rifinitura(z: np.ndarray, w: np.ndarray, alfa: np.ndarray) -> np.ndarray | None:
    """Soluzione di norma minima di Z_A w = 1 sull'insieme attivo A."""
    picco = float(alfa.max(initial=0.0))
    attivi = (alfa > _TOLLERANZA_ATTIVI * picco) if picco > 0 else np.zeros(alfa.size, dtype=bool)
    attivi |= z @ w <= 1.0 + _TOLLERANZA_ATTIVI
    if not attivi.any():
        return None
    w_rifinito, *_ = np.linalg.lstsq(z[attivi], np.ones(int(attivi.sum())), rcond=None)
    return w_rifinito


def margine_ottimizzato(ds: LabeledDataset) -> MarginReport:
    """Margine a margine rigido per un dataset generico.

    Restituisce gamma = 0 senza testimone se nessun iperpiano per
    l'origine separa strettamente i punti.
    """
    if len(ds) == 0:
        raise DatasetError("Impossibile calcolare il margine di un dataset vuoto.")
    z = ds.matrice_segnata
    w_lp = _ammissibile(z)
    if w_lp is None:
        return _nessun_margine("optimizer")

    w_duale, alfa = _duale(z)
    candidati = [w_lp, w_duale]
    w_rifinito = _rifinitura(z, w_duale, alfa)
    if w_rifinito is not None:
        candidati.append(w_rifinito)

    margini = [margine_di(w, ds) for w in candidati]
    migliore = int(np.argmax(margini))
    logger.debug(
        "Margine %s: lp=%.12g duale=%.12g rifinito=%s",
        ds.name, margini[0], margini[1], f"{margini[2]:.12g}" if len(margini) > 2 else "-",
    )
    return _report(candidati[migliore], margini[migliore], "optimizer")


# ---------------------------------------------------------------------------
# Scansione angolare (solo 2-D)
# ---------------------------------------------------------------------------

def margin_sweep_2d(ds: LabeledDataset, risoluzione: float = RISOLUZIONE_SWEEP_2D) -> MarginReport:
    """Margine in 2-D per scansione esaustiva degli angoli.

    Valuta min_i y_i <u(phi), x_i> su una griglia di passo ``risoluzione``
    radianti, poi rifinisce il migliore angolo con una ricerca limitata
    all'intervallo di un passo da entrambi i lati.

    Solleva
    -------
    ValueError
        Se il dataset non e' bidimensionale.
    """
    if len(ds) == 0 or ds.dim != 2:
        raise ValueError(f"La scansione angolare richiede un dataset 2-D non vuoto (dim={ds.dim if len(ds) else 0}).")
    z = ds.matrice_segnata
    passi = int(math.ceil(2.0 * math.pi / risoluzione))

    migliore_valore = -math.inf
    migliore_angolo = 0.0
    for inizio in range(0, passi, _ANGOLI_PER_BLOCCO):
        angoli = np.arange(inizio, min(passi, inizio + _ANGOLI_PER_BLOCCO)) * risoluzione
        minimi = (z @ np.vstack((np.cos(angoli), np.sin(angoli)))).min(axis=0)
        k = int(np.argmax(minimi))
        if minimi[k] > migliore_valore:
            migliore_valore, migliore_angolo = float(minimi[k]), float(angoli[k])

    def opposto(phi: float) -> float:
        return -float(np.min(z @ np.array([math.cos(phi), math.sin(phi)])))

    raffinato = minimize_scalar(
        opposto,
        bounds=(migliore_angolo - risoluzione, migliore_angolo + risoluzione),
        method="bounded",
        options={"xatol": 1e-14},
    )
    if -raffinato.fun > migliore_valore:
        migliore_valore, migliore_angolo = float(-raffinato.fun), float(raffinato.x)

    w = np.array([math.cos(migliore_angolo), math.sin(migliore_angolo)])
    return _report(w, margine_di(w, ds), "exhaustive-2d")


# ---------------------------------------------------------------------------
# Entry point
# ---------------------------------------------------------------------------

def margin(ds: LabeledDataset, metodo: str = "auto") -> MarginReport:
    """Margine del dataset con il testimone che lo realizza.

    Parametri
    ---------
    ds : LabeledDataset
        Campione etichettato.
    metodo : str, opzionale
        ``auto`` (default) usa la forma analitica per i dataset Hard e
        l'ottimizzatore negli altri casi; ``analytic``, ``optimizer`` e
        ``exhaustive-2d`` forzano il metodo.

    Restituisce
    -----------
    MarginReport
        gamma = 0 e testimone assente per dati non separabili.
    """
    metodo = valida_scelta(metodo, ("auto", *(m.replace("-", "_") for m in METODI_MARGINE)), "metodo")
    if metodo == "auto":
        metodo = "analytic" if is_hard_dataset(ds) else "optimizer"

    if metodo == "analytic":
        report = margine_analitico(ds)
    elif metodo == "optimizer":
        report = margine_ottimizzato(ds)
    else:
        report = margin_sweep_2d(ds)

    logger.info("Margine di '%s' (%s): %.10g", ds.name, report.method, report.gamma)
    return report
