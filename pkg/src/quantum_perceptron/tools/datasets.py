"""Costruzione, caricamento, normalizzazione e suddivisione dei dataset.

Contiene il dataset Hard (che forza il perceptron classico al numero
massimo di aggiornamenti), il caricamento di tabelle CSV a due classi
come Iris, il generatore con margine piantato, il dataset a cuneo in
2-D e il campionamento di iperpiani gaussiani.
"""

from __future__ import annotations

import logging
import math
from pathlib import Path

import numpy as np
import pandas as pd

from quantum_perceptron.models.dataset import LabeledDataset
from quantum_perceptron.models.perceptron import Hyperplane
from quantum_perceptron.utils.output_files import scrivi_csv
from quantum_perceptron.utils.rng import Seme, crea_generatore, seme_derivato
from quantum_perceptron.utils.validators import (
    valida_aperto_unitario,
    valida_intero,
    valida_probabilita,
)

logger = logging.getLogger(__name__)

_MAX_TENTATIVI_SPLIT = 1000


class DatasetError(ValueError):
    """Errore di caricamento o costruzione di un dataset."""


# ---------------------------------------------------------------------------
# Dataset strutturati
# ---------------------------------------------------------------------------

def make_hard_dataset(n: int) -> LabeledDataset:
    """Dataset Hard di dimensione n.

    Il punto i (1-based) e' x_i = (-1)^(i+1)·e_i con etichetta
    y_i = (-1)^i: i punti sono ortogonali, quindi ogni aggiornamento del
    perceptron corregge un solo punto. Il margine e' 1/sqrt(n), realizzato
    da w = -(1, ..., 1).

    Solleva
    -------
    ValueError
        Se n < 1.
    """
    n = valida_intero(n, "n", minimo=1)
    indici = np.arange(1, n + 1)
    segni = np.where(indici % 2 == 1, 1.0, -1.0)
    etichette = np.where(indici % 2 == 0, 1, -1)
    return LabeledDataset(np.diag(segni), etichette, f"hard{n}")


def is_hard_dataset(ds: LabeledDataset) -> bool:
    """True se ``ds`` coincide esattamente con ``make_hard_dataset(len(ds))``."""
    n = len(ds)
    if n == 0 or ds.dim != n:
        return False
    return ds.identico(make_hard_dataset(n))


def make_wedge_dataset(alpha: float) -> LabeledDataset:
    """Cuneo in 2-D: (cos a, sin a) con etichetta +1 e (cos a, -sin a) con etichetta -1.

    Il margine e' sin(alpha) e la frazione di iperpiani gaussiani che lo
    separano e' esattamente alpha/pi.
    """
    if not 0.0 < alpha < math.pi / 2:
        raise ValueError(f"L'angolo del cuneo deve essere in (0, pi/2), ricevuto: {alpha}")
    c, s = math.cos(alpha), math.sin(alpha)
    return LabeledDataset(np.array([[c, s], [c, -s]]), np.array([1, -1]), f"wedge{alpha:g}")


def wedge_separation_probability(alpha: float) -> float:
    """Probabilita' esatta alpha/pi che un iperpiano gaussiano separi il cuneo."""
    if not 0.0 < alpha < math.pi / 2:
        raise ValueError(f"L'angolo del cuneo deve essere in (0, pi/2), ricevuto: {alpha}")
    return alpha / math.pi


# ---------------------------------------------------------------------------
# Caricamento CSV
# ---------------------------------------------------------------------------

def load_two_class_csv(path: Path | str, class_a: str, class_b: str) -> LabeledDataset:
    """Carica una tabella CSV a due classi (feature numeriche poi colonna di classe).

    Le righe di ``class_a`` ricevono etichetta +1, quelle di ``class_b``
    etichetta -1, le altre vengono scartate. Il nome del dataset e' il
    nome del file senza estensione.

    Parametri
    ---------
    path : Path | str
        File CSV senza intestazione, un campione per riga.
    class_a, class_b : str
        Valori della colonna di classe da mantenere.

    Restituisce
    -----------
    LabeledDataset
        Dataset con feature reali non normalizzate.

    Solleva
    -------
    DatasetError
        Per errori di lettura, file vuoto, cella non numerica (riportando
        riga e colonna) o meno di due righe per classe.
    """
    percorso = Path(path)
    try:
        tabella = pd.read_csv(percorso, header=None, dtype=str, skipinitialspace=True)
    except pd.errors.EmptyDataError as exc:
        raise DatasetError(f"{percorso}: no rows (file vuoto).") from exc
    except OSError as exc:
        raise DatasetError(f"Impossibile leggere '{percorso}': {exc}") from exc

    if tabella.empty:
        raise DatasetError(f"{percorso}: no rows (file vuoto).")
    if tabella.shape[1] < 2:
        raise DatasetError(f"{percorso}: servono almeno una colonna di feature e la colonna di classe.")

    classi = tabella.iloc[:, -1].fillna("").str.strip()
    grezze = tabella.iloc[:, :-1]
    numeriche = grezze.apply(pd.to_numeric, errors="coerce")

    non_valide = numeriche.isna().to_numpy()
    if non_valide.any():
        riga, colonna = (int(v) for v in np.argwhere(non_valide)[0])
        raise DatasetError(
            f"{percorso}: valore non numerico '{grezze.iat[riga, colonna]}' "
            f"alla riga {riga + 1}, colonna {colonna + 1}."
        )

    conteggi = {classe: int((classi == classe).sum()) for classe in (class_a, class_b)}
    scarse = [classe for classe, quanti in conteggi.items() if quanti < 2]
    if scarse:
        raise DatasetError(
            f"{percorso}: servono almeno 2 righe per classe, trovate {conteggi}."
        )

    tenute = (classi == class_a) | (classi == class_b)
    features = numeriche.loc[tenute].to_numpy(dtype=float)
    etichette = np.where(classi.loc[tenute].to_numpy() == class_a, 1, -1)
    logger.info("Caricate %d righe da %s (%s=+1, %s=-1)", features.shape[0], percorso.name, class_a, class_b)
    return LabeledDataset(features, etichette, percorso.stem)


def export_dataset_csv(ds: LabeledDataset, path: Path | str) -> Path:
    """Esporta un dataset nel formato ``dim,label,x0,...,x{D-1}``."""
    colonne = [f"x{j}" for j in range(ds.dim)]
    tabella = pd.DataFrame(ds.features, columns=colonne)
    tabella.insert(0, "label", ds.labels)
    tabella.insert(0, "dim", ds.dim)
    return scrivi_csv(tabella, path)


def load_dataset_csv(path: Path | str, name: str | None = None) -> LabeledDataset:
    """Carica un dataset esportato da ``export_dataset_csv``.

    Solleva
    -------
    DatasetError
        Se il file non e' leggibile o non rispetta il formato.
    """
    percorso = Path(path)
    try:
        tabella = pd.read_csv(percorso)
    except pd.errors.EmptyDataError as exc:
        raise DatasetError(f"{percorso}: no rows (file vuoto).") from exc
    except OSError as exc:
        raise DatasetError(f"Impossibile leggere '{percorso}': {exc}") from exc

    if list(tabella.columns[:2]) != ["dim", "label"] or tabella.empty:
        raise DatasetError(f"{percorso}: intestazione attesa 'dim,label,x0,...' con almeno una riga.")
    dim = int(tabella["dim"].iloc[0])
    attese = [f"x{j}" for j in range(dim)]
    if list(tabella.columns[2:]) != attese or (tabella["dim"] != dim).any():
        raise DatasetError(f"{percorso}: le colonne delle feature non corrispondono a dim={dim}.")
    try:
        return LabeledDataset(
            tabella[attese].to_numpy(dtype=float),
            tabella["label"].to_numpy(),
            name or percorso.stem,
        )
    except ValueError as exc:
        raise DatasetError(f"{percorso}: {exc}") from exc


# ---------------------------------------------------------------------------
# Trasformazioni
# ---------------------------------------------------------------------------

def normalize(ds: LabeledDataset) -> LabeledDataset:
    """Divide ogni punto per la norma massima del dataset.

    Ordine ed etichette restano invariati; dopo la trasformazione ogni
    punto ha norma <= 1 e almeno uno ha norma 1.

    Solleva
    -------
    DatasetError
        Se il dataset e' vuoto o tutti i punti sono nulli.
    """
    if len(ds) == 0:
        raise DatasetError("Impossibile normalizzare un dataset vuoto.")
    massimo = float(np.max(np.linalg.norm(ds.features, axis=1)))
    if massimo == 0.0:
        raise DatasetError("Impossibile normalizzare un dataset con tutti i punti nulli.")
    if massimo == 1.0:
        return ds
    return LabeledDataset(ds.features / massimo, ds.labels, ds.name)


def split_dataset(
    ds: LabeledDataset,
    train_fraction: float,
    seed: Seme = None,
) -> tuple[LabeledDataset, LabeledDataset]:
    """Suddivide il dataset in training (prefisso) e test.

    La dimensione del training e' ceil(train_fraction·N). Con ``seed``
    intero l'ordine e' una permutazione uniforme con quel seed; se il
    prefisso contiene una sola classe si passa al seed derivato successivo.
    Con ``seed=None`` si mantiene l'ordine degli indici.

    Solleva
    -------
    DatasetError
        Se non si ottiene un training con entrambe le classi.
    """
    train_fraction = valida_probabilita(train_fraction, "train_fraction")
    if train_fraction == 0.0:
        raise ValueError("Il parametro 'train_fraction' deve essere positivo.")
    n = len(ds)
    dimensione = max(1, min(n, math.ceil(train_fraction * n - 1e-9)))

    if seed is None:
        ordini = [np.arange(n)]
    else:
        ordini = (
            crea_generatore(seme_derivato(seed, tentativo) if tentativo else seed).permutation(n)
            for tentativo in range(_MAX_TENTATIVI_SPLIT)
        )

    for ordine in ordini:
        training = ds.sottoinsieme(ordine[:dimensione])
        if training.ha_entrambe_le_classi():
            return training, ds.sottoinsieme(ordine[dimensione:])

    raise DatasetError(
        f"Impossibile ottenere un training set con entrambe le classi "
        f"(N={n}, frazione={train_fraction})."
    )


# ---------------------------------------------------------------------------
# Generatori casuali
# ---------------------------------------------------------------------------

def _vettori_unitari(rng: np.random.Generator, righe: int, d: int) -> np.ndarray:
    v = rng.standard_normal((righe, d))
    norme = np.linalg.norm(v, axis=1, keepdims=True)
    norme[norme == 0.0] = 1.0
    return v / norme


def _ortogonale_unitario(rng: np.random.Generator, u: np.ndarray) -> np.ndarray:
    while True:
        v = rng.standard_normal(u.size)
        v -= np.dot(v, u) * u
        norma = np.linalg.norm(v)
        if norma > 1e-8:
            return v / norma


def make_planted_margin_dataset(n: int, d: int, gamma: float, seed: Seme) -> LabeledDataset:
    """Dataset di n punti unitari in R^d con margine esattamente ``gamma``.

    Sceglie una direzione u uniforme; le etichette alternano +1 e -1.
    Ogni punto uniforme sulla sfera viene portato nella calotta
    y·<u, x> >= gamma con la componente lungo u t' = gamma + (1-gamma)|t|.
    Infine il punto piu' vicino di ciascuna classe e' sostituito dalla
    coppia simmetrica gamma·u ± sqrt(1-gamma^2)·v: u soddisfa le
    condizioni di ottimalita' e il margine realizzato e' gamma.

    Solleva
    -------
    ValueError
        Se n < 2, d < 2 o gamma non e' in (0, 1).
    """
    n = valida_intero(n, "n", minimo=2)
    d = valida_intero(d, "d", minimo=2)
    gamma = valida_aperto_unitario(gamma, "gamma")
    rng = crea_generatore(seed)

    u = _vettori_unitari(rng, 1, d)[0]
    etichette = np.where(np.arange(n) % 2 == 0, 1, -1)
    punti = _vettori_unitari(rng, n, d)

    t = punti @ u
    ortogonali = punti - np.outer(t, u)
    norme = np.linalg.norm(ortogonali, axis=1)
    for i in np.flatnonzero(norme < 1e-12):
        ortogonali[i] = _ortogonale_unitario(rng, u)
        norme[i] = 1.0
    ortogonali /= norme[:, None]

    t_nuovo = gamma + (1.0 - gamma) * np.abs(t)
    punti = (etichette * t_nuovo)[:, None] * u + np.sqrt(1.0 - t_nuovo**2)[:, None] * ortogonali

    v = _ortogonale_unitario(rng, u)
    laterale = math.sqrt(1.0 - gamma * gamma) * v
    for etichetta in (1, -1):
        classe = np.flatnonzero(etichette == etichetta)
        vicino = classe[np.argmin(t_nuovo[classe])]
        punti[vicino] = etichetta * gamma * u + laterale

    return LabeledDataset(punti, etichette, f"planted_n{n}_d{d}_g{gamma:g}")


def sample_hyperplanes(k: int, d: int, seed: Seme | np.random.Generator) -> list[Hyperplane]:
    """k vettori gaussiani standard indipendenti in R^d, deterministici per seed."""
    k = valida_intero(k, "k", minimo=1)
    d = valida_intero(d, "d", minimo=1)
    rng = crea_generatore(seed)
    return [Hyperplane(riga) for riga in rng.standard_normal((k, d))]
