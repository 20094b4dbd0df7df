"""Modelli dati per i campioni etichettati e il loro margine.

Contiene le dataclass LabeledPoint, LabeledDataset e MarginReport.
Le feature di un dataset sono conservate come matrice numpy di sola
lettura (una riga per punto) e le etichette come vettore di interi
in {-1, +1}.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from typing import Literal

import numpy as np

from quantum_perceptron.config.constants import TOLLERANZA_MARGINE
from quantum_perceptron.models.perceptron import Hyperplane

MetodoMargine = Literal["analytic", "optimizer", "exhaustive-2d"]
"""Metodo con cui e' stato calcolato un margine."""

METODI_MARGINE: tuple[str, ...] = ("analytic", "optimizer", "exhaustive-2d")


def _sola_lettura(array: np.ndarray) -> np.ndarray:
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class LabeledPoint:
    """Un punto etichettato (x, y).

    Attributes:
        x: Vettore delle feature.
        y: Etichetta, esattamente -1 oppure +1.
    """

    x: np.ndarray
    y: int

    def __post_init__(self) -> None:
        x = _sola_lettura(np.array(self.x, dtype=float, copy=True).reshape(-1))
        if int(self.y) != self.y or int(self.y) not in (-1, 1):
            raise ValueError(f"L'etichetta deve essere -1 oppure +1, ricevuto: {self.y}")
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", int(self.y))


@dataclass(frozen=True, eq=False)
class LabeledDataset:
    """Campione etichettato S.

    La presenza di entrambe le classi non e' richiesta alla costruzione:
    viene verificata al caricamento e prima dell'addestramento.

    Attributes:
        features: Matrice N x D delle feature (sola lettura).
        labels: Vettore di N etichette in {-1, +1} (sola lettura).
        name: Identificativo del dataset.
    """

    features: np.ndarray
    labels: np.ndarray
    name: str = "dataset"

    def __post_init__(self) -> None:
        features = np.array(self.features, dtype=float, copy=True)
        if features.ndim == 1:
            features = features.reshape(1, -1) if features.size else features.reshape(0, 0)
        if features.ndim != 2:
            raise ValueError(
                f"Le feature devono formare una matrice N x D (ricevuto ndim={features.ndim})."
            )
        labels = np.array(self.labels, copy=True).reshape(-1)
        if labels.size != features.shape[0]:
            raise ValueError(
                f"Numero di etichette ({labels.size}) diverso dal numero di punti "
                f"({features.shape[0]})."
            )
        if labels.size and not np.all(np.isin(labels, (-1, 1))):
            raise ValueError("Le etichette devono essere esattamente -1 oppure +1.")
        if features.shape[0] and features.shape[1] < 1:
            raise ValueError("La dimensione delle feature deve essere almeno 1.")
        if not np.all(np.isfinite(features)):
            raise ValueError("Le feature devono essere valori finiti.")

        object.__setattr__(self, "features", _sola_lettura(features))
        object.__setattr__(self, "labels", _sola_lettura(labels.astype(np.int64)))

    # -- costruttori ---------------------------------------------------------

    @classmethod
    def da_punti(cls, punti: Iterable[LabeledPoint], name: str = "dataset") -> LabeledDataset:
        """Costruisce un dataset da una sequenza di LabeledPoint della stessa dimensione."""
        punti = list(punti)
        if not punti:
            raise ValueError("Impossibile costruire un dataset senza punti.")
        dimensioni = {p.x.size for p in punti}
        if len(dimensioni) != 1:
            raise ValueError(f"Tutti i punti devono avere la stessa dimensione: {sorted(dimensioni)}")
        return cls(
            np.vstack([p.x for p in punti]),
            np.array([p.y for p in punti], dtype=np.int64),
            name,
        )

    # -- proprieta' ----------------------------------------------------------

    @property
    def dim(self) -> int:
        return int(self.features.shape[1])

    @property
    def points(self) -> list[LabeledPoint]:
        """Punti materializzati, nell'ordine del dataset."""
        return [LabeledPoint(x, int(y)) for x, y in zip(self.features, self.labels)]

    @property
    def matrice_segnata(self) -> np.ndarray:
        """Matrice Z con righe y_i * x_i (vincoli del margine)."""
        return self.features * self.labels[:, None]

    def __len__(self) -> int:
        return int(self.labels.size)

    def ha_entrambe_le_classi(self) -> bool:
        return bool(np.any(self.labels == 1) and np.any(self.labels == -1))

    # -- sottoinsiemi --------------------------------------------------------

    def sottoinsieme(self, indici: Sequence[int] | np.ndarray, name: str | None = None) -> LabeledDataset:
        """Dataset con i soli punti di indice (0-based) ``indici``, nell'ordine dato."""
        idx = np.asarray(indici, dtype=np.int64)
        return LabeledDataset(self.features[idx], self.labels[idx], name or self.name)

    def senza(self, i: int) -> LabeledDataset:
        """Dataset privato del punto di indice ``i`` (fold leave-one-out)."""
        maschera = np.ones(len(self), dtype=bool)
        maschera[i] = False
        return LabeledDataset(self.features[maschera], self.labels[maschera], self.name)

    def identico(self, altro: LabeledDataset) -> bool:
        """True se feature ed etichette coincidono bit per bit."""
        return (
            self.features.shape == altro.features.shape
            and bool(np.array_equal(self.features, altro.features))
            and bool(np.array_equal(self.labels, altro.labels))
        )

    def __repr__(self) -> str:
        return f"LabeledDataset(name={self.name!r}, n={len(self)}, dim={self.dim if len(self) else 0})"


@dataclass(frozen=True)
class MarginReport:
    """Margine di un dataset e iperpiano che lo realizza.

    Attributes:
        gamma: Margine (0 se il dataset non e' separabile).
        witness: Iperpiano testimone (None se gamma = 0).
        method: Metodo di calcolo.
    """

    gamma: float
    witness: Hyperplane | None
    method: str

    def __post_init__(self) -> None:
        if self.gamma < 0:
            raise ValueError(f"Il margine non puo' essere negativo, ricevuto: {self.gamma}")
        if self.gamma > 0 and self.witness is None:
            raise ValueError("Un margine positivo richiede un iperpiano testimone.")
        if self.method not in METODI_MARGINE:
            raise ValueError(f"Metodo di margine '{self.method}' non valido: {list(METODI_MARGINE)}")

    @property
    def separabile(self) -> bool:
        return self.gamma > 0

    def verifica(self, ds: LabeledDataset, tolleranza: float = TOLLERANZA_MARGINE) -> bool:
        """True se il testimone realizza il margine dichiarato su ``ds``."""
        if self.witness is None:
            return self.gamma == 0
        norma = self.witness.norma
        if norma == 0:
            return False
        minimo = float(np.min(ds.matrice_segnata @ self.witness.w)) / norma
        return minimo >= self.gamma - tolleranza
