"""Modelli dati della ricerca di Grover.

Contiene l'istanza di ricerca (GroverInstance), il modello di rumore
(NoiseModel) e l'esito di una chiamata a QSearch (QSearchOutcome).
Gli indici degli elementi sono 1-based in ogni interfaccia pubblica.
"""

from __future__ import annotations

import math
from collections.abc import Callable, Iterable
from dataclasses import dataclass, field
from typing import Literal, Union

import numpy as np

from quantum_perceptron.config.constants import TIPI_RUMORE

Backend = Literal["analytic", "statevector"]
"""Backend di simulazione."""

NoiseKind = Literal["none", "bit_flip", "depolarizing"]
"""Tipo di canale di rumore."""

Marcatura = Union[Callable[[int], bool], Iterable[int], np.ndarray, None]
"""Insieme marcato: predicato sugli indici 1..N, collezione di indici o maschera booleana."""


@dataclass(frozen=True)
class NoiseModel:
    """Canale di rumore applicato dopo ogni iterazione di Grover.

    Attributes:
        kind: ``"none"``, ``"bit_flip"`` oppure ``"depolarizing"``.
        p: Probabilita' di errore per iterazione (ignorata e posta a 0 se kind = none).
    """

    kind: str = "none"
    p: float = 0.0

    def __post_init__(self) -> None:
        kind = str(self.kind).strip().lower().replace("-", "_")
        if kind not in TIPI_RUMORE:
            raise ValueError(f"Tipo di rumore '{self.kind}' non valido. Valori validi: {list(TIPI_RUMORE)}")
        p = float(self.p)
        if not 0.0 <= p <= 1.0:
            raise ValueError(f"La probabilita' di rumore deve essere in [0, 1], ricevuto: {self.p}")
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "p", 0.0 if kind == "none" else p)

    @property
    def attivo(self) -> bool:
        """True se il canale modifica effettivamente lo stato."""
        return self.kind != "none" and self.p > 0.0


NESSUN_RUMORE = NoiseModel()


@dataclass(frozen=True, eq=False)
class GroverInstance:
    """Istanza di ricerca su {1..N}.

    L'insieme marcato puo' essere dato come predicato sugli indici,
    come collezione di indici 1-based oppure come maschera booleana di
    lunghezza N (posizione 0 = elemento 1). Il solo ``marked_count_hint``
    (senza ``marked``) e' ammesso dal backend analitico: gli elementi
    marcati sono allora convenzionalmente i primi ``marked_count_hint``.

    Attributes:
        n_items: Dimensione N dello spazio di ricerca.
        marked: Descrizione dell'insieme marcato.
        marked_count_hint: Numero di elementi marcati, se noto.
    """

    n_items: int
    marked: Marcatura = None
    marked_count_hint: int | None = None
    maschera: np.ndarray = field(init=False, repr=False)

    def __post_init__(self) -> None:
        n = int(self.n_items)
        if n < 1:
            raise ValueError(f"Lo spazio di ricerca deve avere almeno un elemento, ricevuto: {self.n_items}")
        object.__setattr__(self, "n_items", n)

        maschera = self._costruisci_maschera(n)
        if self.marked_count_hint is not None:
            hint = int(self.marked_count_hint)
            if not 0 <= hint <= n:
                raise ValueError(f"marked_count_hint deve essere in [0, {n}], ricevuto: {hint}")
            if self.marked is not None and int(maschera.sum()) != hint:
                raise ValueError(
                    f"marked_count_hint ({hint}) non coincide con la dimensione "
                    f"dell'insieme marcato ({int(maschera.sum())})."
                )
        maschera.setflags(write=False)
        object.__setattr__(self, "maschera", maschera)

    def _costruisci_maschera(self, n: int) -> np.ndarray:
        marked = self.marked
        if marked is None:
            maschera = np.zeros(n, dtype=bool)
            maschera[: int(self.marked_count_hint or 0)] = True
            return maschera
        if isinstance(marked, np.ndarray) and marked.dtype == bool:
            if marked.shape != (n,):
                raise ValueError(f"La maschera marcata deve avere lunghezza {n}, ricevuto {marked.shape}")
            return marked.copy()
        if callable(marked):
            return np.fromiter((bool(marked(i)) for i in range(1, n + 1)), dtype=bool, count=n)
        maschera = np.zeros(n, dtype=bool)
        for indice in marked:
            indice = int(indice)
            if not 1 <= indice <= n:
                raise ValueError(f"Indice marcato {indice} fuori dall'intervallo 1..{n}")
            maschera[indice - 1] = True
        return maschera

    @property
    def marked_count(self) -> int:
        return int(self.maschera.sum())

    @property
    def marked_fraction(self) -> float:
        return self.marked_count / self.n_items

    @property
    def qubit(self) -> int | None:
        """Numero di qubit q se N = 2^q con q >= 1, altrimenti None."""
        n = self.n_items
        if n >= 2 and n & (n - 1) == 0:
            return n.bit_length() - 1
        return None

    def is_marked(self, indice: int) -> bool:
        """True se l'elemento 1-based ``indice`` e' marcato."""
        return bool(self.maschera[indice - 1])

    def con_padding(self) -> GroverInstance:
        """Istanza estesa alla potenza di due successiva con elementi fittizi mai marcati."""
        n = self.n_items
        dimensione = max(2, 1 << math.ceil(math.log2(n))) if n > 1 else 2
        if dimensione == n:
            return self
        estesa = np.zeros(dimensione, dtype=bool)
        estesa[:n] = self.maschera
        return GroverInstance(dimensione, estesa)


@dataclass
class QSearchOutcome:
    """Esito di una chiamata a QSearch.

    Attributes:
        index: Indice misurato (1-based).
        iterations_used: Numero m di iterazioni di Grover applicate.
        was_marked: Esito della verifica classica, compilato dal chiamante.
    """

    index: int
    iterations_used: int
    was_marked: bool | None = None
