"""Modelli dati degli algoritmi di apprendimento.

Contiene l'iperpiano candidato (Hyperplane), il registro dei costi
(CostLedger) e il risultato di un'esecuzione (RunResult), con la
serializzazione in una riga CSV.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Literal

import numpy as np

Algorithm = Literal["classical", "online", "version_space", "hybrid"]
"""Algoritmo di apprendimento che ha prodotto un RunResult."""

Protocol = Literal["stream_until_clean", "one_update_per_pass"]
"""Protocollo di scansione del perceptron classico."""

PROTOCOLLI: tuple[str, ...] = ("stream_until_clean", "one_update_per_pass")

COLONNE_RUN_RESULT: tuple[str, ...] = (
    "algorithm",
    "dataset",
    "n",
    "gamma",
    "epsilon",
    "backend",
    "noise_kind",
    "noise_p",
    "seed",
    "separates",
    "updates",
    "oracle_queries",
    "classical_verifications",
    "wall_steps",
)
"""Intestazione CSV di un RunResult serializzato."""


@dataclass(frozen=True, eq=False)
class Hyperplane:
    """Separatore candidato w in R^D.

    Il vettore viene copiato e reso di sola lettura: un iperpiano
    restituito da un algoritmo non puo' essere modificato dal chiamante.

    Attributes:
        w: Vettore dei coefficienti (float64, una dimensione).
    """

    w: np.ndarray

    def __post_init__(self) -> None:
        w = np.array(self.w, dtype=float, copy=True).reshape(-1)
        if w.size == 0:
            raise ValueError("Un iperpiano deve avere dimensione almeno 1.")
        if not np.all(np.isfinite(w)):
            raise ValueError("I coefficienti dell'iperpiano devono essere finiti.")
        w.setflags(write=False)
        object.__setattr__(self, "w", w)

    @classmethod
    def zero(cls, dim: int) -> Hyperplane:
        """Iperpiano nullo, stato iniziale del perceptron."""
        return cls(np.zeros(dim))

    @property
    def dim(self) -> int:
        return int(self.w.size)

    @property
    def norma(self) -> float:
        return float(np.linalg.norm(self.w))

    def identico(self, altro: Hyperplane) -> bool:
        """True se i coefficienti coincidono bit per bit."""
        return self.w.shape == altro.w.shape and bool(np.array_equal(self.w, altro.w))

    def __repr__(self) -> str:
        return f"Hyperplane(dim={self.dim}, norma={self.norma:.6g})"


@dataclass
class CostLedger:
    """Contatori di costo di un'esecuzione.

    Unita' di costo: una primitiva che tocca i dati, cioe' un test
    classico su un punto oppure un'iterazione di Grover. Un'iterazione
    sullo spazio delle versioni costa N unita' perche' l'oracolo valuta
    tutti gli N punti.

    Attributes:
        oracle_queries: Chiamate all'oracolo (iterazioni di Grover o test classici).
        classical_verifications: Verifiche classiche di un candidato misurato.
        updates: Aggiornamenti dell'iperpiano o cambi di iperpiano.
        wall_steps: Operazioni unitarie totali.
    """

    oracle_queries: int = 0
    classical_verifications: int = 0
    updates: int = 0
    wall_steps: int = 0

    def addebita_iterazioni(self, iterazioni: int, costo_unitario: int = 1) -> None:
        """Addebita ``iterazioni`` iterazioni di Grover di costo ``costo_unitario``."""
        costo = int(iterazioni) * int(costo_unitario)
        self.oracle_queries += costo
        self.wall_steps += costo

    def addebita_esami(self, esami: int = 1) -> None:
        """Addebita esami classici di singoli punti."""
        self.oracle_queries += int(esami)
        self.wall_steps += int(esami)

    def addebita_verifica(self, costo: int = 1) -> None:
        """Addebita la verifica classica di un candidato misurato."""
        self.classical_verifications += 1
        self.wall_steps += int(costo)

    def addebita_controllo(self, punti: int) -> None:
        """Addebita un controllo di separazione su ``punti`` punti (solo oracle_queries)."""
        self.oracle_queries += int(punti)

    def registra_aggiornamento(self) -> None:
        self.updates += 1

    def come_dizionario(self) -> dict[str, int]:
        return {
            "updates": self.updates,
            "oracle_queries": self.oracle_queries,
            "classical_verifications": self.classical_verifications,
            "wall_steps": self.wall_steps,
        }


@dataclass
class RunResult:
    """Risultato di un'esecuzione di un algoritmo di apprendimento.

    Attributes:
        hyperplane: Iperpiano restituito.
        separates: True se l'iperpiano separa strettamente il training set
                   (verificato classicamente sull'intero insieme).
        ledger: Registro dei costi dell'esecuzione.
        algorithm: Algoritmo eseguito.
        seed: Seed del flusso casuale (None per esecuzioni deterministiche).
        dataset: Nome del dataset di training.
        n: Numero di punti di training.
        gamma: Margine usato dall'algoritmo (None se non richiesto).
        epsilon: Probabilita' di fallimento (None per il perceptron classico).
        backend: Backend di Grover ("" per il perceptron classico).
        noise_kind: Modello di rumore.
        noise_p: Probabilita' di errore per iterazione.
        metadati: Informazioni aggiuntive (es. costo della stima del margine).
    """

    hyperplane: Hyperplane
    separates: bool
    ledger: CostLedger
    algorithm: str
    seed: int | None = None
    dataset: str = ""
    n: int = 0
    gamma: float | None = None
    epsilon: float | None = None
    backend: str = ""
    noise_kind: str = "none"
    noise_p: float = 0.0
    metadati: dict[str, Any] = field(default_factory=dict)

    def riga_csv(self) -> dict[str, Any]:
        """Restituisce il risultato come dizionario ordinato secondo COLONNE_RUN_RESULT."""
        valori: dict[str, Any] = {
            "algorithm": self.algorithm,
            "dataset": self.dataset,
            "n": self.n,
            "gamma": self.gamma,
            "epsilon": self.epsilon,
            "backend": self.backend,
            "noise_kind": self.noise_kind,
            "noise_p": self.noise_p,
            "seed": self.seed,
            "separates": self.separates,
            **self.ledger.come_dizionario(),
        }
        return {colonna: valori[colonna] for colonna in COLONNE_RUN_RESULT}

    def __str__(self) -> str:
        esito = "separa" if self.separates else "NON separa"
        return (
            f"{self.algorithm} su {self.dataset or 'dataset'} (N={self.n}): {esito}, "
            f"wall_steps={self.ledger.wall_steps}, updates={self.ledger.updates}"
        )
