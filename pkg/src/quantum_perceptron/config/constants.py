"""Costanti numeriche e parametri di default degli esperimenti.

I valori di default riprendono le impostazioni degli esperimenti
numerici di riferimento (margine 0.01 per la curva in N, N = 1000
per la curva nel margine, split 10 % per Iris e 50 % per Hard).
Il valore di epsilon non e' fissato dai risultati pubblicati: 0.05
e' una scelta del progetto e viene sempre riportato nei file .meta.
"""

from dataclasses import dataclass


# --- Tolleranze numeriche ---

TOLLERANZA_NORMA: float = 1e-12
"""Tolleranza sulla norma dei vettori dopo la normalizzazione."""

TOLLERANZA_STATO: float = 1e-10
"""Deriva massima ammessa sulla norma di uno statevector."""

TOLLERANZA_CEIL: float = 1e-9
"""Tolleranza relativa dei ceiling nei calcolatori dei bound."""

TOLLERANZA_MARGINE: float = 1e-9
"""Tolleranza con cui un testimone deve realizzare il margine dichiarato."""


# --- Parametri di default dell'apprendimento ---

DEFAULT_EPSILON: float = 0.05
"""Probabilita' di fallimento di default degli algoritmi quantistici."""

DEFAULT_SEED: int = 0
"""Seed master di default."""

DEFAULT_MAX_ESAMINAZIONI: int = 10_000_000
"""Limite di esaminazioni del perceptron classico quando il margine non e' noto."""

STATEVECTOR_MAX_QUBIT: int = 20
"""Numero massimo di qubit del backend statevector (2^20 ampiezze)."""

RISOLUZIONE_SWEEP_2D: float = 1e-5
"""Passo angolare (radianti) dello sweep esaustivo del margine in 2-D."""


# --- Nomi ammessi ---

BACKENDS: tuple[str, ...] = ("analytic", "statevector")
"""Backend di simulazione di Grover disponibili."""

TIPI_RUMORE: tuple[str, ...] = ("none", "bit_flip", "depolarizing")
"""Modelli di rumore applicati a ogni iterazione di Grover."""

ALGORITMI: tuple[str, ...] = ("classical", "online", "version_space", "hybrid")
"""Algoritmi di apprendimento disponibili."""


# --- Parametri degli esperimenti ---

@dataclass(frozen=True)
class ParametriFig1:
    """Sweep dei calcolatori di complessita' (curve in N e in 1/gamma)."""

    epsilon: float = DEFAULT_EPSILON
    gamma_fisso: float = 0.01
    """Margine fisso per la curva in funzione di N."""

    n_fisso: int = 1000
    """Numero di punti fisso per la curva in funzione di 1/gamma."""

    n_da: float = 1e2
    n_a: float = 1e5
    inv_gamma_da: float = 1e1
    inv_gamma_a: float = 1e3
    punti: int = 13
    """Numero di punti della griglia logaritmica."""


@dataclass(frozen=True)
class ParametriFig2:
    """Rapporto di operazioni quantistico / classico su Iris e Hard."""

    epsilon: float = DEFAULT_EPSILON
    prove: int = 30
    frazione_iris: float = 0.1
    n_hard: int = 1000
    frazione_hard: float = 0.5
    backend: str = "analytic"
    protocollo_iris: str = "stream_until_clean"
    """Protocollo del perceptron classico di riferimento su Iris."""

    protocollo_hard: str = "one_update_per_pass"
    """Protocollo di riferimento su Hard: riproduce i 250500 passi su 500 punti."""

    classe_a: str = "setosa"
    classe_b: str = "versicolor"


@dataclass(frozen=True)
class ParametriFig3:
    """Curve P(M) con e senza rumore per un solo elemento cercato."""

    n_items: int = 64
    noise_p: float = 0.05
    m_max: int = 30
    prove: int = 10_000
    backend: str = "statevector"
    rumori: tuple[str, ...] = ("none", "bit_flip", "depolarizing")


@dataclass(frozen=True)
class ParametriLemma1:
    """Monte Carlo della probabilita' di separazione gaussiana."""

    gamma: tuple[float, ...] = (0.0998, 0.05, 0.02)
    prove: int = 100_000


@dataclass(frozen=True)
class ParametriLOO:
    """Studio leave-one-out del perceptron ibrido su un dataset piantato."""

    n: int = 60
    dimensione: int = 2
    gamma: float = 0.1
    epsilon: float = 0.1
    prove: int = 50
    backend: str = "analytic"


@dataclass(frozen=True)
class ParametriCli:
    """Valori di default della riga di comando."""

    seed: int = DEFAULT_SEED
    epsilon: float = DEFAULT_EPSILON
    backend: str = "analytic"
    noise: str = "none"
    p: float = 0.0
