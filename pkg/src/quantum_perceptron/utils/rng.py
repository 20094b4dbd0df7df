"""Generatori pseudo-casuali nominati, con seed e derivabili.

Ogni operazione stocastica riceve esplicitamente un
``numpy.random.Generator``. I flussi indipendenti (una prova, un fold,
una curva) si ottengono derivando un seed intero dal seed master e da
una chiave: lo stesso master produce sempre gli stessi flussi,
indipendentemente dall'ordine in cui vengono richiesti.
"""

from __future__ import annotations

import numpy as np

Seme = int | None
"""Seed accettato dalle funzioni pubbliche (``None`` = entropia del sistema)."""


def crea_generatore(seed: Seme | np.random.Generator = None) -> np.random.Generator:
    """Restituisce un ``Generator`` PCG64 per il seed dato.

    Un ``Generator`` gia' costruito viene restituito invariato, cosi' che
    le funzioni possano accettare indifferentemente un seed o un flusso.
    """
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def seme_derivato(master: int, *chiavi: int) -> int:
    """Deriva un seed intero a 63 bit dal seed master e da una chiave numerica.

    Parametri
    ---------
    master : int
        Seed master dell'esperimento.
    *chiavi : int
        Percorso del flusso (es. indice del dataset, indice della prova).

    Restituisce
    -----------
    int
        Seed derivato, stabile tra esecuzioni e piattaforme.
    """
    sequenza = np.random.SeedSequence(entropy=int(master), spawn_key=tuple(int(c) for c in chiavi))
    return int(sequenza.generate_state(1, dtype=np.uint64)[0] >> np.uint64(1))


def generatore_derivato(master: int, *chiavi: int) -> np.random.Generator:
    """Scorciatoia per ``crea_generatore(seme_derivato(master, *chiavi))``."""
    return np.random.default_rng(seme_derivato(master, *chiavi))
