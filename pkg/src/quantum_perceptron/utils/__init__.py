"""Pacchetto di utilita' per quantum_perceptron.

Esporta le funzioni principali dei moduli di utilita' per un
accesso comodo tramite ``from quantum_perceptron.utils import ...``.
"""

from __future__ import annotations

# --- Funzioni numeriche ---
from quantum_perceptron.utils.math_helpers import (
    ceil_tollerante,
    errore_standard_proporzione,
    griglia_logaritmica,
    log_tre_quarti,
    media_errore_standard,
    pendenza_log_log,
)

# --- Funzioni di formattazione ---
from quantum_perceptron.utils.formatting import (
    formatta_cella,
    formatta_numero,
    formatta_percentuale,
    tabella_markdown,
)

# --- Funzioni di validazione ---
from quantum_perceptron.utils.validators import (
    valida_aperto_unitario,
    valida_intero,
    valida_margine,
    valida_non_negativo,
    valida_positivo,
    valida_probabilita,
    valida_scelta,
)

# --- Generatori casuali ---
from quantum_perceptron.utils.rng import (
    Seme,
    crea_generatore,
    generatore_derivato,
    seme_derivato,
)

# --- File di output e logging ---
from quantum_perceptron.utils.output_files import (
    formatta_meta,
    leggi_chiave_valore,
    scrivi_atomico,
    scrivi_csv,
    scrivi_meta,
)
from quantum_perceptron.utils.logging_utils import (
    configura_logging,
    leggi_log,
    log_esecuzione,
)

__all__ = [
    # Numeriche
    "ceil_tollerante",
    "errore_standard_proporzione",
    "griglia_logaritmica",
    "log_tre_quarti",
    "media_errore_standard",
    "pendenza_log_log",
    # Formattazione
    "formatta_cella",
    "formatta_numero",
    "formatta_percentuale",
    "tabella_markdown",
    # Validazione
    "valida_aperto_unitario",
    "valida_intero",
    "valida_margine",
    "valida_non_negativo",
    "valida_positivo",
    "valida_probabilita",
    "valida_scelta",
    # Generatori casuali
    "Seme",
    "crea_generatore",
    "generatore_derivato",
    "seme_derivato",
    # File e logging
    "formatta_meta",
    "leggi_chiave_valore",
    "scrivi_atomico",
    "scrivi_csv",
    "scrivi_meta",
    "configura_logging",
    "leggi_log",
    "log_esecuzione",
]
