"""Pacchetto di configurazione per quantum_perceptron.

Esporta le impostazioni globali (percorsi, logging, directory di
output) e le costanti numeriche con i parametri di default degli
esperimenti.
"""

from quantum_perceptron.config.settings import (
    ROOT_DIR,
    DATA_DIR,
    IRIS_CSV,
    CONFIGS_DIR,
    REPORTS_DIR,
    OUT_DIR_ENV,
    DEFAULT_OUT_DIR,
    RUN_LOG_NAME,
    LOG_LEVEL,
    LOG_FORMAT,
    directory_output,
    assicura_directory,
)
from quantum_perceptron.config.constants import (
    TOLLERANZA_NORMA,
    TOLLERANZA_STATO,
    TOLLERANZA_CEIL,
    TOLLERANZA_MARGINE,
    DEFAULT_EPSILON,
    DEFAULT_SEED,
    DEFAULT_MAX_ESAMINAZIONI,
    STATEVECTOR_MAX_QUBIT,
    RISOLUZIONE_SWEEP_2D,
    BACKENDS,
    TIPI_RUMORE,
    ALGORITMI,
    ParametriFig1,
    ParametriFig2,
    ParametriFig3,
    ParametriLemma1,
    ParametriLOO,
    ParametriCli,
)

__all__ = [
    # Percorsi
    "ROOT_DIR",
    "DATA_DIR",
    "IRIS_CSV",
    "CONFIGS_DIR",
    "REPORTS_DIR",
    # Output e logging
    "OUT_DIR_ENV",
    "DEFAULT_OUT_DIR",
    "RUN_LOG_NAME",
    "LOG_LEVEL",
    "LOG_FORMAT",
    "directory_output",
    "assicura_directory",
    # Tolleranze
    "TOLLERANZA_NORMA",
    "TOLLERANZA_STATO",
    "TOLLERANZA_CEIL",
    "TOLLERANZA_MARGINE",
    # Default
    "DEFAULT_EPSILON",
    "DEFAULT_SEED",
    "DEFAULT_MAX_ESAMINAZIONI",
    "STATEVECTOR_MAX_QUBIT",
    "RISOLUZIONE_SWEEP_2D",
    "BACKENDS",
    "TIPI_RUMORE",
    "ALGORITMI",
    # Parametri degli esperimenti
    "ParametriFig1",
    "ParametriFig2",
    "ParametriFig3",
    "ParametriLemma1",
    "ParametriLOO",
    "ParametriCli",
]
