"""Impostazioni globali e percorsi del progetto.

Carica le variabili d'ambiente dal file .env e definisce
i percorsi e le configurazioni di base utilizzate dai runner
degli esperimenti e dalla riga di comando.
"""

from pathlib import Path
from dotenv import load_dotenv
import os

# Carica variabili d'ambiente dal file .env nella radice del progetto
load_dotenv()

# --- Percorsi principali del progetto ---

ROOT_DIR: Path = Path(__file__).resolve().parent.parent.parent.parent
"""Percorso della radice del progetto (dove si trova pyproject.toml)."""

DATA_DIR: Path = ROOT_DIR / "data"
"""Percorso della directory dati (dataset pubblici inclusi nel repository)."""

IRIS_CSV: Path = DATA_DIR / "iris.csv"
"""Tabella Iris completa (quattro feature numeriche e colonna di classe)."""

CONFIGS_DIR: Path = ROOT_DIR / "configs"
"""Percorso della directory con i file di configurazione ``key=value``."""

REPORTS_DIR: Path = ROOT_DIR / "output" / "markdown"
"""Percorso della directory dove vengono salvati i report della suite (.md)."""

# --- Directory di output ---

OUT_DIR_ENV: str = "QPERC_OUT_DIR"
"""Nome della variabile d'ambiente che sostituisce la directory di output."""

DEFAULT_OUT_DIR: str = "./out"
"""Directory di output di default per CSV, file .meta e SVG."""

RUN_LOG_NAME: str = "run_log.md"
"""Nome del file Markdown che registra ogni esecuzione della CLI."""

# --- Impostazioni di logging ---

LOG_LEVEL: str = os.getenv("LOG_LEVEL", "INFO")
"""Livello di logging (DEBUG, INFO, WARNING, ERROR, CRITICAL)."""

LOG_FORMAT: str = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
"""Formato dei messaggi di log."""


def directory_output() -> Path:
    """Restituisce la directory di output corrente.

    La variabile ``QPERC_OUT_DIR`` viene letta a ogni chiamata, cosi'
    che la CLI e i test possano cambiarla senza reimportare il modulo.
    """
    return Path(os.getenv(OUT_DIR_ENV, DEFAULT_OUT_DIR))


def assicura_directory(*directory: Path) -> None:
    """Crea le directory di lavoro se non esistono gia'."""
    for percorso in directory or (REPORTS_DIR,):
        percorso.mkdir(parents=True, exist_ok=True)
