"""Configurazione del logging e registro Markdown delle esecuzioni.

``configura_logging`` imposta il logger radice con livello e formato
delle impostazioni; ``log_esecuzione`` aggiunge un blocco Markdown per
ogni comando eseguito nel file ``run_log.md`` della directory di output,
cosi' che ogni risultato sia tracciabile fino al comando che lo ha
prodotto.
"""

from __future__ import annotations

import logging
from datetime import datetime, timezone
from pathlib import Path

from quantum_perceptron.config.settings import LOG_FORMAT, LOG_LEVEL, RUN_LOG_NAME


def configura_logging(livello: str | None = None) -> None:
    """Configura il logger radice (livello da ``LOG_LEVEL`` se non indicato)."""
    nome_livello = (livello or LOG_LEVEL).upper()
    logging.basicConfig(
        level=getattr(logging, nome_livello, logging.INFO),
        format=LOG_FORMAT,
        force=True,
    )


def log_esecuzione(
    directory: Path,
    comando: str,
    parametri: str,
    esito: str,
) -> Path:
    """Registra un'esecuzione nel file ``run_log.md`` di ``directory``.

    Parametri
    ---------
    directory : Path
        Directory di output dell'esecuzione.
    comando : str
        Sottocomando eseguito (es. ``"experiment fig2"``).
    parametri : str
        Argomenti della riga di comando.
    esito : str
        Riepilogo del risultato (file scritti, valore stampato o errore).

    Restituisce
    -----------
    Path
        Percorso del file di log aggiornato.

    Note
    ----
    Il file viene creato se non esiste; le voci sono solo aggiunte in coda.
    """
    timestamp = datetime.now(timezone.utc).isoformat(timespec="seconds")

    voce = (
        f"\n### {timestamp}\n"
        f"**Comando:** {comando}\n"
        f"**Parametri:** {parametri}\n"
        f"**Esito:** {esito}\n"
        f"---\n"
    )

    percorso = Path(directory) / RUN_LOG_NAME
    percorso.parent.mkdir(parents=True, exist_ok=True)

    with percorso.open("a", encoding="utf-8") as f:
        f.write(voce)

    return percorso


def leggi_log(directory: Path) -> str:
    """Restituisce il contenuto di ``run_log.md`` (stringa vuota se assente)."""
    percorso = Path(directory) / RUN_LOG_NAME

    if not percorso.exists():
        return ""

    return percorso.read_text(encoding="utf-8")
