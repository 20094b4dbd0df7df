"""Scrittura atomica dei file di risultato (CSV, .meta, SVG).

Ogni file viene scritto in un file temporaneo nella stessa directory
e poi rinominato con ``os.replace``: un lettore vede il file vecchio o
quello nuovo, mai uno parziale.
"""

from __future__ import annotations

import logging
import os
import tempfile
from pathlib import Path
from typing import Any, Mapping

import pandas as pd

from quantum_perceptron.utils.formatting import formatta_cella

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# Scrittura atomica
# ---------------------------------------------------------------------------

def scrivi_atomico(percorso: Path | str, testo: str) -> Path:
    """Scrive ``testo`` in ``percorso`` in modo atomico (temp + rename).

    Parametri
    ---------
    percorso : Path | str
        Percorso di destinazione; le directory intermedie vengono create.
    testo : str
        Contenuto del file (UTF-8, fine riga ``\\n``).

    Restituisce
    -----------
    Path
        Il percorso scritto.
    """
    destinazione = Path(percorso)
    destinazione.parent.mkdir(parents=True, exist_ok=True)

    descrittore, temporaneo = tempfile.mkstemp(
        prefix=f".{destinazione.name}.", suffix=".tmp", dir=destinazione.parent
    )
    try:
        with os.fdopen(descrittore, "w", encoding="utf-8", newline="\n") as f:
            f.write(testo)
        os.replace(temporaneo, destinazione)
    except BaseException:
        Path(temporaneo).unlink(missing_ok=True)
        raise

    logger.info("File scritto: %s", destinazione)
    return destinazione


def scrivi_csv(tabella: pd.DataFrame, percorso: Path | str) -> Path:
    """Scrive un ``DataFrame`` come CSV senza indice, in modo atomico."""
    testo = tabella.to_csv(index=False, lineterminator="\n")
    return scrivi_atomico(percorso, testo)


# ---------------------------------------------------------------------------
# File .meta (key=value)
# ---------------------------------------------------------------------------

def formatta_meta(parametri: Mapping[str, Any]) -> str:
    """Serializza un dizionario in righe ``chiave=valore`` ordinate per chiave."""
    righe = [f"{chiave}={formatta_cella(parametri[chiave])}" for chiave in sorted(parametri)]
    return "\n".join(righe) + "\n"


def scrivi_meta(percorso: Path | str, parametri: Mapping[str, Any]) -> Path:
    """Scrive il file .meta di un esperimento."""
    return scrivi_atomico(percorso, formatta_meta(parametri))


def leggi_chiave_valore(percorso: Path | str) -> dict[str, str]:
    """Legge un file ``chiave=valore`` (file .meta o di configurazione).

    Le righe vuote e quelle che iniziano con ``#`` vengono ignorate;
    gli spazi attorno a chiave e valore sono rimossi.

    Solleva
    -------
    ValueError
        Se una riga non contiene il separatore ``=``.
    OSError
        Se il file non puo' essere letto.
    """
    risultato: dict[str, str] = {}
    testo = Path(percorso).read_text(encoding="utf-8")
    for numero, riga in enumerate(testo.splitlines(), start=1):
        riga = riga.strip()
        if not riga or riga.startswith("#"):
            continue
        if "=" not in riga:
            raise ValueError(
                f"Riga {numero} di '{percorso}' non valida: atteso 'chiave=valore', "
                f"ricevuto '{riga}'."
            )
        chiave, valore = riga.split("=", 1)
        risultato[chiave.strip()] = valore.strip()
    return risultato
