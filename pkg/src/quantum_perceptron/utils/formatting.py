"""Utilita' di formattazione per numeri, tabelle Markdown e celle CSV."""

from __future__ import annotations

import math


# ---------------------------------------------------------------------------
# Funzioni di formattazione
# ---------------------------------------------------------------------------

def formatta_percentuale(valore: float, decimali: int = 2) -> str:
    """Formatta un valore decimale come percentuale, es. ``0.1234`` -> ``"12.34%"``."""
    return f"{valore * 100:.{decimali}f}%"


def formatta_numero(valore: float, decimali: int = 4) -> str:
    """Formatta un numero con separatore delle migliaia.

    Parametri
    ---------
    valore : float
        Il numero da formattare.
    decimali : int, opzionale
        Numero di cifre decimali (default: 4).

    Restituisce
    -----------
    str
        Stringa formattata, es. ``"1,234.5600"``.
    """
    return f"{valore:,.{decimali}f}"


def formatta_cella(valore: object) -> str:
    """Rappresentazione testuale stabile di un valore per CSV e file .meta.

    I float usano ``repr`` (17 cifre significative, round-trip esatto),
    i booleani sono scritti in minuscolo come nei file di output.
    """
    if isinstance(valore, bool):
        return "true" if valore else "false"
    if isinstance(valore, float):
        if math.isnan(valore):
            return "nan"
        return repr(valore)
    if valore is None:
        return ""
    return str(valore)


# ---------------------------------------------------------------------------
# Generazione tabella Markdown
# ---------------------------------------------------------------------------

def tabella_markdown(
    headers: list[str],
    rows: list[list[str]],
    allineamento: list[str] | None = None,
) -> str:
    """Genera una tabella in formato Markdown.

    Parametri
    ---------
    headers : list[str]
        Lista delle intestazioni di colonna.
    rows : list[list[str]]
        Lista di righe, ciascuna una lista di stringhe.
    allineamento : list[str] | None, opzionale
        ``"left"``/``"l"``, ``"right"``/``"r"`` o ``"center"``/``"c"``
        per ogni colonna. Se ``None`` tutte le colonne sono a sinistra.

    Restituisce
    -----------
    str
        La tabella Markdown come stringa.

    Solleva
    -------
    ValueError
        Se una riga o l'allineamento non hanno lo stesso numero di
        colonne delle intestazioni.
    """
    num_colonne = len(headers)

    if allineamento is None:
        allineamento = ["left"] * num_colonne
    elif len(allineamento) != num_colonne:
        raise ValueError(
            f"Il numero di allineamenti ({len(allineamento)}) non corrisponde "
            f"al numero di colonne ({num_colonne})."
        )

    for i, riga in enumerate(rows):
        if len(riga) != num_colonne:
            raise ValueError(
                f"La riga {i} ha {len(riga)} colonne, "
                f"ma le intestazioni ne hanno {num_colonne}."
            )

    larghezze = [max(len(h), 3) for h in headers]
    for riga in rows:
        for j, cella in enumerate(riga):
            larghezze[j] = max(larghezze[j], len(cella))

    separatori: list[str] = []
    for larghezza, allin in zip(larghezze, allineamento):
        codice = allin.lower().strip()
        if codice in ("right", "r"):
            separatori.append("-" * (larghezza - 1) + ":")
        elif codice in ("center", "c"):
            separatori.append(":" + "-" * (larghezza - 2) + ":")
        else:
            separatori.append(":" + "-" * (larghezza - 1))

    def _riga_md(celle: list[str]) -> str:
        return "| " + " | ".join(c.ljust(larghezze[j]) for j, c in enumerate(celle)) + " |"

    linee = [_riga_md(headers), "| " + " | ".join(separatori) + " |"]
    linee.extend(_riga_md(riga) for riga in rows)
    return "\n".join(linee)
