"""Funzioni di validazione degli input per simulatori ed esperimenti.

Ogni funzione verifica che il valore fornito rientri nell'intervallo
ammesso e restituisce il valore normalizzato. In caso di errore
viene sollevata una ``ValueError`` con un messaggio descrittivo in
italiano che riporta il nome del parametro.
"""

from __future__ import annotations

import math
from collections.abc import Iterable
from numbers import Integral, Real


def _come_reale(valore: object, nome: str) -> float:
    """Converte in float un numero reale finito, rifiutando i booleani."""
    if isinstance(valore, bool) or not isinstance(valore, Real):
        raise ValueError(
            f"Il parametro '{nome}' deve essere un numero "
            f"(ricevuto: {type(valore).__name__})."
        )
    valore = float(valore)
    if not math.isfinite(valore):
        raise ValueError(f"Il parametro '{nome}' deve essere finito. Ricevuto: {valore}.")
    return valore


def valida_positivo(valore: float, nome: str = "valore") -> float:
    """Valida che un valore sia strettamente positivo (> 0).

    Parametri
    ---------
    valore : float
        Il valore da validare.
    nome : str, opzionale
        Nome del parametro, per il messaggio di errore.

    Restituisce
    -----------
    float
        Il valore validato.

    Solleva
    -------
    ValueError
        Se il valore non e' un numero finito positivo.
    """
    valore = _come_reale(valore, nome)

    if valore <= 0:
        raise ValueError(
            f"Il parametro '{nome}' deve essere strettamente positivo (> 0). "
            f"Ricevuto: {valore}."
        )

    return valore


def valida_non_negativo(valore: float, nome: str = "valore") -> float:
    """Valida che un valore sia non negativo (>= 0)."""
    valore = _come_reale(valore, nome)

    if valore < 0:
        raise ValueError(
            f"Il parametro '{nome}' non puo' essere negativo. "
            f"Ricevuto: {valore}."
        )

    return valore


def valida_probabilita(valore: float, nome: str = "p") -> float:
    """Valida una probabilita' nell'intervallo chiuso [0, 1].

    Parametri
    ---------
    valore : float
        Il valore da validare.
    nome : str, opzionale
        Nome del parametro, per il messaggio di errore.

    Restituisce
    -----------
    float
        Il valore validato.

    Solleva
    -------
    ValueError
        Se il valore non e' nell'intervallo [0, 1].
    """
    valore = _come_reale(valore, nome)

    if valore < 0.0 or valore > 1.0:
        raise ValueError(
            f"Il parametro '{nome}' deve essere compreso tra 0 e 1. "
            f"Ricevuto: {valore}."
        )

    return valore


def valida_aperto_unitario(valore: float, nome: str = "epsilon") -> float:
    """Valida un valore nell'intervallo aperto (0, 1).

    Usata per la probabilita' di fallimento epsilon e per il margine
    gamma degli algoritmi quantistici.

    Solleva
    -------
    ValueError
        Se il valore e' <= 0 oppure >= 1.
    """
    valore = _come_reale(valore, nome)

    if not 0.0 < valore < 1.0:
        raise ValueError(
            f"Il parametro '{nome}' deve essere compreso tra 0 e 1 (estremi esclusi). "
            f"Ricevuto: {valore}."
        )

    return valore


def valida_margine(valore: float, nome: str = "gamma") -> float:
    """Valida un margine nell'intervallo (0, 1]."""
    valore = _come_reale(valore, nome)

    if not 0.0 < valore <= 1.0:
        raise ValueError(
            f"Il parametro '{nome}' deve essere compreso tra 0 (escluso) e 1 (incluso). "
            f"Ricevuto: {valore}."
        )

    return valore


def valida_intero(valore: int, nome: str = "n", minimo: int = 1) -> int:
    """Valida un intero maggiore o uguale a ``minimo``.

    Parametri
    ---------
    valore : int
        Il valore da validare (sono ammessi anche gli interi numpy).
    nome : str, opzionale
        Nome del parametro, per il messaggio di errore.
    minimo : int, opzionale
        Valore minimo ammesso (default: 1).

    Restituisce
    -----------
    int
        Il valore come ``int`` Python.

    Solleva
    -------
    ValueError
        Se il valore non e' un intero o e' minore di ``minimo``.
    """
    if isinstance(valore, bool) or not isinstance(valore, Integral):
        raise ValueError(
            f"Il parametro '{nome}' deve essere un intero (ricevuto: {type(valore).__name__})."
        )

    valore = int(valore)

    if valore < minimo:
        raise ValueError(
            f"Il parametro '{nome}' deve essere maggiore o uguale a {minimo}. "
            f"Ricevuto: {valore}."
        )

    return valore


def valida_scelta(valore: str, ammessi: Iterable[str], nome: str = "valore") -> str:
    """Valida che una stringa appartenga a un insieme di valori ammessi.

    Il confronto ignora maiuscole e spazi; i trattini sono equiparati
    ai trattini bassi (``bit-flip`` equivale a ``bit_flip``).
    """
    ammessi = tuple(ammessi)
    if not isinstance(valore, str):
        raise ValueError(
            f"Il parametro '{nome}' deve essere una stringa (ricevuto: {type(valore).__name__})."
        )

    normalizzato = valore.strip().lower().replace("-", "_")
    if normalizzato not in ammessi:
        raise ValueError(
            f"Valore '{valore}' non ammesso per il parametro '{nome}'. "
            f"Valori validi: {list(ammessi)}"
        )

    return normalizzato
