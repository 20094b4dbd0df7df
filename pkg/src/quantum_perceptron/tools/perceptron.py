"""Perceptron classico online e verifica classica di un separatore.

Convenzione di errore: un punto e' classificato male se y <w, x> <= 0,
quindi l'iperpiano nullo sbaglia tutti i punti. Il successo richiede la
separazione stretta y <w, x> > 0 per ogni punto.
"""

from __future__ import annotations

import logging

import numpy as np

from quantum_perceptron.config.constants import DEFAULT_MAX_ESAMINAZIONI
from quantum_perceptron.models.dataset import LabeledDataset
from quantum_perceptron.models.perceptron import PROTOCOLLI, CostLedger, Hyperplane, RunResult
from quantum_perceptron.tools.bounds import novikoff_bound
from quantum_perceptron.utils.validators import valida_intero, valida_scelta

logger = logging.getLogger(__name__)


class CapExceededError(RuntimeError):
    """Il perceptron classico ha superato il limite di aggiornamenti o di esami."""


def _vettore(w: Hyperplane | np.ndarray) -> np.ndarray:
    return w.w if isinstance(w, Hyperplane) else np.asarray(w, dtype=float).reshape(-1)


def verify_separator(
    w: Hyperplane | np.ndarray,
    ds: LabeledDataset,
    ledger: CostLedger | None = None,
) -> bool:
    """True se y_i <w, x_i> > 0 per ogni punto del dataset.

    Se viene passato un registro, addebita |ds| oracle_queries.

    Solleva
    -------
    ValueError
        Se la dimensione di ``w`` non coincide con quella del dataset.
    """
    vettore = _vettore(w)
    if len(ds) and vettore.size != ds.dim:
        raise ValueError(
            f"Dimensione dell'iperpiano ({vettore.size}) diversa da quella del dataset ({ds.dim})."
        )
    if ledger is not None:
        ledger.addebita_controllo(len(ds))
    return bool(np.all(ds.matrice_segnata @ vettore > 0.0))


def classical_online(
    ds: LabeledDataset,
    protocol: str = "stream_until_clean",
    gamma: float | None = None,
    max_esaminazioni: int = DEFAULT_MAX_ESAMINAZIONI,
) -> RunResult:
    """Perceptron online a partire da w = 0.

    Protocolli:

    - ``stream_until_clean``: passate complete, aggiornando su ogni punto
      sbagliato, fino a una passata senza errori;
    - ``one_update_per_pass``: ogni passata esamina tutti i punti ma
      applica solo l'aggiornamento del primo punto sbagliato; si ferma
      dopo una passata pulita.

    Ogni esame di un punto addebita 1 oracle_query e 1 wall_step.

    Parametri
    ---------
    ds : LabeledDataset
        Dataset normalizzato.
    protocol : str
        Uno dei protocolli sopra.
    gamma : float, opzionale
        Margine noto: limita gli aggiornamenti a ceil(1/gamma^2) + 1.
    max_esaminazioni : int
        Limite sugli esami dei punti.

    Solleva
    -------
    CapExceededError
        Se uno dei due limiti viene superato.
    """
    protocol = valida_scelta(protocol, PROTOCOLLI, "protocol")
    max_esaminazioni = valida_intero(max_esaminazioni, "max_esaminazioni", minimo=1)
    if len(ds) == 0:
        raise ValueError("Il perceptron richiede almeno un punto di training.")
    limite_aggiornamenti = novikoff_bound(gamma) + 1 if gamma is not None else None

    z = ds.matrice_segnata
    n = len(ds)
    w = np.zeros(ds.dim)
    ledger = CostLedger()

    def aggiorna(i: int) -> None:
        nonlocal w
        w = w + z[i]
        ledger.registra_aggiornamento()
        if limite_aggiornamenti is not None and ledger.updates > limite_aggiornamenti:
            raise CapExceededError(
                f"Superato il limite di {limite_aggiornamenti} aggiornamenti su '{ds.name}' "
                f"(gamma={gamma})."
            )

    def controlla_esami() -> None:
        if ledger.oracle_queries > max_esaminazioni:
            raise CapExceededError(
                f"Superato il limite di {max_esaminazioni} esami su '{ds.name}' "
                f"dopo {ledger.updates} aggiornamenti."
            )

    passate = 0
    while True:
        passate += 1
        errori_passata = 0
        if protocol == "one_update_per_pass":
            errati = np.flatnonzero(z @ w <= 0.0)
            ledger.addebita_esami(n)
            controlla_esami()
            if errati.size:
                errori_passata = 1
                aggiorna(int(errati[0]))
        else:
            inizio = 0
            while inizio < n:
                errati = np.flatnonzero(z[inizio:] @ w <= 0.0)
                if errati.size == 0:
                    ledger.addebita_esami(n - inizio)
                    controlla_esami()
                    break
                i = inizio + int(errati[0])
                ledger.addebita_esami(i - inizio + 1)
                controlla_esami()
                aggiorna(i)
                errori_passata += 1
                inizio = i + 1
        if errori_passata == 0:
            break

    logger.debug(
        "Perceptron classico (%s) su '%s': %d passate, %d aggiornamenti, %d esami",
        protocol, ds.name, passate, ledger.updates, ledger.wall_steps,
    )
    iperpiano = Hyperplane(w)
    return RunResult(
        hyperplane=iperpiano,
        separates=verify_separator(iperpiano, ds),
        ledger=ledger,
        algorithm="classical",
        dataset=ds.name,
        n=n,
        gamma=gamma,
        metadati={"protocol": protocol, "passes": passate},
    )
