"""Perceptron quantistici simulati: online, spazio delle versioni, ibrido.

Tutti e tre usano QSearch come sottoprocedura e verificano
classicamente ogni candidato misurato prima di agire: i falsi positivi
sono impossibili, restano solo i testimoni mancati.

Modello di costo (CostLedger):

- ogni iterazione di Grover sui punti costa 1 oracle_query e 1 wall_step;
- sullo spazio delle versioni un'iterazione costa N, perche' l'oracolo
  valuta tutti gli N punti;
- la verifica di un candidato misurato costa 1 classical_verification
  e 1 wall_step (N sullo spazio delle versioni);
- il controllo di separazione dell'uscita anticipata dell'algoritmo
  online addebita solo oracle_queries.

Con il backend statevector lo spazio di ricerca viene esteso alla
potenza di due successiva con elementi fittizi mai marcati; un indice
fittizio misurato conta come verifica fallita.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence

import numpy as np

from quantum_perceptron.config.constants import BACKENDS
from quantum_perceptron.models.dataset import LabeledDataset
from quantum_perceptron.models.grover import NESSUN_RUMORE, GroverInstance, NoiseModel
from quantum_perceptron.models.perceptron import CostLedger, Hyperplane, RunResult
from quantum_perceptron.tools.bounds import (
    amplification_rounds,
    novikoff_bound,
    online_attempts,
    version_space_attempts,
)
from quantum_perceptron.tools.grover import qsearch
from quantum_perceptron.tools.margin import margin
from quantum_perceptron.utils.rng import Seme, crea_generatore
from quantum_perceptron.utils.validators import valida_aperto_unitario, valida_margine, valida_scelta

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# Supporto comune
# ---------------------------------------------------------------------------

class _Ricerca:
    """QSearch su un insieme marcato, con addebito dei costi nel registro."""

    def __init__(
        self,
        backend: str,
        noise: NoiseModel,
        rng: np.random.Generator,
        ledger: CostLedger,
        costo_unitario: int = 1,
    ) -> None:
        self.backend = backend
        self.noise = noise
        self.rng = rng
        self.ledger = ledger
        self.costo_unitario = costo_unitario

    def istanza(self, maschera: np.ndarray) -> GroverInstance:
        inst = GroverInstance(int(maschera.size), maschera)
        return inst.con_padding() if self.backend == "statevector" else inst

    def cerca(self, inst: GroverInstance, n_reali: int) -> int | None:
        """Un tentativo QSearch; restituisce l'indice 0-based verificato come marcato, o None."""
        esito = qsearch(inst, self.backend, self.noise, self.rng)
        self.ledger.addebita_iterazioni(esito.iterations_used, self.costo_unitario)
        self.ledger.addebita_verifica(self.costo_unitario)
        i = esito.index - 1
        esito.was_marked = i < n_reali and bool(inst.maschera[i])
        return i if esito.was_marked else None


def _prepara(
    backend: str,
    noise: NoiseModel | None,
    epsilon: float,
    seed: Seme | np.random.Generator,
) -> tuple[str, NoiseModel, float, np.random.Generator, int | None]:
    backend = valida_scelta(backend, BACKENDS, "backend")
    epsilon = valida_aperto_unitario(epsilon, "epsilon")
    noise = noise or NESSUN_RUMORE
    seme = seed if isinstance(seed, int) else None
    return backend, noise, epsilon, crea_generatore(seed), seme


def _matrice_iperpiani(hyperplanes: Sequence[Hyperplane], dim: int) -> np.ndarray:
    if len(hyperplanes) == 0:
        raise ValueError("Serve almeno un iperpiano candidato.")
    dimensioni = {h.dim for h in hyperplanes}
    if dimensioni != {dim}:
        raise ValueError(
            f"Dimensione degli iperpiani {sorted(dimensioni)} diversa da quella del dataset ({dim})."
        )
    return np.vstack([h.w for h in hyperplanes])


def _risultato(
    algoritmo: str,
    iperpiano: Hyperplane,
    ds: LabeledDataset,
    ledger: CostLedger,
    seme: int | None,
    gamma: float | None,
    epsilon: float,
    backend: str,
    noise: NoiseModel,
    **metadati: object,
) -> RunResult:
    separa = bool(np.all(ds.matrice_segnata @ iperpiano.w > 0.0))
    risultato = RunResult(
        hyperplane=iperpiano,
        separates=separa,
        ledger=ledger,
        algorithm=algoritmo,
        seed=seme,
        dataset=ds.name,
        n=len(ds),
        gamma=gamma,
        epsilon=epsilon,
        backend=backend,
        noise_kind=noise.kind,
        noise_p=noise.p,
        metadati=dict(metadati),
    )
    logger.debug("%s", risultato)
    return risultato


# ---------------------------------------------------------------------------
# Perceptron quantistico online
# ---------------------------------------------------------------------------

def online_quantum(
    ds: LabeledDataset,
    gamma: float | None,
    epsilon: float,
    backend: str = "analytic",
    noise: NoiseModel | None = None,
    seed: Seme | np.random.Generator = None,
) -> RunResult:
    """Perceptron online con ricerca quantistica dei punti sbagliati.

    Esegue ceil(1/gamma^2) round; in ogni round ceil(log_{3/4}(gamma^2·epsilon))
    tentativi QSearch sui punti classificati male dal w corrente. Ogni
    candidato verificato come sbagliato aggiorna w <- w + y·x. Dopo un
    round senza aggiornamenti un controllo classico completo (N
    oracle_queries) conferma la separazione e termina l'esecuzione.

    Con ``gamma=None`` il margine viene prima stimato con ``margin``; il
    costo della stima (N esami) e' riportato a parte nei metadati come
    ``margin_estimate_cost``.

    Solleva
    -------
    ValueError
        Per gamma o epsilon fuori intervallo, o dati non separabili in
        modalita' automatica.
    """
    backend, noise, epsilon, rng, seme = _prepara(backend, noise, epsilon, seed)
    metadati: dict[str, object] = {}
    if gamma is None:
        stima = margin(ds)
        if not stima.separabile:
            raise ValueError(f"Il dataset '{ds.name}' non e' linearmente separabile: impossibile stimare gamma.")
        gamma = stima.gamma
        metadati = {"gamma_mode": "auto", "margin_estimate_cost": len(ds)}
    gamma = valida_margine(gamma, "gamma")
    if gamma >= 1.0:
        raise ValueError(f"Il parametro 'gamma' deve essere minore di 1. Ricevuto: {gamma}.")

    round_totali = novikoff_bound(gamma)
    tentativi = online_attempts(gamma, epsilon)
    z = ds.matrice_segnata
    n = len(ds)
    w = np.zeros(ds.dim)
    ledger = CostLedger()
    ricerca = _Ricerca(backend, noise, rng, ledger)

    round_eseguiti = 0
    inst = ricerca.istanza(z @ w <= 0.0)
    for _ in range(round_totali):
        round_eseguiti += 1
        aggiornato = False
        for _ in range(tentativi):
            i = ricerca.cerca(inst, n)
            if i is not None:
                w = w + z[i]
                ledger.registra_aggiornamento()
                aggiornato = True
                inst = ricerca.istanza(z @ w <= 0.0)
        if not aggiornato:
            ledger.addebita_controllo(n)
            if inst.marked_count == 0:
                break

    logger.debug("online_quantum su '%s': %d/%d round, %d tentativi per round", ds.name,
                 round_eseguiti, round_totali, tentativi)
    return _risultato("online", Hyperplane(w), ds, ledger, seme, gamma, epsilon, backend, noise,
                      rounds=round_eseguiti, attempts_per_round=tentativi, **metadati)


# ---------------------------------------------------------------------------
# Ricerca nello spazio delle versioni
# ---------------------------------------------------------------------------

def version_space_quantum(
    ds: LabeledDataset,
    hyperplanes: Sequence[Hyperplane],
    epsilon: float,
    backend: str = "analytic",
    noise: NoiseModel | None = None,
    seed: Seme | np.random.Generator = None,
) -> RunResult:
    """Cerca tra gli iperpiani dati uno che separi tutto il campione.

    Esegue ceil(log_{3/4}(epsilon)) tentativi QSearch sui K iperpiani con
    oracolo "w appartiene allo spazio delle versioni"; restituisce il
    primo candidato verificato, altrimenti il primo iperpiano della lista.
    """
    backend, noise, epsilon, rng, seme = _prepara(backend, noise, epsilon, seed)
    w = _matrice_iperpiani(hyperplanes, ds.dim)
    n = len(ds)
    consistenti = np.all(ds.matrice_segnata @ w.T > 0.0, axis=0)

    ledger = CostLedger()
    ricerca = _Ricerca(backend, noise, rng, ledger, costo_unitario=n)
    inst = ricerca.istanza(consistenti)
    scelto: int | None = None
    for _ in range(version_space_attempts(epsilon)):
        scelto = ricerca.cerca(inst, len(hyperplanes))
        if scelto is not None:
            break

    return _risultato("version_space", hyperplanes[scelto if scelto is not None else 0], ds, ledger, seme,
                      None, epsilon, backend, noise, hyperplanes=len(hyperplanes),
                      chosen_index=(scelto + 1) if scelto is not None else 0)


# ---------------------------------------------------------------------------
# Perceptron ibrido
# ---------------------------------------------------------------------------

def hybrid_quantum(
    ds: LabeledDataset,
    hyperplanes: Sequence[Hyperplane],
    epsilon: float,
    backend: str = "analytic",
    noise: NoiseModel | None = None,
    seed: Seme | np.random.Generator = None,
    errori: np.ndarray | None = None,
) -> RunResult:
    """Filtra gli iperpiani campionati cercando un punto classificato male.

    Per ogni w_i, nell'ordine: K2 = amplification_rounds(K, epsilon)
    tentativi QSearch sui punti con y <w_i, x> <= 0. Se nessun tentativo
    trova un punto sbagliato verificato si restituisce w_i; se tutti
    vengono scartati si restituisce w_1. Ogni cambio di iperpiano conta
    come aggiornamento.

    Parametri
    ---------
    errori : np.ndarray, opzionale
        Matrice booleana N x K dei punti classificati male da ciascun
        iperpiano, se gia' calcolata dal chiamante.
    """
    backend, noise, epsilon, rng, seme = _prepara(backend, noise, epsilon, seed)
    k = len(hyperplanes)
    if errori is None:
        errori = ds.matrice_segnata @ _matrice_iperpiani(hyperplanes, ds.dim).T <= 0.0
    elif errori.shape != (len(ds), k):
        raise ValueError(f"La matrice degli errori deve avere forma {(len(ds), k)}, ricevuto {errori.shape}.")

    ripetizioni = amplification_rounds(k, epsilon)
    n = len(ds)
    ledger = CostLedger()
    ricerca = _Ricerca(backend, noise, rng, ledger)

    scelto: int | None = None
    for indice in range(k):
        inst = ricerca.istanza(errori[:, indice])
        scartato = any(ricerca.cerca(inst, n) is not None for _ in range(ripetizioni))
        if not scartato:
            scelto = indice
            break
        ledger.registra_aggiornamento()

    return _risultato("hybrid", hyperplanes[scelto if scelto is not None else 0], ds, ledger, seme,
                      None, epsilon, backend, noise, hyperplanes=k, amplification_rounds=ripetizioni,
                      chosen_index=(scelto + 1) if scelto is not None else 0)
