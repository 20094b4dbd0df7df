"""Backend statevector della ricerca di Grover.

Simula esplicitamente le 2^q ampiezze: l'oracolo R cambia il segno
degli elementi marcati, la diffusione G riflette le ampiezze attorno
alla media. I canali di rumore sono realizzati come traiettorie
stocastiche (una sola storia pura per campione) e vengono applicati
dopo ogni iterazione completa G·R:

- ``bit_flip``: per ogni qubit, con probabilita' p, permuta le ampiezze
  invertendo quel bit di ogni indice di base;
- ``depolarizing``: con probabilita' p sostituisce lo stato con uno
  stato di base scelto uniformemente.

Le statistiche di misura mediate sulle traiettorie coincidono con
quelle del canale; la memoria resta 2^q invece di 4^q.
"""

from __future__ import annotations

import logging

import numpy as np

from quantum_perceptron.config.constants import STATEVECTOR_MAX_QUBIT, TOLLERANZA_STATO
from quantum_perceptron.models.grover import GroverInstance, NoiseModel

logger = logging.getLogger(__name__)

_MAX_ELEMENTI_BLOCCO = 1 << 22
"""Numero massimo di ampiezze simulate insieme nel campionamento a blocchi."""


class UnsupportedBackendError(ValueError):
    """Combinazione di backend, dimensione e rumore non simulabile."""


def qubit_istanza(inst: GroverInstance) -> int:
    """Restituisce q con N = 2^q, verificando i limiti del backend.

    Solleva
    -------
    UnsupportedBackendError
        Se N non e' una potenza di due o se q supera il limite di memoria.
    """
    q = inst.qubit
    if q is None:
        raise UnsupportedBackendError(
            f"Il backend statevector richiede N = 2^q con q >= 1 (ricevuto N = {inst.n_items}); "
            "estendere l'istanza con GroverInstance.con_padding()."
        )
    if q > STATEVECTOR_MAX_QUBIT:
        raise UnsupportedBackendError(
            f"Il backend statevector supporta al massimo {STATEVECTOR_MAX_QUBIT} qubit "
            f"(richiesti {q})."
        )
    return q


# ---------------------------------------------------------------------------
# Stato singolo
# ---------------------------------------------------------------------------

class Statevector:
    """Vettore di stato di q qubit, posseduto da una sola esecuzione.

    Args:
        amplitudes: Vettore complesso di lunghezza 2^q con norma 1.
    """

    def __init__(self, amplitudes: np.ndarray) -> None:
        ampiezze = np.asarray(amplitudes, dtype=np.complex128).reshape(-1)
        n = ampiezze.size
        if n < 2 or n & (n - 1):
            raise UnsupportedBackendError(f"La lunghezza dello stato deve essere 2^q, ricevuto {n}.")
        self.amplitudes = ampiezze.copy()
        self.qubit = n.bit_length() - 1
        self._indici = np.arange(n)
        self.verifica_norma()

    @classmethod
    def uniforme(cls, n: int) -> Statevector:
        """Stato iniziale psi_0 = sovrapposizione uniforme su N elementi."""
        return cls(np.full(n, 1.0 / np.sqrt(n), dtype=np.complex128))

    def __len__(self) -> int:
        return int(self.amplitudes.size)

    # -- operatori -----------------------------------------------------------

    def applica_oracolo(self, maschera: np.ndarray) -> None:
        """R: cambia segno alle ampiezze degli elementi marcati."""
        self.amplitudes[maschera] *= -1.0

    def applica_diffusione(self) -> None:
        """G = 2 psi_0 psi_0^T - 1: riflessione attorno alla media."""
        self.amplitudes = 2.0 * self.amplitudes.mean() - self.amplitudes

    def applica_bit_flip(self, p: float, rng: np.random.Generator) -> None:
        bit = rng.random(self.qubit) < p
        if bit.any():
            xor = int(np.dot(bit.astype(np.int64), 1 << np.arange(self.qubit)))
            self.amplitudes = self.amplitudes[self._indici ^ xor]

    def applica_depolarizzazione(self, p: float, rng: np.random.Generator) -> None:
        if rng.random() < p:
            k = int(rng.integers(len(self)))
            self.amplitudes = np.zeros(len(self), dtype=np.complex128)
            self.amplitudes[k] = 1.0

    def applica_rumore(self, noise: NoiseModel, rng: np.random.Generator) -> None:
        if not noise.attivo:
            return
        if noise.kind == "bit_flip":
            self.applica_bit_flip(noise.p, rng)
        else:
            self.applica_depolarizzazione(noise.p, rng)
        # disattivato con python -O
        if __debug__:
            self.verifica_norma()

    def applica_iterazione(
        self,
        maschera: np.ndarray,
        noise: NoiseModel | None = None,
        rng: np.random.Generator | None = None,
    ) -> None:
        """Un passo completo: rumore(G(R(stato)))."""
        self.applica_oracolo(maschera)
        self.applica_diffusione()
        if noise is not None and noise.attivo:
            if rng is None:
                raise ValueError("Il rumore richiede un generatore casuale esplicito.")
            self.applica_rumore(noise, rng)

    # -- lettura -------------------------------------------------------------

    def probabilita(self) -> np.ndarray:
        return np.abs(self.amplitudes) ** 2

    def probabilita_marcata(self, maschera: np.ndarray) -> float:
        return float(self.probabilita()[maschera].sum())

    def norma(self) -> float:
        return float(np.sqrt(self.probabilita().sum()))

    def verifica_norma(self, tolleranza: float = TOLLERANZA_STATO) -> None:
        """Solleva ``ArithmeticError`` se la norma devia da 1 oltre la tolleranza."""
        deriva = abs(self.norma() - 1.0)
        if deriva > tolleranza:
            raise ArithmeticError(f"Norma dello stato fuori tolleranza: deriva {deriva:.3e}")

    def misura(self, rng: np.random.Generator) -> int:
        """Misura nella base computazionale; restituisce l'indice 1-based."""
        prob = self.probabilita()
        return int(rng.choice(len(self), p=prob / prob.sum())) + 1


# ---------------------------------------------------------------------------
# Operazioni del backend
# ---------------------------------------------------------------------------

def statevector_marked_probability(inst: GroverInstance, j: int) -> float:
    """Probabilita' esatta di misurare un elemento marcato dopo j iterazioni senza rumore."""
    qubit_istanza(inst)
    if j < 0:
        raise ValueError(f"Il numero di iterazioni non puo' essere negativo: {j}")
    stato = Statevector.uniforme(inst.n_items)
    for _ in range(j):
        stato.applica_iterazione(inst.maschera)
    return stato.probabilita_marcata(inst.maschera)


def statevector_grover_sample(
    inst: GroverInstance,
    j: int,
    noise: NoiseModel,
    rng: np.random.Generator,
) -> int:
    """Prepara psi_0, applica j iterazioni rumorose e misura un indice (1-based).

    Solleva
    -------
    UnsupportedBackendError
        Se N non e' una potenza di due o supera il limite di qubit.
    """
    qubit_istanza(inst)
    if j < 0:
        raise ValueError(f"Il numero di iterazioni non puo' essere negativo: {j}")
    stato = Statevector.uniforme(inst.n_items)
    for _ in range(j):
        stato.applica_iterazione(inst.maschera, noise, rng)
    return stato.misura(rng)


def campiona_traiettorie(
    inst: GroverInstance,
    iterazioni: np.ndarray,
    noise: NoiseModel,
    rng: np.random.Generator,
) -> np.ndarray:
    """Campiona una traiettoria per ogni elemento di ``iterazioni``.

    Le traiettorie sono simulate insieme, una riga per traiettoria; ogni
    riga smette di evolvere dopo il proprio numero di iterazioni. Le
    ampiezze restano reali perche' R, G e i due canali le mantengono tali.

    Restituisce
    -----------
    np.ndarray
        Indici misurati (1-based), uno per traiettoria.
    """
    q = qubit_istanza(inst)
    n = inst.n_items
    iterazioni = np.asarray(iterazioni, dtype=np.int64).reshape(-1)
    if np.any(iterazioni < 0):
        raise ValueError("Il numero di iterazioni non puo' essere negativo.")

    segno = np.where(inst.maschera, -1.0, 1.0)
    indici = np.arange(n)
    pesi_bit = 1 << np.arange(q)
    risultati = np.empty(iterazioni.size, dtype=np.int64)
    righe_blocco = max(1, _MAX_ELEMENTI_BLOCCO // n)

    for inizio in range(0, iterazioni.size, righe_blocco):
        m = iterazioni[inizio:inizio + righe_blocco]
        righe = m.size
        stato = np.full((righe, n), 1.0 / np.sqrt(n))

        for passo in range(int(m.max(initial=0))):
            attive = m > passo
            nuovo = stato * segno
            nuovo = 2.0 * nuovo.mean(axis=1, keepdims=True) - nuovo
            if noise.attivo and noise.kind == "bit_flip":
                xor = (rng.random((righe, q)) < noise.p).astype(np.int64) @ pesi_bit
                nuovo = np.take_along_axis(nuovo, indici[None, :] ^ xor[:, None], axis=1)
            elif noise.attivo:
                evento = rng.random(righe) < noise.p
                basi = rng.integers(n, size=righe)
                nuovo[evento] = 0.0
                nuovo[evento, basi[evento]] = 1.0
            stato = np.where(attive[:, None], nuovo, stato)

        cumulata = np.cumsum(stato ** 2, axis=1)
        soglie = rng.random(righe) * cumulata[:, -1]
        scelti = np.minimum((cumulata < soglie[:, None]).sum(axis=1), n - 1)
        risultati[inizio:inizio + righe] = scelti + 1

    logger.debug("Campionate %d traiettorie statevector (N=%d, rumore=%s)", iterazioni.size, n, noise.kind)
    return risultati
