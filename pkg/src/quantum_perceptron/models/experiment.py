"""Modelli dati degli esperimenti: specifica e record di una prova.

Ogni esperimento ha un nome fisso e un insieme di parametri richiesti.
``ExperimentSpec.con_default`` completa i parametri mancanti con i
valori di ``config.constants``; i valori testuali (riga di comando,
file di configurazione) vengono convertiti e validati qui, in un solo
punto.
"""

from __future__ import annotations

from collections.abc import Callable, Mapping
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Literal

from quantum_perceptron.config.constants import (
    BACKENDS,
    DEFAULT_SEED,
    TIPI_RUMORE,
    ParametriFig1,
    ParametriFig2,
    ParametriFig3,
    ParametriLemma1,
    ParametriLOO,
)
from quantum_perceptron.config.settings import IRIS_CSV, directory_output
from quantum_perceptron.models.perceptron import PROTOCOLLI, RunResult
from quantum_perceptron.utils.math_helpers import media_errore_standard
from quantum_perceptron.utils.validators import (
    valida_aperto_unitario,
    valida_intero,
    valida_positivo,
    valida_probabilita,
    valida_scelta,
)

ExperimentName = Literal[
    "fig1_n", "fig1_gamma", "fig2_ratio", "fig3_noise", "lemma1_mc", "loo_study", "hard_steps"
]

ESPERIMENTI: tuple[str, ...] = (
    "fig1_n",
    "fig1_gamma",
    "fig2_ratio",
    "fig3_noise",
    "lemma1_mc",
    "loo_study",
    "hard_steps",
)


# ---------------------------------------------------------------------------
# Conversione e validazione dei parametri
# ---------------------------------------------------------------------------

def _intero(minimo: int) -> Callable[[Any, str], int]:
    def conv(valore: Any, nome: str) -> int:
        if isinstance(valore, str):
            try:
                valore = int(float(valore)) if "e" in valore.lower() else int(valore)
            except ValueError as exc:
                raise ValueError(f"Il parametro '{nome}' deve essere un intero, ricevuto '{valore}'.") from exc
        elif isinstance(valore, float) and valore.is_integer():
            valore = int(valore)
        return valida_intero(valore, nome, minimo)
    return conv


def _reale(validatore: Callable[[float, str], float]) -> Callable[[Any, str], float]:
    def conv(valore: Any, nome: str) -> float:
        if isinstance(valore, str):
            try:
                valore = float(valore)
            except ValueError as exc:
                raise ValueError(f"Il parametro '{nome}' deve essere un numero, ricevuto '{valore}'.") from exc
        return validatore(valore, nome)
    return conv


def _scelta(ammessi: tuple[str, ...]) -> Callable[[Any, str], str]:
    return lambda valore, nome: valida_scelta(valore, ammessi, nome)


def _lista_reali(valore: Any, nome: str) -> tuple[float, ...]:
    if isinstance(valore, str):
        parti = [p for p in valore.replace(";", ",").split(",") if p.strip()]
        valore = [float(p) for p in parti]
    valori = tuple(valida_aperto_unitario(float(v), nome) for v in valore)
    if not valori:
        raise ValueError(f"Il parametro '{nome}' deve contenere almeno un valore.")
    return valori


def _lista_rumori(valore: Any, nome: str) -> tuple[str, ...]:
    if isinstance(valore, str):
        valore = [p for p in valore.split(",") if p.strip()]
    return tuple(valida_scelta(v, TIPI_RUMORE, nome) for v in valore)


def _testo(valore: Any, nome: str) -> str:
    testo = str(valore).strip()
    if not testo:
        raise ValueError(f"Il parametro '{nome}' non puo' essere vuoto.")
    return testo


_CONVERSIONI: dict[str, Callable[[Any, str], Any]] = {
    "epsilon": _reale(valida_aperto_unitario),
    "gamma": _reale(valida_aperto_unitario),
    "n": _intero(1),
    "d": _intero(2),
    "from": _reale(valida_positivo),
    "to": _reale(valida_positivo),
    "points": _intero(1),
    "trials": _intero(1),
    "seed": _intero(0),
    "iris_path": _testo,
    "iris_fraction": _reale(valida_aperto_unitario),
    "class_a": _testo,
    "class_b": _testo,
    "hard_n": _intero(2),
    "hard_fraction": _reale(valida_aperto_unitario),
    "backend": _scelta(BACKENDS),
    "noise": _scelta(TIPI_RUMORE),
    "noise_kinds": _lista_rumori,
    "p": _reale(valida_probabilita),
    "iris_protocol": _scelta(PROTOCOLLI),
    "hard_protocol": _scelta(PROTOCOLLI),
    "n_items": _intero(2),
    "m_max": _intero(1),
    "gammas": _lista_reali,
    "train_fraction": _reale(valida_probabilita),
}


def _default(nome: str) -> dict[str, Any]:
    if nome == "fig1_n":
        f1 = ParametriFig1()
        return {"epsilon": f1.epsilon, "gamma": f1.gamma_fisso, "from": f1.n_da, "to": f1.n_a,
                "points": f1.punti}
    if nome == "fig1_gamma":
        f1 = ParametriFig1()
        return {"epsilon": f1.epsilon, "n": f1.n_fisso, "from": f1.inv_gamma_da,
                "to": f1.inv_gamma_a, "points": f1.punti}
    if nome == "fig2_ratio":
        f2 = ParametriFig2()
        return {"epsilon": f2.epsilon, "trials": f2.prove, "seed": DEFAULT_SEED,
                "iris_path": str(IRIS_CSV), "iris_fraction": f2.frazione_iris,
                "class_a": f2.classe_a, "class_b": f2.classe_b, "hard_n": f2.n_hard,
                "hard_fraction": f2.frazione_hard, "backend": f2.backend, "noise": "none",
                "p": 0.0, "iris_protocol": f2.protocollo_iris,
                "hard_protocol": f2.protocollo_hard}
    if nome == "fig3_noise":
        f3 = ParametriFig3()
        return {"n_items": f3.n_items, "p": f3.noise_p, "m_max": f3.m_max, "trials": f3.prove,
                "seed": DEFAULT_SEED, "backend": f3.backend, "noise_kinds": f3.rumori}
    if nome == "lemma1_mc":
        l1 = ParametriLemma1()
        return {"gammas": l1.gamma, "trials": l1.prove, "seed": DEFAULT_SEED}
    if nome == "loo_study":
        lo = ParametriLOO()
        return {"n": lo.n, "d": lo.dimensione, "gamma": lo.gamma, "epsilon": lo.epsilon,
                "trials": lo.prove, "seed": DEFAULT_SEED, "backend": lo.backend,
                "noise": "none", "p": 0.0}
    return {"n": 1000, "train_fraction": 0.5}


PARAMETRI_RICHIESTI: dict[str, frozenset[str]] = {
    nome: frozenset(_default(nome)) for nome in ESPERIMENTI
}
"""Parametri richiesti per ciascun esperimento."""


# ---------------------------------------------------------------------------
# Dataclass
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ExperimentSpec:
    """Specifica completa di un esperimento.

    Attributes:
        name: Nome dell'esperimento (uno di ESPERIMENTI).
        params: Parametri convertiti e validati.
        output_dir: Directory dove scrivere ``<name>.csv`` e ``<name>.meta``.
    """

    name: str
    params: Mapping[str, Any]
    output_dir: Path = field(default_factory=directory_output)

    def __post_init__(self) -> None:
        if self.name not in ESPERIMENTI:
            raise ValueError(f"Esperimento '{self.name}' sconosciuto. Valori validi: {list(ESPERIMENTI)}")

        richiesti = PARAMETRI_RICHIESTI[self.name]
        mancanti = sorted(richiesti - set(self.params))
        if mancanti:
            raise ValueError(f"Parametri mancanti per l'esperimento '{self.name}': {mancanti}")
        estranei = sorted(set(self.params) - richiesti)
        if estranei:
            raise ValueError(f"Parametri non riconosciuti per l'esperimento '{self.name}': {estranei}")

        convertiti = {chiave: _CONVERSIONI[chiave](self.params[chiave], chiave) for chiave in sorted(richiesti)}
        if "from" in convertiti and convertiti["from"] > convertiti["to"]:
            raise ValueError(
                f"Intervallo di sweep vuoto: from={convertiti['from']} > to={convertiti['to']}."
            )
        object.__setattr__(self, "params", convertiti)
        object.__setattr__(self, "output_dir", Path(self.output_dir))

    @classmethod
    def con_default(
        cls,
        name: str,
        output_dir: Path | str | None = None,
        **params: Any,
    ) -> ExperimentSpec:
        """Specifica con i parametri di default sovrascritti da ``params``."""
        if name not in ESPERIMENTI:
            raise ValueError(f"Esperimento '{name}' sconosciuto. Valori validi: {list(ESPERIMENTI)}")
        completi = {**_default(name), **params}
        return cls(name, completi, Path(output_dir) if output_dir is not None else directory_output())

    def __getitem__(self, chiave: str) -> Any:
        return self.params[chiave]


@dataclass(frozen=True)
class TrialRecord:
    """Esito di una singola prova di un esperimento.

    Attributes:
        experiment: Nome dell'esperimento.
        trial_index: Indice della prova (univoco nell'esperimento).
        seed: Seed derivato del flusso della prova.
        payload: RunResult oppure misura scalare.
    """

    experiment: str
    trial_index: int
    seed: int | None
    payload: RunResult | float


@dataclass(frozen=True)
class LooReport:
    """Risultato dello studio leave-one-out del perceptron ibrido.

    Attributes:
        dataset: Nome del campione S.
        n: Numero di punti N.
        gamma: Margine del campione.
        epsilon: Probabilita' di fallimento.
        k: Numero di iperpiani campionati per prova.
        rischi: Errore leave-one-out di ciascuna prova.
        separatore_estratto: Per ogni prova, True se almeno uno dei K
            iperpiani separa l'intero campione.
        classical_loo: Errore leave-one-out del perceptron classico.
        classical_bound: Bound min(M(S), 1/gamma^2)/(N+1) del perceptron classico.
        generalization: Bound ln(1/epsilon)/(N·gamma) valutato con N-1 punti.
    """

    dataset: str
    n: int
    gamma: float
    epsilon: float
    k: int
    rischi: tuple[float, ...]
    separatore_estratto: tuple[bool, ...]
    classical_loo: float
    classical_bound: float
    generalization: float

    @property
    def k_su_n(self) -> float:
        return self.k / self.n

    @property
    def rischio_medio(self) -> float:
        return media_errore_standard(self.rischi)[0]

    @property
    def errore_standard(self) -> float:
        return media_errore_standard(self.rischi)[1]
