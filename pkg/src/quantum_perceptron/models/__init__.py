"""Pacchetto dei modelli dati per quantum_perceptron.

Esporta le dataclass dei dataset, della ricerca di Grover, degli
algoritmi di apprendimento, dei bound e degli esperimenti.
"""

from quantum_perceptron.models.perceptron import (
    Algorithm,
    Protocol,
    PROTOCOLLI,
    COLONNE_RUN_RESULT,
    Hyperplane,
    CostLedger,
    RunResult,
)
from quantum_perceptron.models.dataset import (
    MetodoMargine,
    METODI_MARGINE,
    LabeledPoint,
    LabeledDataset,
    MarginReport,
)
from quantum_perceptron.models.grover import (
    Backend,
    NoiseKind,
    NoiseModel,
    NESSUN_RUMORE,
    GroverInstance,
    QSearchOutcome,
)
from quantum_perceptron.models.bounds import BoundInputs
from quantum_perceptron.models.experiment import (
    ExperimentName,
    ESPERIMENTI,
    PARAMETRI_RICHIESTI,
    ExperimentSpec,
    LooReport,
    TrialRecord,
)

__all__ = [
    # Apprendimento
    "Algorithm",
    "Protocol",
    "PROTOCOLLI",
    "COLONNE_RUN_RESULT",
    "Hyperplane",
    "CostLedger",
    "RunResult",
    # Dataset
    "MetodoMargine",
    "METODI_MARGINE",
    "LabeledPoint",
    "LabeledDataset",
    "MarginReport",
    # Grover
    "Backend",
    "NoiseKind",
    "NoiseModel",
    "NESSUN_RUMORE",
    "GroverInstance",
    "QSearchOutcome",
    # Bound
    "BoundInputs",
    # Esperimenti
    "ExperimentName",
    "ESPERIMENTI",
    "PARAMETRI_RICHIESTI",
    "ExperimentSpec",
    "LooReport",
    "TrialRecord",
]
