"""Fixture condivise per i test del progetto quantum_perceptron."""
import numpy as np
import pytest
from pathlib import Path

from quantum_perceptron.config.settings import IRIS_CSV, OUT_DIR_ENV
from quantum_perceptron.models.dataset import LabeledDataset
from quantum_perceptron.models.perceptron import Hyperplane
from quantum_perceptron.tools.datasets import make_hard_dataset, make_planted_margin_dataset


@pytest.fixture
def hard8() -> LabeledDataset:
    """Dataset Hard con 8 punti (margine 1/sqrt(8))."""
    return make_hard_dataset(8)


@pytest.fixture
def planted_2d() -> LabeledDataset:
    """Dataset piantato in 2-D con 40 punti e margine 0.1."""
    return make_planted_margin_dataset(40, 2, 0.1, seed=3)


@pytest.fixture
def non_separabile() -> LabeledDataset:
    """Due punti opposti con la stessa etichetta: nessun iperpiano per l'origine li separa."""
    return LabeledDataset(np.array([[1.0, 0.0], [-1.0, 0.0], [0.0, 1.0]]), np.array([1, 1, -1]), "xor")


@pytest.fixture
def iperpiani_hard8() -> list[Hyperplane]:
    """+(1,...,1) sbaglia tutti i punti di Hard(8), -(1,...,1) li separa tutti."""
    return [Hyperplane(np.ones(8)), Hyperplane(-np.ones(8))]


@pytest.fixture
def iris_csv() -> Path:
    """Path alla tabella Iris inclusa nel repository."""
    return IRIS_CSV


@pytest.fixture
def out_dir(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> Path:
    """Directory di output temporanea, impostata anche in QPERC_OUT_DIR."""
    cartella = tmp_path / "out"
    monkeypatch.setenv(OUT_DIR_ENV, str(cartella))
    return cartella
