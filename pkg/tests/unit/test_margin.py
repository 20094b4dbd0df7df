"""Test per il calcolo del margine."""
import math

import numpy as np
import pytest

from quantum_perceptron.tools.datasets import DatasetError, make_hard_dataset, make_wedge_dataset
from quantum_perceptron.tools.margin import margin, margin_sweep_2d, margine_analitico, margine_di


class TestMarginHard:
    def test_analitico(self):
        """Margine di Hard(n) = 1/sqrt(n) con testimone -(1,...,1)/sqrt(n)."""
        report = margin(make_hard_dataset(1000))
        assert report.method == "analytic"
        assert report.gamma == pytest.approx(1 / math.sqrt(1000), abs=1e-9)
        assert report.verifica(make_hard_dataset(1000))

    def test_ottimizzatore_concorde(self, hard8):
        """L'ottimizzatore ritrova il valore analitico."""
        report = margin(hard8, "optimizer")
        assert report.method == "optimizer"
        assert report.gamma == pytest.approx(1 / math.sqrt(8), abs=1e-7)

    def test_analitico_solo_hard(self, planted_2d):
        with pytest.raises(ValueError, match="Hard"):
            margine_analitico(planted_2d)


class TestMarginGenerico:
    def test_non_separabile(self, non_separabile):
        """Dati non separabili: gamma = 0 e nessun testimone."""
        report = margin(non_separabile)
        assert report.gamma == 0.0 and report.witness is None and not report.separabile

    def test_testimone_unitario(self, planted_2d):
        report = margin(planted_2d)
        assert report.witness.norma == pytest.approx(1.0)
        assert margine_di(report.witness.w, planted_2d) == pytest.approx(report.gamma)

    def test_vuoto(self):
        from quantum_perceptron.models.dataset import LabeledDataset
        with pytest.raises(DatasetError):
            margin(LabeledDataset(np.zeros((0, 2)), np.zeros(0, dtype=int)), "optimizer")

    def test_metodo_sconosciuto(self, hard8):
        with pytest.raises(ValueError):
            margin(hard8, "svm")


class TestScansione2D:
    def test_cuneo(self):
        """Sul cuneo la scansione angolare trova sin(alpha) con testimone (0, 1)."""
        alfa = math.asin(0.0998)
        report = margin(make_wedge_dataset(alfa), "exhaustive-2d")
        assert report.method == "exhaustive-2d"
        assert report.gamma == pytest.approx(0.0998, abs=1e-8)
        np.testing.assert_allclose(report.witness.w, [0.0, 1.0], atol=1e-6)

    def test_concorde_con_ottimizzatore(self, planted_2d):
        assert margin_sweep_2d(planted_2d).gamma == pytest.approx(margin(planted_2d).gamma, abs=1e-7)

    def test_solo_2d(self, hard8):
        with pytest.raises(ValueError, match="2-D"):
            margin_sweep_2d(hard8)
