"""Test per lo studio leave-one-out."""
import math

import pytest

from quantum_perceptron.models.experiment import ExperimentSpec
from quantum_perceptron.tools.datasets import make_hard_dataset, make_planted_margin_dataset
from quantum_perceptron.tools.experiments import run_experiment
from quantum_perceptron.tools.loo import COLONNE_LOO, classical_loo, run_loo_study, tabella_loo
from quantum_perceptron.utils.output_files import leggi_chiave_valore


class TestClassicalLoo:
    def test_hard(self):
        """Su Hard ogni punto escluso e' ortogonale all'ipotesi: errore LOO pari a 1."""
        assert classical_loo(make_hard_dataset(6)) == (1.0, 6)


class TestStudio:
    @pytest.fixture
    def report(self):
        ds = make_planted_margin_dataset(20, 2, 0.1, seed=5)
        return run_loo_study(ds, 0.1, 3, seed=1)

    def test_struttura(self, report):
        assert report.n == 20 and report.k == 37
        assert len(report.rischi) == 3 and len(report.separatore_estratto) == 3
        assert all(0.0 <= r <= 1.0 for r in report.rischi)

    def test_bound(self, report):
        assert report.gamma == pytest.approx(0.1, abs=1e-6)
        assert report.generalization == pytest.approx(math.log(10) / (20 * report.gamma))
        assert 0.0 <= report.classical_loo <= 1.0

    def test_deterministico(self, report):
        ds = make_planted_margin_dataset(20, 2, 0.1, seed=5)
        assert run_loo_study(ds, 0.1, 3, seed=1).rischi == report.rischi

    def test_tabella(self, report):
        tabella = tabella_loo(report, 1)
        assert list(tabella.columns) == list(COLONNE_LOO)
        assert tabella["trial_index"].tolist() == [0, 1, 2]

    def test_non_separabile(self, non_separabile):
        with pytest.raises(ValueError, match="separabile"):
            run_loo_study(non_separabile, 0.1, 1)


class TestEsperimento:
    def test_file(self, tmp_path):
        spec = ExperimentSpec.con_default("loo_study", tmp_path, n=12, trials=2)
        tabella = run_experiment(spec)
        assert len(tabella) == 2
        meta = leggi_chiave_valore(tmp_path / "loo_study.meta")
        assert {"mean_loo_risk", "k_over_n", "classical_risk_bound"} <= set(meta)
