"""Test per i runner degli esperimenti e i file di risultato."""
import math

import pandas as pd
import pytest

from quantum_perceptron import __version__
from quantum_perceptron.models.experiment import ExperimentSpec
from quantum_perceptron.tools.experiments import run_experiment, run_lemma1_mc
from quantum_perceptron.tools.statevector import UnsupportedBackendError
from quantum_perceptron.utils.output_files import leggi_chiave_valore


class TestHardSteps:
    def test_file_scritti(self, tmp_path):
        """CSV con i passi e .meta con versione e parametri."""
        tabella = run_experiment(ExperimentSpec.con_default("hard_steps", tmp_path))
        assert tabella.iloc[0]["wall_steps"] == 250500
        assert tabella.iloc[0]["train_size"] == 500

        csv = pd.read_csv(tmp_path / "hard_steps.csv")
        assert int(csv.loc[0, "wall_steps"]) == 250500
        meta = leggi_chiave_valore(tmp_path / "hard_steps.meta")
        assert meta["code_version"] == __version__
        assert meta["param.n"] == "1000"
        assert meta["protocol"] == "one_update_per_pass"


class TestFig1:
    def test_curve_e_pendenze(self, tmp_path):
        spec = ExperimentSpec.con_default("fig1_n", tmp_path, points=5)
        tabella = run_experiment(spec)
        assert len(tabella) == 15
        assert set(tabella["curve"]) == {"online", "version_space", "hybrid"}
        pendenze = pd.read_csv(tmp_path / "fig1_n_slopes.csv").set_index("curve")
        assert pendenze.loc["version_space", "slope"] == pytest.approx(1.0, abs=0.05)
        meta = leggi_chiave_valore(tmp_path / "fig1_n.meta")
        assert "slope.hybrid" in meta

    def test_un_solo_punto(self, tmp_path):
        """Con un solo punto non si calcola nessuna pendenza."""
        run_experiment(ExperimentSpec.con_default("fig1_gamma", tmp_path, points=1))
        assert (tmp_path / "fig1_gamma.csv").exists()
        assert not (tmp_path / "fig1_gamma_slopes.csv").exists()


class TestFig3:
    def test_analitico(self, tmp_path):
        """In forma chiusa M = 1 vale a = 1/64 con e senza rumore."""
        spec = ExperimentSpec.con_default(
            "fig3_noise", tmp_path, backend="analytic", noise_kinds="none,depolarizing", m_max=5, trials=1,
        )
        tabella = run_experiment(spec)
        assert len(tabella) == 10
        prima = tabella[tabella["M"] == 1]
        assert prima["p_estimate"].tolist() == pytest.approx([1 / 64, 1 / 64])
        assert (tabella["stderr"] == 0.0).all()

    def test_bit_flip_analitico(self, tmp_path):
        spec = ExperimentSpec.con_default("fig3_noise", tmp_path, backend="analytic", noise_kinds="bit_flip")
        with pytest.raises(UnsupportedBackendError):
            run_experiment(spec)

    def test_statevector(self, tmp_path):
        spec = ExperimentSpec.con_default("fig3_noise", tmp_path, n_items=16, m_max=4, trials=200)
        tabella = run_experiment(spec)
        assert set(tabella["noise_kind"]) == {"none", "bit_flip", "depolarizing"}
        assert tabella["p_estimate"].between(0.0, 1.0).all()


class TestFig2:
    def test_righe(self, tmp_path):
        """Poche prove su dataset piccoli: una riga per dataset e algoritmo."""
        spec = ExperimentSpec.con_default("fig2_ratio", tmp_path, trials=2, hard_n=20)
        tabella = run_experiment(spec)
        assert len(tabella) == 6
        assert set(tabella["dataset"]) == {"iris", "hard"}
        assert (tabella["mean_ratio"] > 0).all()
        prove = pd.read_csv(tmp_path / "fig2_ratio_trials.csv")
        assert len(prove) == 2 * 2 * 4


class TestLemma1:
    def test_monte_carlo(self):
        """La frequenza resta entro 4 sigma da alpha/pi e sotto il bound erf."""
        tabella = run_lemma1_mc([0.1], 40000, 0)
        riga = tabella.iloc[0]
        assert riga["exact"] == pytest.approx(math.asin(0.1) / math.pi)
        assert abs(riga["empirical"] - riga["exact"]) <= 4 * math.sqrt(riga["exact"] * (1 - riga["exact"]) / 40000)
        assert riga["exact"] <= riga["bound_erf"] <= riga["first_order"]

    def test_deterministico(self):
        assert run_lemma1_mc([0.05], 1000, 7).equals(run_lemma1_mc([0.05], 1000, 7))

    def test_gamma_non_valido(self):
        with pytest.raises(ValueError):
            run_lemma1_mc([1.0], 10)
