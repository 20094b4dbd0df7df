"""Test di integrazione: esperimenti completi con parametri ridotti."""
import math

import pandas as pd
import pytest

from quantum_perceptron.models.experiment import ExperimentSpec
from quantum_perceptron.tools.experiments import run_experiment


@pytest.mark.integration
class TestRapportoOperazioni:
    def test_ordine_su_hard(self, tmp_path):
        """Hard(1000) a meta': i quantistici battono il classico, l'ibrido e' il piu' rapido; su Iris nessuno lo batte."""
        tabella = run_experiment(ExperimentSpec.con_default("fig2_ratio", tmp_path, trials=30))
        hard = tabella[tabella["dataset"] == "hard"].set_index("algorithm")
        assert (hard["mean_ratio"] < 1.0).all()
        assert hard["mean_ratio"].idxmin() == "hybrid"

        iris = tabella[tabella["dataset"] == "iris"]
        assert set(iris["algorithm"]) == {"online", "version_space", "hybrid"}
        assert (iris["trials"] == 30).all()
        assert (iris["mean_ratio"] > 1.0).all()

        prove = pd.read_csv(tmp_path / "fig2_ratio_trials.csv")
        classici = prove[prove["algorithm"] == "classical"]
        hard_classici = classici[classici["n"] == 500]
        assert (hard_classici["wall_steps"] == 250500).all()


@pytest.mark.integration
class TestSeparazioneGaussiana:
    def test_monte_carlo(self, tmp_path):
        """1e5 campioni per gamma: entro 4 sigma da alpha/pi e sotto il bound erf."""
        tabella = run_experiment(ExperimentSpec.con_default("lemma1_mc", tmp_path))
        assert tabella["gamma"].tolist() == [0.0998, 0.05, 0.02]
        for riga in tabella.itertuples(index=False):
            sigma = math.sqrt(riga.exact * (1 - riga.exact) / riga.trials)
            assert abs(riga.empirical - riga.exact) <= 4 * sigma
            assert riga.empirical <= riga.bound_erf


@pytest.mark.integration
class TestCurveBound:
    def test_pendenze_in_inverso_gamma(self, tmp_path):
        """Sulla griglia 1/gamma in [10, 1000] le pendenze corrette sono 2, 1 e 1/2."""
        run_experiment(ExperimentSpec.con_default("fig1_gamma", tmp_path))
        pendenze = pd.read_csv(tmp_path / "fig1_gamma_slopes.csv").set_index("curve")
        corrette = pendenze["slope_polylog_corrected"]
        assert corrette["online"] == pytest.approx(2.0, abs=0.1)
        assert corrette["hybrid"] == pytest.approx(1.0, abs=0.1)
        assert corrette["version_space"] == pytest.approx(0.5, abs=0.1)

    def test_pendenze_in_n(self, tmp_path):
        run_experiment(ExperimentSpec.con_default("fig1_n", tmp_path))
        pendenze = pd.read_csv(tmp_path / "fig1_n_slopes.csv").set_index("curve")["slope"]
        assert pendenze["online"] == pytest.approx(0.5, abs=0.05)
        assert pendenze["hybrid"] == pytest.approx(0.5, abs=0.05)
        assert pendenze["version_space"] == pytest.approx(1.0, abs=0.05)
