"""Test di integrazione: garanzie di costo e di rischio degli algoritmi quantistici."""
import numpy as np
import pytest

from quantum_perceptron.models.experiment import ExperimentSpec
from quantum_perceptron.tools.bounds import hybrid_bound, num_hyperplanes, online_q_bound, version_space_bound
from quantum_perceptron.tools.datasets import make_planted_margin_dataset, sample_hyperplanes
from quantum_perceptron.tools.experiments import run_experiment
from quantum_perceptron.tools.loo import run_loo_study
from quantum_perceptron.tools.quantum_perceptron import hybrid_quantum, online_quantum, version_space_quantum
from quantum_perceptron.utils.rng import seme_derivato


@pytest.mark.integration
class TestCostiEntroIBound:
    @pytest.mark.parametrize("seed", range(8))
    def test_wall_steps(self, seed):
        """Sul backend analitico i wall_steps non superano mai il bound in forma chiusa."""
        gamma, epsilon = 0.1, 0.1
        ds = make_planted_margin_dataset(50, 3, gamma, seed=seed)
        k = num_hyperplanes(gamma, epsilon)
        iperpiani = sample_hyperplanes(k, 3, seme_derivato(seed, 0))

        online = online_quantum(ds, gamma, epsilon, seed=seme_derivato(seed, 1))
        spazio = version_space_quantum(ds, iperpiani, epsilon, seed=seme_derivato(seed, 2))
        ibrido = hybrid_quantum(ds, iperpiani, epsilon, seed=seme_derivato(seed, 3))

        assert online.ledger.wall_steps <= online_q_bound(50, gamma, epsilon)
        assert spazio.ledger.wall_steps <= version_space_bound(50, gamma, epsilon)
        assert ibrido.ledger.wall_steps <= hybrid_bound(50, gamma, epsilon)

    def test_successo_online(self):
        """Con epsilon = 0.1 l'algoritmo online separa il campione in quasi tutte le prove."""
        successi = 0
        for seed in range(40):
            ds = make_planted_margin_dataset(40, 2, 0.1, seed=seed)
            successi += online_quantum(ds, 0.1, 0.1, seed=seed).separates
        assert successi >= 34

    def test_ibrido_con_separatore(self):
        """Se uno degli iperpiani campionati separa S, l'ibrido restituisce un separatore."""
        for seed in range(30):
            ds = make_planted_margin_dataset(40, 2, 0.1, seed=seed)
            iperpiani = sample_hyperplanes(num_hyperplanes(0.1, 0.1), 2, seme_derivato(seed, 0))
            w = np.vstack([h.w for h in iperpiani])
            if not np.all(ds.matrice_segnata @ w.T > 0, axis=0).any():
                continue
            assert hybrid_quantum(ds, iperpiani, 0.1, seed=seed).separates


@pytest.mark.integration
class TestRischioLeaveOneOut:
    def test_rischio_condizionato(self):
        """Nelle prove in cui un separatore e' stato estratto l'errore LOO medio e' al massimo K/N."""
        rischi = []
        k = n = 0
        for indice in range(60):
            ds = make_planted_margin_dataset(64, 2, 0.1, seed=1000 + indice)
            report = run_loo_study(ds, 0.1, 1, seed=indice)
            k, n = report.k, report.n
            rischi.extend(r for r, estratto in zip(report.rischi, report.separatore_estratto) if estratto)
        assert len(rischi) >= 20
        assert float(np.mean(rischi)) <= k / n

    def test_studio_predefinito(self, tmp_path):
        """N = 60, D = 2, gamma = 0.1, 50 prove: ogni prova con separatore resta entro K/N, la media entro il bound."""
        tabella = run_experiment(ExperimentSpec.con_default("loo_study", tmp_path))
        assert len(tabella) == 50
        estratte = tabella[tabella["separator_drawn"]]
        assert len(estratte) > 0
        assert (estratte["loo_risk"] <= estratte["k_over_n"]).all()

        rischi = tabella["loo_risk"].to_numpy()
        errore_standard = rischi.std(ddof=1) / np.sqrt(rischi.size)
        assert rischi.mean() <= tabella["generalization_bound"].iloc[0] + 3 * errore_standard
