"""Test per il backend statevector."""
import itertools

import numpy as np
import pytest

from quantum_perceptron.models.grover import NESSUN_RUMORE, GroverInstance, NoiseModel
from quantum_perceptron.tools.grover import success_probability, theta_from_fraction
from quantum_perceptron.tools.statevector import (
    Statevector, UnsupportedBackendError, campiona_traiettorie, qubit_istanza,
    statevector_grover_sample, statevector_marked_probability,
)


class TestConcordanzaAnalitica:
    @pytest.mark.parametrize("n", [2, 4, 8, 16])
    def test_tutte_le_marcature(self, n):
        """sin^2((2j+1)theta) per ogni numero di marcati e j <= 10."""
        for k, j in itertools.product(range(1, n + 1), range(11)):
            inst = GroverInstance(n, marked=range(1, k + 1))
            atteso = success_probability(theta_from_fraction(k / n), j)
            assert statevector_marked_probability(inst, j) == pytest.approx(atteso, abs=1e-9)

    def test_quattro_elementi(self):
        """N = 4, un marcato: dopo un'iterazione la misura da' sempre l'elemento marcato."""
        inst = GroverInstance(4, marked=[3])
        rng = np.random.default_rng(0)
        assert {statevector_grover_sample(inst, 1, NESSUN_RUMORE, rng) for _ in range(20)} == {3}


class TestStato:
    def test_lunghezza_non_valida(self):
        with pytest.raises(UnsupportedBackendError):
            Statevector(np.ones(6) / np.sqrt(6))

    def test_norma_conservata(self):
        """Oracolo e diffusione sono unitari: la norma resta 1."""
        stato = Statevector.uniforme(32)
        maschera = np.zeros(32, dtype=bool)
        maschera[[4, 9]] = True
        for _ in range(50):
            stato.applica_iterazione(maschera)
        stato.verifica_norma()
        assert stato.norma() == pytest.approx(1.0, abs=1e-12)

    @pytest.mark.parametrize("tipo", ["bit_flip", "depolarizing"])
    def test_norma_dopo_rumore(self, tipo):
        """Ogni passo rumoroso conserva la norma, verificata dopo il canale."""
        stato = Statevector.uniforme(16)
        maschera = np.zeros(16, dtype=bool)
        maschera[3] = True
        rng = np.random.default_rng(8)
        for _ in range(40):
            stato.applica_iterazione(maschera, NoiseModel(tipo, 0.3), rng)
        assert stato.norma() == pytest.approx(1.0, abs=1e-12)

    def test_deriva_rilevata_dopo_rumore(self):
        """Uno stato non normalizzato viene segnalato al passaggio nel canale."""
        stato = Statevector.uniforme(8)
        stato.amplitudes = stato.amplitudes * 2.0
        with pytest.raises(ArithmeticError, match="Norma"):
            stato.applica_rumore(NoiseModel("bit_flip", 1.0), np.random.default_rng(0))

    def test_rumore_senza_generatore(self):
        stato = Statevector.uniforme(4)
        with pytest.raises(ValueError):
            stato.applica_iterazione(np.array([True, False, False, False]), NoiseModel("bit_flip", 0.5))

    def test_bit_flip_permuta(self):
        """Il bit flip permuta le ampiezze: la norma resta 1."""
        stato = Statevector.uniforme(8)
        stato.applica_iterazione(np.array([True] + [False] * 7))
        rng = np.random.default_rng(1)
        for _ in range(10):
            stato.applica_bit_flip(0.5, rng)
        assert stato.norma() == pytest.approx(1.0)

    def test_depolarizzazione_certa(self):
        """Con p = 1 lo stato diventa uno stato di base."""
        stato = Statevector.uniforme(8)
        stato.applica_depolarizzazione(1.0, np.random.default_rng(2))
        assert sorted(stato.probabilita())[-1] == pytest.approx(1.0)


class TestLimiti:
    def test_non_potenza_di_due(self):
        with pytest.raises(UnsupportedBackendError, match="con_padding"):
            qubit_istanza(GroverInstance(6, marked=[1]))

    def test_padding_risolve(self):
        assert qubit_istanza(GroverInstance(6, marked=[1]).con_padding()) == 3

    def test_iterazioni_negative(self):
        with pytest.raises(ValueError):
            statevector_marked_probability(GroverInstance(4, marked=[1]), -1)


class TestTraiettorie:
    def test_indici_1_based(self):
        inst = GroverInstance(8, marked=[8])
        indici = campiona_traiettorie(inst, np.zeros(500, dtype=int), NESSUN_RUMORE, np.random.default_rng(3))
        assert indici.min() >= 1 and indici.max() <= 8

    def test_frequenza_senza_rumore(self):
        """Con j = 1 su N = 4 tutte le traiettorie trovano l'elemento marcato."""
        inst = GroverInstance(4, marked=[2])
        indici = campiona_traiettorie(inst, np.ones(200, dtype=int), NESSUN_RUMORE, np.random.default_rng(4))
        assert set(indici.tolist()) == {2}

    def test_depolarizzante_concorda(self):
        """La frequenza campionata resta entro 4 sigma dalla formula chiusa."""
        from quantum_perceptron.tools.grover import noisy_success_probability

        inst = GroverInstance(16, marked=[5])
        rumore = NoiseModel("depolarizing", 0.2)
        prove = 20000
        indici = campiona_traiettorie(inst, np.full(prove, 2), rumore, np.random.default_rng(5))
        stima = float(inst.maschera[indici - 1].mean())
        atteso = noisy_success_probability(theta_from_fraction(1 / 16), 2, rumore, 1 / 16)
        sigma = np.sqrt(atteso * (1 - atteso) / prove)
        assert abs(stima - atteso) <= 4 * sigma
