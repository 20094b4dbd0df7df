"""Test di integrazione: backend statevector contro formule chiuse, con e senza rumore."""
import numpy as np
import pytest

from quantum_perceptron.models.grover import NESSUN_RUMORE, GroverInstance, NoiseModel
from quantum_perceptron.tools.grover import p_of_m_curve


def _confronta(rumore, prove=4000):
    inst = GroverInstance(64, marked=[1])
    analitica = p_of_m_curve(inst, rumore, 12, 1, np.random.default_rng(0))
    campionata = p_of_m_curve(inst, rumore, 12, prove, np.random.default_rng(11), backend="statevector")
    return analitica, campionata, prove


@pytest.mark.integration
class TestCurvePM:
    @pytest.mark.parametrize("rumore", [NESSUN_RUMORE, NoiseModel("depolarizing", 0.05)])
    def test_statevector_concorda(self, rumore):
        """Ogni punto della curva campionata resta entro 4 sigma dalla forma chiusa."""
        analitica, campionata, prove = _confronta(rumore)
        for (m, atteso, _), (_, stima, _) in zip(analitica, campionata):
            sigma = max(np.sqrt(atteso * (1 - atteso) / prove), 1e-3)
            assert abs(stima - atteso) <= 4 * sigma, f"M={m}"

    def test_inviluppo_rumore(self):
        """Con rumore la probabilita' di successo resta sotto la curva ideale per M grande."""
        inst = GroverInstance(64, marked=[1])
        rng = np.random.default_rng(5)
        ideale = p_of_m_curve(inst, NESSUN_RUMORE, 30, 1, rng)
        for tipo in ("bit_flip", "depolarizing"):
            rumorosa = p_of_m_curve(inst, NoiseModel(tipo, 0.05), 30, 3000, np.random.default_rng(6),
                                    backend="statevector")
            finale_ideale = ideale[-1][1]
            finale, errore = rumorosa[-1][1], rumorosa[-1][2]
            assert finale < finale_ideale + 4 * errore
            assert 0.0 < finale < 1.0
