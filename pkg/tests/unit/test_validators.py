"""Test per i validatori di input."""
import numpy as np
import pytest
from quantum_perceptron.config.constants import TIPI_RUMORE
from quantum_perceptron.utils.validators import (
    valida_aperto_unitario, valida_intero, valida_margine, valida_non_negativo,
    valida_positivo, valida_probabilita, valida_scelta,
)


class TestValidaPositivo:
    def test_positivo(self):
        """Valore positivo restituito invariato."""
        assert valida_positivo(1.0) == 1.0

    def test_zero(self):
        """Zero non e' strettamente positivo: deve dare errore."""
        with pytest.raises(ValueError):
            valida_positivo(0.0)

    def test_booleano(self):
        """I booleani non sono accettati come numeri."""
        with pytest.raises(ValueError):
            valida_positivo(True)

    def test_infinito(self):
        """Valori non finiti rifiutati."""
        with pytest.raises(ValueError, match="finito"):
            valida_positivo(float("inf"))


class TestValidaNonNegativo:
    def test_zero(self):
        """Zero e' ammesso per non-negativo."""
        assert valida_non_negativo(0.0) == 0.0

    def test_negativo(self):
        """Valore negativo deve generare errore."""
        with pytest.raises(ValueError):
            valida_non_negativo(-1.0)


class TestValidaProbabilita:
    def test_estremi(self):
        """0 e 1 sono probabilita' valide."""
        assert valida_probabilita(0.0) == 0.0
        assert valida_probabilita(1.0) == 1.0

    def test_troppo_alta(self):
        """Probabilita' sopra 1 con il nome del parametro nel messaggio."""
        with pytest.raises(ValueError, match="'p'"):
            valida_probabilita(1.1)


class TestValidaApertoUnitario:
    def test_interno(self):
        assert valida_aperto_unitario(0.05) == 0.05

    @pytest.mark.parametrize("valore", [0.0, 1.0, 1.5, -0.1])
    def test_fuori_intervallo(self, valore):
        """Estremi e valori esterni rifiutati."""
        with pytest.raises(ValueError, match="epsilon"):
            valida_aperto_unitario(valore)


class TestValidaMargine:
    def test_uno_ammesso(self):
        """gamma = 1 e' un margine valido."""
        assert valida_margine(1.0) == 1.0

    def test_zero(self):
        with pytest.raises(ValueError):
            valida_margine(0.0)


class TestValidaIntero:
    def test_intero_numpy(self):
        """Gli interi numpy sono convertiti in int Python."""
        risultato = valida_intero(np.int64(3))
        assert risultato == 3 and type(risultato) is int

    def test_float(self):
        """Un float non e' un intero, anche se ha valore intero."""
        with pytest.raises(ValueError):
            valida_intero(2.0)

    def test_minimo(self):
        """Sotto il minimo deve generare errore."""
        with pytest.raises(ValueError, match="maggiore o uguale a 2"):
            valida_intero(1, "d", minimo=2)


class TestValidaScelta:
    def test_normalizzazione(self):
        """Maiuscole, spazi e trattini vengono normalizzati."""
        assert valida_scelta(" Bit-Flip ", TIPI_RUMORE, "noise") == "bit_flip"

    def test_sconosciuto(self):
        with pytest.raises(ValueError, match="Valori validi"):
            valida_scelta("amplitude_damping", TIPI_RUMORE, "noise")
