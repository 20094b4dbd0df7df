"""Test per le utilita' di formattazione."""
import pytest
from quantum_perceptron.utils.formatting import (
    formatta_cella, formatta_numero, formatta_percentuale, tabella_markdown,
)


class TestFormattaNumeri:
    def test_percentuale(self):
        assert formatta_percentuale(0.1234) == "12.34%"

    def test_numero(self):
        """Separatore delle migliaia e quattro decimali di default."""
        assert formatta_numero(1234.56) == "1,234.5600"


class TestFormattaCella:
    def test_booleani_minuscoli(self):
        assert formatta_cella(True) == "true"
        assert formatta_cella(False) == "false"

    def test_float_round_trip(self):
        """I float usano repr, che si rilegge senza perdita."""
        assert formatta_cella(0.1) == "0.1"
        assert float(formatta_cella(1 / 3)) == 1 / 3

    def test_none_e_nan(self):
        assert formatta_cella(None) == ""
        assert formatta_cella(float("nan")) == "nan"

    def test_intero(self):
        assert formatta_cella(250500) == "250500"


class TestTabellaMarkdown:
    def test_struttura(self):
        """Intestazione, separatore e una riga per record."""
        tabella = tabella_markdown(["algoritmo", "rapporto"], [["hybrid", "0.01"]], ["l", "r"])
        righe = tabella.splitlines()
        assert len(righe) == 3
        assert righe[0].startswith("| algoritmo")
        assert righe[1].rstrip(" |").endswith(":")

    def test_colonne_errate(self):
        with pytest.raises(ValueError):
            tabella_markdown(["a", "b"], [["1"]])
