"""Test per la scrittura dei file di risultato e il registro delle esecuzioni."""
import pandas as pd
import pytest

from quantum_perceptron.utils.logging_utils import leggi_log, log_esecuzione
from quantum_perceptron.utils.output_files import (
    formatta_meta, leggi_chiave_valore, scrivi_atomico, scrivi_csv, scrivi_meta,
)


class TestScritturaAtomica:
    def test_crea_directory(self, tmp_path):
        """Le directory intermedie vengono create e non restano file temporanei."""
        percorso = scrivi_atomico(tmp_path / "a" / "b" / "x.txt", "ciao\n")
        assert percorso.read_text(encoding="utf-8") == "ciao\n"
        assert [p.name for p in percorso.parent.iterdir()] == ["x.txt"]

    def test_sovrascrive(self, tmp_path):
        scrivi_atomico(tmp_path / "x.txt", "vecchio")
        scrivi_atomico(tmp_path / "x.txt", "nuovo")
        assert (tmp_path / "x.txt").read_text(encoding="utf-8") == "nuovo"

    def test_csv_senza_indice(self, tmp_path):
        percorso = scrivi_csv(pd.DataFrame({"M": [1, 2], "p": [0.5, 0.25]}), tmp_path / "c.csv")
        assert percorso.read_text(encoding="utf-8") == "M,p\n1,0.5\n2,0.25\n"


class TestMeta:
    def test_ordinato_per_chiave(self):
        assert formatta_meta({"b": 1, "a": 0.5, "c": True}) == "a=0.5\nb=1\nc=true\n"

    def test_rilettura(self, tmp_path):
        """Un file .meta si rilegge con leggi_chiave_valore."""
        scrivi_meta(tmp_path / "e.meta", {"master_seed": 7, "param.epsilon": 0.05})
        assert leggi_chiave_valore(tmp_path / "e.meta") == {"master_seed": "7", "param.epsilon": "0.05"}

    def test_commenti_e_spazi(self, tmp_path):
        (tmp_path / "c.conf").write_text("# commento\n\n epsilon = 0.1 \nurl=a=b\n", encoding="utf-8")
        assert leggi_chiave_valore(tmp_path / "c.conf") == {"epsilon": "0.1", "url": "a=b"}

    def test_riga_malformata(self, tmp_path):
        (tmp_path / "c.conf").write_text("epsilon 0.1\n", encoding="utf-8")
        with pytest.raises(ValueError, match="Riga 1"):
            leggi_chiave_valore(tmp_path / "c.conf")


class TestRegistroEsecuzioni:
    def test_log_assente(self, tmp_path):
        assert leggi_log(tmp_path) == ""

    def test_voci_in_coda(self, tmp_path):
        """Ogni esecuzione aggiunge un blocco senza cancellare i precedenti."""
        log_esecuzione(tmp_path, "experiment hard_steps", "--n 1000", "wall_steps=250500")
        log_esecuzione(tmp_path, "plot", "--csv x.csv", "x.svg")
        testo = leggi_log(tmp_path)
        assert testo.count("**Comando:**") == 2
        assert testo.index("wall_steps=250500") < testo.index("x.svg")
