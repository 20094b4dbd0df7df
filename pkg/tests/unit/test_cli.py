"""Test per la riga di comando qperc."""
import io

import pandas as pd
import pytest

from quantum_perceptron.cli import USAGE_ERROR, RUNTIME_ERROR, esegui_run, leggi_config, main, UsageError
from quantum_perceptron.models.grover import NESSUN_RUMORE
from quantum_perceptron.tools.bounds import bound_sweep
from quantum_perceptron.tools.datasets import make_hard_dataset
from quantum_perceptron.tools.experiments import run_lemma1_mc
from quantum_perceptron.utils.math_helpers import griglia_logaritmica
from quantum_perceptron.utils.rng import generatore_derivato


def _esegui(capsys, *argomenti):
    codice = main(list(argomenti))
    catturato = capsys.readouterr()
    return codice, catturato.out, catturato.err


class TestCodiciUscita:
    def test_hard_steps(self, capsys, out_dir):
        codice, out, _ = _esegui(capsys, "experiment", "hard-steps", "--n", "1000", "--train-fraction", "0.5")
        assert codice == 0
        assert out.strip() == "250500"

    def test_epsilon_fuori_intervallo(self, capsys, out_dir, tmp_path):
        codice, out, err = _esegui(capsys, "run", "hybrid", "--epsilon", "1.5")
        assert codice == USAGE_ERROR
        assert "error: epsilon must be in (0,1)" in err
        assert out == ""

    def test_flag_sconosciuto(self, capsys, out_dir):
        codice, _, err = _esegui(capsys, "bounds", "sweep", "--curve", "hybrid", "--bogus", "1")
        assert codice == USAGE_ERROR
        assert "error:" in err

    def test_flag_non_accettato(self, capsys, out_dir):
        codice, _, err = _esegui(capsys, "experiment", "hard-steps", "--gammas", "0.1")
        assert codice == USAGE_ERROR
        assert "does not accept --gammas" in err

    def test_parametro_non_valido(self, capsys, out_dir):
        codice, _, err = _esegui(capsys, "experiment", "fig1", "--from", "1000", "--to", "10")
        assert codice == USAGE_ERROR
        assert "invalid parameters for fig1" in err

    def test_csv_vuoto(self, capsys, out_dir, tmp_path):
        vuoto = tmp_path / "vuoto.csv"
        vuoto.write_text("", encoding="utf-8")
        codice, _, err = _esegui(capsys, "plot", "--csv", str(vuoto), "--out", str(tmp_path / "x.svg"))
        assert codice == RUNTIME_ERROR
        assert err.count("error:") == 1

    def test_bit_flip_analitico(self, capsys, out_dir):
        codice, _, _ = _esegui(capsys, "experiment", "fig3", "--backend", "analytic", "--noise-kinds", "bit_flip")
        assert codice == RUNTIME_ERROR

    def test_hard_un_punto(self, capsys, out_dir):
        """gen-hard accetta n = 1 e rifiuta n = 0."""
        codice, out, _ = _esegui(capsys, "dataset", "gen-hard", "--n", "1")
        assert codice == 0
        tabella = pd.read_csv(out.strip())
        assert len(tabella) == 1 and tabella.loc[0, "label"] == -1

        codice, _, err = _esegui(capsys, "dataset", "gen-hard", "--n", "0")
        assert codice == USAGE_ERROR
        assert "error: n must be at least 1" in err

    def test_file_mancante(self, capsys, out_dir):
        codice, _, err = _esegui(capsys, "run", "classical")
        assert codice == USAGE_ERROR
        assert "--file is required" in err


class TestRiproducibilita:
    def test_hybrid_identico(self, capsys, out_dir, tmp_path):
        """gen-hard e poi due esecuzioni con lo stesso seed: stdout identico byte per byte."""
        file_hard = tmp_path / "hard1000.csv"
        codice, out, _ = _esegui(capsys, "dataset", "gen-hard", "--n", "1000", "--out", str(file_hard))
        assert codice == 0 and out.strip() == str(file_hard)

        argomenti = ("run", "hybrid", "--file", str(file_hard), "--epsilon", "0.05", "--seed", "7")
        primo = _esegui(capsys, *argomenti)
        secondo = _esegui(capsys, *argomenti)
        assert primo[0] == secondo[0] == 0
        assert primo[1] == secondo[1]
        riga = pd.read_csv(io.StringIO(primo[1]))
        assert riga.loc[0, "algorithm"] == "hybrid" and int(riga.loc[0, "n"]) == 1000

    def test_run_come_libreria(self, capsys, out_dir, tmp_path):
        """Il sottocomando run riproduce la chiamata diretta alla libreria."""
        file_hard = tmp_path / "hard8.csv"
        _esegui(capsys, "dataset", "gen-hard", "--n", "8", "--out", str(file_hard))
        _, out, _ = _esegui(capsys, "run", "online", "--file", str(file_hard), "--epsilon", "0.1", "--seed", "3")
        atteso = esegui_run("online", make_hard_dataset(8), 0.1, None, "analytic", NESSUN_RUMORE, 3)
        riga = pd.read_csv(io.StringIO(out))
        assert int(riga.loc[0, "wall_steps"]) == atteso.ledger.wall_steps
        assert int(riga.loc[0, "updates"]) == atteso.ledger.updates

    def test_bounds_come_libreria(self, capsys, out_dir):
        codice, out, _ = _esegui(capsys, "bounds", "sweep", "--curve", "hybrid", "--var", "n",
                                 "--from", "100", "--to", "100000", "--points", "13")
        assert codice == 0
        atteso = bound_sweep("hybrid", "n", griglia_logaritmica(100, 100000, 13))
        assert pd.read_csv(io.StringIO(out))["value"].tolist() == atteso["value"].tolist()
        assert (out_dir / "bounds_hybrid_n.csv").exists()

    def test_lemma1_come_libreria(self, capsys, out_dir):
        codice, _, _ = _esegui(capsys, "experiment", "lemma1", "--gammas", "0.1", "--trials", "5000",
                               "--seed", "4")
        assert codice == 0
        scritto = pd.read_csv(out_dir / "lemma1_mc.csv")
        atteso = run_lemma1_mc([0.1], 5000, generatore_derivato(4, 0))
        assert scritto.loc[0, "empirical"] == pytest.approx(atteso.loc[0, "empirical"])

    def test_dataset_margin(self, capsys, out_dir, tmp_path):
        file_hard = tmp_path / "hard4.csv"
        _esegui(capsys, "dataset", "gen-hard", "--n", "4", "--out", str(file_hard))
        codice, out, _ = _esegui(capsys, "dataset", "margin", "--file", str(file_hard))
        assert codice == 0
        assert "gamma=0.5" in out and "method=analytic" in out


class TestConfigurazione:
    def test_precedenza(self, capsys, out_dir, tmp_path):
        """Il flag prevale sul file di configurazione, che prevale sui default."""
        config = tmp_path / "qperc.conf"
        config.write_text("# prova\nn = 8\ntrain-fraction = 1.0\n", encoding="utf-8")
        _, out, _ = _esegui(capsys, "--config", str(config), "experiment", "hard-steps")
        assert out.strip() == str(8 * 9)
        _, out, _ = _esegui(capsys, "--config", str(config), "experiment", "hard-steps", "--n", "2")
        assert out.strip() == "6"

    def test_chiave_sconosciuta(self, tmp_path):
        config = tmp_path / "bad.conf"
        config.write_text("colour=blue\n", encoding="utf-8")
        with pytest.raises(UsageError, match="unknown config keys: colour"):
            leggi_config(str(config))

    def test_config_in_main(self, capsys, out_dir, tmp_path):
        config = tmp_path / "bad.conf"
        config.write_text("colour=blue\n", encoding="utf-8")
        codice, _, _ = _esegui(capsys, "--config", str(config), "experiment", "hard-steps")
        assert codice == USAGE_ERROR

    def test_run_log(self, capsys, out_dir):
        """Ogni esecuzione aggiunge una voce a run_log.md."""
        _esegui(capsys, "experiment", "hard-steps", "--n", "4")
        _esegui(capsys, "experiment", "hard-steps", "--n", "6")
        testo = (out_dir / "run_log.md").read_text(encoding="utf-8")
        assert testo.count("**Comando:** experiment") == 2
