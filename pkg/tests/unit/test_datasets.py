"""Test per costruzione, caricamento e suddivisione dei dataset."""
import math

import numpy as np
import pytest

from quantum_perceptron.tools.datasets import (
    DatasetError, export_dataset_csv, is_hard_dataset, load_dataset_csv, load_two_class_csv,
    make_hard_dataset, make_planted_margin_dataset, make_wedge_dataset, normalize,
    sample_hyperplanes, split_dataset, wedge_separation_probability,
)
from quantum_perceptron.tools.margin import margin, margine_di


class TestHardDataset:
    def test_struttura(self):
        """x_i = (-1)^(i+1) e_i con etichetta (-1)^i (indici 1-based)."""
        ds = make_hard_dataset(4)
        np.testing.assert_array_equal(np.diag(ds.features), [1.0, -1.0, 1.0, -1.0])
        np.testing.assert_array_equal(ds.labels, [-1, 1, -1, 1])
        assert ds.name == "hard4"

    def test_riconoscimento(self):
        assert is_hard_dataset(make_hard_dataset(6))
        assert not is_hard_dataset(normalize(make_planted_margin_dataset(6, 6, 0.1, seed=0)))

    def test_n_non_valido(self):
        with pytest.raises(ValueError):
            make_hard_dataset(0)


class TestWedge:
    def test_margine(self):
        """Il margine del cuneo e' sin(alpha)."""
        alfa = 0.3
        ds = make_wedge_dataset(alfa)
        assert margine_di(np.array([0.0, 1.0]), ds) == pytest.approx(math.sin(alfa))
        assert wedge_separation_probability(alfa) == pytest.approx(alfa / math.pi)

    def test_angolo_non_valido(self):
        with pytest.raises(ValueError):
            make_wedge_dataset(math.pi / 2)


class TestCaricamentoCsv:
    def test_iris(self, iris_csv):
        """Setosa contro versicolor: 50 + 50 righe, quattro feature."""
        ds = load_two_class_csv(iris_csv, "setosa", "versicolor")
        assert len(ds) == 100 and ds.dim == 4
        assert int((ds.labels == 1).sum()) == 50
        assert ds.name == "iris"

    def test_cella_non_numerica(self, tmp_path):
        """Il messaggio riporta riga e colonna della cella non valida."""
        percorso = tmp_path / "t.csv"
        percorso.write_text("1,2,a\n3,x,a\n1,1,b\n2,2,b\n", encoding="utf-8")
        with pytest.raises(DatasetError, match="riga 2, colonna 2"):
            load_two_class_csv(percorso, "a", "b")

    def test_file_vuoto(self, tmp_path):
        percorso = tmp_path / "vuoto.csv"
        percorso.write_text("", encoding="utf-8")
        with pytest.raises(DatasetError, match="no rows"):
            load_two_class_csv(percorso, "a", "b")

    def test_classe_scarsa(self, tmp_path):
        percorso = tmp_path / "t.csv"
        percorso.write_text("1,2,a\n3,4,a\n1,1,b\n", encoding="utf-8")
        with pytest.raises(DatasetError, match="almeno 2 righe"):
            load_two_class_csv(percorso, "a", "b")

    def test_esporta_e_ricarica(self, tmp_path, planted_2d):
        percorso = export_dataset_csv(planted_2d, tmp_path / "planted.csv")
        ricaricato = load_dataset_csv(percorso)
        np.testing.assert_allclose(ricaricato.features, planted_2d.features, rtol=0, atol=1e-15)
        np.testing.assert_array_equal(ricaricato.labels, planted_2d.labels)
        assert ricaricato.name == "planted"

    def test_intestazione_errata(self, tmp_path):
        percorso = tmp_path / "x.csv"
        percorso.write_text("a,b\n1,2\n", encoding="utf-8")
        with pytest.raises(DatasetError, match="intestazione"):
            load_dataset_csv(percorso)


class TestNormalizzazione:
    def test_norma_massima(self, iris_csv):
        """Dopo la normalizzazione la norma massima e' 1 e l'ordine non cambia."""
        grezzo = load_two_class_csv(iris_csv, "setosa", "versicolor")
        ds = normalize(grezzo)
        norme = np.linalg.norm(ds.features, axis=1)
        assert norme.max() == pytest.approx(1.0)
        np.testing.assert_array_equal(ds.labels, grezzo.labels)

    def test_idempotente(self, iris_csv):
        """Normalizzare due volte equivale a normalizzare una volta."""
        una_volta = normalize(load_two_class_csv(iris_csv, "setosa", "versicolor"))
        np.testing.assert_allclose(normalize(una_volta).features, una_volta.features, rtol=0, atol=1e-15)
        np.testing.assert_array_equal(normalize(una_volta).labels, una_volta.labels)

    def test_punti_nulli(self):
        from quantum_perceptron.models.dataset import LabeledDataset
        with pytest.raises(DatasetError):
            normalize(LabeledDataset(np.zeros((2, 2)), np.array([1, -1])))


class TestSplit:
    def test_dimensioni(self, iris_csv):
        """10% di 100 punti: 10 di training con entrambe le classi, 90 di test."""
        ds = load_two_class_csv(iris_csv, "setosa", "versicolor")
        train, test = split_dataset(ds, 0.1, seed=4)
        assert len(train) == 10 and len(test) == 90
        assert train.ha_entrambe_le_classi()

    def test_deterministico(self, iris_csv):
        ds = load_two_class_csv(iris_csv, "setosa", "versicolor")
        assert split_dataset(ds, 0.1, seed=4)[0].identico(split_dataset(ds, 0.1, seed=4)[0])

    def test_senza_seed(self):
        """Senza seed il training e' il prefisso in ordine di indice."""
        ds = make_hard_dataset(10)
        train, _ = split_dataset(ds, 0.5)
        assert train.identico(ds.sottoinsieme(range(5)))

    def test_frazione_nulla(self):
        with pytest.raises(ValueError):
            split_dataset(make_hard_dataset(4), 0.0)

    def test_una_sola_classe(self):
        """Un solo punto di training non puo' contenere entrambe le classi."""
        with pytest.raises(DatasetError):
            split_dataset(make_hard_dataset(4), 0.25)


class TestGeneratoriCasuali:
    @pytest.mark.parametrize("seed", [0, 1, 2])
    def test_margine_piantato(self, seed):
        """Il margine calcolato coincide con quello piantato e i punti sono unitari."""
        ds = make_planted_margin_dataset(30, 3, 0.15, seed=seed)
        np.testing.assert_allclose(np.linalg.norm(ds.features, axis=1), 1.0)
        assert margin(ds).gamma == pytest.approx(0.15, abs=1e-6)

    def test_margine_piantato_parametri_casuali(self):
        """20 terne (N, D, gamma) casuali: margine realizzato pari a quello piantato."""
        rng = np.random.default_rng(77)
        for indice in range(20):
            n = int(rng.integers(4, 81))
            d = int(rng.integers(2, 6))
            gamma = float(rng.uniform(0.05, 0.3))
            ds = make_planted_margin_dataset(n, d, gamma, seed=500 + indice)
            np.testing.assert_allclose(np.linalg.norm(ds.features, axis=1), 1.0)
            assert margin(ds).gamma == pytest.approx(gamma, abs=1e-6), f"N={n}, D={d}, gamma={gamma}"

    def test_momenti_iperpiani(self):
        """1e5 componenti gaussiane: media entro 0.02 da 0 e varianza entro 0.02 da 1."""
        componenti = np.concatenate([h.w for h in sample_hyperplanes(20_000, 5, 2)])
        assert componenti.size == 100_000
        assert abs(componenti.mean()) < 0.02
        assert abs(componenti.var() - 1.0) < 0.02

    def test_iperpiani_deterministici(self):
        primi = sample_hyperplanes(5, 3, 11)
        secondi = sample_hyperplanes(5, 3, 11)
        assert all(a.identico(b) for a, b in zip(primi, secondi))
        assert len(primi) == 5 and primi[0].dim == 3
