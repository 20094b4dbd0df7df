"""Test per il rendering SVG."""
import pandas as pd
import pytest

from quantum_perceptron.tools.bounds import bound_sweep
from quantum_perceptron.tools.svg_plot import PlotSpec, SchemaError, componi_svg, render_svg, spec_da_schema


@pytest.fixture
def csv_bound(tmp_path):
    tabella = pd.concat([bound_sweep(c, "n", [100, 1000, 10000]) for c in ("online", "version_space", "hybrid")])
    percorso = tmp_path / "fig1_n.csv"
    tabella.to_csv(percorso, index=False)
    return percorso


class TestRender:
    def test_tre_serie(self, csv_bound, tmp_path):
        """Una polilinea per curva, in un documento SVG 1.1."""
        testo = render_svg(csv_bound, tmp_path / "fig1.svg").read_text(encoding="utf-8")
        assert testo.count("<polyline") == 3
        assert 'version="1.1"' in testo and testo.rstrip().endswith("</svg>")
        assert ">hybrid<" in testo

    def test_deterministico(self, csv_bound, tmp_path):
        primo = render_svg(csv_bound, tmp_path / "a.svg").read_bytes()
        secondo = render_svg(csv_bound, tmp_path / "b.svg").read_bytes()
        assert primo == secondo

    def test_asse_categoriale(self):
        """Il rapporto di fig2 ha gli algoritmi come categorie sull'asse x."""
        tabella = pd.DataFrame({
            "dataset": ["iris"] * 3 + ["hard"] * 3,
            "algorithm": ["online", "version_space", "hybrid"] * 2,
            "mean_ratio": [2.0, 1.5, 0.5, 0.1, 0.05, 0.01],
            "std_ratio": [0.0] * 6,
            "trials": [3] * 6,
        })
        testo = componi_svg(tabella, spec_da_schema(tabella.columns))
        assert testo.count("<polyline") == 2
        assert ">version_space<" in testo


class TestErrori:
    def test_csv_vuoto(self, tmp_path):
        percorso = tmp_path / "vuoto.csv"
        percorso.write_text("", encoding="utf-8")
        with pytest.raises(SchemaError):
            render_svg(percorso, tmp_path / "x.svg")

    def test_solo_intestazione(self, tmp_path):
        percorso = tmp_path / "h.csv"
        percorso.write_text("curve,x_var,x,value\n", encoding="utf-8")
        with pytest.raises(SchemaError):
            render_svg(percorso, tmp_path / "x.svg")

    def test_schema_sconosciuto(self):
        with pytest.raises(SchemaError, match="non riconosciuto"):
            spec_da_schema(["a", "b"])

    def test_log_non_positivo(self):
        tabella = pd.DataFrame({"x": [0.0, 1.0], "y": [1.0, 2.0]})
        with pytest.raises(SchemaError, match="logaritmica"):
            componi_svg(tabella, PlotSpec("x", "y", log_x=True))

    def test_colonna_mancante(self):
        with pytest.raises(SchemaError, match="mancanti"):
            componi_svg(pd.DataFrame({"x": [1.0]}), PlotSpec("x", "y"))
