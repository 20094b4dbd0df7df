"""Rendering SVG 1.1 delle tabelle CSV prodotte dai runner.

Un grafico e' un insieme di polilinee (una per serie) con assi, tacche,
etichette e legenda. L'output e' testo deterministico: a parita' di
input il file prodotto e' identico byte per byte.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from pathlib import Path
from xml.sax.saxutils import escape

import numpy as np
import pandas as pd

from quantum_perceptron.utils.output_files import scrivi_atomico

logger = logging.getLogger(__name__)

LARGHEZZA = 640
ALTEZZA = 420
_MARGINE_SX, _MARGINE_DX, _MARGINE_SU, _MARGINE_GIU = 70, 150, 40, 50
_COLORI = ("#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#17becf")


class SchemaError(ValueError):
    """Il CSV non corrisponde allo schema richiesto dal grafico."""


@dataclass(frozen=True)
class PlotSpec:
    """Scelta di assi e serie di un grafico.

    Attributes:
        x: Colonna dell'asse x (numerica o categoriale).
        y: Colonna dell'asse y (numerica).
        series: Colonna che separa le serie (None = una sola serie).
        log_x: Scala logaritmica sull'asse x.
        log_y: Scala logaritmica sull'asse y.
        title: Titolo del grafico.
    """

    x: str
    y: str
    series: str | None = None
    log_x: bool = False
    log_y: bool = False
    title: str = ""


_SCHEMI: tuple[tuple[frozenset[str], PlotSpec], ...] = (
    (frozenset({"curve", "x_var", "x", "value"}),
     PlotSpec("x", "value", "curve", log_x=True, log_y=True, title="Bound di complessita'")),
    (frozenset({"noise_kind", "M", "p_estimate", "stderr"}),
     PlotSpec("M", "p_estimate", "noise_kind", title="P(M)")),
    (frozenset({"dataset", "algorithm", "mean_ratio", "std_ratio", "trials"}),
     PlotSpec("algorithm", "mean_ratio", "dataset", log_y=True, title="Rapporto quantistico / classico")),
    (frozenset({"gamma", "empirical", "bound_erf"}),
     PlotSpec("gamma", "empirical", None, log_x=True, log_y=True, title="Separazione gaussiana")),
    (frozenset({"trial_index", "loo_risk"}),
     PlotSpec("trial_index", "loo_risk", None, title="Errore leave-one-out")),
)


def spec_da_schema(colonne: list[str] | pd.Index) -> PlotSpec:
    """PlotSpec di default per le colonne di un CSV prodotto da un runner.

    Solleva
    -------
    SchemaError
        Se le colonne non corrispondono a nessuno schema noto.
    """
    presenti = set(colonne)
    for richieste, spec in _SCHEMI:
        if richieste <= presenti:
            return spec
    raise SchemaError(f"Schema CSV non riconosciuto: {sorted(presenti)}")


# ---------------------------------------------------------------------------
# Scale e tacche
# ---------------------------------------------------------------------------

def _fmt(valore: float) -> str:
    return f"{valore:.2f}"


def _etichetta(valore: float) -> str:
    return f"{valore:.4g}"


class _Scala:
    def __init__(self, minimo: float, massimo: float, log: bool, da: float, a: float) -> None:
        if log:
            minimo, massimo = math.log10(minimo), math.log10(massimo)
        if massimo == minimo:
            minimo, massimo = minimo - 0.5, massimo + 0.5
        self.minimo, self.massimo, self.log = minimo, massimo, log
        self.da, self.a = da, a

    def __call__(self, valore: float) -> float:
        v = math.log10(valore) if self.log else valore
        return self.da + (v - self.minimo) / (self.massimo - self.minimo) * (self.a - self.da)

    def tacche(self) -> list[float]:
        if self.log:
            esponenti = range(math.ceil(self.minimo - 1e-9), math.floor(self.massimo + 1e-9) + 1)
            valori = [10.0 ** e for e in esponenti]
            if len(valori) >= 2:
                return valori
            return [10.0 ** self.minimo, 10.0 ** self.massimo]
        return [float(v) for v in np.linspace(self.minimo, self.massimo, 5)]


# ---------------------------------------------------------------------------
# Rendering
# ---------------------------------------------------------------------------

def _leggi(csv_path: Path | str) -> pd.DataFrame:
    try:
        tabella = pd.read_csv(csv_path)
    except pd.errors.EmptyDataError as exc:
        raise SchemaError(f"{csv_path}: file CSV vuoto.") from exc
    except OSError as exc:
        raise SchemaError(f"Impossibile leggere '{csv_path}': {exc}") from exc
    if tabella.empty:
        raise SchemaError(f"{csv_path}: nessuna riga di dati.")
    return tabella


def componi_svg(tabella: pd.DataFrame, spec: PlotSpec) -> str:
    """Testo SVG del grafico descritto da ``spec`` sui dati di ``tabella``.

    Solleva
    -------
    SchemaError
        Per colonne mancanti, y non numerica o valori non positivi in scala log.
    """
    richieste = [spec.x, spec.y] + ([spec.series] if spec.series else [])
    mancanti = [c for c in richieste if c not in tabella.columns]
    if mancanti:
        raise SchemaError(f"Colonne mancanti nel CSV: {mancanti}")
    if tabella.empty:
        raise SchemaError("Nessuna riga di dati da disegnare.")

    y = pd.to_numeric(tabella[spec.y], errors="coerce")
    if y.isna().any():
        raise SchemaError(f"La colonna '{spec.y}' deve essere numerica.")
    x_grezza = tabella[spec.x]
    x = pd.to_numeric(x_grezza, errors="coerce")
    categorie: list[str] = []
    if x.isna().any():
        if spec.log_x:
            raise SchemaError(f"La colonna categoriale '{spec.x}' non ammette la scala logaritmica.")
        categorie = list(dict.fromkeys(x_grezza.astype(str)))
        x = x_grezza.astype(str).map({c: float(i + 1) for i, c in enumerate(categorie)})
    if spec.log_x and (x <= 0).any() or spec.log_y and (y <= 0).any():
        raise SchemaError("La scala logaritmica richiede valori strettamente positivi.")

    sx = _Scala(float(x.min()), float(x.max()), spec.log_x, _MARGINE_SX, LARGHEZZA - _MARGINE_DX)
    sy = _Scala(float(y.min()), float(y.max()), spec.log_y, ALTEZZA - _MARGINE_GIU, _MARGINE_SU)

    righe = [
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{LARGHEZZA}" '
        f'height="{ALTEZZA}" viewBox="0 0 {LARGHEZZA} {ALTEZZA}" font-family="sans-serif" font-size="11">',
        f'<rect x="0" y="0" width="{LARGHEZZA}" height="{ALTEZZA}" fill="white"/>',
    ]
    if spec.title:
        righe.append(f'<text x="{LARGHEZZA / 2:.2f}" y="20" text-anchor="middle" font-size="14">'
                     f'{escape(spec.title)}</text>')

    x0, x1 = _MARGINE_SX, LARGHEZZA - _MARGINE_DX
    y0, y1 = ALTEZZA - _MARGINE_GIU, _MARGINE_SU
    righe.append(f'<line x1="{x0}" y1="{y0}" x2="{x1}" y2="{y0}" stroke="black"/>')
    righe.append(f'<line x1="{x0}" y1="{y0}" x2="{x0}" y2="{y1}" stroke="black"/>')

    tacche_x = [float(i + 1) for i in range(len(categorie))] if categorie else sx.tacche()
    for i, valore in enumerate(tacche_x):
        px = sx(valore)
        testo = categorie[i] if categorie else _etichetta(valore)
        righe.append(f'<line x1="{_fmt(px)}" y1="{y0}" x2="{_fmt(px)}" y2="{y0 + 5}" stroke="black"/>')
        righe.append(f'<text x="{_fmt(px)}" y="{y0 + 18}" text-anchor="middle">{escape(testo)}</text>')
    for valore in sy.tacche():
        py = sy(valore)
        righe.append(f'<line x1="{x0 - 5}" y1="{_fmt(py)}" x2="{x0}" y2="{_fmt(py)}" stroke="black"/>')
        righe.append(f'<text x="{x0 - 8}" y="{_fmt(py + 4)}" text-anchor="end">{_etichetta(valore)}</text>')
    righe.append(f'<text x="{(x0 + x1) / 2:.2f}" y="{ALTEZZA - 12}" text-anchor="middle">{escape(spec.x)}</text>')
    righe.append(f'<text x="16" y="{(y0 + y1) / 2:.2f}" text-anchor="middle" '
                 f'transform="rotate(-90 16 {(y0 + y1) / 2:.2f})">{escape(spec.y)}</text>')

    dati = pd.DataFrame({"x": x.to_numpy(dtype=float), "y": y.to_numpy(dtype=float)})
    dati["serie"] = tabella[spec.series].astype(str).to_numpy() if spec.series else spec.y
    for k, (nome, gruppo) in enumerate(dati.groupby("serie", sort=False)):
        colore = _COLORI[k % len(_COLORI)]
        gruppo = gruppo.sort_values("x", kind="stable")
        punti = " ".join(f"{_fmt(sx(px))},{_fmt(sy(py))}" for px, py in zip(gruppo["x"], gruppo["y"]))
        righe.append(f'<polyline fill="none" stroke="{colore}" stroke-width="1.5" points="{punti}"/>')
        ly = _MARGINE_SU + 16 * k
        righe.append(f'<line x1="{x1 + 15}" y1="{ly}" x2="{x1 + 35}" y2="{ly}" stroke="{colore}" stroke-width="2"/>')
        righe.append(f'<text x="{x1 + 40}" y="{ly + 4}">{escape(str(nome))}</text>')

    righe.append("</svg>")
    return "\n".join(righe) + "\n"


def render_svg(csv_path: Path | str, out_path: Path | str, plot_spec: PlotSpec | None = None) -> Path:
    """Legge un CSV di risultati e scrive il grafico SVG corrispondente.

    Senza ``plot_spec`` assi e serie sono dedotti dallo schema del CSV.

    Solleva
    -------
    SchemaError
        Per CSV vuoto, schema non riconosciuto o colonne non adatte.
    """
    tabella = _leggi(csv_path)
    spec = plot_spec or spec_da_schema(tabella.columns)
    percorso = scrivi_atomico(out_path, componi_svg(tabella, spec))
    logger.info("Grafico %s -> %s", Path(csv_path).name, percorso)
    return percorso
