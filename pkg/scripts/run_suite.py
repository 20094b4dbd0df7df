"""Script per eseguire l'intera suite di esperimenti e scrivere un report.

Esegue tutti gli esperimenti con i parametri di default, eventualmente
sovrascritti da un file di configurazione ``chiave=valore`` in configs/,
scrive CSV e .meta nella directory di output e compone un report
Markdown in output/markdown/.

Prerequisito: pip install -e . (dalla root del progetto)

Uso:
    python scripts/run_suite.py
    python scripts/run_suite.py configs/rapido.conf
"""
from __future__ import annotations

import sys
from datetime import date
from pathlib import Path

import pandas as pd

from quantum_perceptron import __version__
from quantum_perceptron.config.settings import REPORTS_DIR, assicura_directory, directory_output
from quantum_perceptron.models.experiment import ESPERIMENTI, PARAMETRI_RICHIESTI, ExperimentSpec
from quantum_perceptron.tools.experiments import run_experiment
from quantum_perceptron.utils.formatting import formatta_numero, formatta_percentuale, tabella_markdown
from quantum_perceptron.utils.logging_utils import configura_logging
from quantum_perceptron.utils.output_files import leggi_chiave_valore

# ===========================================================================
# HELPERS
# ===========================================================================

def carica_config(percorso: str | None) -> dict[str, str]:
    """Legge il file di configurazione; senza argomento restituisce un dizionario vuoto."""
    if percorso is None:
        return {}
    config = {k.replace("-", "_"): v for k, v in leggi_chiave_valore(percorso).items()}
    print(f"Configurazione caricata da {percorso}")
    return config


def _parametri(nome: str, config: dict[str, str]) -> dict[str, str]:
    """Sottoinsieme della configurazione accettato dall'esperimento."""
    return {k: v for k, v in config.items() if k in PARAMETRI_RICHIESTI[nome]}


def _righe(tabella: pd.DataFrame, colonne: list[str], decimali: int = 4) -> list[list[str]]:
    righe = []
    for riga in tabella[colonne].itertuples(index=False):
        celle = []
        for valore in riga:
            if isinstance(valore, float):
                celle.append(formatta_numero(valore, decimali))
            else:
                celle.append(str(valore))
        righe.append(celle)
    return righe


def _sezione_tabella(titolo: str, tabella: pd.DataFrame, colonne: list[str], decimali: int = 4) -> list[str]:
    return [
        f"## {titolo}",
        "",
        tabella_markdown(colonne, _righe(tabella, colonne, decimali), ["r"] * len(colonne)),
        "",
    ]


# ===========================================================================
# REPORT
# ===========================================================================

def genera_report(risultati: dict[str, pd.DataFrame], uscita: Path) -> str:
    """Compone il report Markdown a partire dalle tabelle degli esperimenti."""
    sezioni: list[str] = [
        "# Perceptron quantistici: risultati della suite",
        "",
        f"Versione del codice: `{__version__}`. File CSV e .meta in `{uscita}`.",
        "",
    ]

    for nome in ("fig1_n", "fig1_gamma"):
        pendenze = uscita / f"{nome}_slopes.csv"
        if nome in risultati and pendenze.exists():
            sezioni += _sezione_tabella(
                f"Pendenze log-log ({nome})",
                pd.read_csv(pendenze),
                ["curve", "x_var", "slope", "slope_polylog_corrected"],
                3,
            )

    if "fig2_ratio" in risultati:
        sezioni += _sezione_tabella(
            "Rapporto delle operazioni quantistiche/classiche",
            risultati["fig2_ratio"],
            ["dataset", "algorithm", "mean_ratio", "std_ratio", "trials"],
        )

    if "fig3_noise" in risultati:
        finali = risultati["fig3_noise"].groupby("noise_kind", sort=False).tail(1)
        sezioni += _sezione_tabella(
            "Probabilita' di successo all'ultimo numero di iterazioni",
            finali,
            ["noise_kind", "M", "p_estimate", "stderr"],
        )

    if "lemma1_mc" in risultati:
        sezioni += _sezione_tabella(
            "Probabilita' che un iperpiano gaussiano separi il cuneo",
            risultati["lemma1_mc"],
            ["gamma", "trials", "empirical", "exact", "bound_erf", "first_order"],
            5,
        )

    if "loo_study" in risultati:
        loo = risultati["loo_study"]
        estratte = loo[loo["separator_drawn"]]
        sezioni += [
            "## Errore leave-one-out del perceptron ibrido",
            "",
            "| Metrica | Valore |",
            "|---------|--------|",
            f"| Prove | {len(loo)} |",
            f"| Prove con separatore estratto | {formatta_percentuale(len(estratte) / len(loo), 1)} |",
            f"| Errore LOO medio | {formatta_numero(float(loo['loo_risk'].mean()), 4)} |",
            f"| K/N | {formatta_numero(float(loo['k_over_n'].iloc[0]), 4)} |",
            f"| Bound di generalizzazione | {formatta_numero(float(loo['generalization_bound'].iloc[0]), 4)} |",
            "",
        ]

    if "hard_steps" in risultati:
        sezioni += _sezione_tabella(
            "Passi del perceptron classico sul dataset Hard",
            risultati["hard_steps"],
            ["n", "train_fraction", "train_size", "wall_steps"],
            2,
        )

    sezioni += ["---", f"*Report generato il {date.today().isoformat()}*"]
    return "\n".join(sezioni)


def main() -> None:
    configura_logging()
    if len(sys.argv) > 2:
        print("Uso: python scripts/run_suite.py [CONFIG]")
        print("Esempio: python scripts/run_suite.py configs/rapido.conf")
        sys.exit(1)

    config = carica_config(sys.argv[1] if len(sys.argv) == 2 else None)
    uscita = Path(config.pop("output_dir", str(directory_output())))
    # chiavi globali della CLI che la suite non usa
    for chiave in ("log_level", "protocol"):
        config.pop(chiave, None)

    print("=== Suite completa degli esperimenti ===\n")
    risultati: dict[str, pd.DataFrame] = {}
    for nome in ESPERIMENTI:
        print(f"--- {nome} ---")
        try:
            spec = ExperimentSpec.con_default(nome, uscita, **_parametri(nome, config))
        except ValueError as exc:
            print(f"  parametri non validi: {exc}")
            sys.exit(1)
        risultati[nome] = run_experiment(spec)
        print(f"  {len(risultati[nome])} righe scritte in {uscita / (nome + '.csv')}")

    assicura_directory(REPORTS_DIR)
    report_path = REPORTS_DIR / f"suite_{date.today().isoformat()}.md"
    contenuto = genera_report(risultati, uscita)
    report_path.write_text(contenuto, encoding="utf-8")

    print(f"\nReport scritto in: {report_path}")
    print(f"Dimensione: {len(contenuto):,} caratteri")
    if "fig2_ratio" in risultati:
        print("\nRiepilogo rapido (rapporto medio quantistico/classico):")
        for riga in risultati["fig2_ratio"].itertuples(index=False):
            print(f"  {riga.dataset:<6} {riga.algorithm:<14} {riga.mean_ratio:.4g}")


if __name__ == "__main__":
    main()
