"""Riga di comando ``qperc``.

Sottocomandi::

    qperc dataset gen-hard --n 1000 [--out hard1000.csv]
    qperc dataset margin --file hard1000.csv [--method auto]
    qperc run hybrid --file hard1000.csv --epsilon 0.05 --seed 7
    qperc bounds sweep --curve hybrid --var n --from 100 --to 100000 --points 13
    qperc experiment hard-steps --n 1000 --train-fraction 0.5
    qperc plot --csv out/fig1_n.csv --out out/fig1_n.svg

La CLI e' un guscio sottile sopra ``quantum_perceptron.tools``: ogni
risultato e' ottenibile anche chiamando direttamente le funzioni di
libreria. Precedenza dei parametri: flag > file ``--config`` > default.

Codici di uscita: 0 successo, 1 errore di utilizzo, 2 errore durante
l'esecuzione. Gli errori sono stampati su stderr con prefisso ``error:``.
"""

from __future__ import annotations

import argparse
import logging
import shlex
import sys
from collections.abc import Sequence
from pathlib import Path
from typing import Any, NoReturn

import pandas as pd

from quantum_perceptron import __version__
from quantum_perceptron.config.constants import ALGORITMI, BACKENDS, TIPI_RUMORE, ParametriCli
from quantum_perceptron.config.settings import directory_output
from quantum_perceptron.models.dataset import LabeledDataset
from quantum_perceptron.models.experiment import PARAMETRI_RICHIESTI, ExperimentSpec
from quantum_perceptron.models.grover import NoiseModel
from quantum_perceptron.models.perceptron import PROTOCOLLI, RunResult
from quantum_perceptron.tools.bounds import CURVE, VARIABILI_SWEEP, bound_sweep, num_hyperplanes
from quantum_perceptron.tools.datasets import (
    export_dataset_csv,
    load_dataset_csv,
    load_two_class_csv,
    make_hard_dataset,
    normalize,
    sample_hyperplanes,
)
from quantum_perceptron.tools.experiments import run_experiment
from quantum_perceptron.tools.margin import margin
from quantum_perceptron.tools.perceptron import classical_online
from quantum_perceptron.tools.quantum_perceptron import (
    hybrid_quantum,
    online_quantum,
    version_space_quantum,
)
from quantum_perceptron.tools.svg_plot import PlotSpec, render_svg
from quantum_perceptron.utils.logging_utils import configura_logging, log_esecuzione
from quantum_perceptron.utils.math_helpers import griglia_logaritmica
from quantum_perceptron.utils.output_files import leggi_chiave_valore, scrivi_csv, scrivi_meta
from quantum_perceptron.utils.rng import seme_derivato

logger = logging.getLogger(__name__)

USAGE_ERROR = 1
RUNTIME_ERROR = 2

ALIAS_ESPERIMENTI: dict[str, str] = {
    "fig1": "fig1_n",
    "fig1-n": "fig1_n",
    "fig1-gamma": "fig1_gamma",
    "fig2": "fig2_ratio",
    "fig3": "fig3_noise",
    "hard-steps": "hard_steps",
    "lemma1": "lemma1_mc",
    "loo": "loo_study",
}
"""Nome sulla riga di comando -> nome dell'esperimento."""

_PARAMETRI_ESPERIMENTO: tuple[str, ...] = tuple(sorted(set().union(*PARAMETRI_RICHIESTI.values())))


class UsageError(Exception):
    """Argomenti o configurazione non validi (codice di uscita 1)."""


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args: Any, **kwargs: Any) -> None:
        kwargs.setdefault("allow_abbrev", False)
        super().__init__(*args, **kwargs)

    def error(self, message: str) -> NoReturn:
        raise UsageError(message)


# ---------------------------------------------------------------------------
# Costruzione del parser
# ---------------------------------------------------------------------------

def _flag(nome: str) -> str:
    return "--" + nome.replace("_", "-")


def costruisci_parser() -> argparse.ArgumentParser:
    """Parser completo della CLI; i flag non indicati restano ``None``."""
    parser = _Parser(prog="qperc", description="Perceptron quantistici simulati con ricerca di Grover.")
    parser.add_argument("--version", action="version", version=f"qperc {__version__}")
    parser.add_argument("--config", help="File key=value con i valori di default dei flag.")
    parser.add_argument("--out-dir", dest="output_dir", help="Directory di output (default $QPERC_OUT_DIR o ./out).")
    parser.add_argument("--log-level", default=None, help="Livello di logging (DEBUG, INFO, ...).")
    comandi = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    dataset = comandi.add_parser("dataset", help="Generazione e analisi dei dataset.")
    azioni = dataset.add_subparsers(dest="action", required=True, parser_class=_Parser)
    gen = azioni.add_parser("gen-hard", help="Scrive il dataset Hard(n).")
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--out", help="File CSV di destinazione (default <out-dir>/hard<n>.csv).")
    marg = azioni.add_parser("margin", help="Calcola il margine di un dataset.")
    _argomenti_file(marg)
    marg.add_argument("--method", default="auto", help="auto, analytic, optimizer o exhaustive-2d.")

    run = comandi.add_parser("run", help="Esegue un algoritmo su un dataset.")
    run.add_argument("algorithm", choices=ALGORITMI)
    _argomenti_file(run)
    run.add_argument("--epsilon", type=float)
    run.add_argument("--gamma", type=float)
    run.add_argument("--backend", choices=BACKENDS)
    run.add_argument("--noise", choices=TIPI_RUMORE)
    run.add_argument("--p", type=float)
    run.add_argument("--seed", type=int)
    run.add_argument("--protocol", choices=PROTOCOLLI)

    bounds = comandi.add_parser("bounds", help="Calcolatori dei bound di complessita'.")
    azioni_b = bounds.add_subparsers(dest="action", required=True, parser_class=_Parser)
    sweep = azioni_b.add_parser("sweep", help="Valuta un bound su una griglia logaritmica.")
    sweep.add_argument("--curve", choices=CURVE, required=True)
    sweep.add_argument("--var", choices=VARIABILI_SWEEP, required=True)
    sweep.add_argument("--from", dest="da", type=float, required=True)
    sweep.add_argument("--to", dest="a", type=float, required=True)
    sweep.add_argument("--points", type=int, required=True)
    sweep.add_argument("--n", type=int)
    sweep.add_argument("--gamma", type=float)
    sweep.add_argument("--epsilon", type=float)

    esp = comandi.add_parser("experiment", help="Esegue un esperimento riproducibile.")
    esp.add_argument("experiment", choices=sorted(ALIAS_ESPERIMENTI))
    for nome in _PARAMETRI_ESPERIMENTO:
        esp.add_argument(_flag(nome), dest=f"param_{nome}", metavar="VALUE")

    plot = comandi.add_parser("plot", help="Disegna un CSV di risultati in SVG.")
    plot.add_argument("--csv", required=True)
    plot.add_argument("--out", required=True)
    plot.add_argument("--x")
    plot.add_argument("--y")
    plot.add_argument("--series")
    plot.add_argument("--log-x", action="store_true")
    plot.add_argument("--log-y", action="store_true")
    plot.add_argument("--title", default="")
    return parser


def _argomenti_file(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--file", help="CSV esportato (dim,label,x0,...) o tabella grezza.")
    parser.add_argument("--class-a", help="Classe +1 di una tabella grezza (ultima colonna = classe).")
    parser.add_argument("--class-b", help="Classe -1 di una tabella grezza.")


# ---------------------------------------------------------------------------
# Risoluzione della configurazione
# ---------------------------------------------------------------------------

_CHIAVI_GLOBALI = frozenset({"output_dir", "log_level", "seed", "epsilon", "gamma", "backend", "noise", "p",
                             "protocol"})


def leggi_config(percorso: str | None) -> dict[str, str]:
    """File ``--config`` come dizionario; chiavi con ``-`` normalizzate in ``_``.

    Solleva
    -------
    UsageError
        Per file illeggibile, riga malformata o chiave sconosciuta.
    """
    if percorso is None:
        return {}
    try:
        grezzo = leggi_chiave_valore(percorso)
    except OSError as exc:
        raise UsageError(f"cannot read config file '{percorso}': {exc.strerror or exc}") from exc
    except ValueError as exc:
        raise UsageError(f"invalid config file: {exc}") from exc
    config = {chiave.replace("-", "_"): valore for chiave, valore in grezzo.items()}
    sconosciute = sorted(set(config) - _CHIAVI_GLOBALI - set(_PARAMETRI_ESPERIMENTO))
    if sconosciute:
        raise UsageError(f"unknown config keys: {', '.join(sconosciute)}")
    return config


def _converti(valore: str, tipo: type, chiave: str) -> Any:
    try:
        return tipo(valore)
    except ValueError as exc:
        raise UsageError(f"config key '{chiave}' must be {tipo.__name__}, got '{valore}'") from exc


def _valore(flag: Any, config: dict[str, str], chiave: str, tipo: type, default: Any) -> Any:
    if flag is not None:
        return flag
    if chiave in config:
        return _converti(config[chiave], tipo, chiave)
    return default


def _in_aperto(valore: float | None, nome: str) -> None:
    if valore is not None and not 0.0 < valore < 1.0:
        raise UsageError(f"{nome} must be in (0,1)")


# ---------------------------------------------------------------------------
# Sottocomandi
# ---------------------------------------------------------------------------

def _carica(args: argparse.Namespace) -> LabeledDataset:
    if args.file is None:
        raise UsageError("--file is required")
    if (args.class_a is None) != (args.class_b is None):
        raise UsageError("--class-a and --class-b must be given together")
    if args.class_a is not None:
        return normalize(load_two_class_csv(args.file, args.class_a, args.class_b))
    return load_dataset_csv(args.file)


def _comando_dataset(args: argparse.Namespace, config: dict[str, str], uscita: Path) -> str:
    if args.action == "gen-hard":
        if args.n < 1:
            raise UsageError("n must be at least 1")
        ds = make_hard_dataset(args.n)
        percorso = export_dataset_csv(ds, args.out or uscita / f"hard{args.n}.csv")
        print(percorso)
        return str(percorso)

    ds = _carica(args)
    report = margin(ds, args.method)
    print(f"gamma={report.gamma!r}")
    print(f"method={report.method}")
    if report.witness is not None:
        print(f"witness={','.join(repr(float(v)) for v in report.witness.w)}")
    return f"gamma={report.gamma:.6g} ({report.method})"


def esegui_run(
    algorithm: str,
    ds: LabeledDataset,
    epsilon: float,
    gamma: float | None,
    backend: str,
    noise: NoiseModel,
    seed: int,
    protocol: str = "stream_until_clean",
) -> RunResult:
    """Esecuzione singola come dal sottocomando ``run``.

    Gli iperpiani candidati di ``version_space`` e ``hybrid`` sono
    campionati con il seed derivato (seed, 0); l'algoritmo usa (seed, 1).
    Senza ``gamma`` il margine del dataset dimensiona K; l'algoritmo
    online stima gamma da solo.
    """
    if algorithm == "classical":
        return classical_online(ds, protocol, gamma)
    if algorithm == "online":
        return online_quantum(ds, gamma, epsilon, backend, noise, seme_derivato(seed, 1))

    if gamma is None:
        stima = margin(ds)
        if not stima.separabile:
            raise ValueError(f"Il dataset '{ds.name}' non e' linearmente separabile.")
        gamma = stima.gamma
    iperpiani = sample_hyperplanes(num_hyperplanes(gamma, epsilon), ds.dim, seme_derivato(seed, 0))
    algoritmo = version_space_quantum if algorithm == "version_space" else hybrid_quantum
    return algoritmo(ds, iperpiani, epsilon, backend, noise, seme_derivato(seed, 1))


def _comando_run(args: argparse.Namespace, config: dict[str, str], uscita: Path) -> str:
    default = ParametriCli()
    epsilon = _valore(args.epsilon, config, "epsilon", float, default.epsilon)
    gamma = _valore(args.gamma, config, "gamma", float, None)
    backend = _valore(args.backend, config, "backend", str, default.backend)
    rumore = _valore(args.noise, config, "noise", str, default.noise)
    p = _valore(args.p, config, "p", float, default.p)
    seed = _valore(args.seed, config, "seed", int, default.seed)
    protocollo = _valore(args.protocol, config, "protocol", str, "stream_until_clean")

    _in_aperto(epsilon, "epsilon")
    _in_aperto(gamma, "gamma")
    if not 0.0 <= p <= 1.0:
        raise UsageError("p must be in [0,1]")
    if seed < 0:
        raise UsageError("seed must be non-negative")
    if backend not in BACKENDS:
        raise UsageError(f"backend must be one of {', '.join(BACKENDS)}")
    if rumore not in TIPI_RUMORE:
        raise UsageError(f"noise must be one of {', '.join(TIPI_RUMORE)}")
    if protocollo not in PROTOCOLLI:
        raise UsageError(f"protocol must be one of {', '.join(PROTOCOLLI)}")

    ds = _carica(args)
    risultato = esegui_run(args.algorithm, ds, epsilon, gamma, backend, NoiseModel(rumore, p), seed, protocollo)

    tabella = pd.DataFrame([risultato.riga_csv()])
    sys.stdout.write(tabella.to_csv(index=False, lineterminator="\n"))
    nome = f"run_{args.algorithm}"
    scrivi_csv(tabella, uscita / f"{nome}.csv")
    scrivi_meta(uscita / f"{nome}.meta", {
        "command": "run",
        "code_version": __version__,
        "algorithm": args.algorithm,
        "file": args.file,
        "master_seed": seed,
        "param.epsilon": epsilon,
        "param.gamma": "" if gamma is None else gamma,
        "param.backend": backend,
        "param.noise": rumore,
        "param.p": p,
        "param.protocol": protocollo,
        **{f"meta.{k}": v for k, v in sorted(risultato.metadati.items())},
    })
    return str(risultato)


def _comando_bounds(args: argparse.Namespace, config: dict[str, str], uscita: Path) -> str:
    n = _valore(args.n, config, "n", int, 1000)
    gamma = _valore(args.gamma, config, "gamma", float, 0.01)
    epsilon = _valore(args.epsilon, config, "epsilon", float, ParametriCli().epsilon)
    _in_aperto(epsilon, "epsilon")
    _in_aperto(gamma, "gamma")
    if args.points < 1:
        raise UsageError("points must be at least 1")
    if not 0.0 < args.da <= args.a:
        raise UsageError("sweep range must satisfy 0 < from <= to")

    valori = griglia_logaritmica(args.da, args.a, args.points)
    tabella = bound_sweep(args.curve, args.var, valori, n=n, gamma=gamma, epsilon=epsilon)
    nome = f"bounds_{args.curve}_{args.var}"
    percorso = scrivi_csv(tabella, uscita / f"{nome}.csv")
    scrivi_meta(uscita / f"{nome}.meta", {
        "command": "bounds sweep",
        "code_version": __version__,
        "param.curve": args.curve,
        "param.var": args.var,
        "param.from": args.da,
        "param.to": args.a,
        "param.points": args.points,
        "param.n": n,
        "param.gamma": gamma,
        "param.epsilon": epsilon,
    })
    sys.stdout.write(tabella.to_csv(index=False, lineterminator="\n"))
    return str(percorso)


def _comando_experiment(args: argparse.Namespace, config: dict[str, str], uscita: Path) -> str:
    nome = ALIAS_ESPERIMENTI[args.experiment]
    richiesti = PARAMETRI_RICHIESTI[nome]
    estranei = sorted(
        _flag(chiave) for chiave in _PARAMETRI_ESPERIMENTO
        if getattr(args, f"param_{chiave}") is not None and chiave not in richiesti
    )
    if estranei:
        raise UsageError(f"experiment {args.experiment} does not accept {', '.join(estranei)}")

    params: dict[str, Any] = {k: v for k, v in config.items() if k in richiesti}
    params.update({
        chiave: getattr(args, f"param_{chiave}")
        for chiave in richiesti if getattr(args, f"param_{chiave}") is not None
    })
    try:
        spec = ExperimentSpec.con_default(nome, uscita, **params)
    except ValueError as exc:
        raise UsageError(f"invalid parameters for {args.experiment}: {exc}") from exc

    tabella = run_experiment(spec)
    if nome == "hard_steps":
        passi = int(tabella["wall_steps"].iloc[0])
        print(passi)
        return f"wall_steps={passi}"
    percorso = uscita / f"{nome}.csv"
    print(percorso)
    return str(percorso)


def _comando_plot(args: argparse.Namespace, config: dict[str, str], uscita: Path) -> str:
    spec = None
    if args.x or args.y:
        if not (args.x and args.y):
            raise UsageError("--x and --y must be given together")
        spec = PlotSpec(args.x, args.y, args.series, args.log_x, args.log_y, args.title)
    percorso = render_svg(args.csv, args.out, spec)
    print(percorso)
    return str(percorso)


_COMANDI = {
    "dataset": _comando_dataset,
    "run": _comando_run,
    "bounds": _comando_bounds,
    "experiment": _comando_experiment,
    "plot": _comando_plot,
}


# ---------------------------------------------------------------------------
# Entry point
# ---------------------------------------------------------------------------

def _errore(messaggio: str) -> None:
    riga = " ".join(str(messaggio).split())
    print(f"error: {riga}", file=sys.stderr)


def main(argv: Sequence[str] | None = None) -> int:
    """Esegue la CLI e restituisce il codice di uscita (0, 1 o 2)."""
    argomenti = list(sys.argv[1:] if argv is None else argv)
    try:
        args = costruisci_parser().parse_args(argomenti)
        config = leggi_config(args.config)
        livello = args.log_level or config.get("log_level")
        uscita = Path(args.output_dir or config.get("output_dir") or directory_output())
    except UsageError as exc:
        _errore(str(exc))
        return USAGE_ERROR

    configura_logging(livello)
    comando = args.command + (f" {args.action}" if getattr(args, "action", None) else "")
    try:
        esito = _COMANDI[args.command](args, config, uscita)
    except UsageError as exc:
        _errore(str(exc))
        return USAGE_ERROR
    except Exception as exc:  # noqa: BLE001 - ogni errore di esecuzione diventa codice 2
        logger.debug("Errore in '%s'", comando, exc_info=True)
        _errore(str(exc))
        try:
            log_esecuzione(uscita, comando, shlex.join(argomenti), f"errore: {exc}")
        except OSError:
            pass
        return RUNTIME_ERROR

    log_esecuzione(uscita, comando, shlex.join(argomenti), esito)
    return 0


if __name__ == "__main__":
    sys.exit(main())
