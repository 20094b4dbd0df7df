"""Strumenti di calcolo: dataset, ricerca di Grover, perceptron, bound, esperimenti.

Esportazioni principali
-----------------------
- **Dataset**: make_hard_dataset, load_two_class_csv, normalize, split_dataset, ecc.
- **Margine**: margin, margin_sweep_2d
- **Grover**: theta_from_fraction, success_probability, schedule_bound, qsearch, ecc.
- **Statevector**: Statevector, statevector_grover_sample, statevector_marked_probability
- **Perceptron**: verify_separator, classical_online, online_quantum, version_space_quantum, hybrid_quantum
- **Bound**: novikoff_bound, num_hyperplanes, amplification_rounds, online_q_bound, ecc.
- **Esperimenti**: run_fig1, run_fig2, run_fig3, run_hard_steps, run_lemma1_mc, run_loo_study
- **Grafici**: render_svg, PlotSpec
"""

# --- Dataset ---
from quantum_perceptron.tools.datasets import (
    DatasetError,
    export_dataset_csv,
    is_hard_dataset,
    load_dataset_csv,
    load_two_class_csv,
    make_hard_dataset,
    make_planted_margin_dataset,
    make_wedge_dataset,
    normalize,
    sample_hyperplanes,
    split_dataset,
    wedge_separation_probability,
)

# --- Margine ---
from quantum_perceptron.tools.margin import (
    margin,
    margin_sweep_2d,
    margine_analitico,
    margine_di,
    margine_ottimizzato,
)

# --- Grover ---
from quantum_perceptron.tools.grover import (
    analytic_grover_sample,
    avg_noisy_success_probability,
    avg_success_probability,
    noisy_success_probability,
    p_of_m_curve,
    qsearch,
    schedule_bound,
    success_probability,
    theta_from_fraction,
)
from quantum_perceptron.tools.statevector import (
    Statevector,
    UnsupportedBackendError,
    statevector_grover_sample,
    statevector_marked_probability,
)

# --- Perceptron ---
from quantum_perceptron.tools.perceptron import (
    CapExceededError,
    classical_online,
    verify_separator,
)
from quantum_perceptron.tools.quantum_perceptron import (
    hybrid_quantum,
    online_quantum,
    version_space_quantum,
)

# --- Bound ---
from quantum_perceptron.tools.bounds import (
    amplification_rounds,
    bound_sweep,
    classical_risk_bound,
    fit_log_log_slope,
    gaussian_separation_probability,
    generalization_bound,
    hybrid_bound,
    novikoff_bound,
    num_hyperplanes,
    online_attempts,
    online_q_bound,
    version_space_attempts,
    version_space_bound,
)

# --- Esperimenti ---
from quantum_perceptron.tools.experiments import (
    run_experiment,
    run_fig1,
    run_fig2,
    run_fig3,
    run_hard_steps,
    run_lemma1_mc,
)
from quantum_perceptron.tools.loo import run_loo_study

# --- Grafici ---
from quantum_perceptron.tools.svg_plot import PlotSpec, SchemaError, render_svg

__all__ = [
    # Dataset
    "DatasetError",
    "export_dataset_csv",
    "is_hard_dataset",
    "load_dataset_csv",
    "load_two_class_csv",
    "make_hard_dataset",
    "make_planted_margin_dataset",
    "make_wedge_dataset",
    "normalize",
    "sample_hyperplanes",
    "split_dataset",
    "wedge_separation_probability",
    # Margine
    "margin",
    "margin_sweep_2d",
    "margine_analitico",
    "margine_di",
    "margine_ottimizzato",
    # Grover
    "analytic_grover_sample",
    "avg_noisy_success_probability",
    "avg_success_probability",
    "noisy_success_probability",
    "p_of_m_curve",
    "qsearch",
    "schedule_bound",
    "success_probability",
    "theta_from_fraction",
    "Statevector",
    "UnsupportedBackendError",
    "statevector_grover_sample",
    "statevector_marked_probability",
    # Perceptron
    "CapExceededError",
    "classical_online",
    "verify_separator",
    "hybrid_quantum",
    "online_quantum",
    "version_space_quantum",
    # Bound
    "amplification_rounds",
    "bound_sweep",
    "classical_risk_bound",
    "fit_log_log_slope",
    "gaussian_separation_probability",
    "generalization_bound",
    "hybrid_bound",
    "novikoff_bound",
    "num_hyperplanes",
    "online_attempts",
    "online_q_bound",
    "version_space_attempts",
    "version_space_bound",
    # Esperimenti
    "run_experiment",
    "run_fig1",
    "run_fig2",
    "run_fig3",
    "run_hard_steps",
    "run_lemma1_mc",
    "run_loo_study",
    # Grafici
    "PlotSpec",
    "SchemaError",
    "render_svg",
]
