"""
latticeineq - discrete Hardy/Rellich inequalities, rearrangements and lattice isoperimetry

Modules:
- config: tolerances, grid sizes, search and file settings
- errors: InequalityError and the error log
- lattice: sparse functions on Z^d, gradients, boundaries, coarea
- supersolution: one-dimensional weighted Hardy via supersolutions
- coefficients: exact rational coefficient tables and identities
- trig: trigonometric polynomials on the torus
- hardy_fourier: one-dimensional inequalities from torus lemmas
- constants: explicit torus constants and lattice bounds
- torus: lattice/torus correspondence and torus inequalities
- antisym: antisymmetric Hardy inequalities
- polar: discrete polar coordinates and sphere graphs
- highdim: Hardy inequalities on Z^d, d >= 2
- rearrange_axis: decreasing rearrangement on Z+
- rearrange_fourier: Fourier rearrangement on Z^d
- isoperimetry: vertex isoperimetry of Z^d
- comparison: universal comparison graph and the psi map
- lattice_rearrange: rearrangement along a labelling and the counterexample search
- run_config: pydantic run configuration
- reports: shared check and quotient result records
- report: deterministic JSON/CSV reports
- suites: verification suites behind the CLI commands
"""
from __future__ import annotations

from .config import DEFAULT_SEED, ERROR_LOG, FLOAT_FORMAT, LOG_DIR, RUN_LOG
from .errors import InequalityError, domain_error, log_error, precondition_error
from .lattice import (
    SparseLatticeFunction,
    coarea_decompose,
    edge_boundary,
    grad_energy,
    grad_lp_norm,
    laplacian,
    lp_norm,
    vertex_boundary,
)
from .reports import CheckResult, QuotientReport
from .supersolution import (
    HardyWeightParams,
    coeff_b,
    coeff_b_exact,
    hardy_quotient_weighted,
    power_family_limit_ratio,
    power_triple,
    sharpness_family,
    supersolution_check,
    weight_w,
)
from .coefficients import (
    coeff_alpha_beta_gamma,
    coeff_xi,
    coefficient_table,
    combinatorial_identity_check,
    higher_order_constant,
)
from .trig import TrigPolynomial
from .hardy_fourier import InequalityParams, torus_lemma_check, verify_discrete_inequality
from .constants import constant_table, explicit_constant
from .torus import lattice_to_torus_psi, torus_identity_check, torus_inequality_check
from .antisym import antisym_hardy_quotient, antisymmetrize, cp_constant
from .polar import from_polar_2d, polar_coords_2d, sphere_spectrum
from .highdim import constant_scaling, hardy_quotient_nd, plateau_ratio
from .rearrange_axis import decreasing_rearrange, weighted_ps_check
from .rearrange_fourier import fourier_rearrange_1d, fourier_rearrange_nd, fourier_rearrangement
from .isoperimetry import brute_iso_number, iso_number, iso_sequence
from .comparison import ComparisonGraph, comparison_lemma_check, psi_map, psi_scan
from .lattice_rearrange import (
    counterexample_search,
    rearrange_along,
    rearrangement_bound,
    rearrangement_ratio,
)
from .run_config import RunConfig, load_run_config, validate_run_config
from .report import emit_report, parse_report, write_report
from .suites import SUITES, SuiteResult, run_suite

__all__ = [
    # config
    "DEFAULT_SEED",
    "ERROR_LOG",
    "FLOAT_FORMAT",
    "LOG_DIR",
    "RUN_LOG",
    # errors
    "InequalityError",
    "domain_error",
    "log_error",
    "precondition_error",
    # lattice
    "SparseLatticeFunction",
    "coarea_decompose",
    "edge_boundary",
    "grad_energy",
    "grad_lp_norm",
    "laplacian",
    "lp_norm",
    "vertex_boundary",
    # reports
    "CheckResult",
    "QuotientReport",
    # supersolution
    "HardyWeightParams",
    "coeff_b",
    "coeff_b_exact",
    "hardy_quotient_weighted",
    "power_family_limit_ratio",
    "power_triple",
    "sharpness_family",
    "supersolution_check",
    "weight_w",
    # coefficients
    "coeff_alpha_beta_gamma",
    "coeff_xi",
    "coefficient_table",
    "combinatorial_identity_check",
    "higher_order_constant",
    # trig
    "TrigPolynomial",
    # hardy_fourier
    "InequalityParams",
    "torus_lemma_check",
    "verify_discrete_inequality",
    # constants
    "constant_table",
    "explicit_constant",
    # torus
    "lattice_to_torus_psi",
    "torus_identity_check",
    "torus_inequality_check",
    # antisym
    "antisym_hardy_quotient",
    "antisymmetrize",
    "cp_constant",
    # polar
    "from_polar_2d",
    "polar_coords_2d",
    "sphere_spectrum",
    # highdim
    "constant_scaling",
    "hardy_quotient_nd",
    "plateau_ratio",
    # rearrange_axis
    "decreasing_rearrange",
    "weighted_ps_check",
    # rearrange_fourier
    "fourier_rearrange_1d",
    "fourier_rearrange_nd",
    "fourier_rearrangement",
    # isoperimetry
    "brute_iso_number",
    "iso_number",
    "iso_sequence",
    # comparison
    "ComparisonGraph",
    "comparison_lemma_check",
    "psi_map",
    "psi_scan",
    # lattice_rearrange
    "counterexample_search",
    "rearrange_along",
    "rearrangement_bound",
    "rearrangement_ratio",
    # run_config
    "RunConfig",
    "load_run_config",
    "validate_run_config",
    # report
    "emit_report",
    "parse_report",
    "write_report",
    # suites
    "SUITES",
    "SuiteResult",
    "run_suite",
]
