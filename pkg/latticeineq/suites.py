"""
Verification suites behind the CLI commands.

Each suite takes a RunConfig and returns a SuiteResult: a list of named
checks, plus table rows for the commands that produce tables. Randomized
checks draw from numpy.random.default_rng(config.seed), so a run is fully
determined by its configuration.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional

import numpy as np

from labellings import L1Enumeration, SpiralEnumeration, WangWangEnumeration, get_labelling

from .antisym import antisym_hardy_quotient, antisym_rayleigh_bracket, antisymmetrize, cp_brute, cp_constant
from .coefficients import (
    coeff_xi,
    coefficient_table,
    combinatorial_identity_check,
    gamma_simplified,
    higher_order_constant,
    weight_chain_constant,
    weight_chain_from_tables,
)
from .comparison import comparison_lemma_check, lattice_comparison_graph, psi_scan, structure_check
from .config import FOURIER_GRID, INEQUALITY_SLACK, PREFIX_SCAN_LIMIT, PSI_SCAN_LIMIT
from .constants import constant_table, explicit_constant
from .hardy_fourier import InequalityParams, verify_discrete_inequality
from .highdim import constant_scaling, hardy_constant_bracket, hardy_quotient_nd, hardy_rayleigh_box, plateau_ratio
from .isoperimetry import brute_iso_number, iso_sequence
from .lattice import SparseLatticeFunction
from .lattice_rearrange import (
    boundary_window,
    counterexample_search,
    degree_fact_check,
    rearrangement_bound,
    rearrangement_ratio,
)
from .polar import sphere_spectrum
from .rearrange_axis import (
    contraction_check,
    hardy_littlewood_check,
    hardy_via_rearrangement,
    second_order_counterexample,
    weighted_ps_check,
)
from .rearrange_fourier import (
    beta_closed_form,
    fourier_pair_check,
    fourier_rearrangement,
    ps_fourier_check,
    series_identity_check,
    symmetric_ps_check,
)
from .reports import CheckResult
from .run_config import TABLE_CONSTANTS, RunConfig
from .supersolution import (
    b4_closed_form,
    b6_closed_form,
    coeff_b_exact,
    hardy_quotient_weighted,
    improvement_check,
    power_family_limit_ratio,
    power_triple,
    sharpness_family,
    sign_scan_b,
    supersolution_check,
    weight_dominance_scan,
)
from .torus import antisymmetric_extremal, lattice_to_torus_psi, torus_identity_check, torus_inequality_check

logger = logging.getLogger(__name__)


@dataclass
class SuiteResult:
    """Checks of one run; rows are set only by table-producing commands."""
    command: str
    checks: List[CheckResult] = field(default_factory=list)
    rows: List[Dict[str, Any]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def first_failure(self) -> Optional[CheckResult]:
        return next((c for c in self.checks if not c.passed), None)

    def records(self) -> List[Any]:
        """What goes into the report: table rows when present, otherwise the checks."""
        return list(self.rows) if self.rows else list(self.checks)


# -------------------------
# RANDOM FUNCTIONS
# -------------------------

def random_half_line(rng: np.random.Generator, length: int, start: int = 1) -> SparseLatticeFunction:
    """Real normal values on start..start+length-1, zero elsewhere."""
    return SparseLatticeFunction.from_sequence(list(rng.normal(size=length)), start=start)


def random_line(rng: np.random.Generator, radius: int) -> SparseLatticeFunction:
    """Real normal values on [-radius, radius] with u(0) = 0."""
    values = {(n,): float(rng.normal()) for n in range(-radius, radius + 1) if n != 0}
    return SparseLatticeFunction(1, values)


def random_lattice(
    rng: np.random.Generator,
    dim: int,
    radius: int,
    zero_origin: bool = True,
) -> SparseLatticeFunction:
    """Real normal values on the box [-radius, radius]^dim."""
    values = {}
    for index in np.ndindex(*(2 * radius + 1,) * dim):
        point = tuple(int(i) - radius for i in index)
        if zero_origin and not any(point):
            continue
        values[point] = float(rng.normal())
    return SparseLatticeFunction(dim, values)


def random_nonnegative(rng: np.random.Generator, radius: int, density: float = 0.5) -> SparseLatticeFunction:
    """Uniform values on a random subset of [-radius, radius]^2; never identically zero."""
    values = {}
    for a in range(-radius, radius + 1):
        for b in range(-radius, radius + 1):
            if rng.random() < density:
                values[(a, b)] = float(rng.uniform(0.05, 1.0))
    if not values:
        values[(0, 0)] = 1.0
    return SparseLatticeFunction(2, values)


def _finite(pvalues: List[float]) -> List[float]:
    return [p for p in pvalues if p != math.inf]


def _all_hold(
    check_id: str,
    description: str,
    reports: List[Any],
    witnesses: List[Any],
    details: Optional[Dict[str, Any]] = None,
) -> CheckResult:
    """Collapse a batch of reports with .holds into one check; the witness is the first failure."""
    failed = [i for i, r in enumerate(reports) if not r.holds]
    details = dict(details or {})
    details["cases"] = len(reports)
    details["failures"] = len(failed)
    witness = None
    if failed:
        i = failed[0]
        witness = {"report": reports[i], "input": witnesses[i]}
        logger.warning("%s: %d of %d cases fail", check_id, len(failed), len(reports))
    return CheckResult(check_id, description, not failed, details, witness)


def _min_ratio(reports: List[Any]) -> float:
    return min((r.ratio for r in reports), default=math.inf)


# -------------------------
# hardy1d
# -------------------------

WEIGHTED_HARDY_ALPHAS = (0.0, 0.5, 5.0, 6.0)
IMPROVEMENT_ALPHAS = (0.0, 1.0 / 3.0, 0.6)
SIGN_SCAN_ALPHAS = [Fraction(0)] + [Fraction(1, 3) + Fraction(i, 15) for i in range(10)]
SUPERSOLUTION_N_MAX = 10_000


def suite_hardy1d(config: RunConfig) -> SuiteResult:
    rng = np.random.default_rng(config.seed)
    checks = []

    for alpha in WEIGHTED_HARDY_ALPHAS:
        inputs = [random_half_line(rng, int(rng.integers(1, 12))) for _ in range(config.trials)]
        reports = [hardy_quotient_weighted(u, alpha) for u in inputs]
        checks.append(_all_hold(
            f"hardy1d.weighted.alpha{alpha:g}",
            f"weighted Hardy on N_0 with constant (alpha-1)^2/4 at alpha={alpha:g}",
            reports,
            inputs,
            {"alpha": alpha, "min_ratio": _min_ratio(reports)},
        ))

    for alpha, beta, target, rtol in ((0.0, 0.499, 0.25, 0.02), (6.0, -2.501, 6.25, 0.05)):
        limit = power_family_limit_ratio(alpha, beta)
        checks.append(CheckResult(
            f"hardy1d.sharpness.alpha{alpha:g}",
            "power family quotient approaches (alpha-1)^2/4",
            abs(limit - target) <= rtol * target,
            {"alpha": alpha, "beta": beta, "limit_ratio": limit, "target": target, "rtol": rtol},
        ))

    ratios = [hardy_quotient_weighted(sharpness_family(0.0, 0.499, N), 0.0).ratio for N in (10, 100, 1000)]
    checks.append(CheckResult(
        "hardy1d.sharpness.finite",
        "truncated power family stays above 1/4 and decreases in N",
        all(r >= 0.25 - INEQUALITY_SLACK for r in ratios) and ratios[0] > ratios[1] > ratios[2],
        {"N": [10, 100, 1000], "ratios": ratios},
    ))

    report = supersolution_check(power_triple(0.0, 0.5), SUPERSOLUTION_N_MAX)
    checks.append(CheckResult(
        "hardy1d.supersolution",
        "phi = n^(1/2), v = 1 is a supersolution for w_{0,1/2}",
        report.holds,
        {"n_max": report.n_max, "min_residual": report.min_residual},
        report.first_violation,
    ))

    for alpha in IMPROVEMENT_ALPHAS:
        inputs = [random_half_line(rng, int(rng.integers(1, 12))) for _ in range(config.trials)]
        reports = [improvement_check(u, alpha) for u in inputs]
        checks.append(_all_hold(
            f"hardy1d.improvement.alpha{alpha:.3g}",
            "b_k remainder stays below the weighted Hardy gap",
            reports,
            inputs,
            {"alpha": alpha},
        ))

    signs = sign_scan_b(SIGN_SCAN_ALPHAS, range(3, 61))
    negative = [(str(a), k) for a, row in signs.items() for k, s in row.items() if s < 0]
    checks.append(CheckResult(
        "hardy1d.b_signs",
        "b_k(alpha) >= 0 for k = 3..60 on a rational grid of [1/3, 1) and alpha = 0",
        not negative,
        {"alphas": [str(a) for a in SIGN_SCAN_ALPHAS], "negative": negative[:10]},
    ))

    for alpha, expect_nonnegative in ((0.5, True), (2.0, False), (-1.0, False)):
        scan = weight_dominance_scan(alpha)
        checks.append(CheckResult(
            f"hardy1d.dominance.alpha{alpha:g}",
            "weight dominance gap has the expected sign",
            (scan.min_gap >= 0) == expect_nonnegative,
            {"alpha": alpha, "min_gap": scan.min_gap, "argmin": scan.argmin},
        ))
    return SuiteResult("hardy1d", checks)


# -------------------------
# hardy-fourier
# -------------------------

def suite_hardy_fourier(config: RunConfig) -> SuiteResult:
    rng = np.random.default_rng(config.seed)
    checks = []

    for kind in ("weighted_hardy", "improved_weighted_hardy"):
        for k in (1, 2, 3):
            params = InequalityParams(kind, k=k)
            inputs = [random_line(rng, int(rng.integers(1, 9))) for _ in range(config.trials)]
            reports = [verify_discrete_inequality(params, u) for u in inputs]
            checks.append(_all_hold(
                f"hardy-fourier.{kind}.k{k}",
                f"{kind.replace('_', ' ')} on Z of order k={k}",
                reports,
                inputs,
                {"k": k, "min_ratio": _min_ratio(reports)},
            ))

    for kind in ("rellich", "grad_rellich"):
        for m in (1, 2):
            params = InequalityParams(kind, m=m)
            first = 2 * m if kind == "rellich" else 2 * m + 1
            inputs = [random_half_line(rng, int(rng.integers(1, 10)), start=first) for _ in range(config.trials)]
            reports = [verify_discrete_inequality(params, u) for u in inputs]
            family = "laplacian" if kind == "rellich" else "grad_laplacian"
            checks.append(_all_hold(
                f"hardy-fourier.{kind}.m{m}",
                f"{kind.replace('_', ' ')} on N_0 of order m={m}",
                reports,
                inputs,
                {"m": m, "constant": higher_order_constant(m, family), "min_ratio": _min_ratio(reports)},
            ))
    return SuiteResult("hardy-fourier", checks)


# -------------------------
# hardy-nd
# -------------------------

PLATEAU_SIZES = (10, 100, 1000)
PLATEAU_GROWTH_PER_DECADE = 0.5


def suite_hardy_nd(config: RunConfig) -> SuiteResult:
    rng = np.random.default_rng(config.seed)
    checks = []

    for d in (3, 4, 5):
        for k, operator in ((0, "grad_laplacian"), (1, "laplacian"), (1, "grad_laplacian")):
            inputs = [random_lattice(rng, d, 1) for _ in range(config.trials)]
            reports = [hardy_quotient_nd(u, k, operator) for u in inputs]
            checks.append(_all_hold(
                f"hardy-nd.{operator}.k{k}.d{d}",
                f"order-{k} {operator} inequality on Z^{d} against the torus lower bound",
                reports,
                inputs,
                {"d": d, "k": k, "constant": reports[0].constant, "min_ratio": _min_ratio(reports)},
            ))

    dims = list(range(3, min(config.dmax, 64) + 1))
    brackets = [hardy_constant_bracket(d) for d in dims]
    bad = [b.d for b in brackets if not (b.consistent and b.test_ratio <= 4 * b.d)]
    checks.append(CheckResult(
        "hardy-nd.bracket",
        "lower bound <= unit-sphere indicator quotient <= 4d",
        not bad,
        {"dims": [dims[0], dims[-1]] if dims else [], "failures": bad},
    ))

    rayleigh = hardy_rayleigh_box(3, 4)
    lower = explicit_constant("C1_lower", 0, 3)
    checks.append(CheckResult(
        "hardy-nd.rayleigh",
        "box Rayleigh quotient on Z^3 sits above the torus lower bound",
        rayleigh.value >= lower - INEQUALITY_SLACK,
        {"value": rayleigh.value, "lower": lower, "radius": rayleigh.radius},
    ))

    plateau = [plateau_ratio(N) for N in PLATEAU_SIZES]
    ratios = [p.ratio for p in plateau]
    growth = [b - a for a, b in zip(ratios, ratios[1:])]
    checks.append(CheckResult(
        "hardy-nd.plateau",
        "d = 2 plateau family: energy 16, ratio grows by a fixed amount per decade",
        all(abs(p.energy - 16.0) <= 1e-9 for p in plateau) and all(g >= PLATEAU_GROWTH_PER_DECADE for g in growth),
        {"N": list(PLATEAU_SIZES), "ratios": ratios, "growth": growth},
    ))

    if config.dmax >= 8:
        rows = constant_scaling(list(range(8, config.dmax + 1)))
        values = [v for row in rows for key, v in row.items() if key != "d"]
        checks.append(CheckResult(
            "hardy-nd.scaling",
            "H/d, HR/d and R/d^2 are finite and positive",
            all(math.isfinite(v) and v > 0 for v in values),
            {"dims": [8, config.dmax], "last": rows[-1]},
        ))
    return SuiteResult("hardy-nd", checks)


# -------------------------
# torus
# -------------------------

def suite_torus(config: RunConfig) -> SuiteResult:
    rng = np.random.default_rng(config.seed)
    checks = []

    for d, radius, trials in ((2, 2, config.trials), (3, 1, min(config.trials, 10))):
        for k in (0, 1):
            for parity in ("odd", "even"):
                inputs = [random_lattice(rng, d, radius) for _ in range(trials)]
                reports = [r for u in inputs for r in torus_identity_check(u, k, parity)]
                paired = [u for u in inputs for _ in range(2)]
                checks.append(_all_hold(
                    f"torus.identity.d{d}.k{k}.{parity}",
                    f"lattice sums equal torus integrals ({parity}, k={k}, d={d})",
                    reports,
                    paired,
                    {"d": d, "k": k, "max_residual": max(r.residual for r in reports)},
                ))

    inputs = [random_lattice(rng, 3, 1) for _ in range(min(config.trials, 2))]
    reports = [torus_inequality_check("hardy", lattice_to_torus_psi(u, 0, "odd")) for u in inputs]
    checks.append(_all_hold(
        "torus.hardy.d3",
        "torus Hardy inequality with constant H(0,3) on zero-average psi",
        reports,
        inputs,
        {"min_ratio": _min_ratio(reports)},
    ))

    report = torus_inequality_check("antisymmetric_poincare", antisymmetric_extremal(3))
    checks.append(CheckResult(
        "torus.antisymmetric_poincare.d3",
        "antisymmetric Poincare inequality at its extremal",
        report.holds,
        {"ratio": report.ratio, "constant": report.constant},
        None if report.holds else report,
    ))
    return SuiteResult("torus", checks)


# -------------------------
# antisym
# -------------------------

SPHERE_RADII = 50
CP_DIMS = 8


def suite_antisym(config: RunConfig) -> SuiteResult:
    rng = np.random.default_rng(config.seed)
    checks = []

    for d, radius in ((2, 3), (3, 1)):
        inputs = [antisymmetrize(random_lattice(rng, d, radius)) for _ in range(config.trials)]
        inputs = [u for u in inputs if not u.is_zero()]
        reports = [antisym_hardy_quotient(u) for u in inputs]
        checks.append(_all_hold(
            f"antisym.hardy.d{d}",
            f"antisymmetric Hardy inequality on Z^{d}",
            reports,
            inputs,
            {"d": d, "constant": reports[0].constant if reports else None, "min_ratio": _min_ratio(reports)},
        ))

    residual = max(sphere_spectrum(r).max_residual for r in range(1, SPHERE_RADII + 1))
    checks.append(CheckResult(
        "antisym.sphere_spectrum",
        "sine vectors are eigenvectors of the sphere graphs",
        residual <= 1e-10,
        {"r_max": SPHERE_RADII, "max_residual": residual},
    ))

    mismatch = [d for d in range(2, CP_DIMS + 1) if cp_constant(d) != cp_brute(d)]
    checks.append(CheckResult(
        "antisym.cp",
        "closed form for C_p matches the brute-force minimum",
        not mismatch,
        {"d_max": CP_DIMS, "mismatch": mismatch},
    ))

    brackets = {d: antisym_rayleigh_bracket(d) for d in range(2, 7)}
    off = [d for d, r in brackets.items() if abs(r.ratio - 2 * d * cp_constant(d)) > 1e-9 * r.ratio or not r.holds]
    checks.append(CheckResult(
        "antisym.rayleigh",
        "antisymmetrized delta has quotient 2d C_p above the constant",
        not off,
        {"ratios": {str(d): r.ratio for d, r in brackets.items()}, "failures": off},
    ))
    return SuiteResult("antisym", checks)


# -------------------------
# rearrange-axis
# -------------------------

def suite_rearrange_axis(config: RunConfig) -> SuiteResult:
    rng = np.random.default_rng(config.seed)
    checks = []
    pvalues = _finite(config.pvalues) or [2.0]

    inputs, reports = [], []
    for _ in range(config.trials):
        u = random_half_line(rng, int(rng.integers(1, 10)), start=0)
        w = list(np.cumsum(rng.uniform(0.0, 1.0, size=len(u) + 2)))
        p = float(pvalues[int(rng.integers(len(pvalues)))])
        inputs.append({"u": u, "w": w, "p": p})
        reports.append(weighted_ps_check(u, w, p))
    checks.append(_all_hold(
        "rearrange-axis.polya_szego",
        "weighted Polya-Szego on Z+ for nondecreasing weights",
        reports,
        inputs,
    ))

    pairs = [
        (SparseLatticeFunction.from_sequence(list(rng.uniform(0, 1, size=8))),
         SparseLatticeFunction.from_sequence(list(rng.uniform(0, 1, size=8))))
        for _ in range(config.trials)
    ]
    checks.append(_all_hold(
        "rearrange-axis.hardy_littlewood",
        "sum u v <= sum u~ v~",
        [hardy_littlewood_check(u, v) for u, v in pairs],
        [{"u": u, "v": v} for u, v in pairs],
    ))
    checks.append(_all_hold(
        "rearrange-axis.contraction",
        "rearrangement contracts l^p distances",
        [contraction_check(u, v, pvalues[0]) for u, v in pairs],
        [{"u": u, "v": v} for u, v in pairs],
        {"p": pvalues[0]},
    ))

    example = second_order_counterexample(2.0, 0.5)
    checks.append(CheckResult(
        "rearrange-axis.second_order",
        "the Laplacian energy can grow under rearrangement",
        example.rearranged_larger and abs(example.original - example.closed_form) <= 1e-12,
        {"original": example.original, "rearranged": example.rearranged},
    ))

    for alpha in (1.5, 2.0):
        inputs = []
        for _ in range(config.trials):
            tail = rng.normal(size=int(rng.integers(1, 10)))
            head = float(np.max(np.abs(tail))) + 0.1
            inputs.append(SparseLatticeFunction.from_sequence([head] + list(tail)))
        reports = [hardy_via_rearrangement(u, alpha) for u in inputs]
        checks.append(_all_hold(
            f"rearrange-axis.hardy.alpha{alpha:g}",
            "weighted Hardy for functions peaking at the origin",
            reports,
            inputs,
            {"alpha": alpha, "min_ratio": _min_ratio(reports)},
        ))
    return SuiteResult("rearrange-axis", checks)


# -------------------------
# rearrange-fourier
# -------------------------

BETA_WINDOW = 16


def suite_rearrange_fourier(config: RunConfig) -> SuiteResult:
    rng = np.random.default_rng(config.seed)
    checks = []
    size = max(config.grid, FOURIER_GRID)

    beta = 1.0
    sharp = fourier_rearrangement(SparseLatticeFunction.from_sequence([beta, beta]), size)
    error = max(
        abs(complex(sharp.function.get((n,))).real - beta_closed_form(beta, n))
        for n in range(-BETA_WINDOW, BETA_WINDOW + 1)
    )
    checks.append(CheckResult(
        "rearrange-fourier.beta",
        "rearrangement of beta(delta_0 + delta_1) matches its closed form",
        error <= 1e-3,
        {"grid": size, "max_error": error, "imag_mass": sharp.imag_mass},
    ))

    series = series_identity_check()
    checks.append(CheckResult(
        "rearrange-fourier.series",
        "sum 1/(4n^2-1)^2 = pi^2/8",
        series.error <= 1e-8,
        {"value": series.value, "error": series.error},
    ))

    grid = min(config.grid, 512)
    inputs = [random_line(rng, int(rng.integers(1, 5))) for _ in range(config.trials)]
    for k, operator in ((0, "grad_laplacian"), (1, "laplacian")):
        reports = [ps_fourier_check(u, k, operator, grid) for u in inputs]
        checks.append(_all_hold(
            f"rearrange-fourier.polya_szego.{operator}.k{k}",
            "operator energies do not grow under Fourier rearrangement",
            reports,
            inputs,
            {"grid": grid},
        ))

    pairs = [(random_line(rng, 3), random_line(rng, 3)) for _ in range(config.trials)]
    checks.append(_all_hold(
        "rearrange-fourier.pairs",
        "Hardy-Littlewood and contraction on the Fourier side",
        [fourier_pair_check(u, v, grid) for u, v in pairs],
        [{"u": u, "v": v} for u, v in pairs],
    ))

    sample = inputs[: min(len(inputs), 10)]
    checks.append(_all_hold(
        "rearrange-fourier.symmetric_decreasing",
        "energy does not grow under symmetric-decreasing rearrangement",
        [symmetric_ps_check(u, size) for u in sample],
        sample,
    ))
    return SuiteResult("rearrange-fourier", checks)


# -------------------------
# rearrange-lattice
# -------------------------

ISO_TABLE = [4, 6, 7, 8, 8, 9]
COMPARISON_CHILDREN = {1: [2, 3, 4, 5], 2: [6, 7, 8], 3: [9, 10], 4: [11, 12], 5: [13]}
BRUTE_CHECK_SIZE = 7


def suite_rearrange_lattice(config: RunConfig) -> SuiteResult:
    rng = np.random.default_rng(config.seed)
    checks = []
    spiral, wang_wang = SpiralEnumeration(), WangWangEnumeration()

    enumerated = iso_sequence(BRUTE_CHECK_SIZE)
    brute = [brute_iso_number(n) for n in range(1, BRUTE_CHECK_SIZE + 1)]
    checks.append(CheckResult(
        "rearrange-lattice.isoperimetry",
        "Wang-Wang prefix perimeters equal the brute-force minima and the known table",
        enumerated == brute and enumerated[: len(ISO_TABLE)] == ISO_TABLE,
        {"enumerated": enumerated, "brute": brute},
    ))

    graph = lattice_comparison_graph(200)
    children = {n: graph.children(n) for n in COMPARISON_CHILDREN}
    structure = structure_check(graph)
    checks.append(CheckResult(
        "rearrange-lattice.comparison_graph",
        "comparison graph is a leafless tree with interval boundaries",
        children == COMPARISON_CHILDREN and structure.holds,
        {"children": {str(n): c for n, c in children.items()}, "failures": structure.failures},
    ))

    inputs = [random_nonnegative(rng, 3) for _ in range(config.trials)]
    for name, enumeration, p in (("spiral", spiral, 1.0), ("wang_wang", wang_wang, math.inf)):
        ratios = [rearrangement_ratio(f, enumeration, p) for f in inputs]
        bad = [i for i, r in enumerate(ratios) if r.rearranged > r.original + INEQUALITY_SLACK * max(1.0, r.original)]
        checks.append(CheckResult(
            f"rearrange-lattice.contractive.{name}",
            f"the {name} rearrangement does not increase the p={p:g} gradient norm",
            not bad,
            {"p": p, "cases": len(ratios), "max_ratio": max(r.ratio for r in ratios)},
            {"ratio": ratios[bad[0]], "input": inputs[bad[0]]} if bad else None,
        ))

    for p in config.pvalues:
        for enumeration in (spiral, wang_wang):
            ratios = [rearrangement_ratio(f, enumeration, p) for f in inputs]
            checks.append(_all_hold(
                f"rearrange-lattice.bound.{enumeration.name}.p{p:g}",
                "gradient norm ratio stays below the labelling's bound",
                ratios,
                inputs,
                {"p": p, "bound": rearrangement_bound(enumeration, p), "max_ratio": max(r.ratio for r in ratios)},
            ))

    for p in _finite(config.pvalues):
        reports = [comparison_lemma_check(f, p) for f in inputs]
        checks.append(_all_hold(
            f"rearrange-lattice.comparison_lemma.p{p:g}",
            "the comparison function does not increase the gradient norm",
            reports,
            inputs,
            {"p": p},
        ))

    scan = psi_scan(PSI_SCAN_LIMIT)
    checks.append(CheckResult(
        "rearrange-lattice.psi",
        "spiral edges map to tree paths of length <= 4 used at most 16 times",
        scan.holds,
        {
            "i_max": scan.i_max,
            "edges": scan.edges,
            "max_length": scan.max_length,
            "max_multiplicity": scan.max_multiplicity,
        },
    ))

    window = boundary_window(wang_wang, PREFIX_SCAN_LIMIT)
    checks.append(CheckResult(
        "rearrange-lattice.window.wang_wang",
        "Wang-Wang prefix boundaries are the next sigma(n) labels",
        window.c == 1,
        {"c": window.c, "n_max": window.n_max},
    ))

    degree = {
        "wang_wang.d2": degree_fact_check(wang_wang, PREFIX_SCAN_LIMIT),
        "wang_wang.d3": degree_fact_check(WangWangEnumeration(3), PREFIX_SCAN_LIMIT),
        "l1.d3": degree_fact_check(L1Enumeration(3), PREFIX_SCAN_LIMIT),
    }
    checks.append(CheckResult(
        "rearrange-lattice.degree",
        "boundary vertices of l1-respecting prefixes have at most d inside neighbours",
        all(degree.values()),
        {"n_max": PREFIX_SCAN_LIMIT, "labellings": degree},
    ))
    return SuiteResult("rearrange-lattice", checks)


# -------------------------
# identity
# -------------------------

def _random_rational(rng: np.random.Generator) -> Fraction:
    return Fraction(int(rng.integers(-50, 51)), int(rng.integers(1, 21)))


def suite_identity(config: RunConfig) -> SuiteResult:
    rng = np.random.default_rng(config.seed)
    checks = []
    k_max = config.kmax

    report = combinatorial_identity_check(k_max)
    checks.append(CheckResult(
        "identity.combinatorial",
        "xi_i^k equals its closed form for all k <= kmax",
        report.holds,
        {"k_max": k_max, "checked": report.checked},
        list(report.first_failure) if report.first_failure else None,
    ))

    off = [
        k for k in range(1, k_max + 1)
        if gamma_simplified(1, k) != Fraction((2 * k - 1) ** 2, 4) or coeff_xi(k - 1, k) != -k * (k + 1)
    ]
    checks.append(CheckResult(
        "identity.endpoints",
        "gamma_1^k = (2k-1)^2/4 and xi_{k-1}^k = -k(k+1)",
        not off,
        {"k_max": k_max},
        off[0] if off else None,
    ))

    inconsistent = [(row.i, row.k) for row in coefficient_table(k_max) if not row.consistent]
    checks.append(CheckResult(
        "identity.tables",
        "raw and simplified alpha, beta, gamma agree",
        not inconsistent,
        {"k_max": k_max, "rows": sum(k + 1 for k in range(1, k_max + 1))},
        list(inconsistent[0]) if inconsistent else None,
    ))

    chain_off = [k for k in range(2, k_max + 1) if weight_chain_from_tables(k) != weight_chain_constant(k)]
    checks.append(CheckResult(
        "identity.weight_chain",
        "the weight chain from the tables equals k(k-1)(k-3/2)^2",
        not chain_off,
        {"k_max": k_max},
        chain_off[0] if chain_off else None,
    ))

    rellich = higher_order_constant(1, "laplacian")
    checks.append(CheckResult(
        "identity.rellich",
        "first-order Rellich constant is 5/16",
        rellich == Fraction(5, 16),
        {"value": rellich},
    ))

    alphas = [_random_rational(rng) for _ in range(config.trials)]
    bad = [
        a for a in alphas
        if coeff_b_exact(a, 4) != b4_closed_form(a) or coeff_b_exact(a, 6) != b6_closed_form(a)
    ]
    checks.append(CheckResult(
        "identity.b_closed_forms",
        "b_4 and b_6 match their closed forms at random rational alpha",
        not bad,
        {"cases": len(alphas)},
        bad[0] if bad else None,
    ))
    return SuiteResult("identity", checks)


# -------------------------
# search
# -------------------------

def suite_search(config: RunConfig) -> SuiteResult:
    """
    Counterexample search for the chosen labelling and p.

    Spiral at p = 1 and Wang-Wang at p = inf are contractive, so there the
    check passes when nothing is found; everywhere else it passes on a witness.
    """
    enumeration = get_labelling(config.labelling)
    evaluations, seconds = config.budget_limits()
    result = counterexample_search(
        enumeration,
        p=config.p,
        budget=evaluations,
        seconds=seconds,
        seed=config.seed,
    )
    contractive = (config.labelling == "spiral" and config.p == 1) or (
        config.labelling == "wang_wang" and config.p == math.inf
    )
    passed = not result.found if contractive else result.found
    check = CheckResult(
        f"search.{config.labelling}.p{config.p:g}",
        "no witness expected" if contractive else "witness with ratio > 1 expected",
        passed,
        {"iterations": result.iterations, "best_ratio": result.best_ratio, "found": result.found},
        result.witness,
    )
    return SuiteResult("search", [check])


# -------------------------
# tables
# -------------------------

def _nondecreasing(values: List[Optional[float]]) -> bool:
    defined = [v for v in values if v is not None]
    return all(b >= a for a, b in zip(defined, defined[1:]))


MONOTONE_CONSTANTS = ("H", "HR", "R")


def suite_tables(config: RunConfig) -> SuiteResult:
    """
    Constant table (d, k, H, HR, R, C, C_tilde) over d = 2..dmax at k = 0 and
    the coefficient table (k, i, xi, alpha, beta, gamma) up to kmax.
    """
    dims = list(range(2, config.dmax + 1))
    constants = constant_table(dims, 0)
    selected = [name for name in TABLE_CONSTANTS if name in config.constants]
    rows: List[Dict[str, Any]] = [
        dict({"table": "constants", "d": row["d"], "k": row["k"]}, **{name: row[name] for name in selected})
        for row in constants
    ]
    for row in coefficient_table(config.kmax):
        rows.append({
            "table": "coefficients",
            "k": row.k,
            "i": row.i,
            "xi": row.xi,
            "alpha": row.alpha,
            "beta": row.beta,
            "gamma": row.gamma,
        })

    checked = [name for name in selected if name in MONOTONE_CONSTANTS]
    unsorted = [name for name in checked if not _nondecreasing([row[name] for row in constants])]
    check = CheckResult(
        "tables.monotone",
        "H, HR and R columns are nondecreasing in d",
        not unsorted,
        {"constants": selected, "checked": checked, "d_max": config.dmax},
        unsorted[0] if unsorted else None,
    )
    return SuiteResult("tables", [check], rows)


SUITES: Dict[str, Callable[[RunConfig], SuiteResult]] = {
    "hardy1d": suite_hardy1d,
    "hardy-fourier": suite_hardy_fourier,
    "hardy-nd": suite_hardy_nd,
    "torus": suite_torus,
    "antisym": suite_antisym,
    "rearrange-axis": suite_rearrange_axis,
    "rearrange-fourier": suite_rearrange_fourier,
    "rearrange-lattice": suite_rearrange_lattice,
    "identity": suite_identity,
    "search": suite_search,
    "tables": suite_tables,
}


def run_suite(config: RunConfig) -> SuiteResult:
    """Run the suite named by config.command."""
    if config.command not in SUITES:
        raise ValueError(f"Unknown command: {config.command}. Available: {list(SUITES.keys())}")
    logger.info("running %s (seed=%d)", config.command, config.seed)
    result = SUITES[config.command](config)
    logger.info(
        "%s: %d/%d checks passed",
        config.command,
        sum(c.passed for c in result.checks),
        len(result.checks),
    )
    return result
