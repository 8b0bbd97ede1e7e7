#!/usr/bin/env python3
"""
Acceptance Audit Tool - runs every acceptance criterion at full size.

Usage:
    python -m tools.acceptance_audit

Output:
    Acceptance Audit Report with PASS/FAIL per criterion. Exit code 1 if any fails.
"""
from __future__ import annotations

import logging
import math
import sys
import time
from dataclasses import dataclass
from pathlib import Path
from typing import List

import numpy as np

# Add parent directory to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent))

from labellings import SpiralEnumeration, WangWangEnumeration
from latticeineq import RunConfig, run_suite
from latticeineq.coefficients import combinatorial_identity_check
from latticeineq.comparison import lattice_comparison_graph, psi_scan
from latticeineq.config import DEFAULT_SEED
from latticeineq.highdim import constant_scaling, hardy_constant_bracket
from latticeineq.isoperimetry import brute_iso_number, iso_sequence
from latticeineq.lattice import SparseLatticeFunction
from latticeineq.lattice_rearrange import counterexample_search
from latticeineq.rearrange_axis import weighted_ps_check
from latticeineq.suites import COMPARISON_CHILDREN, ISO_TABLE, random_lattice
from latticeineq.torus import torus_identity_check


@dataclass
class AuditResult:
    """Audit result for one acceptance criterion."""
    check_id: str
    description: str
    passed: bool
    details: str = ""


def _suite(check_id: str, description: str, command: str, prefixes: List[str], **params) -> AuditResult:
    """Run a CLI suite and keep the checks whose id starts with one of the prefixes."""
    try:
        result = run_suite(RunConfig(command=command, **params))
        picked = [c for c in result.checks if any(c.check_id.startswith(p) for p in prefixes)]
        if not picked:
            return AuditResult(check_id, description, False, f"no checks matched {prefixes}")
        failed = [c.check_id for c in picked if not c.passed]
        if failed:
            return AuditResult(check_id, description, False, f"failed: {failed}")
        return AuditResult(check_id, description, True, f"{len(picked)} checks passed")
    except Exception as e:
        return AuditResult(check_id, description, False, f"Error: {e}")


def check_combinatorial_identity() -> AuditResult:
    check_id, desc = "AC 1", "Combinatorial identity for k <= 16 in under 5 s"
    start = time.monotonic()
    report = combinatorial_identity_check(16)
    elapsed = time.monotonic() - start
    return AuditResult(check_id, desc, report.holds and elapsed < 5.0, f"{report.checked} pairs in {elapsed:.2f}s")


def check_sharpness() -> AuditResult:
    return _suite("AC 2", "Classical Hardy sharpness", "hardy1d", ["hardy1d.sharpness"], trials=1)


def check_weighted_hardy() -> AuditResult:
    return _suite("AC 3", "Weighted Hardy on 2000 random u", "hardy1d", ["hardy1d.weighted"], trials=2000)


def check_coefficient_closed_forms() -> AuditResult:
    return _suite(
        "AC 4",
        "b_4, b_6 closed forms and coefficient endpoints",
        "identity",
        ["identity.b_closed_forms", "identity.endpoints"],
        trials=100,
        kmax=16,
    )


def check_higher_order_constants() -> AuditResult:
    return _suite(
        "AC 5",
        "Rellich constant 5/16 and the weight chain",
        "identity",
        ["identity.rellich", "identity.weight_chain"],
        trials=1,
        kmax=16,
    )


def check_torus_correspondence() -> AuditResult:
    check_id, desc = "AC 6", "Torus identities for 50 random u at d in {2, 3}, k in {0, 1}"
    try:
        rng = np.random.default_rng(DEFAULT_SEED)
        worst = 0.0
        failures = 0
        for d, radius in ((2, 2), (3, 1)):
            for k in (0, 1):
                for parity in ("odd", "even"):
                    for _ in range(50):
                        for report in torus_identity_check(random_lattice(rng, d, radius), k, parity):
                            worst = max(worst, report.residual)
                            failures += not report.holds
        return AuditResult(check_id, desc, failures == 0, f"max relative residual {worst:.2e}")
    except Exception as e:
        return AuditResult(check_id, desc, False, f"Error: {e}")


def _monotone(values: List[float]) -> bool:
    steps = np.diff(values)
    return bool(np.all(steps >= 0) or np.all(steps <= 0))


def check_constant_scaling() -> AuditResult:
    check_id, desc = "AC 7", "Constant scaling for d = 8..512 and C_H(d) <= 4d for d <= 64"
    try:
        rows = constant_scaling(list(range(8, 513)))
        columns = ("H_over_d", "HR_over_d", "R_over_d2")
        bounded = all(math.isfinite(row[c]) and row[c] > 0 for row in rows for c in columns)
        tail = [row for row in rows if row["d"] >= 64]
        monotone = all(_monotone([row[c] for row in tail]) for c in columns)
        brackets = all(b.consistent and b.test_ratio <= 4 * b.d for b in map(hardy_constant_bracket, range(3, 65)))
        details = ", ".join(f"{c}(512)={rows[-1][c]:.4f}" for c in columns)
        return AuditResult(check_id, desc, bounded and monotone and brackets, details)
    except Exception as e:
        return AuditResult(check_id, desc, False, f"Error: {e}")


def check_antisymmetric() -> AuditResult:
    return _suite("AC 8", "Antisymmetric Hardy, sphere spectra and C_p", "antisym", ["antisym."], trials=500)


def check_plateau() -> AuditResult:
    return _suite("AC 9", "d = 2 Hardy failure via the plateau family", "hardy-nd", ["hardy-nd.plateau"], trials=1)


def check_decreasing_rearrangement() -> AuditResult:
    check_id, desc = "AC 10", "Weighted Polya-Szego on 2000 triples, equality cases"
    outcome = _suite(check_id, desc, "rearrange-axis", ["rearrange-axis.polya_szego"], trials=2000)
    if not outcome.passed:
        return outcome
    try:
        u = SparseLatticeFunction.from_sequence([3.0, 2.0, 2.0, 1.0])
        report = weighted_ps_check(u, [1.0, 1.5, 2.0, 2.5, 3.0], 2.0)
        ok = report.equality and report.holds
        return AuditResult(check_id, desc, ok, outcome.details + "; decreasing input gives equality")
    except Exception as e:
        return AuditResult(check_id, desc, False, f"Error: {e}")


def check_fourier_rearrangement() -> AuditResult:
    return _suite(
        "AC 11",
        "Fourier rearrangement closed form, series and inequalities",
        "rearrange-fourier",
        ["rearrange-fourier."],
        grid=4096,
        trials=200,
    )


def check_lattice_rearrangement() -> AuditResult:
    check_id, desc = "AC 12", "Lattice rearrangement bounds and the psi scan up to 10^4"
    outcome = _suite(
        check_id,
        desc,
        "rearrange-lattice",
        ["rearrange-lattice.contractive", "rearrange-lattice.bound"],
        trials=1000,
    )
    if not outcome.passed:
        return outcome
    try:
        scan = psi_scan(10_000)
        details = f"psi: {scan.edges} edges, max length {scan.max_length}, max multiplicity {scan.max_multiplicity}"
        return AuditResult(check_id, desc, scan.holds, details)
    except Exception as e:
        return AuditResult(check_id, desc, False, f"Error: {e}")


def check_isoperimetry() -> AuditResult:
    check_id, desc = "AC 13", "Isoperimetric oracle and comparison graph children"
    try:
        enumerated = iso_sequence(8)
        brute = [brute_iso_number(n) for n in range(1, 9)]
        graph = lattice_comparison_graph(13)
        children = {n: graph.children(n) for n in COMPARISON_CHILDREN}
        ok = enumerated == brute and enumerated[:6] == ISO_TABLE and children == COMPARISON_CHILDREN
        return AuditResult(check_id, desc, ok, f"sigma(1..8) = {enumerated}")
    except Exception as e:
        return AuditResult(check_id, desc, False, f"Error: {e}")


def check_impossibility() -> AuditResult:
    check_id, desc = "AC 14", "p = 2 counterexamples for spiral and Wang-Wang within 60 s"
    try:
        found = {}
        for enumeration in (SpiralEnumeration(), WangWangEnumeration()):
            result = counterexample_search(enumeration, p=2.0, budget=10 ** 9, seconds=60.0, seed=DEFAULT_SEED)
            found[enumeration.name] = result
        ok = all(r.found for r in found.values())
        details = ", ".join(f"{name}: {r.best_ratio:.6f}" for name, r in found.items())
        return AuditResult(check_id, desc, ok, details)
    except Exception as e:
        return AuditResult(check_id, desc, False, f"Error: {e}")


def run_acceptance_audit() -> List[AuditResult]:
    """Run every acceptance check."""
    return [
        check_combinatorial_identity(),
        check_sharpness(),
        check_weighted_hardy(),
        check_coefficient_closed_forms(),
        check_higher_order_constants(),
        check_torus_correspondence(),
        check_constant_scaling(),
        check_antisymmetric(),
        check_plateau(),
        check_decreasing_rearrangement(),
        check_fourier_rearrangement(),
        check_lattice_rearrangement(),
        check_isoperimetry(),
        check_impossibility(),
    ]


def print_report(results: List[AuditResult]) -> int:
    """Print audit report and return exit code."""
    print("\n" + "=" * 60)
    print("Acceptance Audit Report")
    print("=" * 60 + "\n")

    passed = 0
    failed = 0

    for r in results:
        status = "PASS" if r.passed else "FAIL"
        print(f"[{status}] {r.check_id}: {r.description}")
        if r.details:
            print(f"   {r.details}")

        if r.passed:
            passed += 1
        else:
            failed += 1

    print("\n" + "-" * 60)
    print(f"Overall: {passed}/{passed + failed} PASS")

    if failed > 0:
        print(f"\n{failed} check(s) FAILED")
        return 1
    print("\nAll checks PASSED")
    return 0


def main():
    """Main entry point."""
    logging.basicConfig(level=logging.WARNING, format="%(asctime)s [%(levelname)s] %(message)s")
    results = run_acceptance_audit()
    sys.exit(print_report(results))


if __name__ == "__main__":
    main()
