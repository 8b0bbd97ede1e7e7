"""
Tests for the ineqcheck command line and the acceptance audit printer
"""
import json
from typing import Any, Dict, List

import pytest

import ineqcheck
from latticeineq.errors import BUDGET, CONFIG, InequalityError
from latticeineq.reports import CheckResult
from latticeineq.suites import SuiteResult
from tools.acceptance_audit import AuditResult, print_report


# --- Fixtures ---

@pytest.fixture
def logged(monkeypatch, tmp_path) -> Dict[str, Any]:
    """Redirects the run log into tmp_path and records log_error calls."""
    calls: List[tuple] = []
    run_log = tmp_path / "logs" / "runs.jsonl"
    monkeypatch.setattr(ineqcheck, "RUN_LOG", str(run_log))
    monkeypatch.setattr(ineqcheck, "log_error", lambda *args, **kwargs: calls.append(args))
    return {"errors": calls, "run_log": run_log}


class TestParseArgs:
    """Tests for argument parsing."""

    def test_lists(self):
        args = ineqcheck.parse_args(["rearrange-lattice", "--pvalues", "1,2,inf", "--constants", "H,R"])
        assert args.pvalues == [1.0, 2.0, float("inf")]
        assert args.constants == ["H", "R"]

    def test_p_inf(self):
        assert ineqcheck.parse_args(["search", "--p", "inf"]).p == float("inf")

    def test_command_required(self):
        with pytest.raises(SystemExit):
            ineqcheck.parse_args([])

    def test_unknown_command(self):
        with pytest.raises(SystemExit):
            ineqcheck.parse_args(["prove"])


class TestMain:
    """Tests for main and its exit codes."""

    def test_success(self, logged, tmp_path):
        out = tmp_path / "identity.json"
        code = ineqcheck.main(["identity", "--kmax", "4", "--trials", "2", "--seed", "5", "--out", str(out)])
        assert code == 0
        doc = json.loads(out.read_text(encoding="utf-8"))
        assert doc["seed"] == 5
        assert doc["config"]["command"] == "identity"
        assert all(r["passed"] for r in doc["results"])

        record = json.loads(logged["run_log"].read_text(encoding="utf-8").splitlines()[-1])
        assert record["command"] == "identity"
        assert record["passed"] is True
        assert record["first_failure"] is None

    def test_csv_tables(self, logged, tmp_path):
        out = tmp_path / "tables.csv"
        code = ineqcheck.main([
            "tables", "--dmax", "5", "--kmax", "2", "--constants", "H", "--format", "csv", "--out", str(out),
        ])
        assert code == 0
        blocks = out.read_text(encoding="utf-8").split("\n\n")
        assert len(blocks) == 2
        assert blocks[0].splitlines()[0] == "d,k,H,command,seed"
        assert blocks[0].splitlines()[1].startswith("2,0,")
        assert blocks[1].splitlines()[0] == "k,i,xi,alpha,beta,gamma,command,seed"

    def test_csv_tables_all_constants(self, logged, tmp_path):
        out = tmp_path / "tables.csv"
        assert ineqcheck.main(["tables", "--dmax", "8", "--kmax", "1", "--format", "csv", "--out", str(out)]) == 0
        lines = out.read_text(encoding="utf-8").splitlines()
        assert lines[0] == "d,k,H,HR,R,C,C_tilde,command,seed"
        assert len(lines[1].split(",")) == 9

    def test_invalid_parameter(self, logged):
        assert ineqcheck.main(["search", "--p", "0.5"]) == 2
        assert logged["errors"][0][0] == CONFIG

    def test_invalid_range(self, logged):
        assert ineqcheck.main(["identity", "--kmax", "0"]) == 2

    def test_missing_config_file(self, logged, tmp_path):
        assert ineqcheck.main(["identity", "--config", str(tmp_path / "none.json")]) == 2

    def test_domain_error_exit(self, logged, monkeypatch):
        def boom(config):
            raise InequalityError(BUDGET, "grid too large", {"size": 4096})

        monkeypatch.setattr(ineqcheck, "run_suite", boom)
        assert ineqcheck.main(["torus"]) == 2
        error_type, message, extra = logged["errors"][0]
        assert error_type == BUDGET
        assert extra["size"] == 4096

    def test_failed_check_exit(self, logged, monkeypatch, tmp_path):
        failing = SuiteResult("hardy1d", [CheckResult("hardy1d.x", "forced", False, witness=[1, 2])])
        monkeypatch.setattr(ineqcheck, "run_suite", lambda config: failing)
        out = tmp_path / "failed.json"
        assert ineqcheck.main(["hardy1d", "--out", str(out)]) == 1
        doc = json.loads(out.read_text(encoding="utf-8"))
        assert doc["results"][0]["witness"] == [1, 2]
        record = json.loads(logged["run_log"].read_text(encoding="utf-8").splitlines()[-1])
        assert record["first_failure"] == "hardy1d.x"


class TestAuditReport:
    """Tests for the acceptance audit printer."""

    def test_all_pass(self, capsys):
        code = print_report([AuditResult("AC 1", "identity", True, "136 pairs")])
        assert code == 0
        assert "[PASS] AC 1" in capsys.readouterr().out

    def test_failure(self, capsys):
        code = print_report([
            AuditResult("AC 1", "identity", True),
            AuditResult("AC 2", "sharpness", False, "Error: boom"),
        ])
        assert code == 1
        out = capsys.readouterr().out
        assert "[FAIL] AC 2" in out
        assert "1/2 PASS" in out
