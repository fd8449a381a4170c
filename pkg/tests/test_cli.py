import io
import json

import pytest

from subrec.cli import analyze, emit_report, report_from_json, run
from subrec import recognizability_bound

FIB_TEXT = "a -> a b\nb -> a\n"
TM_TEXT = "a -> a b\nb -> b a\n"
PER_TEXT = "a -> a b\nb -> a b\n"

SCHEMA_KEYS = {
    "alphabet", "rules", "primitive", "seeds", "constants",
    "complexity", "delay", "empirical", "bounds", "warnings",
}


def invoke(argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(argv, out=out, err=err)
    return code, out.getvalue(), err.getvalue()


class TestExitCodes:
    def test_delay_success(self, morph_file):
        code, out, _ = invoke(["delay", morph_file("fib.morph", FIB_TEXT), "--max", "16"])
        assert code == 0
        assert "C=2" in out and "L_from_C=1" in out

    def test_delay_negative(self, morph_file):
        code, out, _ = invoke(["delay", morph_file("per.morph", PER_TEXT), "--max", "16"])
        assert code == 1
        assert "none" in out

    def test_verify_counterexample(self, morph_file):
        code, out, _ = invoke(["verify", morph_file("per.morph", PER_TEXT), "--L", "5"])
        assert code == 1
        assert "counterexample" in out

    def test_verify_ok(self, morph_file):
        code, out, _ = invoke(["verify", morph_file("fib.morph", FIB_TEXT), "--L", "1"])
        assert code == 0
        assert "ok" in out

    def test_missing_file(self):
        code, _, err = invoke(["analyze", "does-not-exist.morph"])
        assert code == 2
        assert err.strip()

    def test_malformed_file(self, morph_file):
        code, _, err = invoke(["analyze", morph_file("bad.morph", "a -> a c\n")])
        assert code == 2
        assert "no rule" in err

    def test_cap_exceeded(self, morph_file):
        path = morph_file("fib.morph", FIB_TEXT)
        code, _, err = invoke(
            ["verify", path, "--L", "1", "--radius", "100000", "--max-letters", "1000"]
        )
        assert code == 3
        assert "cap" in err

    def test_bad_usage(self, morph_file):
        code, _, _ = invoke(["bound", morph_file("fib.morph", FIB_TEXT)])
        assert code == 2  # --mode is required


class TestSubcommands:
    def test_seeds(self, morph_file):
        code, out, _ = invoke(["seeds", morph_file("fib.morph", FIB_TEXT)])
        assert code == 0
        assert "power 2" in out and "a.a" in out and "b.a" in out

    def test_language(self, morph_file):
        code, out, _ = invoke(["language", morph_file("tm.morph", TM_TEXT), "--n", "3"])
        assert code == 0
        assert "p(3) = 6" in out

    def test_language_json(self, morph_file):
        code, out, _ = invoke(
            ["language", morph_file("fib.morph", FIB_TEXT), "--n", "2", "--json"]
        )
        data = json.loads(out)
        assert data["count"] == 3
        assert data["words"] == ["aa", "ab", "ba"]

    def test_bound_empirical(self, morph_file):
        code, out, _ = invoke(
            ["bound", morph_file("fib.morph", FIB_TEXT), "--mode", "empirical"]
        )
        assert code == 0
        assert "R=24" in out and "Q=31201" in out
        assert "<6523 digits" in out

    def test_bound_certified_json(self, morph_file):
        code, out, _ = invoke(
            ["bound", morph_file("fib.morph", FIB_TEXT), "--mode", "certified", "--json"]
        )
        data = json.loads(out)["maindetail"]
        assert data["mode"] == "certified"
        assert data["R"] == "112784"
        assert "log10" in data["bound"]

    def test_verify_json(self, morph_file):
        code, out, _ = invoke(
            ["verify", morph_file("per.morph", PER_TEXT), "--L", "2", "--json"]
        )
        assert code == 1
        data = json.loads(out)
        assert data["ok"] is False
        assert data["counterexample"]["kind"] in {"not_a_cut", "preimage_mismatch"}

    def test_delay_json(self, morph_file):
        code, out, _ = invoke(
            ["delay", morph_file("tm.morph", TM_TEXT), "--max", "16", "--json"]
        )
        data = json.loads(out)
        assert data["C"] == 4
        assert data["failures"][0][0] == 1


class TestAnalyzeReport:
    def test_schema_keys(self, fib):
        report = analyze(fib)
        data = json.loads(emit_report(report, as_json=True))
        assert set(data) == SCHEMA_KEYS
        assert set(data["primitive"]) == {"is", "witness"}
        assert set(data["seeds"]) == {"power", "pairs"}
        assert {"maindetail", "maindetail_certified", "closed_form"} <= set(data["bounds"])

    def test_json_round_trip(self, fib):
        report = analyze(fib)
        assert report_from_json(emit_report(report, as_json=True)) == report

    def test_round_trip_rejects_missing_keys(self):
        with pytest.raises(Exception):
            report_from_json("{}")

    def test_determinism(self, fib):
        first = emit_report(analyze(fib), as_json=True)
        second = emit_report(analyze(fib), as_json=True)
        assert first == second

    def test_big_integers_as_decimal_strings(self, fib):
        data = json.loads(emit_report(analyze(fib), as_json=True))
        maindetail = data["bounds"]["maindetail"]
        assert maindetail["R"] == "24"
        assert maindetail["Q"] == "31201"
        assert isinstance(maindetail["bound"], str)
        assert maindetail["digits"] == 6523
        certified = data["bounds"]["maindetail_certified"]
        assert set(certified["bound"]) == {"expr", "log10"}

    def test_klouda_medkova_present_for_uniform_binary(self, tm):
        data = json.loads(emit_report(analyze(tm), as_json=True))
        assert data["bounds"]["klouda_medkova"] == 8
        assert data["delay"]["C"] == 4

    def test_periodic_report_warnings(self, per):
        report = analyze(per)
        data = json.loads(emit_report(report, as_json=True))
        assert data["delay"]["C"] is None
        assert data["bounds"] == {}
        assert any("periodic" in w for w in data["warnings"])

    def test_every_heuristic_paired_with_warning(self, fib):
        data = json.loads(emit_report(analyze(fib), as_json=True))
        warnings = " ".join(data["warnings"])
        assert "screened" in warnings
        assert "window-relative" in warnings
        assert "lower bound" in warnings

    def test_nonprimitive_report(self):
        from subrec.morphism import parse_morphism

        report = analyze(parse_morphism("a -> a b\nb -> b"))
        assert report.primitive["is"] is False
        assert report.bounds == {}

    def test_human_output_readable(self, fib):
        text = emit_report(analyze(fib), as_json=False)
        assert "primitive" in text
        assert "C=2" in text
        assert "warnings" in text

    def test_analyze_cli_end_to_end(self, morph_file):
        code, out, _ = invoke(
            ["analyze", morph_file("fib.morph", FIB_TEXT), "--json", "--radius", "500"]
        )
        assert code == 0
        data = json.loads(out)
        assert data["empirical"]["L_lower"] == 1
        assert data["empirical"]["radius"] == 500


class TestExactCapEnvironment:
    def test_cap_forces_log_form(self, fib, monkeypatch):
        monkeypatch.setenv("SUBREC_EXACT_CAP", "100")
        b = recognizability_bound(fib, "empirical_exact")
        assert b.bound.exact is None
        assert abs(b.bound.log10 - 6522.07) < 1.0

    def test_bad_cap_rejected(self, fib, monkeypatch):
        from subrec.errors import InputError

        monkeypatch.setenv("SUBREC_EXACT_CAP", "many")
        with pytest.raises(InputError):
            recognizability_bound(fib, "empirical_exact")
