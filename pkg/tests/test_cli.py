"""End-to-end CLI tests through the real argv entry point."""

import json
import subprocess
import sys

import pytest

from smoothwords.cli import main

REF_60 = "221121221221121122121121221121121221221121221211211221221121"


def run_cli(*argv):
    """Invoke main() in-process, capturing stdout/stderr and the exit code."""
    import contextlib
    import io

    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        try:
            code = main(list(argv))
        except SystemExit as exc:  # argparse usage errors
            code = exc.code
    return code, out.getvalue(), err.getvalue()


class TestDerive:
    def test_single_step(self):
        code, out, _ = run_cli("derive", "--op", "f", "122112")
        assert code == 0
        assert out == "22\n"

    def test_chain_success(self):
        code, out, _ = run_cli("derive", "--op", "r", "22112", "--chain")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "0: 22112"
        assert lines[-1].endswith("(empty)")

    def test_chain_failure_reports_step_and_word(self):
        code, out, err = run_cli("derive", "--op", "f", "12121",
                                 "--alphabet", "1,2", "--chain")
        assert code == 1
        assert "0: 12121" in out and "1: 111" in out
        assert "step 2" in err
        assert "111 not derivable" in err

    def test_huang_op(self):
        code, out, _ = run_cli("--alphabet", "1,4", "derive", "--op", "huang",
                               "4444111144441111444")
        assert code == 0
        assert out == "4444\n"

    def test_json_chain(self):
        code, out, _ = run_cli("derive", "221121221", "--chain",
                               "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["height"] == 4
        assert payload["chain"][0] == "221121221"
        assert payload["chain"][-1] == ""


class TestCheck:
    def test_member_with_certificate(self):
        code, out, _ = run_cli("check", "221121221", "--kind", "f")
        assert code == 0
        assert "member: yes" in out
        assert "height: 4" in out

    def test_non_member(self):
        code, out, _ = run_cli("check", "12121", "--kind", "f")
        assert code == 0
        assert "member: no" in out

    def test_r_kind(self):
        code, out, _ = run_cli("check", "21", "--kind", "r")
        assert code == 0
        assert "member: yes" in out


class TestKappa:
    def test_reference_prefix_either_alphabet_order(self):
        code, out, _ = run_cli("kappa", "--alphabet", "2,1", "--start", "2",
                               "--length", "62")
        assert code == 0
        word = out.strip()
        assert len(word) == 62
        assert word.startswith(REF_60)

    def test_default_start_is_larger_letter(self):
        _, explicit, _ = run_cli("kappa", "--start", "2", "--length", "30")
        _, default, _ = run_cli("kappa", "--length", "30")
        assert default == explicit

    def test_json_payload(self):
        code, out, _ = run_cli("kappa", "--length", "10", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["start"] == 2
        assert len(payload["word"]) == 10


class TestPair:
    def test_coupled_pair(self):
        code, out, _ = run_cli("--alphabet", "1,3", "pair", "--length", "67")
        assert code == 0
        x, y = out.splitlines()
        assert len(x) == len(y) == 67
        assert "33" not in x and "33" not in y

    def test_rejected_alphabet_is_usage_error(self):
        code, _, err = run_cli("--alphabet", "2,4", "pair", "--length", "10")
        assert code == 2
        assert err


class TestEnumerate:
    def test_newline_delimited(self):
        code, out, _ = run_cli("enumerate", "--length", "3")
        assert code == 0
        assert out.splitlines() == ["112", "121", "122", "211", "212", "221"]

    def test_cap_refusal_exits_3(self):
        code, _, err = run_cli("enumerate", "--length", "99")
        assert code == 3
        assert "cap" in err

    def test_raised_cap_is_honored(self):
        code, _, _ = run_cli("enumerate", "--length", "65", "--cap", "70")
        assert code == 0


class TestComplexity:
    def test_csv_columns(self):
        code, out, _ = run_cli("complexity", "--max", "5", "--format", "csv")
        assert code == 0
        lines = out.split("\n")
        assert lines[0] == "n,p,s,b,lower_bound,upper_bound"
        assert lines[1] == "0,1,1,1,1,1"
        # {1,2}: p(5)=14 and the lower bound is tight
        assert lines[6].startswith("5,14,")
        assert lines[6].split(",")[4] == "14"
        assert out.endswith("\n")

    def test_tree_only_matches_enumeration(self):
        _, exact, _ = run_cli("--alphabet", "1,4", "complexity", "--max", "9",
                              "--format", "csv")
        _, tree, _ = run_cli("--alphabet", "1,4", "complexity", "--max", "9",
                             "--tree-only", "--format", "csv")
        assert exact == tree


class TestTree:
    def test_generation_listing(self):
        code, out, _ = run_cli("--alphabet", "1,2", "tree", "--family", "T",
                               "--generation", "1")
        assert code == 0
        assert sorted(out.split()) == ["12", "21"]

    def test_stats(self):
        code, out, _ = run_cli("--alphabet", "1,2", "tree", "--family", "T",
                               "--generation", "3", "--stats")
        assert code == 0
        assert "count: 8" in out

    def test_invalid_family_is_usage_error(self):
        code, _, _ = run_cli("--alphabet", "1,2", "tree", "--family", "T1",
                             "--generation", "2")
        assert code == 2

    def test_generation_cap_exits_3(self):
        code, _, _ = run_cli("tree", "--family", "T", "--generation", "25")
        assert code == 3


class TestExponents:
    def test_text_report(self):
        code, out, _ = run_cli("exponents", "--alphabet", "1,3")
        assert code == 0
        assert "rho = 2.000000000000" in out

    def test_even_alphabet_has_no_zeta(self):
        code, out, _ = run_cli("exponents", "--alphabet", "2,4")
        assert code == 0
        assert "zeta = n/a" in out

    def test_reference_table_csv(self):
        import csv as csv_mod
        import io as io_mod
        code, out, _ = run_cli("exponents", "--reference-table",
                               "--format", "csv")
        assert code == 0
        rows = list(csv_mod.reader(io_mod.StringIO(out)))
        assert rows[0] == ["alphabet", "rho", "zeta", "beta"]
        cells = {row[0]: row[1:] for row in rows[1:]}
        assert cells["{1,3}"] == ["2", "2.44", "7.129"]
        # the one reference cell that contradicts its own formula
        assert cells["{1,9}"][2] == "8.656"


class TestVerify:
    def test_single_suite_passes(self):
        code, out, _ = run_cli("verify", "--suite", "table")
        assert code == 0
        assert out.startswith("PASS criterion 10")

    def test_alphabet_filter(self):
        code, out, _ = run_cli("verify", "--suite", "mistake",
                               "--alphabet", "1,4")
        assert code == 0
        assert "{1,4}" in out

    def test_unknown_suite_is_usage_error(self):
        code, _, _ = run_cli("verify", "--suite", "bogus")
        assert code == 2


class TestFormats:
    def test_json_round_trip_is_byte_identical(self):
        _, out, _ = run_cli("exponents", "--alphabet", "3,5",
                            "--format", "json")
        reparsed = json.dumps(json.loads(out), indent=2, ensure_ascii=False)
        assert out == reparsed + "\n"

    def test_json_key_order_is_stable(self):
        _, first, _ = run_cli("kappa", "--length", "12", "--format", "json")
        _, second, _ = run_cli("kappa", "--length", "12", "--format", "json")
        assert first == second
        assert list(json.loads(first)) == ["alphabet", "start", "length",
                                           "word"]

    def test_csv_uses_lf(self):
        _, out, _ = run_cli("enumerate", "--length", "2", "--format", "csv")
        assert "\r" not in out
        assert out == "word\n11\n12\n21\n22\n"

    def test_malformed_alphabet_is_usage_error(self):
        code, _, err = run_cli("--alphabet", "1;2", "kappa", "--length", "5")
        assert code == 2
        assert "alphabet" in err

    def test_malformed_word_is_usage_error(self):
        code, _, _ = run_cli("derive", "307")
        assert code == 2


def test_console_entry_point():
    """The module also runs as a script (and the installed entry point
    wraps the same main)."""
    proc = subprocess.run(
        [sys.executable, "-m", "smoothwords.cli", "derive", "--op", "f",
         "2211"],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout == "22\n"


def test_argparse_usage_error_exits_2():
    proc = subprocess.run(
        [sys.executable, "-m", "smoothwords.cli", "derive", "--op", "zzz",
         "22"],
        capture_output=True, text=True)
    assert proc.returncode == 2
