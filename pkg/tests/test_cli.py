"""Command-line interface: exit codes, output stability, JSON round-trips."""

import io
import json

from theta5.cli import run


def invoke(*argv):
    out = io.StringIO()
    code = run(list(argv), out=out)
    return code, out.getvalue()


def test_list():
    code, text = invoke("list")
    assert code == 0
    assert "E1" in text and "W6" in text and "48 entries" in text


def test_list_json():
    code, text = invoke("list", "--format", "json")
    assert code == 0
    doc = json.loads(text)
    assert len(doc) == 48
    e1 = next(e for e in doc if e["id"] == "E1")
    assert e1["location"] == "§1 Eq. (1)"


def test_expand_eta_quotient():
    code, text = invoke("expand", "--object", "eta-quotient",
                        "--spec", "5:5/1:-1", "--order", "10")
    assert code == 0
    assert text.strip() == ("(2*pi*i)^0 * e(0) * q^(1) * [1 + q^(1) + 2*q^(2) "
                            "+ 3*q^(3) + 5*q^(4) + 2*q^(5) + 6*q^(6) + 5*q^(7) "
                            "+ 7*q^(8) + 5*q^(9)]")
    # comma form accepts rational multipliers
    code2, _ = invoke("expand", "--object", "eta-quotient",
                      "--spec", "1/5:1,1:-1", "--order", "6")
    assert code2 == 0


def test_expand_theta_json_roundtrip():
    code, text = invoke("expand", "--object", "theta", "--char", "1,1/5",
                        "--order", "8", "--format", "json")
    assert code == 0
    doc = json.loads(text)
    assert doc["series"]["qpow"] == "1/8"
    assert doc["series"]["phase"] == "1/20"
    redumped = json.dumps(doc, indent=2, ensure_ascii=False)
    assert redumped == text.strip()


def test_expand_theta_product_and_eta():
    code, a = invoke("expand", "--object", "theta", "--char", "0,1", "--order", "5")
    code2, b = invoke("expand", "--object", "theta-product", "--char", "0,1",
                      "--order", "5")
    assert code == code2 == 0
    assert a == b  # the two construction routes render identically
    code, text = invoke("expand", "--object", "eta", "--mult", "1/5", "--order", "2")
    assert code == 0
    assert "q^(1/120)" in text and "q^(1/5)" in text


def test_expand_requires_arguments():
    code, _ = invoke("expand", "--object", "theta")
    assert code == 2
    code, _ = invoke("expand", "--object", "eta-quotient")
    assert code == 2


def test_verify_single_id():
    code, text = invoke("verify", "--id", "E1", "--order", "20", "--format", "json")
    assert code == 0
    doc = json.loads(text)
    assert doc[0]["id"] == "E1" and doc[0]["passed"] is True


def test_verify_unknown_id_is_usage_error():
    code, _ = invoke("verify", "--id", "NO_SUCH")
    assert code == 2


def test_verify_unknown_command_usage():
    code, _ = invoke("frobnicate")
    assert code == 2


def test_verify_exact_all_reports_misprints():
    code, text = invoke("verify", "--all", "--exact-only", "--order", "10",
                        "--format", "json")
    assert code == 1  # the as-stated misprinted entries fail, and are reported
    doc = json.loads(text)
    failed = {item["id"] for item in doc if not item["passed"]}
    assert failed == {"T1d", "D3", "D4", "ME6", "W6"}


def test_verify_corrected_variant_green():
    code, text = invoke("verify", "--all", "--exact-only", "--order", "10",
                        "--variant", "corrected", "--format", "json")
    assert code == 0
    assert all(item["passed"] for item in json.loads(text))


def test_verify_includes_numeric_checks():
    code, text = invoke("verify", "--id", "E1", "--format", "json")
    doc = json.loads(text)
    assert [item["id"] for item in doc] == ["E1"]  # no numerics without --all
    code, text = invoke("verify", "--all", "--exact-only", "--order", "10",
                        "--variant", "corrected", "--format", "json")
    assert all(item["variant"] != "numeric" for item in json.loads(text))


def test_byte_identical_invocations():
    args = ("verify", "--id", "E1", "E2", "--order", "15", "--format", "json")
    code1, text1 = invoke(*args)
    code2, text2 = invoke(*args)
    assert (code1, text1) == (code2, text2)
    args = ("numeric-check", "--id", "N5", "--seed", "123", "--format", "json")
    code1, text1 = invoke(*args)
    code2, text2 = invoke(*args)
    assert (code1, text1) == (code2, text2)


def test_coeffs():
    code, text = invoke("coeffs", "--kernel", "A", "--upto", "5")
    assert code == 0
    assert text.splitlines() == ["1 1", "2 -1", "3 -2", "4 3", "5 1"]
    code, text = invoke("coeffs", "--kernel", "S", "--upto", "3", "--format", "json")
    assert json.loads(text)["values"] == {"1": "1", "2": "3", "3": "4"}


def test_partitions():
    code, text = invoke("partitions", "--upto", "5")
    assert code == 0
    assert text.splitlines() == ["0 1", "1 1", "2 2", "3 3", "4 5", "5 7"]


def test_numeric_check_command():
    code, text = invoke("numeric-check", "--id", "N5", "--samples", "6",
                        "--seed", "42")
    assert code == 0
    assert "N5" in text and "pass" in text
    code, _ = invoke("numeric-check", "--id", "N99")
    assert code == 2


def test_numeric_check_custom_tolerance_failure_path():
    # an absurdly small tolerance forces a reported failure and exit 1
    code, text = invoke("numeric-check", "--id", "N4", "--tol", "1e-30")
    assert code == 1
    assert "FAIL" in text
