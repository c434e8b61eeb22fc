"""Command-line behavior: outputs, determinism, exit codes."""

import json

from szq.cli import main

SZ8_PROFILE = {
    "order": "29120",
    "nse_set": ["1", "455", "3640", "5824", "6720", "12480"],
}


def run_cli(capsys, *argv):
    rc = main(list(argv))
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


# -- params -------------------------------------------------------------------

def test_params_table(capsys):
    rc, out, _ = run_cli(capsys, "params", "--q", "8")
    assert rc == 0
    assert "29120" in out


def test_params_json(capsys):
    rc, out, _ = run_cli(capsys, "params", "--m", "2", "--output", "json",
                         "--no-timestamp")
    assert rc == 0
    data = json.loads(out)
    assert data["group_order"] == "32537600"
    assert data["u1"] == "41"


def test_params_rejects_bad_q(capsys):
    rc, _, err = run_cli(capsys, "params", "--q", "6")
    assert rc == 2
    assert "2^(2m+1)" in err


def test_params_requires_m_or_q(capsys):
    rc, _, _ = run_cli(capsys, "params")
    assert rc == 2


def test_params_rejects_m_zero(capsys):
    rc, _, err = run_cli(capsys, "params", "--m", "0")
    assert rc == 2
    assert "m must be >= 1" in err


# -- nse ----------------------------------------------------------------------

def test_nse_closed_form_q8(capsys):
    rc, out, _ = run_cli(capsys, "nse", "--q", "8", "--output", "json",
                         "--no-timestamp")
    assert rc == 0
    data = json.loads(out)
    assert data["closed_form"]["counts"] == {
        "1": "1", "2": "455", "4": "3640", "5": "5824", "7": "12480", "13": "6720"}


def test_nse_closed_form_big_q(capsys):
    rc, out, _ = run_cli(capsys, "nse", "--q", "512", "--output", "json",
                         "--no-timestamp")
    assert rc == 0
    data = json.loads(out)
    assert data["closed_form"]["total"] == str(512 ** 2 * (512 ** 2 + 1) * 511)


def test_nse_both_sources_agree(capsys):
    rc, out, _ = run_cli(capsys, "nse", "--q", "8", "--source", "both",
                         "--output", "json", "--no-timestamp")
    assert rc == 0
    data = json.loads(out)
    assert data["diff"] == {}
    assert data["oracle"] == data["closed_form"]


def test_nse_oracle_source_alone(capsys):
    rc, out, _ = run_cli(capsys, "nse", "--q", "8", "--source", "oracle",
                         "--output", "json", "--no-timestamp")
    assert rc == 0
    data = json.loads(out)
    assert "closed_form" not in data
    assert data["oracle"]["total"] == "29120"
    assert data["oracle"]["counts"]["7"] == "12480"


def test_nse_oracle_refused_over_limit(capsys):
    rc, _, err = run_cli(capsys, "nse", "--q", "512", "--source", "oracle")
    assert rc == 3
    assert "oracle limit" in err


def test_nse_oracle_beyond_q8_needs_allow_big(capsys):
    rc, _, err = run_cli(capsys, "nse", "--q", "32", "--source", "oracle")
    assert rc == 3
    assert "--allow-big" in err


def test_nse_modulus_override_does_not_change_closed_form(capsys):
    rc1, out1, _ = run_cli(capsys, "nse", "--q", "32", "--output", "json",
                           "--no-timestamp")
    rc2, out2, _ = run_cli(capsys, "nse", "--q", "32", "--modulus", "0x29",
                           "--output", "json", "--no-timestamp")
    assert rc1 == rc2 == 0
    assert out1 == out2


def test_nse_rejects_reducible_modulus(capsys):
    rc, _, err = run_cli(capsys, "nse", "--q", "32", "--source", "oracle",
                         "--allow-big", "--modulus", "0x2b")
    assert rc == 2
    assert "reducible" in err


def test_nse_output_is_deterministic(capsys):
    _, out1, _ = run_cli(capsys, "nse", "--q", "8", "--output", "json",
                         "--no-timestamp")
    _, out2, _ = run_cli(capsys, "nse", "--q", "8", "--output", "json",
                         "--no-timestamp")
    assert out1 == out2


def test_nse_timestamp_present_by_default(capsys):
    _, out, _ = run_cli(capsys, "nse", "--q", "8", "--output", "json")
    assert "generated_at" in json.loads(out)


# -- verify ---------------------------------------------------------------------

def test_verify_q8_all_pass(capsys):
    rc, out, _ = run_cli(capsys, "verify", "--q", "8", "--output", "json",
                         "--no-timestamp")
    assert rc == 0
    data = json.loads(out)
    assert data["passed"] is True
    assert all(c["passed"] for c in data["checks"])
    assert data["census"]["counts"]["13"] == "6720"
    assert data["partition"]["passed"] == 1


def test_verify_q32_refused_without_allow_big(capsys):
    rc, _, err = run_cli(capsys, "verify", "--q", "32")
    assert rc == 3
    assert "--allow-big" in err


def test_verify_modulus_override_gives_identical_counts(capsys):
    # degree 3 has a single irreducible polynomial, so the override must
    # reproduce the default run byte for byte
    rc1, out1, _ = run_cli(capsys, "verify", "--q", "8", "--output", "json",
                           "--no-timestamp")
    rc2, out2, _ = run_cli(capsys, "verify", "--q", "8", "--modulus", "0xb",
                           "--output", "json", "--no-timestamp")
    assert rc1 == rc2 == 0
    assert json.loads(out1)["census"] == json.loads(out2)["census"]
    assert out1 == out2


# -- gate -------------------------------------------------------------------------

def test_gate_accepts_suzuki_profile(tmp_path, capsys):
    path = tmp_path / "profile.json"
    path.write_text(json.dumps(SZ8_PROFILE))
    rc, out, _ = run_cli(capsys, "gate", str(path), "--output", "json",
                         "--no-timestamp")
    assert rc == 0
    data = json.loads(out)
    assert data["verdict"] == "ACCEPT"
    assert data["inferred_m"] == 1


def test_gate_rejects_perturbed_profile(tmp_path, capsys):
    bad = dict(SZ8_PROFILE)
    bad["nse_set"] = ["1", "455", "3640", "5824", "6721", "12480"]
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(bad))
    rc, out, _ = run_cli(capsys, "gate", str(path))
    assert rc == 1
    assert "REJECT" in out


def test_gate_empty_file_is_input_error(tmp_path, capsys):
    path = tmp_path / "empty.json"
    path.write_text("")
    rc, _, err = run_cli(capsys, "gate", str(path))
    assert rc == 2
    assert err


def test_gate_missing_file_is_input_error(tmp_path, capsys):
    rc, _, _ = run_cli(capsys, "gate", str(tmp_path / "absent.json"))
    assert rc == 2


def test_gate_map_profile(tmp_path, capsys):
    profile = {"order": "29120", "nse_map": {
        "1": "1", "2": "455", "4": "3640", "5": "5824", "7": "12480", "13": "6720"}}
    path = tmp_path / "map.json"
    path.write_text(json.dumps(profile))
    rc, out, _ = run_cli(capsys, "gate", str(path), "--output", "json",
                         "--no-timestamp")
    assert rc == 0
    assert json.loads(out)["verdict"] == "ACCEPT"


def test_gate_map_sum_mismatch_is_input_error(tmp_path, capsys):
    profile = {"order": "29120", "nse_map": {"1": "1", "2": "455"}}
    path = tmp_path / "short.json"
    path.write_text(json.dumps(profile))
    rc, _, err = run_cli(capsys, "gate", str(path))
    assert rc == 2
    assert "sums to" in err
