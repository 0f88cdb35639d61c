import io
import json
import pathlib
import subprocess
import sys

import jsonschema
import pytest

from patternum.cli import run

SCHEMA = json.loads((pathlib.Path(__file__).parents[1] / "docs" / "cli-output.schema.json").read_text())


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def call_json(*argv):
    code, out, _ = call(*argv, "--format", "json")
    payload = json.loads(out)
    jsonschema.validate(payload, SCHEMA)
    return code, payload


def test_pattern_plain():
    assert call("pattern", "5", "10", "2") == (0, "2 3 1\n", "")


def test_construct_plain():
    assert call("construct", "4") == (0, "2 4 1 3\n", "")


def test_reconstruct_rejects_monotone():
    code, payload = call_json("reconstruct", "16", "--pattern", "1 2 3 4 5 6 7 8")
    assert code == 2
    assert payload["error"]["reason"] == "RunCountMismatch"
    assert payload["error"]["type"] == "ReconstructionError"


def test_schema_rejects_malformed_results():
    bad = {"command": "bounds", "input": {}, "result": {"n": 3}}
    with pytest.raises(jsonschema.ValidationError):
        jsonschema.validate(bad, SCHEMA)
    with pytest.raises(jsonschema.ValidationError):
        jsonschema.validate({"command": "pattern", "input": {}, "result": {"pattern": 231}}, SCHEMA)


def test_reconstruct_ok():
    code, payload = call_json("reconstruct", "16", "--pattern", "2 6 4 8 3 7 1 5")
    assert code == 0
    assert payload["result"]["positions"] == [1, 3, 6, 8, 10, 12, 13, 15]


@pytest.mark.parametrize(
    "argv",
    [
        ("pattern", "5", "10", "2"),
        ("construct", "70"),
        ("construct", "2"),
        ("count-patterns", "--perm", "2 4 1 3"),
        ("count-patterns", "--construct", "14"),
        ("ample-count", "25"),
        ("is-ample", "16", "--set", "1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16"),
        ("is-ample", "16", "--set", "0x1"),
        ("bounds", "16"),
        ("bounds", "196"),
        ("bounds", "2"),
        ("h-exact", "5"),
        ("distribution", "4"),
        ("verify",),
    ],
)
def test_json_is_schema_stable_and_repeatable(argv):
    code, first = call_json(*argv)
    assert code == 0
    assert first["command"] == argv[0]
    _, second = call_json(*argv)
    if argv[0] == "verify":
        for check in first["result"]["checks"] + second["result"]["checks"]:
            check.pop("seconds")
    assert first == second


def test_bigcounts_are_strings():
    _, payload = call_json("bounds", "196")
    result = payload["result"]
    assert result["constructive_lower"] == str(int(result["constructive_lower"]))
    assert result["thm1_trivial"] is False
    _, payload = call_json("bounds", "16")
    assert payload["result"]["coleman_exact"] == "512"
    assert payload["result"]["final_log2"] is None and payload["result"]["final_trivial"]


def test_is_ample_bitmask_and_list_agree():
    code, a = call_json("is-ample", "16", "--set", "0xffff")
    _, b = call_json("is-ample", "16", "--set", ",".join(str(i) for i in range(1, 17)))
    assert code == 0 and a["result"] == b["result"] == {"ample": True}
    _, c = call_json("is-ample", "16", "--set", "1,2")
    assert c["result"] == {"ample": False}


def test_csv_outputs():
    code, out, _ = call("distribution", "3", "--format", "csv")
    assert code == 0 and out == "patterns,count\n3,2\n4,4\n"
    code, out, _ = call("count-patterns", "--perm", "2 4 1 3", "--format", "csv")
    assert out == "length,count\n1,1\n2,2\n3,4\n4,1\n"


@pytest.mark.parametrize(
    "argv, code",
    [
        (("construct", "4", "--format", "csv"), 1),
        (("frobnicate",), 1),
        ((), 1),
        (("construct",), 1),
        (("count-patterns", "--perm", "1 2", "--construct", "4"), 1),
        (("construct", "4", "--memory-cap", "1MiB"), 1),
        (("construct", "4", "--workers", "0"), 1),
        (("pattern", "1", "1"), 2),
        (("count-patterns", "--perm", "1 3"), 2),
        (("ample-count", "3"), 2),
        (("is-ample", "16", "--set", "17"), 2),
        (("h-exact", "10"), 3),
        (("distribution", "9"), 3),
        (("count-patterns", "--construct", "33"), 3),
        (("count-patterns", "--construct", "24", "--memory-cap", "64MiB"), 3),
    ],
)
def test_exit_codes(argv, code):
    assert call(*argv)[0] == code


def test_errors_in_json_mode_are_schema_valid():
    for argv in (("h-exact", "10"), ("frobnicate",), ("pattern", "2", "2")):
        code, out, _ = call(*argv, "--format", "json")
        payload = json.loads(out)
        jsonschema.validate(payload, SCHEMA)
        assert "error" in payload and code != 0


def test_caps_are_configurable():
    code, payload = call_json("h-exact", "3", "--h-cap", "3")
    assert code == 0 and payload["result"]["h"] == 4
    assert call("distribution", "5", "--dist-cap", "4")[0] == 3


def test_worker_count_does_not_change_output():
    outs = {call("count-patterns", "--construct", "18", "--workers", str(w))[1] for w in (1, 2, 8)}
    assert len(outs) == 1


def test_env_threads_override(monkeypatch):
    from patternum.enumeration import default_workers

    monkeypatch.setenv("PATTERNUM_THREADS", "3")
    assert default_workers() == 3


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "patternum", "pattern", "5", "10", "2"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout == "2 3 1\n"
