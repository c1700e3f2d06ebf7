import json

import pytest

from homconf.cli import (
    EXIT_INPUT,
    EXIT_OK,
    EXIT_USAGE,
    EXIT_VERIFY,
    _print_report,
    main,
)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_no_arguments_is_usage_error(capsys):
    code, _, err = run(capsys)
    assert code == EXIT_USAGE


def test_unknown_flag_is_usage_error(capsys):
    code, _, _ = run(capsys, "enumerate", "--quiver", "A2", "--bogus")
    assert code == EXIT_USAGE


def test_bad_quiver_is_input_error(capsys):
    code, _, err = run(capsys, "enumerate", "--quiver", "Z9")
    assert code == EXIT_INPUT
    assert "error" in err


def test_enumerate_json(capsys):
    code, out, err = run(capsys, "enumerate", "--quiver", "A2")
    assert code == EXIT_OK
    configurations = json.loads(out)
    assert len(configurations) == 2
    assert "2 configurations" in err


def test_enumerate_tsv(capsys):
    code, out, _ = run(capsys, "enumerate", "--quiver", "A3", "--format", "tsv")
    assert code == EXIT_OK
    lines = out.strip().split("\n")
    assert len(lines) == 5
    assert "1\t2\t3" in lines


def test_enumerate_tsv_general_labels(capsys):
    code, out, _ = run(capsys, "enumerate", "--quiver", "D4", "--format", "tsv")
    assert code == EXIT_OK
    lines = out.strip().split("\n")
    assert len(lines) == 20
    for line in lines:
        fields = line.split("\t")
        assert len(fields) == 4
        assert all(field.startswith("root=(") for field in fields)


def test_enumerate_out_file(tmp_path, capsys):
    path = tmp_path / "confs.json"
    code, _, _ = run(capsys, "enumerate", "--quiver", "A3", "--out", str(path))
    assert code == EXIT_OK
    assert len(json.loads(path.read_text())) == 5


def test_count_matches(capsys):
    code, out, _ = run(capsys, "count", "--quiver", "D4", "--what", "homconf")
    assert code == EXIT_OK
    body = json.loads(out)
    assert body["count"] == 20 and body["matches"] is True


def test_verify_ok_and_report(tmp_path, capsys):
    report_path = tmp_path / "report.json"
    code, out, _ = run(
        capsys, "verify", "--quiver", "A3", "--suite", "psi", "--report", str(report_path)
    )
    assert code == EXIT_OK
    assert "PASS psi_of_simples_is_coxeter_element" in out
    report = json.loads(report_path.read_text())
    assert report["passed"] is True
    assert report["quiver"] == "A3:2>1,3>2"


def test_verify_unknown_suite_usage(capsys):
    code, _, _ = run(capsys, "verify", "--quiver", "A3", "--suite", "nope")
    assert code == EXIT_USAGE


def test_nc_count_and_list(capsys):
    code, out, _ = run(capsys, "nc", "--quiver", "A3", "--count")
    assert code == EXIT_OK and out.strip() == "14"
    code, out, _ = run(capsys, "nc", "--quiver", "A3", "--count", "--positive")
    assert code == EXIT_OK and out.strip() == "5"
    code, out, _ = run(capsys, "nc", "--quiver", "A2", "--list")
    elements = json.loads(out)
    assert len(elements) == 5
    assert set(elements[0]) == {"matrix", "word", "length", "positive"}


def test_nc_requires_mode(capsys):
    code, _, _ = run(capsys, "nc", "--quiver", "A3")
    assert code == EXIT_USAGE


def test_mutation_graph_commands(tmp_path, capsys):
    code, out, err = run(capsys, "mutation-graph", "--quiver", "A3", "--check-connected")
    assert code == EXIT_OK
    assert "connected=True" in err
    dot_path = tmp_path / "a3.dot"
    code, _, _ = run(capsys, "mutation-graph", "--quiver", "A3", "--dot", str(dot_path))
    assert code == EXIT_OK
    dot = dot_path.read_text()
    assert dot.startswith("graph {") and dot.count("--") == 6
    code, out, _ = run(capsys, "mutation-graph", "--quiver", "A2")
    body = json.loads(out)
    assert body["edges"] == [[0, 1]]


def test_hom_table_cache_flow(tmp_path, capsys, monkeypatch):
    out_path = tmp_path / "table.json"
    code, _, _ = run(capsys, "hom-table", "--quiver", "A3", "--out", str(out_path))
    assert code == EXIT_OK
    doc = json.loads(out_path.read_text())
    assert doc["quiver"] == "A3:2>1,3>2"

    cache_dir = tmp_path / "cache"
    monkeypatch.setenv("HOMCONF_CACHE_DIR", str(cache_dir))
    code, _, _ = run(capsys, "hom-table", "--quiver", "A4", "--out", str(tmp_path / "t4.json"))
    assert code == EXIT_OK
    cached = list(cache_dir.glob("homtable-*.json"))
    assert len(cached) == 1

    # Corrupt the cache: commands that read it must fail with the input code.
    text = cached[0].read_text().replace('"dims":[[1', '"dims":[[2', 1)
    cached[0].write_text(text)
    code, _, err = run(capsys, "hom-table", "--quiver", "A4", "--out", str(tmp_path / "t4b.json"))
    assert code == EXIT_INPUT
    assert "integrity" in err or "hom table" in err


def test_allow_long_gate(capsys):
    code, _, err = run(capsys, "enumerate", "--quiver", "E7")
    assert code == EXIT_INPUT
    assert "allow_long" in err or "allow-long" in err


def test_typea_commands(capsys):
    code, out, _ = run(capsys, "typea", "gamma", "--n", "4", "--partition", "1,3|2|4")
    assert code == EXIT_OK
    body = json.loads(out)
    assert body["labels"] == ["12", "34", "1[1]", "3[1]"]
    code, out, _ = run(capsys, "typea", "f", "--n", "4", "--partition", "1,3|2|4")
    assert code == EXIT_OK and out.strip() == "1,3,5|2|4"
    code, out, _ = run(capsys, "typea", "check", "--n", "4")
    assert code == EXIT_OK
    code, _, _ = run(capsys, "typea", "gamma", "--n", "4")
    assert code == EXIT_USAGE
    code, _, _ = run(capsys, "typea", "gamma", "--n", "4", "--partition", "1,3|2,4")
    assert code == EXIT_INPUT


def test_print_report_exit_codes(capsys):
    passing = {
        "checks": [{"name": "x", "passed": True, "skipped": False, "detail": ""}],
        "counts": {},
        "passed": True,
        "quiver": "A1",
        "wall_time_s": 0.0,
    }
    assert _print_report(passing) == EXIT_OK
    failing = {
        "checks": [{"name": "x", "passed": False, "skipped": False, "detail": "boom"}],
        "counts": {},
        "passed": False,
        "quiver": "A1",
        "wall_time_s": 0.0,
    }
    assert _print_report(failing) == EXIT_VERIFY
    capsys.readouterr()


def test_byte_stable_outputs(tmp_path, capsys):
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    run(capsys, "enumerate", "--quiver", "A3", "--out", str(a))
    run(capsys, "enumerate", "--quiver", "A3", "--out", str(b))
    assert a.read_bytes() == b.read_bytes()


def test_byte_stable_across_processes(tmp_path):
    import subprocess
    import sys as _sys

    outputs = []
    for name in ("p1.dot", "p2.dot"):
        path = tmp_path / name
        proc = subprocess.run(
            [_sys.executable, "-m", "homconf.cli", "mutation-graph", "--quiver", "A3",
             "--dot", str(path)],
            capture_output=True,
        )
        assert proc.returncode == 0
        outputs.append(path.read_bytes())
    assert outputs[0] == outputs[1]


def test_verify_with_corrupted_cache_is_input_error(tmp_path, capsys, monkeypatch):
    cache_dir = tmp_path / "cache"
    monkeypatch.setenv("HOMCONF_CACHE_DIR", str(cache_dir))
    code, _, _ = run(capsys, "verify", "--quiver", "A2", "--suite", "counts")
    assert code == EXIT_OK
    cached = list(cache_dir.glob("homtable-*.json"))
    assert len(cached) == 1
    cached[0].write_text(cached[0].read_text().replace('"dims":[[1', '"dims":[[7', 1))
    code, _, err = run(capsys, "verify", "--quiver", "A2", "--suite", "counts")
    assert code == EXIT_INPUT
    assert "integrity" in err.lower() or "hom table" in err.lower()


@pytest.mark.slow
def test_cli_against_live_server(tmp_path, capsys):
    import socket
    import threading
    import time
    import urllib.request

    import uvicorn

    from homconf.service.app import create_app

    with socket.socket() as s:
        s.bind(("127.0.0.1", 0))
        port = s.getsockname()[1]
    config = uvicorn.Config(create_app(), host="127.0.0.1", port=port, log_level="error")
    server = uvicorn.Server(config)
    thread = threading.Thread(target=server.run, daemon=True)
    thread.start()
    base = f"http://127.0.0.1:{port}"
    for _ in range(100):
        try:
            with urllib.request.urlopen(base + "/health", timeout=1):
                break
        except Exception:
            time.sleep(0.1)
    else:
        server.should_exit = True
        pytest.fail("server did not come up")
    try:
        code, out, _ = run(capsys, "nc", "--quiver", "A3", "--count", "--server", base)
        assert code == EXIT_OK and out.strip() == "14"
        code, _, _ = run(capsys, "enumerate", "--quiver", "Z9", "--server", base)
        assert code == EXIT_INPUT
    finally:
        server.should_exit = True
        thread.join(timeout=5)
