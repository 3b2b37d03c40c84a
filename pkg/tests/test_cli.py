"""End-to-end command-line behavior, including the exit-code contract."""

import json

import pytest

import synthnets
from pathshock.cli import expand_grid_text, main


@pytest.fixture
def g3_file(tmp_path, g3_text):
    path = tmp_path / "g3.txt"
    path.write_text(g3_text, encoding="utf-8")
    return str(path)


@pytest.fixture
def master_file(tmp_path):
    path = tmp_path / "master.txt"
    path.write_text(synthnets.master_edge_text(), encoding="utf-8")
    return str(path)


def test_info_line(g3_file, capsys):
    assert main(["info", g3_file]) == 0
    assert capsys.readouterr().out == "nodes=3 arcs=3 kbar=2; paths: k=1:3 k=2:1\n"


def test_info_reports_warnings_on_stderr(tmp_path, capsys):
    path = tmp_path / "loop.txt"
    path.write_text("a a 1\na b 2\n", encoding="utf-8")
    assert main(["info", str(path)]) == 0
    captured = capsys.readouterr()
    assert "self-loop" in captured.err
    assert "nodes=2 arcs=1" in captured.out


def test_info_empty_file_exits_1(tmp_path, capsys):
    path = tmp_path / "empty.txt"
    path.write_text("", encoding="utf-8")
    assert main(["info", str(path)]) == 1
    assert "error" in capsys.readouterr().err


def test_info_missing_file_exits_1(tmp_path, capsys):
    assert main(["info", str(tmp_path / "nope.txt")]) == 1
    assert "error" in capsys.readouterr().err


def test_info_bad_line_exits_2(tmp_path, capsys):
    path = tmp_path / "bad.txt"
    path.write_text("a b\n", encoding="utf-8")
    assert main(["info", str(path)]) == 2
    assert "line 1" in capsys.readouterr().err


def test_paths_listing(g3_file, capsys):
    assert main(["paths", g3_file]) == 0
    assert capsys.readouterr().out == "k=1:3\nk=2:1\ntotal:4\nkbar:2\n"


def test_paths_max_k(g3_file, capsys):
    assert main(["paths", g3_file, "--max-k", "1"]) == 0
    assert capsys.readouterr().out == "k=1:3\ntotal:3\nkbar:1\n"


def test_paths_bad_max_k_exits_2(g3_file):
    assert main(["paths", g3_file, "--max-k", "0"]) == 2


@pytest.mark.parametrize(
    "xi,delta,gamma,expected",
    [("1", "1", "1,1", "1"), ("0", "1", "1,1", "0"), ("1", "0.5", "1,2", "0.5")],
)
def test_mu_worked_examples(g3_file, capsys, xi, delta, gamma, expected):
    code = main(
        ["mu", g3_file, "--gamma", gamma, "--theta", "0.5,0.5", "--xi", xi, "--delta", delta]
    )
    assert code == 0
    assert capsys.readouterr().out == expected + "\n"


def test_mu_with_presets(g3_file, capsys):
    code = main(
        ["mu", g3_file, "--gamma", "gamma1", "--theta", "theta1", "--xi", "1", "--delta", "1"]
    )
    assert code == 0
    assert capsys.readouterr().out == "1\n"


def test_mu_unknown_preset_exits_2(g3_file, capsys):
    code = main(
        ["mu", g3_file, "--gamma", "gamma9", "--theta", "theta1", "--xi", "1", "--delta", "1"]
    )
    assert code == 2
    assert "gamma1" in capsys.readouterr().err


def test_mu_wrong_gamma_length_exits_2(g3_file):
    code = main(
        ["mu", g3_file, "--gamma", "1,1,1", "--theta", "theta1", "--xi", "1", "--delta", "1"]
    )
    assert code == 2


def test_mu_bad_theta_sum_exits_2(g3_file, capsys):
    code = main(
        ["mu", g3_file, "--gamma", "1,1", "--theta", "0.5,0.6", "--xi", "1", "--delta", "1"]
    )
    assert code == 2
    assert "sum" in capsys.readouterr().err


def test_strategy_choices_enforced(g3_file):
    with pytest.raises(SystemExit) as exc:
        main(
            ["mu", g3_file, "--gamma", "1,1", "--theta", "0.5,0.5",
             "--xi", "1", "--delta", "1", "--strategy", "bogus"]
        )
    assert exc.value.code == 2


def test_sweep_default_grid(g3_file, tmp_path):
    out = tmp_path / "out.csv"
    code = main(["sweep", g3_file, "--gamma", "1,1", "--theta", "0.5,0.5", "-o", str(out)])
    assert code == 0
    lines = out.read_text(encoding="utf-8").splitlines()
    assert lines[0] == "delta,xi,mu"
    assert len(lines) == 122


def test_sweep_emits_json_and_svg(g3_file, tmp_path):
    out = tmp_path / "out.csv"
    out_json = tmp_path / "out.json"
    out_svg = tmp_path / "out.svg"
    code = main(
        ["sweep", g3_file, "--gamma", "gamma1", "--theta", "theta1",
         "-o", str(out), "--json", str(out_json), "--svg", str(out_svg)]
    )
    assert code == 0
    payload = json.loads(out_json.read_text(encoding="utf-8"))
    assert payload["gamma"] == [1.0, 1.0]
    assert payload["theta"] == [0.5, 0.5]
    assert payload["network"]["label"] == "g3.txt"
    assert "per_k" not in payload
    assert out_svg.read_text(encoding="utf-8").startswith("<svg ")


def test_sweep_per_k_flag(g3_file, tmp_path):
    out_json = tmp_path / "out.json"
    code = main(
        ["sweep", g3_file, "--gamma", "1,1", "--theta", "0.5,0.5",
         "-o", str(tmp_path / "out.csv"), "--json", str(out_json), "--per-k"]
    )
    assert code == 0
    payload = json.loads(out_json.read_text(encoding="utf-8"))
    assert len(payload["per_k"]) == 11
    assert payload["per_k"][10][1] == [3, 1]  # delta=1, xi=1


def test_sweep_custom_grids(g3_file, tmp_path, capsys):
    out = tmp_path / "out.csv"
    code = main(
        ["sweep", g3_file, "--gamma", "1,1", "--theta", "0.5,0.5",
         "--xi-grid", "0:4:2", "--delta-grid", "0,1", "-o", str(out)]
    )
    assert code == 0
    lines = out.read_text(encoding="utf-8").splitlines()
    assert len(lines) == 1 + 2 * 3
    assert lines[1].startswith("0,0,")
    assert lines[-1].startswith("1,4,")


def test_sweep_requires_gamma_and_theta(g3_file, tmp_path, capsys):
    code = main(["sweep", g3_file, "-o", str(tmp_path / "o.csv")])
    assert code == 2
    assert "gamma" in capsys.readouterr().err


def test_sweep_config_file(g3_file, tmp_path):
    config = tmp_path / "cfg.json"
    config.write_text(
        json.dumps(
            {
                "gamma": "gamma1",
                "theta": [0.5, 0.5],
                "xi_grid": "0:2:1",
                "delta_grid": [0, 1],
                "strategy": "post-arrival",
                "emit_per_k": True,
            }
        ),
        encoding="utf-8",
    )
    out_json = tmp_path / "out.json"
    code = main(
        ["sweep", g3_file, "--config", str(config),
         "-o", str(tmp_path / "out.csv"), "--json", str(out_json)]
    )
    assert code == 0
    payload = json.loads(out_json.read_text(encoding="utf-8"))
    assert payload["strategy"] == "post-arrival"
    assert payload["xi_grid"] == [0.0, 1.0, 2.0]
    assert "per_k" in payload


def test_flags_override_config(g3_file, tmp_path):
    config = tmp_path / "cfg.json"
    config.write_text(json.dumps({"gamma": "gamma1", "theta": "theta1"}), encoding="utf-8")
    out_json = tmp_path / "out.json"
    code = main(
        ["sweep", g3_file, "--config", str(config), "--gamma", "1,4",
         "-o", str(tmp_path / "out.csv"), "--json", str(out_json)]
    )
    assert code == 0
    payload = json.loads(out_json.read_text(encoding="utf-8"))
    assert payload["gamma"] == [1.0, 4.0]


def test_config_unknown_key_exits_2(g3_file, tmp_path, capsys):
    config = tmp_path / "cfg.json"
    config.write_text(json.dumps({"gamma": "gamma1", "theta": "theta1", "oops": 1}))
    code = main(["sweep", g3_file, "--config", str(config), "-o", str(tmp_path / "o.csv")])
    assert code == 2
    assert "oops" in capsys.readouterr().err


def test_config_invalid_json_exits_2(g3_file, tmp_path):
    config = tmp_path / "cfg.json"
    config.write_text("{not json", encoding="utf-8")
    assert main(["sweep", g3_file, "--config", str(config), "-o", str(tmp_path / "o.csv")]) == 2


def test_config_bad_per_k_type_exits_2(g3_file, tmp_path):
    config = tmp_path / "cfg.json"
    config.write_text(json.dumps({"gamma": "gamma1", "theta": "theta1", "emit_per_k": 1}))
    assert main(["sweep", g3_file, "--config", str(config), "-o", str(tmp_path / "o.csv")]) == 2


def test_sweep_unwritable_output_exits_1(g3_file, tmp_path):
    code = main(
        ["sweep", g3_file, "--gamma", "1,1", "--theta", "0.5,0.5",
         "-o", str(tmp_path / "missing_dir" / "out.csv")]
    )
    assert code == 1


def test_sweep_bad_grid_exits_2(g3_file, tmp_path, capsys):
    code = main(
        ["sweep", g3_file, "--gamma", "1,1", "--theta", "0.5,0.5",
         "--xi-grid", "5:1:1", "-o", str(tmp_path / "o.csv")]
    )
    assert code == 2


def test_extract_region(master_file, tmp_path, capsys):
    nodes = tmp_path / "keep.txt"
    nodes.write_text("".join(f"{t}\n" for t in synthnets.region_a_labels()), encoding="utf-8")
    out = tmp_path / "sub.txt"
    assert main(["extract", master_file, "--nodes", str(nodes), "-o", str(out)]) == 0
    assert main(["info", str(out)]) == 0
    assert "nodes=12 arcs=51 kbar=4" in capsys.readouterr().out


def test_extract_unknown_label_warns(master_file, tmp_path, capsys):
    nodes = tmp_path / "keep.txt"
    nodes.write_text("A00\nA01\nA03\nNOPE\n", encoding="utf-8")
    out = tmp_path / "sub.txt"
    assert main(["extract", master_file, "--nodes", str(nodes), "-o", str(out)]) == 0
    assert "NOPE" in capsys.readouterr().err


def test_extract_empty_subnetwork_exits_2(master_file, tmp_path, capsys):
    nodes = tmp_path / "keep.txt"
    nodes.write_text("A00\n", encoding="utf-8")
    code = main(["extract", master_file, "--nodes", str(nodes), "-o", str(tmp_path / "s.txt")])
    assert code == 2


def test_extract_missing_nodes_file_exits_1(master_file, tmp_path):
    code = main(
        ["extract", master_file, "--nodes", str(tmp_path / "nope.txt"), "-o", str(tmp_path / "s.txt")]
    )
    assert code == 1


def test_expand_grid_text():
    assert expand_grid_text("0:1:0.5") == (0.0, 0.5, 1.0)
    assert expand_grid_text("0,1:3:1,10") == (0.0, 1.0, 2.0, 3.0, 10.0)
    assert expand_grid_text("0:1:0.1") == tuple(d / 10 for d in range(11))
    with pytest.raises(ValueError):
        expand_grid_text("1:2")
    with pytest.raises(ValueError):
        expand_grid_text("0:1:0")
    with pytest.raises(ValueError):
        expand_grid_text("a:b:c")
    with pytest.raises(ValueError):
        expand_grid_text(",")
