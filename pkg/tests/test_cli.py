import json

import pytest

from raagcurves import cli, graphs
from raagcurves.curves.surface import DATA_DIR

PHI = DATA_DIR / "phi.json"


def run(capsys, *argv):
    code = cli.main([str(a) for a in argv])
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_consistency(capsys):
    code, out, _ = run(capsys, "graphs", "consistency")
    assert code == 0 and out.count("5/5 checks pass") == 2


def test_embed_exit_codes(capsys):
    code, out, _ = run(capsys, "graphs", "embed", "C4", "gamma0")
    assert code == 0 and json.loads(out)["count"] == 1
    code, out, _ = run(capsys, "graphs", "embed", "K5", "gamma0")
    assert code == 2 and "no induced copy" in out


def test_embed_reads_graph_files(capsys, tmp_path):
    f = tmp_path / "g.json"
    f.write_text(graphs.path_graph(3).to_json())
    code, out, _ = run(capsys, "graphs", "embed", f, "gamma0", "--all")
    assert code == 0 and json.loads(out)["count"] > 1
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, _, err = run(capsys, "graphs", "embed", bad, "gamma0")
    assert code == 1 and "bad.json" in err


def test_catalog_formats(capsys, tmp_path):
    code, out, _ = run(capsys, "graphs", "catalog")
    assert code == 0 and "gamma1_ef" in json.loads(out)["names"]
    code, out, _ = run(capsys, "graphs", "catalog", "gamma0", "--format", "dot")
    assert out.startswith("graph") and out.count("--") == 14
    code, _, err = run(capsys, "graphs", "catalog", "petersen")
    assert code == 1 and "unknown" in err


def test_thick_stars_and_eta(capsys):
    code, out, _ = run(capsys, "graphs", "thick-stars", "K5", 3)
    assert code == 0 and "true" in out
    code, out, _ = run(capsys, "graphs", "eta", "lambda6", "--fact", "gamma0=5")
    assert json.loads(out)["eta_lower_bound"] == 7
    code, _, err = run(capsys, "graphs", "eta", "lambda6", "--fact", "gamma0")
    assert code == 1 and "GRAPH=BOUND" in err


def test_raag_commands(capsys, tmp_path):
    code, out, _ = run(capsys, "raag", "normalize", "gamma0", "a b a^-1")
    assert (code, out.strip()) == (0, "b")
    code, out, _ = run(capsys, "raag", "check-hom", PHI)
    assert code == 0 and "14 relators" in out
    dump = tmp_path / "ball.txt"
    code, out, _ = run(capsys, "raag", "ball", "gamma0", "--radius", 1, "--out", dump)
    assert code == 0 and "15 elements" in out
    lines = dump.read_text().splitlines()
    assert len(lines) == 15 and lines[0] == "1"
    code, out, _ = run(capsys, "raag", "kernel-ball", PHI, "--radius", 2)
    assert code == 0 and " 0 violations" in out


def test_bad_hom_rejected(capsys, tmp_path):
    data = json.loads(PHI.read_text())
    data["images"]["q"] = "g"  # g does not commute with everything q does
    f = tmp_path / "bad.json"
    f.write_text(json.dumps(data))
    code, out, _ = run(capsys, "raag", "check-hom", f)
    assert code == 1 and "FAILED" in out
    code, _, err = run(capsys, "raag", "kernel-ball", f, "--radius", 1)
    assert code == 1 and "relator check" in err


def test_decompose(capsys):
    code, out, _ = run(capsys, "decompose")
    assert code == 0
    code, out, _ = run(capsys, "decompose", "--json")
    report = json.loads(out)
    assert sorted(report["cases"]) == ["i", "ii", "iii", "iv", "v"]


def test_complexes(capsys, tmp_path):
    code, out, _ = run(capsys, "complexes", "corpus")
    assert code == 0 and "icosahedron" in out
    f = tmp_path / "k.json"
    f.write_text(json.dumps({"facets": [[1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4]]}))
    code, out, _ = run(capsys, "complexes", "check", f, 3)
    assert code == 0 and "equivalent True" in out


def test_curves_enumerate_and_graph(capsys, tmp_path):
    cache = tmp_path / "cache"
    common = ["--surface", "0,5", "--depth", 3]
    code, out, _ = run(capsys, "--cache-dir", cache, "curves", "enumerate", *common)
    assert code == 0 and "S_{0,5}" in out
    assert len(list(cache.glob("sample-*.json"))) == 1
    first, second = tmp_path / "g1.json", tmp_path / "g2.json"
    code, out, _ = run(capsys, "--cache-dir", cache, "curves", "graph", *common, "--out", first)
    assert code == 0 and "triangle-free: true" in out
    # once from the cache, once recomputed: byte-identical outputs
    run(capsys, "--cache-dir", "none", "curves", "graph", *common, "--out", second)
    assert first.read_bytes() == second.read_bytes()


def test_curves_cache_corruption(capsys, tmp_path):
    cache = tmp_path / "cache"
    args = ["--cache-dir", cache, "curves", "enumerate", "--surface", "0,5", "--depth", 2]
    assert run(capsys, *args)[0] == 0
    path = next(cache.glob("sample-*.json"))
    data = json.loads(path.read_text())
    data["sample"]["classes"][0] = "x1 x3"
    path.write_text(json.dumps(data))
    code, _, err = run(capsys, *args)
    assert code == 1 and "error" in err


def test_cache_dir_must_be_a_directory(capsys, tmp_path):
    f = tmp_path / "file"
    f.write_text("")
    code, _, err = run(capsys, "--cache-dir", f, "curves", "enumerate", "--surface", "0,5", "--depth", 1)
    assert code == 1 and "cache directory" in err


def test_curves_find_small(capsys, tmp_path):
    common = ["--cache-dir", tmp_path, "curves", "find"]
    code, out, _ = run(capsys, *common, "P4", "--surface", "0,5", "--depth", 4)
    assert code == 0 and "induced copy found" in out
    code, out, _ = run(capsys, *common, "C4", "--surface", "0,5", "--depth", 4)
    assert code == 2 and "none found" in out


def test_curves_oracle(capsys):
    code, out, _ = run(capsys, "curves", "oracle", "x1 x2", "x2 x3", "--surface", "0,4")
    assert code == 0 and "linked pairs: 2" in out


@pytest.mark.parametrize("argv", [
    ["curves", "enumerate", "--surface", "0,5", "--depth", "-1"],
    ["curves", "enumerate", "--surface", "2,0"],
])
def test_bad_config(capsys, argv):
    assert run(capsys, "--cache-dir", "none", *argv)[0] == 1
