import json

from modsurf.cli import main


def run(capsys, *argv):
    rc = main(list(argv))
    out = capsys.readouterr().out
    return rc, out


def test_distance_oracle(capsys):
    rc, out = run(capsys, "distance", "--p", "0,2", "--q", "0,3")
    assert rc == 0
    data = json.loads(out)
    assert data["cosh2"] == "13/6"
    assert data["exact"] is True


def test_distance_cover_same_region(capsys):
    rc, out = run(capsys, "distance", "--p", "0,5/2", "--q", "1/2,3",
                  "--method", "cover")
    assert rc == 0
    a = json.loads(out)
    rc, out = run(capsys, "distance", "--p", "0,5/2", "--q", "1/2,3")
    b = json.loads(out)
    assert a["cosh2"] == b["cosh2"]


def test_cover_verify(capsys):
    rc, out = run(capsys, "cover", "--region", "fu", "--verify", "20", "--seed", "1")
    assert rc == 0
    data = json.loads(out)
    assert data["verification"]["passed"] is True
    assert data["cardinality"] == 3


def test_enumerate(capsys):
    rc, out = run(capsys, "enumerate", "--center", "0,2", "--source", "0,2",
                  "--cosh", "1.5")
    assert rc == 0
    elems = json.loads(out)
    assert [1, 0, 0, 1] in elems


def test_sample_deterministic(capsys):
    rc, out1 = run(capsys, "sample", "-n", "5", "--seed", "4")
    assert rc == 0 and len(out1.strip().splitlines()) == 5
    rc, out2 = run(capsys, "sample", "-n", "5", "--seed", "4")
    assert out1 == out2


def test_stats_with_histogram(capsys, tmp_path):
    pts = tmp_path / "pts.txt"
    pts.write_text("# two sample points\n0,2\n0,3\n")
    hist = tmp_path / "hist.csv"
    rc, out = run(capsys, "stats", "--points", str(pts), "--histogram", str(hist))
    assert rc == 0
    data = json.loads(out)
    assert data == {"N": 2, "distinct": 1, "Q": 4, "bound": 1.0}
    lines = hist.read_text().strip().splitlines()
    assert lines[0] == "cosh2,ordered_pairs"
    assert lines[1] == "13/6,2"


def test_equilateral(capsys):
    rc, out = run(capsys, "equilateral", "-k", "3", "-d", "0.4")
    assert rc == 0
    data = json.loads(out)
    assert data["found"] is True
    assert data["residual"] <= 1e-10


def test_experiment(capsys, tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"n_values": [8], "seed": 1}))
    rc, out = run(capsys, "experiment", "--config", str(cfg))
    assert rc == 0
    assert out.startswith("# modsurf-experiment-v1")


def test_bad_group_exits_2(capsys):
    rc, _ = run(capsys, "distance", "--group", "nope", "--p", "0,2", "--q", "0,3")
    assert rc == 2


def test_bad_points_file_exits_2(capsys):
    rc, _ = run(capsys, "stats", "--points", "/does/not/exist")
    assert rc == 2
