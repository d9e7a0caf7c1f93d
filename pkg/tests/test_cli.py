import subprocess
import sys

import pytest

import silverbig as sb
from silverbig import files
from silverbig.cli import run


def test_make_and_verify(tmp_path):
    out = tmp_path / "sts13c.blk"
    assert run(["make", "--family", "sts13-cyclic", "-o", str(out)]) == 0
    assert run(["verify", str(out)]) == 0
    d = files.read_design(out)
    assert d.b == 26


def test_make_kts_classes(tmp_path):
    out = tmp_path / "kts27.blk"
    assert run(["make", "--family", "kts", "--v", "27", "-o", str(out)]) == 0
    assert out.read_text().count("%class") == 13
    assert files.read_design(out).b == 117


def test_make_usage_errors(tmp_path):
    assert run(["make", "--family", "kts", "-o", str(tmp_path / "x.blk")]) == 2
    assert run(["make", "--family", "ag", "-o", str(tmp_path / "x.blk")]) == 2
    assert run(["make", "--family", "nope", "-o", str(tmp_path / "x.blk")]) == 2
    assert run(["make", "--family", "sts-bose", "--v", "8", "-o", str(tmp_path / "x.blk")]) == 2


def test_verify_negative(tmp_path, sts13c):
    broken = sb.Design(13, 3, 1, sts13c.blocks[1:])
    path = tmp_path / "broken.blk"
    files.write_design(broken, path)
    assert run(["verify", str(path)]) == 1


def test_big_and_alpha(tmp_path):
    blk = tmp_path / "sts13c.blk"
    gpath = tmp_path / "g0.graph"
    apath = tmp_path / "alpha.txt"
    run(["make", "--family", "sts13-cyclic", "-o", str(blk)])
    assert run(["big", str(blk), "--i", "0", "-o", str(gpath)]) == 0
    assert run(["alpha", str(gpath), "-o", str(apath), "--enumerate"]) == 0
    assert files.read_alpha_set(apath).size == 6


def test_alpha_budget_exit(tmp_path):
    blk = tmp_path / "sts13c.blk"
    gpath = tmp_path / "g0.graph"
    run(["make", "--family", "sts13-cyclic", "-o", str(blk)])
    run(["big", str(blk), "--i", "0", "-o", str(gpath)])
    assert run(["alpha", str(gpath), "--budget", "2"]) == 3


def test_screen_fires(tmp_path):
    blk = tmp_path / "kts15.blk"
    run(["make", "--family", "kts", "--v", "15", "-o", str(blk)])
    assert run(["screen", "--design", str(blk), "--i", "1"]) == 1
    blk19 = tmp_path / "sts19.blk"
    run(["make", "--family", "sts-skolem", "--v", "19", "-o", str(blk19)])
    assert run(["screen", "--design", str(blk19), "--i", "0"]) == 1
    # KTS(27) passes every 1-BIG screen
    blk27 = tmp_path / "kts27.blk"
    run(["make", "--family", "kts", "--v", "27", "-o", str(blk27)])
    assert run(["screen", "--design", str(blk27), "--i", "1"]) == 0


def test_silver_decide_all_alpha(tmp_path, capsys):
    blk = tmp_path / "sts13c.blk"
    run(["make", "--family", "sts13-cyclic", "-o", str(blk)])
    code = run(["silver", "decide", "--design", str(blk), "--i", "0", "--all-alpha"])
    out = capsys.readouterr().out
    assert code == 1
    assert "not silver" in out
    assert out.count("counting certificate") == 13
    assert "total 12" in out


def test_silver_decide_single_set(tmp_path):
    blk = tmp_path / "sts13c.blk"
    run(["make", "--family", "sts13-cyclic", "-o", str(blk)])
    d = files.read_design(blk)
    aset = tmp_path / "t0.txt"
    files.write_alpha_set(sb.pencil(d, 0), aset)
    assert run(
        ["silver", "decide", "--design", str(blk), "--i", "0", "--alpha-set", str(aset)]
    ) == 1


def test_silver_decide_sat(tmp_path):
    blk = tmp_path / "sts9.blk"
    run(["make", "--family", "sts-bose", "--v", "9", "-o", str(blk)])
    assert run(["silver", "decide", "--design", str(blk), "--i", "0"]) == 0


def test_silver_decide_budget(tmp_path):
    blk = tmp_path / "sts13c.blk"
    run(["make", "--family", "sts13-cyclic", "-o", str(blk)])
    assert run(
        ["silver", "decide", "--design", str(blk), "--i", "0", "--budget", "3"]
    ) == 3


def test_budget_env_var(tmp_path, monkeypatch):
    blk = tmp_path / "sts13c.blk"
    run(["make", "--family", "sts13-cyclic", "-o", str(blk)])
    monkeypatch.setenv("SILVERBIG_BUDGET", "3")
    assert run(["silver", "decide", "--design", str(blk), "--i", "0"]) == 3


def test_construct_product_then_check_in_separate_process(tmp_path):
    kts9 = tmp_path / "kts9.blk"
    run(["make", "--family", "kts", "--v", "9", "-o", str(kts9)])
    outdir = tmp_path / "out"
    assert run(
        ["silver", "construct", "--product", "--plane", "3",
         "--rbibd", str(kts9), "-o", str(outdir)]
    ) == 0
    for name in ("design.blk", "big1.graph", "big1_coloring.txt", "big1_alpha_set.txt"):
        assert (outdir / name).exists()
    proc = subprocess.run(
        [sys.executable, "-m", "silverbig.cli", "silver", "check",
         "--graph", str(outdir / "big1.graph"),
         "--coloring", str(outdir / "big1_coloring.txt"),
         "--alpha-set", str(outdir / "big1_alpha_set.txt")],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0, proc.stdout + proc.stderr
    assert "silver" in proc.stdout


def test_construct_canonical(tmp_path):
    ag = tmp_path / "ag3.blk"
    run(["make", "--family", "ag", "--n", "3", "-o", str(ag)])
    outdir = tmp_path / "canon"
    assert run(
        ["silver", "construct", "--canonical", "--design", str(ag), "--i", "1",
         "-o", str(outdir)]
    ) == 0
    assert run(
        ["silver", "check",
         "--graph", str(outdir / "big1.graph"),
         "--coloring", str(outdir / "big1_coloring.txt"),
         "--alpha-set", str(outdir / "big1_alpha_set.txt")]
    ) == 0


def test_construct_canonical_unsupported(tmp_path):
    blk = tmp_path / "sts13c.blk"
    run(["make", "--family", "sts13-cyclic", "-o", str(blk)])
    assert run(
        ["silver", "construct", "--canonical", "--design", str(blk), "--i", "0",
         "-o", str(tmp_path / "nope")]
    ) == 1


def test_silver_check_negative(tmp_path, kts27_product):
    g = sb.build_big(kts27_product.design, 1)
    files.write_graph(g, tmp_path / "g.graph")
    bad = sb.Coloring((0,) * g.n, 37)
    files.write_coloring(bad, tmp_path / "c.txt")
    files.write_alpha_set(kts27_product.alpha_set, tmp_path / "a.txt")
    assert run(
        ["silver", "check", "--graph", str(tmp_path / "g.graph"),
         "--coloring", str(tmp_path / "c.txt"), "--alpha-set", str(tmp_path / "a.txt")]
    ) == 1


def test_report_pipeline(tmp_path):
    blk = tmp_path / "sts13c.blk"
    run(["make", "--family", "sts13-cyclic", "-o", str(blk)])
    outdir = tmp_path / "rep"
    assert run(["report", str(blk), "-o", str(outdir)]) == 0
    text = (outdir / "report.txt").read_text()
    assert "verify: ok" in text
    assert "srg_ok=True" in text
    assert "alpha=6" in text and "alpha=4" in text
    assert "not-silver" in text
    # every claim is backed by a re-verifiable artifact
    assert (outdir / "design.blk").exists()
    assert (outdir / "big0.graph").exists()
    assert (outdir / "big1.graph").exists()
    assert (outdir / "big0_alpha_set.txt").exists()
    # the 13 pencil refutations
    certs = list(outdir.glob("big0_refutation*_certificate.txt"))
    assert len(certs) == 13
    assert files.read_design(outdir / "design.blk") == files.read_design(blk)


def test_usage_errors(tmp_path):
    assert run(["verify", str(tmp_path / "missing.blk")]) == 2
    assert run(["frobnicate"]) == 2
    assert run([]) == 2
    bad = tmp_path / "bad.blk"
    bad.write_text("not a design\n")
    assert run(["verify", str(bad)]) == 2
