"""End-to-end command line runs, in process via main()."""

import numpy as np
import pytest

from detsense import (
    SensingMatrix,
    SparseSignal,
    load_matrix,
    load_signal,
    measure,
    save_matrix,
    save_samples,
)
from detsense.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_build_and_analyze_bch(tmp_path, capsys):
    out = str(tmp_path / "m.txt")
    code, stdout, _ = run(capsys, "build", "bch", "--mtilde", "4",
                          "--i", "3", "--out", out)
    assert code == 0
    assert "wrote 15x16 bipolar matrix" in stdout

    code, stdout, _ = run(capsys, "analyze", out)
    assert code == 0
    assert "matrix 15x16 alphabet=bipolar" in stdout
    assert "family=bch" in stdout
    assert "coherence 1/15" in stdout
    assert "certified restricted isometry order 15" in stdout
    assert "degenerate no" in stdout
    assert "distance bound: coherence <= 1/15" in stdout


def test_analyze_shift_group_profile(tmp_path, capsys, bipolar_6_2):
    path = str(tmp_path / "m.txt")
    save_matrix(path, bipolar_6_2)
    code, stdout, _ = run(capsys, "analyze", path)
    assert code == 0
    assert "shift groups 10 (period:count 1:1 7:1 63:8)" in stdout
    assert "coherence 9/63 = 1/7" in stdout
    assert "certified restricted isometry order 7" in stdout


def test_build_and_analyze_devore(tmp_path, capsys):
    out = str(tmp_path / "d.txt")
    code, stdout, _ = run(capsys, "build", "devore", "--p", "8",
                          "--r", "2", "--out", out)
    assert code == 0
    assert "wrote 64x512 binary matrix" in stdout
    code, stdout, _ = run(capsys, "analyze", out)
    assert code == 0
    assert "coherence 2/8 = 1/4" in stdout
    assert "johnson bound for (m=64, w=8, overlap=2): 720, " \
           "512 columns within" in stdout


def test_build_and_analyze_gaussian(tmp_path, capsys):
    out = str(tmp_path / "g.txt")
    code, stdout, _ = run(capsys, "build", "gaussian", "--m", "12",
                          "--n", "20", "--seed", "3", "--out", out)
    assert code == 0
    code, stdout, _ = run(capsys, "analyze", out)
    assert code == 0
    assert "measured coherence" in stdout
    assert "real matrix, no exact certificate" in stdout


def test_build_ternary(tmp_path, capsys):
    out = str(tmp_path / "t.txt")
    code, stdout, _ = run(capsys, "build", "ternary", "--p", "7", "--r", "2",
                          "--x-mtilde", "3", "--x-i", "1", "--out", out)
    assert code == 0
    assert "wrote 49x2744 ternary matrix" in stdout
    matrix = load_matrix(out)
    assert matrix.descriptor["same_pattern_bound"] == 1


def test_build_ooc(tmp_path, capsys):
    out = str(tmp_path / "o.txt")
    code, stdout, _ = run(capsys, "build", "ooc", "--a", "1", "--out", out)
    assert code == 0
    assert "wrote 15x30 binary matrix" in stdout


def test_recover_roundtrip(tmp_path, capsys, bipolar_6_2):
    mpath = str(tmp_path / "m.txt")
    ypath = str(tmp_path / "y.txt")
    xpath = str(tmp_path / "x.txt")
    tpath = str(tmp_path / "trace.txt")
    save_matrix(mpath, bipolar_6_2)
    rng = np.random.default_rng(71)
    sig = SparseSignal(512, (9, 77, 403), rng.standard_normal(3))
    save_samples(ypath, measure(bipolar_6_2, sig))

    code, stdout, _ = run(capsys, "recover", "--matrix", mpath,
                          "--samples", ypath, "--k", "3",
                          "--out", xpath, "--trace", tpath)
    assert code == 0
    assert "recovered support 9 77 403" in stdout
    estimate = load_signal(xpath)
    assert estimate.support == (9, 77, 403)
    assert np.allclose(estimate.values, sig.values, atol=1e-9)

    trace_lines = (tmp_path / "trace.txt").read_text().splitlines()
    assert trace_lines[0] == "iteration selected residual_norm"
    assert len(trace_lines) == 4
    picked = [int(line.split()[1]) for line in trace_lines[1:]]
    assert sorted(picked) == [9, 77, 403]


def test_recover_fast_matches(tmp_path, capsys, bipolar_6_2):
    mpath = str(tmp_path / "m.txt")
    ypath = str(tmp_path / "y.txt")
    save_matrix(mpath, bipolar_6_2)
    rng = np.random.default_rng(73)
    sig = SparseSignal(512, (0, 255, 511), rng.standard_normal(3))
    save_samples(ypath, measure(bipolar_6_2, sig))
    code, stdout, _ = run(capsys, "recover", "--matrix", mpath,
                          "--samples", ypath, "--k", "3", "--fast",
                          "--out", str(tmp_path / "x.txt"))
    assert code == 0
    assert "recovered support 0 255 511" in stdout


def test_sweep_csv_deterministic(tmp_path, capsys):
    mpath = str(tmp_path / "m.txt")
    run(capsys, "build", "bch", "--mtilde", "4", "--i", "3", "--out", mpath)
    c1 = tmp_path / "s1.csv"
    c2 = tmp_path / "s2.csv"
    for out in (c1, c2):
        code, stdout, _ = run(capsys, "sweep", "--matrix", mpath,
                              "--kmin", "1", "--kmax", "2", "--trials", "6",
                              "--seed", "17", "--fast", "--out", str(out))
        assert code == 0
    assert c1.read_bytes() == c2.read_bytes()
    lines = c1.read_text().splitlines()
    assert lines[0] == "k,success_rate,trials,seed"
    assert lines[1] == "1,1.0,6,17"
    assert len(lines) == 3


def test_noise_sweep_csv(tmp_path, capsys):
    mpath = str(tmp_path / "m.txt")
    run(capsys, "build", "ooc", "--a", "1", "--out", mpath)
    cpath = tmp_path / "ns.csv"
    code, stdout, _ = run(capsys, "noise-sweep", "--matrix", mpath,
                          "--k", "1", "--levels", "10,inf", "--trials", "4",
                          "--seed", "5", "--out", str(cpath))
    assert code == 0
    lines = cpath.read_text().splitlines()
    assert lines[0] == "noise_db,mean_snr_db,trials,seed"
    assert lines[1].startswith("10.0,")
    assert lines[2].startswith("inf,")
    assert len(lines) == 3


def test_count_output(capsys):
    code, stdout, _ = run(capsys, "count", "--mtilde", "6", "--i", "2")
    assert code == 0
    assert "circular spacing count tau(a=2, b=6) = 10" in stdout
    assert "linear spacing count kappa(a=2, b=6) = 13" in stdout
    assert "parity check degree 10" in stdout
    assert "matrix size 63x512, certified order 7 (measured)" in stdout


def test_count_maximal_spacing(capsys):
    code, stdout, _ = run(capsys, "count", "--mtilde", "3", "--i", "3")
    assert code == 0
    assert "maximal spacing case: square 7x7 circulant" in stdout
    assert "certified order 7" in stdout


def test_count_large_case_uses_distance_bound(capsys):
    code, stdout, _ = run(capsys, "count", "--mtilde", "10", "--i", "3")
    assert code == 0
    assert "certified order 9 (distance-bound)" in stdout


def test_usage_errors_exit_1(tmp_path, capsys):
    code, _, err = run(capsys, "build", "nosuch", "--out", "x")
    assert code == 1 and "usage error" in err
    code, _, err = run(capsys, "build", "bch", "--mtilde", "4", "--i", "3")
    assert code == 1  # --out missing
    code, _, err = run(capsys, "build", "bch", "--out", str(tmp_path / "m"))
    assert code == 1 and "requires --mtilde" in err
    code, _, err = run(capsys, "count", "--mtilde", "3", "--i", "0")
    assert code == 1
    code, _, err = run(capsys)
    assert code == 1


def test_sweep_bad_range_exit_1(tmp_path, capsys):
    mpath = str(tmp_path / "m.txt")
    run(capsys, "build", "ooc", "--a", "1", "--out", mpath)
    code, _, err = run(capsys, "sweep", "--matrix", mpath, "--kmin", "3",
                       "--kmax", "2", "--trials", "2", "--seed", "1",
                       "--out", str(tmp_path / "s.csv"))
    assert code == 1 and "parameter error" in err


def test_build_cap_exit_1(tmp_path, capsys):
    # 2^25 columns, over the command line cap; rejected before building
    code, _, err = run(capsys, "build", "bch", "--mtilde", "10", "--i", "3",
                       "--out", str(tmp_path / "m.txt"))
    assert code == 1
    assert "exceed the command line cap" in err


def test_data_errors_exit_2(tmp_path, capsys):
    code, _, err = run(capsys, "analyze", str(tmp_path / "missing.txt"))
    assert code == 2 and "data error" in err
    bad = tmp_path / "bad.txt"
    bad.write_text("not a matrix file\n")
    code, _, err = run(capsys, "analyze", str(bad))
    assert code == 2
    # samples length mismatch against a valid matrix
    mpath = str(tmp_path / "m.txt")
    run(capsys, "build", "ooc", "--a", "1", "--out", mpath)
    ypath = str(tmp_path / "y.txt")
    save_samples(ypath, np.zeros(7))
    code, _, err = run(capsys, "recover", "--matrix", mpath,
                       "--samples", ypath, "--k", "1",
                       "--out", str(tmp_path / "x.txt"))
    assert code == 2 and "does not match" in err


def test_recover_duplicate_columns_exit_3(tmp_path, capsys):
    entries = np.array([[1, 0, 1], [1, 1, 1], [0, 1, 0]], dtype=np.int8)
    matrix = SensingMatrix(entries, "binary")  # columns 0 and 2 equal
    mpath = str(tmp_path / "m.txt")
    ypath = str(tmp_path / "y.txt")
    xpath = str(tmp_path / "x.txt")
    save_matrix(mpath, matrix)
    save_samples(ypath, np.array([1.0, 1.0, 0.0]))
    code, stdout, err = run(capsys, "recover", "--matrix", mpath,
                            "--samples", ypath, "--k", "1", "--out", xpath)
    assert code == 3
    assert "duplicate columns" in err
    # the estimate is still written before the warning
    assert load_signal(xpath).sparsity == 1
