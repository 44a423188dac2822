import numpy as np
import pytest

from enscoh.sweep import (
    COLUMNS,
    Family,
    SweepSpec,
    format_csv,
    format_svg,
    read_csv,
    run_sweep,
    sample_parameters,
    upper_envelope,
    write_csv,
)


def test_spec_validation():
    with pytest.raises(ValueError):
        SweepSpec(Family.ARB2X2_REAL, 0)
    with pytest.raises(ValueError):
        SweepSpec(Family.ARB2X2_REAL, 3, criterion="best")


def test_sampling_ranges():
    P = sample_parameters(SweepSpec(Family.ARB2X2_COMPLEX, 200, seed=4))
    assert P.shape == (200, 4)
    assert np.all((P[:, [0, 2]] >= 0) & (P[:, [0, 2]] <= np.pi))
    assert np.all((P[:, [1, 3]] >= 0) & (P[:, [1, 3]] < 2 * np.pi))
    real = sample_parameters(SweepSpec(Family.ARB2X2_REAL, 10, seed=4))
    assert np.all(real[:, [1, 3]] == 0)


def test_csv_format_and_round_trip(tmp_path):
    rows = run_sweep(SweepSpec(Family.ARB2X2_REAL, 4, seed=2), workers=1)
    text = format_csv(rows)
    assert text.splitlines()[0] == ",".join(COLUMNS)
    assert "\r" not in text and text.endswith("\n")
    first = text.splitlines()[1].split(",")
    assert len(first) == len(COLUMNS)
    path = tmp_path / "s.csv"
    write_csv(rows, path)
    back = read_csv(path)
    assert back[0]["c_r"] == pytest.approx(rows[0]["c_r"], rel=1e-8)


def test_parallel_rows_match_serial():
    spec = SweepSpec(Family.ARB2X2_COMPLEX, 4, seed=9)
    assert format_csv(run_sweep(spec, workers=2)) == format_csv(run_sweep(spec, workers=1))


def test_complex_family_deficit_never_maximal_with_nonzero_cr():
    rows = run_sweep(SweepSpec(Family.ARB2X2_COMPLEX, 30, seed=11), workers=1)
    cr = np.array([r["c_r"] for r in rows])
    cd = np.array([r["cd_l1"] for r in rows])
    assert np.any((cd < 3 - 1e-6) & (cr > 0))
    assert not np.any((cd >= 3 - 1e-6) & (cr > 1e-6))


def test_svg_is_self_contained():
    rows = run_sweep(SweepSpec(Family.ARB2X2_REAL, 3, seed=1), workers=1)
    svg = format_svg(rows, title="t")
    assert svg.startswith('<svg xmlns="http://www.w3.org/2000/svg" width="800" height="600"')
    assert "href" not in svg
    assert svg.count("<circle") == 3 * 4 + 4


def test_upper_envelope():
    x = np.array([0.0, 0.05, 0.5, 0.95, 1.0])
    y = np.array([1.0, 3.0, 2.0, 0.5, 0.7])
    env = upper_envelope(x, y, bins=2)
    assert env.tolist() == [3.0, 2.0]
    assert np.isnan(upper_envelope(np.array([0.0, 1.0]), np.ones(2), bins=3)[1])
