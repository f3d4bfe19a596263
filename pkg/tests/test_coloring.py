import pytest

from intervalcolor.coloring import (
    EdgeColoring,
    is_interval,
    is_proper,
    odd_color_edge_count,
    parity_internals_hold,
    spectrum,
)
from intervalcolor.errors import ColoringMismatch, VertexOutOfRange
from intervalcolor.multigraph import build


def col(*colors, t=None):
    return EdgeColoring.from_colors(colors, t)


def test_is_proper(named):
    assert is_proper(named["C4"], col(1, 2, 1, 2))
    assert not is_proper(named["C3"], col(1, 1, 2))
    assert is_proper(named["K2"], col(1))
    assert not is_proper(named["digon"], col(1, 1))


def test_domain_mismatch(named):
    with pytest.raises(ColoringMismatch):
        is_proper(named["C4"], col(1, 2, 1))
    with pytest.raises(ColoringMismatch):
        is_interval(named["C3"], col(1, 2, 3, 1))


def test_spectrum(named):
    c = col(1, 2, 1, 2)
    assert all(spectrum(named["C4"], c, v) == {1, 2} for v in range(4))
    assert spectrum(named["K2"], col(1), 1) == {1}
    padded = build(3, [(0, 1)])
    assert spectrum(padded, col(1), 2) == frozenset()
    with pytest.raises(VertexOutOfRange):
        spectrum(padded, col(1), 3)


def test_is_interval(named):
    assert is_interval(named["C4"], col(1, 2, 1, 2, t=2))
    assert not is_interval(named["C4"], col(1, 3, 1, 3, t=3))
    assert is_interval(named["K2"], col(1, t=1))
    # proper and contiguous, but color 3 never used
    assert not is_interval(named["C4"], col(1, 2, 1, 2, t=3))
    assert is_interval(named["digon"], col(2, 1))


def test_odd_color_edge_count(named):
    assert odd_color_edge_count(named["C4"], col(1, 2, 1, 2)) == 2
    assert odd_color_edge_count(named["K2"], col(2)) == 0


def test_coloring_validates_range():
    with pytest.raises(ValueError):
        EdgeColoring(2, (1, 3))
    with pytest.raises(ValueError):
        EdgeColoring(0, ())


def test_parity_internals(named):
    assert parity_internals_hold(named["C4"], col(1, 2, 1, 2))
    # not an interval coloring, so the spectra need not split evenly
    assert not parity_internals_hold(named["C4"], col(1, 3, 1, 3))
    with pytest.raises(ValueError):
        parity_internals_hold(named["P3"], col(1, 2))
