"""Geometry, axis spans, and basis-index arithmetic."""
import itertools

import numpy as np
import pytest

from nassimg import ImageGeometry, from_bits, parse_geometry, to_bits


def compositions(n, max_k=5):
    """All ordered axis-width tuples summing to n with at most max_k axes."""
    for k in range(1, min(max_k, n) + 1):
        for cuts in itertools.combinations(range(1, n), k - 1):
            edges = (0,) + cuts + (n,)
            yield tuple(edges[i + 1] - edges[i] for i in range(k))


@pytest.mark.parametrize(
    "widths, axis, span",
    [
        ((2, 3), 2, (3, 5)),
        ((1, 1, 1, 1, 1), 1, (1, 1)),
        ((2, 2, 1), 3, (5, 5)),
        ((2, 2, 1), 1, (1, 2)),
    ],
)
def test_axis_span(widths, axis, span):
    assert ImageGeometry(widths).axis_span(axis) == span


@pytest.mark.parametrize(
    "widths, index, coords",
    [
        ((2, 2, 1), 0b00101, (0, 2, 1)),
        ((2, 3), 0, (0, 0)),
        ((1, 1, 1, 1, 1), 0b11110, (1, 1, 1, 1, 0)),
    ],
)
def test_coordinates_of(widths, index, coords):
    geo = ImageGeometry(widths)
    assert geo.coordinates_of(index) == coords
    assert geo.index_of(coords) == index


def test_axis_spans_partition_the_qubits():
    for n in range(1, 9):
        for widths in compositions(n):
            geo = ImageGeometry(widths)
            covered = []
            for j in range(1, geo.k + 1):
                first, last = geo.axis_span(j)
                covered.extend(range(first, last + 1))
            assert covered == list(range(1, n + 1))


def test_coordinate_roundtrip_is_a_bijection():
    rng = np.random.default_rng(3)
    for n in range(1, 13):
        all_widths = list(compositions(n, 5))
        picks = [all_widths[i] for i in rng.integers(0, len(all_widths), size=3)]
        for w in picks:
            geo = ImageGeometry(w)
            seen = {geo.index_of(geo.coordinates_of(i)) for i in range(geo.size)}
            assert seen == set(range(geo.size))


def test_axis_value_matches_coordinates():
    geo = ImageGeometry((2, 3, 1))
    idx = np.arange(geo.size)
    for j in range(1, geo.k + 1):
        expected = np.array([geo.coordinates_of(int(i))[j - 1] for i in idx])
        assert np.array_equal(geo.axis_value(idx, j), expected)


def test_replace_axis_value():
    geo = ImageGeometry((2, 3))
    assert geo.replace_axis_value(0b00000, 2, 0b101) == 0b00101
    assert geo.replace_axis_value(0b11111, 1, 0) == 0b00111


def test_invalid_geometry():
    with pytest.raises(ValueError):
        ImageGeometry(())
    with pytest.raises(ValueError):
        ImageGeometry((2, 0))
    with pytest.raises(ValueError):
        ImageGeometry((7,)).axis_span(2)
    with pytest.raises(ValueError):
        ImageGeometry((2, 2)).coordinates_of(16)
    with pytest.raises(ValueError):
        ImageGeometry((2, 2)).index_of((4, 0))
    with pytest.raises(ValueError):
        ImageGeometry((2, 2)).index_of((0,))


def test_parse_geometry():
    assert parse_geometry("7x7") == ImageGeometry((7, 7))
    assert parse_geometry("2x2x1") == ImageGeometry((2, 2, 1))
    with pytest.raises(ValueError):
        parse_geometry("7x")


def test_bit_string_roundtrip():
    for n in (1, 5, 12):
        for i in (0, 1, (1 << n) - 1):
            assert from_bits(to_bits(i, n)) == i
    assert to_bits(0b00101, 5) == "00101"
    with pytest.raises(ValueError):
        to_bits(32, 5)
    with pytest.raises(ValueError):
        from_bits("01x")
