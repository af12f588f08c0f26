import itertools

import pytest

from aqpath.cube import AdjListView, AugmentedCube, RestrictedView
from aqpath.flow import (
    Insufficient,
    connectivity,
    disjoint_paths,
    fan,
    linkage,
    min_vertex_cut,
)


def k4():
    return AdjListView([(i, j) for i in range(4) for j in range(i + 1, 4)], bits=2)


def assert_internally_disjoint(view, u, v, paths):
    seen = set()
    edges = set()
    for p in paths:
        assert p[0] == u and p[-1] == v
        assert len(set(p)) == len(p)
        for a, b in zip(p, p[1:]):
            assert view.is_adjacent(a, b)
            e = frozenset((a, b))
            assert e not in edges
            edges.add(e)
        inner = set(p[1:-1])
        assert not (inner & seen)
        seen |= inner


def test_disjoint_paths_on_k4():
    g = k4()
    paths = disjoint_paths(g, 0, 1, 3)
    assert len(paths) == 3
    assert_internally_disjoint(g, 0, 1, paths)
    assert (0, 1) in paths  # the direct edge counts as one path


def test_disjoint_paths_adjacent_pair_dimension_3():
    cube = AugmentedCube(3)
    for v in cube.neighbors(0):
        paths = disjoint_paths(cube, 0, v, 4)
        assert len(paths) == 4
        assert_internally_disjoint(cube, 0, v, paths)


def test_disjoint_paths_insufficient_reports_max():
    cube = AugmentedCube(4)
    with pytest.raises(Insufficient) as exc:
        disjoint_paths(cube, 0b0000, 0b1111, 8)
    assert exc.value.achieved == 7  # the degree caps the count


def test_disjoint_paths_validates_input():
    g = k4()
    with pytest.raises(ValueError):
        disjoint_paths(g, 0, 0, 1)
    with pytest.raises(ValueError):
        disjoint_paths(g, 0, 9, 1)


def test_fan_of_neighbors_is_single_edges():
    cube = AugmentedCube(4)
    got = fan(cube, 0, cube.neighbors(0))
    assert set(got) == set(cube.neighbors(0))
    assert all(p == (0, t) for t, p in got.items())


def test_fan_any_four_targets_dimension_3():
    cube = AugmentedCube(3)
    for S in [(1, 2, 4, 7), (3, 5, 6, 7), (1, 3, 5, 6)]:
        got = fan(cube, 0, S)
        assert set(got) == set(S)
        inner = set()
        for t, p in got.items():
            assert p[0] == 0 and p[-1] == t
            assert not (set(p[1:-1]) & set(S))  # interiors avoid the target set
            assert not (set(p[1:-1]) & inner)
            inner |= set(p[1:-1])


def test_fan_on_diamond_view():
    cube = AugmentedCube(4)
    dia = cube.diamond_view(0b01, 0b11)
    z = 0b0101
    targets = [0b0100, 0b0110, 0b1100, 0b1111]
    got = fan(dia, z, targets)
    assert set(got) == set(targets)


def test_fan_rejects_source_in_targets():
    with pytest.raises(ValueError):
        fan(AugmentedCube(3), 0, [0, 1])


def test_linkage_matched_sets():
    cube = AugmentedCube(4)
    A = [0b0000, 0b0001]
    B = [0b1000, 0b1001]  # the leading-bit matching partners
    got = linkage(cube, A, B)
    assert set(got) == set(A)
    used = set()
    for a, p in got.items():
        assert p[0] == a and p[-1] in B
        assert not (set(p) & used)
        used |= set(p)


def test_linkage_in_half_view():
    cube = AugmentedCube(4)
    h0 = cube.half_view(0)
    A = [0, 1, 2, 3]
    B = [4, 5, 6, 7]
    got = linkage(h0, A, B)
    assert sorted(p[-1] for p in got.values()) == B


def test_linkage_validates_sides():
    cube = AugmentedCube(3)
    with pytest.raises(ValueError):
        linkage(cube, [0, 1], [1, 2])
    with pytest.raises(ValueError):
        linkage(cube, [0], [1, 2])


def test_connectivity_values():
    assert connectivity(AugmentedCube(2)) == 3
    assert connectivity(AugmentedCube(3)) == 4
    assert connectivity(AugmentedCube(4)) == 7


def test_diamond_connectivity():
    # two 3-connected quadrants joined by a perfect matching
    assert connectivity(AugmentedCube(4).diamond_view(0b00, 0b10)) == 4


def test_duality_exhaustive_small_cubes():
    for n in (2, 3):
        cube = AugmentedCube(n)
        for u, v in itertools.combinations(range(1 << n), 2):
            cut = min_vertex_cut(cube, u, v)
            paths = disjoint_paths(cube, u, v, cut)
            assert len(paths) == cut
            assert_internally_disjoint(cube, u, v, paths)
            with pytest.raises(Insufficient) as exc:
                disjoint_paths(cube, u, v, cut + 1)
            assert exc.value.achieved == cut


def test_avoid_sets_are_honoured():
    cube = AugmentedCube(4)
    banned = {0b0011, 0b0100}
    view = RestrictedView(cube, forbidden_vertices=banned)
    for p in disjoint_paths(view, 0b0000, 0b0111, 5):
        assert not (set(p) & banned)
    edge = (0b0000, 0b0111)
    view2 = RestrictedView(cube, forbidden_edges=[edge])
    for p in disjoint_paths(view2, *edge, 5):
        assert (0b0000, 0b0111) not in list(zip(p, p[1:]))


def test_determinism():
    cube = AugmentedCube(4)
    a = disjoint_paths(cube, 0, 15, 7)
    b = disjoint_paths(cube, 0, 15, 7)
    assert a == b
    assert fan(cube, 0, [1, 2, 4, 8]) == fan(cube, 0, [1, 2, 4, 8])
