from aqpath.construct import construct
from aqpath.cube import AugmentedCube
from aqpath.verify import ViolationKind, check_family, check_path


CUBE = AugmentedCube(4)
BASE_D = (0b0000, 0b0010, 0b0001)


def base_family():
    return [list(p) for p in construct(4, BASE_D).paths]


def test_accepts_base_family():
    assert check_family(CUBE, BASE_D, base_family()) is None


def test_check_path_single_edge():
    assert check_path(CUBE, [0b0000, 0b1000]) is None
    assert check_path(CUBE, [0b0101]) is None  # single vertex is a legal path


def test_check_path_repeated_vertex():
    bad = check_path(CUBE, [0, 1, 0])
    assert bad.kind is ViolationKind.NOT_SIMPLE


def test_check_path_non_adjacent():
    bad = check_path(CUBE, [0b0000, 0b0101])
    assert bad.kind is ViolationKind.NOT_A_PATH


def test_check_path_outside_view():
    bad = check_path(CUBE, [0, 933])
    assert bad.kind is ViolationKind.WRONG_GRAPH


def test_vertex_overlap_detected():
    fam = base_family()
    donor = next(p for p in fam if 0b0011 in p)
    other = next(p for p in fam if 0b0011 not in p and len(p) >= 4)
    # wedge the shared vertex into a second path between two of its neighbors
    pos = next(i for i in range(len(other) - 1)
               if CUBE.is_adjacent(other[i], 0b0011)
               and CUBE.is_adjacent(0b0011, other[i + 1]))
    other.insert(pos + 1, 0b0011)
    bad = check_family(CUBE, BASE_D, fam)
    assert bad.kind is ViolationKind.VERTEX_OVERLAP
    assert "3" in bad.detail


def test_missing_terminal_detected():
    fam = base_family()
    short = min(fam, key=len)
    short.pop(-1)  # endpoints are terminals, so this always drops one
    bad = check_family(CUBE, BASE_D, fam)
    assert bad.kind is ViolationKind.MISSING_TERMINAL


def test_edge_overlap_detected():
    # two path objects reusing the same direct edge, vertex sets exactly D
    fam = [[0b0010, 0b0000, 0b0001], [0b0000, 0b0010, 0b0001]]
    bad = check_family(CUBE, BASE_D, fam)
    assert bad.kind is ViolationKind.EDGE_OVERLAP


def test_family_member_must_hold_all_terminals():
    fam = base_family()
    fam.append([0b0000, 0b0010])  # a path, but one terminal short
    bad = check_family(CUBE, BASE_D, fam)
    assert bad.kind is ViolationKind.MISSING_TERMINAL


def test_missing_terminal_reported_before_overlap():
    # one path misses z AND collides with another; the absent terminal wins
    fam = [[0b0010, 0b0000, 0b0001],
           [0b0000, 0b0011, 0b0010],
           [0b0000, 0b0011, 0b0010, 0b0001]]
    bad = check_family(CUBE, BASE_D, fam)
    assert bad.kind is ViolationKind.MISSING_TERMINAL
