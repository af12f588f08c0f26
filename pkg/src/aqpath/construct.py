"""Constructive path systems through any three vertices of an augmented cube.

``construct(n, D)`` returns, for n >= 4 and any three distinct vertices,
exactly ``target_count(n)`` pairwise internally disjoint paths through all
of D, where

    target_count(n) = 3n/2 - 2        (n even)
                    = 3(n-1)/2 - 1    (n odd)

matches the counting ceiling, so the family is maximum.

The builder works on a canonical relocation of the triple (XOR translation
plus a role permutation; both recorded in the trace) and dispatches on how
the triple meets the two-leading-bit decomposition:

    B1/B2/B3.x   dimension-4 base cases
    E1.x         even n, all three in one quadrant: recurse two dimensions
                 down, then add three cross-quadrant paths
    E2.x, E3     even n, direct ladders from a maximum bundle of x-y paths,
                 a fan from z, and the matching edges between sub-cubes
    O1           odd n, all in one half: recurse one dimension down, then
                 one extra path over the other half
    O2           odd n, direct ladder across the halves

Every case ends at the verifier.  If a transcription cannot be realized on
some triple (named vertices colliding, not enough long paths to attach to),
the constructor falls back to a direct profile-packing search for the full
count, flags the trace, and verifies again; shortfall is never silent.
"""

from __future__ import annotations

import dataclasses
import itertools

from .cube import AugmentedCube, RestrictedView, canonicalize_triple
from .flow import Insufficient, disjoint_paths, fan, linkage
from .oracle import _assemble, _profiles
from .packing import Budget, SearchBudgetExceeded, pack_segments
from .verify import check_family

# dispatcher case labels (B = dimension-4 base, E = even step, O = odd step)
CASE_B1, CASE_B2, CASE_B31, CASE_B32 = "B1", "B2", "B3.1", "B3.2"
CASE_E11, CASE_E12 = "E1.1", "E1.2"
CASE_E21, CASE_E22, CASE_E3 = "E2.1", "E2.2", "E3"
CASE_O1, CASE_O2 = "O1", "O2"
CASE_FALLBACK = "FB"

PACK_BUDGET = 2_000_000


class ConstructionError(RuntimeError):
    """The constructor could not deliver the guaranteed count (a bug signal)."""


class _CaseInfeasible(Exception):
    """A literal case transcription does not fit this triple."""


def target_count(n: int) -> int:
    if n < 4:
        raise ValueError("construction defined for n >= 4")
    return 3 * n // 2 - 2 if n % 2 == 0 else 3 * (n - 1) // 2 - 1


@dataclasses.dataclass(frozen=True)
class TraceEntry:
    dimension: int
    case: str
    translation: int
    roles: tuple[int, int, int]  # vertices playing x, y, z, in this level's labels
    fallback: bool = False


@dataclasses.dataclass
class DPathFamily:
    n: int
    terminals: tuple[int, int, int]
    paths: list[tuple[int, ...]]
    trace: list[TraceEntry]

    @property
    def fallback_used(self) -> bool:
        return any(e.fallback for e in self.trace)


def construct(n: int, triple) -> DPathFamily:
    """target_count(n) internally disjoint paths through the triple."""
    cube = AugmentedCube(n)
    trip = tuple(triple)
    if n < 4:
        raise ValueError("construction defined for n >= 4")
    if len(trip) != 3 or len(set(trip)) != 3:
        raise ValueError("need three distinct vertices")
    for v in trip:
        cube.check_vertex(v)
    want = target_count(n)
    try:
        paths, trace = _construct_level(cube, trip)
        if len(paths) != want or check_family(cube, trip, paths) is not None:
            raise _CaseInfeasible("construction failed verification")
    except (_CaseInfeasible, Insufficient, SearchBudgetExceeded):
        paths = _fallback_family(cube, trip)
        trace = [TraceEntry(n, CASE_FALLBACK, 0, tuple(sorted(trip)), True)]
        bad = check_family(cube, trip, paths)
        if bad is not None or len(paths) != want:
            raise ConstructionError(f"fallback failed on {trip}: {bad}")
    oriented = []
    for p in paths:
        t = tuple(p)
        if t[0] > t[-1]:
            t = tuple(reversed(t))
        oriented.append(t)
    return DPathFamily(n=n, terminals=trip, paths=oriented, trace=trace)


# -- dispatch ----------------------------------------------------------


def _construct_level(cube, trip):
    n = cube.n
    word, case, xyz = _normalize(cube, trip)
    x, y, z = xyz
    sub: list[TraceEntry] = []
    if case == CASE_B1:
        paths = _base_one_quadrant(x, y, z)
    elif case == CASE_B2:
        paths = _base_pair_sibling(cube, x, y, z)
    elif case == CASE_B31:
        paths = _base_cross_half_mated(cube, x, y, z)
    elif case == CASE_B32:
        paths = _base_cross_half_generic(cube, x, y, z)
    elif case == CASE_E11:
        paths, sub = _even_one_quadrant_mated(cube, x, y, z)
    elif case == CASE_E12:
        paths, sub = _even_one_quadrant_generic(cube, x, y, z)
    elif case == CASE_E21:
        paths = _even_pair_sibling_mated(cube, x, y, z)
    elif case == CASE_E22:
        paths = _even_pair_sibling_generic(cube, x, y, z)
    elif case == CASE_E3:
        paths = _even_cross_half(cube, x, y, z)
    elif case == CASE_O1:
        paths, sub = _odd_same_half(cube, x, y, z)
    elif case == CASE_O2:
        paths = _odd_cross_half(cube, x, y, z)
    else:  # pragma: no cover
        raise AssertionError(case)
    pulled = [[v ^ word for v in p] for p in paths]
    entry = TraceEntry(n, case, word, tuple(v ^ word for v in xyz))
    return pulled, [entry] + sub


def _normalize(cube, trip):
    """Canonical translation plus case- and role-selection for this level."""
    n = cube.n
    can = canonicalize_triple(cube, trip)
    word = can.translation
    h2w = 1 << (n - 2)
    c2w = (1 << (n - 1)) - 1
    if can.pattern == "one-quadrant":
        vals = sorted(can.roles)
        if n % 2 == 1:
            return word, CASE_O1, _roles_avoiding_mate(vals, c2w)
        if n == 4:
            x = next(v for v in vals
                     if any(v ^ w == 2 for w in vals) and any(v ^ w == 1 for w in vals))
            word ^= x
            return word, CASE_B1, (0, 2, 1)
        c3w = (1 << (n - 2)) - 1
        mate = _find_mate(vals, c3w)
        if mate is not None:
            x, y = mate
            z = next(v for v in vals if v not in (x, y))
            return word, CASE_E11, (x, y, z)
        return word, CASE_E12, tuple(vals)
    if can.pattern == "sibling-pair":
        x0, y0, z0 = can.roles
        if n % 2 == 1:
            return word, CASE_O1, _roles_avoiding_mate(sorted(can.roles), c2w)
        if n == 4:
            return word, CASE_B2, (x0, y0, z0)
        if z0 ^ c2w in (x0, y0):
            x = z0 ^ c2w
            y = y0 if x == x0 else x0
            return word, CASE_E21, (x, y, z0)
        return word, CASE_E22, (x0, y0, z0)
    # cross-half
    x0, y0, z0 = can.roles
    if n == 4:
        if x0 ^ y0 == c2w:
            x = x0 if cube.quadrant(x0) == 0 else y0
            y = y0 if x == x0 else x0
            return word, CASE_B31, (x, y, z0)
        return word, CASE_B32, (x0, y0, z0)
    if n % 2 == 1:
        return word, CASE_O2, (x0, y0, z0)
    return word, CASE_E3, (x0, y0, z0)


def _find_mate(vals, mask):
    for u, v in itertools.combinations(sorted(vals), 2):
        if u ^ v == mask:
            return u, v
    return None


def _roles_avoiding_mate(vals, mask):
    """Pick x so that x ^ mask is not a terminal; y, z ascending."""
    mate = _find_mate(vals, mask)
    if mate is None:
        return tuple(sorted(vals))
    x = next(v for v in vals if v not in mate)
    rest = sorted(v for v in vals if v != x)
    return (x, rest[0], rest[1])


# -- shared assembly helpers -------------------------------------------


def _rev(p):
    return list(reversed(p))


def _fan_map(view, z, targets):
    """Fan paths keyed by target; a target equal to z maps to the trivial
    stub so degenerate attachments assemble uniformly."""
    want = [t for t in targets if t != z]
    if len(set(want)) != len(want):
        raise _CaseInfeasible("fan targets collide")
    got = {t: list(p) for t, p in fan(view, z, want).items()} if want else {}
    got[z] = [z]
    return got


def _split_qp(bundle, n_long, n_flex=0):
    """Partition a disjoint path bundle into attachment paths and backbones.

    Attachment paths lend their end edges to other members, so the first
    ``n_long`` need distinct neighbors at both ends (>= 4 vertices) and any
    flex slot needs at least one interior vertex.  Backbones are used whole
    and may have any shape.
    """
    paths = [list(p) for p in bundle]
    qs = []
    for p in paths:
        if len(qs) < n_long and len(p) >= 4:
            qs.append(p)
    if len(qs) < n_long:
        raise _CaseInfeasible("not enough long attachment paths")
    rest = [p for p in paths if p not in qs]
    flex = []
    for p in list(rest):
        if len(flex) == n_flex:
            break
        if len(p) >= 3:
            flex.append(p)
            rest.remove(p)
    if len(flex) < n_flex:
        raise _CaseInfeasible("not enough non-direct attachment paths")
    return qs, flex, rest


def _pack_pairs(view, pairs):
    segs = pack_segments(view, [(u, v, 1) for u, v in pairs],
                         budget=Budget(PACK_BUDGET))
    if segs is None:
        raise _CaseInfeasible("prescribed linkage infeasible")
    return [list(group[0]) for group in segs]


# -- dimension-4 base cases ---------------------------------------------

# one-quadrant family at the canonical position x=0000, y=0010, z=0001
_BASE_SAME_QUAD = (
    (2, 0, 1),
    (0, 3, 2, 1),
    (0, 4, 6, 2, 5, 1),
    (2, 10, 8, 0, 15, 14, 1),
)


def _base_one_quadrant(x, y, z):
    assert (x, y, z) == (0, 2, 1)
    return [list(p) for p in _BASE_SAME_QUAD]


def _base_pair_sibling(cube, x, y, z):
    # x, y in quadrant 00, z in quadrant 01
    h2w, c1w = 0b0100, 0b1111
    dia_xy = cube.diamond_view(0b00, 0b10)
    dia_z = cube.diamond_view(0b01, 0b11)
    bundle = disjoint_paths(dia_xy, x, y, 4)
    fanm = _fan_map(dia_z, z, [x ^ h2w, y ^ h2w, x ^ c1w, y ^ c1w])
    return [
        _rev(bundle[0]) + _rev(fanm[x ^ h2w]),
        list(bundle[1]) + _rev(fanm[y ^ h2w]),
        _rev(bundle[2]) + _rev(fanm[x ^ c1w]),
        list(bundle[3]) + _rev(fanm[y ^ c1w]),
    ]


def _base_cross_half_mated(cube, x, y, z):
    # y is x's whole-suffix mate across the sibling quadrants; z in half 1.
    # All eight half-0 vertices are named and wired explicitly.
    h1w, h2w = 0b1000, 0b0100
    x3 = x ^ 0b0011
    x1, x2 = sorted((x ^ 0b0010, x ^ 0b0001))
    y1, y2, y3 = x1 ^ h2w, x2 ^ h2w, x ^ h2w
    half1 = cube.half_view(1)
    fanm = _fan_map(half1, z, [x ^ h1w, y ^ h1w, x2 ^ h1w, y2 ^ h1w])
    return [
        [y, x] + _rev(fanm[x ^ h1w]),
        [x, x3, y] + _rev(fanm[y ^ h1w]),
        [y, y3, x, x2] + _rev(fanm[x2 ^ h1w]),
        [x, x1, y1, y, y2] + _rev(fanm[y2 ^ h1w]),
    ]


def _base_cross_half_generic(cube, x, y, z):
    h1w, c1w = 0b1000, 0b1111
    bundle = disjoint_paths(cube.half_view(0), x, y, 4)
    fanm = _fan_map(cube.half_view(1), z, [x ^ h1w, y ^ h1w, x ^ c1w, y ^ c1w])
    return [
        _rev(bundle[0]) + _rev(fanm[x ^ h1w]),
        list(bundle[1]) + _rev(fanm[y ^ h1w]),
        _rev(bundle[2]) + _rev(fanm[x ^ c1w]),
        list(bundle[3]) + _rev(fanm[y ^ c1w]),
    ]


# -- even induction step ------------------------------------------------


def _even_one_quadrant_mated(cube, x, y, z):
    # all three in quadrant 00 with y the whole-suffix mate of x
    n = cube.n
    h1w, h2w = 1 << (n - 1), 1 << (n - 2)
    c1w, c2w = (1 << n) - 1, (1 << (n - 1)) - 1
    sub = construct(n - 2, (x, y, z))
    a = z ^ (c1w ^ h2w)  # the one neighbor of z's complement inside quadrant 10
    ends = {x ^ h1w, y ^ h1w, z ^ h1w, a}
    if len(ends) != 4:
        raise _CaseInfeasible("quadrant-10 linkage endpoints collide")
    lk = linkage(cube.quadrant_view(0b10), [x ^ h1w, y ^ h1w], [z ^ h1w, a])
    dia = RestrictedView(cube.diamond_view(0b01, 0b11),
                         forbidden_vertices={x ^ h2w, y ^ h2w, z ^ c1w})
    lk2 = linkage(dia, [x ^ c1w, y ^ c1w], [z ^ c2w, z ^ h2w])
    px, py = list(lk2[x ^ c1w]), list(lk2[y ^ c1w])
    ph, phy = list(lk[x ^ h1w]), list(lk[y ^ h1w])
    psi_a = [y, x ^ h2w, x] + px + [z]
    psi_b = [x, y ^ h2w, y] + py + [z]
    if ph[-1] == z ^ h1w:
        psi_c = [x] + ph + [z, z ^ c1w] + _rev(phy) + [y]
    else:
        psi_c = [x] + ph + [z ^ c1w, z] + _rev(phy) + [y]
    return [list(p) for p in sub.paths] + [psi_a, psi_b, psi_c], sub.trace


def _even_one_quadrant_generic(cube, x, y, z):
    n = cube.n
    h1w, h2w = 1 << (n - 1), 1 << (n - 2)
    c1w, c2w = (1 << n) - 1, (1 << (n - 1)) - 1
    sub = construct(n - 2, (x, y, z))
    p1, p2, p3 = _pack_pairs(cube.quadrant_view(0b01),
                             [(x ^ h2w, z ^ h2w), (y ^ h2w, z ^ c2w),
                              (x ^ c2w, y ^ c2w)])
    q1, q2, q3 = _pack_pairs(cube.half_view(1),
                             [(x ^ h1w, z ^ h1w), (y ^ h1w, z ^ c1w),
                              (x ^ c1w, y ^ c1w)])
    psi_1 = [x] + p1 + [z] + _rev(p2) + [y]
    psi_2 = [y] + _rev(p3) + [x] + q1 + [z]
    psi_3 = [x] + q3 + [y] + q2 + [z]
    return [list(p) for p in sub.paths] + [psi_1, psi_2, psi_3], sub.trace


def _even_pair_sibling_mated(cube, x, y, z):
    # x, y in quadrant 00, z = the sibling image of x under the suffix mate
    n = cube.n
    h1w, h2w = 1 << (n - 1), 1 << (n - 2)
    c1w = (1 << n) - 1
    q00, q01 = cube.quadrant_view(0b00), cube.quadrant_view(0b01)
    bundle = disjoint_paths(q00, x, y, 2 * n - 5)
    longs = [list(p) for p in bundle if len(p) >= 4]
    # a pair with four shared neighbors forces five short bundle members, in
    # which case one mid-band path is rerouted through x's own sibling image
    # (otherwise unused) and tolerates a one-interior attachment on y's side
    if len(longs) >= n - 3:
        qs, _, ps = _split_qp(bundle, n - 3)
        half_q = None
    elif len(longs) == n - 4:
        qs, flex, ps = _split_qp(bundle, n - 4, n_flex=1)
        half_q = flex[0]
    else:
        raise _CaseInfeasible("not enough attachment paths")
    xi = [q[1] for q in qs]
    yi = [q[-2] for q in qs]
    targets = [w ^ h2w for w in xi] + [w ^ h2w for w in yi] + [y ^ h2w]
    if half_q is not None:
        targets += [x ^ h2w, half_q[-2] ^ h2w]
    fanm = _fan_map(q01, z, targets)
    k = n // 2 - 2
    paths = []
    for i in range(k):
        paths.append(_rev(ps[i]) + [xi[i]] + _rev(fanm[xi[i] ^ h2w]))
    for i in range(k):
        paths.append(list(ps[k + i]) + [yi[i]] + _rev(fanm[yi[i] ^ h2w]))
    for i in range(k, len(qs)):
        paths.append([x, xi[i]] + _rev(fanm[xi[i] ^ h2w])
                     + fanm[yi[i] ^ h2w][1:] + [yi[i], y])
    if half_q is not None:
        w = half_q[-2]
        paths.append([x] + _rev(fanm[x ^ h2w]) + fanm[w ^ h2w][1:] + [w, y])
    paths.append([x] + fanm[y ^ h2w] + [y])        # x-z edge, fan back to y
    paths.append(_rev(ps[2 * k]) + [x ^ h1w, z])   # z's complement is x^h
    paths.append(_rev(ps[2 * k + 1]) + [x ^ c1w, z])
    return paths


def _even_pair_sibling_generic(cube, x, y, z):
    n = cube.n
    h1w, h2w = 1 << (n - 1), 1 << (n - 2)
    c1w = (1 << n) - 1
    q00, q01 = cube.quadrant_view(0b00), cube.quadrant_view(0b01)
    bundle = disjoint_paths(q00, x, y, 2 * n - 5)
    qs, flex, ps = _split_qp(bundle, n - 4, n_flex=1)
    qs = qs + flex
    xi = [q[1] for q in qs]
    yi = [q[-2] for q in qs[:n - 4]]
    fanm = _fan_map(q01, z, [w ^ h2w for w in xi] + [w ^ h2w for w in yi]
                    + [x ^ h2w, y ^ h2w])
    l1, l2, l3 = _pack_pairs(cube.half_view(1),
                             [(x ^ h1w, z ^ c1w), (x ^ c1w, y ^ h1w),
                              (y ^ c1w, z ^ h1w)])
    k = n // 2 - 2
    paths = []
    for i in range(k):
        paths.append(_rev(ps[i]) + [xi[i]] + _rev(fanm[xi[i] ^ h2w]))
    for i in range(k):
        paths.append(list(ps[k + i]) + [yi[i]] + _rev(fanm[yi[i] ^ h2w]))
    for i in range(k, n - 4):
        paths.append([x, xi[i]] + _rev(fanm[xi[i] ^ h2w])
                     + fanm[yi[i] ^ h2w][1:] + [yi[i], y])
    paths.append([x] + _rev(fanm[x ^ h2w]) + fanm[y ^ h2w][1:] + [y])
    paths.append(_rev(ps[2 * k]) + [xi[n - 4]] + _rev(fanm[xi[n - 4] ^ h2w]))
    paths.append(_rev(ps[2 * k + 1]) + l1 + [z])
    paths.append([x] + l2 + [y] + l3 + [z])
    return paths


def _even_cross_half(cube, x, y, z):
    n = cube.n
    h1w = 1 << (n - 1)
    half0, half1 = cube.half_view(0), cube.half_view(1)
    bundle = disjoint_paths(half0, x, y, 2 * n - 3)
    qs, flex, ps = _split_qp(bundle, n - 3, n_flex=1)
    qs = qs + flex
    xi = [q[1] for q in qs]
    yi = [q[-2] for q in qs[:n - 3]]
    fanm = _fan_map(half1, z, [w ^ h1w for w in xi] + [w ^ h1w for w in yi]
                    + [x ^ h1w, y ^ h1w])
    k = n // 2 - 2
    paths = []
    for i in range(k):
        paths.append(_rev(ps[i]) + [xi[i]] + _rev(fanm[xi[i] ^ h1w]))
    for i in range(k):
        paths.append(list(ps[k + i]) + [yi[i]] + _rev(fanm[yi[i] ^ h1w]))
    for i in range(k, n - 3):
        paths.append([x, xi[i]] + _rev(fanm[xi[i] ^ h1w])
                     + fanm[yi[i] ^ h1w][1:] + [yi[i], y])
    paths.append(_rev(ps[2 * k]) + [xi[n - 3]] + _rev(fanm[xi[n - 3] ^ h1w]))
    paths.append(_rev(ps[2 * k + 1]) + _rev(fanm[x ^ h1w]))
    paths.append(list(ps[2 * k + 2]) + _rev(fanm[y ^ h1w]))
    return paths


# -- odd induction step --------------------------------------------------


def _odd_same_half(cube, x, y, z):
    n = cube.n
    h1w, c1w = 1 << (n - 1), (1 << n) - 1
    sub = construct(n - 1, (x, y, z))
    side_a = [x ^ h1w, x ^ c1w]
    side_b = [y ^ h1w, z ^ h1w]
    if set(side_a) & set(side_b):
        raise _CaseInfeasible("cross-half linkage endpoints collide")
    lk = linkage(cube.half_view(1), side_a, side_b)
    ph, pc = list(lk[x ^ h1w]), list(lk[x ^ c1w])
    if ph[-1] == y ^ h1w:
        psi = [y] + _rev(ph) + [x] + pc + [z]
    else:
        psi = [y] + _rev(pc) + [x] + ph + [z]
    return [list(p) for p in sub.paths] + [psi], sub.trace


def _odd_cross_half(cube, x, y, z):
    n = cube.n
    h1w = 1 << (n - 1)
    half0, half1 = cube.half_view(0), cube.half_view(1)
    bundle = disjoint_paths(half0, x, y, 2 * n - 3)
    qs, _, rest = _split_qp(bundle, n - 3)
    ps = rest[:n - 1]  # one bundle member is deliberately spare
    xi = [q[1] for q in qs]
    yi = [q[-2] for q in qs]
    fanm = _fan_map(half1, z, [w ^ h1w for w in xi] + [w ^ h1w for w in yi]
                    + [x ^ h1w, y ^ h1w])
    k = (n - 1) // 2
    paths = []
    for i in range(k):
        paths.append(_rev(ps[i]) + [xi[i]] + _rev(fanm[xi[i] ^ h1w]))
    for i in range(k):
        paths.append(list(ps[k + i]) + [yi[i]] + _rev(fanm[yi[i] ^ h1w]))
    for i in range(k, n - 3):
        paths.append([x, xi[i]] + _rev(fanm[xi[i] ^ h1w])
                     + fanm[yi[i] ^ h1w][1:] + [yi[i], y])
    paths.append([x] + _rev(fanm[x ^ h1w]) + fanm[y ^ h1w][1:] + [y])
    return paths


# -- fallback ------------------------------------------------------------


def _fallback_family(cube, trip):
    """Direct profile-packing search for the guaranteed count on the whole
    cube; used only when a case transcription fails, and always flagged."""
    m = target_count(cube.n)
    x, y, z = sorted(trip)
    degs = tuple(len(cube.neighbors(t)) for t in (x, y, z))
    tracker = Budget(50 * PACK_BUDGET)
    for profile in _profiles(m, tuple(d - m for d in degs)):
        a, b, c = profile
        demands = [(x, y, a + b), (y, z, b + c), (x, z, a + c)]
        segs = pack_segments(cube, demands, budget=tracker)
        if segs is not None:
            return [list(p) for p in _assemble(profile, segs)]
    raise ConstructionError(f"no direct packing of size {m} found for {trip}")
