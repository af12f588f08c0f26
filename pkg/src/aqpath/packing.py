"""Exact packing of interior-disjoint terminal-to-terminal segments.

A *segment* joins two prescribed terminals; its interior uses only free
vertices (no terminal of any pair, nothing forbidden), interiors are
pairwise disjoint across the whole packing, and segments between the same
pair may include the direct edge at most once.  This engine decides the
pair demands a split profile induces (the exact D-path oracle) and the
prescribed multi-pair linkages of the constructor.

Feasibility is decided exactly, in three stages:

1. arithmetic slot counts at each terminal;
2. single-commodity flow relaxations (sources at first endpoints, sinks at
   second endpoints, unit capacities on free vertices).  A value below the
   total demand refutes the packing outright.  When the integral flow
   decomposes into unit paths whose endpoints match the demands exactly,
   that decomposition *is* a packing.  The relaxation is not tight only
   when a terminal acts as both source and sink, so for three-terminal
   demands all three orientations are tried;
3. otherwise a branch-and-bound over segments.  Once every demand but a
   single-source remainder is committed, that remainder is itself a flow
   problem the relaxation answers exactly (one source cannot loop back to
   itself), so the search only branches over the smallest demand: its
   segment sets are enumerated shortest-first (then lexicographically) in
   strictly increasing order so no packing is visited twice, pruned by
   reachability, by interior budgets, and by the flow relaxation after
   every commitment, and every branch ends in an exact flow.

The search is budgeted; exhausting the budget raises, it never degrades
to an approximation.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Sequence

from .flow import SNK, SRC, UnitFlowNet, _in, _out, node_path_to_vertices


class SearchBudgetExceeded(RuntimeError):
    """The packing search hit its node budget before reaching a verdict."""


class Budget:
    def __init__(self, limit: int | None):
        self.limit = limit
        self.used = 0

    def tick(self, cost: int = 1) -> None:
        self.used += cost
        if self.limit is not None and self.used > self.limit:
            raise SearchBudgetExceeded(f"search budget {self.limit} exhausted")


Demand = tuple[int, int, int]  # (u, v, count)
Segment = tuple[int, ...]


def pack_segments(view, demands: Sequence[Demand], forbidden: Iterable[int] = (),
                  budget: Budget | None = None) -> list[list[Segment]] | None:
    """Segments satisfying every demand, grouped per demand, or None.

    The answer is exact: None means no packing exists.
    """
    if budget is None:
        budget = Budget(None)
    demands = [(u, v, c) for (u, v, c) in demands]
    terminals: set[int] = set()
    for u, v, c in demands:
        if u == v:
            raise ValueError("segment endpoints must differ")
        if c < 0:
            raise ValueError("negative demand")
        terminals.add(u)
        terminals.add(v)
    for t in terminals:
        if t not in view:
            raise ValueError(f"terminal {t} not in view")
    live = [(u, v, c) for (u, v, c) in demands if c > 0]
    if not live:
        return [[] for _ in demands]

    free = {w for w in view.vertices() if w not in terminals} - set(forbidden)

    # per-terminal slot counts: segments at t need that many distinct edges
    for t in terminals:
        need = sum(c for (u, v, c) in live if t in (u, v))
        avail = sum(1 for w in view.neighbors(t) if w in free or w in terminals)
        if need > avail:
            return None

    budget.tick()
    total = sum(c for (_, _, c) in live)
    for oriented in _orientations(live):
        net = _relax_net(view, oriented, free)
        if net.max_flow(limit=total) < total:
            return None
        segs = _classify(net, oriented)
        if segs is not None:
            return _regroup(demands, oriented, segs)

    found = _dfs_pack(view, live, free, budget)
    if found is None:
        return None
    return _regroup(demands, [d for d, _ in found], [s for _, s in found])


def _orientations(live: Sequence[Demand]) -> list[list[Demand]]:
    """Orientation variants.  For three demands on three terminals, each
    variant leaves a different terminal with the source+sink double role
    (the only source of slack in the relaxation)."""
    terms = sorted({t for (u, v, _) in live for t in (u, v)})
    if len(live) == 3 and len(terms) == 3:
        by_pair = {frozenset((u, v)): c for (u, v, c) in live}
        x, y, z = terms
        want = {frozenset((x, y)), frozenset((y, z)), frozenset((x, z))}
        if set(by_pair) == want:
            cxy = by_pair[frozenset((x, y))]
            cyz = by_pair[frozenset((y, z))]
            cxz = by_pair[frozenset((x, z))]
            return [
                [(x, y, cxy), (y, z, cyz), (x, z, cxz)],  # y double-role
                [(y, x, cxy), (x, z, cxz), (y, z, cyz)],  # x double-role
                [(x, y, cxy), (z, y, cyz), (x, z, cxz)],  # z double-role
            ]
    if len(live) == 2:
        (u1, v1, c1), (u2, v2, c2) = live
        shared = {u1, v1} & {u2, v2}
        if len(shared) == 1:
            # orient both demands into the shared terminal: one pure sink,
            # two pure sources, so this single variant is already exact
            s = next(iter(shared))
            o1 = (u1, v1, c1) if v1 == s else (v1, u1, c1)
            o2 = (u2, v2, c2) if v2 == s else (v2, u2, c2)
            return [[o1, o2]]
    return [list(live)]


def _regroup(demands, oriented, live_segs):
    """Map per-oriented-pair segments back onto the caller's demand list."""
    found: dict[frozenset[int], list[Segment]] = {}
    for (u, v, _), segs in zip(oriented, live_segs):
        found[frozenset((u, v))] = segs
    out: list[list[Segment]] = []
    for u, v, c in demands:
        if c == 0:
            out.append([])
            continue
        segs = found[frozenset((u, v))]
        fixed = [s if s[0] == u else tuple(reversed(s)) for s in segs]
        out.append(sorted(fixed))
    return out


def _relax_net(view, demands: Sequence[Demand], free: set[int]) -> UnitFlowNet:
    sources: dict[int, int] = {}
    sinks: dict[int, int] = {}
    for u, v, c in demands:
        sources[u] = sources.get(u, 0) + c
        sinks[v] = sinks.get(v, 0) + c
    net = UnitFlowNet()
    for s, c in sorted(sources.items()):
        net.add_arc(SRC, _out(s), c)
    for t, c in sorted(sinks.items()):
        net.add_arc(_in(t), SNK, c)
    for w in sorted(free):
        net.add_arc(_in(w), _out(w), 1)
    for v in view.vertices():
        if v in free or v in sources:
            for w in view.neighbors(v):
                if w in free or w in sinks:
                    net.add_arc(_out(v), _in(w), 1)
    return net


def _relax_feasible(view, demands: Sequence[Demand], free: set[int]) -> bool:
    live = [d for d in demands if d[2] > 0]
    if not live:
        return True
    total = sum(c for (_, _, c) in live)
    return _relax_net(view, live, free).max_flow(limit=total) == total


def _classify(net: UnitFlowNet, demands: Sequence[Demand]):
    """Turn a saturating flow into per-demand segments, or None if any unit
    loops back to its own source terminal or pairs endpoints no demand
    names (possible only through double roles or between distinct pairs)."""
    want = {(u, v): c for (u, v, c) in demands}
    got: dict[tuple[int, int], list[Segment]] = {p: [] for p in want}
    for node_path in net.unit_paths():
        seg = node_path_to_vertices(node_path)
        key = (seg[0], seg[-1])
        if key not in want:
            return None
        got[key].append(seg)
    if any(len(got[p]) != want[p] for p in want):
        return None
    return [got[(u, v)] for (u, v, _) in demands]


# -- exhaustive branch and bound ----------------------------------------


def _dist_through(view, target: int, free: set[int]) -> dict[int, int]:
    """Hop counts to ``target`` where every intermediate vertex is free."""
    dist = {target: 0}
    queue = deque([target])
    while queue:
        w = queue.popleft()
        for nxt in view.neighbors(w):
            if nxt not in dist:
                dist[nxt] = dist[w] + 1
                if nxt in free:
                    queue.append(nxt)
    return dist


def _seg_key(seg: Segment) -> tuple[int, Segment]:
    return (len(seg), seg)


def _enum_segments(view, u: int, v: int, free: set[int], max_interior: int,
                   floor: Segment | None):
    """u->v segments with interiors in ``free``, shortest first and within a
    length lexicographically, strictly above ``floor`` in that same order."""
    dist = _dist_through(view, v, free)
    if u not in dist:
        return
    floor_key = _seg_key(floor) if floor is not None else None
    top = min(max_interior + 2, len(free) + 2)  # vertices on the segment
    path = [u]
    used: set[int] = set()

    def exact(length: int):
        cur = path[-1]
        room = length - len(path)  # edges still to place after this hop
        for w in view.neighbors(cur):
            if w == v:
                if room == 0:
                    yield (*path, v)
            elif room > 0 and w in free and w not in used and dist.get(w, top) <= room:
                path.append(w)
                used.add(w)
                yield from exact(length)
                path.pop()
                used.discard(w)

    start = max(dist[u], 1)
    if floor_key is not None:
        start = max(start, floor_key[0] - 1)
    for length in range(start, top):
        for seg in exact(length):
            if floor_key is None or _seg_key(seg) > floor_key:
                yield seg


def _split_for_search(live: Sequence[Demand]):
    """Reorder demands into (branch part, single-source leaf part).

    For three demands on three terminals the smallest demand (u, v) is
    branched and the other two are re-oriented out of the third terminal,
    leaving a single-source leaf.  Otherwise everything but the final
    demand is branched.
    """
    terms = sorted({t for (u, v, _) in live for t in (u, v)})
    if len(live) == 3 and len(terms) == 3:
        by_pair = {frozenset((u, v)): c for (u, v, c) in live}
        x, y, z = terms
        want = {frozenset((x, y)), frozenset((y, z)), frozenset((x, z))}
        if set(by_pair) == want:
            pairs = sorted(((c, (u, v)) for fs, c in by_pair.items()
                            for (u, v) in [tuple(sorted(fs))]))
            c_uv, (u, v) = pairs[0]
            w = next(t for t in terms if t not in (u, v))
            c_wu = by_pair[frozenset((w, u))]
            c_wv = by_pair[frozenset((w, v))]
            return [(u, v, c_uv)], [(w, u, c_wu), (w, v, c_wv)]
    return list(live[:-1]), [live[-1]]


def _leaf_solve(view, leaf: Sequence[Demand], free: set[int]):
    """Exact decision for single-source demands: the relaxation cannot loop
    a unit back into its source, and saturation forces the sink split."""
    total = sum(c for (_, _, c) in leaf)
    if total == 0:
        return [[] for _ in leaf]
    net = _relax_net(view, leaf, free)
    if net.max_flow(limit=total) < total:
        return None
    return _classify(net, leaf)


def _leaf_spare_vertices(view, leaf: Sequence[Demand], free: set[int]) -> set[int]:
    """Free vertices whose individual removal keeps the leaf feasible.

    Leaf feasibility is monotone in the free set, so a branch segment may
    never route through a vertex outside this set; jointly critical
    combinations are still caught by the per-commitment leaf check.
    """
    total = sum(c for (_, _, c) in leaf)
    spare: set[int] = set()
    for w in free:
        rest = free - {w}
        if _relax_net(view, leaf, rest).max_flow(limit=total) == total:
            spare.add(w)
    return spare


def _dfs_pack(view, demands: Sequence[Demand], free: set[int], budget: Budget):
    """Complete search; segments of a branched pair are committed in strictly
    increasing (length, sequence) order, so no packing is seen twice."""
    branch, leaf = _split_for_search(demands)
    chosen: list[list[Segment]] = [[] for _ in branch]
    leaf_found: list[list[Segment]] = []
    free_set = set(free)

    def remaining(skip_current: int | None = None) -> list[Demand]:
        out = []
        for i, (u, v, c) in enumerate(branch):
            left = c - len(chosen[i]) - (1 if i == skip_current else 0)
            out.append((u, v, left))
        out.extend(leaf)
        return out

    def interior_budget(di: int) -> int:
        spare = len(free_set)
        for u, v, left in remaining(skip_current=di):
            if left <= 0:
                continue
            dist = _dist_through(view, v, free_set)
            shortest = dist.get(u)
            if shortest is None:
                return -1
            spare -= left * max(0, shortest - 1)
        return spare

    def rec(di: int) -> bool:
        if di == len(branch):
            solved = _leaf_solve(view, leaf, free_set)
            if solved is None:
                return False
            leaf_found.extend(solved)
            return True
        u, v, need = branch[di]
        if len(chosen[di]) == need:
            return rec(di + 1)
        cap = interior_budget(di)
        if cap < 0:
            return False
        floor = chosen[di][-1] if chosen[di] else None
        roam = _leaf_spare_vertices(view, leaf, free_set)
        for seg in _enum_segments(view, u, v, roam, cap, floor):
            budget.tick()
            interior = seg[1:-1]
            free_set.difference_update(interior)
            chosen[di].append(seg)
            # the leaf alone is an exact, junk-free necessary condition and
            # prunes far harder than the joint relaxation
            if (_leaf_solve(view, leaf, free_set) is not None
                    and _relax_feasible(view, remaining(), free_set)
                    and rec(di)):
                return True
            chosen[di].pop()
            free_set.update(interior)
        return False

    if not rec(0):
        return None
    groups = list(zip(branch, chosen)) + list(zip(leaf, leaf_found))
    return groups
