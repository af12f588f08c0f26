"""Unit-vertex-capacity flow over graph views.

One engine serves all the path-system operations: internally disjoint
path bundles between two vertices, fans from a vertex onto a set, and
linkages between two equal-size sets.  Each vertex of the view is split
into an in-node and an out-node joined by a capacity-1 arc; endpoints
get source/sink arcs instead of a through arc, so fan targets and
linkage endpoints can never be crossed as interiors.

Augmentation is breadth-first with neighbors scanned in ascending vertex
order, so identical inputs always produce identical path systems.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Sequence

SRC = -1
SNK = -2


class Insufficient(RuntimeError):
    """A view cannot supply the requested number of disjoint paths."""

    def __init__(self, achieved: int, required: int, what: str = "paths"):
        super().__init__(f"only {achieved} of {required} {what} achievable")
        self.achieved = achieved
        self.required = required


def _in(v: int) -> int:
    return 2 * v


def _out(v: int) -> int:
    return 2 * v + 1


class UnitFlowNet:
    """Residual network with integer capacities and unit-path decomposition."""

    def __init__(self) -> None:
        self.cap: dict[int, dict[int, int]] = {}
        self.flow: dict[int, dict[int, int]] = {}

    def add_arc(self, u: int, v: int, c: int) -> None:
        row = self.cap.setdefault(u, {})
        row[v] = row.get(v, 0) + c
        self.cap.setdefault(v, {}).setdefault(u, 0)
        self.flow.setdefault(u, {}).setdefault(v, 0)
        self.flow.setdefault(v, {}).setdefault(u, 0)

    def _augment_once(self) -> int:
        parent: dict[int, int] = {SRC: SRC}
        queue = deque([SRC])
        while queue:
            u = queue.popleft()
            if u == SNK:
                break
            for v in sorted(self.cap.get(u, ())):
                if v not in parent and self.cap[u][v] > 0:
                    parent[v] = u
                    queue.append(v)
        if SNK not in parent:
            return 0
        # bottleneck
        push = None
        v = SNK
        while v != SRC:
            u = parent[v]
            push = self.cap[u][v] if push is None else min(push, self.cap[u][v])
            v = u
        v = SNK
        while v != SRC:
            u = parent[v]
            self.cap[u][v] -= push
            self.cap[v][u] += push
            self.flow[u][v] += push
            self.flow[v][u] -= push
            v = u
        return push

    def max_flow(self, limit: int | None = None) -> int:
        total = 0
        while limit is None or total < limit:
            pushed = self._augment_once()
            if pushed == 0:
                break
            total += pushed
            if limit is not None and total > limit:
                raise AssertionError("overshot augmentation limit")
        return total

    def unit_paths(self) -> list[list[int]]:
        """Decompose the current flow into unit source-to-sink node paths."""
        out: list[list[int]] = []
        use = {u: {v: f for v, f in row.items() if f > 0}
               for u, row in self.flow.items()}
        while True:
            row = use.get(SRC, {})
            start = min((v for v, f in row.items() if f > 0), default=None)
            if start is None:
                break
            node_path = [SRC]
            cur = SRC
            while cur != SNK:
                nxt = min(v for v, f in use[cur].items() if f > 0)
                use[cur][nxt] -= 1
                node_path.append(nxt)
                cur = nxt
            out.append(node_path)
        return out


def build_net(view, sources: dict[int, int], sinks: dict[int, int]) -> UnitFlowNet:
    """Split-vertex network over a view.

    ``sources``/``sinks`` give per-terminal capacities.  A terminal carries
    no through arc, so no path may cross it; a vertex may appear on both
    sides (it then has both roles but still cannot be an interior).
    """
    net = UnitFlowNet()
    terminal = set(sources) | set(sinks)
    for s, c in sorted(sources.items()):
        net.add_arc(SRC, _out(s), c)
    for t, c in sorted(sinks.items()):
        net.add_arc(_in(t), SNK, c)
    for v in view.vertices():
        if v not in terminal:
            net.add_arc(_in(v), _out(v), 1)
        for w in view.neighbors(v):
            tail_ok = v not in terminal or v in sources
            head_ok = w not in terminal or w in sinks
            if tail_ok and head_ok:
                net.add_arc(_out(v), _in(w), 1)
    return net


def node_path_to_vertices(node_path: Sequence[int]) -> tuple[int, ...]:
    """SRC -> a_out -> (w_in w_out)* -> t_in -> SNK becomes a vertex tuple."""
    verts = [node_path[1] // 2]
    for node in node_path[2:-1]:
        if node % 2 == 0:  # in-node
            verts.append(node // 2)
    return tuple(verts)


def _check_pair(view, u: int, v: int) -> None:
    if u == v:
        raise ValueError("endpoints must differ")
    for t in (u, v):
        if t not in view:
            raise ValueError(f"vertex {t} not in view")


def disjoint_paths(view, u: int, v: int, k: int) -> list[tuple[int, ...]]:
    """Exactly k internally disjoint u-v paths, or Insufficient with the max.

    The direct edge, when present, counts as one path.
    """
    _check_pair(view, u, v)
    if k < 1:
        raise ValueError("k must be positive")
    cap = max(len(view.neighbors(u)), len(view.neighbors(v)), k)
    net = build_net(view, {u: cap}, {v: cap})
    got = net.max_flow(limit=k)
    if got < k:
        got += net.max_flow()  # keep going to report the true maximum
        raise Insufficient(got, k)
    return [node_path_to_vertices(p) for p in net.unit_paths()]


def min_vertex_cut(view, u: int, v: int) -> int:
    """Maximum internally disjoint u-v path count (= cut size when u !~ v;
    for adjacent pairs this is the usual delete-edge cut plus one)."""
    _check_pair(view, u, v)
    cap = max(len(view.neighbors(u)), len(view.neighbors(v)), 1)
    net = build_net(view, {u: cap}, {v: cap})
    return net.max_flow()


def connectivity(view) -> int:
    """Exact vertex connectivity by flooding a dominating pair set."""
    verts = sorted(view.vertices())
    if len(verts) < 2:
        return 0
    best = min(len(view.neighbors(v)) for v in verts)
    u0 = verts[0]
    probes = [u0, *view.neighbors(u0)]
    for u in probes:
        closed = {u, *view.neighbors(u)}
        for v in verts:
            if v not in closed:
                best = min(best, min_vertex_cut(view, u, v))
    return best


def fan(view, x: int, targets: Iterable[int]) -> dict[int, tuple[int, ...]]:
    """Paths from x to every target, pairwise sharing only x, interiors
    avoiding the target set.  Keyed by target."""
    S = sorted(set(targets))
    if not S:
        raise ValueError("empty target set")
    if x in S:
        raise ValueError("source may not be a target")
    if x not in view:
        raise ValueError(f"vertex {x} not in view")
    net = build_net(view, {x: len(S)}, {t: 1 for t in S})
    got = net.max_flow(limit=len(S))
    if got < len(S):
        raise Insufficient(got, len(S), "fan paths")
    out: dict[int, tuple[int, ...]] = {}
    for node_path in net.unit_paths():
        p = node_path_to_vertices(node_path)
        out[p[-1]] = p
    return out


def linkage(view, side_a: Iterable[int], side_b: Iterable[int]) -> dict[int, tuple[int, ...]]:
    """Fully vertex-disjoint paths pairing A with B (pairing chosen by the
    flow, not the caller).  Keyed by the A endpoint."""
    A = sorted(set(side_a))
    B = sorted(set(side_b))
    if len(A) != len(B) or not A:
        raise ValueError("sides must be nonempty and equal-sized")
    if set(A) & set(B):
        raise ValueError("sides must be disjoint")
    for t in A + B:
        if t not in view:
            raise ValueError(f"vertex {t} not in view")
    net = build_net(view, {a: 1 for a in A}, {b: 1 for b in B})
    got = net.max_flow(limit=len(A))
    if got < len(A):
        raise Insufficient(got, len(A), "linkage paths")
    out: dict[int, tuple[int, ...]] = {}
    for node_path in net.unit_paths():
        p = node_path_to_vertices(node_path)
        out[p[0]] = p
    return out
