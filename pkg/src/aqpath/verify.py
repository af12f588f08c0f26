"""Independent referee for families of three-terminal paths.

Accepts a family iff every member is a simple path of the view, every
member visits all three terminals, the pairwise vertex intersections are
exactly the terminal set, and no edge is used twice.  Uses only adjacency
queries and set arithmetic -- no flow and no constructor code -- so it can
referee both sides.
"""

from __future__ import annotations

import dataclasses
from enum import Enum
from typing import Sequence


class ViolationKind(Enum):
    NOT_A_PATH = "NotAPath"
    NOT_SIMPLE = "NotSimple"
    MISSING_TERMINAL = "MissingTerminal"
    VERTEX_OVERLAP = "VertexOverlap"
    EDGE_OVERLAP = "EdgeOverlap"
    WRONG_GRAPH = "WrongGraph"


@dataclasses.dataclass(frozen=True)
class Violation:
    kind: ViolationKind
    detail: str
    paths: tuple[int, ...] = ()

    def __str__(self) -> str:
        where = f" paths={list(self.paths)}" if self.paths else ""
        return f"{self.kind.value}: {self.detail}{where}"


def check_path(view, path: Sequence[int]) -> Violation | None:
    """Simplicity and adjacency only; None means the path stands."""
    if len(path) == 0:
        return Violation(ViolationKind.NOT_A_PATH, "empty vertex sequence")
    for v in path:
        if v not in view:
            return Violation(ViolationKind.WRONG_GRAPH, f"vertex {v} not in view")
    if len(set(path)) != len(path):
        seen: set[int] = set()
        for v in path:
            if v in seen:
                return Violation(ViolationKind.NOT_SIMPLE, f"vertex {v} repeats")
            seen.add(v)
    for a, b in zip(path, path[1:]):
        if not view.is_adjacent(a, b):
            return Violation(ViolationKind.NOT_A_PATH, f"{a} and {b} not adjacent")
    return None


def check_family(view, terminals: Sequence[int],
                 paths: Sequence[Sequence[int]]) -> Violation | None:
    """Full family check; None means Accept(len(paths))."""
    D = set(terminals)
    for t in D:
        if t not in view:
            return Violation(ViolationKind.WRONG_GRAPH, f"terminal {t} not in view")
    for i, p in enumerate(paths):
        bad = check_path(view, p)
        if bad is not None:
            return dataclasses.replace(bad, paths=(i,))
    for i, p in enumerate(paths):
        missing = D - set(p)
        if missing:
            return Violation(ViolationKind.MISSING_TERMINAL,
                             f"terminal {min(missing)} absent", (i,))
    interiors = [set(p) - D for p in paths]
    edge_sets = [{frozenset(e) for e in zip(p, p[1:])} for p in paths]
    for i in range(len(paths)):
        for j in range(i + 1, len(paths)):
            shared = interiors[i] & interiors[j]
            if shared:
                return Violation(ViolationKind.VERTEX_OVERLAP,
                                 f"vertex {min(shared)} shared", (i, j))
            shared_e = edge_sets[i] & edge_sets[j]
            if shared_e:
                e = min(tuple(sorted(fe)) for fe in shared_e)
                return Violation(ViolationKind.EDGE_OVERLAP,
                                 f"edge {e[0]}-{e[1]} shared", (i, j))
    return None
