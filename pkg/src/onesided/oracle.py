"""Brute-force reference constructions.

Nothing in here uses the parent/children formulas of the tree module. The
tree is regrown from the raw predicates (one-sided, primitive, meridian below
longitude, determinant +-2, longitude increasing) by scanning every candidate
slope, and the fast-path results are compared against that.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from math import gcd

import numpy as np


def admissible(l: int, m: int) -> bool:
    if (l, m) == (0, 1):
        return True
    return l > 0 and l % 2 == 0 and 0 < m < l and m % 2 == 1 and gcd(l, m) == 1


def one_sided_pool(longitude_bound: int, meridian_bound: int | None = None):
    """Primitive one-sided first-quadrant slopes, as ``(L, M)`` int64 arrays.

    With ``meridian_bound`` unset only tree slopes (``M < L``) are listed;
    otherwise every odd ``M <= meridian_bound`` is, which includes the
    twisted slopes ``M > L``.
    """
    ls, ms = [0], [1]
    for l in range(2, longitude_bound + 1, 2):
        top = l - 1 if meridian_bound is None else meridian_bound
        for m in range(1, top + 1, 2):
            if gcd(l, m) == 1:
                ls.append(l)
                ms.append(m)
    return np.array(ls, dtype=np.int64), np.array(ms, dtype=np.int64)


@dataclass
class BFSTree:
    bound: int
    depth: dict = field(default_factory=dict)
    parent: dict = field(default_factory=dict)
    duplicates: list = field(default_factory=list)

    def path(self, v):
        out = [v]
        while self.parent[v] is not None:
            v = self.parent[v]
            out.append(v)
        return out


def bfs_tree(longitude_bound: int) -> BFSTree:
    """Grow the tree from ``(0,1)`` by scanning all admissible slopes."""
    if longitude_bound < 2:
        raise ValueError("longitude bound must be at least 2")
    ls, ms = one_sided_pool(longitude_bound)
    out = BFSTree(longitude_bound)
    out.depth[(0, 1)] = 0
    out.parent[(0, 1)] = None
    queue = deque([(0, 1)])
    while queue:
        l, m = queue.popleft()
        hit = (ls > l) & (np.abs(l * ms - ls * m) == 2)
        for w in zip(ls[hit].tolist(), ms[hit].tolist()):
            if w in out.depth:
                out.duplicates.append((w, (l, m)))
                continue
            out.depth[w] = out.depth[(l, m)] + 1
            out.parent[w] = (l, m)
            queue.append(w)
    return out


def brute_children(v, longitude_bound: int) -> list[tuple[int, int]]:
    l, m = v
    ls, ms = one_sided_pool(longitude_bound)
    hit = (ls > l) & (np.abs(l * ms - ls * m) == 2)
    out = [w for w in zip(ls[hit].tolist(), ms[hit].tolist()) if admissible(*w)]
    return sorted(out)


def parent_candidates(v, admissible_only: bool = True) -> list[tuple[int, int]]:
    """Every one-sided slope of smaller longitude meeting ``v`` twice.

    Scans meridians up to ``M + L``, which covers all solutions.
    """
    l, m = v
    found = [(0, 1)] if l == 2 else []
    for l2 in range(2, l, 2):
        for m2 in range(1, m + l + 1, 2):
            if gcd(l2, m2) == 1 and abs(l * m2 - l2 * m) == 2:
                found.append((l2, m2))
    if admissible_only:
        found = [w for w in found if admissible(*w)]
    return found


@dataclass
class Report:
    name: str
    checked: int = 0
    violations: list = field(default_factory=list)
    notes: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations

    def summary(self) -> str:
        status = "ok" if self.ok else f"{len(self.violations)} violation(s)"
        extra = "".join(f", {k}={v}" for k, v in self.notes.items())
        return f"{self.name}: checked {self.checked}, {status}{extra}"

    def to_dict(self) -> dict:
        d = {"checked": self.checked, "violations": self.violations}
        d.update(self.notes)
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def verify_parent_unique(longitude_bound: int) -> Report:
    """Count smaller-longitude neighbours at |det| = 2, exhaustively.

    The scan window is every primitive one-sided slope with longitude and
    meridian at most the bound. Tree slopes must have exactly one such
    neighbour and it must be admissible. Twisted slopes (``M > L``) are
    tallied separately: each has one candidate too, but their descending
    chain ends at an excluded ``(2, b)``, ``b >= 3``.
    """
    rep = Report("parent uniqueness")
    ls, ms = one_sided_pool(longitude_bound, meridian_bound=longitude_bound)
    twisted = 0
    for l, m in zip(ls.tolist(), ms.tolist()):
        if l < 4:
            continue
        hit = (ls < l) & (np.abs(l * ms - ls * m) == 2)
        cands = list(zip(ls[hit].tolist(), ms[hit].tolist()))
        if admissible(l, m):
            rep.checked += 1
            if len(cands) != 1 or not admissible(*cands[0]):
                rep.violations.append({"vertex": [l, m], "candidates": [list(c) for c in cands]})
        else:
            twisted += 1
            if len(cands) != 1 or admissible(*cands[0]):
                rep.violations.append({"vertex": [l, m], "twisted": True,
                                       "candidates": [list(c) for c in cands]})
    rep.notes["excluded"] = twisted
    return rep


def verify_ratio_claim(longitude_bound: int, tree=None) -> Report:
    """Path through (4,1) iff L > 3M, for every vertex of the BFS tree.

    Also compares the tree module's own path predicate.
    """
    from . import moebius_tree

    rep = Report("ratio-3 dichotomy")
    t = tree or bfs_tree(longitude_bound)
    for v in sorted(k for k in t.depth if k != (0, 1)):
        rep.checked += 1
        l, m = v
        via = (4, 1) in t.path(v)
        ratio = l > 3 * m
        fast = moebius_tree.passes_through_41(v)
        if l == 3 * m or via != ratio or fast != via:
            rep.violations.append({"vertex": [l, m], "bfs_path": via, "ratio": ratio,
                                   "fast_path": fast})
    return rep


def verify_genus_depth(longitude_bound: int, tree=None) -> Report:
    from . import moebius_tree

    rep = Report("genus = BFS depth")
    t = tree or bfs_tree(longitude_bound)
    for w, via in t.duplicates:
        rep.violations.append({"vertex": list(w), "second_route": list(via)})
    all_tree = set(zip(*(a.tolist() for a in one_sided_pool(longitude_bound))))
    missing = all_tree - set(t.depth)
    for v in sorted(missing):
        rep.violations.append({"vertex": list(v), "unreached": True})
    for v in sorted(t.depth):
        rep.checked += 1
        g = moebius_tree.genus(v)
        if g != t.depth[v]:
            rep.violations.append({"vertex": list(v), "genus": g, "depth": t.depth[v]})
    return rep


def verify_paths(longitude_bound: int) -> Report:
    """Longitude strictly decreases and every step meets at |det| = 2."""
    from . import moebius_tree

    rep = Report("root paths")
    ls, ms = one_sided_pool(longitude_bound)
    for l, m in zip(ls.tolist(), ms.tolist()):
        rep.checked += 1
        path = [tuple(x) for x in moebius_tree.path_to_root((l, m))]
        ok = path[-1] == (0, 1)
        for (l1, m1), (l2, m2) in zip(path, path[1:]):
            if not (l1 > l2 and abs(l1 * m2 - l2 * m1) == 2 and admissible(l2, m2)):
                ok = False
        if not ok:
            rep.violations.append({"vertex": [l, m], "path": [list(x) for x in path]})
    return rep


def brute_transition(p: int, q: int, window: int | None = None) -> tuple[int, int]:
    """Minimal-norm ``(a, b)`` with ``b*q - 2p*a = 1`` by scanning ``a``.

    Ties go to ``b > 0``.
    """
    window = window or (abs(2 * p) + abs(q) + 2)
    best = None
    for a in range(-window, window + 1):
        num = 1 + 2 * p * a
        if num % q:
            continue
        b = num // q
        key = (a * a + b * b, b <= 0)
        if best is None or key < best[0]:
            best = (key, a, b)
    return best[1], best[2]


def run_all(longitude_bound: int = 400) -> list[Report]:
    t = bfs_tree(longitude_bound)
    return [
        verify_parent_unique(longitude_bound),
        verify_ratio_claim(longitude_bound, t),
        verify_genus_depth(longitude_bound, t),
        verify_paths(longitude_bound),
    ]
