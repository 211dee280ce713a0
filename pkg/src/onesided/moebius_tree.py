"""The Moebius band tree of one-sided surfaces in a solid torus.

Vertices are first-quadrant boundary slopes. The root ``(0,1)`` is the
meridian disc; two vertices are joined when their slopes meet twice, i.e. the
surfaces differ by one Moebius band. The number of edges from a vertex down
to the root is the crosscap genus of the surface it bounds.

Only slopes ``(L, M)`` with ``M < L`` appear (plus the root). A slope with
``M > L`` is carried onto one with ``M < L`` by a twist along the meridian
disc, so it bounds the same surface; in particular the root has the single
child ``(2,1)`` and ``(2, b)`` for ``b >= 3`` is left out.
"""

from __future__ import annotations

import json
from collections import deque
from math import gcd

from .errors import AmbiguousParent, NotAVertex, RootHasNoParent, UnknownFormat
from .slope_core import QuadrantSlope, det, quadrant_project

ROOT = QuadrantSlope(0, 1)
BASE = QuadrantSlope(2, 1)
FOUR_ONE = QuadrantSlope(4, 1)


def _coords(s) -> tuple[int, int]:
    l, m = s
    return int(l), int(m)


def is_vertex(s) -> bool:
    l, m = _coords(s)
    if (l, m) == (0, 1):
        return True
    return l >= 2 and l % 2 == 0 and m >= 1 and m % 2 == 1 and m < l and gcd(l, m) == 1


def _vertex(s) -> QuadrantSlope:
    if not is_vertex(s):
        l, m = _coords(s)
        if l == 0 and m == 0 or gcd(l, m) != 1:
            # surfaces NonPrimitive / ZeroCurve with the usual message
            quadrant_project((l, m))
        raise NotAVertex(f"({l},{m}) is not a vertex of the Moebius band tree")
    return QuadrantSlope(*_coords(s))


def _neighbour_families(v: QuadrantSlope):
    """Base solutions of ``p*q' - p'*q = eps`` with ``0 <= p' < p``.

    Every neighbour ``(2p', q')`` of ``v = (2p, q)`` is a base solution plus
    an integer multiple of ``(p, q)``.
    """
    p, q = v.longitude // 2, v.meridian
    inv = pow(q, -1, p) if p > 1 else 0
    for eps in (1, -1):
        p0 = (-eps * inv) % p
        q0, r = divmod(p0 * q + eps, p)
        assert r == 0
        yield p0, q0


def children(v, longitude_bound: int) -> list[QuadrantSlope]:
    """Vertices one band above ``v`` with longitude at most ``longitude_bound``.

    The result is sorted by (longitude, meridian).
    """
    v = _vertex(v)
    if v == ROOT:
        return [BASE] if longitude_bound >= 2 else []
    p, q = v.longitude // 2, v.meridian
    out = set()
    for p0, q0 in _neighbour_families(v):
        # first k with p0 + k*p > p
        k = (p - p0) // p + 1
        while 2 * (p0 + k * p) <= longitude_bound:
            w = (2 * (p0 + k * p), q0 + k * q)
            if is_vertex(w):
                out.add(QuadrantSlope(*w))
            k += 1
    return sorted(out)


def parent(v) -> QuadrantSlope:
    """The unique vertex one band below ``v``."""
    v = _vertex(v)
    if v == ROOT:
        raise RootHasNoParent("(0,1) is the root")
    if v == BASE:
        return ROOT
    found = [QuadrantSlope(2 * p0, q0) for p0, q0 in _neighbour_families(v)
             if q0 % 2 == 1 and is_vertex((2 * p0, q0))]
    if len(found) != 1:
        if len(found) > 1:
            raise AmbiguousParent(f"{v} has parents {found}")
        raise NotAVertex(f"{v} has no admissible parent")
    return found[0]


def path_to_root(s) -> list[QuadrantSlope]:
    v = _vertex(s)
    path = [v]
    while v != ROOT:
        v = parent(v)
        path.append(v)
    return path


def genus(s) -> int:
    """Crosscap genus of the surface bounded by ``s``: its depth in the tree."""
    return len(path_to_root(s)) - 1


def passes_through_41(s) -> bool:
    return FOUR_ONE in path_to_root(s)


def ratio_above_three(s) -> bool:
    """``longitude / meridian > 3`` by exact cross-multiplication."""
    l, m = _coords(s)
    return l > 3 * m


def bfs(longitude_bound: int) -> dict[QuadrantSlope, tuple[QuadrantSlope | None, int]]:
    """Grow the tree from the root; maps vertex -> (parent, depth)."""
    seen = {ROOT: (None, 0)}
    queue = deque([ROOT])
    while queue:
        v = queue.popleft()
        depth = seen[v][1]
        for w in children(v, longitude_bound):
            if w in seen:
                raise AmbiguousParent(f"{w} reached from {seen[w][0]} and {v}")
            seen[w] = (v, depth + 1)
            queue.append(w)
    return seen


def _label(v) -> str:
    return f'"({v.longitude},{v.meridian})"'


def export_tree(longitude_bound: int, format: str = "json") -> str:
    if longitude_bound < 2:
        raise ValueError("longitude bound must be at least 2")
    if format not in ("dot", "json"):
        raise UnknownFormat(f"unknown format {format!r}; expected dot or json")
    tree = bfs(longitude_bound)
    verts = sorted(tree)
    index = {v: i for i, v in enumerate(verts)}
    edges = sorted((index[par], index[v]) for v, (par, _) in tree.items() if par is not None)

    if format == "json":
        doc = {
            "vertices": [{"longitude": v.longitude, "meridian": v.meridian,
                          "genus": tree[v][1]} for v in verts],
            "edges": [list(e) for e in edges],
        }
        return json.dumps(doc)

    base = [v for v in verts if v.meridian == 1]
    lines = ["graph moebius_tree {", "  rankdir=BT;"]
    # the (2p,1) branch has no nested bands; draw it as one horizontal line
    lines.append("  { rank=same; " + " ".join(_label(v) + ";" for v in base) + " }")
    for v in verts:
        lines.append(f"  {_label(v)} [label={_label(v)}];")
    for i, j in edges:
        a, b = verts[i], verts[j]
        attr = " [constraint=false]" if a.meridian == 1 and b.meridian == 1 else ""
        lines.append(f"  {_label(a)} -- {_label(b)}{attr};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def edge_det(u, v) -> int:
    return det(*_coords(u), *_coords(v))
