"""One-sided splitting surfaces of even Dehn fillings of figure-8 knot space.

The filling is parametrised by ``(p, q)``; the meridian disc of the filling
solid torus is glued along the ``(2p, q)`` curve. Each of the three
incompressible spanning surfaces of the knot exterior is closed off in the
solid torus by the tree surface bounded by its boundary curve, read in torus
coordinates.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from math import gcd

from . import moebius_tree as tree
from .errors import InternalInconsistency, InvalidSpec
from .slope_core import Slope, intersection_number, make_slope, quadrant_project

KNOT_EULER = -1


class Surface(enum.Enum):
    """Spanning surfaces of the knot exterior, keyed by knot-space boundary slope."""

    Seifert_01 = (0, 1)
    Klein_41 = (4, 1)
    Klein_4m1 = (4, -1)

    @property
    def knot_slope(self) -> Slope:
        return make_slope(*self.value)

    @property
    def knot_part_euler(self) -> int:
        return KNOT_EULER


@dataclass(frozen=True)
class FillingSpec:
    p: int
    q: int

    def __post_init__(self):
        p, q = self.p, self.q
        problems = []
        if gcd(p, q) != 1:
            problems.append("gcd(p,q) must be 1")
        if abs(p) <= abs(q):
            problems.append("need |p| > |q|")
        if abs(p) <= 2:
            problems.append("need |p| > 2")
        if q % 2 == 0:
            problems.append("q must be odd for (2p,q) to be primitive")
        if problems:
            raise InvalidSpec(f"invalid filling (p,q)=({p},{q}): " + "; ".join(problems))

    @property
    def same_sign(self) -> bool:
        return (self.p > 0) == (self.q > 0)

    @property
    def ratio_above_three(self) -> bool:
        """``|2p/q| > 3``. Equality cannot occur for a valid spec."""
        return 2 * abs(self.p) > 3 * abs(self.q)


@dataclass(frozen=True)
class TransitionMatrix:
    """Torus-to-knot change of coordinates ``[[b, 2p], [a, q]]``."""

    a: int
    b: int
    p: int
    q: int

    @property
    def entries(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return ((self.b, 2 * self.p), (self.a, self.q))

    @property
    def inverse(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return ((self.q, -2 * self.p), (-self.a, self.b))

    @property
    def determinant(self) -> int:
        return self.b * self.q - 2 * self.p * self.a

    def to_torus(self, x: int, y: int) -> tuple[int, int]:
        (r0, r1) = self.inverse
        return r0[0] * x + r0[1] * y, r1[0] * x + r1[1] * y

    def to_knot(self, x: int, y: int) -> tuple[int, int]:
        (r0, r1) = self.entries
        return r0[0] * x + r0[1] * y, r1[0] * x + r1[1] * y


def _ext_gcd(x: int, y: int) -> tuple[int, int, int]:
    """Return ``(g, s, t)`` with ``s*x + t*y == g == gcd(x, y) >= 0``."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while y:
        k, r = divmod(x, y)
        x, y = y, r
        s0, s1 = s1, s0 - k * s1
        t0, t1 = t1, t0 - k * t1
    if x < 0:
        x, s0, t0 = -x, -s0, -t0
    return x, s0, t0


def transition_matrix(spec: FillingSpec) -> TransitionMatrix:
    """Determinant-one matrix whose ``(a, b)`` has the least Euclidean norm.

    Solutions of ``b*q - 2p*a = 1`` form the line ``(a + k*q, b + 2p*k)``;
    the two integers around the real minimiser are compared, preferring
    ``b > 0`` on a tie.
    """
    p, q = spec.p, spec.q
    g, s, t = _ext_gcd(q, -2 * p)
    assert g == 1
    b0, a0 = s, t
    # minimise |(a0, b0) + k (q, 2p)|^2 over integer k
    num = -(a0 * q + b0 * 2 * p)
    den = q * q + 4 * p * p
    k_lo = num // den
    best = None
    for k in (k_lo, k_lo + 1):
        a, b = a0 + k * q, b0 + 2 * p * k
        key = (a * a + b * b, b <= 0)
        if best is None or key < best[0]:
            best = (key, a, b)
    _, a, b = best
    m = TransitionMatrix(a, b, p, q)
    assert m.determinant == 1
    return m


def knot_to_torus(s, m: TransitionMatrix) -> Slope:
    x, y = s
    return make_slope(*m.to_torus(x, y))


def torus_slopes(m: TransitionMatrix) -> dict[Surface, Slope]:
    return {surf: knot_to_torus(surf.value, m) for surf in Surface}


def total_genus(surface: Surface, torus_slope) -> int:
    """Crosscap genus of the closed surface.

    Euler characteristics add across the gluing torus: the knot part has
    ``-1``, the solid-torus part of tree genus ``g`` has ``1 - g``.
    """
    g = tree.genus(quadrant_project(torus_slope))
    chi = surface.knot_part_euler + (1 - g)
    return 2 - chi


def intermediate_slopes(spec: FillingSpec, m: TransitionMatrix) -> tuple[Slope, Slope]:
    """Slopes one band away from the Seifert closure, toward each Klein closure."""
    p, q, a, b = spec.p, spec.q, m.a, m.b
    return (make_slope(2 * q - 2 * p, -2 * a + b),
            make_slope(2 * q + 2 * p, -2 * a - b))


def projected_longitudes(spec: FillingSpec) -> dict[str, int]:
    """First-quadrant longitudes of the five torus curves."""
    p, q = spec.p, spec.q
    return {
        "seifert": abs(2 * p),
        "intermediate_41": abs(2 * q - 2 * p),
        "klein_41": abs(4 * q - 2 * p),
        "intermediate_4m1": abs(2 * q + 2 * p),
        "klein_4m1": abs(4 * q + 2 * p),
    }


def genus_chain(spec: FillingSpec) -> list[str]:
    """Curves in the order the longitude chain says they increase."""
    if spec.same_sign:
        return ["intermediate_41", "seifert", "intermediate_4m1", "klein_4m1"]
    return ["intermediate_4m1", "seifert", "intermediate_41", "klein_41"]


def genus_order_check(spec: FillingSpec) -> bool:
    """Whether the strict longitude chain holds for this filling."""
    lon = projected_longitudes(spec)
    chain = [lon[k] for k in genus_chain(spec)]
    return all(x < y for x, y in zip(chain, chain[1:]))


def intermediate_below_klein(spec: FillingSpec) -> bool:
    """The near intermediate curve is shorter than the near Klein curve.

    Holds exactly when ``|2p/q| < 3``.
    """
    lon = projected_longitudes(spec)
    if spec.same_sign:
        return lon["intermediate_41"] < lon["klein_41"]
    return lon["intermediate_4m1"] < lon["klein_4m1"]


@dataclass(frozen=True)
class SurfaceRecord:
    surface: Surface
    torus_slope: Slope
    torus_genus: int
    total_genus: int
    minimal: bool

    def to_dict(self) -> dict:
        return {
            "tag": self.surface.name,
            "knot_slope": list(self.surface.value),
            "torus_slope": self.torus_slope.as_list(),
            "torus_genus": self.torus_genus,
            "total_genus": self.total_genus,
            "minimal": self.minimal,
        }


@dataclass(frozen=True)
class Verdict:
    kind: str  # "UniqueIncompressible" or "TwoCandidates"
    surfaces: tuple[Surface, ...]

    def __str__(self):
        return f"{self.kind}({', '.join(s.name for s in self.surfaces)})"


@dataclass(frozen=True)
class FillingReport:
    spec: FillingSpec
    matrix: TransitionMatrix
    surfaces: tuple[SurfaceRecord, ...]
    verdict: Verdict
    compressions: tuple[tuple[Surface, Surface], ...]
    intermediates: tuple[Slope, Slope]

    def record(self, surface: Surface) -> SurfaceRecord:
        return next(r for r in self.surfaces if r.surface is surface)

    @property
    def genera(self) -> tuple[int, ...]:
        return tuple(r.total_genus for r in self.surfaces)

    def to_dict(self) -> dict:
        return {
            "p": self.spec.p,
            "q": self.spec.q,
            "a": self.matrix.a,
            "b": self.matrix.b,
            "surfaces": [r.to_dict() for r in self.surfaces],
            "verdict": {"kind": self.verdict.kind,
                        "surfaces": [s.name for s in self.verdict.surfaces]},
            "compressions": [[x.name, y.name] for x, y in self.compressions],
            "intermediates": [s.as_list() for s in self.intermediates],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def to_text(self) -> str:
        p, q = self.spec.p, self.spec.q
        lines = [f"filling slope (2p,q) = ({2 * p},{q})   p={p} q={q}",
                 f"transition matrix A = [[{self.matrix.b}, {2 * p}], [{self.matrix.a}, {q}]]"]
        for r in self.surfaces:
            flag = "  minimal" if r.minimal else ""
            lines.append(f"  {r.surface.name:<11} knot {str(r.surface.knot_slope):<7} "
                         f"torus {str(r.torus_slope):<12} torus genus {r.torus_genus:<3} "
                         f"total genus {r.total_genus}{flag}")
        lines.append(f"verdict: {self.verdict}")
        for x, y in self.compressions:
            lines.append(f"  {x.name} compresses to {y.name}")
        lines.append("intermediate slopes: " + ", ".join(str(s) for s in self.intermediates))
        return "\n".join(lines)


def classify(spec: FillingSpec) -> FillingReport:
    if not isinstance(spec, FillingSpec):
        spec = FillingSpec(*spec)
    m = transition_matrix(spec)
    slopes = torus_slopes(m)
    tg = {s: tree.genus(quadrant_project(slopes[s])) for s in Surface}
    total = {s: total_genus(s, slopes[s]) for s in Surface}

    near, far = ((Surface.Klein_41, Surface.Klein_4m1) if spec.same_sign
                 else (Surface.Klein_4m1, Surface.Klein_41))
    if spec.ratio_above_three:
        verdict = Verdict("UniqueIncompressible", (near,))
        chain = ((far, Surface.Seifert_01), (Surface.Seifert_01, near))
    else:
        verdict = Verdict("TwoCandidates", (Surface.Seifert_01, near))
        chain = ((far, Surface.Seifert_01),)

    least = min(total.values())
    by_genus = {s for s in Surface if total[s] == least}
    if by_genus != set(verdict.surfaces):
        raise InternalInconsistency(
            f"(p,q)=({spec.p},{spec.q}): tree genera {[total[s] for s in Surface]} "
            f"give minimal set {sorted(s.name for s in by_genus)}, ratio verdict {verdict}")

    records = tuple(SurfaceRecord(s, slopes[s], tg[s], total[s], s in by_genus) for s in Surface)
    inter = intermediate_slopes(spec, m)
    for mid, nb in ((inter[0], Surface.Klein_41), (inter[1], Surface.Klein_4m1)):
        for other in (slopes[Surface.Seifert_01], slopes[nb]):
            if abs(intersection_number(mid, other)) != 2:
                raise InternalInconsistency(f"intermediate {mid} does not meet {other} twice")
    return FillingReport(spec, m, records, verdict, chain, inter)
