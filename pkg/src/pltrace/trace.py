"""PL paths in rational d-space and their traces.

A trace is a path up to reparametrization equivalence.  Every PL path
factors as ``p = q o phi`` with ``q`` regular (no stops), and two regular
non-constant paths are equivalent iff they differ by a homeomorphism of the
interval.  The orbit of a regular PL path is captured by its normal form:
the vertex sequence with every vertex dropped that the path passes straight
through in the same direction.

Why the normal form decides equivalence
---------------------------------------
A regular PL path never pauses, so each of its linear pieces moves with
nonzero velocity.  Reparametrizing by a homeomorphism changes speeds but
not the order in which points are visited, nor where the direction of
motion changes; the normal-form vertices are exactly the start, the end and
the direction changes (including reversals), so they are invariant.
Conversely, if two regular paths share a normal form, both traverse each
normal-form edge monotonically from one vertex to the next.  Writing
``u(t) = k + s`` for "fraction ``s`` along edge ``k``" gives a PL
homeomorphism ``u: [0, 1] -> [0, m]`` per path, and ``u1^{-1} o u2`` is a PL
homeomorphism carrying one path to the other.  Equal normal forms are thus
necessary and sufficient; :func:`shared_source` builds the witness.

Directed paths use the product order on rational d-space: a path is
directed when every coordinate is weakly increasing.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Tuple

from .errors import (BadTimeRange, DimensionMismatch, EndpointMismatch,
                     NotEquivalent, NotIncreasingTime, NotLoopFree,
                     NotRegular, OutOfRange, WitnessMismatch)
from .factorization import left_factor
from .plmap import (IDENTITY, ONE, ZERO, Reparam, as_rat, compose,
                    factor_through, in_unit, invert, pointwise_max,
                    pullback_grid)
from .stopmap import Interval, StopData, realize

Point = Tuple[Fraction, ...]


def _as_point(value) -> Point:
    if isinstance(value, (list, tuple)):
        return tuple(as_rat(v) for v in value)
    return (as_rat(value),)


def _fmt(x: Point) -> str:
    return "(" + ", ".join(str(c) for c in x) + ")"


def _sub(a: Point, b: Point) -> Point:
    return tuple(x - y for x, y in zip(a, b))


def _parallel(u: Point, v: Point) -> bool:
    n = len(u)
    return all(u[k] * v[l] == u[l] * v[k] for k in range(n) for l in range(k + 1, n))


def _dot(u: Point, v: Point) -> Fraction:
    return sum((x * y for x, y in zip(u, v)), Fraction(0))


class Path:
    """Canonical PL path ``[0, 1] -> Q^dim``.

    Breakpoints are ``(t, point)`` with ``t`` strictly increasing from 0 to
    1; a breakpoint collinear with its neighbours in the ``(t, point)``
    graph is dropped, so a constant path keeps exactly two breakpoints.
    Points may be given as scalars when ``dim == 1``.
    """

    __slots__ = ("_ts", "_pts")

    def __init__(self, breakpoints: Iterable):
        raw = [(as_rat(t), _as_point(x)) for t, x in breakpoints]
        if len(raw) < 2:
            raise BadTimeRange("a path needs breakpoints at t = 0 and t = 1")
        dim = len(raw[0][1])
        if dim == 0 or any(len(x) != dim for _, x in raw):
            raise DimensionMismatch("all points must share one positive dimension")
        for t, _ in raw:
            if not in_unit(t):
                raise BadTimeRange(f"time {t} is outside [0, 1]")
        for (t0, _), (t1, _) in zip(raw, raw[1:]):
            if not t0 < t1:
                raise NotIncreasingTime(f"times must increase strictly ({t0} then {t1})")
        if raw[0][0] != ZERO or raw[-1][0] != ONE:
            raise BadTimeRange(f"times must run from 0 to 1, got {raw[0][0]} .. {raw[-1][0]}")

        out = []
        for t, x in raw:
            while len(out) >= 2:
                (t0, x0), (t1, x1) = out[-2], out[-1]
                if all((b - a) * (t - t1) == (c - b) * (t1 - t0) for a, b, c in zip(x0, x1, x)):
                    out.pop()
                else:
                    break
            out.append((t, x))
        object.__setattr__(self, "_ts", tuple(t for t, _ in out))
        object.__setattr__(self, "_pts", tuple(x for _, x in out))

    def __setattr__(self, name, value):
        raise AttributeError("Path is immutable")

    def __reduce__(self):
        return (Path, (self.breakpoints,))

    @property
    def dim(self) -> int:
        return len(self._pts[0])

    @property
    def ts(self) -> Tuple[Fraction, ...]:
        return self._ts

    @property
    def points(self) -> Tuple[Point, ...]:
        return self._pts

    @property
    def breakpoints(self) -> Tuple[Tuple[Fraction, Point], ...]:
        return tuple(zip(self._ts, self._pts))

    @property
    def is_constant(self) -> bool:
        return len(self._pts) == 2 and self._pts[0] == self._pts[1]

    def __call__(self, t) -> Point:
        t = as_rat(t)
        if not in_unit(t):
            raise OutOfRange(f"t = {t} is outside [0, 1]")
        ts, pts = self._ts, self._pts
        for i in range(len(ts) - 1):
            if t <= ts[i + 1]:
                lam = (t - ts[i]) / (ts[i + 1] - ts[i])
                return tuple(a + lam * (b - a) for a, b in zip(pts[i], pts[i + 1]))
        return pts[-1]

    def __eq__(self, other):
        if not isinstance(other, Path):
            return NotImplemented
        return self._ts == other._ts and self._pts == other._pts

    def __hash__(self):
        return hash((self._ts, self._pts))

    def __repr__(self):
        def fmt(x):
            return "(" + ", ".join(str(c) for c in x) + ")"
        return "Path([" + ", ".join(f"({t}, {fmt(x)})" for t, x in self.breakpoints) + "])"


def path_canonicalize(breakpoints: Iterable) -> Path:
    return Path(breakpoints)


def path_eval(p: Path, t) -> Point:
    return p(t)


def path_reparam(p: Path, f: Reparam) -> Path:
    """The path ``p o f``."""
    return Path((t, p(f(t))) for t in pullback_grid(f, p.ts))


@dataclass(frozen=True)
class PathStopData:
    """Maximal constancy intervals of a path with their points.

    ``whole`` marks the constant path, whose single stop interval is
    ``[0, 1]``.
    """

    stops: Tuple[Tuple[Interval, Point], ...]
    whole: bool = False

    @property
    def intervals(self) -> Tuple[Interval, ...]:
        return tuple(j for j, _ in self.stops)


def path_stop_data(p: Path) -> PathStopData:
    stops = tuple((Interval(t0, t1), x0)
                  for t0, t1, x0, x1 in zip(p.ts, p.ts[1:], p.points, p.points[1:])
                  if x0 == x1)
    return PathStopData(stops, whole=p.is_constant)


def is_regular(p: Path) -> bool:
    sd = path_stop_data(p)
    return sd.whole or not sd.stops


def regularize(p: Path) -> Tuple[Path, Reparam]:
    """Return ``(q, phi)`` with ``q`` regular and ``path_reparam(q, phi) == p``.

    ``phi`` has the stop intervals of ``p``; an interior stop interval gets
    its midpoint as stop value, one touching 0 or 1 gets that endpoint.
    """
    sd = path_stop_data(p)
    if sd.whole or not sd.stops:
        return p, IDENTITY
    marks = []
    for j in sd.intervals:
        value = ZERO if j.lo == ZERO else ONE if j.hi == ONE else j.midpoint
        marks.append((j, value))
    phi = realize(StopData(marks))
    q = Path(factor_through(phi, set(p.ts) | set(phi.xs), p))
    return q, phi


def _passes_through(a: Point, b: Point, c: Point) -> bool:
    """True when ``b`` lies strictly inside segment ``ac`` and ``a -> b -> c`` keeps direction."""
    u, v = _sub(b, a), _sub(c, b)
    return _parallel(u, v) and _dot(u, v) > 0


def reduced_indices(points: Sequence[Point]) -> list:
    kept = []
    for i, x in enumerate(points):
        if kept and points[kept[-1]] == x:
            continue
        kept.append(i)
        while len(kept) >= 3 and _passes_through(*(points[k] for k in kept[-3:])):
            del kept[-2]
    return kept


@dataclass(frozen=True)
class TraceNF:
    """Canonical vertex chain of a trace; one vertex for a constant trace."""

    vertices: Tuple[Point, ...]

    @property
    def dim(self) -> int:
        return len(self.vertices[0])


def normal_form(p: Path) -> TraceNF:
    q, _ = regularize(p)
    return TraceNF(tuple(q.points[i] for i in reduced_indices(q.points)))


def _edge_parameter(q: Path) -> Reparam:
    """Homeomorphism ``t -> (k + s) / m`` for a regular non-constant path.

    ``k`` is the normal-form edge ``q(t)`` lies on, ``s`` the fraction
    travelled along it and ``m`` the number of edges.
    """
    kept = reduced_indices(q.points)
    m = len(kept) - 1
    anchors = []
    for k, (i0, i1) in enumerate(zip(kept, kept[1:])):
        a, b = q.points[i0], q.points[i1]
        axis = next(c for c in range(len(a)) if a[c] != b[c])
        for i in range(i0, i1):
            s = (q.points[i][axis] - a[axis]) / (b[axis] - a[axis])
            anchors.append((q.ts[i], (k + s) / m))
    anchors.append((ONE, ONE))
    return Reparam(anchors)


def _check_dims(p: Path, q: Path) -> None:
    if p.dim != q.dim:
        raise DimensionMismatch(f"dimensions differ ({p.dim} vs {q.dim})")


def equivalent(p: Path, q: Path) -> bool:
    _check_dims(p, q)
    return normal_form(p) == normal_form(q)


def shared_source(p: Path, q: Path) -> Tuple[Path, Reparam, Reparam]:
    """``(r, phi, psi)`` with ``r`` regular, ``p == r o phi`` and ``q == r o psi``."""
    _check_dims(p, q)
    r1, f1 = regularize(p)
    r2, f2 = regularize(q)
    if normal_form(r1) != normal_form(r2):
        raise NotEquivalent("the paths have different trace normal forms")
    if r1.is_constant:
        return r1, f1, f2
    h = compose(invert(_edge_parameter(r1)), _edge_parameter(r2))
    return r1, f1, compose(h, f2)


def factor_regular(p: Path, phi: Reparam, p2: Path, phi2: Reparam) -> Reparam:
    """Given ``p o phi == p2 o phi2`` with ``p`` regular, return ``eta`` with ``p o eta == p2``.

    ``eta`` is the left factor of ``phi`` through ``phi2``; it is unique
    unless ``p`` is constant, in which case the identity is returned.
    """
    if not is_regular(p):
        raise NotRegular("the first path has stop intervals")
    if path_reparam(p, phi) != path_reparam(p2, phi2):
        raise WitnessMismatch("p o phi differs from p2 o phi2")
    if p.is_constant:
        return IDENTITY
    return left_factor(phi, phi2)


def concat(p: Path, q: Path) -> Path:
    """Run ``p`` on ``[0, 1/2]`` and ``q`` on ``[1/2, 1]``, each at double speed."""
    _check_dims(p, q)
    if p.points[-1] != q.points[0]:
        raise EndpointMismatch(f"p ends at {_fmt(p.points[-1])} but q starts at {_fmt(q.points[0])}")
    half = Fraction(1, 2)
    first = [(t * half, x) for t, x in p.breakpoints]
    second = [(half + t * half, x) for t, x in q.breakpoints[1:]]
    return Path(first + second)


def is_directed(p: Path) -> bool:
    return all(b >= a for x0, x1 in zip(p.points, p.points[1:]) for a, b in zip(x0, x1))


def _segments_meet(a: Point, b: Point, c: Point, d: Point) -> bool:
    """Exact test whether closed segments ``ab`` and ``cd`` (nondegenerate) intersect."""
    u, v, w = _sub(b, a), _sub(d, c), _sub(c, a)
    n = len(u)
    if _parallel(u, v):
        if not _parallel(u, w):
            return False
        axis = next(k for k in range(n) if u[k] != 0)
        lo1, hi1 = sorted((a[axis], b[axis]))
        lo2, hi2 = sorted((c[axis], d[axis]))
        return max(lo1, lo2) <= min(hi1, hi2)
    k, l = next((k, l) for k in range(n) for l in range(k + 1, n)
                if u[k] * v[l] != u[l] * v[k])
    det = u[k] * v[l] - u[l] * v[k]
    s = (w[k] * v[l] - w[l] * v[k]) / det
    t = (w[k] * u[l] - w[l] * u[k]) / det
    if not (0 <= s <= 1 and 0 <= t <= 1):
        return False
    return all(a[i] + s * u[i] == c[i] + t * v[i] for i in range(n))


def is_loop_free(p: Path) -> bool:
    """True iff ``p`` only revisits a point by standing still.

    Decided on the regular part: consecutive pieces may share only their
    common vertex (no reversal), non-consecutive pieces may not meet.
    """
    q, _ = regularize(p)
    if q.is_constant:
        return True
    pts = q.points
    segs = list(zip(pts, pts[1:]))
    for i in range(len(segs) - 1):
        (a, b), (_, c) = segs[i], segs[i + 1]
        u, v = _sub(b, a), _sub(c, b)
        if _parallel(u, v) and _dot(u, v) < 0:
            return False
    for i in range(len(segs)):
        for j in range(i + 2, len(segs)):
            if _segments_meet(*segs[i], *segs[j]):
                return False
    return True


def image_chain(p: Path) -> Tuple[Point, ...]:
    """Vertices of the arc ``p(I)``; a single vertex when the image is a point."""
    if not is_loop_free(p):
        raise NotLoopFree("the path revisits a point without standing still")
    return normal_form(p).vertices


@dataclass(frozen=True)
class HomotopyWitness:
    """Thin homotopies ``r o Phi`` and ``r o Psi`` meeting at ``r o eta``.

    ``Phi(s, t) = (1 - s) phi(t) + s eta(t)`` and likewise ``Psi`` with
    ``psi``; ``eta = max(phi, psi)`` makes both increasing in ``s``.
    """

    r: Path
    phi: Reparam
    psi: Reparam
    eta: Reparam


def thin_homotopy(p: Path, q: Path) -> HomotopyWitness:
    r, phi, psi = shared_source(p, q)
    return HomotopyWitness(r, phi, psi, pointwise_max(phi, psi))


def witness_eval(w: HomotopyWitness, side: int, s, t) -> Point:
    s, t = as_rat(s), as_rat(t)
    if side not in (1, 2):
        raise OutOfRange("side must be 1 or 2")
    if not (in_unit(s) and in_unit(t)):
        raise OutOfRange(f"(s, t) = ({s}, {t}) is outside the unit square")
    start = w.phi if side == 1 else w.psi
    return w.r((1 - s) * start(t) + s * w.eta(t))


def witness_endpoints(w: HomotopyWitness) -> Tuple[Reparam, Reparam]:
    return w.phi, w.psi
