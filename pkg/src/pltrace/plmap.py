"""Exact piecewise-linear reparametrizations of the unit interval.

A :class:`Reparam` is a weakly increasing PL surjection of ``[0, 1]`` that
fixes both endpoints, stored as its canonical breakpoint list: x strictly
increasing, y weakly increasing, no removable (collinear) interior
breakpoint.  Canonical form makes pointwise equality the same thing as
breakpoint-list equality, so ``==`` is semantic.

Strictly increasing maps come back as :class:`Homeo`, a subclass; the class
of a value always reflects whether it is invertible.

All coordinates are :class:`fractions.Fraction`; nothing is ever rounded.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from fractions import Fraction
from numbers import Rational
from typing import Callable, Iterable, Sequence, Tuple

from .errors import BadEndpoints, NotInjective, NotMonotone, OutOfRange

Rat = Fraction
Breakpoint = Tuple[Fraction, Fraction]

ZERO = Fraction(0)
ONE = Fraction(1)


def as_rat(value) -> Fraction:
    """Coerce ints, rationals and ``"n/d"`` strings to a Fraction.

    Floats are refused: they would smuggle binary rounding into exact data.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, (int, Rational, str)):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def in_unit(value: Fraction) -> bool:
    return ZERO <= value <= ONE


def is_collinear(p0: Breakpoint, p1: Breakpoint, p2: Breakpoint) -> bool:
    (x0, y0), (x1, y1), (x2, y2) = p0, p1, p2
    return (y1 - y0) * (x2 - x1) == (y2 - y1) * (x1 - x0)


def _canonical_points(points: Iterable) -> Tuple[Tuple[Fraction, ...], Tuple[Fraction, ...]]:
    pts = [(as_rat(x), as_rat(y)) for x, y in points]
    if not pts:
        raise BadEndpoints("a reparametrization needs at least the breakpoints (0,0) and (1,1)")
    for x, y in pts:
        if not (in_unit(x) and in_unit(y)):
            raise OutOfRange(f"breakpoint ({x}, {y}) leaves the unit square")
    for (x0, y0), (x1, y1) in zip(pts, pts[1:]):
        if x1 <= x0:
            raise NotMonotone(f"x-coordinates must increase strictly ({x0} then {x1})")
        if y1 < y0:
            raise NotMonotone(f"values decrease on [{x0}, {x1}] ({y0} then {y1})")
    if pts[0] != (ZERO, ZERO) or pts[-1] != (ONE, ONE):
        raise BadEndpoints(f"must start at (0,0) and end at (1,1), got {pts[0]} ... {pts[-1]}")

    out = []
    for p in pts:
        while len(out) >= 2 and is_collinear(out[-2], out[-1], p):
            out.pop()
        out.append(p)
    xs, ys = zip(*out)
    return xs, ys


class Reparam:
    """Canonical PL element of Rep+(I).

    >>> Reparam([(0, 0), ("1/2", "1/2"), (1, 1)]).points
    ((Fraction(0, 1), Fraction(0, 1)), (Fraction(1, 1), Fraction(1, 1)))
    """

    __slots__ = ("_xs", "_ys")

    def __new__(cls, points: Iterable):
        xs, ys = _canonical_points(points)
        strict = all(a < b for a, b in zip(ys, ys[1:]))
        if cls is Reparam and strict:
            cls = Homeo
        elif cls is Homeo and not strict:
            raise NotInjective("a homeomorphism cannot have a zero-slope segment")
        self = object.__new__(cls)
        object.__setattr__(self, "_xs", xs)
        object.__setattr__(self, "_ys", ys)
        return self

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    def __reduce__(self):
        return (Reparam, (self.points,))

    @property
    def xs(self) -> Tuple[Fraction, ...]:
        return self._xs

    @property
    def ys(self) -> Tuple[Fraction, ...]:
        return self._ys

    @property
    def points(self) -> Tuple[Breakpoint, ...]:
        return tuple(zip(self._xs, self._ys))

    def segments(self):
        """Yield ``(x0, y0, x1, y1)`` for each linear piece."""
        xs, ys = self._xs, self._ys
        for i in range(len(xs) - 1):
            yield xs[i], ys[i], xs[i + 1], ys[i + 1]

    def __call__(self, t) -> Fraction:
        t = as_rat(t)
        if not in_unit(t):
            raise OutOfRange(f"t = {t} is outside [0, 1]")
        xs, ys = self._xs, self._ys
        i = bisect_right(xs, t) - 1
        if i >= len(xs) - 1:
            return ys[-1]
        x0, x1 = xs[i], xs[i + 1]
        return ys[i] + (ys[i + 1] - ys[i]) * (t - x0) / (x1 - x0)

    def preimage(self, value) -> Tuple[Fraction, Fraction]:
        """Return ``(lo, hi)`` with ``f^{-1}(value) = [lo, hi]``.

        The preimage is a single point exactly when ``lo == hi``.
        """
        u = as_rat(value)
        if not in_unit(u):
            raise OutOfRange(f"value {u} is outside [0, 1]")
        xs, ys = self._xs, self._ys
        i = bisect_left(ys, u)
        if ys[i] == u:
            lo = xs[i]
        else:
            lo = xs[i - 1] + (u - ys[i - 1]) * (xs[i] - xs[i - 1]) / (ys[i] - ys[i - 1])
        j = bisect_right(ys, u) - 1
        if ys[j] == u:
            hi = xs[j]
        else:
            hi = xs[j] + (u - ys[j]) * (xs[j + 1] - xs[j]) / (ys[j + 1] - ys[j])
        return lo, hi

    def __eq__(self, other):
        if not isinstance(other, Reparam):
            return NotImplemented
        return self._xs == other._xs and self._ys == other._ys

    def __hash__(self):
        return hash((self._xs, self._ys))

    def __repr__(self):
        body = ", ".join(f"({x}, {y})" for x, y in self.points)
        return f"{type(self).__name__}([{body}])"


class Homeo(Reparam):
    """A strictly increasing :class:`Reparam` (element of Homeo+(I))."""

    __slots__ = ()


IDENTITY = Reparam([(0, 0), (1, 1)])


def canonicalize(points: Iterable) -> Reparam:
    return Reparam(points)


def evaluate(f: Reparam, t) -> Fraction:
    return f(t)


def is_homeo(f: Reparam) -> bool:
    return isinstance(f, Homeo)


def pullback_grid(f: Reparam, targets: Iterable[Fraction]) -> list:
    """Breakpoints of ``f`` together with the ``f``-preimages of ``targets``.

    Plateau preimages contribute both ends.  Any PL function of ``f(t)``
    whose own breakpoints lie in ``targets`` is linear between consecutive
    grid points.
    """
    grid = set(f.xs)
    for u in targets:
        lo, hi = f.preimage(u)
        grid.add(lo)
        grid.add(hi)
    return sorted(grid)


def compose(f: Reparam, g: Reparam) -> Reparam:
    """Return ``f o g``, i.e. ``t -> f(g(t))``."""
    grid = pullback_grid(g, f.xs)
    return Reparam([(t, f(g(t))) for t in grid])


def invert(h: Reparam) -> Homeo:
    if not is_homeo(h):
        raise NotInjective("only strictly increasing reparametrizations are invertible")
    return Homeo([(y, x) for x, y in h.points])


def merged_grid(*maps: Reparam) -> list:
    grid = set()
    for f in maps:
        grid.update(f.xs)
    return sorted(grid)


def sup_distance(f: Reparam, g: Reparam) -> Fraction:
    # f - g is linear between merged breakpoints, so the max sits on one.
    return max(abs(f(t) - g(t)) for t in merged_grid(f, g))


def _pointwise(f: Reparam, g: Reparam, pick: Callable) -> Reparam:
    grid = merged_grid(f, g)
    samples = []
    for t0, t1 in zip(grid, grid[1:]):
        samples.append(t0)
        d0, d1 = f(t0) - g(t0), f(t1) - g(t1)
        if d0 * d1 < 0:
            samples.append(t0 + d0 * (t1 - t0) / (d0 - d1))
    samples.append(grid[-1])
    return Reparam([(t, pick(f(t), g(t))) for t in samples])


def pointwise_max(f: Reparam, g: Reparam) -> Reparam:
    return _pointwise(f, g, max)


def pointwise_min(f: Reparam, g: Reparam) -> Reparam:
    return _pointwise(f, g, min)


def convex_combination(f: Reparam, g: Reparam, s) -> Reparam:
    """``(1 - s) f + s g``; Rep+(I) and Homeo+(I) are both convex."""
    s = as_rat(s)
    if not in_unit(s):
        raise OutOfRange(f"weight s = {s} is outside [0, 1]")
    return Reparam([(t, (1 - s) * f(t) + s * g(t)) for t in merged_grid(f, g)])


def factor_through(phi: Reparam, times: Sequence[Fraction], value_at: Callable) -> list:
    """Anchors ``(phi(t), value_at(t))`` of ``value_at o phi^{-1}``.

    The caller guarantees ``value_at`` is constant on each plateau of
    ``phi`` and linear between consecutive ``times``; ``times`` must
    include every breakpoint of ``phi``.  Consecutive anchors that collapse
    onto one abscissa (a plateau of ``phi``) are merged.
    """
    anchors = []
    for t in sorted(set(times)):
        x = phi(t)
        if anchors and anchors[-1][0] == x:
            continue
        anchors.append((x, value_at(t)))
    return anchors
