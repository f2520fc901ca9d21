"""Stop intervals, stop values and stop maps of reparametrizations.

For a PL reparametrization every stop interval is one maximal zero-slope
plateau, so the stop data is a finite ordered list of ``(interval, value)``
pairs.  The pairing is the order-preserving bijection between stop
intervals and stop values; the closures of the gaps between stop intervals
are the move intervals, on which the map is strictly increasing.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence, Tuple

from .errors import DuplicateValue, InvalidStopData, OutOfRange
from .plmap import IDENTITY, ONE, ZERO, Homeo, Reparam, as_rat, in_unit


@dataclass(frozen=True, order=True)
class Interval:
    """Nondegenerate closed subinterval ``[lo, hi]`` of the unit interval."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        lo, hi = as_rat(self.lo), as_rat(self.hi)
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)
        if not (in_unit(lo) and in_unit(hi)):
            raise OutOfRange(f"[{lo}, {hi}] is not inside [0, 1]")
        if not lo < hi:
            raise InvalidStopData(f"[{lo}, {hi}] is degenerate")

    def __contains__(self, t) -> bool:
        return self.lo <= t <= self.hi

    def contains_interval(self, other: "Interval") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def __repr__(self):
        return f"[{self.lo}, {self.hi}]"


Stop = Tuple[Interval, Fraction]


def _as_interval(value) -> Interval:
    if isinstance(value, Interval):
        return value
    lo, hi = value
    return Interval(lo, hi)


class StopData:
    """Finite stop map: ordered ``(interval, value)`` pairs.

    Constructing one validates the finite form of the realizability
    conditions: intervals disjoint and increasing, values strictly
    increasing, an interval touching 0 (resp. 1) carries value 0 (resp. 1),
    and a value of 0 (resp. 1) only on an interval touching 0 (resp. 1).
    The last rule is what keeps the boundary values of every move interval
    strictly increasing.
    """

    __slots__ = ("_stops",)

    def __init__(self, stops: Iterable = ()):
        pairs = []
        for interval, value in stops:
            value = as_rat(value)
            if not in_unit(value):
                raise OutOfRange(f"stop value {value} is outside [0, 1]")
            pairs.append((_as_interval(interval), value))
        for (j0, c0), (j1, c1) in zip(pairs, pairs[1:]):
            if not j0.hi < j1.lo:
                raise InvalidStopData(f"stop intervals {j0} and {j1} overlap or are out of order")
            if not c0 < c1:
                raise InvalidStopData(f"stop values must increase along the intervals ({c0} then {c1})")
        for j, c in pairs:
            if (j.lo == ZERO) != (c == ZERO):
                raise InvalidStopData(f"{j} has value {c}: value 0 belongs exactly to an interval containing 0")
            if (j.hi == ONE) != (c == ONE):
                raise InvalidStopData(f"{j} has value {c}: value 1 belongs exactly to an interval containing 1")
        object.__setattr__(self, "_stops", tuple(pairs))

    def __setattr__(self, name, value):
        raise AttributeError("StopData is immutable")

    @property
    def stops(self) -> Tuple[Stop, ...]:
        return self._stops

    @property
    def intervals(self) -> Tuple[Interval, ...]:
        return tuple(j for j, _ in self._stops)

    @property
    def values(self) -> Tuple[Fraction, ...]:
        return tuple(c for _, c in self._stops)

    def value_set(self) -> frozenset:
        return frozenset(self.values)

    def value_of(self, interval: Interval) -> Fraction:
        for j, c in self._stops:
            if j == interval:
                return c
        raise KeyError(interval)

    def interval_of(self, value) -> Interval:
        value = as_rat(value)
        for j, c in self._stops:
            if c == value:
                return j
        raise KeyError(value)

    def in_stop_set(self, t) -> bool:
        return any(t in j for j in self.intervals)

    def move_intervals(self) -> Tuple[Interval, ...]:
        edges = [ZERO]
        for j in self.intervals:
            edges += [j.lo, j.hi]
        edges.append(ONE)
        return tuple(Interval(a, b) for a, b in zip(edges[::2], edges[1::2]) if a < b)

    def __len__(self):
        return len(self._stops)

    def __iter__(self) -> Iterator[Stop]:
        return iter(self._stops)

    def __eq__(self, other):
        if not isinstance(other, StopData):
            return NotImplemented
        return self._stops == other._stops

    def __hash__(self):
        return hash(self._stops)

    def __repr__(self):
        return "StopData([" + ", ".join(f"({j!r}, {c})" for j, c in self._stops) + "])"


def stop_data(f: Reparam) -> StopData:
    return StopData((Interval(x0, x1), y0) for x0, y0, x1, y1 in f.segments() if y0 == y1)


def stop_values(f: Reparam) -> frozenset:
    return frozenset(y0 for _, y0, _, y1 in f.segments() if y0 == y1)


def move_intervals(f: Reparam) -> Tuple[Interval, ...]:
    return stop_data(f).move_intervals()


def compose_stop_data(f: Reparam, g: Reparam) -> StopData:
    """Stop data of ``f o g`` computed from the stop data of ``f`` and ``g``.

    Intervals: the stops of ``g`` whose value avoids the stop set of ``f``
    (value mapped through ``f``), plus the ``g``-preimages of the stops of
    ``f`` (value kept).
    """
    sd_f, sd_g = stop_data(f), stop_data(g)
    stops = [(j, f(c)) for j, c in sd_g if not sd_f.in_stop_set(c)]
    for k, c in sd_f:
        stops.append((Interval(g.preimage(k.lo)[0], g.preimage(k.hi)[1]), c))
    stops.sort(key=lambda pair: pair[0])
    return StopData(stops)


def realize(sd) -> Reparam:
    """Canonical reparametrization with exactly the given stop data.

    Each move interval is a single linear segment between its boundary
    values.
    """
    if not isinstance(sd, StopData):
        sd = StopData(sd)
    anchors = [(ZERO, ZERO)]
    for j, c in sd:
        for x in (j.lo, j.hi):
            if x != anchors[-1][0]:
                anchors.append((x, c))
    if anchors[-1][0] != ONE:
        anchors.append((ONE, ONE))
    return Reparam(anchors)


def _sorted_values(values: Iterable) -> list:
    out = sorted({as_rat(v) for v in values})
    for v in out:
        if not in_unit(v):
            raise OutOfRange(f"stop value {v} is outside [0, 1]")
    return out


def plateau_layout(lo: Fraction, hi: Fraction, y_lo: Fraction, y_hi: Fraction,
                   values: Sequence[Fraction]) -> list:
    """Anchors of a map ``[lo, hi] -> [y_lo, y_hi]`` with plateaus at ``values``.

    ``[lo, hi]`` is cut into ``2k + 1`` equal pieces; the even-numbered ones
    (1-based) are plateaus at the sorted values, the rest are linear.
    """
    k = len(values)
    width = (hi - lo) / (2 * k + 1)
    anchors = [(lo, y_lo)]
    for i, c in enumerate(values, start=1):
        anchors.append((lo + (2 * i - 1) * width, c))
        anchors.append((lo + 2 * i * width, c))
    anchors.append((hi, y_hi))
    return anchors


def realize_values(values: Iterable) -> Reparam:
    """Canonical reparametrization whose stop-value set is ``values``.

    >>> realize_values(["1/2"]).points[1]
    (Fraction(1, 3), Fraction(1, 2))
    """
    return Reparam(plateau_layout(ZERO, ONE, ZERO, ONE, _sorted_values(values)))


def countable_builder(values: Sequence, depth: int) -> Reparam:
    """Stage ``depth`` of the plateau-insertion sequence for ``values``.

    Stage ``n + 1`` replaces a neighbourhood of the preimage of the next
    value by a plateau whose half-width ``h`` keeps the change in sup-norm
    equal to ``slope * h <= 2**-(n + 2)``.  Values 0 and 1 have their
    preimage on the boundary; there the plateau is ``[0, w]`` (resp.
    ``[1 - w, 1]``) with ``slope * w <= 2**-(n + 2)``.
    """
    seq = [as_rat(v) for v in values]
    if len(set(seq)) != len(seq):
        raise DuplicateValue("values must be distinct")
    for v in seq:
        if not in_unit(v):
            raise OutOfRange(f"value {v} is outside [0, 1]")
    if not 0 <= depth <= len(seq):
        raise OutOfRange(f"depth {depth} not in 0..{len(seq)}")

    stops = []
    phi = IDENTITY
    for n, c in enumerate(seq[:depth]):
        bound = Fraction(1, 2 ** n)
        x_star = phi.preimage(c)[0]
        host = next(k for k in StopData(stops).move_intervals()
                    if k.lo <= x_star <= k.hi)
        slope = (phi(host.hi) - phi(host.lo)) / (host.hi - host.lo)
        if c == ZERO:
            w = min(host.hi - host.lo, bound / slope) / 4
            new = Interval(ZERO, w)
        elif c == ONE:
            w = min(host.hi - host.lo, bound / slope) / 4
            new = Interval(ONE - w, ONE)
        else:
            h = min(x_star - host.lo, host.hi - x_star, bound / slope) / 4
            new = Interval(x_star - h, x_star + h)
        stops = sorted(stops + [(new, c)], key=lambda pair: pair[0])
        phi = realize(stops)
    return phi


def approx_homeo(f: Reparam, n: int) -> Homeo:
    """Homeomorphism within sup-distance ``1/n`` of ``f``.

    Interpolates ``(c_k, k/n)`` where ``c_k`` is the least preimage of
    ``k/n``; on ``[c_k, c_{k+1}]`` both maps stay in ``[k/n, (k+1)/n]``.
    """
    if n < 1:
        raise OutOfRange("n must be at least 1")
    anchors = [(ZERO, ZERO)]
    for k in range(1, n):
        anchors.append((f.preimage(Fraction(k, n))[0], Fraction(k, n)))
    anchors.append((ONE, ONE))
    return Homeo(anchors)


def approx_noninjective(f: Reparam, n: int) -> Reparam:
    """Non-injective reparametrization within sup-distance ``1/n`` of ``f``.

    Agrees with ``f`` from the least preimage ``c`` of ``1/n`` on; vanishes
    on ``[0, c/2]`` and rises linearly to ``f(c)`` on ``[c/2, c]``.
    """
    if n < 1:
        raise OutOfRange("n must be at least 1")
    c = f.preimage(Fraction(1, n))[0]
    anchors = [(ZERO, ZERO), (c / 2, ZERO), (c, f(c))]
    anchors += [(x, y) for x, y in f.points if x > c]
    return Reparam(anchors)

