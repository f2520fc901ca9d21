"""Reparametrizations up to homeomorphism, as a distributive lattice.

Right composition with homeomorphisms preserves the stop-value set, and the
stop-value set is a complete invariant of the class.  Classes are therefore
keyed by finite sets of rationals, ordered by inclusion, with union as join
and intersection as meet.  The witness functions build the actual
reparametrizations that realize a join or a meet.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Tuple

from .factorization import left_factor, right_lift
from .plmap import Homeo, Reparam, as_rat, compose
from .stopmap import StopData, realize, realize_values, stop_data, stop_values


@dataclass(frozen=True)
class TraceClass:
    """Class of a reparametrization modulo Homeo+(I).

    ``values`` is the sorted stop-value set; ``representative`` is its
    canonical realization.
    """

    values: Tuple[Fraction, ...]
    representative: Reparam = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        vals = tuple(sorted({as_rat(v) for v in self.values}))
        object.__setattr__(self, "values", vals)
        object.__setattr__(self, "representative", realize_values(vals))

    def value_set(self) -> frozenset:
        return frozenset(self.values)


BOTTOM = TraceClass(())


def class_of(f: Reparam) -> TraceClass:
    return TraceClass(stop_values(f))


def leq(a: TraceClass, b: TraceClass) -> bool:
    return a.value_set() <= b.value_set()


def join(a: TraceClass, b: TraceClass) -> TraceClass:
    return TraceClass(a.value_set() | b.value_set())


def meet(a: TraceClass, b: TraceClass) -> TraceClass:
    return TraceClass(a.value_set() & b.value_set())


def join_witness(f1: Reparam, f2: Reparam) -> Tuple[Reparam, Reparam]:
    """``(psi1, psi2)`` with ``f1 o psi1 == f2 o psi2``.

    The common composite has stop values ``C(f1) | C(f2)``.  ``psi1`` adds
    plateaus at the (unique) ``f1``-preimages of the stop values only ``f2``
    has; ``psi2`` is the minimal right lift of that composite through ``f2``.
    """
    c1, c2 = stop_values(f1), stop_values(f2)
    psi1 = realize_values(f1.preimage(c)[0] for c in c2 - c1)
    psi2 = right_lift(compose(f1, psi1), f2)
    return psi1, psi2


def meet_witness(f1: Reparam, f2: Reparam) -> Tuple[Homeo, Reparam, Reparam, Reparam]:
    """``(rho, phi, psi1, psi2)`` exhibiting a common right factor.

    ``phi`` keeps the stops of ``f1`` whose value is also a stop value of
    ``f2``, so its stop-value set is the intersection.  Then
    ``compose(psi1, phi) == f1`` and ``compose(psi2, phi) == compose(f2, rho)``,
    where the homeomorphism ``rho`` carries each stop interval of ``phi``
    linearly onto the stop interval of ``f2`` with the same value.
    """
    sd1, sd2 = stop_data(f1), stop_data(f2)
    shared = sd1.value_set() & sd2.value_set()
    sd = StopData((j, c) for j, c in sd1 if c in shared)
    phi = realize(sd)
    psi1 = left_factor(f1, phi)

    anchors = [(Fraction(0), Fraction(0))]
    for j, c in sd:
        target = sd2.interval_of(c)
        for x, y in ((j.lo, target.lo), (j.hi, target.hi)):
            if x != anchors[-1][0]:
                anchors.append((x, y))
    if anchors[-1][0] != 1:
        anchors.append((Fraction(1), Fraction(1)))
    rho = Homeo(anchors)
    psi2 = left_factor(compose(f2, rho), phi)
    return rho, phi, psi1, psi2

