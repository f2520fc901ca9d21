"""Right lifts and left factors in the monoid of reparametrizations.

``right_lift(eta, phi)`` solves ``phi o psi = eta`` for ``psi``; it exists
iff every stop value of ``phi`` is a stop value of ``eta``.
``left_factor(eta, phi)`` solves ``psi o phi = eta``; it exists iff every
stop interval of ``phi`` sits inside a stop interval of ``eta``, and is
then unique.
"""

from __future__ import annotations

from typing import Iterable, Optional

from .errors import BadExtraStops, NoLeftFactor, NoRightLift
from .plmap import Reparam, as_rat, factor_through, merged_grid
from .stopmap import plateau_layout, stop_data


def _move_anchors(eta: Reparam, phi: Reparam, lo, hi) -> list:
    """Anchors of ``phi^{-1} o eta`` on a move interval ``[lo, hi]`` of eta."""
    y_lo, y_hi = eta(lo), eta(hi)
    ts = {x for x in eta.xs if lo <= x <= hi}
    ts.update(eta.preimage(w)[0] for w in phi.ys if y_lo < w < y_hi)
    anchors = []
    for t in sorted(ts):
        y = eta(t)
        # At the left end leave phi's plateau from its right edge, and enter
        # the next plateau at its left edge.
        anchors.append((t, phi.preimage(y)[1] if t == lo else phi.preimage(y)[0]))
    return anchors


def right_lift(eta: Reparam, phi: Reparam, extra_stops: Optional[Iterable] = None) -> Reparam:
    """Return ``psi`` with ``compose(phi, psi) == eta``.

    Without ``extra_stops`` the stop values of ``psi`` are exactly the
    ``phi``-preimages of the stop values of ``eta`` missing from ``phi``,
    and ``psi`` is a homeomorphism when ``phi`` and ``eta`` share all stop
    values.  ``extra_stops`` prescribes the full stop-value set of ``psi``:
    it must contain those preimages and may add points of the stop set of
    ``phi``, which become plateaus inside the corresponding stop intervals
    of ``eta``.

    Raises :class:`NoRightLift` or :class:`BadExtraStops`.
    """
    sd_eta, sd_phi = stop_data(eta), stop_data(phi)
    c_eta, c_phi = sd_eta.value_set(), sd_phi.value_set()
    if not c_phi <= c_eta:
        missing = sorted(c_phi - c_eta)
        raise NoRightLift(f"stop values {[str(c) for c in missing]} of phi are not stop values of eta")

    required = {phi.preimage(c)[0] for c in c_eta - c_phi}
    extras = set()
    if extra_stops is not None:
        wanted = {as_rat(c) for c in extra_stops}
        if not required <= wanted:
            raise BadExtraStops("extra_stops must contain every phi-preimage of the new stop values of eta")
        extras = wanted - required
        stray = sorted(e for e in extras if not sd_phi.in_stop_set(e))
        if stray:
            raise BadExtraStops(f"{[str(e) for e in stray]} lie outside the stop set of phi")

    regions = [(j, c) for j, c in sd_eta] + [(k, None) for k in sd_eta.move_intervals()]
    regions.sort(key=lambda pair: pair[0])
    anchors = []
    for interval, value in regions:
        if value is None:
            piece = _move_anchors(eta, phi, interval.lo, interval.hi)
        elif value in c_phi:
            target = sd_phi.interval_of(value)
            inside = sorted(e for e in extras if e in target)
            piece = plateau_layout(interval.lo, interval.hi, target.lo, target.hi, inside)
        else:
            u = phi.preimage(value)[0]
            piece = [(interval.lo, u), (interval.hi, u)]
        for t, y in piece:
            if anchors and anchors[-1][0] == t:
                continue
            anchors.append((t, y))
    return Reparam(anchors)


def left_factor(eta: Reparam, phi: Reparam) -> Reparam:
    """Return the unique ``psi`` with ``compose(psi, phi) == eta``.

    ``psi(x) = eta(t)`` for any ``t`` with ``phi(t) = x``.  Raises
    :class:`NoLeftFactor` if some stop interval of ``phi`` is not inside a
    stop interval of ``eta``.
    """
    for j in stop_data(phi).intervals:
        if eta(j.lo) != eta(j.hi):
            raise NoLeftFactor(f"stop interval {j!r} of phi is not inside a stop interval of eta")
    return Reparam(factor_through(phi, merged_grid(eta, phi), eta))
