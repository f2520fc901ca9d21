from fractions import Fraction as F

import pytest
from hypothesis import assume, given

from generators import A, AB, B, ID, homeos, reparams, rngs
from pltrace import (BadExtraStops, Homeo, NoLeftFactor, NoRightLift, compose, is_homeo,
                     left_factor, right_lift, stop_data, stop_values)


def minimal_lift_values(eta, phi):
    return {phi.preimage(c)[0] for c in stop_values(eta) - stop_values(phi)}


def refines(phi, eta):
    """Every stop interval of phi sits inside one of eta."""
    eta_stops = stop_data(eta).intervals
    return all(any(k.contains_interval(j) for k in eta_stops) for j in stop_data(phi).intervals)


class TestRightLift:
    def test_examples(self):
        assert right_lift(A, ID) == A
        with pytest.raises(NoRightLift):
            right_lift(ID, A)
        psi = right_lift(AB, A)
        assert psi.points == ((0, 0), (F(1, 2), F(1, 4)), (F(11, 12), F(3, 4)), (1, 1))
        assert isinstance(psi, Homeo)
        assert compose(A, psi) == AB
        assert psi != B

    @given(reparams, reparams)
    def test_positive_instances(self, phi, psi):
        eta = compose(phi, psi)
        lift = right_lift(eta, phi)
        assert compose(phi, lift) == eta
        assert stop_values(lift) == minimal_lift_values(eta, phi)
        if stop_values(phi) == stop_values(eta):
            assert is_homeo(lift)

    @given(reparams, reparams)
    def test_existence_criterion(self, eta, phi):
        if stop_values(phi) <= stop_values(eta):
            assert compose(phi, right_lift(eta, phi)) == eta
        else:
            with pytest.raises(NoRightLift):
                right_lift(eta, phi)

    @given(reparams, reparams, rngs)
    def test_extra_stops(self, phi, psi, rnd):
        eta = compose(phi, psi)
        required = minimal_lift_values(eta, phi)
        pool = sorted({j.lo for j in stop_data(phi).intervals} | {j.hi for j in stop_data(phi).intervals}
                      | {j.midpoint for j in stop_data(phi).intervals})
        chosen = set(rnd.sample(pool, rnd.randint(0, len(pool)))) | required
        lift = right_lift(eta, phi, chosen)
        assert stop_values(lift) == chosen
        assert compose(phi, lift) == eta

    def test_extra_stops_must_contain_required(self):
        with pytest.raises(BadExtraStops):
            right_lift(AB, ID, [])

    def test_extra_stops_must_lie_in_stop_set(self):
        with pytest.raises(BadExtraStops):
            right_lift(AB, A, [F(1, 8)])

    def test_extra_stops_inside_plateau(self):
        lift = right_lift(AB, A, [F(1, 2)])
        assert stop_values(lift) == {F(1, 2)}
        assert compose(A, lift) == AB


class TestLeftFactor:
    def test_examples(self):
        assert left_factor(A, ID) == A
        assert left_factor(AB, B) == A
        with pytest.raises(NoLeftFactor):
            left_factor(ID, A)

    @given(reparams, reparams)
    def test_round_trip(self, psi, phi):
        assert left_factor(compose(psi, phi), phi) == psi

    @given(reparams, reparams)
    def test_existence_criterion(self, eta, phi):
        if refines(phi, eta):
            assert compose(left_factor(eta, phi), phi) == eta
        else:
            with pytest.raises(NoLeftFactor):
                left_factor(eta, phi)

    @given(homeos, reparams)
    def test_negative_instances(self, eta, phi):
        # a homeomorphism has no plateau to absorb phi's stop intervals
        assume(len(stop_data(phi)) > 0)
        with pytest.raises(NoLeftFactor):
            left_factor(eta, phi)

    @given(reparams, reparams, homeos)
    def test_shifted_composite_decided(self, psi, phi, h):
        # eta = psi o phi o h keeps the shape of psi o phi but moves its plateaus
        eta = compose(compose(psi, phi), h)
        assert (not refines(phi, eta)) or compose(left_factor(eta, phi), phi) == eta

    @given(homeos, reparams)
    def test_homeo_factor(self, h, eta):
        assert compose(left_factor(eta, h), h) == eta
