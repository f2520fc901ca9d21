from fractions import Fraction as F

import pytest
from hypothesis import given

import oracles
from generators import A, AB, B, ID, homeos, reparams, unit_rationals
from pltrace import (BadEndpoints, Homeo, NotInjective, NotMonotone, OutOfRange, Reparam,
                     canonicalize, compose, convex_combination, evaluate, invert, is_homeo,
                     pointwise_max, pointwise_min, sup_distance)


class TestCanonicalize:
    def test_collinear_midpoint_is_merged(self):
        assert canonicalize([(0, 0), (F(1, 2), F(1, 2)), (1, 1)]) == ID
        assert canonicalize([(0, 0), (F(1, 2), F(1, 2)), (1, 1)]).points == ID.points

    def test_decreasing_values_rejected(self):
        with pytest.raises(NotMonotone):
            canonicalize([(0, 0), (F(1, 2), F(3, 4)), (1, F(1, 2))])

    def test_canonical_input_kept(self):
        assert A.points == ((0, 0), (F(1, 4), F(1, 2)), (F(3, 4), F(1, 2)), (1, 1))

    @pytest.mark.parametrize("points, error", [
        ([(0, 0), (1, F(1, 2))], BadEndpoints),
        ([(0, F(1, 8)), (1, 1)], BadEndpoints),
        ([], BadEndpoints),
        ([(0, 0), (F(1, 2), F(3, 2)), (1, 1)], OutOfRange),
        ([(0, 0), (F(1, 2), F(1, 4)), (F(1, 2), F(1, 2)), (1, 1)], NotMonotone),
    ])
    def test_rejections(self, points, error):
        with pytest.raises(error):
            Reparam(points)

    def test_floats_refused(self):
        with pytest.raises(TypeError):
            Reparam([(0, 0), (0.5, 0.5), (1, 1)])

    def test_rational_strings_accepted(self):
        assert Reparam([("0", "0"), ("1/4", "1/2"), ("3/4", "1/2"), ("1", "1")]) == A

    def test_plateau_runs_merge(self):
        f = Reparam([(0, 0), (F(1, 4), F(1, 2)), (F(1, 2), F(1, 2)), (F(3, 4), F(1, 2)), (1, 1)])
        assert f == A


class TestEvaluate:
    @pytest.mark.parametrize("t, value", [(0, 0), (F(1, 2), F(1, 2)), (F(7, 8), F(3, 4)), (1, 1)])
    def test_fixture_values(self, t, value):
        assert evaluate(A, t) == value
        assert oracles.interp(A.points, t) == value

    @pytest.mark.parametrize("t", [F(-1, 8), F(9, 8)])
    def test_out_of_range(self, t):
        with pytest.raises(OutOfRange):
            A(t)

    @given(reparams, unit_rationals)
    def test_matches_interpolation_oracle(self, f, t):
        assert f(t) == oracles.interp(f.points, t)


class TestCompose:
    def test_identity_laws_on_fixture(self):
        assert compose(A, ID) == A
        assert compose(ID, A) == A

    def test_fixture_composite(self):
        assert compose(A, B) == AB
        # brute force: every breakpoint and every segment midpoint of the grid
        grid = oracles.compose_grid(A.points, B.points)
        samples = grid + [(a + b) / 2 for a, b in zip(grid, grid[1:])]
        for t in samples:
            assert AB(t) == oracles.interp(A.points, oracles.interp(B.points, t))

    @given(reparams, reparams)
    def test_pointwise_oracle(self, f, g):
        h = compose(f, g)
        grid = oracles.compose_grid(f.points, g.points)
        for t in grid + [(a + b) / 2 for a, b in zip(grid, grid[1:])]:
            assert h(t) == f(g(t))

    @given(reparams, reparams, reparams)
    def test_associative(self, f, g, h):
        assert compose(f, compose(g, h)) == compose(compose(f, g), h)

    @given(reparams)
    def test_identity(self, f):
        assert compose(f, ID) == f == compose(ID, f)

    @given(homeos, homeos)
    def test_homeos_closed(self, h, k):
        assert is_homeo(compose(h, k))
        assert isinstance(compose(h, k), Homeo)


class TestImageLaw:
    @given(reparams, unit_rationals, unit_rationals)
    def test_interval_maps_onto_interval(self, f, a, b):
        a, b = min(a, b), max(a, b)
        inside = [a, b] + [x for x in f.xs if a <= x <= b]
        images = {f(t) for t in inside}
        assert min(images) == f(a) and max(images) == f(b)
        assert all(f(a) <= y <= f(b) for y in images)


class TestCanonicality:
    @given(reparams, reparams)
    def test_pointwise_equal_iff_same_breakpoints(self, f, g):
        assert (f.points == g.points) == oracles.same_function(f.points, g.points)

    @given(reparams)
    def test_redundant_breakpoints_vanish(self, f):
        xs = sorted(set(f.xs) | {(a + b) / 2 for a, b in zip(f.xs, f.xs[1:])})
        assert Reparam((x, f(x)) for x in xs).points == f.points


class TestHomeo:
    def test_invert_examples(self):
        assert invert(ID) == ID
        h = Reparam([(0, 0), (F(1, 4), F(1, 2)), (1, 1)])
        assert invert(h).points == ((0, 0), (F(1, 2), F(1, 4)), (1, 1))
        with pytest.raises(NotInjective):
            invert(A)

    def test_is_homeo_examples(self):
        assert is_homeo(ID)
        assert not is_homeo(A)
        assert is_homeo(Reparam([(0, 0), (F(1, 4), F(1, 2)), (1, 1)]))

    def test_constructor_refuses_plateau(self):
        with pytest.raises(NotInjective):
            Homeo(A.points)

    def test_strict_maps_promote(self):
        assert type(Reparam([(0, 0), (F(1, 3), F(1, 2)), (1, 1)])) is Homeo
        assert type(A) is Reparam

    @given(homeos)
    def test_invert_is_involution(self, h):
        assert invert(invert(h)) == h
        assert compose(h, invert(h)) == ID == compose(invert(h), h)


class TestFunctionLattice:
    def test_examples(self):
        assert pointwise_max(A, A) == A
        assert pointwise_max(A, B) == A
        assert pointwise_max(A, ID).points == ((0, 0), (F(1, 4), F(1, 2)), (F(1, 2), F(1, 2)), (1, 1))
        assert pointwise_min(A, ID).points == ((0, 0), (F(1, 2), F(1, 2)), (F(3, 4), F(1, 2)), (1, 1))

    @given(reparams, reparams)
    def test_max_min_pointwise(self, f, g):
        hi, lo = pointwise_max(f, g), pointwise_min(f, g)
        for t in oracles.dense_grid(48) + list(f.xs) + list(g.xs):
            assert hi(t) == max(f(t), g(t))
            assert lo(t) == min(f(t), g(t))

    @given(reparams, reparams, reparams)
    def test_laws(self, f, g, h):
        for op in (pointwise_max, pointwise_min):
            assert op(f, g) == op(g, f)
            assert op(f, op(g, h)) == op(op(f, g), h)
            assert op(f, f) == f
        assert pointwise_max(f, pointwise_min(f, g)) == f
        assert pointwise_min(f, pointwise_max(f, g)) == f


class TestConvexCombination:
    def test_examples(self):
        assert convex_combination(A, ID, 0) == A
        assert convex_combination(A, ID, 1) == ID
        assert convex_combination(A, ID, F(1, 2)).points == (
            (0, 0), (F(1, 4), F(3, 8)), (F(3, 4), F(5, 8)), (1, 1))

    @pytest.mark.parametrize("s", [F(-1, 2), F(3, 2)])
    def test_weight_out_of_range(self, s):
        with pytest.raises(OutOfRange):
            convex_combination(A, ID, s)

    @given(reparams, reparams, unit_rationals)
    def test_pointwise(self, f, g, s):
        h = convex_combination(f, g, s)
        for t in set(f.xs) | set(g.xs):
            assert h(t) == (1 - s) * f(t) + s * g(t)


class TestSupDistance:
    def test_examples(self):
        assert sup_distance(A, A) == 0
        assert sup_distance(A, ID) == F(1, 4)
        assert sup_distance(A, B) == F(3, 8)
        assert oracles.sup_distance(A.points, B.points) == F(3, 8)

    @given(reparams, reparams)
    def test_matches_oracle(self, f, g):
        assert sup_distance(f, g) == oracles.sup_distance(f.points, g.points)

    @given(reparams, reparams, reparams)
    def test_metric(self, f, g, h):
        assert sup_distance(f, g) == sup_distance(g, f)
        assert (sup_distance(f, g) == 0) == (f == g)
        assert sup_distance(f, h) <= sup_distance(f, g) + sup_distance(g, h)


class TestValueSemantics:
    def test_hashable_and_immutable(self):
        assert len({A, Reparam(A.points), B}) == 2
        with pytest.raises(AttributeError):
            A._xs = ()

    @given(reparams)
    def test_preimage_bounds(self, f):
        for y in set(f.ys):
            lo, hi = f.preimage(y)
            assert f(lo) == y == f(hi)
            eps = F(1, 10**6)
            if lo > 0:
                assert f(lo - min(lo, eps)) < y
            if hi < 1:
                assert f(hi + min(1 - hi, eps)) > y
