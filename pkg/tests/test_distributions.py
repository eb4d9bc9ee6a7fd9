import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from divkit import (
    DomainError,
    UndefinedAtomError,
    ValidationError,
    g_big,
    make_distribution,
    mixture,
    relative_information,
    spectrum,
    spectrum_eval,
)
from helpers import random_pair


class TestMakeDistribution:
    def test_uniform_normalization(self):
        assert make_distribution([1, 1]).masses == (0.5, 0.5)

    def test_already_normalized(self):
        assert make_distribution([0.7, 0.3]).masses == (0.7, 0.3)

    def test_general_normalization(self):
        # oracle: divide by the total 10
        assert make_distribution([2, 3, 5]).masses == (0.2, 0.3, 0.5)

    @pytest.mark.parametrize("bad", [[0, 0], [-1, 2], [math.nan, 1], [math.inf, 1], []])
    def test_invalid_weights(self, bad):
        with pytest.raises(ValidationError):
            make_distribution(bad)

    def test_atom_order_preserved(self):
        d = make_distribution([5, 2, 3])
        assert d.masses == (0.5, 0.2, 0.3)


class TestRelativeInformation:
    def test_direct_ratio(self, bern_pair):
        p, q = bern_pair
        assert relative_information(p, q, 0) == pytest.approx(math.log(1.4), abs=1e-15)

    def test_identical_measures(self):
        d = make_distribution([0.25, 0.75])
        assert relative_information(d, d, 1) == 0.0

    def test_point_mass(self):
        p = make_distribution([1, 0])
        q = make_distribution([0.5, 0.5])
        assert relative_information(p, q, 0) == pytest.approx(math.log(2), abs=1e-15)
        assert relative_information(p, q, 1) == -math.inf
        assert relative_information(q, p, 1) == math.inf

    def test_undefined_atom(self):
        p = make_distribution([1, 0])
        with pytest.raises(UndefinedAtomError):
            relative_information(p, p, 1)

    def test_antisymmetry_exact(self):
        rng = np.random.default_rng(7)
        for _ in range(50):
            p, q = random_pair(rng, int(rng.integers(2, 7)))
            for i in range(len(p)):
                assert relative_information(p, q, i) == -relative_information(q, p, i)


class TestSpectrum:
    def test_bernoulli_pair(self, bern_pair):
        s = spectrum(*bern_pair)
        assert s.breakpoints == (
            math.log(0.3) - math.log(0.5),
            math.log(0.7) - math.log(0.5),
        )
        assert s.cum_masses == (0.3, 1.0)
        assert s.singular_mass_p == 0.0 and s.singular_mass_q == 0.0

    def test_identical_uniform(self):
        d = make_distribution([1, 1])
        s = spectrum(d, d)
        assert s.breakpoints == (0.0,)
        assert s.cum_masses == (1.0,)

    def test_singular_atom(self):
        p = make_distribution([0.5, 0.5, 0])
        q = make_distribution([0.25, 0.25, 0.5])
        s = spectrum(p, q)
        assert s.breakpoints == (math.log(0.5) - math.log(0.25),)
        assert s.cum_masses == (1.0,)
        assert s.singular_mass_q == 0.5
        assert s.singular_mass_p == 0.0
        assert spectrum_eval(s, math.log(2) - 1e-9) == 0.0

    def test_tie_merging(self):
        # both atoms share the ratio 2 computed from identical mass values
        p = make_distribution([0.4, 0.4, 0.2])
        q = make_distribution([0.2, 0.2, 0.6])
        s = spectrum(p, q)
        assert len(s.breakpoints) == 2
        assert s.cum_masses[-1] == pytest.approx(1.0, abs=1e-15)

    def test_mismatched_alphabets(self):
        with pytest.raises(ValidationError):
            spectrum(make_distribution([1]), make_distribution([1, 1]))

    def test_swap_negates_breakpoints_exactly(self):
        rng = np.random.default_rng(11)
        for _ in range(50):
            p, q = random_pair(rng, int(rng.integers(2, 8)))
            fwd = spectrum(p, q).breakpoints
            rev = spectrum(q, p).breakpoints
            assert set(rev) == {-x for x in fwd}

    def test_full_support_masses(self):
        rng = np.random.default_rng(13)
        for _ in range(50):
            p, q = random_pair(rng, 5)
            s = spectrum(p, q)
            assert s.singular_mass_p == 0.0 and s.singular_mass_q == 0.0
            assert abs(s.cum_masses[-1] - 1.0) <= 1e-14


class TestSpectrumEval:
    def test_between_breakpoints(self, bern_pair):
        s = spectrum(*bern_pair)
        assert spectrum_eval(s, 0.0) == 0.3

    def test_right_continuity_at_atom(self, bern_pair):
        s = spectrum(*bern_pair)
        assert spectrum_eval(s, math.log(0.7) - math.log(0.5)) == 1.0

    def test_below_all_breakpoints(self, bern_pair):
        s = spectrum(*bern_pair)
        assert spectrum_eval(s, -1e10) == 0.0

    def test_monotone(self, bern_pair):
        s = spectrum(*bern_pair)
        xs = np.linspace(-2, 2, 101)
        vals = [spectrum_eval(s, float(x)) for x in xs]
        assert all(a <= b for a, b in zip(vals, vals[1:]))


class TestGBig:
    def test_identical_measures_zero(self):
        d = make_distribution([0.3, 0.7])
        for beta in (0.1, 0.5, 1.0, 2.0, 50.0):
            assert g_big(d, d, beta) == 0.0

    def test_above_one(self, bern_pair):
        assert g_big(*bern_pair, 1.2) == pytest.approx(0.7, abs=1e-15)

    def test_below_one(self, bern_pair):
        assert g_big(*bern_pair, 0.5) == 0.0

    @pytest.mark.parametrize("beta", [0.0, -1.0, math.inf])
    def test_domain(self, bern_pair, beta):
        with pytest.raises(DomainError):
            g_big(*bern_pair, beta)


class TestMixture:
    def test_endpoints(self, bern_pair):
        p, q = bern_pair
        assert mixture(p, q, 0.0).masses == q.masses
        assert mixture(p, q, 1.0).masses == p.masses

    def test_midpoint(self, bern_pair):
        assert mixture(*bern_pair, 0.5).masses == (0.6, 0.4)

    @pytest.mark.parametrize("lam", [-0.1, 1.1])
    def test_domain(self, bern_pair, lam):
        with pytest.raises(DomainError):
            mixture(*bern_pair, lam)


@settings(max_examples=100, derandomize=True)
@given(
    st.lists(st.floats(min_value=1e-3, max_value=1.0), min_size=2, max_size=8),
    st.lists(st.floats(min_value=1e-3, max_value=1.0), min_size=2, max_size=8),
)
def test_spectrum_is_a_cdf(w1, w2):
    n = min(len(w1), len(w2))
    p = make_distribution(w1[:n])
    q = make_distribution(w2[:n])
    s = spectrum(p, q)
    assert all(a < b for a, b in zip(s.breakpoints, s.breakpoints[1:]))
    assert all(a <= b + 1e-15 for a, b in zip(s.cum_masses, s.cum_masses[1:]))
    assert abs(s.cum_masses[-1] - (1.0 - s.singular_mass_p)) <= 1e-13
