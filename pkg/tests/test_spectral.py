import random
from fractions import Fraction
from math import comb

import pytest

from flagspec import (
    KahlerClass,
    LineBundleClass,
    NotKahlerError,
    NotSpincError,
    PiScalar,
    UnitMismatchError,
    build_flag,
    dirac_lower_bound,
    harmonic_spinors,
    is_spinc,
    ke_class,
    scalar_curvature,
    theta_spectrum,
    twist_weight,
    weitzenboeck_min,
    weitzenboeck_spectrum,
)
from flagspec.spectral import signed_sum_distribution, spinc_parity

from configs import all_flags, parity_representative, random_configuration
from oracles import brute_force_remainder, brute_force_theta

CP2 = build_flag("A2", [1])
P1 = build_flag("A1", [1])
PLAIN1 = KahlerClass([1])


def configurations(n=200, seed=2024):
    rng = random.Random(seed)
    return [random_configuration(rng) for _ in range(n)]


CONFIGS = configurations()


class TestSpinc:
    def test_examples(self):
        assert is_spinc(P1, LineBundleClass([0]))
        assert not is_spinc(CP2, LineBundleClass([0]))
        assert is_spinc(CP2, LineBundleClass([1]))

    @pytest.mark.parametrize("X", [X for X in all_flags(6) if len(X.painted) == X.rank],
                             ids=str)
    def test_full_flags_are_spin(self, X):
        assert is_spinc(X, LineBundleClass([0] * X.rank))
        assert spinc_parity(X) == (0,) * X.rank

    def test_projective_spaces_spin_iff_odd(self):
        for n in range(1, 9):
            X = build_flag(("A", n), [1])
            assert is_spinc(X, LineBundleClass([0])) == (n % 2 == 1)

    def test_length_checked(self):
        with pytest.raises(ValueError):
            is_spinc(CP2, LineBundleClass([1, 1]))


class TestTwistWeight:
    def test_examples(self):
        assert twist_weight(CP2, LineBundleClass([3])).coeffs == (0,)
        assert twist_weight(CP2, LineBundleClass([1])).coeffs == (-1,)
        assert twist_weight(P1, LineBundleClass([6])).coeffs == (2,)

    def test_rejects_non_spinc(self):
        with pytest.raises(NotSpincError):
            twist_weight(CP2, LineBundleClass([2]))


class TestTheta:
    def test_theta_equal_omega_is_binomial(self):
        for X in (CP2, P1, build_flag("B3", [1, 3])):
            spec = theta_spectrum(X, KahlerClass([2] * len(X.painted)),
                                  KahlerClass([2] * len(X.painted)))
            m = X.dim_c
            assert spec.as_dict() == {Fraction(m - 2 * k): comb(m, k) for k in range(m + 1)}
            assert spec.imaginary

    def test_cp2_example(self):
        spec = theta_spectrum(CP2, KahlerClass([3]), PLAIN1)
        assert spec.as_dict() == {-6: 1, 0: 2, 6: 1}

    def test_zero_theta(self):
        X = build_flag("C3", [2])
        spec = theta_spectrum(X, KahlerClass([0]), KahlerClass([5]))
        assert spec.as_dict() == {0: 2 ** X.dim_c}

    def test_unit_mismatch(self):
        with pytest.raises(UnitMismatchError):
            theta_spectrum(CP2, KahlerClass([1], pi_units=True), PLAIN1)

    def test_non_kahler(self):
        with pytest.raises(NotKahlerError):
            theta_spectrum(CP2, KahlerClass([1]), KahlerClass([-1]))

    def test_matches_brute_force_and_is_symmetric(self):
        rng = random.Random(5)
        for X, _, omega in CONFIGS[:60]:
            theta = KahlerClass([Fraction(rng.randint(-6, 6), rng.randint(1, 3))
                                 for _ in X.painted], omega.pi_units)
            spec = theta_spectrum(X, theta, omega)
            assert spec.as_dict() == dict(brute_force_theta(X, theta.coeffs, omega.coeffs))
            d = spec.as_dict()
            assert all(d[-v] == k for v, k in d.items())


class TestWeitzenboeck:
    def test_cp2_example(self):
        spec = weitzenboeck_spectrum(CP2, LineBundleClass([1]), PLAIN1)
        assert spec.as_dict() == {4: 1, 6: 2, 8: 1}
        assert spec.pi_power == 1
        assert spec.min_eigenvalue == PiScalar(4, 1)

    def test_p1_example(self):
        spec = weitzenboeck_spectrum(P1, LineBundleClass([0]), PLAIN1)
        assert spec.as_dict() == {2: 2}

    @pytest.mark.parametrize("X", [X for X in all_flags(4) if not any(spinc_parity(X))],
                             ids=str)
    def test_trivial_bundle_gives_quarter_scalar_curvature(self, X):
        omega = KahlerClass(range(1, len(X.painted) + 1), pi_units=True)
        spec = weitzenboeck_spectrum(X, LineBundleClass([0] * len(X.painted)), omega)
        quarter = scalar_curvature(X, omega) / 4
        assert spec.entries == ((quarter.value, 2 ** X.dim_c),)
        assert spec.pi_power == quarter.pi_power == 0

    def test_requires_spinc_and_kahler(self):
        with pytest.raises(NotSpincError):
            weitzenboeck_spectrum(CP2, LineBundleClass([0]), PLAIN1)
        with pytest.raises(NotKahlerError):
            weitzenboeck_spectrum(CP2, LineBundleClass([1]), KahlerClass([0]))


class TestMinimumAndBound:
    def test_examples(self):
        assert weitzenboeck_min(CP2, LineBundleClass([1]), PLAIN1) == PiScalar(4, 1)
        ke = ke_class(CP2, PiScalar(24))
        assert weitzenboeck_min(CP2, LineBundleClass([-1]), ke) == PiScalar(4)
        assert weitzenboeck_min(P1, LineBundleClass([2]), PLAIN1) == PiScalar(0)

    @pytest.mark.parametrize("m", range(1, 6))
    def test_projective_space_formula(self, m):
        X = build_flag(("A", m), [1])
        p = m + 1
        ke = ke_class(X, PiScalar(4 * m * (m + 1)))
        for q in range(-p, p + 1):
            if (p + q) % 2:
                continue
            b = dirac_lower_bound(X, LineBundleClass([q]), ke)
            assert b.value == PiScalar((1 - Fraction(abs(q), p)) * m * (m + 1))
            assert not b.vacuous

    def test_canonical_and_anticanonical_bound_zero(self):
        for X in all_flags(3):
            delta = list(X.restrict(X.delta_p))
            omega = KahlerClass([1] * len(delta))
            for L in (delta, [-d for d in delta]):
                assert dirac_lower_bound(X, LineBundleClass(L), omega).value == PiScalar(0)

    def test_vacuous_flag(self):
        b = dirac_lower_bound(P1, LineBundleClass([4]), PLAIN1)
        assert b.value == PiScalar(-2, 1) and b.vacuous


class TestHarmonic:
    def test_examples(self):
        none = harmonic_spinors(CP2, LineBundleClass([1]))
        assert not none.has_harmonic_spinors and none.index == 0
        assert none.twist_weight.coeffs == (-1,)
        h = harmonic_spinors(CP2, LineBundleClass([3]))
        assert (h.concentration_degree, h.kernel_dimension, h.index) == (0, 1, 1)
        h = harmonic_spinors(CP2, LineBundleClass([-3]))
        assert (h.concentration_degree, h.kernel_dimension, h.index) == (2, 1, 1)
        assert h.cohomology.word == (2, 1) or len(h.cohomology.word) == 2

    def test_rejects_non_spinc(self):
        with pytest.raises(NotSpincError):
            harmonic_spinors(CP2, LineBundleClass([0]))

    def test_index_sign(self):
        for X, L, _ in CONFIGS:
            h = harmonic_spinors(X, L)
            if h.has_harmonic_spinors:
                assert h.index == (-1) ** h.concentration_degree * h.kernel_dimension
                assert h.kernel_dimension >= 1

    @pytest.mark.parametrize("X", list(all_flags(4)), ids=str)
    def test_canonical_spinc(self, X):
        L = LineBundleClass(X.restrict(X.delta_p))
        assert is_spinc(X, L)
        h = harmonic_spinors(X, L)
        assert h.twist_weight.coeffs == (0,) * len(X.painted)
        assert (h.concentration_degree, h.kernel_dimension, h.index) == (0, 1, 1)


class TestInvariants:
    def test_cardinality_and_symmetry(self):
        for X, L, omega in CONFIGS:
            spec = weitzenboeck_spectrum(X, L, omega)
            assert spec.total == 2 ** X.dim_c == sum(k for _, k in spec.entries)
            centre = scalar_curvature(X, omega) / 4
            assert spec.pi_power == centre.pi_power
            d = spec.as_dict()
            assert all(d[2 * centre.value - v] == k for v, k in d.items())

    def test_oracle_equivalence(self):
        for X, L, omega in CONFIGS[:80]:
            spec = weitzenboeck_spectrum(X, L, omega)
            assert spec.as_dict() == dict(brute_force_remainder(X, L.coeffs, omega))

    def test_min_consistency(self):
        for X, L, omega in CONFIGS:
            spec = weitzenboeck_spectrum(X, L, omega)
            assert weitzenboeck_min(X, L, omega) == spec.min_eigenvalue

    def test_vanishing_theorem(self):
        for X, L, omega in CONFIGS:
            if weitzenboeck_min(X, L, omega).value > 0:
                assert not harmonic_spinors(X, L).has_harmonic_spinors

    def test_min_sign_is_kahler_independent(self):
        rng = random.Random(9)
        for X, L, omega in CONFIGS[:50]:
            other = KahlerClass([Fraction(rng.randint(1, 20), rng.randint(1, 5))
                                 for _ in X.painted], not omega.pi_units)
            a = weitzenboeck_min(X, L, omega).sign()
            b = weitzenboeck_min(X, L, other).sign()
            # only the vanishing of every summand is forced to agree
            if a == 0:
                assert b == 0

    def test_scaling(self):
        c = Fraction(3, 7)
        for X, L, omega in CONFIGS[:50]:
            a = weitzenboeck_spectrum(X, L, omega)
            b = weitzenboeck_spectrum(X, L, omega.scaled(c))
            assert [(v / c, k) for v, k in a.entries] == list(b.entries)
            assert dirac_lower_bound(X, L, omega.scaled(c)).value == \
                dirac_lower_bound(X, L, omega).value / c

    def test_parity_representative_admissible(self):
        for X in all_flags(4):
            assert is_spinc(X, parity_representative(X))


class TestSignedSums:
    def test_small_cases(self):
        assert signed_sum_distribution([]) == {0: 1}
        assert signed_sum_distribution([0, 0]) == {0: 4}
        assert signed_sum_distribution([1, 1]) == {-2: 1, 0: 2, 2: 1}
        assert signed_sum_distribution([Fraction(1, 2), Fraction(1, 3)]) == {
            Fraction(-5, 6): 1, Fraction(-1, 6): 1, Fraction(1, 6): 1, Fraction(5, 6): 1}

    def test_cap_truncates(self):
        assert signed_sum_distribution([1, 2, 4], max_distinct=7) is None
        assert len(signed_sum_distribution([1, 2, 4], max_distinct=8)) == 8

    def test_sparse_path_matches_dense(self):
        # a huge span forces the dictionary convolution
        big = [10 ** 9, 10 ** 9, 3, 3, 1]
        out = signed_sum_distribution(big, max_distinct=100)
        from itertools import product
        ref = {}
        for eps in product((1, -1), repeat=len(big)):
            v = sum(e * a for e, a in zip(eps, big))
            ref[v] = ref.get(v, 0) + 1
        assert out == ref

    def test_env_override(self, monkeypatch):
        monkeypatch.setenv("FLAGSPEC_MAX_DISTINCT", "2")
        spec = weitzenboeck_spectrum(CP2, LineBundleClass([1]), PLAIN1)
        assert spec.truncated
        assert (spec.minimum, spec.maximum, spec.total) == (4, 8, 4)
        monkeypatch.setenv("FLAGSPEC_MAX_DISTINCT", "3")
        assert not weitzenboeck_spectrum(CP2, LineBundleClass([1]), PLAIN1).truncated

    def test_bad_env(self, monkeypatch):
        monkeypatch.setenv("FLAGSPEC_MAX_DISTINCT", "lots")
        with pytest.raises(ValueError):
            weitzenboeck_spectrum(CP2, LineBundleClass([1]), PLAIN1)

    def test_summary_mode(self):
        X = build_flag("B3", [1, 2, 3])
        L = LineBundleClass(X.restrict(X.delta_p))
        full = weitzenboeck_spectrum(X, L, KahlerClass([1, 2, 3]))
        summ = weitzenboeck_spectrum(X, L, KahlerClass([1, 2, 3]), summary=True)
        assert summ.truncated and summ.entries == ()
        assert (summ.minimum, summ.maximum, summ.total) == \
            (full.minimum, full.maximum, full.total)
