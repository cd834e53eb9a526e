"""Spin^c spectral data on flag varieties.

At the base point the spinor space splits into ``2^m`` common eigenlines,
one per sign vector ``eps`` over the radical roots.  An invariant closed
(1,1)-form acts on the line of ``eps`` by ``i * sum_beta eps_beta r_beta`` where
``r_beta`` is its eigenvalue against the Kähler form.  All spectra below are
therefore signed-sum distributions, which are computed by merging equal
partial sums rather than by listing sign vectors.
"""
from __future__ import annotations

import math
import os
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import NamedTuple, Sequence

from .errors import InvalidInputError, NotSpincError, UnitMismatchError
from .flag_variety import (
    FlagVariety,
    KahlerClass,
    LineBundleClass,
    PiScalar,
    _require_kahler,
)
from .weyl import CohomologyReport, bwb_classify

DEFAULT_MAX_DISTINCT = 1 << 20
MAX_DISTINCT_ENV = "FLAGSPEC_MAX_DISTINCT"


def default_max_distinct() -> int:
    raw = os.environ.get(MAX_DISTINCT_ENV)
    if raw is None or raw.strip() == "":
        return DEFAULT_MAX_DISTINCT
    try:
        value = int(raw)
    except ValueError:
        raise InvalidInputError(f"{MAX_DISTINCT_ENV}={raw!r} is not an integer")
    if value < 0:
        raise InvalidInputError(f"{MAX_DISTINCT_ENV} must be non-negative")
    return value


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues with multiplicities.

    Entry ``(v, k)`` stands for the eigenvalue ``v * pi**pi_power`` (times
    ``i`` when ``imaginary``) with multiplicity ``k``.  A truncated spectrum
    has no entries, only the extreme values and the total count.
    """

    entries: tuple
    total: int
    minimum: Fraction
    maximum: Fraction
    pi_power: int = 0
    imaginary: bool = False
    truncated: bool = False

    def __post_init__(self):
        if not self.truncated:
            assert sum(k for _, k in self.entries) == self.total
            assert all(a[0] < b[0] for a, b in zip(self.entries, self.entries[1:]))

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def as_dict(self) -> dict:
        return dict(self.entries)

    def eigenvalue(self, v: Fraction) -> PiScalar:
        return PiScalar(v, self.pi_power)

    @property
    def min_eigenvalue(self) -> PiScalar:
        return PiScalar(self.minimum, self.pi_power)

    @property
    def max_eigenvalue(self) -> PiScalar:
        return PiScalar(self.maximum, self.pi_power)


def _lcm(a, b):
    return a * b // math.gcd(a, b)


def _dense(steps: list, span: int) -> list:
    # index j holds the value j - span
    dist = [1]
    for a in steps:
        pad = [0] * (2 * a)
        dist = [x + y for x, y in zip(dist + pad, pad + dist)]
    assert len(dist) == 2 * span + 1
    return dist


def _sparse(groups: list, cap: int):
    dist = {0: 1}
    for a, n in groups:
        shape = {a * (n - 2 * k): math.comb(n, k) for k in range(n + 1)}
        new = {}
        for v, mult in dist.items():
            for g, c in shape.items():
                new[v + g] = new.get(v + g, 0) + mult * c
        if len(new) > cap:
            return None
        dist = new
    return dist


def signed_sum_distribution(offsets: Sequence, max_distinct: int | None = None):
    """Multiset ``{sum_k eps_k a_k : eps in {+-1}^n}`` as ``{value: count}``.

    Returns ``None`` when the number of distinct sums exceeds ``max_distinct``.
    """
    cap = default_max_distinct() if max_distinct is None else max_distinct
    offsets = [abs(Fraction(a)) for a in offsets]
    zeros = sum(1 for a in offsets if a == 0)
    nonzero = [a for a in offsets if a != 0]
    if not nonzero:
        return {Fraction(0): 1 << zeros} if cap >= 1 else None
    den = reduce(_lcm, (a.denominator for a in nonzero), 1)
    ints = [int(a * den) for a in nonzero]
    g = reduce(math.gcd, ints)
    ints = [a // g for a in ints]
    scale = Fraction(g, den)
    span = sum(ints)
    weight = 1 << zeros

    groups = sorted(Counter(ints).items())
    # an array over the whole span only pays off when the sums are dense in it
    bound = 1
    for _, n in groups:
        bound = min(bound * (n + 1), 1 << 64)
    if span <= (1 << 22) and (span <= 4096 or 2 * span + 1 <= 4 * bound):
        dense = _dense(sorted(ints), span)
        out = {Fraction(j - span) * scale: k * weight
               for j, k in enumerate(dense) if k}
        return out if len(out) <= cap else None

    sparse = _sparse(groups, cap)
    if sparse is None:
        return None
    return {Fraction(v) * scale: k * weight for v, k in sparse.items()}


def _spectrum(base: Fraction, offsets: list, pi_power: int, imaginary: bool,
              max_distinct: int | None, summary: bool) -> Spectrum:
    spread = sum((abs(a) for a in offsets), Fraction(0))
    total = 1 << len(offsets)
    dist = None if summary else signed_sum_distribution(offsets, max_distinct)
    if dist is None:
        return Spectrum(entries=(), total=total, minimum=base - spread,
                        maximum=base + spread, pi_power=pi_power,
                        imaginary=imaginary, truncated=True)
    entries = tuple(sorted((base + v, k) for v, k in dist.items()))
    return Spectrum(entries=entries, total=total, minimum=entries[0][0],
                    maximum=entries[-1][0], pi_power=pi_power, imaginary=imaginary)


def _check_bundle(X: FlagVariety, L: LineBundleClass):
    if not isinstance(L, LineBundleClass):
        L = LineBundleClass(L)
    if len(L) != len(X.painted):
        raise InvalidInputError(
            f"line bundle has {len(L)} coordinates, {X} has {len(X.painted)} painted nodes"
        )
    return L


def spinc_parity(X: FlagVariety) -> tuple:
    """``<delta_P, alpha^vee> mod 2`` on each painted node (the class ``w_2``)."""
    return tuple(int(c) % 2 for c in X.restrict(X.delta_p))


def is_spinc(X: FlagVariety, L: LineBundleClass) -> bool:
    L = _check_bundle(X, L)
    return all((a - b) % 2 == 0 for a, b in zip(L.coeffs, spinc_parity(X)))


def _require_spinc(X, L):
    L = _check_bundle(X, L)
    if not is_spinc(X, L):
        raise NotSpincError(
            f"line bundle {list(L.coeffs)} does not define a Spin^c structure on {X}: "
            f"coordinates must be congruent to {list(spinc_parity(X))} mod 2"
        )
    return L


def twist_weight(X: FlagVariety, L: LineBundleClass) -> LineBundleClass:
    """Weight of ``E = sqrt(L ⊗ K)``, i.e. ``(L - delta_P) / 2``."""
    L = _require_spinc(X, L)
    halves = [Fraction(a - int(d), 2) for a, d in zip(L.coeffs, X.restrict(X.delta_p))]
    assert all(h.denominator == 1 for h in halves)
    return LineBundleClass(halves)


def theta_spectrum(X: FlagVariety, theta: KahlerClass, omega: KahlerClass,
                   max_distinct: int | None = None, summary: bool = False) -> Spectrum:
    """Spectrum of an invariant closed (1,1)-form acting on spinors.

    The values are purely imaginary; entries hold their imaginary parts.
    """
    _require_kahler(X, omega)
    if not isinstance(theta, KahlerClass):
        theta = KahlerClass(theta, omega.pi_units)
    if theta.pi_units != omega.pi_units:
        raise UnitMismatchError("theta and omega must both be plain or both in pi units")
    if len(theta) != len(X.painted):
        raise InvalidInputError(
            f"theta has {len(theta)} coordinates, {X} has {len(X.painted)} painted nodes"
        )
    top = X.pairings(theta.coeffs)
    bottom = X.pairings(omega.coeffs)
    ratios = [a / b for a, b in zip(top, bottom)]
    return _spectrum(Fraction(0), ratios, 0, True, max_distinct, summary)


def _remainder_terms(X, L, omega):
    L = _require_spinc(X, L)
    _require_kahler(X, omega)
    delta = X.anticanonical_pairings
    ell = X.pairings(L.coeffs)
    w = X.pairings(omega.coeffs)
    return delta, ell, w


def weitzenboeck_spectrum(X: FlagVariety, L: LineBundleClass, omega: KahlerClass,
                          max_distinct: int | None = None,
                          summary: bool = False) -> Spectrum:
    """Spectrum of ``D_A^2 - Laplacian`` for the Spin^c structure ``L``.

    The result is symmetric about a quarter of the scalar curvature.  When
    more than ``max_distinct`` distinct values would be produced (or when
    ``summary`` is set) only the minimum, maximum and total are returned.
    """
    delta, ell, w = _remainder_terms(X, L, omega)
    base = sum((d / x for d, x in zip(delta, w)), Fraction(0))
    offsets = [e / x for e, x in zip(ell, w)]
    return _spectrum(base, offsets, 1 - omega.pi_power, False, max_distinct, summary)


def weitzenboeck_min(X: FlagVariety, L: LineBundleClass, omega: KahlerClass) -> PiScalar:
    delta, ell, w = _remainder_terms(X, L, omega)
    value = sum(((d - abs(e)) / x for d, e, x in zip(delta, ell, w)), Fraction(0))
    return PiScalar(value, 1 - omega.pi_power)


class DiracBound(NamedTuple):
    """Lower bound for the squared Dirac eigenvalues; ``vacuous`` when negative."""

    value: PiScalar
    vacuous: bool


def dirac_lower_bound(X: FlagVariety, L: LineBundleClass, omega: KahlerClass) -> DiracBound:
    value = weitzenboeck_min(X, L, omega)
    return DiracBound(value, value.value < 0)


@dataclass(frozen=True)
class HarmonicReport:
    spinc_ok: bool
    twist_weight: LineBundleClass
    cohomology: CohomologyReport

    @property
    def has_harmonic_spinors(self) -> bool:
        return not self.cohomology.vanishes

    @property
    def kernel_dimension(self) -> int:
        return self.cohomology.dimension

    @property
    def concentration_degree(self) -> int | None:
        return self.cohomology.degree

    @property
    def index(self) -> int:
        return self.cohomology.euler_characteristic


def harmonic_spinors(X: FlagVariety, L: LineBundleClass) -> HarmonicReport:
    """Harmonic spinors and index through the cohomology of ``E``."""
    E = twist_weight(X, L)
    report = bwb_classify(X.rs, X.embed(E.coeffs))
    return HarmonicReport(spinc_ok=True, twist_weight=E, cohomology=report)
