"""Flag varieties ``G/P`` described by their painted nodes.

The painted nodes are the simple roots *not* in the Levi part of ``P``.
They index the Picard lattice and the Kähler cone, so line-bundle and
Kähler-class vectors are always given in painted-node order (ascending).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence

from .errors import InvalidInputError, NotKahlerError, UnitMismatchError
from .root_system import RootSystem, Weight, build_root_system


@dataclass(frozen=True, eq=False)
class PiScalar:
    """An exact rational times ``pi ** pi_power`` with ``pi_power`` in {-1, 0, 1}."""

    value: Fraction
    pi_power: int = 0

    def __post_init__(self):
        object.__setattr__(self, "value", Fraction(self.value))
        if self.pi_power not in (-1, 0, 1):
            raise UnitMismatchError(f"power of pi {self.pi_power} outside {{-1, 0, 1}}")

    def __eq__(self, other):
        if not isinstance(other, PiScalar):
            try:
                other = PiScalar(other)
            except (TypeError, ValueError):
                return NotImplemented
        if self.value != other.value:
            return False
        return self.value == 0 or self.pi_power == other.pi_power

    def __hash__(self):
        return hash((self.value, self.pi_power if self.value else 0))

    def _same_units(self, other) -> "PiScalar":
        if not isinstance(other, PiScalar):
            other = PiScalar(other)
        if self.value == 0:
            return other
        if other.value != 0 and other.pi_power != self.pi_power:
            raise UnitMismatchError(
                f"cannot combine pi^{self.pi_power} with pi^{other.pi_power}"
            )
        return other

    def __add__(self, other):
        other = self._same_units(other)
        if self.value == 0:
            return other
        return PiScalar(self.value + other.value, self.pi_power)

    __radd__ = __add__

    def __neg__(self):
        return PiScalar(-self.value, self.pi_power)

    def __sub__(self, other):
        return self + (-(other if isinstance(other, PiScalar) else PiScalar(other)))

    def __mul__(self, other):
        if isinstance(other, PiScalar):
            return PiScalar(self.value * other.value, self.pi_power + other.pi_power)
        return PiScalar(self.value * Fraction(other), self.pi_power)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, PiScalar):
            return PiScalar(self.value / other.value, self.pi_power - other.pi_power)
        return PiScalar(self.value / Fraction(other), self.pi_power)

    def _cmp_key(self, other):
        other = self._same_units(other)
        return self.value, other.value

    def __lt__(self, other):
        a, b = self._cmp_key(other)
        return a < b

    def __le__(self, other):
        a, b = self._cmp_key(other)
        return a <= b

    def __gt__(self, other):
        a, b = self._cmp_key(other)
        return a > b

    def __ge__(self, other):
        a, b = self._cmp_key(other)
        return a >= b

    def sign(self) -> int:
        return (self.value > 0) - (self.value < 0)

    def __float__(self):
        return float(self.value) * math.pi ** self.pi_power

    def __str__(self):
        if self.pi_power == 0 or self.value == 0:
            return str(self.value)
        unit = "π" if self.pi_power == 1 else "π^-1"
        if self.value == 1:
            return unit
        if self.value == -1:
            return "-" + unit
        return f"{self.value}{unit}" if self.value.denominator == 1 else f"({self.value}){unit}"


@dataclass(frozen=True)
class LineBundleClass:
    """Integer Picard coordinates on the painted nodes."""

    coeffs: tuple

    def __init__(self, coeffs: Iterable):
        vals = []
        for c in coeffs:
            f = Fraction(c)
            if f.denominator != 1:
                raise InvalidInputError(f"line bundle coordinate {c} is not an integer")
            vals.append(int(f))
        object.__setattr__(self, "coeffs", tuple(vals))

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)


@dataclass(frozen=True)
class KahlerClass:
    """Rational painted-node coordinates of a real (1,1)-class.

    With ``pi_units`` set, the class is ``pi`` times the stated rationals.
    Coefficients may have any sign here; :func:`is_kahler` tests positivity.
    """

    coeffs: tuple
    pi_units: bool = False

    def __init__(self, coeffs: Iterable, pi_units: bool = False):
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in coeffs))
        object.__setattr__(self, "pi_units", bool(pi_units))

    @property
    def pi_power(self) -> int:
        return 1 if self.pi_units else 0

    def scaled(self, c) -> "KahlerClass":
        c = Fraction(c)
        return KahlerClass([c * x for x in self.coeffs], self.pi_units)

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)


@dataclass(frozen=True)
class FlagVariety:
    rs: RootSystem
    painted: tuple
    radical_roots: tuple
    delta_p: Weight
    dim_c: int
    # coroot coordinates of each radical root restricted to the painted nodes
    radical_coroots: tuple = field(repr=False)

    @property
    def rank(self) -> int:
        return self.rs.rank

    @property
    def lie_type(self):
        return self.rs.lie_type

    def embed(self, coeffs: Sequence) -> Weight:
        """Painted-node coordinates to a full weight (zeros on unpainted nodes)."""
        if len(coeffs) != len(self.painted):
            raise InvalidInputError(
                f"expected {len(self.painted)} painted-node coordinates, got {len(coeffs)}"
            )
        full = [Fraction(0)] * self.rank
        for node, c in zip(self.painted, coeffs):
            full[node - 1] = Fraction(c)
        return Weight(full)

    def restrict(self, lam: Weight) -> tuple:
        return tuple(lam[node - 1] for node in self.painted)

    def pairings(self, coeffs: Sequence) -> list:
        """``<lam, beta^vee>`` for every radical root, ``lam`` in painted coordinates."""
        if len(coeffs) != len(self.painted):
            raise InvalidInputError(
                f"expected {len(self.painted)} painted-node coordinates, got {len(coeffs)}"
            )
        return [sum((c * k for c, k in zip(coeffs, ks)), Fraction(0))
                for ks in self.radical_coroots]

    @property
    def anticanonical_pairings(self) -> list:
        return self.pairings(self.restrict(self.delta_p))

    def __str__(self):
        nodes = ",".join(map(str, self.painted))
        return f"{self.lie_type}/P[{nodes}]"


def build_flag(rs: RootSystem | str, painted: Iterable[int]) -> FlagVariety:
    if not isinstance(rs, RootSystem):
        rs = build_root_system(rs)
    nodes = sorted(set(int(i) for i in painted))
    if not nodes:
        raise InvalidInputError("painted node set is empty: G/G is a point")
    bad = [i for i in nodes if not 1 <= i <= rs.rank]
    if bad:
        raise InvalidInputError(f"painted nodes {bad} outside 1..{rs.rank}")
    idx = [i - 1 for i in nodes]
    radical = tuple(b for b in rs.positive_roots if any(b[i] for i in idx))
    total = [sum(b[j] for b in radical) for j in range(rs.rank)]
    delta = Weight(sum(rs.cartan[i][j] * total[j] for j in range(rs.rank))
                   for i in range(rs.rank))
    unpainted = [i for i in range(rs.rank) if i not in idx]
    assert all(delta[i] == 0 for i in unpainted)
    coroots = tuple(tuple(rs.coroot_coords(b)[i] for i in idx) for b in radical)
    return FlagVariety(
        rs=rs,
        painted=tuple(nodes),
        radical_roots=radical,
        delta_p=delta,
        dim_c=len(radical),
        radical_coroots=coroots,
    )


def curve_pairing(X: FlagVariety, lam: Weight, beta: Sequence[int]) -> Fraction:
    """Degree of the class with weight ``lam`` on the rational curve of ``beta``."""
    beta = tuple(beta)
    try:
        k = X.radical_roots.index(beta)
    except ValueError:
        raise InvalidInputError(f"{beta} is not a root of the unipotent radical of {X}")
    if len(lam) != X.rank:
        raise InvalidInputError(f"weight {lam} has the wrong length")
    if any(lam[i] != 0 for i in range(X.rank) if i + 1 not in X.painted):
        raise InvalidInputError(f"weight {lam} is not supported on the painted nodes")
    return sum((c * x for c, x in zip(X.restrict(lam), X.radical_coroots[k])), Fraction(0))


def canonical_weight(X: FlagVariety) -> Weight:
    """Weight of the anticanonical bundle, i.e. ``delta_P``."""
    return X.delta_p


def fano_index(X: FlagVariety) -> int:
    return reduce(math.gcd, (int(c) for c in X.restrict(X.delta_p)))


def is_kahler(X: FlagVariety, c: KahlerClass) -> bool:
    if len(c) != len(X.painted):
        raise InvalidInputError(
            f"Kähler class has {len(c)} coordinates, {X} has {len(X.painted)} painted nodes"
        )
    return all(x > 0 for x in c.coeffs)


def _require_kahler(X: FlagVariety, omega: KahlerClass):
    if not is_kahler(X, omega):
        raise NotKahlerError(
            f"class {[str(x) for x in omega.coeffs]} is outside the Kähler cone "
            "(all painted coordinates must be > 0)"
        )


def ratio_sum(X: FlagVariety, numer: Sequence, omega: KahlerClass) -> Fraction:
    """``sum_beta <numer, beta^vee> / <omega, beta^vee>`` over radical roots."""
    top = X.pairings(numer)
    bottom = X.pairings(omega.coeffs)
    return sum((a / b for a, b in zip(top, bottom)), Fraction(0))


def scalar_curvature(X: FlagVariety, omega: KahlerClass) -> PiScalar:
    """Scalar curvature of the invariant Kähler metric with class ``omega``.

    Equals ``4 pi sum_beta <delta_P, beta^vee> / <omega, beta^vee>``; a class
    in pi units absorbs the pi.
    """
    _require_kahler(X, omega)
    s = 4 * ratio_sum(X, X.restrict(X.delta_p), omega)
    return PiScalar(s, 1 - omega.pi_power)


def hym_slope(X: FlagVariety, E: LineBundleClass, omega: KahlerClass) -> PiScalar:
    """Trace of the normalised HYM curvature of ``E`` against ``omega``."""
    _require_kahler(X, omega)
    return PiScalar(ratio_sum(X, E.coeffs, omega), -omega.pi_power)


def ke_class(X: FlagVariety, s_target: PiScalar | Fraction | int | None = None) -> KahlerClass:
    """The Kähler-Einstein class with the requested scalar curvature.

    Every invariant Kähler-Einstein class is a multiple ``c * delta_P``; its
    scalar curvature is ``4 pi m / c``.  Without a target the Ricci form
    itself is returned (``c = 2 pi``, scalar curvature ``2m``).
    """
    delta = X.restrict(X.delta_p)
    if s_target is None:
        return KahlerClass([2 * x for x in delta], pi_units=True)
    if not isinstance(s_target, PiScalar):
        s_target = PiScalar(s_target)
    if s_target.value <= 0:
        raise InvalidInputError(f"scalar curvature target must be positive, got {s_target}")
    c = PiScalar(4 * X.dim_c, 1) / s_target
    if c.pi_power not in (0, 1):
        raise UnitMismatchError(f"target {s_target} would need a class in pi^{c.pi_power} units")
    return KahlerClass([c.value * x for x in delta], pi_units=c.pi_power == 1)
