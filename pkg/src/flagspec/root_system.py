"""Root systems of simple complex Lie algebras, in exact arithmetic.

Simple roots follow Bourbaki numbering (1-based in the public API)::

    A_n   1 - 2 - ... - n
    B_n   1 - 2 - ... - (n-1) => n        (n short)
    C_n   1 - 2 - ... - (n-1) <= n        (n long)
    D_n   1 - 2 - ... - (n-2) - (n-1)
                            \\
                              n
    E_n   1 - 3 - 4 - 5 - ... - n
                  |
                  2
    F_4   1 - 2 => 3 - 4                  (3, 4 short)
    G_2   1 <= 2                          (1 short)

Positive roots are integer vectors in the simple-root basis, weights are
rational vectors in the fundamental-weight basis.  The Cartan matrix uses
``cartan[i][j] = <alpha_j, alpha_i^vee>``, so column ``j`` holds ``alpha_j`` in
fundamental-weight coordinates.

The invariant form is normalised so that long roots have squared length 2.
It differs from the Killing form by a per-type positive scale, which cancels
in every coroot pairing and in every ratio of products of pairings.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .errors import InvalidInputError

Root = tuple  # tuple[int, ...] in the simple-root basis

_MIN_RANK = {"A": 1, "B": 2, "C": 3, "D": 4}
_EXCEPTIONAL = {"E": (6, 7, 8), "F": (4,), "G": (2,)}


@dataclass(frozen=True)
class LieType:
    family: str
    rank: int

    def __post_init__(self):
        family = str(self.family).upper()
        object.__setattr__(self, "family", family)
        rank = self.rank
        if isinstance(rank, bool) or not isinstance(rank, int):
            raise InvalidInputError(f"rank must be an integer, got {rank!r}")
        if family in _MIN_RANK:
            if rank < _MIN_RANK[family]:
                raise InvalidInputError(
                    f"type {family}_n requires n >= {_MIN_RANK[family]}, got n = {rank}"
                )
        elif family in _EXCEPTIONAL:
            if rank not in _EXCEPTIONAL[family]:
                allowed = ", ".join(f"{family}{r}" for r in _EXCEPTIONAL[family])
                raise InvalidInputError(
                    f"exceptional family {family} only exists as {allowed}, got rank {rank}"
                )
        else:
            raise InvalidInputError(
                f"unknown Lie family {self.family!r}; expected one of A, B, C, D, E, F, G"
            )

    def __str__(self):
        return f"{self.family}{self.rank}"


@dataclass(frozen=True)
class Weight:
    """Rational vector in the fundamental-weight basis."""

    fw_coords: tuple

    def __init__(self, coords: Iterable):
        object.__setattr__(self, "fw_coords", tuple(Fraction(c) for c in coords))

    @classmethod
    def zero(cls, rank: int) -> "Weight":
        return cls([0] * rank)

    @classmethod
    def fundamental(cls, rank: int, i: int) -> "Weight":
        """The fundamental weight for node ``i`` (1-based)."""
        coords = [0] * rank
        coords[i - 1] = 1
        return cls(coords)

    def __len__(self):
        return len(self.fw_coords)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.fw_coords)

    def __getitem__(self, i):
        return self.fw_coords[i]

    def _check(self, other):
        if not isinstance(other, Weight):
            return NotImplemented
        if len(other) != len(self):
            raise InvalidInputError("weights of different rank")
        return other

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return Weight(a + b for a, b in zip(self, other))

    def __sub__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return Weight(a - b for a, b in zip(self, other))

    def __neg__(self):
        return Weight(-a for a in self)

    def __mul__(self, scalar):
        s = Fraction(scalar)
        return Weight(s * a for a in self)

    __rmul__ = __mul__

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self)

    def is_dominant(self) -> bool:
        return all(c >= 0 for c in self)

    def as_ints(self) -> tuple:
        if not self.is_integral():
            raise InvalidInputError(f"weight {self} is not integral")
        return tuple(int(c) for c in self)

    def __repr__(self):
        return f"Weight({[str(c) for c in self]})"

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self) + ")"


def cartan_matrix(t: LieType) -> list:
    n = t.rank
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def bond(i, j):
        a[i][j] = a[j][i] = -1

    f = t.family
    if f in "ABCD":
        for i in range(n - 1):
            bond(i, i + 1)
        if f == "B":
            a[n - 1][n - 2] = -2
        elif f == "C":
            a[n - 2][n - 1] = -2
        elif f == "D":
            a[n - 2][n - 1] = a[n - 1][n - 2] = 0
            bond(n - 3, n - 1)
    elif f == "E":
        bond(0, 2)
        bond(1, 3)
        for i in range(2, n - 1):
            bond(i, i + 1)
    elif f == "F":
        bond(0, 1)
        bond(1, 2)
        bond(2, 3)
        a[2][1] = -2
    elif f == "G":
        bond(0, 1)
        a[0][1] = -3
    return a


def _symmetrizer(a: list) -> tuple:
    """Half squared lengths ``d_i`` of the simple roots, longest equal to 1."""
    n = len(a)
    d = [None] * n
    d[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(n):
            if j != i and a[i][j] != 0 and d[j] is None:
                # d_i a_ij = d_j a_ji
                d[j] = d[i] * a[i][j] / a[j][i]
                stack.append(j)
    top = max(d)
    return tuple(x / top for x in d)


def _inverse(a: list) -> list:
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(a)]
    for col in range(n):
        piv = next(r for r in range(col, n) if m[r][col] != 0)
        m[col], m[piv] = m[piv], m[col]
        p = m[col][col]
        m[col] = [x / p for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return [row[n:] for row in m]


def _positive_roots(a: list) -> list:
    n = len(a)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    found = set(simple)
    layer = list(simple)
    roots = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(n):
                # alpha_i-string through beta: beta - p alpha_i, ..., beta + q alpha_i
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) not in found:
                        break
                    p += 1
                pairing = sum(beta[j] * a[i][j] for j in range(n))
                if p - pairing > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in found:
                        found.add(up)
                        nxt.append(up)
        nxt.sort(key=lambda r: (sum(r), r))
        roots.extend(nxt)
        layer = nxt
    return roots


@dataclass(frozen=True)
class RootSystem:
    lie_type: LieType
    cartan: tuple
    symmetrizer: tuple
    positive_roots: tuple
    _coroots: dict = field(repr=False, compare=False)
    _cartan_inv: tuple = field(repr=False, compare=False)

    @property
    def rank(self) -> int:
        return self.lie_type.rank

    def __contains__(self, beta) -> bool:
        return tuple(beta) in self._coroots

    def coroot_coords(self, beta: Sequence[int]) -> tuple:
        """``beta^vee`` as an integer vector in the simple-coroot basis."""
        key = tuple(beta)
        if key in self._coroots:
            return self._coroots[key]
        neg = tuple(-c for c in key)
        if neg in self._coroots:
            return tuple(-c for c in self._coroots[neg])
        raise InvalidInputError(f"{key} is not a root of {self.lie_type}")

    def root_length2(self, beta: Sequence[int]) -> Fraction:
        """Squared length of a root-lattice vector given in simple-root coordinates."""
        a, d = self.cartan, self.symmetrizer
        n = self.rank
        return sum((beta[i] * beta[j] * d[i] * a[i][j]
                    for i in range(n) for j in range(n)), Fraction(0))

    def __str__(self):
        return f"RootSystem({self.lie_type}, {len(self.positive_roots)} positive roots)"


def build_root_system(t: LieType | tuple | str) -> RootSystem:
    """Cartan data and positive roots for an admissible simple type.

    Accepts a :class:`LieType`, a ``(family, rank)`` pair or a string like
    ``"E8"``.
    """
    if isinstance(t, str):
        if len(t) < 2 or not t[1:].isdigit():
            raise InvalidInputError(f"cannot parse Lie type {t!r}")
        t = LieType(t[0], int(t[1:]))
    elif not isinstance(t, LieType):
        t = LieType(*t)
    a = cartan_matrix(t)
    d = _symmetrizer(a)
    roots = _positive_roots(a)
    coroots = {}
    for beta in roots:
        half_len2 = sum((beta[i] * beta[j] * d[i] * a[i][j]
                         for i in range(t.rank) for j in range(t.rank)), Fraction(0)) / 2
        coords = tuple(beta[j] * d[j] / half_len2 for j in range(t.rank))
        assert all(c.denominator == 1 for c in coords)
        coroots[beta] = tuple(int(c) for c in coords)
    inv = _inverse(a)
    return RootSystem(
        lie_type=t,
        cartan=tuple(tuple(row) for row in a),
        symmetrizer=d,
        positive_roots=tuple(roots),
        _coroots=coroots,
        _cartan_inv=tuple(tuple(row) for row in inv),
    )


def coroot_pairing(rs: RootSystem, lam: Weight, beta: Sequence[int]) -> Fraction:
    """``<lam, beta^vee>`` for a root ``beta`` in simple-root coordinates."""
    k = rs.coroot_coords(beta)
    return sum((c * x for c, x in zip(lam, k)), Fraction(0))


def root_as_weight(rs: RootSystem, beta: Sequence[int]) -> Weight:
    """Re-express a root-lattice vector in the fundamental-weight basis."""
    n = rs.rank
    if len(beta) != n:
        raise InvalidInputError(f"expected {n} simple-root coordinates, got {len(beta)}")
    return Weight(sum(rs.cartan[i][j] * beta[j] for j in range(n)) for i in range(n))


def to_simple_coords(rs: RootSystem, lam: Weight) -> tuple:
    """Coordinates of a weight in the simple-root basis (rational in general)."""
    inv = rs._cartan_inv
    n = rs.rank
    return tuple(sum((inv[i][j] * lam[j] for j in range(n)), Fraction(0)) for i in range(n))


def inner_product(rs: RootSystem, lam: Weight, mu: Weight) -> Fraction:
    """Invariant form with long roots of squared length 2."""
    if len(lam) != rs.rank or len(mu) != rs.rank:
        raise InvalidInputError("weight length does not match the rank")
    a = to_simple_coords(rs, mu)
    # (varpi_j, alpha_j) = d_j
    return sum((lam[j] * rs.symmetrizer[j] * a[j] for j in range(rs.rank)), Fraction(0))


def weyl_vector(rs: RootSystem) -> Weight:
    """Half the sum of the positive roots, which is the all-ones weight."""
    return Weight([1] * rs.rank)
