"""Weyl group actions, dominance descent, Weyl dimensions and Borel-Weil-Bott.

Words are tuples of 1-based simple-reflection indices and act like function
composition: the rightmost letter is applied first.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

from .errors import InvalidInputError, SingularInputError
from .root_system import RootSystem, Weight, coroot_pairing, weyl_vector


def _check_weight(rs: RootSystem, lam: Weight):
    if len(lam) != rs.rank:
        raise InvalidInputError(f"weight {lam} has length {len(lam)}, rank is {rs.rank}")


def _check_integral(lam: Weight):
    if not lam.is_integral():
        raise InvalidInputError(f"weight {lam} is not integral")


def simple_reflection(rs: RootSystem, i: int, lam: Weight) -> Weight:
    """``s_i(lam) = lam - <lam, alpha_i^vee> alpha_i``."""
    if not 1 <= i <= rs.rank:
        raise InvalidInputError(f"simple reflection index {i} outside 1..{rs.rank}")
    _check_weight(rs, lam)
    c = lam[i - 1]
    col = i - 1
    return Weight(x - c * rs.cartan[k][col] for k, x in enumerate(lam))


def apply_word(rs: RootSystem, word: Sequence[int], lam: Weight) -> Weight:
    for i in reversed(tuple(word)):
        lam = simple_reflection(rs, i, lam)
    return lam


def shifted_action(rs: RootSystem, word: Sequence[int], lam: Weight) -> Weight:
    """Dot action ``w * lam = w(lam + rho) - rho``."""
    rho = weyl_vector(rs)
    return apply_word(rs, word, lam + rho) - rho


def is_dot_regular(rs: RootSystem, lam: Weight) -> bool:
    _check_weight(rs, lam)
    _check_integral(lam)
    mu = lam + weyl_vector(rs)
    return all(coroot_pairing(rs, mu, beta) != 0 for beta in rs.positive_roots)


class DominantForm(NamedTuple):
    word: tuple
    result: Weight
    length: int


def negative_coroot_count(rs: RootSystem, mu: Weight) -> int:
    return sum(1 for beta in rs.positive_roots if coroot_pairing(rs, mu, beta) < 0)


def to_dominant(rs: RootSystem, mu: Weight) -> DominantForm:
    """Reflect ``mu`` into the dominant chamber by greedy descent.

    At each step the smallest index with a negative coordinate is reflected.
    The returned word ``w`` satisfies ``apply_word(w, mu) == result``, and its
    length equals the number of positive coroots pairing negatively with
    ``mu``.  Hitting a wall (a zero coordinate while others are still
    negative, or at the end) raises :class:`SingularInputError`.
    """
    _check_weight(rs, mu)
    letters = []
    cur = mu
    while True:
        if any(c == 0 for c in cur):
            raise SingularInputError(
                f"singular input: {mu} lies on a wall (zero coordinate in {cur})"
            )
        neg = next((i for i, c in enumerate(cur) if c < 0), None)
        if neg is None:
            break
        cur = simple_reflection(rs, neg + 1, cur)
        letters.append(neg + 1)
    word = tuple(reversed(letters))
    assert len(word) == negative_coroot_count(rs, mu)
    return DominantForm(word, cur, len(word))


def weyl_dimension(rs: RootSystem, lam: Weight) -> int:
    """Dimension of the irreducible module with highest weight ``lam``."""
    _check_weight(rs, lam)
    _check_integral(lam)
    if not lam.is_dominant():
        raise InvalidInputError(f"weight {lam} is not dominant")
    rho = weyl_vector(rs)
    shifted = lam + rho
    num = Fraction(1)
    den = Fraction(1)
    # ratios of <., alpha> and <., alpha^vee> agree factor by factor
    for beta in rs.positive_roots:
        num *= coroot_pairing(rs, shifted, beta)
        den *= coroot_pairing(rs, rho, beta)
    dim = num / den
    assert dim.denominator == 1
    return int(dim)


@dataclass(frozen=True)
class CohomologyReport:
    """Line-bundle cohomology on ``G/B`` (or any ``G/P``) by Borel-Weil-Bott.

    ``degree is None`` means every cohomology group vanishes.  Otherwise the
    cohomology sits in ``degree`` alone and is dual to the irreducible module
    of highest weight ``dominant_weight``.
    """

    weight: Weight
    degree: int | None = None
    word: tuple = ()
    dominant_weight: Weight | None = None
    dimension: int = 0

    @property
    def vanishes(self) -> bool:
        return self.degree is None

    @property
    def euler_characteristic(self) -> int:
        if self.vanishes:
            return 0
        return (-1) ** self.degree * self.dimension


def bwb_classify(rs: RootSystem, lam: Weight) -> CohomologyReport:
    _check_weight(rs, lam)
    _check_integral(lam)
    if not is_dot_regular(rs, lam):
        return CohomologyReport(weight=lam)
    rho = weyl_vector(rs)
    word, dom, length = to_dominant(rs, lam + rho)
    top = dom - rho
    return CohomologyReport(
        weight=lam,
        degree=length,
        word=word,
        dominant_weight=top,
        dimension=weyl_dimension(rs, top),
    )
