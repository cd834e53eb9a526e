import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from flagspec import (
    InvalidInputError,
    LieType,
    Weight,
    build_root_system,
    coroot_pairing,
    inner_product,
    root_as_weight,
    weyl_vector,
)

from configs import ADMISSIBLE, root_system

CLOSED_FORM = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
    "F": lambda n: 24,
    "G": lambda n: 6,
}


def test_a1():
    rs = build_root_system(("A", 1))
    assert rs.positive_roots == ((1,),)
    assert rs.cartan == ((2,),)


def test_a2():
    rs = build_root_system("A2")
    assert set(rs.positive_roots) == {(1, 0), (0, 1), (1, 1)}
    assert rs.cartan == ((2, -1), (-1, 2))


def test_g2_closure_and_symmetrizer():
    rs = build_root_system(LieType("G", 2))
    assert len(rs.positive_roots) == 6
    a, d = rs.cartan, rs.symmetrizer
    assert d[0] * a[0][1] == d[1] * a[1][0]
    assert rs.positive_roots[-1] == (3, 2)


@pytest.mark.parametrize("family,rank", [
    ("A", 0), ("B", 1), ("C", 2), ("D", 3), ("E", 5), ("E", 9), ("F", 3), ("G", 3),
    ("H", 3), ("A", -1),
])
def test_inadmissible_types_rejected(family, rank):
    with pytest.raises(InvalidInputError):
        build_root_system((family, rank))


def test_inadmissible_message_names_constraint():
    with pytest.raises(InvalidInputError, match="n >= 3"):
        LieType("C", 2)


@pytest.mark.parametrize("family,rank", ADMISSIBLE)
def test_root_counts_and_cartan_shape(family, rank):
    rs = root_system(family, rank)
    assert len(rs.positive_roots) == CLOSED_FORM[family](rank)
    a = rs.cartan
    for i in range(rank):
        assert a[i][i] == 2
        for j in range(rank):
            if i != j:
                assert a[i][j] <= 0
                assert rs.symmetrizer[i] * a[i][j] == rs.symmetrizer[j] * a[j][i]


def _det(m):
    m = [[Fraction(x) for x in row] for row in m]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return det


@pytest.mark.parametrize("family,rank", ADMISSIBLE)
def test_symmetrized_cartan_positive_definite(family, rank):
    rs = root_system(family, rank)
    sym = [[rs.symmetrizer[i] * rs.cartan[i][j] for j in range(rank)] for i in range(rank)]
    for k in range(1, rank + 1):
        assert _det([row[:k] for row in sym[:k]]) > 0


@pytest.mark.parametrize("family,rank", ADMISSIBLE)
def test_positive_roots_closed_downward(family, rank):
    rs = root_system(family, rank)
    roots = set(rs.positive_roots)
    for beta in rs.positive_roots:
        assert all(c >= 0 for c in beta)
        if sum(beta) == 1:
            continue
        assert any(
            tuple(c - (i == j) for j, c in enumerate(beta)) in roots
            for i in range(rank)
        )


def test_coroot_pairing_examples():
    rs = build_root_system("A2")
    w1 = Weight([1, 0])
    assert coroot_pairing(rs, w1, (1, 0)) == 1
    assert coroot_pairing(rs, w1, (1, 1)) == 1
    assert coroot_pairing(rs, Weight([2, 2]), (1, 1)) == 4


def test_coroot_pairing_rejects_non_roots():
    rs = build_root_system("A2")
    with pytest.raises(InvalidInputError):
        coroot_pairing(rs, Weight([1, 0]), (2, 1))


def test_coroot_pairing_negative_root():
    rs = build_root_system("B2")
    assert coroot_pairing(rs, Weight([1, 1]), (-1, -2)) == -coroot_pairing(rs, Weight([1, 1]), (1, 2))


@pytest.mark.parametrize("family,rank", ADMISSIBLE)
def test_fundamental_weights_dual_to_simple_coroots(family, rank):
    rs = root_system(family, rank)
    for i in range(1, rank + 1):
        alpha = tuple(int(k == i - 1) for k in range(rank))
        for j in range(1, rank + 1):
            assert coroot_pairing(rs, Weight.fundamental(rank, j), alpha) == (i == j)


@pytest.mark.parametrize("family,rank", ADMISSIBLE)
def test_roots_as_weights_are_integral(family, rank):
    rs = root_system(family, rank)
    for beta in rs.positive_roots:
        lam = root_as_weight(rs, beta)
        assert lam.is_integral()
        for i in range(rank):
            alpha = tuple(int(k == i) for k in range(rank))
            assert lam[i] == coroot_pairing(rs, lam, alpha)


def test_inner_product_examples():
    rs = build_root_system("A2")
    a1 = root_as_weight(rs, (1, 0))
    assert inner_product(rs, a1, a1) == 2
    assert inner_product(rs, weyl_vector(rs), root_as_weight(rs, (1, 1))) == 2


@pytest.mark.parametrize("family,rank", ADMISSIBLE)
def test_long_roots_have_length_two(family, rank):
    rs = root_system(family, rank)
    lengths = {inner_product(rs, root_as_weight(rs, b), root_as_weight(rs, b))
               for b in rs.positive_roots}
    assert max(lengths) == 2


@pytest.mark.parametrize("family,rank", ADMISSIBLE)
def test_inner_product_matches_coroot_rescaling(family, rank):
    rng = random.Random(rank * 31 + ord(family))
    rs = root_system(family, rank)
    lam = Weight([Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(rank)])
    for beta in rs.positive_roots:
        b = root_as_weight(rs, beta)
        assert inner_product(rs, lam, b) == coroot_pairing(rs, lam, beta) * inner_product(rs, b, b) / 2


rationals = st.fractions(min_value=-20, max_value=20, max_denominator=7)
type_strategy = st.sampled_from([t for t in ADMISSIBLE if t[1] <= 6])


@settings(max_examples=60, deadline=None)
@given(type_strategy, st.data())
def test_inner_product_symmetric_bilinear_positive(t, data):
    rs = root_system(*t)
    n = rs.rank
    vec = st.lists(rationals, min_size=n, max_size=n).map(Weight)
    lam, mu, nu = data.draw(vec), data.draw(vec), data.draw(vec)
    c = data.draw(rationals)
    assert inner_product(rs, lam, mu) == inner_product(rs, mu, lam)
    assert inner_product(rs, lam + c * nu, mu) == (
        inner_product(rs, lam, mu) + c * inner_product(rs, nu, mu))
    if any(lam):
        assert inner_product(rs, lam, lam) > 0


def test_weyl_vector_examples():
    assert weyl_vector(build_root_system("A2")) == Weight([1, 1])
    assert weyl_vector(build_root_system("A1")) == Weight([1])


def test_weyl_vector_f4_against_root_sum():
    rs = build_root_system("F4")
    total = Weight.zero(4)
    for beta in rs.positive_roots:
        total = total + root_as_weight(rs, beta)
    assert total * Fraction(1, 2) == weyl_vector(rs) == Weight([1, 1, 1, 1])


def test_root_as_weight_examples():
    rs = build_root_system("A2")
    assert root_as_weight(rs, (1, 0)) == Weight([2, -1])
    assert root_as_weight(rs, (1, 1)) == Weight([1, 1])
    assert root_as_weight(build_root_system("A1"), (1,)) == Weight([2])
