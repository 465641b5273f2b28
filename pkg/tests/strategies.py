from __future__ import annotations

from fractions import Fraction

from hypothesis import strategies as st

from zerodiv.field import QQ, make_tower

K2 = make_tower([2])
K23 = make_tower([2, 3])

small_fractions = st.builds(
    Fraction, st.integers(-12, 12), st.integers(1, 6)
)


def elements(tower, fractions=small_fractions):
    return st.lists(fractions, min_size=tower.degree, max_size=tower.degree).map(tower.element)


def nonzero_elements(tower, fractions=small_fractions):
    return elements(tower, fractions).filter(bool)


def vectors(tower, n, fractions=small_fractions):
    return st.lists(elements(tower, fractions), min_size=n, max_size=n).map(tuple)


def matrices(tower, m, n, fractions=small_fractions):
    from zerodiv.linalg import Matrix

    return st.lists(vectors(tower, n, fractions), min_size=m, max_size=m).map(
        lambda rows: Matrix(rows, tower, n)
    )


towers = st.sampled_from([QQ, K2, K23])
