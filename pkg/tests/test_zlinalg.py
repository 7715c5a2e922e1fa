"""Exact integer linear algebra: HNF, SNF, kernels, LLL."""

from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from purecubic.zlinalg import IntMatrix, det, hnf, kernel, lll_reduce, snf

small_entries = st.integers(min_value=-30, max_value=30)


def matrices(max_dim=4):
    return st.integers(1, max_dim).flatmap(
        lambda r: st.integers(1, max_dim).flatmap(
            lambda c: st.lists(
                st.lists(small_entries, min_size=c, max_size=c),
                min_size=r, max_size=r,
            ).map(IntMatrix.from_rows)
        )
    )


def test_hnf_known_example():
    H, U = hnf(IntMatrix.from_rows([[4, 6], [2, 2]]))
    assert H[0, 0] * H[1, 1] == 4  # |det| preserved
    assert H[1, 0] == 0
    assert U @ IntMatrix.from_rows([[4, 6], [2, 2]]) == H


def test_snf_known_example():
    d, U, V = snf(IntMatrix.from_rows([[2, 4], [4, 4]]))
    assert list(d) == [2, 4]


def test_snf_zero_matrix():
    d, _, _ = snf(IntMatrix.from_rows([[0, 0], [0, 0]]))
    assert list(d) == [0, 0]


@given(matrices())
@settings(max_examples=80, deadline=None)
def test_hnf_transform_is_unimodular(M):
    H, U = hnf(M)
    assert U.rows == U.cols == M.rows
    assert abs(det(U)) == 1
    assert U @ M == H


@given(matrices())
@settings(max_examples=80, deadline=None)
def test_hnf_shape(M):
    H, _ = hnf(M)
    pivots = []
    for i in range(H.rows):
        row = H.row(i)
        nz = [j for j, x in enumerate(row) if x]
        if not nz:
            continue
        j = nz[0]
        assert row[j] > 0
        pivots.append(j)
        # entries above a pivot are reduced modulo it
        for i2 in range(i):
            assert 0 <= H[i2, j] < row[j]
    assert pivots == sorted(pivots)


@given(matrices())
@settings(max_examples=80, deadline=None)
def test_snf_divisibility_chain(M):
    d, U, V = snf(M)
    positive = [x for x in d if x != 0]
    for a, b in zip(positive, positive[1:]):
        assert b % a == 0
    prod = U @ M @ V
    for i in range(prod.rows):
        for j in range(prod.cols):
            expect = d[i] if i == j and i < len(d) else 0
            assert prod[i, j] == expect


@given(matrices())
@settings(max_examples=60, deadline=None)
def test_kernel_annihilates(M):
    for v in kernel(M):
        assert len(v) == M.cols
        for i in range(M.rows):
            assert sum(M[i, j] * v[j] for j in range(M.cols)) == 0


def test_kernel_full_rank_is_empty():
    assert kernel(IntMatrix.from_rows([[1, 0], [0, 1]])) == []


@given(st.lists(st.lists(st.integers(-20, 20), min_size=3, max_size=3),
                min_size=3, max_size=3))
@settings(max_examples=60, deadline=None)
def test_lll_preserves_lattice(rows):
    M = IntMatrix.from_rows(rows)
    if det(M) == 0:
        return
    red = lll_reduce(rows)
    # same determinant up to sign and mutual membership via exact solves
    assert abs(det(IntMatrix.from_rows(red))) == abs(det(M))
    for v in red:
        assert _in_lattice(rows, v)
    for v in rows:
        assert _in_lattice(red, v)


def _in_lattice(basis, v):
    # solve c * basis = v over the rationals, require integer c
    a =[[Fraction(basis[r][c]) for r in range(3)] for c in range(3)]
    b = [Fraction(x) for x in v]
    for col in range(3):
        piv = next((r for r in range(col, 3) if a[r][col] != 0), None)
        if piv is None:
            return False
        a[col], a[piv] = a[piv], a[col]
        b[col], b[piv] = b[piv], b[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        b[col] *= inv
        for r in range(3):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
                b[r] -= f * b[col]
    return all(x.denominator == 1 for x in b)
