"""Constructors checked against tuple-semantics oracles: indices are decoded
into component tuples, the expected operation is computed componentwise with
plain integer arithmetic, and the result is re-encoded and compared."""

from __future__ import annotations

import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from cleanrings import (
    Bimodule,
    BimoduleError,
    PairingMap,
    RingValidationError,
    cofactor,
    corner_ring,
    det,
    direct_product,
    idealization,
    matrix_element,
    matrix_entries,
    matrix_ring,
    module_from_action,
    morita_zero,
    quotient,
    regular_bimodule,
    tri2,
    tri3,
    truncated_power_series,
    zero_bimodule,
    zn,
    zn_bimodule,
)


# -- products ----------------------------------------------------------------------


def test_product_matches_componentwise_oracle():
    n1, n2 = 3, 4
    ring = direct_product([zn(n1), zn(n2)])

    def enc(a, b):
        return a * n2 + b

    assert ring.one == enc(1, 1)
    for a, c in itertools.product(range(n1), range(n2)):
        for b, d in itertools.product(range(n1), range(n2)):
            x, y = enc(a, c), enc(b, d)
            assert ring.add(x, y) == enc((a + b) % n1, (c + d) % n2)
            assert ring.mul(x, y) == enc((a * b) % n1, (c * d) % n2)


def test_product_units_and_idempotents_are_componentwise():
    ring = direct_product([zn(2), zn(4)])
    units = {a * 4 + b for a in (1,) for b in (1, 3)}
    idems = {a * 4 + b for a in (0, 1) for b in (0, 1)}
    assert set(ring.units) == units
    assert set(ring.idempotents) == idems
    assert ring.describe(ring.one) == "(1,1)"


def test_product_of_coprime_cyclics_is_cyclic():
    # Z_2 x Z_3 and Z_6 are isomorphic but differently indexed; compare invariants
    p = direct_product([zn(2), zn(3)])
    z6 = zn(6)
    assert len(p.units) == len(z6.units)
    assert len(p.idempotents) == len(z6.idempotents)
    assert p.is_commutative and not p.has_nonzero_nilpotents


# -- matrix rings -------------------------------------------------------------------


def matrix_mul_oracle(n, A, B, k):
    return [[sum(A[i][l] * B[l][j] for l in range(k)) % n for j in range(k)] for i in range(k)]


def matrix_add_oracle(n, A, B, k):
    return [[(A[i][j] + B[i][j]) % n for j in range(k)] for i in range(k)]


_M2 = {n: matrix_ring(zn(n), 2) for n in (2, 3, 4)}


@given(st.data())
@settings(max_examples=80)
def test_matrix_ring_matches_matrix_oracle(data):
    n = data.draw(st.sampled_from([2, 3, 4]))
    ring = _M2[n]
    grid = st.lists(st.lists(st.integers(0, n - 1), min_size=2, max_size=2), min_size=2, max_size=2)
    A = data.draw(grid)
    B = data.draw(grid)
    x, y = matrix_element(ring, A), matrix_element(ring, B)
    assert matrix_entries(ring, ring.mul(x, y)) == matrix_mul_oracle(n, A, B, 2)
    assert matrix_entries(ring, ring.add(x, y)) == matrix_add_oracle(n, A, B, 2)


def test_matrix_ring_known_counts():
    ring = matrix_ring(zn(2), 2)
    assert ring.order == 16
    assert len(ring.units) == 6  # |GL_2(F_2)|
    assert len(ring.idempotents) == 8
    assert not ring.is_commutative
    assert ring.has_nonzero_nilpotents
    e11 = matrix_element(ring, [[1, 0], [0, 0]])
    assert ring.is_idempotent(e11)
    assert ring.describe(ring.one) == "[[1,0],[0,1]]"


def test_matrix_encode_decode_round_trip():
    ring = matrix_ring(zn(3), 2)
    for idx in ring.elements:
        assert matrix_element(ring, matrix_entries(ring, idx)) == idx


# -- determinants and cofactors -------------------------------------------------------


def det_oracle(n, A):
    """Permutation-sum determinant over Z_n, independent of the ring tables."""
    k = len(A)
    total = 0
    for perm in itertools.permutations(range(k)):
        sign = 1
        seen = [False] * k
        # compute permutation parity by cycle counting
        p = list(perm)
        for start in range(k):
            if seen[start]:
                continue
            length = 0
            j = start
            while not seen[j]:
                seen[j] = True
                j = p[j]
                length += 1
            if length % 2 == 0:
                sign = -sign
        term = 1
        for i in range(k):
            term *= A[i][perm[i]]
        total += sign * term
    return total % n


def test_det_2x2_exhaustive_over_z6():
    ring = zn(6)
    for a, b, c, d in itertools.product(range(6), repeat=4):
        A = [[a, b], [c, d]]
        assert det(ring, A) == (a * d - b * c) % 6


@given(st.data())
@settings(max_examples=60)
def test_det_3x3_matches_permutation_oracle(data):
    n = data.draw(st.sampled_from([2, 3, 5, 6]))
    ring = zn(n)
    A = data.draw(st.lists(st.lists(st.integers(0, n - 1), min_size=3, max_size=3), min_size=3, max_size=3))
    assert det(ring, A) == det_oracle(n, A)


@given(st.data())
@settings(max_examples=40)
def test_laplace_expansion_identity(data):
    """det A = sum_j A[0][j] * cofactor(A, 0, j) ties det and cofactor together."""
    n = data.draw(st.sampled_from([4, 5, 6]))
    k = data.draw(st.sampled_from([2, 3]))
    ring = zn(n)
    A = data.draw(st.lists(st.lists(st.integers(0, n - 1), min_size=k, max_size=k), min_size=k, max_size=k))
    expansion = 0
    for j in range(k):
        expansion = ring.add(expansion, ring.mul(A[0][j], cofactor(ring, A, 0, j)))
    assert expansion == det(ring, A)


def test_det_rejects_noncommutative_and_oversize():
    m = matrix_ring(zn(2), 2)
    with pytest.raises(ValueError):
        det(m, [[0]])
    with pytest.raises(ValueError):
        det(zn(2), [[0] * 5] * 5)
    with pytest.raises(ValueError):
        det(zn(2), [[0, 1], [0, 1, 1]])


# -- bimodules ---------------------------------------------------------------------


def test_zn_bimodule_validates_exactly_when_modulus_divides():
    assert zn_bimodule(zn(4), zn(4), 2).order == 2
    assert zn_bimodule(zn(6), zn(6), 3).order == 3
    with pytest.raises(BimoduleError):
        zn_bimodule(zn(4), zn(4), 3)
    with pytest.raises(BimoduleError):
        zn_bimodule(zn(2), zn(2), 4)


def test_regular_bimodule_validates():
    b = regular_bimodule(zn(6))
    assert b.order == 6
    assert b.is_symmetric()
    assert b.left(2, 3) == 0 and b.right(3, 5) == 3


def test_zero_bimodule():
    b = zero_bimodule(zn(4), zn(6))
    assert b.order == 1
    assert b.left(3, 0) == 0 and b.right(0, 5) == 0


def test_broken_action_is_rejected():
    z2 = zn(2)
    # left action that ignores the ring element is not unital unless trivial
    bad_left = [[0, 0], [0, 0]]
    with pytest.raises(BimoduleError):
        Bimodule(z2, z2, zn(2).add_table, bad_left, np.transpose(bad_left))


# -- block constructions ---------------------------------------------------------------


def tri2_mul_oracle(r, m, s, r2, m2, s2, n):
    """(r, m, s)(r', m', s') = (r r', m r' + s m', s s') with entries mod n."""
    return ((r * r2) % n, (m * r2 + s * m2) % n, (s * s2) % n)


def test_tri2_matches_triple_oracle():
    n = 2
    z = zn(n)
    ring = tri2(z, z, zn_bimodule(z, z, n))

    def enc(r, m, s):
        return (r * n + m) * n + s

    for t1 in itertools.product(range(n), repeat=3):
        for t2 in itertools.product(range(n), repeat=3):
            expected = tri2_mul_oracle(*t1, *t2, n)
            assert ring.mul(enc(*t1), enc(*t2)) == enc(*expected)
            added = tuple((a + b) % n for a, b in zip(t1, t2))
            assert ring.add(enc(*t1), enc(*t2)) == enc(*added)


def test_tri2_known_idempotents():
    z2 = zn(2)
    ring = tri2(z2, z2, zn_bimodule(z2, z2, 2))
    assert ring.order == 8
    assert ring.idempotents == (0, 1, 3, 4, 5, 6)
    assert ring.one == 5  # (1, 0, 1)
    assert not ring.is_commutative


def morita_mul_oracle(q1, q2, n):
    r, m, nn, s = q1
    r2, m2, n2, s2 = q2
    return ((r * r2) % n, (r * m2 + m * s2) % n, (nn * r2 + s * n2) % n, (s * s2) % n)


def test_morita_zero_matches_quadruple_oracle():
    n = 2
    z = zn(n)
    b = zn_bimodule(z, z, n)
    ring = morita_zero(z, z, b, b)

    def enc(q):
        return ((q[0] * n + q[1]) * n + q[2]) * n + q[3]

    quads = list(itertools.product(range(n), repeat=4))
    for q1 in quads:
        for q2 in quads:
            assert ring.mul(enc(q1), enc(q2)) == enc(morita_mul_oracle(q1, q2, n))


def test_morita_zero_known_counts():
    z2 = zn(2)
    b = zn_bimodule(z2, z2, 2)
    ring = morita_zero(z2, z2, b, b)
    assert ring.order == 16
    assert ring.one == 9  # (1, 0, 0, 1)
    assert len(ring.units) == 4
    assert len(ring.idempotents) == 10


def tri3_mul_oracle(x, y, n):
    x1, x21, x2, x31, x32, x3 = x
    y1, y21, y2, y31, y32, y3 = y
    return (
        (x1 * y1) % n,
        (x21 * y1 + x2 * y21) % n,
        (x2 * y2) % n,
        (x31 * y1 + x32 * y21 + x3 * y31) % n,
        (x32 * y2 + x3 * y32) % n,
        (x3 * y3) % n,
    )


def test_tri3_with_multiplication_pairing_matches_oracle():
    n = 2
    z = zn(n)
    b = zn_bimodule(z, z, n)
    comp = PairingMap((np.arange(n)[:, None] * np.arange(n)[None, :]) % n)
    ring = tri3(z, z, z, b, b, b, comp)

    def enc(t):
        idx = 0
        for d in t:
            idx = idx * n + d
        return idx

    tuples = list(itertools.product(range(n), repeat=6))
    for x in tuples[:16]:
        for y in tuples:
            assert ring.mul(enc(x), enc(y)) == enc(tri3_mul_oracle(x, y, n))


def test_tri3_zero_pairing_drops_cross_term():
    n = 2
    z = zn(n)
    b = zn_bimodule(z, z, n)
    ring = tri3(z, z, z, b, b, b)  # zero pairing by default
    # x32 = 1 and y21 = 1, everything else 0: product must be 0
    x = (0, 0, 0, 0, 1, 0)
    y = (0, 1, 0, 0, 0, 0)

    def enc(t):
        idx = 0
        for d in t:
            idx = idx * n + d
        return idx

    assert ring.mul(enc(x), enc(y)) == 0


def test_pairing_validation_rejects_unbalanced_table():
    n = 2
    z = zn(n)
    b = zn_bimodule(z, z, n)
    # constant-1 pairing is not biadditive: comp(0, v) must be 0
    bad = PairingMap(np.ones((n, n), dtype=int))
    with pytest.raises(BimoduleError):
        tri3(z, z, z, b, b, b, bad)


# -- idealization -----------------------------------------------------------------------


def test_idealization_matches_pair_oracle():
    n = 4
    z = zn(n)
    ring = idealization(z, module_from_action(z, z.add_table, z.mul_table))

    def enc(r, m):
        return r * n + m

    for r, m in itertools.product(range(n), repeat=2):
        for r2, m2 in itertools.product(range(n), repeat=2):
            assert ring.mul(enc(r, m), enc(r2, m2)) == enc((r * r2) % n, (r * m2 + r2 * m) % n)
    assert ring.one == enc(1, 0)
    # (0, m) squares to zero: the module slot is a square-zero ideal
    for m in range(n):
        assert ring.mul(enc(0, m), enc(0, m)) == 0


def test_idealization_requires_commutative_base():
    m = matrix_ring(zn(2), 2)
    with pytest.raises(ValueError):
        idealization(m, regular_bimodule(m))


# -- quotients ----------------------------------------------------------------------------


def test_quotient_of_zn_by_divisor_is_smaller_zn():
    ring = zn(12)
    quot, proj = quotient(ring, [0, 4, 8])
    assert quot == zn(4)
    assert proj.tolist() == [x % 4 for x in range(12)]


def test_quotient_by_full_ring_is_trivial():
    ring = zn(6)
    quot, _ = quotient(ring, range(6))
    assert quot.is_trivial


def test_quotient_rejects_non_ideals():
    ring = zn(12)
    with pytest.raises(ValueError):
        quotient(ring, [0, 5])
    with pytest.raises(ValueError):
        quotient(ring, [4, 8])


def test_quotient_of_matrix_ring_by_radical():
    base = _M2[4]
    members = base.jacobson_radical
    quot, proj = quotient(base, members)
    assert quot.order == base.order // len(members)
    assert quot.jacobson_radical == (0,)


# -- truncated power series --------------------------------------------------------------


def test_series_matches_cauchy_product_oracle():
    n, k = 3, 3
    ring = truncated_power_series(zn(n), k)

    def enc(coeffs):
        idx = 0
        for c in coeffs:
            idx = idx * n + c
        return idx

    for a in itertools.product(range(n), repeat=k):
        for b in itertools.product(range(n), repeat=k):
            expected = tuple(
                sum(a[i] * b[d - i] for i in range(d + 1) if i < k and d - i < k) % n
                for d in range(k)
            )
            assert ring.mul(enc(a), enc(b)) == enc(expected)


def test_series_units_have_unit_constant_term():
    ring = truncated_power_series(zn(4), 2)
    # element (a0, a1) encoded as a0 * 4 + a1; units are exactly a0 odd
    expected_units = {a0 * 4 + a1 for a0 in (1, 3) for a1 in range(4)}
    assert set(ring.units) == expected_units
    x = 1  # coefficients (0, 1)
    assert ring.mul(x, x) == 0  # x^2 truncates away
    assert ring.describe(ring.one) == "1"


# -- corner rings --------------------------------------------------------------------------


def test_corner_of_z6_at_idempotent_4():
    corner = corner_ring(zn(6), 4)
    assert corner.carrier == (0, 2, 4)
    assert corner.ring.order == 3
    assert corner.ring.one == corner.position[4]
    assert corner.embed(corner.ring.one) == 4
    assert corner.ring.is_commutative
    assert len(corner.ring.units) == 2  # three-element field


def test_corner_at_one_is_whole_ring():
    ring = zn(6)
    corner = corner_ring(ring, 1)
    assert corner.ring == ring


def test_corner_requires_idempotent():
    with pytest.raises(ValueError):
        corner_ring(zn(6), 2)


def test_corner_of_matrix_ring_at_e11_is_base():
    ring = matrix_ring(zn(3), 2)
    e11 = matrix_element(ring, [[1, 0], [0, 0]])
    corner = corner_ring(ring, e11)
    assert corner.ring.order == 3
    assert corner.ring.is_commutative
    assert len(corner.ring.units) == 2


# -- provenance and labels -------------------------------------------------------------------


def test_provenance_kinds():
    z2 = zn(2)
    b = zn_bimodule(z2, z2, 2)
    assert zn(5).provenance["kind"] == "zn"
    assert direct_product([z2, z2]).provenance["kind"] == "product"
    assert matrix_ring(z2, 2).provenance["kind"] == "matrix"
    assert tri2(z2, z2, b).provenance == {"kind": "tri2", "radices": [2, 2, 2]}
    assert morita_zero(z2, z2, b, b).provenance["kind"] == "morita"
    assert truncated_power_series(z2, 2).provenance["kind"] == "series"
    ideal_prov = idealization(z2, module_from_action(z2, z2.add_table, z2.mul_table)).provenance
    assert ideal_prov["kind"] == "idealization"
    assert ideal_prov["module_add"] == [[0, 1], [1, 0]]
    assert ideal_prov["module_action"] == [[0, 0], [0, 1]]
