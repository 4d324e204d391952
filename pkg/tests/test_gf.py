import itertools

import numpy as np
import pytest

from cosetcodes import gf
from cosetcodes.gf import Poly, make_field, subfield_embedding


# ---------------------------------------------------------------
# field construction
# ---------------------------------------------------------------

def test_make_field_gf3_smallest_generator():
    f = make_field(3, 1)
    assert f.q == 3
    assert f.alpha == 2
    # 2 generates GF(3)^*: 2^1 = 2, 2^2 = 1
    assert sorted(f.exp) == [1, 2]


def test_make_field_gf2_trivial_group():
    f = make_field(2, 1)
    assert f.alpha == 1
    assert f.exp == [1]
    assert f.log[1] == 0


def test_make_field_gf25_table_and_order():
    f = make_field(5, 2)
    assert len(f.exp) == 24
    # antilog is a bijection onto the nonzero elements
    assert sorted(f.exp) == list(range(1, 25))
    # alpha has order exactly 24: no earlier return to 1
    assert all(f.exp[i] != 1 for i in range(1, 24))
    assert f.mul(f.exp[23], f.alpha) == 1


def test_make_field_gf9_defining_poly_is_lex_smallest_primitive():
    f = make_field(3, 2)
    found = f.defining
    # exhaustive search over smaller coefficient tuples: none may be primitive
    for c0, c1 in itertools.product(range(3), repeat=2):
        cand = (c0, c1, 1)
        if cand >= found:
            break
        assert not gf._is_primitive(list(cand), 3, 2)
    assert gf._is_primitive(list(found), 3, 2)


def test_make_field_rejects_bad_input():
    with pytest.raises(ValueError):
        make_field(4, 1)  # not prime
    with pytest.raises(ValueError):
        make_field(3, 0)
    with pytest.raises(ValueError):
        make_field(2, 21)  # over the size cap


def test_make_field_is_cached_and_deterministic():
    assert make_field(7, 1) is make_field(7, 1)
    assert make_field(3, 2).defining == (2, 1, 1)


def test_factor_prime_power():
    assert gf.factor_prime_power(8) == (2, 3)
    assert gf.factor_prime_power(9) == (3, 2)
    assert gf.factor_prime_power(13) == (13, 1)
    with pytest.raises(ValueError):
        gf.factor_prime_power(12)
    with pytest.raises(ValueError):
        gf.factor_prime_power(1)


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 49])
def test_field_axioms_exhaustive(q):
    f = gf.field_for(q)
    els = range(f.q)
    one = 1
    for a in els:
        assert f.add(a, 0) == a
        assert f.mul(a, one) == a
        assert f.mul(a, 0) == 0
        assert f.add(a, f.neg(a)) == 0
        if a:
            assert f.mul(a, f.inv(a)) == 1
    for a, b, c in itertools.product(els, repeat=3):
        assert f.mul(a, f.mul(b, c)) == f.mul(f.mul(a, b), c)
        assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))


def test_log_antilog_roundtrip():
    f = make_field(2, 4)
    for i in range(15):
        assert f.log[f.exp[i]] == i
    assert f.log[0] is None


# ---------------------------------------------------------------
# minimal polynomials
# ---------------------------------------------------------------

def test_minimal_polynomial_of_one_is_x_minus_one():
    f9 = make_field(3, 2)
    assert gf.minimal_polynomial(f9, 3, 0) == Poly(make_field(3, 1), [2, 1])


def test_minimal_polynomial_singleton_coset_is_linear():
    f25 = make_field(5, 2)
    base = make_field(5, 1)
    mp = gf.minimal_polynomial(f25, 5, 6)
    assert mp.degree == 1 and mp.is_monic
    # its root, lifted back into the extension, is alpha^6
    emb = subfield_embedding(f25, base)
    root = base.neg(mp.coeffs[0])
    assert emb.lift(root) == f25.exp[6]


def test_minimal_polynomial_of_alpha_has_degree_two_over_gf3():
    f9 = make_field(3, 2)
    mp = gf.minimal_polynomial(f9, 3, 1)
    assert mp.degree == 2
    assert all(0 <= c < 3 for c in mp.coeffs)
    # alpha's minimal polynomial is the defining polynomial itself
    assert mp.coeffs == f9.defining


@pytest.mark.parametrize("q,m", [(3, 2), (2, 2), (2, 3), (4, 2)])
def test_minimal_polynomials_multiply_to_xn_minus_one(q, m):
    p, e = gf.factor_prime_power(q)
    ext = make_field(p, e * m)
    base = make_field(p, e)
    n = q**m - 1
    seen = set()
    product = Poly.one(base)
    for i in range(n):
        orbit = frozenset(
            (i * q**t) % n for t in range(m)
        )
        if orbit in seen:
            continue
        seen.add(orbit)
        product = product * gf.minimal_polynomial(ext, q, i)
    assert product == Poly.x_pow_minus_one(base, n)


@pytest.mark.parametrize("q,m", [(3, 2), (5, 2), (3, 3)])
def test_minimal_polynomial_degree_equals_coset_size(q, m):
    from cosetcodes.cosets import coset_of

    p, e = gf.factor_prime_power(q)
    ext = make_field(p, e * m)
    for i in range(q**m - 1):
        mp = gf.minimal_polynomial(ext, q, i)
        assert mp.degree == coset_of(q, m, i).cardinality


def test_minimal_polynomial_range_errors():
    f9 = make_field(3, 2)
    with pytest.raises(ValueError):
        gf.minimal_polynomial(f9, 3, 8)
    with pytest.raises(ValueError):
        gf.minimal_polynomial(f9, 2, 1)  # GF(2) not a subfield of GF(9)


# ---------------------------------------------------------------
# subfield embeddings
# ---------------------------------------------------------------

@pytest.mark.parametrize("pq,ext_e", [((3, 1), 2), ((2, 2), 4), ((2, 2), 6), ((5, 1), 2)])
def test_embedding_is_a_field_homomorphism(pq, ext_e):
    p, eb = pq
    base = make_field(p, eb)
    ext = make_field(p, ext_e)
    emb = subfield_embedding(ext, base)
    for a in range(base.q):
        for b in range(base.q):
            assert emb.lift(base.add(a, b)) == ext.add(emb.lift(a), emb.lift(b))
            assert emb.lift(base.mul(a, b)) == ext.mul(emb.lift(a), emb.lift(b))
            assert emb.lower(emb.lift(a)) == a


def test_embedding_rejects_non_subfield():
    with pytest.raises(ValueError):
        subfield_embedding(make_field(2, 3), make_field(2, 2))


# ---------------------------------------------------------------
# matrix expansion
# ---------------------------------------------------------------

def test_expand_identity_entry():
    f9, f3 = make_field(3, 2), make_field(3, 1)
    out = gf.expand_matrix(f9, f3, [[1]])
    assert out == [[1], [0]]


def test_expand_orthogonality_equivalence():
    # v.u = 0 in the extension iff v is orthogonal to every expanded row
    rng = np.random.default_rng(7)
    f9, f3 = make_field(3, 2), make_field(3, 1)
    n = 6
    for _ in range(25):
        u = [int(x) for x in rng.integers(0, 9, size=n)]
        rows = gf.expand_matrix(f9, f3, [u])
        emb = subfield_embedding(f9, f3)
        for _ in range(20):
            v = [int(x) for x in rng.integers(0, 3, size=n)]
            ext_dot = 0
            for vi, ui in zip(v, u):
                ext_dot = f9.add(ext_dot, f9.mul(emb.lift(vi), ui))
            expanded_zero = all(gf.dot(f3, v, r) == 0 for r in rows)
            assert (ext_dot == 0) == expanded_zero


def test_expand_nullspace_exhaustive_small():
    # over all base-field vectors: M v = 0 in the extension iff the expanded
    # matrix annihilates v
    f9, f3 = make_field(3, 2), make_field(3, 1)
    emb = subfield_embedding(f9, f3)
    rng = np.random.default_rng(11)
    n = 4
    M = [[int(x) for x in rng.integers(0, 9, size=n)] for _ in range(2)]
    expanded = gf.expand_matrix(f9, f3, M)
    for v in itertools.product(range(3), repeat=n):
        ext_zero = True
        for row in M:
            acc = 0
            for vi, ui in zip(v, row):
                acc = f9.add(acc, f9.mul(emb.lift(vi), ui))
            if acc:
                ext_zero = False
                break
        assert ext_zero == all(x == 0 for x in gf.mat_vec(f3, expanded, list(v)))


def test_expand_nullspace_exhaustive_gf4():
    f16, f4 = make_field(2, 4), make_field(2, 2)
    emb = subfield_embedding(f16, f4)
    rng = np.random.default_rng(5)
    n = 8
    M = [[int(x) for x in rng.integers(0, 16, size=n)] for _ in range(2)]
    expanded = gf.expand_matrix(f16, f4, M)
    for v in itertools.product(range(4), repeat=n):
        ext_zero = True
        for row in M:
            acc = 0
            for vi, ui in zip(v, row):
                acc = f16.add(acc, f16.mul(emb.lift(vi), ui))
            if acc:
                ext_zero = False
                break
        assert ext_zero == all(x == 0 for x in gf.mat_vec(f4, expanded, list(v)))


def test_expand_raw_rows_and_rank_q4():
    # the four leading Vandermonde rows over GF(16) expand to 8 raw rows of
    # rank 7 over GF(4)
    f16, f4 = make_field(2, 4), make_field(2, 2)
    n = 15
    rows = [[f16.exp[(i * j) % n] for j in range(n)] for i in range(4)]
    raw = gf.expand_matrix(f16, f4, rows)
    assert len(raw) == 8
    assert gf.rank(f4, raw) == 7


def test_expand_respects_custom_basis_and_rejects_dependent():
    f9, f3 = make_field(3, 2), make_field(3, 1)
    alpha = f9.alpha
    out = gf.expand_matrix(f9, f3, [[alpha]], basis=[1, alpha])
    assert out == [[0], [1]]
    with pytest.raises(ValueError):
        gf.expand_matrix(f9, f3, [[1]], basis=[1, 1])
    with pytest.raises(ValueError):
        gf.expand_matrix(f9, f3, [[1]], basis=[1])


# ---------------------------------------------------------------
# linear algebra
# ---------------------------------------------------------------

def test_rank_trivial_cases():
    f5 = make_field(5, 1)
    assert gf.rank(f5, [[0, 0], [0, 0]]) == 0
    assert gf.rank(f5, [[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == 3
    assert gf.rank(f5, [[1, 2], [2, 4]]) == 1
    assert gf.rank(f5, [[1, 2], [2, 3]]) == 2


def test_rank_over_extension_field():
    f4 = make_field(2, 2)
    # rows over GF(4): second is 3 * first (3 = alpha^2)
    assert gf.rank(f4, [[1, 2], [3, f4.mul(3, 2)]]) == 1


def test_independent_rows_keeps_first_maximal_subset():
    f3 = make_field(3, 1)
    rows = [[1, 1, 0], [2, 2, 0], [0, 1, 1], [1, 2, 1]]
    # row1 = 2*row0; row3 = row0 + row2
    assert gf.independent_rows(f3, rows) == [0, 2]


def test_nullspace_annihilates_and_has_right_dimension():
    f7 = make_field(7, 1)
    rows = [[1, 2, 3, 4], [2, 4, 6, 1]]
    ns = gf.nullspace(f7, rows)
    assert len(ns) == 4 - gf.rank(f7, rows)
    for v in ns:
        assert gf.mat_vec(f7, rows, v) == [0, 0]


# ---------------------------------------------------------------
# polynomials
# ---------------------------------------------------------------

def test_poly_mul_divmod_roundtrip():
    f5 = make_field(5, 1)
    a = Poly(f5, [1, 2, 0, 3])
    b = Poly(f5, [4, 1])
    prod = a * b
    quot, rem = prod.divmod(b)
    assert quot == a and rem.is_zero
    quot, rem = (prod + Poly(f5, [2])).divmod(b)
    assert quot == a and rem == Poly(f5, [2])


def test_poly_normalization_and_degree():
    f3 = make_field(3, 1)
    assert Poly(f3, [1, 2, 0, 0]).degree == 1
    assert Poly(f3, [0, 0]).degree == -1
    assert Poly.zero(f3).is_zero
    assert Poly.x_pow_minus_one(f3, 4).coeffs == (2, 0, 0, 0, 1)


def test_poly_evaluate():
    f5 = make_field(5, 1)
    p = Poly(f5, [1, 0, 1])  # 1 + x^2
    assert p.evaluate(2) == 0  # 1 + 4 = 5 = 0
    assert p.evaluate(1) == 2
