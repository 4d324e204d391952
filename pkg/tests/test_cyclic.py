import pytest

from cosetcodes import cyclic, gf
from cosetcodes.cyclic import (
    DefiningSet,
    bch_bound,
    code_from_cosets,
    codeword_basis,
    contains_dual,
    dual_code,
    dual_defining_set,
    nested,
    parity_check_matrix,
)
from cosetcodes.gf import Poly, subfield_embedding


# ---------------------------------------------------------------
# construction
# ---------------------------------------------------------------

def test_code_with_four_leading_cosets_q5():
    code = code_from_cosets(5, 2, [0, 1, 2, 3])
    assert code.defining.size == 7
    assert code.k == 17  # q^2 - 2q + 2
    assert set(code.defining.exponents) == {0, 1, 2, 3, 5, 10, 15}


def test_empty_defining_set_gives_full_code():
    code = code_from_cosets(5, 2, [])
    assert code.k == 24
    assert code.generator == Poly.one(code.base)
    assert bch_bound(code) == 1


def test_single_coset_code_q3():
    code = code_from_cosets(3, 2, [1])
    assert code.defining.exponents == (1, 3)
    assert code.k == 6


def test_generator_roots_are_exactly_the_defining_set():
    code = code_from_cosets(3, 2, [1])
    emb = subfield_embedding(code.ext, code.base)
    lifted = [emb.lift(c) for c in code.generator.coeffs]
    for z in range(code.n):
        acc = 0
        x = code.ext.exp[z]
        for c in reversed(lifted):
            acc = code.ext.add(code.ext.mul(acc, x), c)
        assert (acc == 0) == (z in code.defining.exponents)


def test_defining_set_closed_under_multiplier():
    ds = DefiningSet.from_exponents(5, 2, [1, 7])
    zs = set(ds.exponents)
    assert {(z * 5) % 24 for z in zs} == zs


# ---------------------------------------------------------------
# the run-based distance bound
# ---------------------------------------------------------------

def test_bch_bound_run_of_four():
    code = code_from_cosets(5, 2, [0, 1, 2, 3])
    assert bch_bound(code) == 5


@pytest.mark.parametrize("q,s_plus_1", [(5, 1), (5, 2), (5, 3), (7, 4)])
def test_bch_bound_single_coset_is_two(q, s_plus_1):
    code = code_from_cosets(q, 2, [s_plus_1])
    assert bch_bound(code) == 2


def test_bch_bound_wraps_around():
    # q=3, m=2: exponents {7, 0, 1} contain the cyclic run 7, 0, 1
    ds = DefiningSet.from_exponents(3, 2, [7, 0, 1])
    assert set(ds.exponents) == {0, 1, 3, 5, 7}
    assert bch_bound(ds) == 4


def test_bch_bound_full_set():
    ds = DefiningSet.from_exponents(3, 2, range(8))
    assert bch_bound(ds) == 9


# ---------------------------------------------------------------
# duality
# ---------------------------------------------------------------

def test_dual_of_full_code_is_zero_code():
    code = code_from_cosets(5, 2, [])
    assert dual_defining_set(code).exponents == tuple(range(24))


def test_dual_defining_set_of_block_inner_code():
    # inner code excluding the cosets of 6..9 (q=5): its dual's defining
    # set is the negation of the excluded block and carries a length-4 run
    z2 = [x for x in range(24)
          if cyclic.coset_of(5, 2, x).rep not in (6, 7, 8, 9)]
    inner = code_from_cosets(5, 2, z2)
    d = dual_code(inner)
    assert d.defining.exponents == (3, 8, 13, 15, 16, 17, 18)
    assert bch_bound(d) == 5
    assert d.k == inner.n - inner.k


def test_self_reciprocal_dual_is_complement():
    # Z = C_1 union C_19 is closed under negation mod 24
    code = code_from_cosets(5, 2, [1, 19])
    dual = dual_defining_set(code)
    assert set(dual.exponents) == set(range(24)) - set(code.defining.exponents)


def test_contains_dual_examples():
    assert contains_dual(code_from_cosets(5, 2, [1])) is True
    assert contains_dual(code_from_cosets(5, 2, [0])) is False
    assert contains_dual(code_from_cosets(5, 2, [1, 19])) is False


def test_nested_examples():
    outer = code_from_cosets(5, 2, range(4))
    z2 = [x for x in range(24)
          if cyclic.coset_of(5, 2, x).rep not in (6, 7, 8, 9)]
    inner = code_from_cosets(5, 2, z2)
    assert nested(outer, inner) is True
    assert nested(outer, outer) is True
    a = code_from_cosets(5, 2, [1])
    b = code_from_cosets(5, 2, [2])
    assert nested(a, b) is False
    with pytest.raises(ValueError):
        nested(a, code_from_cosets(3, 2, [1]))


# ---------------------------------------------------------------
# parity-check matrices
# ---------------------------------------------------------------

def test_check_matrix_ranks_q4():
    parent = code_from_cosets(4, 2, [0, 1, 2, 3, 5, 6, 7])
    assert len(parity_check_matrix(parent, [0, 1, 2, 3, 5, 6, 7])) == 12
    assert len(parity_check_matrix(parent, [0, 1, 2, 3])) == 7
    assert len(parity_check_matrix(parent, [5, 6, 7])) == 5


def test_check_matrix_all_ones_row():
    code = code_from_cosets(5, 2, [0])
    H = parity_check_matrix(code, [0])
    assert H == [[1] * 24]


def test_check_matrix_rejects_bad_exponent():
    code = code_from_cosets(5, 2, [0])
    with pytest.raises(ValueError):
        parity_check_matrix(code, [24])


@pytest.mark.parametrize("q,m,exps", [
    (3, 2, [1]), (3, 2, [0, 1]), (5, 2, [0, 1, 2, 3]), (4, 2, [1, 5]),
])
def test_codewords_lie_in_check_matrix_nullspace(q, m, exps):
    code = code_from_cosets(q, m, exps)
    reps = [c.rep for c in code.defining.cosets]
    H = parity_check_matrix(code, reps)
    assert len(H) == code.n - code.k
    for row in codeword_basis(code):
        assert gf.mat_vec(code.base, H, row) == [0] * len(H)


# ---------------------------------------------------------------
# algebraic identities (small sample; the full sweep runs in acceptance)
# ---------------------------------------------------------------

@pytest.mark.parametrize("q,m,exps", [
    (3, 2, [1]), (3, 2, [0, 2, 5]), (5, 2, [0, 1, 2, 3]),
    (7, 2, [1, 9]), (4, 3, [1, 3]),
])
def test_generator_times_check_poly_is_xn_minus_one(q, m, exps):
    code = code_from_cosets(q, m, exps)
    g = code.generator
    h, rem = Poly.x_pow_minus_one(code.base, code.n).divmod(g)
    assert rem.is_zero
    assert g * h == Poly.x_pow_minus_one(code.base, code.n)


def test_designed_distance_cap_for_block_sets():
    # defining set = cosets of s+1..s+c with s+c <= q-2 caps the bound at c+2
    for q in (5, 7, 9, 11, 13):
        for s in range(q - 2):
            for c in range(1, q - 1 - s):
                ds = DefiningSet.from_exponents(q, 2, range(s + 1, s + c + 1))
                delta = bch_bound(ds)
                assert delta <= c + 2
                if c == 1:
                    assert delta == 2
