"""Cyclic and BCH-style codes of length q^m - 1 over GF(q), built from
defining sets of cyclotomic cosets.

A code is a value object: defining set, generator polynomial, dimension.
The run-based designed-distance bound, duals, the dual-containing test and
parity-check matrices (expanded over the base field) all live here.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import gf
from .cosets import Coset, coset_of
from .gf import FieldContext, Poly, make_field


@dataclass(frozen=True)
class DefiningSet:
    """A union of cyclotomic cosets with its flattened sorted exponent list."""

    n: int
    q: int
    cosets: tuple[Coset, ...]
    exponents: tuple[int, ...]

    @classmethod
    def from_exponents(cls, q: int, m: int, exponents) -> "DefiningSet":
        n = q**m - 1
        by_rep: dict[int, Coset] = {}
        for a in exponents:
            c = coset_of(q, m, a)
            by_rep[c.rep] = c
        cosets = tuple(sorted(by_rep.values(), key=lambda c: c.rep))
        flat = sorted(x for c in cosets for x in c.elements)
        if len(flat) != len(set(flat)):
            raise AssertionError("cosets overlap")
        return cls(n=n, q=q, cosets=cosets, exponents=tuple(flat))

    @property
    def size(self) -> int:
        return len(self.exponents)

    def __contains__(self, x: int) -> bool:
        return x % self.n in set(self.exponents)


@dataclass(frozen=True)
class CyclicCode:
    """Cyclic code over GF(q) of length n = q^m - 1 with defining set Z.

    g divides x^n - 1, its roots are exactly alpha^z for z in Z, and
    k = n - |Z|.
    """

    base: FieldContext
    ext: FieldContext
    q: int
    m: int
    n: int
    defining: DefiningSet
    generator: Poly
    k: int

    def __repr__(self):
        return f"CyclicCode[{self.n}, {self.k}]_{self.q}"


def contexts_for(q: int, m: int) -> tuple[FieldContext, FieldContext]:
    """(GF(q), GF(q^m)) for a prime power q."""
    p, e = gf.factor_prime_power(q)
    return make_field(p, e), make_field(p, e * m)


def code_from_cosets(q: int, m: int, exponents) -> CyclicCode:
    """Cyclic code whose defining set is the union of the cosets of the
    given exponents; g is the product of the distinct minimal polynomials."""
    base, ext = contexts_for(q, m)
    n = q**m - 1
    defining = DefiningSet.from_exponents(q, m, exponents)
    g = Poly.one(base)
    for c in defining.cosets:
        g = g * gf.minimal_polynomial(ext, q, c.rep)
    if g.degree != defining.size:
        raise AssertionError("generator degree does not match defining set size")
    return CyclicCode(
        base=base, ext=ext, q=q, m=m, n=n,
        defining=defining, generator=g, k=n - defining.size,
    )


def _longest_cyclic_run(exponents, n: int) -> int:
    if not exponents:
        return 0
    zs = sorted(exponents)
    if len(zs) == n:
        return n
    present = set(zs)
    best = 0
    for z in zs:
        if (z - 1) % n in present:
            continue  # not a run start
        length = 1
        while (z + length) % n in present:
            length += 1
        best = max(best, length)
    return best


def bch_bound(code) -> int:
    """1 + the longest cyclic run of consecutive exponents in the defining
    set: the run-based lower bound on minimum distance.  Accepts a
    CyclicCode or a DefiningSet; an empty set gives 1."""
    ds = code.defining if isinstance(code, CyclicCode) else code
    return 1 + _longest_cyclic_run(ds.exponents, ds.n)


def dual_defining_set(code: CyclicCode) -> DefiningSet:
    """Defining set of the Euclidean dual: {0..n-1} minus -Z mod n."""
    n = code.n
    neg = {(-z) % n for z in code.defining.exponents}
    comp = [x for x in range(n) if x not in neg]
    return DefiningSet.from_exponents(code.q, code.m, comp)


def dual_code(code: CyclicCode) -> CyclicCode:
    return code_from_cosets(code.q, code.m, dual_defining_set(code).exponents)


def contains_dual(code) -> bool:
    """True iff the code contains its Euclidean dual.

    Computed both as Z intersect -Z empty and as 'no member coset's
    complementary coset meets Z'; the two must agree.  Accepts a CyclicCode
    or a bare DefiningSet.
    """
    ds = code.defining if isinstance(code, CyclicCode) else code
    n = ds.n
    m = _multiplicative_order(ds.q, n)
    zset = set(ds.exponents)
    by_negation = zset.isdisjoint({(-z) % n for z in zset})
    comp_union = set()
    for c in ds.cosets:
        comp = coset_of(ds.q, m, (n - c.rep) % n)
        comp_union.update(comp.elements)
    by_complements = comp_union.isdisjoint(zset)
    if by_negation != by_complements:
        raise AssertionError(
            f"dual-containing criteria disagree on Z={sorted(zset)} mod {n}"
        )
    return by_negation


def _multiplicative_order(q: int, n: int) -> int:
    m = 1
    v = q % n
    while v != 1:
        v = (v * q) % n
        m += 1
    return m


def nested(outer: CyclicCode, inner: CyclicCode) -> bool:
    """True iff inner is a subcode of outer, i.e. Z(outer) is a subset of
    Z(inner) (equivalently g_outer divides g_inner)."""
    if (outer.n, outer.q) != (inner.n, inner.q):
        raise ValueError("codes have different length or alphabet")
    return set(outer.defining.exponents) <= set(inner.defining.exponents)


def parity_check_matrix(code: CyclicCode, rows) -> list[list[int]]:
    """Check matrix over GF(q) from the Vandermonde-style extension rows
    (1, alpha^i, alpha^(2i), ...) for each exponent i in `rows`, expanded
    over the polynomial basis, with linearly dependent rows removed (first
    maximal independent subset, in row order)."""
    n, ext = code.n, code.ext
    ext_rows = []
    for i in rows:
        if not 0 <= i < n:
            raise ValueError(f"exponent {i} out of range [0, {n})")
        ext_rows.append([ext.exp[(i * j) % n] for j in range(n)])
    raw = gf.expand_matrix(ext, code.base, ext_rows)
    keep = gf.independent_rows(code.base, raw)
    return [raw[i] for i in keep]


def codeword_basis(code: CyclicCode) -> list[list[int]]:
    """The k cyclic shifts x^j g(x), j = 0..k-1, as length-n vectors: a
    GF(q)-basis of the code."""
    gcoeffs = list(code.generator.coeffs)
    rows = []
    for j in range(code.k):
        row = [0] * code.n
        for t, c in enumerate(gcoeffs):
            row[j + t] = c
        rows.append(row)
    return rows
