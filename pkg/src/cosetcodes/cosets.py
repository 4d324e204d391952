"""q-ary cyclotomic cosets modulo n = q^m - 1 and their structure.

Everything here is plain modular arithmetic; no field tables are involved.
All values are immutable and all functions are pure.
"""

from __future__ import annotations

from dataclasses import dataclass

MAX_MODULUS = 10**6


@dataclass(frozen=True)
class Coset:
    """One q-ary cyclotomic coset modulo n.

    `elements` lists the orbit in multiplication order starting from the
    minimum element: rep, rep*q, rep*q^2, ... reduced mod n.
    """

    n: int
    q: int
    rep: int
    elements: tuple[int, ...]

    @property
    def cardinality(self) -> int:
        return len(self.elements)

    @property
    def last(self) -> int:
        """rep * q^(cardinality-1) mod n, the orbit's final element."""
        return self.elements[-1]

    def __contains__(self, x) -> bool:
        return x % self.n in self.elements if self.n > 0 else x == 0

    def __repr__(self):
        return f"Coset(q={self.q}, n={self.n}, {{{', '.join(map(str, self.elements))}}})"


@dataclass(frozen=True)
class GapStat:
    """Minimum absolute difference between distinct reduced elements of a
    coset; absent (None) for singletons, where no pair exists."""

    coset: Coset
    value: int | None


def _orbit(q: int, n: int, a: int) -> list[int]:
    a %= n
    out = [a]
    j = (a * q) % n
    while j != a:
        out.append(j)
        j = (j * q) % n
    return out


def coset_of(q: int, m: int, a: int) -> Coset:
    """The q-ary coset of a modulo q^m - 1 (a is reduced first)."""
    if q < 2:
        raise ValueError(f"q must be >= 2, got {q}")
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    n = q**m - 1
    if n == 1:
        return Coset(n=1, q=q, rep=0, elements=(0,))
    orbit = _orbit(q, n, a)
    rep = min(orbit)
    return Coset(n=n, q=q, rep=rep, elements=tuple(_orbit(q, n, rep)))


def all_cosets(q: int, m: int) -> list[Coset]:
    """Partition of {0, ..., n-1} into cosets, sorted by representative."""
    if q < 2 or m < 1:
        raise ValueError("need q >= 2 and m >= 1")
    n = q**m - 1
    if n > MAX_MODULUS:
        raise ValueError(f"modulus {n} exceeds cap {MAX_MODULUS}")
    if n == 1:
        return [Coset(n=1, q=q, rep=0, elements=(0,))]
    seen = bytearray(n)
    out = []
    for s in range(n):
        if not seen[s]:
            orbit = _orbit(q, n, s)
            for x in orbit:
                seen[x] = 1
            out.append(Coset(n=n, q=q, rep=s, elements=tuple(orbit)))
    return out


def parity_class(c: Coset) -> str:
    """'even' or 'odd': the common parity of all elements (odd q only)."""
    if c.q % 2 == 0:
        raise ValueError("parity structure is only claimed for odd q")
    parities = {x % 2 for x in c.elements}
    if len(parities) != 1:
        raise AssertionError(f"mixed parity in {c!r}")
    return "even" if parities == {0} else "odd"


def gap_stat(c: Coset) -> GapStat:
    if c.cardinality == 1:
        return GapStat(c, None)
    els = c.elements
    best = min(
        abs(els[j] - els[l])
        for j in range(len(els))
        for l in range(j + 1, len(els))
    )
    return GapStat(c, best)


def complementary(c: Coset) -> Coset:
    """The unique coset containing n - rep."""
    if c.n == 1:
        return c
    m = _order_of(c.q, c.n)
    return coset_of(c.q, m, (c.n - c.rep) % c.n)


def _order_of(q: int, n: int) -> int:
    m = 1
    v = q % n
    while v != 1:
        v = (v * q) % n
        m += 1
    return m


def coset_oplus(c1: Coset, c2bar: Coset) -> Coset:
    """Combine a coset with its complementary coset through the witness
    element w in c2bar satisfying rep(c1) + w = 0 mod n; the result is the
    coset of the witnessed sum, i.e. {0} whenever c2bar complements c1."""
    if c1.n != c2bar.n or c1.q != c2bar.q:
        raise ValueError("cosets live modulo different (n, q)")
    n, s = c1.n, c1.rep
    if n == 1:
        return c1
    for w in c2bar.elements:
        if (s + w) % n == 0:
            m = _order_of(c1.q, n)
            return coset_of(c1.q, m, s + w)
    residues = {w: (s + w) % n for w in c2bar.elements}
    raise ValueError(
        f"no witness: rep {s} plus each of {sorted(c2bar.elements)} gives "
        f"residues {residues}, none are 0 mod {n}"
    )


def disjointness_range(q: int, m: int) -> int:
    """Largest T such that any distinct x, y in [1, T] not divisible by q
    are guaranteed to lie in distinct cosets.

    Even m uses the improved bound 2*q^(m/2); odd m falls back to the
    general-range bound min(q^ceil(m/2) - 1, n - 1).
    """
    if q < 2 or m < 1:
        raise ValueError("need q >= 2 and m >= 1")
    n = q**m - 1
    if m % 2 == 0:
        return 2 * q ** (m // 2)
    return min(q ** ((m + 1) // 2) - 1, n - 1)


def special_coset_cardinality(q: int, m: int) -> tuple[int, int]:
    """For even m the coset of q^(m/2) + 1 has only m/2 elements; returns
    (representative, cardinality) after verifying the orbit directly."""
    if m % 2 != 0:
        raise ValueError("defined for even m only")
    s = q ** (m // 2) + 1
    c = coset_of(q, m, s)
    if c.rep != s % c.n or c.cardinality != m // 2:
        raise AssertionError(
            f"expected coset of {s} mod {c.n} to have {m // 2} elements, got {c!r}"
        )
    return s, m // 2


def ladder_cosets(q: int, m: int, c: int) -> list[Coset]:
    """The cosets of q+1, 2q+1, ..., cq+1: pairwise disjoint, each of
    cardinality m, disjoint from the cosets of 1..c, with final orbit
    elements forming c consecutive integers."""
    if c < 1:
        raise ValueError("need c >= 1")
    bound = q ** ((m + 1) // 2) - 1
    if not c * q + 1 < bound:
        raise ValueError(
            f"hypothesis violated: {c}*{q}+1 = {c * q + 1} is not < {bound}"
        )
    n = q**m - 1
    out = [coset_of(q, m, j * q + 1) for j in range(1, c + 1)]
    seen: dict[int, int] = {}
    for j, cs in enumerate(out, start=1):
        if cs.cardinality != m:
            raise AssertionError(f"{cs!r} does not have {m} elements")
        if cs.rep != j * q + 1:
            raise AssertionError(f"{j * q + 1} is not minimal in its coset {cs!r}")
        for x in cs.elements:
            if x in seen:
                raise AssertionError(f"element {x} shared between ladder cosets")
            seen[x] = cs.rep
    for i in range(1, c + 1):
        low = coset_of(q, m, i)
        if any(x in seen for x in low.elements):
            raise AssertionError(f"ladder cosets meet the coset of {i}")
    lasts = [((j * q + 1) * q ** (m - 1)) % n for j in range(1, c + 1)]
    for a, b in zip(lasts, lasts[1:]):
        if b != a + 1:
            raise AssertionError(f"final elements {lasts} are not consecutive")
    return out
