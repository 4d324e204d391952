"""CSS-type qudit code parameters from nested pairs of cyclic codes.

A nested pair C2 in C1 yields an [[n, k1 - k2, D]] qudit code whose distance
is at least the smaller of the two run-based bounds, for C1 and for the dual
of C2.  Four parameter families are provided; each one rebuilds its cosets
and dimensions from scratch on every call.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from . import cyclic
from .cyclic import CyclicCode
from .gf import factor_prime_power


@dataclass(frozen=True)
class CssParams:
    """Parameters of one CSS pair.

    distance_lb is min(bch_bound(outer), bch_bound(dual of inner)).
    designed_distance is the family's target (None for ad-hoc pairs); it is
    what parameter tables print.
    """

    n: int
    q: int
    m: int
    k: int
    distance_lb: int
    designed_distance: int | None
    family: str | None
    outer: CyclicCode
    inner: CyclicCode

    @property
    def k1(self) -> int:
        return self.outer.k

    @property
    def k2(self) -> int:
        return self.inner.k

    @property
    def printed_distance(self) -> int:
        return self.designed_distance if self.designed_distance is not None else self.distance_lb

    def bracket(self) -> str:
        return f"[[{self.n}, {self.k}, d >= {self.printed_distance}]]_{self.q}"

    def __repr__(self):
        return f"CssParams({self.bracket()})"


def css_from_pair(
    outer: CyclicCode,
    inner: CyclicCode,
    designed_distance: int | None = None,
    family: str | None = None,
) -> CssParams:
    """CSS parameters from a nested pair (inner must be a subcode of outer)."""
    if not cyclic.nested(outer, inner):
        raise ValueError("inner is not a subcode of outer")
    d_lb = min(cyclic.bch_bound(outer), cyclic.bch_bound(cyclic.dual_code(inner)))
    return CssParams(
        n=outer.n, q=outer.q, m=outer.m, k=outer.k - inner.k,
        distance_lb=d_lb, designed_distance=designed_distance,
        family=family, outer=outer, inner=inner,
    )


def _require_prime_power(q: int, minimum: int):
    factor_prime_power(q)
    if q < minimum:
        raise ValueError(f"need q >= {minimum}, got {q}")


def _pair_excluding(q: int, m: int, c: int, excluded_exponents) -> tuple[CyclicCode, CyclicCode]:
    """outer from the cosets of 0..c-2; inner from every coset except those
    of the given exponents."""
    from .cosets import all_cosets, coset_of

    outer = cyclic.code_from_cosets(q, m, range(c - 1))
    excluded = {coset_of(q, m, x).rep for x in excluded_exponents}
    inner_exps = [
        cs.rep for cs in all_cosets(q, m) if cs.rep not in excluded
    ]
    inner = cyclic.code_from_cosets(q, m, inner_exps)
    return outer, inner


def family_block_full(q: int) -> CssParams:
    """[[q^2-1, q^2-4q+5, d >= q]]: length q^2-1, the widest mirrored-block
    defining sets."""
    _require_prime_power(q, 3)
    outer, inner = _pair_excluding(q, 2, q, range(q + 1, 2 * q))
    return css_from_pair(outer, inner, designed_distance=q, family="css-block-full")


def family_block(q: int, c: int) -> CssParams:
    """[[q^2-1, q^2-4c+5, d >= c]] for 2 <= c <= q; c = q reproduces
    family_block_full and warns."""
    _require_prime_power(q, 3)
    if not 2 <= c <= q:
        raise ValueError(f"need 2 <= c <= q, got c={c}")
    if c == q:
        warnings.warn(
            "c = q reproduces family_block_full; the stated range is c < q",
            stacklevel=2,
        )
    outer, inner = _pair_excluding(q, 2, c, range(q + 1, q + c))
    return css_from_pair(outer, inner, designed_distance=c, family="css-block")


def family_block_even(q: int, m: int, c: int) -> CssParams:
    """[[n, n - 2m(c-2) - m/2 - 1, d >= c]] for even m: the excluded block
    starts right after q^(m/2), where one coset has only m/2 elements."""
    _require_prime_power(q, 3)
    if m < 2 or m % 2 != 0:
        raise ValueError(f"need even m >= 2, got m={m}")
    if not 2 <= c <= q:
        raise ValueError(f"need 2 <= c <= q, got c={c}")
    half = q ** (m // 2)
    outer, inner = _pair_excluding(q, m, c, range(half + 1, half + c))
    return css_from_pair(outer, inner, designed_distance=c, family="css-block-even")


def family_ladder(q: int, m: int, c: int) -> CssParams:
    """[[n, n - m(2c-3) - 1, d >= c]]: the inner code excludes the ladder
    cosets of q+1, 2q+1, ..., (c-1)q+1, whose final orbit elements are
    consecutive."""
    _require_prime_power(q, 3)
    if not 2 <= c <= q:
        raise ValueError(f"need 2 <= c <= q, got c={c}")
    bound = q ** ((m + 1) // 2) - 1
    if not (c - 1) * q + 1 < bound:
        raise ValueError(
            f"ladder hypothesis violated: ({c}-1)*{q}+1 = {(c - 1) * q + 1} "
            f"is not < {bound}"
        )
    from .cosets import ladder_cosets

    ladder = ladder_cosets(q, m, c - 1)  # validates the ladder structure
    outer, inner = _pair_excluding(q, m, c, [lc.rep for lc in ladder])
    return css_from_pair(outer, inner, designed_distance=c, family="css-ladder")
