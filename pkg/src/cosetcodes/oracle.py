"""Independent brute-force verifiers: exact minimum distances by message
enumeration, exact CSS distances over set differences, and the full sweep
of structural coset checks.

Results produced within budget are exact; over-budget requests raise
BudgetError rather than approximating silently.  Enumeration is blockwise
and deterministic; sweeps can run per-(q, m) on worker threads with output
order independent of the worker count.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from . import cosets as cs
from . import cyclic
from .cyclic import CyclicCode
from .gf import FieldContext

DEFAULT_MAX_ENUMERATION = 10**7
DEFAULT_MAX_MODULUS = 10**6
_BLOCK = 1 << 16


class BudgetError(ValueError):
    """An enumeration would exceed the configured budget."""


@dataclass(frozen=True)
class OracleBudget:
    max_enumeration: int = DEFAULT_MAX_ENUMERATION
    max_modulus: int = DEFAULT_MAX_MODULUS
    seed: int = 0


def _resolve(budget) -> OracleBudget:
    if budget is None:
        return OracleBudget()
    if isinstance(budget, int):
        return OracleBudget(max_enumeration=budget)
    return budget


# ----------------------------------------------------------------------
# span enumeration over GF(p)
# ----------------------------------------------------------------------

def gf_p_generators(ctx: FieldContext, rows) -> list[list[int]]:
    """Expand GF(q)-generators into a GF(p)-generating list by multiplying
    each row with 1, x, ..., x^(e-1); the GF(p)-span equals the GF(q)-span."""
    out = []
    for row in rows:
        for t in range(ctx.e):
            s = ctx.p**t
            out.append([ctx.mul(v, s) for v in row])
    return out


def _digit_matrix(ctx: FieldContext, rows) -> np.ndarray:
    A = np.asarray(rows, dtype=np.int64)
    powers = np.array(ctx._powers, dtype=np.int64)
    digs = (A[:, :, None] // powers) % ctx.p
    return digs.reshape(A.shape[0], -1).astype(np.int32)


def _combo_labels(ctx: FieldContext, B_float: np.ndarray, coefs: np.ndarray) -> np.ndarray:
    """Symbol-label matrix of the GF(p)-combinations coefs @ B.

    The matmul runs in float64 so BLAS does the work; every digit sum stays
    far below 2^53, so the arithmetic is exact.
    """
    p, e = ctx.p, ctx.e
    raw = np.rint(coefs @ B_float).astype(np.int32)
    digs = (raw & 1) if p == 2 else (raw % p)
    if e == 1:
        return digs
    labels = digs[:, 0::e].copy()
    for t in range(1, e):
        labels += digs[:, t::e] * (p**t)
    return labels


def _iter_span_blocks(ctx: FieldContext, gens, block=_BLOCK):
    """Yield (start, labels) for consecutive GF(p)-combinations of gens,
    labels being the (block, n) matrix of GF(q) symbol labels; combination
    0 is the zero word."""
    p = ctx.p
    d = len(gens)
    B = _digit_matrix(ctx, gens).astype(np.float64)
    total = p**d
    radix = np.array([p**t for t in range(d)], dtype=np.int64)
    for start in range(0, total, block):
        stop = min(start + block, total)
        idx = np.arange(start, stop, dtype=np.int64)
        coefs = ((idx[:, None] // radix) % p).astype(np.float64)
        yield start, _combo_labels(ctx, B, coefs)


def _labels_bytes(label_row: np.ndarray) -> bytes:
    return label_row.astype(np.uint16).tobytes()


def span_size(ctx: FieldContext, gens) -> int:
    return ctx.p ** len(gens)


def span_labels(ctx: FieldContext, rows, limit: int) -> set[bytes]:
    """All words of the GF(q)-span of rows (including zero), as byte keys."""
    gens = gf_p_generators(ctx, rows)
    if span_size(ctx, gens) > limit:
        raise BudgetError(f"span of size {span_size(ctx, gens)} exceeds {limit}")
    out = set()
    for _start, labels in _iter_span_blocks(ctx, gens):
        for i in range(labels.shape[0]):
            out.add(_labels_bytes(labels[i]))
    return out


def span_min_weight(
    ctx: FieldContext,
    rows,
    limit: int,
    *,
    exclude: set[bytes] | None = None,
    stop_below: int | None = None,
) -> int:
    """Exact minimum symbol weight over the nonzero words of the GF(q)-span
    of rows; words whose byte key is in `exclude` are skipped.

    With stop_below set, returns as soon as any weight below it is seen
    (fail-fast for 'verify >= bound'); the full sweep still runs otherwise.
    """
    gens = gf_p_generators(ctx, rows)
    n_gens = len(gens)
    if n_gens == 0:
        raise ValueError("span has no nonzero words")
    if span_size(ctx, gens) > limit:
        raise BudgetError(f"span of size {span_size(ctx, gens)} exceeds {limit}")
    n_sym = len(rows[0])
    best = n_sym + 1
    for start, labels in _iter_span_blocks(ctx, gens):
        w = np.count_nonzero(labels, axis=1)
        if start == 0:
            w[0] = n_sym + 1  # the zero word does not count
        if exclude is None:
            blockmin = int(w.min())
            if blockmin == 0:
                raise AssertionError("generators are linearly dependent")
            if blockmin < best:
                best = blockmin
        else:
            order = np.argsort(w, kind="stable")
            for i in order:
                wi = int(w[i])
                if wi >= best:
                    break
                if _labels_bytes(labels[i]) not in exclude:
                    best = wi
                    break
        if stop_below is not None and best < stop_below:
            return best
    if best > n_sym:
        raise ValueError("span difference is empty")
    return best


# ----------------------------------------------------------------------
# code distances
# ----------------------------------------------------------------------

def _check_enum_budget(code: CyclicCode, bud: OracleBudget):
    size = code.q**code.k
    if size > bud.max_enumeration:
        raise BudgetError(
            f"{code!r} has {size} codewords, over budget {bud.max_enumeration}"
        )


def min_distance_bruteforce(code: CyclicCode, budget=None) -> int:
    """Exact minimum Hamming distance by enumerating all q^k codewords
    generated by g(x)."""
    bud = _resolve(budget)
    if code.k == 0:
        raise ValueError("the zero code has no nonzero codewords")
    _check_enum_budget(code, bud)
    return span_min_weight(
        code.base, cyclic.codeword_basis(code), bud.max_enumeration
    )


def verify_min_distance_at_least(code: CyclicCode, bound: int, budget=None) -> bool:
    """True iff every nonzero codeword has weight >= bound; stops at the
    first counterexample."""
    bud = _resolve(budget)
    if code.k == 0:
        return True
    _check_enum_budget(code, bud)
    got = span_min_weight(
        code.base, cyclic.codeword_basis(code), bud.max_enumeration,
        stop_below=bound,
    )
    return got >= bound


def css_true_distance(pair, budget=None) -> int | None:
    """Exact CSS distance: the minimum weight over (C1 minus C2) union
    (C2-dual minus C1-dual).  Returns None for a degenerate pair (C1 = C2,
    both differences empty)."""
    bud = _resolve(budget)
    outer, inner = pair.outer, pair.inner
    if pair.k == 0:
        return None
    inner_dual = cyclic.dual_code(inner)
    outer_dual = cyclic.dual_code(outer)
    for c in (outer, inner, inner_dual, outer_dual):
        _check_enum_budget(c, bud)
    base = outer.base
    in_c2 = span_labels(base, cyclic.codeword_basis(inner), bud.max_enumeration)
    side_a = span_min_weight(
        base, cyclic.codeword_basis(outer), bud.max_enumeration, exclude=in_c2
    )
    in_c1d = span_labels(base, cyclic.codeword_basis(outer_dual), bud.max_enumeration)
    side_b = span_min_weight(
        base, cyclic.codeword_basis(inner_dual), bud.max_enumeration, exclude=in_c1d
    )
    return min(side_a, side_b)


# ----------------------------------------------------------------------
# structural coset sweep
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class CheckRecord:
    q: int
    m: int
    check: str
    status: str  # "pass" | "fail" | "skipped"
    detail: str = ""

    def to_dict(self):
        return {"q": self.q, "m": self.m, "check": self.check,
                "status": self.status, "detail": self.detail}


@dataclass
class SweepReport:
    records: list[CheckRecord] = field(default_factory=list)

    @property
    def failures(self) -> list[CheckRecord]:
        return [r for r in self.records if r.status == "fail"]

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self):
        return {"records": [r.to_dict() for r in self.records],
                "failures": len(self.failures)}


def _sweep_pair(q: int, m: int) -> list[CheckRecord]:
    recs: list[CheckRecord] = []
    n = q**m - 1

    def add(check, ok, detail=""):
        recs.append(CheckRecord(q, m, check, "pass" if ok else "fail", detail))

    def skip(check, why):
        recs.append(CheckRecord(q, m, check, "skipped", why))

    partition = cs.all_cosets(q, m)
    add("partition",
        sum(c.cardinality for c in partition) == n
        and len({x for c in partition for x in c.elements}) == n)

    # parity structure (odd q only)
    if q % 2 == 1:
        bad = [c for c in partition if len({x % 2 for x in c.elements}) != 1]
        add("parity-uniform", not bad, f"mixed-parity cosets: {bad[:3]}" if bad else "")
        consec = [
            c for c in partition
            if any((x + 1) % n in c.elements for x in c.elements) and c.cardinality > 1
        ]
        add("no-consecutive", not consec,
            f"cosets with consecutive elements: {consec[:3]}" if consec else "")
    else:
        skip("parity-uniform", "hypothesis: q odd")
        skip("no-consecutive", "hypothesis: q odd")

    # gap statistic
    if q >= 3:
        low = []
        for c in partition:
            g = cs.gap_stat(c)
            if g.value is not None and g.value < q - 1:
                low.append((c.rep, g.value))
        add("gap-lower-bound", not low, f"L below q-1 at: {low[:5]}" if low else "")
        if m >= 2:
            g1 = cs.gap_stat(cs.coset_of(q, m, 1))
            add("gap-equality-at-one", g1.value == q - 1,
                f"L of the coset of 1 is {g1.value}, expected {q - 1}")
        else:
            skip("gap-equality-at-one", "coset of 1 is a singleton for m = 1")
    else:
        skip("gap-lower-bound", "hypothesis: q >= 3")
        skip("gap-equality-at-one", "hypothesis: q >= 3")

    # complementary-coset properties
    ok_unique = ok_card = ok_oplus = ok_gap = ok_invol = True
    detail_unique = detail_card = detail_oplus = detail_gap = detail_invol = ""
    for c in partition:
        comps = {cs.coset_of(q, m, (n - x) % n).rep for x in c.elements}
        comp = cs.complementary(c)
        if comps != {comp.rep}:
            ok_unique = False
            detail_unique = f"coset {c.rep}: complements {sorted(comps)}"
        if comp.cardinality != c.cardinality:
            ok_card = False
            detail_card = f"coset {c.rep}"
        if cs.coset_oplus(c, comp).elements != (0,):
            ok_oplus = False
            detail_oplus = f"coset {c.rep}"
        if cs.gap_stat(c).value != cs.gap_stat(comp).value:
            ok_gap = False
            detail_gap = f"coset {c.rep}"
        if cs.complementary(comp).rep != c.rep:
            ok_invol = False
            detail_invol = f"coset {c.rep}"
    add("complement-unique", ok_unique, detail_unique)
    add("complement-cardinality", ok_card, detail_card)
    add("complement-oplus-zero", ok_oplus, detail_oplus)
    add("complement-gap-equal", ok_gap, detail_gap)
    add("complement-involution", ok_invol, detail_invol)

    # disjointness range, plus the minimum-representative fact for even m
    T = cs.disjointness_range(q, m)
    owner: dict[int, int] = {}
    clash = None
    minrep_bad = None
    for x in range(1, T + 1):
        if x % q == 0:
            continue
        c = cs.coset_of(q, m, x)
        if m % 2 == 0 and c.rep != x % n:
            minrep_bad = x
        for el in c.elements:
            if el in owner and owner[el] != x:
                clash = (owner[el], x)
            owner.setdefault(el, x)
    add("disjoint-range", clash is None,
        f"cosets of {clash} meet" if clash else f"range [1, {T}]")
    if m % 2 == 0:
        add("min-representative", minrep_bad is None,
            f"{minrep_bad} is not minimal in its coset" if minrep_bad else "")
    else:
        skip("min-representative", "stated for even m")

    # full-cardinality range
    bad_card = None
    for x in range(1, q ** ((m + 1) // 2) + 1):
        if cs.coset_of(q, m, x).cardinality != m:
            bad_card = x
            break
    add("cardinality-range", bad_card is None,
        f"coset of {bad_card} is small" if bad_card is not None else "")

    # ladder cosets for every admissible c
    cmax = 0
    while (cmax + 1) * q + 1 < q ** ((m + 1) // 2) - 1:
        cmax += 1
    if cmax == 0:
        skip("ladder", "no admissible c")
    else:
        try:
            for c in range(1, cmax + 1):
                cs.ladder_cosets(q, m, c)
            add("ladder", True, f"c up to {cmax}")
        except AssertionError as exc:
            add("ladder", False, str(exc))
    return recs


def coset_theorem_sweep(
    q_list: Iterable[int], m_list: Iterable[int], budget=None, jobs: int = 1
) -> SweepReport:
    """Run every structural coset check for each (q, m) pair; failures are
    report records, never exceptions."""
    bud = _resolve(budget)
    pairs = sorted((q, m) for q in set(q_list) for m in set(m_list))
    report = SweepReport()
    todo = []
    for q, m in pairs:
        if q**m - 1 > bud.max_modulus:
            report.records.append(
                CheckRecord(q, m, "all", "skipped",
                            f"modulus over cap {bud.max_modulus}")
            )
        else:
            todo.append((q, m))
    if jobs > 1 and len(todo) > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(lambda p: _sweep_pair(*p), todo))
    else:
        chunks = [_sweep_pair(q, m) for q, m in todo]
    for chunk in chunks:
        report.records.extend(chunk)
    return report
