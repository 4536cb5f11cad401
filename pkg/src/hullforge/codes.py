"""Linear codes over GF(p^m): duals, hulls, hull predicates, distances.

A LinearCode is held as its canonical generator matrix (reduced row
echelon form with zero rows removed), so two equal codes compare equal.
The zero code is never a LinearCode; operations that can produce it
(duals of the full space, hulls of complementary-dual codes) return
None instead.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .gf import FieldSpec
from .matfq import MatrixFq, check_form, dot, vstack

# Cap on q^k for any codeword enumeration; shared by the brute-force
# reference module.
DEFAULT_BUDGET = 10_000_000


class BudgetExceeded(Exception):
    """An enumeration would visit more codewords than the budget allows."""

    def __init__(self, needed: int, budget: int, what: str = "enumeration"):
        self.needed = needed
        self.budget = budget
        super().__init__(f"{what} needs {needed} codewords, budget is {budget}")


def resolve_budget(budget) -> int:
    if budget is None:
        return DEFAULT_BUDGET
    max_codewords = getattr(budget, "max_codewords", budget)
    if not isinstance(max_codewords, int) or max_codewords < 1:
        raise ValueError(f"bad enumeration budget {budget!r}")
    return max_codewords


@dataclass(frozen=True)
class LinearCode:
    """An [n, k] code over spec, generated by the rows of gen (canonical rref)."""
    spec: FieldSpec
    n: int
    k: int
    gen: MatrixFq

    def __repr__(self):
        return f"LinearCode([{self.n},{self.k}]_{self.spec.q})"


@dataclass(frozen=True)
class HullReport:
    """The hull of a code together with the Gramian-rank cross-check.

    ell is the hull dimension; hull is None when ell == 0.  consistent
    records whether rank(G G^T) == k - ell and rank(H H^T) == n - k - ell
    (conjugate-transpose Gramians for the hermitian form).
    """
    form: str
    hull: LinearCode | None
    ell: int
    gramian_rank_g: int
    gramian_rank_h: int
    consistent: bool


def make_code(spec: FieldSpec, g: MatrixFq) -> LinearCode:
    """Canonicalize a generator matrix into a LinearCode."""
    if g.spec != spec:
        raise ValueError("generator matrix belongs to a different field")
    if g.cols == 0:
        raise ValueError("codes of length 0 are not supported")
    r, _, rank = g.rref()
    if rank == 0:
        raise ValueError("zero generator matrix: the zero code is not a LinearCode")
    gen = MatrixFq(spec, rank, g.cols, r.entries[:rank * g.cols])
    return LinearCode(spec, g.cols, rank, gen)


def dual(c: LinearCode, form: str = "euclidean") -> LinearCode | None:
    """The dual code under the given form, or None for the zero dual.

    The euclidean dual is the kernel of the generator matrix.  The
    hermitian dual is the kernel of the entrywise-conjugated generator,
    which is exactly the set of v with <c, v>_H = 0 for every codeword c.
    """
    check_form(c.spec, form)
    g = c.gen if form == "euclidean" else c.gen.conjugate()
    ker = g.kernel()
    if ker.rows == 0:
        return None
    return make_code(c.spec, ker)


def hull(c: LinearCode, form: str = "euclidean") -> HullReport:
    """The hull C intersect dual(C), computed as the dual of their sum."""
    check_form(c.spec, form)
    d = dual(c, form)
    if d is None:
        hull_code = None
        parity_gramian_rank = 0
    else:
        total = make_code(c.spec, vstack(c.gen, d.gen))
        hull_code = dual(total, form)
        parity_gramian_rank = d.gen.gramian(form).rank
    ell = 0 if hull_code is None else hull_code.k
    gen_gramian_rank = c.gen.gramian(form).rank
    consistent = (gen_gramian_rank == c.k - ell
                  and parity_gramian_rank == c.n - c.k - ell)
    return HullReport(form, hull_code, ell, gen_gramian_rank,
                      parity_gramian_rank, consistent)


def hull_dimension_via_gramian(c: LinearCode, form: str = "euclidean") -> int:
    """k - rank(G G^T), which equals the hull dimension."""
    check_form(c.spec, form)
    return c.k - c.gen.gramian(form).rank


def is_self_orthogonal(c: LinearCode, form: str = "euclidean") -> bool:
    """Whether C is contained in its dual, i.e. the Gramian is zero."""
    return c.gen.gramian(form).is_zero()


def is_lcd(c: LinearCode, form: str = "euclidean") -> bool:
    """Whether C meets its dual trivially, i.e. the Gramian is non-singular."""
    return c.gen.gramian(form).rank == c.k


def is_hull_maximal_so_in(c: LinearCode, form: str = "euclidean",
                          side: str = "code", budget=None) -> bool:
    """Whether hull(C) is maximal self-orthogonal in C (side="code") or
    in the dual (side="dual").

    Decided by codeword enumeration when q^k fits the budget: the hull
    is maximal exactly when no codeword outside it is self-orthogonal,
    i.e. when the number of x with <x, x> = 0 equals q^ell.  Out of
    budget, k - ell <= 1 still certifies maximality; even-order fields
    additionally satisfy the converse, so there the answer is always
    available.  Odd order with k - ell >= 2 and no budget raises
    BudgetExceeded.
    """
    if side not in ("code", "dual"):
        raise ValueError(f"side must be 'code' or 'dual', got {side!r}")
    check_form(c.spec, form)
    if side == "dual":
        d = dual(c, form)
        if d is None:
            return True
        c = d
    ell = hull(c, form).ell
    cap = resolve_budget(budget)
    total = c.spec.q ** c.k
    if total <= cap:
        return _count_isotropic(c, form) == c.spec.q ** ell
    if c.k - ell <= 1:
        return True
    if c.spec.p == 2:
        return False
    raise BudgetExceeded(total, cap, "maximality check (odd order, k - ell >= 2)")


def min_distance(c: LinearCode, budget=None) -> int:
    """Exact minimum Hamming weight by full message-space enumeration."""
    cap = resolve_budget(budget)
    total = c.spec.q ** c.k
    if total > cap:
        raise BudgetExceeded(total, cap, "minimum distance")
    stream = _iter_codewords(c.spec, c.gen.row_list())
    next(stream)                       # zero word
    best = c.n
    for w in stream:
        weight = 0
        for x in w:
            if x:
                weight += 1
        if weight < best:
            best = weight
            if best == 1:
                break
    return best


def random_code(spec: FieldSpec, n: int, k: int, seed: int) -> LinearCode:
    """A deterministic pseudo-random [n, k] code; resamples until full rank."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    rng = random.Random(seed)
    q = spec.q
    while True:
        rows = [[rng.randrange(q) for _ in range(n)] for _ in range(k)]
        m = MatrixFq.from_rows(spec, rows)
        if m.rank == k:
            return make_code(spec, m)


def random_invertible(spec: FieldSpec, n: int, rng: random.Random) -> MatrixFq:
    """A random invertible n x n matrix, resampled until non-singular."""
    q = spec.q
    while True:
        m = MatrixFq.from_rows(
            spec, [[rng.randrange(q) for _ in range(n)] for _ in range(n)])
        if m.rank == n:
            return m


# ----------------------------------------------------------------------
# Streaming codeword enumeration
# ----------------------------------------------------------------------

def _iter_codewords(spec: FieldSpec, rows):
    """Yield every codeword of the span of rows exactly once.

    Messages run in ascending base-q order (first row most significant).
    The yielded list is a reused internal buffer: read it, never keep it.
    Each step applies the one message-digit change as a precomputed
    scaled-row delta, so the amortized cost per codeword is O(n).
    """
    k = len(rows)
    if k == 0:
        yield []
        return
    n = len(rows[0])
    q = spec.q
    c = [0] * n
    yield c

    mul, sub = spec.mul, spec.sub
    scaled = [[tuple(mul(v, x) for x in row) for v in range(q)] for row in rows]
    # delta[r][v]: change to c when row r's message digit moves v -> v+1;
    # roll[r]: change when it wraps q-1 -> 0.
    delta = [[tuple(sub(s[v + 1][t], s[v][t]) for t in range(n))
              for v in range(q - 1)] for s in scaled]
    roll = [tuple(sub(0, s[q - 1][t]) for t in range(n)) for s in scaled]

    add_t = spec.add_table
    digits = [0] * k                  # digits[j] drives row k-1-j
    for _ in range(q ** k - 1):
        j = 0
        while digits[j] == q - 1:
            digits[j] = 0
            dr = roll[k - 1 - j]
            if add_t is not None:
                for t in range(n):
                    x = dr[t]
                    if x:
                        c[t] = add_t[c[t]][x]
            else:
                for t in range(n):
                    if dr[t]:
                        c[t] = spec.add(c[t], dr[t])
            j += 1
        dr = delta[k - 1 - j][digits[j]]
        digits[j] += 1
        if add_t is not None:
            for t in range(n):
                x = dr[t]
                if x:
                    c[t] = add_t[c[t]][x]
        else:
            for t in range(n):
                if dr[t]:
                    c[t] = spec.add(c[t], dr[t])
        yield c


def _count_isotropic(c: LinearCode, form: str) -> int:
    spec = c.spec
    count = 0
    if form == "euclidean":
        for w in _iter_codewords(spec, c.gen.row_list()):
            if dot(spec, w, w, "euclidean") == 0:
                count += 1
    else:
        for w in _iter_codewords(spec, c.gen.row_list()):
            if dot(spec, w, w, "hermitian") == 0:
                count += 1
    return count
