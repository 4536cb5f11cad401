"""Dense exact linear algebra over a FieldSpec.

Matrices are immutable value types: every operation returns a new
matrix, entries are a flat row-major tuple of element codes, and
equality is structural.  All algorithms are deterministic (leftmost
pivot column, topmost nonzero row), which the rest of the package
relies on for reproducible fixtures.
"""

from __future__ import annotations

from .gf import FieldSpec

FORMS = ("euclidean", "hermitian")


def check_form(spec: FieldSpec, form: str) -> str:
    if form not in FORMS:
        raise ValueError(f"unknown form {form!r}; expected one of {FORMS}")
    if form == "hermitian" and spec.subfield_order is None:
        raise ValueError(
            "the hermitian form needs a field of square order "
            f"(even extension degree); got {spec!r}")
    return form


class MatrixFq:
    """A rows x cols matrix of field element codes bound to a FieldSpec."""

    __slots__ = ("spec", "rows", "cols", "entries")

    def __init__(self, spec: FieldSpec, rows: int, cols: int, entries):
        entries = tuple(entries)
        if rows < 0 or cols < 0 or len(entries) != rows * cols:
            raise ValueError(f"shape ({rows}, {cols}) does not match "
                             f"{len(entries)} entries")
        q = spec.q
        for e in entries:
            if not isinstance(e, int) or not 0 <= e < q:
                raise ValueError(f"entry {e!r} out of range for {spec!r}")
        self.spec = spec
        self.rows = rows
        self.cols = cols
        self.entries = entries

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_rows(cls, spec: FieldSpec, rows, cols: int | None = None) -> "MatrixFq":
        rows = [list(r) for r in rows]
        if rows:
            cols = len(rows[0])
            if any(len(r) != cols for r in rows):
                raise ValueError("ragged rows")
        elif cols is None:
            raise ValueError("cols is required for a matrix with no rows")
        flat = [e for r in rows for e in r]
        return cls(spec, len(rows), cols, flat)

    @classmethod
    def identity(cls, spec: FieldSpec, n: int) -> "MatrixFq":
        return cls(spec, n, n, [1 if i == j else 0
                                for i in range(n) for j in range(n)])

    @classmethod
    def zeros(cls, spec: FieldSpec, rows: int, cols: int) -> "MatrixFq":
        return cls(spec, rows, cols, [0] * (rows * cols))

    # -- access ------------------------------------------------------------

    def row(self, i: int) -> tuple:
        c = self.cols
        return self.entries[i * c:(i + 1) * c]

    def row_list(self) -> list:
        return [self.row(i) for i in range(self.rows)]

    def to_rows(self) -> list:
        """Mutable list-of-lists copy for internal elimination work."""
        return [list(self.row(i)) for i in range(self.rows)]

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def is_zero(self) -> bool:
        return not any(self.entries)

    # -- basic operations ---------------------------------------------------

    def transpose(self) -> "MatrixFq":
        r, c, e = self.rows, self.cols, self.entries
        return MatrixFq(self.spec, c, r,
                        [e[i * c + j] for j in range(c) for i in range(r)])

    def conjugate(self) -> "MatrixFq":
        """Entrywise x -> x^(p^(m/2)); requires a square-order field."""
        spec = self.spec
        if spec.subfield_order is None:
            raise ValueError("conjugation requires a field of square order")
        conj = spec.conjugate
        return MatrixFq(spec, self.rows, self.cols,
                        [conj(e) for e in self.entries])

    def conj_transpose(self) -> "MatrixFq":
        return self.conjugate().transpose()

    def __matmul__(self, other: "MatrixFq") -> "MatrixFq":
        if not isinstance(other, MatrixFq):
            return NotImplemented
        if self.spec != other.spec:
            raise ValueError("matrices over different fields")
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch: ({self.rows}x{self.cols}) @ "
                             f"({other.rows}x{other.cols})")
        spec = self.spec
        add, mul = spec.add, spec.mul
        n, k, m = self.rows, self.cols, other.cols
        a, b = self.entries, other.entries
        out = []
        for i in range(n):
            arow = a[i * k:(i + 1) * k]
            for j in range(m):
                acc = 0
                for t in range(k):
                    x = arow[t]
                    if x:
                        y = b[t * m + j]
                        if y:
                            acc = add(acc, mul(x, y))
                out.append(acc)
        return MatrixFq(spec, n, m, out)

    def gramian(self, form: str = "euclidean") -> "MatrixFq":
        """G @ G^T for the euclidean form, G @ G^dagger for the hermitian."""
        check_form(self.spec, form)
        if form == "euclidean":
            return self @ self.transpose()
        return self @ self.conj_transpose()

    # -- elimination ---------------------------------------------------------

    def rref(self):
        """Reduced row echelon form.

        Returns:
            (R, pivot_columns, rank) where R is row-equivalent to self
            with leading ones and zeros above and below each pivot.
        """
        spec = self.spec
        inv, mul, sub = spec.inv, spec.mul, spec.sub
        rows = self.to_rows()
        nrows, ncols = self.rows, self.cols
        pivots = []
        r = 0
        for c in range(ncols):
            if r == nrows:
                break
            pr = None
            for i in range(r, nrows):
                if rows[i][c]:
                    pr = i
                    break
            if pr is None:
                continue
            if pr != r:
                rows[r], rows[pr] = rows[pr], rows[r]
            pv = rows[r][c]
            if pv != 1:
                iv = inv(pv)
                rows[r] = [mul(iv, x) for x in rows[r]]
            prow = rows[r]
            for i in range(nrows):
                if i != r and rows[i][c]:
                    f = rows[i][c]
                    ri = rows[i]
                    rows[i] = [sub(ri[j], mul(f, prow[j])) if prow[j] else ri[j]
                               for j in range(ncols)]
            pivots.append(c)
            r += 1
        return MatrixFq.from_rows(spec, rows, ncols), tuple(pivots), r

    @property
    def rank(self) -> int:
        return self.rref()[2]

    def kernel(self) -> "MatrixFq":
        """Basis of the right null space, one basis vector per row.

        The basis is canonical: free columns are taken in ascending
        order and each basis vector carries a 1 in its own free slot.
        """
        spec = self.spec
        R, pivots, rank = self.rref()
        n = self.cols
        free = [c for c in range(n) if c not in set(pivots)]
        neg = spec.neg
        basis = []
        for f in free:
            v = [0] * n
            v[f] = 1
            for i, pc in enumerate(pivots):
                x = R[i, f]
                if x:
                    v[pc] = neg(x)
            basis.append(v)
        return MatrixFq.from_rows(spec, basis, cols=n)

    # -- value semantics ------------------------------------------------------

    def __eq__(self, other):
        return (isinstance(other, MatrixFq)
                and self.spec == other.spec
                and self.rows == other.rows
                and self.cols == other.cols
                and self.entries == other.entries)

    def __hash__(self):
        return hash((self.spec, self.rows, self.cols, self.entries))

    def __repr__(self):
        return f"MatrixFq({self.spec.q}, {self.rows}x{self.cols})"

    def __str__(self):
        if self.rows == 0:
            return f"<empty 0x{self.cols}>"
        w = len(str(self.spec.q - 1))
        return "\n".join(" ".join(f"{e:>{w}}" for e in self.row(i))
                         for i in range(self.rows))


def vstack(a: MatrixFq, b: MatrixFq) -> MatrixFq:
    if a.spec != b.spec or a.cols != b.cols:
        raise ValueError("vstack needs matching fields and column counts")
    return MatrixFq(a.spec, a.rows + b.rows, a.cols, a.entries + b.entries)


def dot(spec: FieldSpec, u, v, form: str = "euclidean") -> int:
    """<u, v> = sum u_i v_i, or sum u_i v_i^(p^(m/2)) for the hermitian form."""
    if len(u) != len(v):
        raise ValueError("length mismatch")
    check_form(spec, form)
    add, mul = spec.add, spec.mul
    acc = 0
    if form == "euclidean":
        for x, y in zip(u, v):
            if x and y:
                acc = add(acc, mul(x, y))
    else:
        conj = spec.conjugate
        for x, y in zip(u, v):
            if x and y:
                acc = add(acc, mul(x, conj(y)))
    return acc


def pair_reduce_diagonal(s: MatrixFq):
    """Reduce a square matrix to diagonal form by independent row and
    column operations.

    Returns:
        (P, Q, D) with P and Q invertible and P @ S @ Q^T = D, where D
        is diagonal with exactly rank(S) nonzero entries placed first.
    """
    if s.rows != s.cols:
        raise ValueError("pair reduction needs a square matrix")
    spec = s.spec
    k = s.rows
    mul, sub, inv = spec.mul, spec.sub, spec.inv
    a = s.to_rows()
    left = MatrixFq.identity(spec, k).to_rows()
    right = MatrixFq.identity(spec, k).to_rows()

    for t in range(k):
        # first nonzero entry of the trailing block, row-major scan
        pi = pj = None
        for i in range(t, k):
            for j in range(t, k):
                if a[i][j]:
                    pi, pj = i, j
                    break
            if pi is not None:
                break
        if pi is None:
            break
        if pi != t:
            a[t], a[pi] = a[pi], a[t]
            left[t], left[pi] = left[pi], left[t]
        if pj != t:
            for row in a:
                row[t], row[pj] = row[pj], row[t]
            for row in right:
                row[t], row[pj] = row[pj], row[t]
        piv_inv = inv(a[t][t])
        for i in range(t + 1, k):
            f = a[i][t]
            if f:
                f = mul(f, piv_inv)
                a[i] = [sub(a[i][j], mul(f, a[t][j])) for j in range(k)]
                left[i] = [sub(left[i][j], mul(f, left[t][j])) for j in range(k)]
        for j in range(t + 1, k):
            f = a[t][j]
            if f:
                f = mul(f, piv_inv)
                for row in a:
                    if row[t]:
                        row[j] = sub(row[j], mul(f, row[t]))
                for row in right:
                    if row[t]:
                        row[j] = sub(row[j], mul(f, row[t]))

    p = MatrixFq.from_rows(spec, left, cols=k)
    q = MatrixFq.from_rows(spec, right, cols=k).transpose()
    d = MatrixFq.from_rows(spec, a, cols=k)
    return p, q, d


def row_space_equal(a: MatrixFq, b: MatrixFq) -> bool:
    """Whether two matrices generate the same row space."""
    if a.spec != b.spec or a.cols != b.cols:
        raise ValueError("row spaces live in different ambient spaces")
    ra, _, ka = a.rref()
    rb, _, kb = b.rref()
    if ka != kb:
        return False
    return ra.entries[:ka * a.cols] == rb.entries[:kb * b.cols]
