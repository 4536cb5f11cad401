"""Entanglement-assisted quantum code parameters from classical hulls.

A classical [n, k, d] code with hull dimension ell yields
[[n, k - ell, d; n - k - ell]] and, from the dual side,
[[n, n - k - ell, d_dual; k - ell]].  On top of that, a length
extension appends r new coordinates: the parity-check matrix gains r
rows built from pairwise-orthogonal anisotropic codewords x_i and
scalars alpha_i chosen so the new Gramian diagonal entries stay
nonzero.  The extended code keeps dimension k and hull dimension ell,
its distance d' satisfies d <= d' <= d + r, and the entanglement cost
becomes n - k - ell + r.

All rate arithmetic is exact rational; no floats appear anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .codes import (BudgetExceeded, LinearCode, dual, hull, make_code,
                    min_distance)
from .diag import diagonalize_odd
from .matfq import MatrixFq, check_form, dot


class ExtensionVerificationError(Exception):
    """An extension failed its built-in checks; carries the certificate."""

    def __init__(self, message, certificate=None):
        self.certificate = certificate
        super().__init__(message)


@dataclass(frozen=True)
class EaqeccRecord:
    """[[n, k_logical, d; c]]_q parameters with exact rates.

    d_exact is None when the distance enumeration was over budget; the
    (lower, upper) d_bounds always bracket the true distance.  q is the
    qudit dimension: the field order for euclidean constructions, the
    subfield order for hermitian ones.  provenance tags which
    construction produced the record and r records the extension length.
    """
    n: int
    k_logical: int
    d_exact: int | None
    d_bounds: tuple
    c: int
    q: int
    rate: Fraction
    net_rate: Fraction
    provenance: str
    r: int


@dataclass(frozen=True)
class ExtensionCertificate:
    """Everything needed to re-check one length extension."""
    original: LinearCode
    extended: LinearCode
    alphas: tuple
    x_rows: tuple
    hull_preserved: bool
    d_prime: int | None


@dataclass(frozen=True)
class RateReport:
    """Exact-rational rate facts for one record."""
    rate: Fraction
    net_rate: Fraction
    net_rate_positive: bool
    high_dimension_condition: bool    # 4k >= 3n + r
    rate_at_least_half: bool


def _distance_or_none(code: LinearCode | None, budget):
    if code is None:
        return None
    try:
        return min_distance(code, budget)
    except BudgetExceeded:
        return None


def _record(n, k_logical, d_exact, d_bounds, c, q, provenance, r):
    return EaqeccRecord(
        n=n, k_logical=k_logical, d_exact=d_exact, d_bounds=d_bounds, c=c,
        q=q, rate=Fraction(k_logical, n),
        net_rate=Fraction(k_logical - c, n),
        provenance=provenance, r=r)


def _qudit_dimension(spec, form):
    return spec.subfield_order if form == "hermitian" else spec.q


def base_params(code: LinearCode, form: str = "euclidean", budget=None):
    """The two base records [[n, k-ell, d; n-k-ell]] and
    [[n, n-k-ell, d_dual; k-ell]].

    Distances over budget degrade to d_exact=None with bounds (1, n)
    rather than failing.
    """
    check_form(code.spec, form)
    report = hull(code, form)
    ell = report.ell
    n, k = code.n, code.k
    q_out = _qudit_dimension(code.spec, form)
    tag = "base-hermitian" if form == "hermitian" else "base-euclidean"

    d = _distance_or_none(code, budget)
    primary = _record(n, k - ell, d, (d, d) if d is not None else (1, n),
                      n - k - ell, q_out, tag, 0)

    d_dual = _distance_or_none(dual(code, form), budget)
    secondary = _record(n, n - k - ell, d_dual,
                        (d_dual, d_dual) if d_dual is not None else (1, n),
                        k - ell, q_out, "base-dual-side", 0)
    return primary, secondary


def _parity_rows(code: LinearCode, form: str):
    d = dual(code, form)
    return [] if d is None else d.gen.row_list()


def _build_extension(code: LinearCode, r: int, form: str, budget):
    """Shared body of the euclidean and hermitian extensions."""
    spec = code.spec
    report = hull(code, form)
    ell = report.ell
    n, k = code.n, code.k
    if not 0 <= r <= k - ell:
        raise ValueError(f"extension length r={r} outside [0, {k - ell}]")

    diag_result = diagonalize_odd(code, form)
    xs = [tuple(diag_result.new_gen.row(i)) for i in range(k - ell)]

    hermitian = form == "hermitian"
    q0 = spec.subfield_order
    alphas = []
    for i in range(r):
        self_dot = dot(spec, xs[i], xs[i], form)
        forbidden = spec.neg(self_dot)
        alpha = None
        for a in spec.elements():
            if a == 0:
                continue
            norm = spec.pow(a, q0 + 1) if hermitian else spec.mul(a, a)
            if norm != forbidden:
                alpha = a
                break
        if alpha is None:
            raise ExtensionVerificationError(
                f"no admissible alpha for extension row {i}")
        alphas.append(alpha)

    h_rows = _parity_rows(code, form)
    hp_rows = [[0] * r + list(row) for row in h_rows]
    for i in range(r):
        new_row = [0] * r + list(xs[i])
        new_row[i] = alphas[i]
        hp_rows.append(new_row)
    hp = MatrixFq.from_rows(spec, hp_rows, cols=n + r)

    kernel = hp.kernel() if not hermitian else hp.conjugate().kernel()
    extended = make_code(spec, kernel)

    d = _distance_or_none(code, budget)
    d_prime = _distance_or_none(extended, budget)
    ext_report = hull(extended, form)
    hull_preserved = ext_report.ell == ell
    cert = ExtensionCertificate(code, extended, tuple(alphas),
                                tuple(xs[:r]), hull_preserved, d_prime)

    if hp.rank != n - k + r:
        raise ExtensionVerificationError(
            "extended parity-check matrix is rank deficient", cert)
    if extended.n != n + r or extended.k != k:
        raise ExtensionVerificationError(
            f"extended code is [{extended.n},{extended.k}], "
            f"expected [{n + r},{k}]", cert)
    if hp.gramian(form).rank != n - k - ell + r:
        raise ExtensionVerificationError(
            "extended parity-check Gramian has the wrong rank", cert)
    if not hull_preserved:
        raise ExtensionVerificationError(
            f"hull dimension changed: {ext_report.ell} != {ell}", cert)
    if d is not None and d_prime is not None and not d <= d_prime <= d + r:
        raise ExtensionVerificationError(
            f"distance {d_prime} outside [{d}, {d + r}]", cert)

    tag = "ext-hermitian" if hermitian else "ext-euclidean"
    bounds = (d, d + r) if d is not None else (1, n + r)
    record = _record(n + r, k - ell, d_prime, bounds, n - k - ell + r,
                     _qudit_dimension(spec, form), tag, r)
    return cert, record


def extend_euclidean(code: LinearCode, r: int, budget=None):
    """Length extension under the euclidean form; needs odd q >= 5.

    The q >= 5 floor guarantees at least two distinct nonzero squares,
    so an admissible alpha always exists; q = 3 is refused even though
    individual codes might happen to admit one.
    """
    spec = code.spec
    if spec.p == 2 or spec.q < 5:
        raise ValueError(f"euclidean extension needs odd q >= 5, got q={spec.q}")
    return _build_extension(code, r, "euclidean", budget)


def extend_hermitian(code: LinearCode, r: int, budget=None):
    """Length extension under the hermitian form over GF(q0^2), odd q0 >= 3."""
    spec = code.spec
    check_form(spec, "hermitian")
    q0 = spec.subfield_order
    if spec.p == 2 or q0 < 3:
        raise ValueError(f"hermitian extension needs odd subfield order >= 3, "
                         f"got {q0}")
    return _build_extension(code, r, "hermitian", budget)


def rate_report(record: EaqeccRecord, n: int, k: int, ell: int, r: int) -> RateReport:
    """Exact rate facts for a record produced from (n, k, ell, r).

    Checks the record against the reconstruction from the parameters,
    then reports rate (k-ell)/(n+r), net rate (2k-n-r)/(n+r), its sign
    law, and the high-dimension condition 4k >= 3n+r under which the
    rate is guaranteed to be at least 1/2.
    """
    if not (1 <= k <= n and 0 <= ell <= min(k, n - k) and 0 <= r <= k - ell):
        raise ValueError(f"inconsistent parameters n={n}, k={k}, ell={ell}, r={r}")
    rate = Fraction(k - ell, n + r)
    net_rate = Fraction(2 * k - n - r, n + r)
    if record.n != n + r or record.k_logical != k - ell:
        raise ValueError("record does not match the supplied parameters")
    if record.rate != rate or record.net_rate != net_rate:
        raise ValueError("record rates disagree with the exact reconstruction")
    positive = 2 * k > n and r < 2 * k - n
    if positive != (net_rate > 0):
        raise AssertionError("net-rate sign law violated")
    condition = 4 * k >= 3 * n + r
    at_least_half = rate >= Fraction(1, 2)
    if condition and not at_least_half:
        raise AssertionError("rate fell below 1/2 despite 4k >= 3n + r")
    return RateReport(rate, net_rate, positive, condition, at_least_half)
