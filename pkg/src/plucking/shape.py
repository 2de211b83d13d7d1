"""Shapes of positive symmetric unimodal polynomials.

A polynomial ``c_0 + ... + c_N q^N`` in this class decomposes uniquely into
centered rows ``sum_i b_i q^i [N+1-2i]_q`` with ``b_i = c_i - c_{i-1}``.
Which rows are present (the support of ``b``) is what we call its shape.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from itertools import groupby
from typing import Sequence

from . import qcalc
from .errors import DegreeMismatch, NotSymmetric, NotUnimodal
from .qcalc import Poly

# (m, n) pairs, m <= n, with 5 <= m whose Gaussian polynomial is not almost
# strictly unimodal.
ALMOST_STRICT_EXCEPTIONS = frozenset(
    {(5, 6), (5, 10), (5, 14), (6, 6), (6, 7), (6, 9), (6, 11), (6, 13), (7, 10)}
)


def is_symmetric(p: Sequence[int]) -> bool:
    p = qcalc.normalize(p)
    return p == p[::-1]


def is_unimodal(p: Sequence[int]) -> bool:
    p = qcalc.normalize(p)
    if p[0] <= 0 or p[-1] <= 0:
        return False
    i = 0
    while i + 1 < len(p) and p[i] <= p[i + 1]:
        i += 1
    while i + 1 < len(p) and p[i] >= p[i + 1]:
        i += 1
    return i == len(p) - 1


def _check_psu(p: Sequence[int]) -> Poly:
    p = qcalc.normalize(p)
    if any(c <= 0 for c in p):
        raise NotUnimodal(f"coefficients must all be positive: {qcalc.to_csv(p)}")
    if not is_symmetric(p):
        raise NotSymmetric(f"not palindromic: {qcalc.to_csv(p)}")
    if not is_unimodal(p):
        raise NotUnimodal(f"not unimodal: {qcalc.to_csv(p)}")
    return p


@dataclass(frozen=True)
class ShapeProfile:
    N: int
    rows: tuple[int, ...]

    @property
    def support(self) -> frozenset[int]:
        return frozenset(i for i, b in enumerate(self.rows) if b)

    def reconstruct(self) -> Poly:
        out: Poly = qcalc.ZERO
        for i, b in enumerate(self.rows):
            if b:
                row = qcalc.poly_shift(qcalc.q_int(self.N + 1 - 2 * i), i)
                out = qcalc.poly_add(out, qcalc.poly_scale(row, b))
        return out


def row_decompose(p: Sequence[int]) -> ShapeProfile:
    p = qcalc.normalize(p)
    if not is_symmetric(p):
        raise NotSymmetric(f"not palindromic: {qcalc.to_csv(p)}")
    N = len(p) - 1
    rows = [p[0]] + [p[i] - p[i - 1] for i in range(1, N // 2 + 1)]
    if p[0] <= 0 or any(b < 0 for b in rows):
        raise NotUnimodal(f"negative row in decomposition of {qcalc.to_csv(p)}")
    return ShapeProfile(N, tuple(rows))


def dominates(a: ShapeProfile, b: ShapeProfile) -> bool:
    """True when ``b`` is below ``a``: every row missing from ``a`` is missing from ``b``."""
    if a.N != b.N:
        raise DegreeMismatch(f"cannot compare shapes of degree {a.N} and {b.N}")
    return all(y == 0 for x, y in zip(a.rows, b.rows) if x == 0)


def shape_equivalent(a: ShapeProfile, b: ShapeProfile) -> bool:
    return dominates(a, b) and dominates(b, a)


@dataclass(frozen=True)
class ShapeClass:
    N: int
    j: int
    top_len: int
    strict_below: bool
    almost_strict_below: bool
    rle: tuple[tuple[int, int], ...]
    top_type: tuple[int, int, int] | None

    @property
    def trapezoidal(self) -> bool:
        # the plateau c_j = ... = c_{N-j} is automatic for a symmetric unimodal sequence
        return self.strict_below

    @property
    def almost_trapezoidal(self) -> bool:
        return self.almost_strict_below

    @property
    def strictly_unimodal(self) -> bool:
        return self.strict_below and self.top_len <= 1

    @property
    def almost_strictly_unimodal(self) -> bool:
        return self.almost_strict_below and self.top_len <= 1

    def as_record(self) -> dict:
        rec = asdict(self)
        rec["rle"] = [list(r) for r in self.rle]
        rec["top_type"] = list(self.top_type) if self.top_type else None
        rec.update(
            trapezoidal=self.trapezoidal,
            almost_trapezoidal=self.almost_trapezoidal,
            strictly_unimodal=self.strictly_unimodal,
        )
        return rec


def run_lengths(p: Sequence[int]) -> tuple[tuple[int, int], ...]:
    """Run-length encoding as (value, length) pairs."""
    return tuple((v, len(list(g))) for v, g in groupby(p))


def _top_type(rle: tuple[tuple[int, int], ...]) -> tuple[int, int, int] | None:
    if len(rle) < 3:
        return None
    peak = max(range(len(rle)), key=lambda r: rle[r][0])
    if peak == 0 or peak == len(rle) - 1:
        return None
    return (rle[peak - 1][1], rle[peak][1], rle[peak + 1][1])


def classify(p: Sequence[int]) -> ShapeClass:
    p = _check_psu(p)
    N = len(p) - 1
    top = max(p)
    j = p.index(top)
    rle = run_lengths(p)
    return ShapeClass(
        N=N,
        j=j,
        top_len=N - 2 * j,
        strict_below=all(p[i] < p[i + 1] for i in range(j)),
        almost_strict_below=all(p[i] < p[i + 1] for i in range(1, j)),
        rle=rle,
        top_type=_top_type(rle),
    )


def top_type(p: Sequence[int]) -> tuple[int, int, int] | None:
    """Lengths of the peak plateau and its two neighbouring plateaus, e.g. (2, 1, 2)."""
    return classify(p).top_type


def product_row_support(a: ShapeProfile, b: ShapeProfile) -> frozenset[int]:
    """Rows present in the product of two shapes, from their row supports alone.

    Row k of the product is nonzero iff some nonzero rows i of ``a`` and j of ``b``
    satisfy i + j <= k <= i + j + min(N_a - 2i, N_b - 2j).
    """
    out = set()
    for i in a.support:
        for j in b.support:
            lo = i + j
            out.update(range(lo, lo + min(a.N - 2 * i, b.N - 2 * j) + 1))
    return frozenset(out)


# --- product shape prediction -------------------------------------------------


@dataclass(frozen=True)
class ShapePrediction:
    covered: bool
    N: int
    strictly_unimodal: bool | None = None
    trapezoidal: bool | None = None
    top_len: int | None = None
    rule: str = "uncovered"

    def matches(self, shape: ShapeClass) -> bool:
        if not self.covered:
            return True
        return (
            self.N == shape.N
            and self.top_len == shape.top_len
            and self.strictly_unimodal == shape.strictly_unimodal
            and self.trapezoidal == shape.trapezoidal
        )


def normalize_factors(factors: Sequence[tuple[int, int]]) -> list[tuple[int, int]]:
    """Sort each pair to (min, max) and drop factors equal to 1."""
    out = []
    for pair in factors:
        m, n = pair
        if m < 0 or n < 0:
            raise ValueError(f"binomial factor ({m}, {n}) has a negative entry")
        m, n = min(m, n), max(m, n)
        if m > 0:
            out.append((m, n))
    return out


def _trapezoid(N: int, top_len: int, rule: str) -> ShapePrediction:
    return ShapePrediction(True, N, top_len <= 1, True, top_len, rule)


def _strict(N: int, rule: str) -> ShapePrediction:
    return _trapezoid(N, N % 2, rule)


def _qint_with_gaussian(k: int, m: int, n: int) -> tuple[int, str]:
    """Top length of [k+1]_q times gauss(m, n), m >= 2, when k < m*n - 1."""
    idx = k + 1
    if m == 2:
        if k + 2 <= 2 * n and (2 * n + 2 - k) % 4 == 0:
            return 2, "q-integer times two-row gaussian, 2n+2-k divisible by 4"
        return 0, "q-integer times two-row gaussian"
    if m == 3:
        if n % 4 == 2 and n >= 6 and idx == 5:
            return 2, "[5] times gauss(3, 4k-2)"
        if n % 4 == 0 and idx == 3:
            return 2, "[3] times gauss(3, 4k)"
        if n % 2 == 1 and idx == 2:
            return 2, "[2] times gauss(3, odd)"
        if idx == 3 * n - 1:
            return 2, "[3n-1] times gauss(3, n)"
        return 0, "q-integer times gauss(3, n)"
    if m == 4:
        if n == 4 and idx == 7:
            return 2, "[7] times gauss(4, 4)"
        if idx == 3:
            return 2, "[3] times gauss(4, n)"
        if idx == 4 * n - 1:
            return 2, "[4n-1] times gauss(4, n)"
        return 0, "q-integer times gauss(4, n)"
    # m >= 5: almost strictly unimodal apart from the listed exceptions
    if idx == m * n - 1:
        return 2, "[d-1] times gauss(m, n), m >= 5"
    if (m, n) == (6, 6) and idx == 3:
        return 2, "[3] times gauss(6, 6)"
    return 0, "q-integer times gauss(m, n), m >= 5"


def predict_product_shape(factors: Sequence[tuple[int, int]]) -> ShapePrediction:
    """Predict the shape of a product of Gaussian binomials from the case analysis.

    ``covered`` is False whenever the input falls outside the enumerated cases;
    no guess is made then.
    """
    fs = normalize_factors(factors)
    if len(fs) < 2:
        raise ValueError(f"need at least two nontrivial factors, got {list(factors)}")
    N = sum(m * n for m, n in fs)
    qints = sorted(n for m, n in fs if m == 1)
    gaussians = sorted((m, n) for m, n in fs if m >= 2)

    if not gaussians:
        largest = qints[-1]
        rest = sum(qints[:-1])
        if rest + 1 >= largest:
            return _strict(N, "product of q-integers, balanced")
        return _trapezoid(N, largest - rest, "product of q-integers, dominant factor")

    if qints:
        largest = qints[-1]
        rest = N - largest
        if largest >= rest:
            # a long q-integer swallows every row of the rest
            return _trapezoid(N, largest - rest, "dominant q-integer")
        if len(qints) == 1:
            if len(gaussians) == 1:
                if largest == rest - 1:
                    return _strict(N, "q-integer one shorter than gaussian degree")
                m, n = gaussians[0]
                top, rule = _qint_with_gaussian(largest, m, n)
                if top:
                    return _trapezoid(N, top, rule)
                return _strict(N, rule)
            return _strict(N, "one q-integer, several gaussians")
        return ShapePrediction(False, N)

    if len(gaussians) == 2:
        pair = tuple(gaussians)
        (m1, n1), (m2, n2) = pair
        if pair == ((2, 3), (4, 4)):
            return _trapezoid(N, 2, "gauss(4,4) gauss(2,3)")
        if pair == ((2, 2), (3, n2)) and n2 % 4 == 2 and n2 >= 6:
            return _trapezoid(N, 2, "gauss(3,4k-2) gauss(2,2)")
        if m1 == m2 == 2 and (n1 - n2) % 2:
            return _trapezoid(N, 2, "two-row gaussians of opposite parity")
    return _strict(N, "gaussians only")
