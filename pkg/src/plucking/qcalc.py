"""Exact polynomial arithmetic and q-analog primitives.

Polynomials are tuples of Python ints, lowest degree first, so coefficients
never overflow.  The zero polynomial is ``(0,)``; every other value has a
nonzero last coefficient.
"""

from __future__ import annotations

import math
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Iterable, Sequence

from .errors import BudgetExceeded, NotDivisible

Poly = tuple[int, ...]

ZERO: Poly = (0,)
ONE: Poly = (1,)

LATTICE_BUDGET = 10**7


def normalize(coeffs: Iterable[int]) -> Poly:
    c = list(coeffs)
    while len(c) > 1 and c[-1] == 0:
        c.pop()
    if not c:
        return ZERO
    return tuple(c)


def degree(p: Sequence[int]) -> int:
    """Degree of ``p``; the zero polynomial reports -1."""
    p = normalize(p)
    if p == ZERO:
        return -1
    return len(p) - 1


def is_zero(p: Sequence[int]) -> bool:
    return normalize(p) == ZERO


def poly_add(a: Sequence[int], b: Sequence[int]) -> Poly:
    n = max(len(a), len(b))
    return normalize(
        (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)
    )


def poly_shift(p: Sequence[int], k: int) -> Poly:
    """Multiply by q**k."""
    if is_zero(p):
        return ZERO
    return normalize((0,) * k + tuple(p))


def poly_scale(p: Sequence[int], c: int) -> Poly:
    return normalize(c * x for x in p)


def poly_mul(a: Sequence[int], b: Sequence[int]) -> Poly:
    if is_zero(a) or is_zero(b):
        return ZERO
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return normalize(out)


def poly_prod(polys: Iterable[Sequence[int]]) -> Poly:
    out = ONE
    for p in polys:
        out = poly_mul(out, p)
    return out


def poly_divexact(a: Sequence[int], b: Sequence[int]) -> Poly:
    """Return ``c`` with ``b * c == a``.

    Raises NotDivisible if the remainder is nonzero or if a quotient
    coefficient comes out negative or fractional.
    """
    a = normalize(a)
    b = normalize(b)
    if b == ZERO:
        raise ZeroDivisionError("division by the zero polynomial")
    if a == ZERO:
        return ZERO
    da, db = len(a) - 1, len(b) - 1
    if da < db:
        raise NotDivisible(f"degree {da} dividend is not a multiple of degree {db} divisor")
    rem = list(a)
    quot = [0] * (da - db + 1)
    lead = b[-1]
    for k in range(da - db, -1, -1):
        top = rem[k + db]
        if top % lead:
            raise NotDivisible("quotient coefficient is not an integer")
        c = top // lead
        if c < 0:
            raise NotDivisible("quotient would have a negative coefficient")
        quot[k] = c
        if c:
            for j, y in enumerate(b):
                rem[k + j] -= c * y
    if any(rem):
        raise NotDivisible("nonzero remainder")
    return normalize(quot)


def evaluate(p: Sequence[int], x: int = 1) -> int:
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def q_int(k: int) -> Poly:
    """The q-integer [k]_q = 1 + q + ... + q^(k-1)."""
    if k < 1:
        raise ValueError(f"q-integer index must be >= 1, got {k}")
    return (1,) * k


def q_factorial(k: int) -> Poly:
    if k < 0:
        raise ValueError(f"q-factorial argument must be >= 0, got {k}")
    return poly_prod(q_int(i) for i in range(2, k + 1))


@lru_cache(maxsize=None)
def _gauss(m: int, n: int) -> Poly:
    if m == 0 or n == 0:
        return ONE
    if m > n:
        return _gauss(n, m)
    # C(m, n) = C(m, n-1) + q^n C(m-1, n)
    return poly_add(_gauss(m, n - 1), poly_shift(_gauss(m - 1, n), n))


def gauss(m: int, n: int) -> Poly:
    """Gaussian binomial coefficient [m+n]! / ([m]! [n]!)."""
    if m < 0 or n < 0:
        raise ValueError(f"gauss needs nonnegative arguments, got ({m}, {n})")
    return _gauss(m, n)


def q_multinomial(parts: Sequence[int]) -> Poly:
    """q-multinomial [sum]! / prod [part]!, built as a product of Gaussian binomials."""
    if len(parts) == 0:
        raise ValueError("q_multinomial needs at least one part")
    if any(p < 0 for p in parts):
        raise ValueError(f"parts must be nonnegative: {list(parts)}")
    out = ONE
    running = 0
    for p in parts:
        out = poly_mul(out, gauss(p, running))
        running += p
    return out


def lattice_gf(m: int, n: int, budget: int = LATTICE_BUDGET) -> Poly:
    """Rank generating function of L(m, n), by listing every sequence
    0 <= a_1 <= ... <= a_m <= n and counting by a_1 + ... + a_m."""
    if m < 0 or n < 0:
        raise ValueError(f"lattice_gf needs nonnegative arguments, got ({m}, {n})")
    if math.comb(m + n, m) > budget:
        raise BudgetExceeded(f"L({m},{n}) has {math.comb(m + n, m)} elements, budget {budget}")
    counts = [0] * (m * n + 1)
    for seq in combinations_with_replacement(range(n + 1), m):
        counts[sum(seq)] += 1
    return normalize(counts)


def to_csv(p: Sequence[int]) -> str:
    return ",".join(str(c) for c in normalize(p))


def from_csv(text: str) -> Poly:
    text = text.strip()
    if not text:
        raise ValueError("empty coefficient list")
    try:
        coeffs = [int(tok) for tok in text.split(",")]
    except ValueError as exc:
        raise ValueError(f"bad coefficient list {text!r}") from exc
    if any(c < 0 for c in coeffs):
        raise ValueError("coefficients must be nonnegative")
    return normalize(coeffs)
