"""Symmetric chain decompositions of L(3, n) and L(4, n), kept as chain lengths.

L(m, n) peels into shells: removing the sequences with a_1 = 0 or a_m = n
leaves a copy of L(m, n - 2), shifted up one rank per coordinate.  Each
shell carries a known family of symmetric chains, so the whole lattice is a
union of centered chains whose lengths alone determine the Gaussian
polynomial.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass

from . import qcalc
from .errors import NotSymmetric
from .qcalc import Poly


@dataclass(frozen=True)
class ChainSpec:
    m: int
    n: int
    lengths: tuple[int, ...]

    def multiplicities(self) -> list[tuple[int, int]]:
        return sorted(Counter(self.lengths).items())

    def __str__(self) -> str:
        return ",".join(f"{length}x{count}" for length, count in self.multiplicities())


def _lindstrom_shell(n: int) -> list[int]:
    """Chain lengths of the shell of L(3, n) that sits outside L(3, n - 2) (odd n),
    or outside L(3, n - 4) (even n, two rings merged)."""
    if n % 2:
        k = (n - 1) // 2
        return [3 * n - 4 * i + 1 for i in range(k + 1)]
    half = n // 2
    out = [n + 1]
    out += [3 * n - 4 * i + 1 for i in range(0, half)]
    out += [3 * n - 4 * i - 1 for i in range(1, half)]
    return out


def lindstrom_lengths(n: int) -> ChainSpec:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if n % 2:
        shells = range(1, n + 1, 2)
    else:
        shells = range(n % 4, n + 1, 4)
    lengths = [L for s in shells for L in _lindstrom_shell(s)]
    return ChainSpec(3, n, tuple(lengths))


def _west_shell(n: int) -> list[int]:
    out = []
    for i in range(n // 3 + 1):
        for j in range((n - 3 * i) // 2 + 1):
            out.append(4 * (n - 3 * i - j) + 1)
            if 3 * i + 2 * j <= n - 3:
                out.append(4 * (n - 3 * i - j) - 5)
    return out


def west_lengths(n: int) -> ChainSpec:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    lengths = [L for s in range(n % 2, n + 1, 2) for L in _west_shell(s)]
    return ChainSpec(4, n, tuple(lengths))


def poly_from_chains(spec: ChainSpec) -> Poly:
    """Sum of the centered rows q^((mn-L+1)/2) [L]_q, one per chain."""
    mn = spec.m * spec.n
    out: Poly = qcalc.ZERO
    for L in spec.lengths:
        if L < 1 or (mn - L + 1) % 2:
            raise NotSymmetric(f"chain of length {L} cannot be centered in L({spec.m},{spec.n})")
        offset = (mn - L + 1) // 2
        if offset < 0:
            raise NotSymmetric(f"chain of length {L} is longer than L({spec.m},{spec.n}) allows")
        out = qcalc.poly_add(out, qcalc.poly_shift(qcalc.q_int(L), offset))
    return out


def cardinality_ok(spec: ChainSpec) -> bool:
    return sum(spec.lengths) == math.comb(spec.m + spec.n, spec.m)


def excluded_lengths(m: int, n: int) -> tuple[int, ...]:
    """Chain lengths that never occur in the decomposition."""
    if m == 3 and n % 2:
        k = (n - 1) // 2
        return (2, 6 * k + 2)
    if m == 4 and n not in (1, 4):
        return (3, 4 * n - 1)
    return ()


# --- coefficient patterns of gauss(3, n) and gauss(4, n) ----------------------------


@dataclass(frozen=True)
class ShapeLemmaReport:
    m: int
    n: int
    clause: str
    expected: str
    detected: str
    passed: bool

    def as_record(self) -> dict:
        return {
            "m": self.m, "n": self.n, "clause": self.clause,
            "expected": self.expected, "detected": self.detected, "pass": self.passed,
        }


def relation_string(p: Poly) -> str:
    """One of '<', '=', '>' between each pair of consecutive coefficients."""
    return "".join("<" if a < b else "=" if a == b else ">" for a, b in zip(p, p[1:]))


def _pattern(N: int, marks: dict[int, str], rise_until: int, fall_from: int) -> str:
    rel = []
    for i in range(N):
        if i in marks:
            rel.append(marks[i])
        elif i < rise_until:
            rel.append("<")
        elif i >= fall_from:
            rel.append(">")
        else:
            raise ValueError(f"pattern leaves position {i} of {N} unspecified")
    return "".join(rel)


def expected_pattern(m: int, n: int) -> tuple[str, str]:
    """(clause label, relation string) predicted for gauss(m, n)."""
    N = m * n
    ends = {0: "=", N - 1: "="} if N else {}
    if m == 3:
        if n % 2:
            k = (n - 1) // 2
            marks = {**{3 * k + t: "=" for t in range(3)}, **ends}
            return "odd", _pattern(N, marks, 3 * k, 3 * k + 3)
        if n % 4 == 0:
            k = n // 4
            marks = {6 * k - 2: "=", 6 * k - 1: "<", 6 * k: ">", 6 * k + 1: "="}
            return "0 mod 4", _pattern(N, {**marks, **ends}, 6 * k - 2, 6 * k + 2)
        k = (n - 2) // 4
        marks = {6 * k: "=", 6 * k + 1: "<", 6 * k + 2: "=", 6 * k + 3: "=", 6 * k + 4: ">", 6 * k + 5: "="}
        return "2 mod 4", _pattern(N, {**marks, **ends}, 6 * k, 6 * k + 6)
    if m == 4:
        if n in (1, 4):
            raise ValueError(f"no shape pattern is asserted for gauss(4, {n})")
        marks = {2 * n - 2: "=", 2 * n - 1: "<", 2 * n: ">", 2 * n + 1: "="}
        return "(2,1,2)", _pattern(N, {**marks, **ends}, 2 * n - 2, 2 * n + 2)
    raise ValueError(f"shape patterns are only known for m = 3 or 4, got {m}")


def verify_shape_lemma(m: int, n: int) -> ShapeLemmaReport:
    clause, expected = expected_pattern(m, n)
    detected = relation_string(qcalc.gauss(m, n))
    return ShapeLemmaReport(m, n, clause, expected, detected, expected == detected)
