"""Verification suites behind ``plucking verify`` and the acceptance tests.

Each suite recomputes a family of claims from scratch and returns a Report
with one case per checked item.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from typing import Any, Callable, Iterator

from . import chains, qcalc, realize as rz, shape, tree as trees


@dataclass
class Case:
    descriptor: str
    expected: Any
    computed: Any
    passed: bool

    def as_record(self) -> dict:
        return {"case": self.descriptor, "expected": self.expected, "computed": self.computed, "pass": self.passed}


@dataclass
class Report:
    suite: str
    cases: list[Case] = field(default_factory=list)

    def check(self, descriptor: str, expected: Any, computed: Any) -> bool:
        ok = expected == computed
        self.cases.append(Case(descriptor, expected, computed, ok))
        return ok

    @property
    def failures(self) -> list[Case]:
        return [c for c in self.cases if not c.passed]

    @property
    def passed(self) -> bool:
        return not self.failures

    def summary(self) -> dict:
        return {
            "suite": self.suite,
            "total": len(self.cases),
            "passed": len(self.cases) - len(self.failures),
            "failed": len(self.failures),
        }


# --- shape suites ---------------------------------------------------------------------


def almost_strict_scan(max_n: int = 14) -> Report:
    rep = Report("pak-panova")
    failing = []
    for m in range(5, max_n + 1):
        for n in range(m, max_n + 1):
            sc = shape.classify(qcalc.gauss(m, n))
            if not sc.almost_strictly_unimodal:
                failing.append((m, n))
            rep.check(
                f"gauss({m},{n}) almost strictly unimodal",
                (m, n) not in shape.ALMOST_STRICT_EXCEPTIONS,
                sc.almost_strictly_unimodal,
            )
    listed = sorted(p for p in shape.ALMOST_STRICT_EXCEPTIONS if p[1] <= max_n)
    rep.check("set of failing pairs", [list(p) for p in listed], [list(p) for p in failing])
    for m, n in listed:
        sc = shape.classify(qcalc.gauss(m, n))
        if (m, n) == (6, 6):
            rep.check("gauss(6,6) top type", [2, 1, 2], list(sc.top_type or ()))
        else:
            rep.check(f"gauss({m},{n}) almost trapezoidal top", [True, 2], [sc.almost_trapezoidal, sc.top_len])
    return rep


def three_row_shapes(max_n: int = 12) -> Report:
    rep = Report("lemma31")
    for n in range(1, max_n + 1):
        r = chains.verify_shape_lemma(3, n)
        rep.check(f"gauss(3,{n}) clause {r.clause}", r.expected, r.detected)
    return rep


def four_row_shapes(max_n: int = 10) -> Report:
    rep = Report("lemma34")
    for n in range(2, max_n + 1):
        if n == 4:
            continue
        r = chains.verify_shape_lemma(4, n)
        rep.check(f"gauss(4,{n}) top (2,1,2)", r.expected, r.detected)
    return rep


def factor_pairs(budget: int) -> Iterator[tuple[tuple[int, int], tuple[int, int]]]:
    """Unordered pairs of nontrivial binomial factors with m + n + m' + n' <= budget."""
    facs = [(m, n) for m in range(1, budget) for n in range(m, budget) if m + n <= budget - 2]
    for a, b in itertools.combinations_with_replacement(facs, 2):
        if sum(a) + sum(b) <= budget:
            yield a, b


def two_factor_shapes(budget: int = 18) -> Report:
    rep = Report("theorem41")
    for a, b in factor_pairs(budget):
        sc = shape.classify(qcalc.poly_mul(qcalc.gauss(*a), qcalc.gauss(*b)))
        pred = shape.predict_product_shape([a, b])
        label = f"gauss{a} gauss{b}"
        rep.check(f"{label} trapezoidal", True, sc.trapezoidal)
        if pred.covered:
            rep.check(
                f"{label} predicted [{pred.rule}]",
                [pred.top_len, pred.strictly_unimodal],
                [sc.top_len, sc.strictly_unimodal],
            )
    return rep


# --- trees ----------------------------------------------------------------------------


def shuffled(t: trees.PlaneTree, rng: random.Random) -> trees.PlaneTree:
    kids = [shuffled(c, rng) for c in t.children]
    rng.shuffle(kids)
    return trees.PlaneTree(tuple(kids))


def tree_invariants(max_edges: int = 8, seed: int = 0) -> Report:
    rep = Report("tree-invariants")
    rng = random.Random(seed)
    for e in range(max_edges + 1):
        counts = dict.fromkeys(
            ["recursion=product", "plane invariance", "c0=cN=1", "palindromic", "unimodal",
             "c1=branching", "value at 1", "reduce keeps Q", "exchange keeps Q"], 0)
        plane = trees.enumerate_plane_trees(e)
        for t in plane:
            q = trees.pluck_recursive(t, memo="plane")
            counts["recursion=product"] += q != trees.pluck_product(t)
            counts["plane invariance"] += trees.pluck_recursive(shuffled(t, rng), memo="plane") != q
            counts["c0=cN=1"] += not (q[0] == 1 and q[-1] == 1)
            counts["palindromic"] += not shape.is_symmetric(q)
            counts["unimodal"] += not shape.is_unimodal(q)
            if e:
                counts["c1=branching"] += (q[1] if len(q) > 1 else 0) != trees.branching_number(t)
            counts["value at 1"] += qcalc.evaluate(q) != linear_extensions(t)
            counts["reduce keeps Q"] += trees.pluck_product(trees.reduce_string(t)) != q
            for u1, u2 in trees.legal_exchanges(t):
                counts["exchange keeps Q"] += trees.pluck_product(trees.exchange_move(t, u1, u2)) != q
        for name, bad in counts.items():
            rep.check(f"{name}, {len(plane)} plane trees with {e} edges", 0, bad)
    for e1 in range(6):
        for e2 in range(6 - e1):
            bad = 0
            for a in trees.enumerate_plane_trees(e1):
                for b in trees.enumerate_plane_trees(e2):
                    lhs = trees.pluck_product(trees.wedge([a, b]))
                    rhs = qcalc.poly_prod([qcalc.gauss(e1, e2), trees.pluck_product(a), trees.pluck_product(b)])
                    bad += lhs != rhs
            rep.check(f"wedge identity, sizes {e1}+{e2}", 0, bad)
    return rep


def linear_extensions(t: trees.PlaneTree) -> int:
    """Orders in which the leaves can be plucked, from the product of ordinary multinomials."""
    total = 1
    for _, s in t.walk():
        if len(s.children) > 1:
            sizes = [c.edges + 1 for c in s.children]
            total *= math.factorial(sum(sizes)) // math.prod(math.factorial(k) for k in sizes)
    return total


# --- realizability --------------------------------------------------------------------


def binomial_lists(max_degree: int) -> Iterator[tuple[tuple[int, int], ...]]:
    """Multisets of factors (m, n), 1 <= m <= n, with sum of m*n at most ``max_degree``."""
    facs = [(m, n) for m in range(1, max_degree + 1) for n in range(m, max_degree + 1) if m * n <= max_degree]

    def rec(start: int, room: int, cur: list[tuple[int, int]]):
        if cur:
            yield tuple(cur)
        for i in range(start, len(facs)):
            m, n = facs[i]
            if m * n <= room:
                cur.append(facs[i])
                yield from rec(i, room - m * n, cur)
                cur.pop()

    yield from rec(0, max_degree, [])


def index_lists(max_total: int, strict: bool) -> Iterator[tuple[int, ...]]:
    """Nondecreasing lists of indices >= 2 with sum at most ``max_total``."""

    def rec(lo: int, room: int, cur: list[int]):
        if cur:
            yield tuple(cur)
        for a in range(lo, room + 1):
            cur.append(a)
            yield from rec(a + 1 if strict else a, room - a, cur)
            cur.pop()

    yield from rec(2, max_total, [])


def realizability(max_degree: int = 20, brute_degree: int = 9, qint_total: int = 18) -> Report:
    rep = Report("realizability")
    bad_crit = bad_realize = bad_brute = n_lists = n_real = 0
    for fs in binomial_lists(max_degree):
        n_lists += 1
        frac = rz.from_binomials(fs)
        crit = rz.is_realizable(fs)
        found = rz.search_realizations(frac)
        bad_crit += crit != bool(found)
        if crit:
            n_real += 1
            t = rz.realize(fs)
            bad_realize += trees.pluck_product(t) != rz.binomial_product(fs) or t.canonical not in found
        if sum(m * n for m, n in fs) <= brute_degree:
            bad_brute += found != rz.brute_realizations(rz.binomial_product(fs), brute_degree + 1)
    rep.check(f"criterion agrees with search on {n_lists} factor lists", 0, bad_crit)
    rep.check(f"greedy realization reproduces {n_real} realizable products", 0, bad_realize)
    rep.check(f"guided search agrees with brute search up to degree {brute_degree}", 0, bad_brute)

    for fs, witness in (([(4, 4), (2, 3)], 5), ([(2, 3), (2, 2)], 4)):
        try:
            rz.realize(fs)
            got = None
        except rz.NotRealizable as exc:
            got = exc.witness
        rep.check(f"{fs} rejected with witness", witness, got)

    bad_inc = bad_rep = n_inc = n_rep = 0
    for idx in index_lists(qint_total, strict=False):
        target = rz.from_qints(idx)
        if len(set(idx)) == len(idx):
            n_inc += 1
            t = rz.realize_qints(idx)
            bad_inc += trees.pluck_product(t) != target.expand()
        else:
            n_rep += 1
            try:
                rz.realize_qints(idx)
                bad_rep += 1
            except rz.NotRealizable:
                pass
            bad_rep += bool(rz.search_realizations(target))
            if sum(a - 1 for a in idx) <= brute_degree:
                bad_rep += bool(rz.brute_realizations(target.expand(), brute_degree + 1))
    rep.check(f"{n_inc} strictly increasing q-integer lists realize", 0, bad_inc)
    rep.check(f"{n_rep} q-integer lists with a repeat are unrealizable", 0, bad_rep)

    bad_unique = n_gap = 0
    for idx in index_lists(qint_total, strict=True):
        if all(b - a >= 2 for a, b in zip(idx, idx[1:])):
            n_gap += 1
            bad_unique += len(rz.search_realizations(rz.from_qints(idx))) != 1
    rep.check(f"{n_gap} gap-2 q-integer lists have one reduced tree", 0, bad_unique)
    for idx in ((2, 3), (2, 4, 5)):
        rep.check(f"{list(idx)} has one reduced tree", 1, len(rz.search_realizations(rz.from_qints(idx))))
    for n in (2, 3):
        idx = [a for j in range(n - 1) for a in (4 + 3 * j, 5 + 3 * j)]
        rep.check(f"{idx} has {n} reduced trees", n, len(rz.search_realizations(rz.from_qints(idx))))
    return rep


# --- chains ---------------------------------------------------------------------------


def chain_suite(max3: int = 12, max4: int = 10) -> Report:
    rep = Report("chains")
    for m, maker, top in ((3, chains.lindstrom_lengths, max3), (4, chains.west_lengths, max4)):
        for n in range(1, top + 1):
            spec = maker(n)
            rep.check(f"L({m},{n}) chains rebuild gauss", qcalc.to_csv(qcalc.gauss(m, n)),
                      qcalc.to_csv(chains.poly_from_chains(spec)))
            rep.check(f"L({m},{n}) chain sizes add up", math.comb(m + n, m), sum(spec.lengths))
            banned = chains.excluded_lengths(m, n)
            if banned:
                rep.check(f"L({m},{n}) avoids lengths {list(banned)}", [], sorted(set(banned) & set(spec.lengths)))
    return rep


SUITES: dict[str, Callable[..., Report]] = {
    "pak-panova": almost_strict_scan,
    "lemma31": three_row_shapes,
    "lemma34": four_row_shapes,
    "theorem41": two_factor_shapes,
    "tree-invariants": tree_invariants,
    "realizability": realizability,
    "chains": chain_suite,
}
