"""Which products of Gaussian binomials are plucking polynomials, and of which trees.

Every plucking polynomial is a ratio of q-integer products.  The state product
formula telescopes to

    Q(T) = [e]_q! / prod over non-root v of [|V(T^v)|]_q

so for a reduced tree the reduced numerator and denominator pin down, index by
index, how many non-root vertices carry a subtree of each size.  The guided
search below builds exactly the trees with those subtree sizes; the brute
search just enumerates trees and compares polynomials.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from . import qcalc, tree as trees
from .errors import InternalInconsistency, NotRealizable
from .qcalc import Poly
from .shape import normalize_factors
from .tree import PlaneTree


@dataclass(frozen=True)
class QFraction:
    """Product of q-integers [a]_q over a product of q-integers [b]_q.

    Indices are kept sorted in descending order; index 1 is never stored.
    """

    num: tuple[int, ...] = ()
    den: tuple[int, ...] = ()

    def __post_init__(self):
        for side in (self.num, self.den):
            if any(k < 1 for k in side):
                raise ValueError(f"q-integer indices must be positive: {side}")
        object.__setattr__(self, "num", tuple(sorted((k for k in self.num if k > 1), reverse=True)))
        object.__setattr__(self, "den", tuple(sorted((k for k in self.den if k > 1), reverse=True)))

    def reduce(self) -> "QFraction":
        n, d = Counter(self.num), Counter(self.den)
        return QFraction(tuple((n - d).elements()), tuple((d - n).elements()))

    @property
    def is_reduced(self) -> bool:
        return not set(self.num) & set(self.den)

    def exponents(self) -> Counter:
        """Net exponent of each q-integer (numerator minus denominator)."""
        out = Counter(self.num)
        out.subtract(Counter(self.den))
        return Counter({k: v for k, v in out.items() if v})

    def expand(self) -> Poly:
        p = qcalc.poly_prod(qcalc.q_int(k) for k in self.num)
        for k in self.den:
            p = qcalc.poly_divexact(p, qcalc.q_int(k))
        return p

    def repeated(self) -> list[int]:
        """Numerator indices occurring more than once, largest first."""
        return sorted((k for k, c in Counter(self.num).items() if c > 1), reverse=True)

    def __str__(self) -> str:
        return f"num: {','.join(map(str, self.num))} / den: {','.join(map(str, self.den))}"

    @classmethod
    def parse(cls, text: str) -> "QFraction":
        try:
            left, right = text.split("/")
            lk, lv = left.split(":")
            rk, rv = right.split(":")
        except ValueError:
            raise ValueError(f"bad q-fraction {text!r}") from None
        if lk.strip() != "num" or rk.strip() != "den":
            raise ValueError(f"bad q-fraction {text!r}")

        def ints(s: str) -> tuple[int, ...]:
            return tuple(int(x) for x in s.split(",") if x.strip())

        return cls(ints(lv), ints(rv))


def from_binomials(factors: Sequence[tuple[int, int]]) -> QFraction:
    """Unreduced fraction of prod [m+n]! / ([m]! [n]!)."""
    num: list[int] = []
    den: list[int] = []
    for m, n in factors:
        if m < 0 or n < 0:
            raise ValueError(f"binomial factor ({m}, {n}) has a negative entry")
        num.extend(range(2, m + n + 1))
        den.extend(range(2, m + 1))
        den.extend(range(2, n + 1))
    return QFraction(tuple(num), tuple(den))


def from_qints(indices: Iterable[int]) -> QFraction:
    return QFraction(tuple(indices), ())


def reduce(f: QFraction) -> QFraction:
    return f.reduce()


def from_tree(t: PlaneTree) -> QFraction:
    num: list[int] = []
    den: list[int] = []
    for _, s in t.walk():
        if len(s.children) >= 2:
            num.extend(range(2, s.edges + 1))
            for c in s.children:
                den.extend(range(2, c.edges + 2))
    return QFraction(tuple(num), tuple(den)).reduce()


def binomial_product(factors: Sequence[tuple[int, int]]) -> Poly:
    return qcalc.poly_prod(qcalc.gauss(m, n) for m, n in factors)


def is_realizable(factors: Sequence[tuple[int, int]]) -> bool:
    return not from_binomials(normalize_factors(factors)).reduce().repeated()


def realize(factors: Sequence[tuple[int, int]]) -> PlaneTree:
    """A tree whose plucking polynomial is the product of the given binomials.

    Factors are placed largest total first.  Each later factor (m, n) takes the
    smallest free slot of size >= m + n, filling it with a string followed by a
    wedge of two fresh slots of sizes m and n.  Slots nobody takes become paths.
    """
    fs = normalize_factors(factors)
    if not fs:
        return trees.LEAF
    reduced = from_binomials(fs).reduce()
    rep = reduced.repeated()
    if rep:
        raise NotRealizable(f"[{rep[0]}]_q repeats in the reduced numerator ({reduced})", witness=rep[0])
    fs.sort(key=lambda f: -(f[0] + f[1]))

    slot_size: list[int] = []
    host: dict[int, int] = {}
    factor_slots: list[tuple[int, int]] = []

    def new_slots(m: int, n: int) -> None:
        slot_size.extend((m, n))
        factor_slots.append((len(slot_size) - 2, len(slot_size) - 1))

    new_slots(*fs[0])
    for i, (m, n) in enumerate(fs[1:], start=1):
        total = m + n
        free = [s for s in range(len(slot_size)) if s not in host and slot_size[s] >= total]
        if not free:
            raise InternalInconsistency(f"no slot of size >= {total} for factor {(m, n)} in {fs}")
        host[min(free, key=lambda s: (slot_size[s], s))] = i
        new_slots(m, n)

    def build(slot: int) -> PlaneTree:
        if slot not in host:
            return trees.path_tree(slot_size[slot])
        i = host[slot]
        a, b = factor_slots[i]
        body = trees.wedge([build(a), build(b)])
        return trees.string_over(body, slot_size[slot] - body.edges)

    a, b = factor_slots[0]
    result = trees.wedge([build(a), build(b)])
    if trees.pluck_product(result) != binomial_product(fs):
        raise InternalInconsistency(f"realization of {fs} does not reproduce the product")
    return result


def realize_qints(indices: Sequence[int]) -> PlaneTree:
    """A tree with Q = prod [a_i]_q for strictly increasing a_1 < ... < a_k.

    Built bottom-up: each new factor [a]_q puts the current tree on a string
    and wedges on a single edge, for a total of ``a`` edges.
    """
    idx = list(indices)
    if any(a < 2 for a in idx):
        raise ValueError(f"q-integer indices must be >= 2: {idx}")
    if idx != sorted(idx):
        raise ValueError(f"indices must be given in increasing order: {idx}")
    for x, y in zip(idx, idx[1:]):
        if x == y:
            raise NotRealizable(f"[{x}]_q is repeated", witness=x)
    t = trees.LEAF
    for a in idx:
        t = trees.wedge([trees.path_tree(1), trees.string_over(t, a - 1 - t.edges)])
    target = qcalc.poly_prod(qcalc.q_int(a) for a in idx)
    if trees.pluck_product(t) != target:
        raise InternalInconsistency(f"q-integer realization of {idx} failed verification")
    return t


# --- from a polynomial back to q-integers --------------------------------------------


def _sdivmod(a: list[int], b: Sequence[int]) -> tuple[list[int], list[int]]:
    """Signed long division by a monic polynomial."""
    a = list(a)
    db = len(b) - 1
    q = [0] * max(len(a) - db, 1)
    for k in range(len(a) - 1 - db, -1, -1):
        c = a[k + db]
        q[k] = c
        if c:
            for j, y in enumerate(b):
                a[k + j] -= c * y
    return q, a[:db] if db else []


@lru_cache(maxsize=None)
def _cyclotomic(d: int) -> tuple[int, ...]:
    p = [-1] + [0] * (d - 1) + [1]
    for k in range(1, d):
        if d % k == 0:
            p, _ = _sdivmod(p, _cyclotomic(k))
    return tuple(p)


def _totient(n: int) -> int:
    out, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            out -= out // p
        p += 1
    if m > 1:
        out -= out // m
    return out


def qfraction_of_poly(p: Sequence[int]) -> QFraction | None:
    """Write ``p`` as a reduced ratio of q-integer products, or None if impossible."""
    rem = list(qcalc.normalize(p))
    if rem == [0]:
        return None
    deg0 = len(rem) - 1
    cyclo: Counter = Counter()
    d = 2
    limit = 2 * deg0 * deg0 + 2  # phi(d) >= sqrt(d / 2)
    while len(rem) > 1 and d <= limit:
        if _totient(d) <= len(rem) - 1:
            phi = _cyclotomic(d)
            while len(rem) - 1 >= len(phi) - 1:
                quo, r = _sdivmod(rem, phi)
                if any(r):
                    break
                rem = list(qcalc.normalize(quo))
                cyclo[d] += 1
        d += 1
    if rem != [1]:
        return None
    x: dict[int, int] = {}
    top = max(cyclo, default=1)
    for k in range(top, 1, -1):
        x[k] = cyclo[k] - sum(x[j] for j in range(2 * k, top + 1, k))
    num = [k for k, c in x.items() for _ in range(c) if c > 0]
    den = [k for k, c in x.items() for _ in range(-c) if c < 0]
    return QFraction(tuple(num), tuple(den))


# --- realization search ------------------------------------------------------------------


@lru_cache(maxsize=None)
def _forests(total: int, hooks: tuple[int, ...]) -> frozenset[tuple[str, ...]]:
    """Canonical forests on ``total`` vertices whose trees of size >= 2 have
    exactly the sizes ``hooks`` (sorted descending); every other vertex is a leaf."""
    if len(hooks) > total:
        return frozenset()
    if not hooks:
        return frozenset({("()",) * total})
    h, rest = hooks[0], hooks[1:]
    if h > total:
        return frozenset()
    outer_room = total - h
    # sizes too big for the outer forest must sit inside the size-h tree
    forced = [k for k in rest if k > outer_room]
    if any(k >= h for k in forced):
        return frozenset()
    below = Counter(k for k in rest if k < h and k <= outer_room)
    values = sorted(below)
    out: set[tuple[str, ...]] = set()

    def choose(i: int, picked: list[int]) -> None:
        if len(picked) > h - 1:
            return
        if i == len(values):
            if len(rest) - len(picked) > outer_room:
                return
            inner = _forests(h - 1, tuple(sorted(picked, reverse=True)))
            if not inner:
                return
            left = Counter(rest)
            left.subtract(picked)
            outer = _forests(outer_room, tuple(sorted(left.elements(), reverse=True)))
            for fi in inner:
                enc = "(" + "".join(fi) + ")"
                for fo in outer:
                    out.add(tuple(sorted(fo + (enc,))))
            return
        v = values[i]
        for c in range(below[v] + 1):
            choose(i + 1, picked + [v] * c)

    choose(0, forced)
    return frozenset(out)


def search_realizations(target: QFraction, max_edges: int | None = None) -> list[str]:
    """Canonical encodings of every reduced tree with Q equal to ``target``."""
    f = target.reduce()
    x = f.exponents()
    if not f.num:
        return ["()"] if not f.den else []
    e = f.num[0]
    if max_edges is not None and e > max_edges:
        return []
    if x[e] != 1 or any(k > e for k in f.den):
        return []
    sizes: list[int] = []
    for k in range(2, e):
        need = 1 - x[k]
        if need < 0:
            return []
        sizes.extend([k] * need)
    return sorted("(" + "".join(fo) + ")" for fo in _forests(e, tuple(sorted(sizes, reverse=True))))


def brute_realizations(target: Sequence[int], max_edges: int, budget: int | None = None) -> list[str]:
    """Enumerate every reduced tree with at most ``max_edges`` edges and keep those
    whose plucking polynomial equals ``target``.

    A reduced tree with e >= 1 edges has deg Q >= e - 1, so larger trees are skipped.
    """
    target = qcalc.normalize(target)
    deg = len(target) - 1
    hits: list[str] = []
    for e in range(0, min(max_edges, deg + 1) + 1):
        for t in trees.enumerate_reduced_trees(e, budget):
            if trees.pluck_product(t) == target:
                hits.append(t.canonical)
    return sorted(hits)


def count_realizations(
    target: Sequence[int] | QFraction, max_edges: int, method: str = "guided"
) -> list[str]:
    """Reduced trees (canonical encodings) with plucking polynomial ``target``.

    ``method="guided"`` builds trees from the subtree sizes the target forces;
    ``method="brute"`` enumerates all reduced trees up to ``max_edges``.
    """
    if method == "brute":
        poly = target.expand() if isinstance(target, QFraction) else target
        return brute_realizations(poly, max_edges)
    if method != "guided":
        raise ValueError(f"unknown search method {method!r}")
    frac = target if isinstance(target, QFraction) else qfraction_of_poly(target)
    if frac is None:
        return []
    return search_realizations(frac, max_edges)


# --- collisions among reduced trees ---------------------------------------------------


@dataclass
class CollisionGroup:
    coeffs: Poly
    members: list[str]
    components: list[list[str]] = field(default_factory=list)
    move_violations: list[tuple[str, str]] = field(default_factory=list)

    @property
    def connected(self) -> bool:
        return len(self.components) == 1

    def as_record(self) -> dict:
        return {
            "coeffs": qcalc.to_csv(self.coeffs),
            "size": len(self.members),
            "members": self.members,
            "components": len(self.components),
            "connected_by_exchange": self.connected,
            "move_violations": [list(v) for v in self.move_violations],
        }


def exchange_components(members: Sequence[str], coeffs: Poly) -> tuple[list[list[str]], list[tuple[str, str]]]:
    """Split trees sharing a plucking polynomial into classes linked by exchange moves."""
    parent = {m: m for m in members}

    def find(a: str) -> str:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    violations = []
    for enc in members:
        t = trees.parse_tree(enc)
        for u1, u2 in trees.legal_exchanges(t):
            moved = trees.exchange_move(t, u1, u2).canonical
            if moved in parent:
                parent[find(moved)] = find(enc)
            elif trees.pluck_product(trees.parse_tree(moved)) != coeffs:
                violations.append((enc, moved))
    groups: dict[str, list[str]] = {}
    for m in members:
        groups.setdefault(find(m), []).append(m)
    return sorted(sorted(g) for g in groups.values()), violations


def collision_groups(entries: Iterable[trees.TreeCatalogEntry], reduced_only: bool = True) -> list[CollisionGroup]:
    by_poly: dict[Poly, list[str]] = {}
    for entry in entries:
        if reduced_only and not trees.is_reduced(trees.parse_tree(entry.canonical)):
            continue
        by_poly.setdefault(entry.coeffs, []).append(entry.canonical)
    out = []
    for coeffs, members in sorted(by_poly.items()):
        if len(members) < 2:
            continue
        members = sorted(members)
        comps, bad = exchange_components(members, coeffs)
        out.append(CollisionGroup(coeffs, members, comps, bad))
    return out

