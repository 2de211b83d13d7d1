"""Plane rooted trees and their plucking polynomial.

Text format: a vertex is ``(`` followed by its children's encodings, left to
right, then ``)``.  ``()`` is the one-vertex tree, ``(()())`` the cherry.
Whitespace is ignored.

Vertices are addressed by their path from the root, a tuple of child indices;
``()`` is the root.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterator, Sequence

from . import qcalc
from .errors import BudgetExceeded, IllegalMove, TreeParseError
from .qcalc import Poly

Path = tuple[int, ...]

DEFAULT_MAX_EDGES = 16
BUDGET_ENV = "PLUCKING_MAX_EDGES"


def edge_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    return int(raw) if raw else DEFAULT_MAX_EDGES


@dataclass(frozen=True)
class PlaneTree:
    children: tuple["PlaneTree", ...] = ()

    @cached_property
    def edges(self) -> int:
        return sum(c.edges + 1 for c in self.children)

    @cached_property
    def encoding(self) -> str:
        return "(" + "".join(c.encoding for c in self.children) + ")"

    @cached_property
    def canonical(self) -> str:
        return "(" + "".join(sorted(c.canonical for c in self.children)) + ")"

    @property
    def vertices(self) -> int:
        return self.edges + 1

    def __str__(self) -> str:
        return self.encoding

    def subtree(self, path: Path) -> "PlaneTree":
        t = self
        for i in path:
            t = t.children[i]
        return t

    def replace(self, path: Path, new: "PlaneTree") -> "PlaneTree":
        if not path:
            return new
        i, rest = path[0], path[1:]
        kids = list(self.children)
        kids[i] = kids[i].replace(rest, new)
        return PlaneTree(tuple(kids))

    def walk(self, prefix: Path = ()) -> Iterator[tuple[Path, "PlaneTree"]]:
        """Preorder traversal yielding (path, subtree)."""
        yield prefix, self
        for i, c in enumerate(self.children):
            yield from c.walk(prefix + (i,))


LEAF = PlaneTree()


def parse_tree(text: str) -> PlaneTree:
    s = "".join(text.split())
    if not s:
        raise TreeParseError("empty tree encoding")
    stack: list[list[PlaneTree]] = []
    root = None
    for pos, ch in enumerate(s):
        if root is not None:
            raise TreeParseError(f"trailing characters after position {pos}: {s!r}")
        if ch == "(":
            stack.append([])
        elif ch == ")":
            if not stack:
                raise TreeParseError(f"unbalanced ')' at position {pos}: {s!r}")
            node = PlaneTree(tuple(stack.pop()))
            if stack:
                stack[-1].append(node)
            else:
                root = node
        else:
            raise TreeParseError(f"unexpected character {ch!r} at position {pos}")
    if root is None:
        raise TreeParseError(f"unbalanced encoding: {s!r}")
    return root


def path_tree(n: int) -> PlaneTree:
    """A string of ``n`` edges hanging from the root."""
    t = LEAF
    for _ in range(n):
        t = PlaneTree((t,))
    return t


def star(k: int) -> PlaneTree:
    return PlaneTree((LEAF,) * k)


def string_over(t: PlaneTree, length: int) -> PlaneTree:
    """Put ``t`` at the top of a string of ``length`` edges."""
    for _ in range(length):
        t = PlaneTree((t,))
    return t


def wedge(parts: Sequence[PlaneTree]) -> PlaneTree:
    """Glue trees at their roots, children kept in the given order."""
    if not parts:
        raise ValueError("wedge needs at least one tree")
    return PlaneTree(tuple(c for t in parts for c in t.children))


def canonical(t: PlaneTree) -> str:
    return t.canonical


def canonical_tree(t: PlaneTree) -> PlaneTree:
    return PlaneTree(tuple(sorted((canonical_tree(c) for c in t.children), key=lambda c: c.canonical)))


def leaves(t: PlaneTree) -> list[Path]:
    """Non-root vertices of degree one, left to right."""
    return [p for p, s in t.walk() if p and not s.children]


def r_weight(t: PlaneTree, v: Path) -> int:
    """Number of edges strictly to the right of the root-to-``v`` path."""
    try:
        target = t.subtree(v)
    except IndexError:
        raise IllegalMove(f"no vertex at {v}") from None
    if not v or target.children:
        raise IllegalMove(f"vertex {v} is not a leaf")
    total = 0
    node = t
    for i in v:
        total += sum(c.edges + 1 for c in node.children[i + 1 :])
        node = node.children[i]
    return total


def remove_leaf(t: PlaneTree, v: Path) -> PlaneTree:
    parent, i = v[:-1], v[-1]
    p = t.subtree(parent)
    return t.replace(parent, PlaneTree(p.children[:i] + p.children[i + 1 :]))


def pluck_recursive(t: PlaneTree, memo: str | None = "canonical") -> Poly:
    """Plucking polynomial straight from the leaf-removal recursion.

    ``memo`` picks the cache key: ``"canonical"`` (fast, relies on the value not
    depending on the plane embedding), ``"plane"`` (exact plane encoding) or
    ``None`` (no caching at all).
    """
    if memo not in ("canonical", "plane", None):
        raise ValueError(f"unknown memo mode {memo!r}")
    cache: dict[str, Poly] = {}

    def go(s: PlaneTree) -> Poly:
        if not s.children:
            return qcalc.ONE
        key = None
        if memo is not None:
            key = s.canonical if memo == "canonical" else s.encoding
            hit = cache.get(key)
            if hit is not None:
                return hit
        out: Poly = qcalc.ZERO
        for v in leaves(s):
            out = qcalc.poly_add(out, qcalc.poly_shift(go(remove_leaf(s, v)), r_weight(s, v)))
        if key is not None:
            cache[key] = out
        return out

    return go(t)


def vertex_weight(t: PlaneTree) -> Poly:
    """q-multinomial weight of the root of ``t``: one block per child subtree."""
    if len(t.children) <= 1:
        return qcalc.ONE
    return qcalc.q_multinomial([c.edges + 1 for c in t.children])


def pluck_product(t: PlaneTree) -> Poly:
    """Plucking polynomial as the product of all vertex weights."""
    return qcalc.poly_prod(vertex_weight(s) for _, s in t.walk())


def branching_number(t: PlaneTree) -> int:
    if t.edges == 0:
        raise ValueError("branching number is defined for trees with at least one edge")
    return sum(len(s.children) - 1 for _, s in t.walk() if s.children)


def reduce_string(t: PlaneTree) -> PlaneTree:
    while len(t.children) == 1:
        t = t.children[0]
    return t


def is_reduced(t: PlaneTree) -> bool:
    return len(t.children) != 1


def is_ancestor(a: Path, b: Path) -> bool:
    return len(a) <= len(b) and b[: len(a)] == a


def exchange_move(t: PlaneTree, u1: Path, u2: Path) -> PlaneTree:
    """Swap the subtrees hanging at ``u1`` and ``u2``.

    Both must be non-root, unrelated by ancestry, and carry the same number of edges.
    """
    if not u1 or not u2:
        raise IllegalMove("the root cannot be exchanged")
    if is_ancestor(u1, u2) or is_ancestor(u2, u1):
        raise IllegalMove(f"{u1} and {u2} are equal or nested")
    try:
        s1, s2 = t.subtree(u1), t.subtree(u2)
    except IndexError:
        raise IllegalMove(f"no vertex at {u1} or {u2}") from None
    if s1.edges != s2.edges:
        raise IllegalMove(f"subtree sizes differ: {s1.edges} vs {s2.edges}")
    return t.replace(u1, s2).replace(u2, s1)


def legal_exchanges(t: PlaneTree) -> Iterator[tuple[Path, Path]]:
    verts = [(p, s.edges) for p, s in t.walk() if p]
    for a in range(len(verts)):
        for b in range(a + 1, len(verts)):
            (p1, e1), (p2, e2) = verts[a], verts[b]
            if e1 == e2 and not is_ancestor(p1, p2) and not is_ancestor(p2, p1):
                yield p1, p2


# --- enumeration ----------------------------------------------------------------


def _check_budget(e: int, budget: int | None) -> None:
    limit = edge_budget() if budget is None else budget
    if e < 0:
        raise ValueError(f"edge count must be nonnegative, got {e}")
    if e > limit:
        raise BudgetExceeded(f"{e} edges exceeds the enumeration budget of {limit} (set {BUDGET_ENV})")


@lru_cache(maxsize=None)
def _plane_trees(e: int) -> tuple[PlaneTree, ...]:
    if e == 0:
        return (LEAF,)
    out = []
    # first child subtree carries s edges including its stem
    for s in range(1, e + 1):
        for first in _plane_trees(s - 1):
            for rest in _plane_trees(e - s):
                out.append(PlaneTree((first,) + rest.children))
    return tuple(out)


def enumerate_plane_trees(e: int, budget: int | None = 12) -> tuple[PlaneTree, ...]:
    """Every ordered rooted tree with ``e`` edges (Catalan many)."""
    _check_budget(e, budget)
    return _plane_trees(e)


@lru_cache(maxsize=None)
def _rooted(e: int) -> tuple[PlaneTree, ...]:
    """Unordered rooted trees with ``e`` edges, canonical form, sorted by encoding."""
    if e == 0:
        return (LEAF,)
    # candidate child subtrees, by size so the scan can stop early
    items = [(s, c) for s in range(1, e + 1) for c in _rooted(s - 1)]
    out: list[PlaneTree] = []

    def extend(start: int, remaining: int, chosen: list[PlaneTree]) -> None:
        if remaining == 0:
            out.append(PlaneTree(tuple(sorted(chosen, key=lambda c: c.canonical))))
            return
        for k in range(start, len(items)):
            s, c = items[k]
            if s > remaining:
                break
            chosen.append(c)
            extend(k, remaining - s, chosen)
            chosen.pop()

    extend(0, e, [])
    out.sort(key=lambda t: t.canonical)
    return tuple(out)


def enumerate_rooted_trees(e: int, budget: int | None = None) -> Iterator[PlaneTree]:
    """Each unordered rooted tree with ``e`` edges once, in canonical form."""
    _check_budget(e, budget)
    yield from _rooted(e)


def enumerate_reduced_trees(e: int, budget: int | None = None) -> Iterator[PlaneTree]:
    return (t for t in enumerate_rooted_trees(e, budget) if is_reduced(t))


# --- catalog --------------------------------------------------------------------


@dataclass(frozen=True)
class TreeCatalogEntry:
    canonical: str
    edges: int
    coeffs: Poly

    def to_line(self) -> str:
        return f"{self.canonical}\t{self.edges}\t{qcalc.to_csv(self.coeffs)}"

    @classmethod
    def from_line(cls, line: str) -> "TreeCatalogEntry":
        enc, edges, csv = line.rstrip("\n").split("\t")
        return cls(enc, int(edges), qcalc.from_csv(csv))


def catalog_entry(t: PlaneTree) -> TreeCatalogEntry:
    return TreeCatalogEntry(t.canonical, t.edges, pluck_product(t))


def write_catalog(path: str | os.PathLike, entries: Sequence[TreeCatalogEntry]) -> None:
    """Write the whole catalog at once; readers never see a partial file."""
    path = os.fspath(path)
    tmp = f"{path}.tmp{os.getpid()}"
    with open(tmp, "w", encoding="utf-8") as fh:
        for entry in entries:
            fh.write(entry.to_line() + "\n")
    os.replace(tmp, path)


def read_catalog(path: str | os.PathLike) -> list[TreeCatalogEntry]:
    with open(path, encoding="utf-8") as fh:
        return [TreeCatalogEntry.from_line(line) for line in fh if line.strip()]
