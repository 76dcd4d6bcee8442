"""Expansion of condition assignments into domains of linear orders.

A complete assignment describes the maximal set of linear orders that
satisfy every assigned condition; that set always has transitive pairwise
majorities.  Expansion extends order prefixes one most-preferred element at
a time, checking each condition as soon as the rank it constrains is
decided, instead of filtering all n! orders.
"""

from __future__ import annotations

from itertools import permutations
from math import comb, factorial

from . import core
from .lexcode import Assignment, num_slots


class Domain:
    """A set of linear orders over 1..n, kept sorted for determinism."""

    __slots__ = ("n", "orders", "source", "_members")

    def __init__(self, n: int, orders, source: Assignment | None = None):
        self.n = n
        self.orders = tuple(sorted(tuple(o) for o in orders))
        self.source = source
        self._members = frozenset(self.orders)

    def __len__(self) -> int:
        return len(self.orders)

    def __iter__(self):
        return iter(self.orders)

    def __contains__(self, order) -> bool:
        return tuple(order) in self._members

    def __eq__(self, other) -> bool:
        return isinstance(other, Domain) and self.n == other.n and self.orders == other.orders

    def __hash__(self) -> int:
        return hash((self.n, self.orders))

    def __repr__(self) -> str:
        return f"Domain(n={self.n}, size={len(self.orders)})"


def _element_slots(n: int) -> list[list[tuple[int, int]]]:
    """For each alternative, the (slot, in-triple position) pairs it joins."""
    table: list[list[tuple[int, int]]] = [[] for _ in range(n + 1)]
    for k in range(num_slots(n)):
        a, b, c = core.triple_at(k, n)
        table[a].append((k, 1))
        table[b].append((k, 2))
        table[c].append((k, 3))
    return table


def expand(assignment: Assignment) -> Domain:
    """All linear orders satisfying every condition of a complete assignment."""
    if not assignment.is_complete:
        raise ValueError("expansion needs a complete assignment")
    n = assignment.n
    slots_of = _element_slots(n)
    cond = [core.CONDITION_PAIRS[c] for c in assignment.codes]
    placed = [0] * num_slots(n)
    used = [False] * (n + 1)
    prefix: list[int] = []
    out: list[tuple[int, ...]] = []

    def rec() -> None:
        if len(prefix) == n:
            out.append(tuple(prefix))
            return
        for e in range(1, n + 1):
            if used[e]:
                continue
            ok = True
            for k, pos in slots_of[e]:
                placed[k] += 1
                x, y = cond[k]
                if placed[k] == y and pos == x:
                    ok = False
            if ok:
                used[e] = True
                prefix.append(e)
                rec()
                prefix.pop()
                used[e] = False
            for k, _pos in slots_of[e]:
                placed[k] -= 1

    rec()
    return Domain(n, out, source=assignment)


def expand_filtered(assignment: Assignment) -> Domain:
    """Same set via filtering all n! orders; test oracle, small n only."""
    if not assignment.is_complete:
        raise ValueError("expansion needs a complete assignment")
    n = assignment.n
    if n > 7:
        raise ValueError("the n!-filter oracle is capped at n <= 7")
    conds = list(assignment.items())
    orders = [
        o
        for o in permutations(range(1, n + 1))
        if all(core.satisfies(o, t, c) for t, c in conds)
    ]
    return Domain(n, orders, source=assignment)


def expand_size(assignment: Assignment) -> int:
    """Domain size of a complete assignment."""
    return len(expand(assignment))


def is_unitary(domain: Domain) -> bool:
    """True iff the ascending order 1 2 .. n belongs to the domain."""
    return tuple(range(1, domain.n + 1)) in domain


def satisfied_cells(domain: Domain, t) -> set[tuple[int, int]]:
    """All (i, j) pairs, degenerate ones included, violated by no member."""
    cells = {(i, j) for i in (1, 2, 3) for j in (1, 2, 3)}
    for o in domain.orders:
        pattern = core.restrict(o, t)
        for j in (1, 2, 3):
            cells.discard((pattern[j - 1], j))
        if not cells:
            break
    return cells


def satisfied_conditions(domain: Domain, t) -> set[int]:
    """Codes of the six valid conditions that every member satisfies."""
    return {
        core.CONDITION_CODES[cell]
        for cell in satisfied_cells(domain, t)
        if cell in core.CONDITION_CODES
    }


def is_copious(domain: Domain) -> bool:
    """True iff every triple restriction realizes exactly 4 of the 6 patterns."""
    for k in range(num_slots(domain.n)):
        t = core.triple_at(k, domain.n)
        patterns = {core.restrict(o, t) for o in domain.orders}
        if len(patterns) != 4:
            return False
    return True


def is_maximal(domain: Domain, cells: int = 9, force: bool = False) -> bool:
    """True iff no order can be added while keeping majorities transitive.

    An extension survives iff every triple still has some never condition
    satisfied by all members.  With cells=9 all nine (i, j) pairs count;
    with cells=6 only the six valid ones do.  The two agree on any domain
    containing the ascending order, which already rules the degenerate
    cells out.
    """
    n = domain.n
    if n > 9 and not force:
        raise ValueError("is_maximal enumerates all n! candidates; pass force=True beyond n=9")
    if cells not in (6, 9):
        raise ValueError("cells must be 6 or 9")
    triples = core.all_triples(n)
    masks = []
    for t in triples:
        kept = satisfied_cells(domain, t)
        if cells == 6:
            kept = {cell for cell in kept if cell in core.CONDITION_CODES}
        masks.append(kept)
    if any(not m for m in masks):
        raise ValueError("not a Condorcet domain: some triple satisfies no condition")
    for cand in permutations(range(1, n + 1)):
        if cand in domain:
            continue
        fits = True
        for t, kept in zip(triples, masks):
            pattern = core.restrict(cand, t)
            violated = {(pattern[j - 1], j) for j in (1, 2, 3)}
            if kept <= violated:
                fits = False
                break
        if fits:
            return False
    return True


def histogram(assignments) -> dict[int, int]:
    """Map expanded-domain size -> class count, ascending by size."""
    counts: dict[int, int] = {}
    for a in assignments:
        size = expand_size(a)
        counts[size] = counts.get(size, 0) + 1
    return dict(sorted(counts.items()))


def format_histogram(counts: dict[int, int]) -> str:
    return "\n".join(f"{size}: {count}" for size, count in sorted(counts.items()))


def parse_histogram(text: str) -> dict[int, int]:
    counts: dict[int, int] = {}
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        size, count = line.split(":")
        counts[int(size)] = int(count)
    return counts


# ---------------------------------------------------------------------------
# Domain files: header with n and the source code string, one order per line.


def write_domain(fh, domain: Domain) -> None:
    source = domain.source.encode() if domain.source is not None else "unknown"
    fh.write(f"# n={domain.n} source={source}\n")
    for o in domain.orders:
        fh.write(core.format_order(o, domain.n) + "\n")


def read_domain(fh) -> Domain:
    header = fh.readline().strip()
    if not header.startswith("#"):
        raise ValueError("domain file must start with a '#' header line")
    fields = dict(part.split("=", 1) for part in header[1:].split() if "=" in part)
    n = int(fields["n"])
    source = None
    if fields.get("source") not in (None, "unknown"):
        source = Assignment.from_string(fields["source"], n)
    orders = []
    for line in fh:
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        orders.append(core.parse_order(line, n))
    return Domain(n, orders, source=source)
