"""Relabeling action on condition assignments and canonicity tests.

A permutation g of the alternatives carries a never condition iNj on triple
t to a condition i'Nj on the sorted image triple, where i' is the position
that g gives to the i-th smallest element of t.  The rank j is untouched.
When i' == j the image is one of the degenerate conditions 1N1/2N2/3N3,
which no unitary domain can satisfy; such images are reported as code 0 and
reject the permutation wherever a valid image is required.

Permutations are written as tuples of images: g[x-1] is the image of
alternative x, and alternatives beyond len(g) are fixed.  They are
enumerated in lexicographic order of the image sequence.
"""

from __future__ import annotations

from itertools import islice
from itertools import permutations as _permutations
from math import comb, factorial

import numpy as np

from . import core
from .lexcode import GREATER, Assignment, lex_compare

_PERM_CACHE = {}


def permutations_of(m: int) -> list[tuple[int, ...]]:
    """All permutations of 1..m, lexicographic by image sequence, cached."""
    if m not in _PERM_CACHE:
        if m > 9:
            raise ValueError(f"refusing to materialize {m}! permutations")
        _PERM_CACHE[m] = list(_permutations(range(1, m + 1)))
    return _PERM_CACHE[m]


def apply_alt(g: tuple[int, ...], x: int) -> int:
    return g[x - 1] if x <= len(g) else x


def apply_to_triple(g: tuple[int, ...], t) -> tuple[int, int, int]:
    """Sorted image of a triple under g."""
    return tuple(sorted(apply_alt(g, x) for x in t))


def position_map(t, g: tuple[int, ...]) -> tuple[int, int, int]:
    """Where each in-triple position of t lands inside the image triple.

    Entry i-1 is the rank (1..3) of g(i-th smallest of t) within the sorted
    image.  The map is a permutation of (1, 2, 3).
    """
    images = [apply_alt(g, x) for x in t]
    ranked = sorted(images)
    return tuple(ranked.index(v) + 1 for v in images)


def induced_condition(t, code: int, g: tuple[int, ...]) -> int:
    """Image of a condition under g, or 0 when the image is degenerate."""
    i, j = core.CONDITION_PAIRS[code]
    i2 = position_map(t, g)[i - 1]
    if i2 == j:
        return 0
    return core.CONDITION_CODES[(i2, j)]


def transform(assignment: Assignment, g: tuple[int, ...], rules: tuple[int, ...]) -> Assignment | None:
    """Relabeled assignment, or None when any image leaves the rule set.

    Every assigned condition moves to the slot of its image triple; a
    degenerate image or an image outside ``rules`` rejects the whole
    permutation.
    """
    n = assignment.n
    allowed = set(rules)
    codes = bytearray(len(assignment.codes))
    for t, c in assignment.items():
        c2 = induced_condition(t, c, g)
        if c2 == 0 or c2 not in allowed:
            return None
        codes[core.triple_index(apply_to_triple(g, t), n)] = c2
    return Assignment(n, bytes(codes))


# Effect of swapping in-triple positions 1 and 2 on each condition code,
# which is what a relabeling does to a triple with two members below the
# permuted region's ceiling and one above.  0 marks a degenerate image.
_PAIR_FLIP = {1: 0, 2: 4, 3: 0, 4: 2, 5: 5, 6: 6}


def flip_closed(rules: tuple[int, ...]) -> bool:
    """True iff every rule survives a position-1/2 flip inside the rule set."""
    allowed = set(rules)
    return all(_PAIR_FLIP[c] in allowed for c in allowed)


def _validate_prefix(assignment: Assignment, rules: tuple[int, ...]) -> int:
    if not assignment.is_colex_prefix():
        raise ValueError("assigned slots must form a co-lex prefix")
    allowed = set(rules)
    k = assignment.assigned_count
    for c in assignment.codes[:k]:
        if c not in allowed:
            raise ValueError(f"assigned code {c} is outside the rule set")
    return k


def is_partially_lex_max(assignment: Assignment, rules: tuple[int, ...]) -> bool:
    """Partial maximality test used to prune the orderly search.

    Permutations of 1..m (m = largest assigned alternative; identity beyond)
    are screened by three rejection rules before their transform is compared
    against the assignment:

    a. an assigned condition has a degenerate image or one outside the rules;
    b. an unassigned triple has some allowed condition whose image leaves the
       rules;
    c. an unassigned triple maps onto an assigned slot (equivalently the
       assigned slots are not permuted among themselves).

    The assignment passes when no surviving permutation yields a
    lexicographically greater transform.  Rule (b) silently covers the
    triples straddling the support boundary: a triple with two members below
    m and one above sees its conditions flipped through _PAIR_FLIP, so when
    alternatives beyond m exist and the rule set is not flip-closed, every
    non-identity permutation dies on rule (b) and the test passes outright.
    """
    k = _validate_prefix(assignment, rules)
    if k == 0 or len(set(rules)) == 1:
        return True
    n = assignment.n
    codes = assignment.codes
    m = core.triple_at(k - 1, n)[2]
    if m < n and not flip_closed(rules):
        return True
    if m == n and n >= 6:
        if _tables_for(n) is not None:
            return _partial_vectorized(assignment, rules, k)
        # n >= 9: screening here would stream n! permutation blocks per
        # node; skip it and let the exact leaf gate do the rejecting.
        return True
    triples = [core.triple_at(i, n) for i in range(comb(m, 3))]
    allowed = set(rules)
    identity = tuple(range(1, m + 1))

    for g in permutations_of(m):
        if g == identity:
            continue
        trans = bytearray(k)
        ok = True
        for i in range(k):
            s = core.triple_index(apply_to_triple(g, triples[i]), n)
            if s >= k:
                ok = False  # rule (c): bumps an assigned slot off the prefix
                break
            c2 = induced_condition(triples[i], codes[i], g)
            if c2 == 0 or c2 not in allowed:
                ok = False  # rule (a)
                break
            trans[s] = c2
        if not ok:
            continue
        for u in range(k, comb(m, 3)):
            pm = position_map(triples[u], g)
            for c in allowed:
                i, j = core.CONDITION_PAIRS[c]
                i2 = pm[i - 1]
                if i2 == j or core.CONDITION_CODES[(i2, j)] not in allowed:
                    ok = False  # rule (b)
                    break
            if not ok:
                break
        if not ok:
            continue
        if bytes(trans) > codes[:k]:
            return False
    return True


def is_canonical_complete(assignment: Assignment, rules: tuple[int, ...]) -> bool:
    """Exact test: no rule-respecting relabeling is lexicographically greater.

    Unlike the partial test this screens permutations of all of 1..n by rule
    (a) alone; there are no unassigned slots left to protect.  A singleton
    rule set short-circuits: the only complete assignment is its own class.
    """
    if not assignment.is_complete:
        raise ValueError("exact canonicity test needs a complete assignment")
    allowed = set(rules)
    for c in assignment.codes:
        if c not in allowed:
            raise ValueError(f"assigned code {c} is outside the rule set")
    if len(set(rules)) == 1:
        return True
    if assignment.n >= 6:
        return _canonical_vectorized(assignment, rules)
    return _canonical_loop(assignment, rules)


def _canonical_loop(assignment: Assignment, rules: tuple[int, ...]) -> bool:
    for g in permutations_of(assignment.n):
        t = transform(assignment, g, rules)
        if t is not None and lex_compare(t, assignment) == GREATER:
            return False
    return True


_TABLE_CACHE = {}
_PERM_CHUNK = 60_000


def _perm_blocks(n: int):
    """Permutations of 1..n as int8 arrays in lexicographic chunks."""
    if n <= 8:
        yield np.array(permutations_of(n), dtype=np.int8)
        return
    it = _permutations(range(1, n + 1))
    while True:
        block = list(islice(it, _PERM_CHUNK))
        if not block:
            return
        yield np.array(block, dtype=np.int8)


def _transform_tables(perms: np.ndarray, n: int):
    """Image-slot and induced-code tables for a block of permutations.

    slot_map[g, s] is the slot of the image of triple s under permutation g;
    code_map[g, s, c] is the induced code of condition c there, 0 when the
    image is degenerate.
    """
    triples = np.array(core.all_triples(n), dtype=np.int64)
    images = perms[:, triples - 1].astype(np.int64)  # (G, S, 3)
    ranks = (images[..., None] > images[..., None, :]).sum(axis=-1)  # 0..2
    srt = np.sort(images, axis=-1)
    c3 = np.array([comb(max(v - 1, 0), 3) for v in range(n + 1)])
    c2 = np.array([comb(max(v - 1, 0), 2) for v in range(n + 1)])
    slot_map = c3[srt[..., 2]] + c2[srt[..., 1]] + (srt[..., 0] - 1)
    code_map = np.zeros(images.shape[:2] + (7,), dtype=np.int8)
    for c, (x, y) in core.CONDITION_PAIRS.items():
        lut = np.array(
            [0] + [0 if i == y else core.CONDITION_CODES[(i, y)] for i in (1, 2, 3)],
            dtype=np.int8,
        )
        code_map[..., c] = lut[ranks[..., x - 1] + 1]
    return slot_map, code_map


def _tables_for(n: int):
    if n not in _TABLE_CACHE:
        if factorial(n) > _PERM_CHUNK * 2:
            return None
        perms = np.array(permutations_of(n), dtype=np.int8)
        _TABLE_CACHE[n] = _transform_tables(perms, n)
    return _TABLE_CACHE[n]


def _beats_input(codes_arr: np.ndarray, slot_map, code_map, in_rules) -> bool:
    """True when some valid relabeling in the block is lexicographically greater."""
    count, slots = slot_map.shape
    img = code_map[:, np.arange(slots), codes_arr]
    valid = in_rules[img].all(axis=1)
    if not valid.any():
        return False
    img = img[valid]
    trans = np.empty_like(img)
    rows = np.repeat(np.arange(img.shape[0]), slots)
    trans[rows, slot_map[valid].ravel()] = img.ravel()
    neq = trans != codes_arr
    any_neq = neq.any(axis=1)
    first = neq.argmax(axis=1)
    greater = trans[np.arange(trans.shape[0]), first] > codes_arr[first]
    return bool((any_neq & greater).any())


def _canonical_vectorized(assignment: Assignment, rules: tuple[int, ...]) -> bool:
    n = assignment.n
    codes_arr = np.frombuffer(assignment.codes, dtype=np.uint8).astype(np.int64)
    in_rules = np.zeros(7, dtype=bool)
    in_rules[list(rules)] = True
    cached = _tables_for(n)
    if cached is not None:
        slot_map, code_map = cached
        return not _beats_input(codes_arr, slot_map, code_map, in_rules)
    for perms in _perm_blocks(n):
        slot_map, code_map = _transform_tables(perms, n)
        if _beats_input(codes_arr, slot_map, code_map, in_rules):
            return False
    return True


_PARTIAL_CACHE = {}


def _partial_tables(n: int, rules: tuple[int, ...]):
    """Per-(n, rules) screens for the full-support partial test.

    prefix_ok[g, k-1]: g keeps the first k slots among themselves (rule c).
    suffix_ok[g, k]: every allowed condition on every slot >= k maps into
    the rules under g (rule b).  Both depend only on n, the rules and k,
    so they are computed once and indexed per node.
    """
    key = (n, rules)
    if key not in _PARTIAL_CACHE:
        slot_map, code_map = _tables_for(n)
        slots = slot_map.shape[1]
        in_rules = np.zeros(7, dtype=bool)
        in_rules[list(rules)] = True
        prefix_ok = np.maximum.accumulate(slot_map, axis=1) < np.arange(1, slots + 1)
        rb = in_rules[code_map[..., list(rules)]].all(axis=-1)
        suffix_ok = np.ones((rb.shape[0], slots + 1), dtype=bool)
        suffix_ok[:, :-1] = np.logical_and.accumulate(rb[:, ::-1], axis=1)[:, ::-1]
        _PARTIAL_CACHE[key] = (slot_map, code_map, prefix_ok, suffix_ok, in_rules)
    return _PARTIAL_CACHE[key]


def _partial_vectorized(assignment: Assignment, rules: tuple[int, ...], k: int) -> bool:
    """Full-support partial test over precomputed permutation tables."""
    slot_map, code_map, prefix_ok, suffix_ok, in_rules = _partial_tables(assignment.n, rules)
    cand = np.flatnonzero(prefix_ok[:, k - 1] & suffix_ok[:, k])
    if cand.size == 0:
        return True
    codes_arr = np.frombuffer(assignment.codes, dtype=np.uint8)[:k].astype(np.int64)
    img = code_map[cand[:, None], np.arange(k)[None, :], codes_arr[None, :]]
    valid = in_rules[img].all(axis=1)
    if not valid.any():
        return True
    img = img[valid]
    sub = slot_map[cand[valid]][:, :k]
    trans = np.zeros_like(img)
    rows = np.repeat(np.arange(img.shape[0]), k)
    trans[rows, sub.ravel()] = img.ravel()
    neq = trans != codes_arr
    any_neq = neq.any(axis=1)
    first = neq.argmax(axis=1)
    greater = trans[np.arange(trans.shape[0]), first] > codes_arr[first]
    return not bool((any_neq & greater).any())
