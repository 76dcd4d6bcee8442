"""Orderly depth-first generation of canonical complete condition sets.

The search walks triple slots in co-lex order while carrying the partial
domain: the orders of 1..m (m = largest alternative seen so far) that
satisfy every condition assigned yet, as a numpy matrix with one row per
order and, alongside it, the pattern index of each row on every in-support
slot.  When the slot index reaches C(m, 3) the support grows by one
alternative; each row spawns m+1 rows by inserting the newcomer at every
position, which leaves patterns on old slots untouched.

Pruning is threefold.  First, pattern-mask feasibility: a completed slot
must retain all four patterns its condition allows and an unassigned
in-support slot must still cover some rule's four-pattern set, otherwise
no completion expands to a domain with four patterns on every triple.
Second, the partial lex-max screen from the iso module.  Third, leaves
pass the exact canonicity gate, so emitted output is correct even if a
pruning rule were too lax.  At a surviving leaf the carried matrix IS the
expanded domain, which the hit exposes without a separate expansion.

Practical ceiling is around n=12: beyond that the canonicity gate has to
stream 12! permutation blocks per leaf and wall time dominates.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from math import comb
from time import perf_counter

import numpy as np

from . import core
from .domain import Domain, is_maximal
from .iso import is_canonical_complete, is_partially_lex_max
from .lexcode import Assignment

EMIT_MODES = ("conditions-only", "expanded", "histogram")

_RANK_LUT = np.array(core.RANKBITS_TO_PATTERN, dtype=np.uint8)
_SHL = np.array([1, 2, 4, 8, 16, 32], dtype=np.uint8)


@dataclass(frozen=True)
class SearchConfig:
    n: int
    rules: tuple[int, ...]
    emit_mode: str = "conditions-only"
    maximal_only: bool = False
    thread_count: int = 1

    def __post_init__(self):
        if self.n < 3:
            raise ValueError("need at least 3 alternatives")
        rules = tuple(sorted(set(self.rules)))
        if not rules:
            raise ValueError("rule set is empty")
        for c in rules:
            if c not in core.ALL_CONDITIONS:
                raise ValueError(f"invalid condition code {c}")
        object.__setattr__(self, "rules", rules)
        if self.emit_mode not in EMIT_MODES:
            raise ValueError(f"emit_mode must be one of {EMIT_MODES}")
        if self.thread_count < 1:
            raise ValueError("thread_count must be positive")


@dataclass
class SearchStats:
    nodes_visited: int = 0
    nodes_pruned: int = 0
    leaves_emitted: int = 0
    wall_time: float = 0.0


@dataclass(frozen=True)
class SearchHit:
    assignment: Assignment
    domain: Domain

    @property
    def code_string(self) -> str:
        return self.assignment.encode()


class _Engine:
    """Single-subtree DFS; mutable codes buffer, immutable row matrices."""

    def __init__(self, cfg: SearchConfig):
        self.n = cfg.n
        self.rules = cfg.rules
        self.slots = comb(cfg.n, 3)
        self.maximal_only = cfg.maximal_only
        self.stats = SearchStats()
        self.sink = None
        self.collect_at: int | None = None
        self.collected: list[bytes] = []
        self.codes = bytearray(self.slots)
        self.codes_np = np.zeros(self.slots, dtype=np.int64)
        self.keep = {
            c: np.array([bool(core.SAT_MASKS[c] >> p & 1) for p in range(6)])
            for c in self.rules
        }
        self.expect = np.zeros(7, dtype=np.uint8)
        for c in self.rules:
            self.expect[c] = core.SAT_MASKS[c]
        self.cover = np.array(
            [
                any(mask & core.SAT_MASKS[c] == core.SAT_MASKS[c] for c in self.rules)
                for mask in range(64)
            ]
        )

    def root_state(self):
        pd = np.array([[1, 2], [2, 1]], dtype=np.int8)
        pat = np.zeros((2, 0), dtype=np.uint8)
        return 0, 2, pd, pat

    def _extend(self, pd, pat, m):
        """Grow the support to m+1; False when a new slot is already dead."""
        e = m + 1
        rows = pd.shape[0]
        pdn = np.empty((rows * e, e), dtype=np.int8)
        for p in range(e):
            pdn[p::e, :p] = pd[:, :p]
            pdn[p::e, p] = e
            pdn[p::e, p + 1 :] = pd[:, p:]
        so, sn = comb(m, 3), comb(e, 3)
        patn = np.empty((rows * e, sn), dtype=np.uint8)
        patn[:, :so] = np.repeat(pat, e, axis=0)
        pos = np.empty((rows * e, e), dtype=np.int8)
        np.put_along_axis(
            pos,
            pdn.astype(np.int64) - 1,
            np.broadcast_to(np.arange(e, dtype=np.int8), pdn.shape),
            axis=1,
        )
        for s in range(so, sn):
            a, b, c = core.triple_at(s, e)
            pa, pb, pc = pos[:, a - 1], pos[:, b - 1], pos[:, c - 1]
            patn[:, s] = _RANK_LUT[4 * (pa < pb) + 2 * (pa < pc) + (pb < pc)]
        ok = True
        if sn > so:
            bits = np.bitwise_or.reduce(_SHL[patn[:, so:]], axis=0)
            ok = bool(self.cover[bits].all())
        return pdn, patn, ok

    def rec(self, k, m, pd, pat):
        self.stats.nodes_visited += 1
        while m < self.n and k == comb(m, 3):
            pd, pat, ok = self._extend(pd, pat, m)
            m += 1
            if not ok:
                self.stats.nodes_pruned += 1
                return
        if self.collect_at is not None and k == self.collect_at:
            self.collected.append(bytes(self.codes[:k]))
            return
        if k == self.slots:
            self._leaf(pd, pat)
            return
        col = pat[:, k]
        for code in self.rules:
            sel = self.keep[code][col]
            pat2 = pat[sel]
            bits = np.bitwise_or.reduce(_SHL[pat2], axis=0)
            self.codes_np[k] = code
            expected = self.expect[self.codes_np[: k + 1]]
            if not np.array_equal(bits[: k + 1], expected) or not self.cover[bits[k + 1 :]].all():
                self.stats.nodes_pruned += 1
                continue
            self.codes[k] = code
            partial = Assignment(self.n, bytes(self.codes))
            if not is_partially_lex_max(partial, self.rules):
                self.stats.nodes_pruned += 1
                continue
            self.rec(k + 1, m, pd[sel], pat2)
        self.codes[k] = 0
        self.codes_np[k] = 0

    def _leaf(self, pd, pat):
        bits = np.bitwise_or.reduce(_SHL[pat], axis=0)
        if not np.array_equal(bits, self.expect[self.codes_np]):
            self.stats.nodes_pruned += 1
            return
        assignment = Assignment(self.n, bytes(self.codes))
        if not is_canonical_complete(assignment, self.rules):
            self.stats.nodes_pruned += 1
            return
        dom = Domain(self.n, (tuple(map(int, row)) for row in pd), source=assignment)
        if self.maximal_only and not is_maximal(dom):
            self.stats.nodes_pruned += 1
            return
        self.stats.leaves_emitted += 1
        self.sink(SearchHit(assignment, dom))


def _seed(engine: _Engine, prefix: bytes):
    """Replay a code prefix; None when an extension proves the subtree empty."""
    k, m, pd, pat = engine.root_state()
    for kk, code in enumerate(prefix):
        while m < engine.n and kk == comb(m, 3):
            pd, pat, ok = engine._extend(pd, pat, m)
            m += 1
            if not ok:
                return None
        sel = engine.keep[code][pat[:, kk]]
        pd, pat = pd[sel], pat[sel]
        engine.codes[kk] = code
        engine.codes_np[kk] = code
    return len(prefix), m, pd, pat


def _subtree_worker(job):
    cfg, prefix = job
    engine = _Engine(cfg)
    payload = []
    engine.sink = lambda hit: payload.append(
        (hit.code_string, np.array(hit.domain.orders, dtype=np.int8))
    )
    state = _seed(engine, prefix)
    if state is not None:
        engine.rec(*state)
    s = engine.stats
    return payload, (s.nodes_visited, s.nodes_pruned, s.leaves_emitted)


def _emit_payload(cfg: SearchConfig, payload, sink):
    for code_string, orders in payload:
        assignment = Assignment.from_string(code_string, cfg.n)
        dom = Domain(cfg.n, (tuple(map(int, row)) for row in orders), source=assignment)
        sink(SearchHit(assignment, dom))


def _generate_parallel(cfg: SearchConfig, sink) -> SearchStats:
    scout = _Engine(cfg)
    target = 4 * cfg.thread_count
    depth = 1
    while True:
        scout.collect_at = depth
        scout.collected = []
        scout.stats = SearchStats()
        scout.rec(*scout.root_state())
        if len(scout.collected) >= target or depth >= scout.slots or not scout.collected:
            break
        depth += 1
    stats = scout.stats
    worker_cfg = replace(cfg, thread_count=1)
    jobs = [(worker_cfg, prefix) for prefix in scout.collected]
    with ProcessPoolExecutor(max_workers=cfg.thread_count) as pool:
        for payload, (visited, pruned, emitted) in pool.map(_subtree_worker, jobs):
            _emit_payload(cfg, payload, sink)
            stats.nodes_visited += visited
            stats.nodes_pruned += pruned
            stats.leaves_emitted += emitted
    return stats


def generate(cfg: SearchConfig, sink) -> SearchStats:
    """Run the full search, calling sink(SearchHit) once per emitted class.

    Emission order with thread_count=1 is DFS order, which is ascending
    lexicographic order of the code-strings; parallel runs merge subtree
    outputs in the same order, so the stream is identical either way.
    """
    start = perf_counter()
    if cfg.thread_count == 1:
        engine = _Engine(cfg)
        engine.sink = sink
        engine.rec(*engine.root_state())
        stats = engine.stats
    else:
        stats = _generate_parallel(cfg, sink)
    stats.wall_time = perf_counter() - start
    return stats


def resume(cfg: SearchConfig, prefix, sink) -> SearchStats:
    """Run only the subtree under a code prefix (for partitioned runs).

    The prefix must use codes from the rule set, fill a co-lex prefix of
    the slots, and pass the partial lex-max test at every depth; a prefix
    that fails is rejected with ValueError since its subtree would never
    be reached by a full run.  Unions of runs over a partition of prefixes
    reproduce the full output exactly.
    """
    start = perf_counter()
    if isinstance(prefix, Assignment):
        if prefix.n != cfg.n:
            raise ValueError(f"prefix is for n={prefix.n}, config wants n={cfg.n}")
        if not prefix.is_colex_prefix():
            raise ValueError("prefix assignment must fill a co-lex prefix of the slots")
        codes = bytes(prefix.codes[: prefix.assigned_count])
    elif isinstance(prefix, str):
        codes = bytes(int(ch) for ch in prefix.strip())
    else:
        codes = bytes(prefix)
    slots = comb(cfg.n, 3)
    if len(codes) > slots:
        raise ValueError(f"prefix has {len(codes)} codes but n={cfg.n} has {slots} slots")
    for c in codes:
        if c not in cfg.rules:
            raise ValueError(f"prefix code {c} is outside the rule set {cfg.rules}")
    for depth in range(1, len(codes) + 1):
        partial = Assignment(cfg.n, codes[:depth] + bytes(slots - depth))
        if not is_partially_lex_max(partial, cfg.rules):
            raise ValueError(
                f"prefix {partial.encode()[:depth]} fails the partial lex-max test at depth {depth}"
            )
    engine = _Engine(cfg)
    engine.sink = sink
    state = _seed(engine, codes)
    if state is not None:
        engine.rec(*state)
    stats = engine.stats
    stats.wall_time = perf_counter() - start
    return stats


def run_search(cfg: SearchConfig, prefix=None):
    """Convenience wrapper: collect hits into a list and return (hits, stats)."""
    hits: list[SearchHit] = []
    if prefix is None:
        stats = generate(cfg, hits.append)
    else:
        stats = resume(cfg, prefix, hits.append)
    return hits, stats
