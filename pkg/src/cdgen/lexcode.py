"""Assignments of never conditions to triples, encoded as code strings.

An assignment over 1..n is a string of C(n,3) digits, one per triple in
co-lex order; digit 0 means the slot is unassigned, digits 1..6 are the
condition codes from :mod:`cdgen.core`.  Lexicographic comparison of two
assignments reads the digit strings left to right.  Comparisons are only
meaningful between assignments over the same n and the same allowed rule
set; the class enforces the first and leaves the second to callers.
"""

from __future__ import annotations

from math import comb
from typing import Iterable, Iterator

from . import core

LESS, EQUAL, GREATER = -1, 0, 1

_NUM_SLOTS = {}  # n -> C(n,3)
_N_FOR_LEN = {}  # C(n,3) -> n


def num_slots(n: int) -> int:
    if n not in _NUM_SLOTS:
        if n < 3:
            raise ValueError(f"need at least 3 alternatives, got n={n}")
        _NUM_SLOTS[n] = comb(n, 3)
        _N_FOR_LEN[_NUM_SLOTS[n]] = n
    return _NUM_SLOTS[n]


def n_for_length(length: int) -> int:
    """The n with C(n,3) == length, or raise."""
    n = 3
    while comb(n, 3) < length:
        n += 1
    if comb(n, 3) != length:
        raise ValueError(f"{length} is not C(n,3) for any n")
    return n


class Assignment:
    """An immutable (possibly partial) assignment of conditions to triples."""

    __slots__ = ("n", "codes")

    def __init__(self, n: int, codes: bytes):
        if len(codes) != num_slots(n):
            raise ValueError(f"expected {num_slots(n)} slots for n={n}, got {len(codes)}")
        if any(c > 6 for c in codes):
            raise ValueError("code digits must be 0..6")
        self.n = n
        self.codes = bytes(codes)

    @classmethod
    def empty(cls, n: int) -> "Assignment":
        return cls(n, bytes(num_slots(n)))

    @classmethod
    def from_string(cls, digits: str, n: int | None = None) -> "Assignment":
        if n is None:
            n = n_for_length(len(digits))
        return cls(n, bytes(int(ch) for ch in digits))

    @classmethod
    def from_dict(cls, n: int, conditions: dict) -> "Assignment":
        """Build from {triple: code} with every other slot unassigned."""
        codes = bytearray(num_slots(n))
        for t, code in conditions.items():
            if code not in core.CONDITION_PAIRS:
                raise ValueError(f"invalid condition code {code!r}")
            codes[core.triple_index(t, n)] = code
        return cls(n, bytes(codes))

    def encode(self) -> str:
        return "".join(str(c) for c in self.codes)

    def __repr__(self) -> str:
        return f"Assignment(n={self.n}, {self.encode()!r})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Assignment) and self.n == other.n and self.codes == other.codes

    def __hash__(self) -> int:
        return hash((self.n, self.codes))

    def __lt__(self, other: "Assignment") -> bool:
        return lex_compare(self, other) == LESS

    def __le__(self, other: "Assignment") -> bool:
        return lex_compare(self, other) != GREATER

    def slot(self, t) -> int:
        return self.codes[core.triple_index(t, self.n)]

    def with_slot(self, k: int, code: int) -> "Assignment":
        codes = bytearray(self.codes)
        codes[k] = code
        return Assignment(self.n, bytes(codes))

    @property
    def assigned_count(self) -> int:
        return len(self.codes) - self.codes.count(0)

    @property
    def is_complete(self) -> bool:
        return 0 not in self.codes

    def assigned_slots(self) -> list[int]:
        return [k for k, c in enumerate(self.codes) if c]

    def is_colex_prefix(self) -> bool:
        """True iff the assigned slots are exactly 0..k-1 for some k."""
        k = self.assigned_count
        return 0 not in self.codes[:k]

    def support(self) -> frozenset[int]:
        """Alternatives appearing in at least one assigned triple."""
        alts = set()
        for k, c in enumerate(self.codes):
            if c:
                alts.update(core.triple_at(k, self.n))
        return frozenset(alts)

    def items(self) -> Iterator[tuple[tuple[int, int, int], int]]:
        """Assigned (triple, code) pairs in co-lex order."""
        for k, c in enumerate(self.codes):
            if c:
                yield core.triple_at(k, self.n), c


def lex_compare(a: Assignment, b: Assignment) -> int:
    """LESS/EQUAL/GREATER comparison of code strings, left to right."""
    if a.n != b.n:
        raise ValueError(f"assignments over different n: {a.n} vs {b.n}")
    if a.codes < b.codes:
        return LESS
    if a.codes > b.codes:
        return GREATER
    return EQUAL


# ---------------------------------------------------------------------------
# Conditions file format: a header line followed by one code string per line.

CODE_LEGEND = ",".join(f"{core.CONDITION_NAMES[c]}:{c}" for c in core.ALL_CONDITIONS)


def header_line(n: int, rules: tuple[int, ...]) -> str:
    return f"# n={n} rules={core.rules_token(rules)} order=colex codes={CODE_LEGEND}"


def parse_header(line: str) -> tuple[int, tuple[int, ...]]:
    if not line.startswith("#"):
        raise ValueError("conditions file must start with a '#' header line")
    fields = dict(part.split("=", 1) for part in line[1:].split() if "=" in part)
    for key in ("n", "rules", "order", "codes"):
        if key not in fields:
            raise ValueError(f"header is missing the {key}= field")
    if fields["order"] != "colex":
        raise ValueError(f"unsupported triple order {fields['order']!r}")
    if fields["codes"] != CODE_LEGEND:
        raise ValueError("header code table does not match this package's code table")
    return int(fields["n"]), core.parse_rules(fields["rules"])


def write_assignments(fh, n: int, rules: tuple[int, ...], assignments: Iterable[Assignment]) -> int:
    """Write header plus one code string per line; returns the line count."""
    fh.write(header_line(n, rules) + "\n")
    count = 0
    for a in assignments:
        if a.n != n:
            raise ValueError(f"assignment over n={a.n} in a file for n={n}")
        fh.write(a.encode() + "\n")
        count += 1
    return count


def read_assignments(fh) -> tuple[int, tuple[int, ...], list[Assignment]]:
    header = fh.readline().rstrip("\n")
    n, rules = parse_header(header)
    out = []
    for lineno, line in enumerate(fh, start=2):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if len(line) != num_slots(n):
            raise ValueError(f"line {lineno}: expected {num_slots(n)} digits, got {len(line)}")
        out.append(Assignment.from_string(line, n))
    return n, rules, out
