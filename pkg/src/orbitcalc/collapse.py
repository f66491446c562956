"""Collapses and expansions of partitions, and the brute-force lattice oracle.

The brute-force extremum over all partitions of a size is the normative
definition of every operation here.  The public operations use faster
routes (greedy box moves, transposes, Lusztig-Spaltenstein duality) that
:func:`run_oracle_suite` certifies against it.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Callable

import numpy as np

from .errors import CapError, InvariantError, ParityError, SizeError, UnsupportedGroupError
from .groups import (
    GroupType,
    Kind,
    Mp,
    SO_even,
    SO_odd,
    Sp,
    TypeA,
    _metaplectic_special,
    _special,
    _valid,
    check_size,
    has_symplectic_parity,
    require_valid,
)
from .partition import ENUMERATION_CAP, Partition, dominance_leq, enumerate_partitions, transpose


class Predicate(Enum):
    VALID = "valid"
    SPECIAL = "special"
    METAPLECTIC_SPECIAL = "metaplectic_special"


class Direction(Enum):
    MAX_BELOW = "max_below"
    MIN_ABOVE = "min_above"


# -- greedy parity collapse ---------------------------------------------------

def _bad_parity(G: GroupType) -> int | None:
    """Parity of the parts that must occur with even multiplicity."""
    if G.kind in (Kind.SP, Kind.METAPLECTIC):
        return 1
    if G.kind in (Kind.SO_ODD, Kind.SO_EVEN):
        return 0
    return None


def _greedy_collapse(parts: list[int], bad: int) -> list[int]:
    # Move one box from the last row of the largest offending length q down to
    # the first row shorter than q - 1, until no offender is left.
    parts = list(parts)
    while True:
        counts: dict[int, int] = {}
        for x in parts:
            counts[x] = counts.get(x, 0) + 1
        offenders = [x for x, k in counts.items() if x % 2 == bad and k % 2 == 1]
        if not offenders:
            return parts
        q = max(offenders)
        last = max(i for i, x in enumerate(parts) if x == q)
        parts[last] -= 1
        parts.append(0)
        j = next(i for i in range(last + 1, len(parts)) if parts[i] < q - 1)
        parts[j] += 1
        parts = [x for x in parts if x]


def parity_collapse(p: Partition, G: GroupType) -> Partition:
    """Largest ``G``-valid partition dominated by ``p``."""
    check_size(p, G)
    bad = _bad_parity(G)
    if bad is None:
        return p
    return Partition(tuple(_greedy_collapse(list(p.parts), bad)))


def ls_dual(p: Partition, G: GroupType) -> Partition:
    """Same-type (Lusztig-Spaltenstein) duality: collapse of the transpose."""
    if G.kind is Kind.METAPLECTIC:
        raise UnsupportedGroupError("no same-type duality is modelled for the metaplectic group")
    require_valid(p, G)
    return parity_collapse(transpose(p), G)


# -- special collapse / expansion ---------------------------------------------

def special_expansion(p: Partition, G: GroupType) -> Partition:
    """Smallest special ``G``-partition dominating the ``G``-partition ``p``."""
    if G.kind is Kind.METAPLECTIC:
        return metaplectic_expansion(p)
    require_valid(p, G)
    if G.kind is Kind.TYPE_A:
        return p
    return ls_dual(ls_dual(p, G), G)


def special_collapse(p: Partition, G: GroupType) -> Partition:
    """Largest special ``G``-partition dominated by ``p``.

    Raises :class:`InvariantError` when the maximum is not unique; use
    :func:`maximal_specials_below` to get all maximal candidates.
    """
    found = maximal_specials_below(p, G)
    if len(found) != 1:
        raise InvariantError(
            f"special collapse of {p} for {G} is not unique: " + "; ".join(map(str, found))
        )
    return found[0]


def maximal_specials_below(p: Partition, G: GroupType) -> list[Partition]:
    """All maximal special ``G``-partitions dominated by ``p``, lex-descending.

    Walks down from the parity collapse by single box moves and stops each
    branch at the first special partition it meets.
    """
    if G.kind is Kind.METAPLECTIC:
        raise UnsupportedGroupError("special collapse is not modelled for the metaplectic group")
    top = parity_collapse(p, G)
    if G.kind is Kind.TYPE_A:
        return [top]
    hits = _search(top, lambda q: _valid(q, G) and _special(q, G), _moves_down)
    return _extremal(hits, lambda a, b: dominance_leq(a, b), descending=True)


def metaplectic_expansion(p: Partition) -> Partition:
    """Smallest metaplectic-special symplectic partition dominating ``p``."""
    if not has_symplectic_parity(p):
        raise ParityError(f"{p} is not a symplectic partition")
    hits = _search(p, lambda q: has_symplectic_parity(q) and _metaplectic_special(q), _moves_up)
    if not hits:
        raise SizeError(f"no metaplectic-special partition of {p.size} exists")
    found = _extremal(hits, lambda a, b: dominance_leq(b, a), descending=False)
    if len(found) != 1:
        raise InvariantError(
            f"metaplectic expansion of {p} is not unique: " + "; ".join(map(str, found))
        )
    return found[0]


def _move(rows: tuple[int, ...], src: int, dst: int) -> tuple[int, ...] | None:
    new = list(rows)
    new[src] -= 1
    new[dst] += 1
    if any(new[k] < new[k + 1] for k in range(len(new) - 1)):
        return None
    return tuple(x for x in new if x)


def _moves_down(parts: tuple[int, ...]) -> set[tuple[int, ...]]:
    # one box from row i to a lower row j, possibly a new row
    rows = parts + (0,)
    moved = (_move(rows, i, j) for i in range(len(parts)) for j in range(i + 1, len(rows)))
    return {m for m in moved if m is not None and m != parts}


def _moves_up(parts: tuple[int, ...]) -> set[tuple[int, ...]]:
    moved = (_move(parts, j, i) for j in range(len(parts)) for i in range(j))
    return {m for m in moved if m is not None and m != parts}


def _search(start: Partition, hit, moves) -> list[Partition]:
    seen = {start.parts}
    frontier = [start.parts]
    hits = []
    while frontier:
        nxt = []
        for parts in frontier:
            q = Partition(parts)
            if hit(q):
                hits.append(q)
                continue
            for r in moves(parts):
                if r not in seen:
                    seen.add(r)
                    nxt.append(r)
        frontier = nxt
    return hits


def _extremal(items: list[Partition], below, descending: bool) -> list[Partition]:
    # ``below(a, b)``: a is beaten by b.  In lex order an element can only be
    # beaten by an earlier one, and then by an earlier extremal one.
    ordered = sorted(set(items), key=lambda q: q.parts, reverse=descending)
    best: list[Partition] = []
    for q in ordered:
        if not any(below(q, r) for r in best):
            best.append(q)
    return best


# -- brute force --------------------------------------------------------------

def _predicate(G: GroupType, predicate: Predicate) -> Callable[[Partition], bool]:
    if predicate is Predicate.VALID:
        return lambda q: _valid(q, G)
    if predicate is Predicate.SPECIAL:
        return lambda q: _valid(q, G) and _special(q, G)
    return lambda q: has_symplectic_parity(q) and _metaplectic_special(q)


def brute_extremum(
    p: Partition,
    G: GroupType,
    predicate: Predicate | str,
    direction: Direction | str,
    cap: int = ENUMERATION_CAP,
) -> tuple[Partition, bool]:
    """Extremal partition satisfying ``predicate`` on one side of ``p``.

    Returns the lexicographically largest extremal element and whether it
    is the only one.
    """
    extrema = brute_extrema(p, G, predicate, direction, cap)
    return extrema[0], len(extrema) == 1


def brute_extrema(
    p: Partition,
    G: GroupType,
    predicate: Predicate | str,
    direction: Direction | str,
    cap: int = ENUMERATION_CAP,
) -> list[Partition]:
    """Every extremal element, found by enumerating all partitions of ``|p|``."""
    predicate = Predicate(predicate)
    direction = Direction(direction)
    check_size(p, G)
    parts, prefix = _lattice(p.size, cap)
    test = _predicate(G, predicate)
    mask = np.fromiter((test(q) for q in parts), dtype=bool, count=len(parts))
    k = parts.index(p)
    if direction is Direction.MAX_BELOW:
        side = np.all(prefix <= prefix[k], axis=1)
    else:
        side = np.all(prefix >= prefix[k], axis=1)
    cand = np.flatnonzero(mask & side)
    if cand.size == 0:
        raise SizeError(f"no {predicate.value} partition lies {direction.value.replace('_', ' ')} {p} for {G}")
    sub = prefix[cand]
    extrema = []
    for row, i in zip(sub, cand):
        if direction is Direction.MAX_BELOW:
            beaten = np.all(row <= sub, axis=1)
        else:
            beaten = np.all(row >= sub, axis=1)
        # ``row`` beats itself exactly once
        if beaten.sum() == 1:
            extrema.append(parts[i])
    return extrema


@lru_cache(maxsize=64)
def _lattice(n: int, cap: int) -> tuple[list[Partition], np.ndarray]:
    parts = enumerate_partitions(n, cap)
    prefix = np.zeros((len(parts), max(n, 1)), dtype=np.int16)
    for i, q in enumerate(parts):
        sums = q.prefix_sums()
        prefix[i, : len(sums)] = sums
        prefix[i, len(sums):] = n
    return parts, prefix


# -- oracle suite -------------------------------------------------------------

ORACLE_TARGET = "parity_collapse,special_collapse,special_expansion,metaplectic_expansion"


@dataclass
class OracleReport:
    """Outcome of comparing the fast operations with :func:`brute_extrema`.

    Counterexample entries are ``[input, fast_result, oracle_result]``; the
    input is ``"<operation> <group> <partition>"`` and the oracle result lists
    every extremum.  ``agree`` is derived, never set by hand.
    """

    target: str
    sizes_checked: list[int] = field(default_factory=list)
    counterexamples: list[list] = field(default_factory=list)
    uniqueness_failures: list[str] = field(default_factory=list)

    @property
    def agree(self) -> bool:
        return not self.counterexamples and not self.uniqueness_failures

    def to_dict(self) -> dict:
        return {
            "target": self.target,
            "sizes_checked": list(self.sizes_checked),
            "agree": self.agree,
            "counterexamples": [list(c) for c in self.counterexamples],
            "uniqueness_failures": list(self.uniqueness_failures),
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)

    @classmethod
    def from_dict(cls, data: dict) -> "OracleReport":
        report = cls(
            target=data["target"],
            sizes_checked=list(data["sizes_checked"]),
            counterexamples=[list(c) for c in data["counterexamples"]],
            uniqueness_failures=list(data["uniqueness_failures"]),
        )
        if "agree" in data and data["agree"] != report.agree:
            raise ValueError("inconsistent report: 'agree' does not match its failure lists")
        return report

    @classmethod
    def from_json(cls, text: str) -> "OracleReport":
        return cls.from_dict(json.loads(text))

    def merge(self, other: "OracleReport") -> None:
        self.sizes_checked = sorted(set(self.sizes_checked) | set(other.sizes_checked))
        self.counterexamples.extend(other.counterexamples)
        self.uniqueness_failures.extend(other.uniqueness_failures)


def groups_of_size(n: int) -> list[GroupType]:
    """Every modelled group whose partitions have ``n`` boxes."""
    if n % 2:
        return [SO_odd(n // 2), TypeA(n)]
    return [Sp(n // 2), SO_even(n // 2), Mp(n // 2), TypeA(n)]


def _fast_extrema(op: str, p: Partition, G: GroupType) -> list[Partition]:
    # the set of extrema as seen by the fast route; a single element when the
    # operation itself succeeds
    if op == "special_collapse":
        return maximal_specials_below(p, G)
    try:
        if op == "parity_collapse":
            return [parity_collapse(p, G)]
        if op == "special_expansion":
            return [special_expansion(p, G)]
        return [metaplectic_expansion(p)]
    except InvariantError as exc:
        return [Partition(tuple(map(int, s.split(",")))) for s in str(exc).split(": ", 1)[1].split("; ")]


def _or_none(fn, *args):
    # an empty extremum set is a finding to report, not a crash
    try:
        return fn(*args)
    except SizeError:
        return []


_CHECKS = {
    # operation: (predicate, direction, needs a valid input)
    "parity_collapse": (Predicate.VALID, Direction.MAX_BELOW, False),
    "special_collapse": (Predicate.SPECIAL, Direction.MAX_BELOW, False),
    "special_expansion": (Predicate.SPECIAL, Direction.MIN_ABOVE, True),
    "metaplectic_expansion": (Predicate.METAPLECTIC_SPECIAL, Direction.MIN_ABOVE, True),
}


def _operations_for(G: GroupType) -> list[str]:
    if G.kind is Kind.METAPLECTIC:
        return ["metaplectic_expansion"] if G.n > 0 else []
    return ["parity_collapse", "special_collapse", "special_expansion"]


def check_size_against_oracle(n: int, cap: int = ENUMERATION_CAP) -> OracleReport:
    report = OracleReport(ORACLE_TARGET, [n])
    for G in groups_of_size(n):
        for op in _operations_for(G):
            predicate, direction, needs_valid = _CHECKS[op]
            for p in enumerate_partitions(n, cap):
                if needs_valid and not _valid(p, G):
                    continue
                oracle = _or_none(brute_extrema, p, G, predicate, direction, cap)
                fast = _or_none(_fast_extrema, op, p, G)
                label = f"{op} {G} {p}"
                if set(fast) != set(oracle):
                    report.counterexamples.append(
                        [label, ";".join(map(str, fast)), [str(q) for q in oracle]]
                    )
                if len(oracle) != 1:
                    report.uniqueness_failures.append(label)
    return report


def run_oracle_suite(max_size: int, cap: int = ENUMERATION_CAP) -> OracleReport:
    """Compare every collapse and expansion with the brute-force oracle.

    Collapses are checked on every partition of each size, expansions on
    the valid ones.  Failures are reported, not raised.
    """
    if max_size > cap:
        raise CapError(f"oracle size {max_size} exceeds the enumeration cap {cap}")
    report = OracleReport(ORACLE_TARGET, [])
    for n in range(max_size + 1):
        report.merge(check_size_against_oracle(n, cap))
    return report
