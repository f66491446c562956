"""Integer partitions: canonical datatype, orders, transpose and row arithmetic."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import accumulate, zip_longest
from typing import Iterable, Iterator, Sequence

from .errors import CapError, SizeError

ENUMERATION_CAP = 40


class Ordering(Enum):
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"


@dataclass(frozen=True)
class Partition:
    """A non-increasing tuple of positive integers.

    Build values through :func:`make_partition` (or ``Partition.of``) unless
    the parts are already canonical; the constructor only checks.
    """

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        if any(x <= 0 for x in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"partition parts must be non-increasing: {parts}")

    @classmethod
    def of(cls, *parts: int) -> "Partition":
        return make_partition(parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))

    def __repr__(self) -> str:
        return f"Partition({list(self.parts)})"

    def multiplicity(self, part: int) -> int:
        return self.parts.count(part)

    def multiplicities(self) -> dict[int, int]:
        counts: dict[int, int] = {}
        for x in self.parts:
            counts[x] = counts.get(x, 0) + 1
        return counts

    def prefix_sums(self) -> list[int]:
        return list(accumulate(self.parts))

    def transpose(self) -> "Partition":
        return transpose(self)


def make_partition(raw: Iterable[int]) -> Partition:
    """Normalize a list of non-negative integers: drop zeros, sort descending."""
    raw = list(raw)
    for x in raw:
        if not isinstance(x, int) or isinstance(x, bool):
            raise TypeError(f"partition entries must be integers, got {x!r}")
        if x < 0:
            raise ValueError(f"negative partition entry: {x}")
    return Partition(tuple(sorted((x for x in raw if x), reverse=True)))


def exponent(*pairs: tuple[int, int]) -> Partition:
    """``exponent((3, 2), (1, 4))`` is ``[3^2 1^4]``."""
    return make_partition([x for x, k in pairs for _ in range(k)])


def transpose(p: Partition) -> Partition:
    if not p.parts:
        return p
    return Partition(tuple(sum(1 for x in p.parts if x >= j) for j in range(1, p.parts[0] + 1)))


def _check_same_size(p: Partition, q: Partition) -> None:
    if p.size != q.size:
        raise SizeError(f"partitions have different sizes: {p.size} ({p}) vs {q.size} ({q})")


def dominance_leq(p: Partition, q: Partition) -> bool:
    """True iff every prefix sum of ``p`` is at most the matching one of ``q``."""
    _check_same_size(p, q)
    sp = sq = 0
    for a, b in zip_longest(p.parts, q.parts, fillvalue=0):
        sp += a
        sq += b
        if sp > sq:
            return False
    return True


def lex_cmp(p: Partition, q: Partition) -> Ordering:
    _check_same_size(p, q)
    for a, b in zip_longest(p.parts, q.parts, fillvalue=0):
        if a != b:
            return Ordering.GREATER if a > b else Ordering.LESS
    return Ordering.EQUAL


def add_rowwise(ps: Sequence[Partition]) -> Partition:
    rows: list[int] = []
    for p in ps:
        for i, x in enumerate(p.parts):
            if i < len(rows):
                rows[i] += x
            else:
                rows.append(x)
    return Partition(tuple(rows))


def decrement_smallest(q: Partition) -> Partition:
    if not q.parts:
        raise SizeError("cannot decrement the smallest part of the empty partition")
    return make_partition(q.parts[:-1] + (q.parts[-1] - 1,))


def increment_largest(q: Partition) -> Partition:
    if not q.parts:
        return Partition((1,))
    return Partition((q.parts[0] + 1,) + q.parts[1:])


def enumerate_partitions(n: int, cap: int = ENUMERATION_CAP) -> list[Partition]:
    """All partitions of ``n`` in descending lexicographic order."""
    if n < 0:
        raise ValueError(f"cannot enumerate partitions of a negative number: {n}")
    if n > cap:
        raise CapError(f"enumeration of partitions of {n} exceeds the cap {cap}")
    return list(_partitions(n))


@lru_cache(maxsize=None)
def _partitions(n: int) -> tuple[Partition, ...]:
    return tuple(Partition(parts) for parts in _gen(n, n))


def _gen(n: int, largest: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for head in range(min(n, largest), 0, -1):
        for tail in _gen(n - head, head):
            yield (head,) + tail


def parse_partition(text: str) -> Partition:
    """Parse ``3,3,2`` or exponent sugar ``3^2,2``; empty text is the empty partition."""
    text = text.strip()
    if text in ("", "[]", "-"):
        return Partition()
    raw: list[int] = []
    for token in text.split(","):
        token = token.strip()
        if not token:
            raise ValueError(f"empty entry in partition {text!r}")
        base, _, count = token.partition("^")
        try:
            value = int(base)
            k = int(count) if count else 1
        except ValueError:
            raise ValueError(f"malformed partition entry {token!r}") from None
        if k < 0:
            raise ValueError(f"negative exponent in {token!r}")
        raw.extend([value] * k)
    return make_partition(raw)
