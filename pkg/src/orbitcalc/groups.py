"""Classical group tags, parity validity and specialness of partitions."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import ParityError, SizeError, UnsupportedGroupError
from .partition import Partition, transpose


class Kind(Enum):
    SO_ODD = "SOodd"
    SP = "Sp"
    SO_EVEN = "SOeven"
    METAPLECTIC = "Mp"
    TYPE_A = "A"


@dataclass(frozen=True)
class GroupType:
    """A classical group: ``n`` is the rank, except for type A where it is N."""

    kind: Kind
    n: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"negative rank: {self.n}")

    @property
    def partition_size(self) -> int:
        if self.kind is Kind.SO_ODD:
            return 2 * self.n + 1
        if self.kind is Kind.TYPE_A:
            return self.n
        return 2 * self.n

    @property
    def dual_partition_size(self) -> int:
        if self.kind is Kind.SP:
            return 2 * self.n + 1
        if self.kind is Kind.SO_ODD:
            return 2 * self.n
        if self.kind is Kind.METAPLECTIC:
            raise UnsupportedGroupError("the metaplectic group has no duality recipe")
        return self.partition_size

    @property
    def symmetry(self) -> str | None:
        """'symplectic', 'orthogonal' or None for type A."""
        if self.kind in (Kind.SP, Kind.METAPLECTIC):
            return "symplectic"
        if self.kind in (Kind.SO_ODD, Kind.SO_EVEN):
            return "orthogonal"
        return None

    def tag(self) -> str:
        return f"{self.kind.value}:{self.partition_size}"

    def __str__(self) -> str:
        return self.tag()


def Sp(n: int) -> GroupType:
    return GroupType(Kind.SP, n)


def SO_odd(n: int) -> GroupType:
    return GroupType(Kind.SO_ODD, n)


def SO_even(n: int) -> GroupType:
    return GroupType(Kind.SO_EVEN, n)


def Mp(n: int) -> GroupType:
    return GroupType(Kind.METAPLECTIC, n)


def TypeA(N: int) -> GroupType:
    return GroupType(Kind.TYPE_A, N)


def group_for_size(kind: Kind, size: int) -> GroupType:
    """The group of the given kind whose partitions have ``size`` boxes."""
    if kind is Kind.TYPE_A:
        return GroupType(kind, size)
    if kind is Kind.SO_ODD:
        if size % 2 != 1:
            raise SizeError(f"{kind.value} needs an odd partition size, got {size}")
        return GroupType(kind, (size - 1) // 2)
    if size % 2 != 0:
        raise SizeError(f"{kind.value} needs an even partition size, got {size}")
    return GroupType(kind, size // 2)


def parse_group(text: str) -> GroupType:
    """Parse ``Sp:8``, ``SOodd:9``, ``SOeven:8``, ``Mp:8`` or ``A:5``."""
    name, sep, size = text.partition(":")
    lookup = {k.value.lower(): k for k in Kind}
    kind = lookup.get(name.strip().lower())
    if not sep or kind is None:
        raise ValueError(f"unknown group tag {text!r}; expected one of Sp:, SOodd:, SOeven:, Mp:, A:")
    try:
        size_value = int(size)
    except ValueError:
        raise ValueError(f"group tag {text!r} needs an integer partition size") from None
    if size_value < 0:
        raise ValueError(f"negative partition size in {text!r}")
    return group_for_size(kind, size_value)


# parity predicates on raw partitions; ``symplectic`` means odd parts come in pairs

def has_symplectic_parity(p: Partition) -> bool:
    return all(k % 2 == 0 for x, k in p.multiplicities().items() if x % 2 == 1)


def has_orthogonal_parity(p: Partition) -> bool:
    return all(k % 2 == 0 for x, k in p.multiplicities().items() if x % 2 == 0)


def check_size(p: Partition, G: GroupType) -> None:
    if p.size != G.partition_size:
        raise SizeError(f"{G} needs a partition of {G.partition_size}, got {p} of size {p.size}")


def is_valid(p: Partition, G: GroupType) -> bool:
    check_size(p, G)
    return _valid(p, G)


def _valid(p: Partition, G: GroupType) -> bool:
    if G.kind in (Kind.SP, Kind.METAPLECTIC):
        return has_symplectic_parity(p)
    if G.kind in (Kind.SO_ODD, Kind.SO_EVEN):
        return has_orthogonal_parity(p)
    return True


def require_valid(p: Partition, G: GroupType) -> None:
    if not is_valid(p, G):
        raise ParityError(f"{p} is not a {G.symmetry} partition for {G}")


def is_special(p: Partition, G: GroupType) -> bool:
    """Lusztig specialness, read off the transpose.

    Sp and SO_even: the transpose has symplectic parity; SO_odd: the
    transpose has orthogonal parity.  For the metaplectic group this is the
    metaplectic-special predicate.
    """
    require_valid(p, G)
    return _special(p, G)


def _special(p: Partition, G: GroupType) -> bool:
    if G.kind in (Kind.SP, Kind.SO_EVEN):
        return has_symplectic_parity(transpose(p))
    if G.kind is Kind.SO_ODD:
        return has_orthogonal_parity(transpose(p))
    if G.kind is Kind.METAPLECTIC:
        return _metaplectic_special(p)
    return True


def is_metaplectic_special(p: Partition) -> bool:
    """Odd number of even parts (with multiplicity) above the largest odd part."""
    if not has_symplectic_parity(p):
        raise ParityError(f"{p} is not a symplectic partition")
    return _metaplectic_special(p)


def _metaplectic_special(p: Partition) -> bool:
    top_odd = max((x for x in p.parts if x % 2 == 1), default=0)
    return sum(1 for x in p.parts if x % 2 == 0 and x > top_odd) % 2 == 1


def principal_partition(G: GroupType) -> Partition:
    """Partition of the regular nilpotent orbit."""
    if G.kind is Kind.METAPLECTIC:
        raise UnsupportedGroupError("no principal partition is modelled for the metaplectic group")
    size = G.partition_size
    if G.kind is Kind.SO_EVEN and size >= 2:
        return Partition((size - 1, 1))
    return Partition((size,)) if size else Partition()
