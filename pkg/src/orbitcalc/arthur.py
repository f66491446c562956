"""Arthur parameters, their partitions and the Fourier-coefficient bound.

A parameter is a formal sum of simple factors ``(tau, b)`` where ``tau``
lives on ``GL_a``; only the label, ``a``, ``b`` and the symmetry of ``tau``
are modelled.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from enum import Enum

from .collapse import special_expansion
from .duality import bv_dual
from .errors import ParameterError, SizeError, UnsupportedGroupError
from .groups import GroupType, Kind, SO_even, SO_odd, Sp, check_size, parse_group, require_valid
from .partition import Ordering, Partition, dominance_leq, exponent, lex_cmp, make_partition


class Symmetry(Enum):
    ORTHOGONAL = "orthogonal"
    SYMPLECTIC = "symplectic"

    def opposite(self) -> "Symmetry":
        return Symmetry.SYMPLECTIC if self is Symmetry.ORTHOGONAL else Symmetry.ORTHOGONAL

    @classmethod
    def parse(cls, text: str) -> "Symmetry":
        text = text.strip().lower()
        for sym in cls:
            if sym.value.startswith(text) and len(text) >= 4:
                return sym
        raise ParameterError(f"unknown symmetry {text!r}; use orth/orthogonal or sympl/symplectic")


class Relation(Enum):
    BELOW = "below"
    EQUAL = "equal"
    ABOVE = "above"
    INCOMPARABLE = "incomparable"


@dataclass(frozen=True)
class SimpleFactor:
    label: str
    a: int
    b: int
    tau_symmetry: Symmetry

    @property
    def factor_type(self) -> Symmetry:
        """Symmetry of ``(tau, b)`` as a representation of the dual group."""
        return self.tau_symmetry if self.b % 2 else self.tau_symmetry.opposite()

    def __str__(self) -> str:
        sym = "orth" if self.tau_symmetry is Symmetry.ORTHOGONAL else "sympl"
        return f"{self.label}:a={self.a},{sym},b={self.b}"


@dataclass(frozen=True)
class ArthurParameter:
    group: GroupType
    factors: tuple[SimpleFactor, ...]

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))

    def __str__(self) -> str:
        return " + ".join(map(str, self.factors))

    def to_dict(self) -> dict:
        return {
            "group": self.group.tag(),
            "factors": [
                {"label": f.label, "a": f.a, "b": f.b, "symmetry": f.tau_symmetry.value} for f in self.factors
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "ArthurParameter":
        try:
            group = parse_group(data["group"])
            factors = tuple(
                SimpleFactor(str(f["label"]), int(f["a"]), int(f["b"]), Symmetry.parse(f["symmetry"]))
                for f in data["factors"]
            )
        except (KeyError, TypeError) as exc:
            raise ParameterError(f"malformed parameter JSON: {exc}") from None
        return cls(group, factors)

    @classmethod
    def from_json(cls, text: str) -> "ArthurParameter":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParameterError(f"parameter is not valid JSON: {exc}") from None
        return cls.from_dict(data)


_DUAL_SYMMETRY = {
    Kind.SP: Symmetry.ORTHOGONAL,
    Kind.SO_ODD: Symmetry.SYMPLECTIC,
    Kind.SO_EVEN: Symmetry.ORTHOGONAL,
}

_FACTOR = re.compile(r"^\s*([^:\s]+)\s*:\s*(.+?)\s*$")


def parse_parameter(text: str, group: GroupType) -> ArthurParameter:
    """Parse ``tau:a=3,orth,b=3 + tau2:a=2,sympl,b=1``."""
    factors = []
    for chunk in text.split("+"):
        m = _FACTOR.match(chunk)
        if not m:
            raise ParameterError(f"malformed factor {chunk.strip()!r}; expected label:a=..,orth|sympl,b=..")
        label, body = m.groups()
        fields: dict[str, str] = {}
        symmetry = None
        for item in body.split(","):
            key, eq, value = item.strip().partition("=")
            if eq:
                fields[key.strip()] = value.strip()
            else:
                symmetry = Symmetry.parse(key)
        try:
            a, b = int(fields["a"]), int(fields["b"])
        except (KeyError, ValueError):
            raise ParameterError(f"factor {chunk.strip()!r} needs integer a= and b=") from None
        if symmetry is None:
            raise ParameterError(f"factor {chunk.strip()!r} needs a symmetry (orth or sympl)")
        factors.append(SimpleFactor(label, a, b, symmetry))
    return ArthurParameter(group, tuple(factors))


def validate_parameter(psi: ArthurParameter) -> list[str]:
    """Every violated rule, one message per offence; empty means legal."""
    problems = []
    G = psi.group
    if G.kind not in _DUAL_SYMMETRY:
        return [f"group {G}: Arthur parameters are modelled for Sp, SOodd and SOeven only"]
    if not psi.factors:
        return ["parameter has no factors"]
    for f in psi.factors:
        if f.a < 1 or f.b < 1:
            problems.append(f"factor {f}: a and b must be positive")
    total = sum(f.a * f.b for f in psi.factors)
    if total != G.dual_partition_size:
        problems.append(f"sum of a*b is {total}, but {G} needs {G.dual_partition_size}")
    seen: set[tuple[str, int]] = set()
    for f in psi.factors:
        if (f.label, f.b) in seen:
            problems.append(f"factor {f}: pair (label={f.label}, b={f.b}) repeats")
        seen.add((f.label, f.b))
    wanted = _DUAL_SYMMETRY[G.kind]
    for f in psi.factors:
        if f.tau_symmetry is Symmetry.SYMPLECTIC and f.a % 2:
            problems.append(f"factor {f}: a symplectic tau needs even a")
        if f.factor_type is not wanted:
            problems.append(f"factor {f}: type {f.factor_type.value} but {G} requires {wanted.value}")
    return problems


def _require_legal(psi: ArthurParameter) -> None:
    problems = validate_parameter(psi)
    if problems:
        raise ParameterError("; ".join(problems))


def partition_of(psi: ArthurParameter) -> Partition:
    """``a`` copies of ``b`` for each factor."""
    _require_legal(psi)
    return make_partition([f.b for f in psi.factors for _ in range(f.a)])


def is_generic(psi: ArthurParameter) -> bool:
    _require_legal(psi)
    return all(f.b == 1 for f in psi.factors)


def fourier_bound(psi: ArthurParameter) -> Partition:
    return bv_dual(partition_of(psi), psi.group)


def check_bound(p: Partition, psi: ArthurParameter, order: str = "dominance") -> Relation:
    """Where ``p`` sits relative to the Fourier bound of ``psi``."""
    check_size(p, psi.group)
    require_valid(p, psi.group)
    bound = fourier_bound(psi)
    if order == "lexicographic":
        return {
            Ordering.LESS: Relation.BELOW,
            Ordering.EQUAL: Relation.EQUAL,
            Ordering.GREATER: Relation.ABOVE,
        }[lex_cmp(p, bound)]
    if order != "dominance":
        raise ValueError(f"unknown order {order!r}; use 'dominance' or 'lexicographic'")
    if p == bound:
        return Relation.EQUAL
    if dominance_leq(p, bound):
        return Relation.BELOW
    if dominance_leq(bound, p):
        return Relation.ABOVE
    return Relation.INCOMPARABLE


# -- closed-form families ---------------------------------------------------

def simple_type_legal(G: GroupType, a: int, b: int) -> bool:
    if a < 1 or b < 1 or a * b != G.dual_partition_size:
        return False
    if G.kind is Kind.SP:
        return a % 2 == 1 and b % 2 == 1
    if G.kind is Kind.SO_ODD:
        return True
    if G.kind is Kind.SO_EVEN:
        # even b forces a symplectic tau, hence even a
        return b % 2 == 1 or a % 2 == 0
    return False


def simple_type_parameter(G: GroupType, a: int, b: int, label: str = "tau") -> ArthurParameter:
    """The parameter ``(tau, b)`` with ``tau`` on ``GL_a`` of the forced symmetry."""
    wanted = _DUAL_SYMMETRY.get(G.kind)
    if wanted is None:
        raise UnsupportedGroupError(f"no simple-type parameters for {G}")
    sym = wanted if b % 2 else wanted.opposite()
    return ArthurParameter(G, (SimpleFactor(label, a, b, sym),))


def simple_type_eta(G: GroupType, a: int, b: int) -> Partition:
    """Closed form of the bound for a simple parameter ``(tau, b)``, ``tau`` on ``GL_a``."""
    if not simple_type_legal(G, a, b):
        raise ParameterError(f"(a={a}, b={b}) is not a legal simple parameter for {G}")
    if G.kind is Kind.SO_ODD:
        if b % 2 == 0 and a % 2 == 0:
            return exponent((a + 1, 1), (a, b - 2), (a - 1, 1), (1, 1))
        if b % 2 == 0:
            return exponent((a, b), (1, 1))
        return exponent((a + 1, 1), (a, b - 1))
    if G.kind is Kind.SO_EVEN:
        if b % 2 == 0:
            return exponent((a, b))
        return exponent((a, b - 1), (a - 1, 1), (1, 1))
    return exponent((a, b - 1), (a - 1, 1))


def _filler_factors(size: int, prefix: str = "tau") -> list[SimpleFactor]:
    # orthogonal b=1 factors of odd total size, each label distinct
    if size % 2 != 1:
        raise ParameterError(f"the b=1 part must have odd size, got {size}")
    return [SimpleFactor(f"{prefix}_{i}", 1, 1, Symmetry.ORTHOGONAL) for i in range(size)]


def case_I_parameter(a: int, b: int, m: int) -> ArthurParameter:
    """``(tau, 2b+1)`` plus generic orthogonal factors of total size ``2m+1-a``."""
    if not (1 <= a <= 2 * m + 1 and b >= 1):
        raise ParameterError(f"case I needs 1 <= a <= 2m+1 and b >= 1, got a={a}, b={b}, m={m}")
    rest = 2 * m + 1 - a
    factors = [SimpleFactor("tau", a, 2 * b + 1, Symmetry.ORTHOGONAL)]
    factors += [SimpleFactor(f"tau_{i}", 1, 1, Symmetry.ORTHOGONAL) for i in range(rest)]
    return ArthurParameter(Sp(a * b + m), tuple(factors))


def case_I_eta(a: int, b: int, m: int) -> Partition:
    if not (1 <= a <= 2 * m + 1 and b >= 1):
        raise ParameterError(f"case I needs 1 <= a <= 2m+1 and b >= 1, got a={a}, b={b}, m={m}")
    if a == 2 * m + 1:
        return exponent((a, 2 * b), (2 * m, 1))
    if a % 2 == 0:
        return exponent((2 * m, 1), (a, 2 * b))
    return exponent((2 * m, 1), (a + 1, 1), (a, 2 * b - 2), (a - 1, 1))


def case_III_parameter(k: int, b: int, m: int) -> ArthurParameter:
    """``(tau, 2b)`` with symplectic ``tau`` on ``GL_2k`` plus ``2m+1`` generic boxes."""
    if k < 1 or b < 1 or m < 0:
        raise ParameterError(f"case III needs k, b >= 1 and m >= 0, got k={k}, b={b}, m={m}")
    factors = [SimpleFactor("tau", 2 * k, 2 * b, Symmetry.SYMPLECTIC)]
    factors += _filler_factors(2 * m + 1)
    return ArthurParameter(Sp(2 * k * b + m), tuple(factors))


def case_III_eta(k: int, b: int, m: int) -> Partition:
    if k < 1 or b < 1 or m < 0:
        raise ParameterError(f"case III needs k, b >= 1 and m >= 0, got k={k}, b={b}, m={m}")
    return exponent((2 * k + 2 * m, 1), (2 * k, 2 * b - 1))


def generic_parameter(G: GroupType) -> ArthurParameter:
    """All ``b = 1``: one factor per box of the dual-group partition."""
    wanted = _DUAL_SYMMETRY.get(G.kind)
    if wanted is None:
        raise UnsupportedGroupError(f"no Arthur parameters are modelled for {G}")
    size = G.dual_partition_size
    # symplectic cuspidal data needs GL_a with a even
    a = 2 if wanted is Symmetry.SYMPLECTIC else 1
    return ArthurParameter(G, tuple(SimpleFactor(f"tau_{i}", a, 1, wanted) for i in range(size // a)))


# -- non-singular partitions ------------------------------------------------

def nonsingular_partition(G: GroupType) -> Partition:
    """Partition of the non-singular Fourier coefficients."""
    n = G.n
    if G.kind is Kind.SP:
        return exponent((2, n))
    if G.kind is Kind.SO_ODD:
        e, r = divmod(n, 2)
        return exponent((2, 2 * e), (1, 1 if r == 0 else 3))
    if G.kind is Kind.SO_EVEN:
        e, r = divmod(n, 2)
        return exponent((2, 2 * e), (1, 0 if r == 0 else 2))
    raise UnsupportedGroupError(f"no non-singular partition is modelled for {G}")


def nonsingular_bound(G: GroupType) -> Partition:
    """Special expansion of the non-singular partition: a lower bound for cuspidal data."""
    p = nonsingular_partition(G)
    if p.size != G.partition_size:
        raise SizeError(f"{G} is too small for a non-singular partition")
    return special_expansion(p, G)
