"""Barbasch-Vogan duality from dual-group partitions to ``G``-partitions."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .collapse import ls_dual, parity_collapse
from .errors import InvariantError, ParityError, SizeError, UnsupportedGroupError
from .groups import (
    GroupType,
    Kind,
    _special,
    _valid,
    has_orthogonal_parity,
    has_symplectic_parity,
)
from .partition import Partition, decrement_smallest, increment_largest, transpose

__all__ = ["DualityRecipe", "DualityTrace", "bv_dual", "bv_dual_trace", "ls_dual", "recipe_for"]


class SizeAdjust(Enum):
    DECREMENT_SMALLEST = "decrement_smallest"
    INCREMENT_LARGEST = "increment_largest"
    NONE = "none"


class TransposePosition(Enum):
    AFTER_COLLAPSE = "after_collapse"
    BEFORE_COLLAPSE = "before_collapse"


@dataclass(frozen=True)
class DualityRecipe:
    group: GroupType
    size_adjust: SizeAdjust
    collapse_type: GroupType
    transpose_position: TransposePosition


@dataclass(frozen=True)
class DualityTrace:
    """Intermediate stages of one duality computation, for auditing."""

    recipe: DualityRecipe
    input: Partition
    adjusted: Partition
    collapsed: Partition
    result: Partition

    def to_dict(self) -> dict:
        return {
            "group": self.recipe.group.tag(),
            "input": list(self.input),
            "recipe": {
                "size_adjust": self.recipe.size_adjust.value,
                "collapse_type": self.recipe.collapse_type.tag(),
                "transpose_position": self.recipe.transpose_position.value,
            },
            "adjusted": list(self.adjusted),
            "collapsed": list(self.collapsed),
            "output": list(self.result),
        }


def recipe_for(G: GroupType) -> DualityRecipe:
    if G.kind is Kind.SP:
        return DualityRecipe(G, SizeAdjust.DECREMENT_SMALLEST, G, TransposePosition.AFTER_COLLAPSE)
    if G.kind is Kind.SO_ODD:
        return DualityRecipe(G, SizeAdjust.INCREMENT_LARGEST, G, TransposePosition.AFTER_COLLAPSE)
    if G.kind is Kind.SO_EVEN:
        return DualityRecipe(G, SizeAdjust.NONE, G, TransposePosition.BEFORE_COLLAPSE)
    if G.kind is Kind.TYPE_A:
        # pure transpose: collapse in type A is the identity
        return DualityRecipe(G, SizeAdjust.NONE, G, TransposePosition.BEFORE_COLLAPSE)
    raise UnsupportedGroupError(f"no duality recipe for {G}")


def _check_dual_input(q: Partition, G: GroupType) -> None:
    if q.size != G.dual_partition_size:
        raise SizeError(f"duality into {G} takes a partition of {G.dual_partition_size}, got {q} of size {q.size}")
    if G.kind in (Kind.SP, Kind.SO_EVEN) and not has_orthogonal_parity(q):
        raise ParityError(f"duality into {G} needs an orthogonal partition, {q} has an even part of odd multiplicity")
    if G.kind is Kind.SO_ODD and not has_symplectic_parity(q):
        raise ParityError(f"duality into {G} needs a symplectic partition, {q} has an odd part of odd multiplicity")


def bv_dual_trace(q: Partition, G: GroupType) -> DualityTrace:
    recipe = recipe_for(G)
    _check_dual_input(q, G)
    if recipe.size_adjust is SizeAdjust.DECREMENT_SMALLEST:
        # the empty partition only occurs for SO_odd inputs
        adjusted = decrement_smallest(q)
    elif recipe.size_adjust is SizeAdjust.INCREMENT_LARGEST:
        adjusted = increment_largest(q)
    else:
        adjusted = q
    if recipe.transpose_position is TransposePosition.AFTER_COLLAPSE:
        collapsed = parity_collapse(adjusted, recipe.collapse_type)
        result = transpose(collapsed)
    else:
        collapsed = parity_collapse(transpose(adjusted), recipe.collapse_type)
        result = collapsed
    if not (_valid(result, G) and _special(result, G)):
        raise InvariantError(f"duality of {q} into {G} produced {result}, which is not a special {G}-partition")
    return DualityTrace(recipe, q, adjusted, collapsed, result)


def bv_dual(q: Partition, G: GroupType) -> Partition:
    """Barbasch-Vogan dual of the dual-group partition ``q``, as a ``G``-partition.

    >>> from orbitcalc.groups import Sp
    >>> str(bv_dual(Partition((3, 3, 3)), Sp(4)))
    '3,3,2'
    """
    return bv_dual_trace(q, G).result
