"""The parabolic, the flag manifold Z, the base cycle C, and the neutral
fiber of the cycle's normal bundle.

Conventions: the parabolic subalgebra contains the negative Borel and the
Levi factor generated by the chosen nodes, so the tangent weights of Z at
the base point are the positive roots outside the Levi span.  In the
equal-rank case the Cartan involution preserves every root space, hence
preserves the parabolic, and the neutral fiber of the normal bundle is
the quotient of the (-1)-eigenspace by its intersection with the
parabolic; its weights are the noncompact tangent weights.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import BadNodeError, EmptyFiberError, NotProperError
from .realform import CompactnessGrading
from .rootsystem import RootSystem, Weight, negate


@dataclass(frozen=True)
class ParabolicData:
    """Root data of the parabolic and the dimensions it determines."""

    levi_nodes: frozenset[int]  # 1-based
    q_roots: tuple[Weight, ...]
    tangent_weights: tuple[Weight, ...]  # positive roots outside the Levi span
    dim_z: int
    dim_c: int
    levi_correction: int  # dim P - dim B for P = K cap Q, B a Borel of K


@dataclass(frozen=True)
class NeutralFiber:
    """Weight multiset of the neutral fiber; multiplicity-free, so a set."""

    weights: tuple[Weight, ...]

    @property
    def rank(self) -> int:
        return len(self.weights)


def _support(v: Weight) -> frozenset[int]:
    return frozenset(i + 1 for i, c in enumerate(v) if c != 0)


def parabolic_data(
    rs: RootSystem, grading: CompactnessGrading, levi_nodes: Iterable[int]
) -> ParabolicData:
    """Build the parabolic determined by the Levi nodes."""
    levi = frozenset(levi_nodes)
    for i in levi:
        if not 1 <= i <= rs.rank:
            raise BadNodeError(f"node {i} outside 1..{rs.rank}")
    if len(levi) == rs.rank:
        raise NotProperError("levi nodes cover the whole diagram; Z is a point")

    in_levi = [v for v in rs.positive_roots if _support(v) <= levi]
    tangent = tuple(v for v in rs.positive_roots if not _support(v) <= levi)
    q_roots = tuple(
        sorted([negate(v) for v in rs.positive_roots] + in_levi)
    )
    dim_c = sum(1 for v in tangent if v in grading.compact_roots)
    levi_correction = sum(1 for v in in_levi if v in grading.compact_roots)
    return ParabolicData(
        levi_nodes=levi,
        q_roots=q_roots,
        tangent_weights=tangent,
        dim_z=len(tangent),
        dim_c=dim_c,
        levi_correction=levi_correction,
    )


def neutral_fiber(pd: ParabolicData, grading: CompactnessGrading) -> NeutralFiber:
    """Weights of the neutral fiber: the noncompact tangent weights."""
    weights = tuple(
        v for v in pd.tangent_weights if v in grading.noncompact_roots
    )
    if not weights:
        raise EmptyFiberError(
            "no noncompact root outside the Levi span: the cycle fills Z "
            "and there is no flag-domain geometry to classify"
        )
    return NeutralFiber(weights=weights)
