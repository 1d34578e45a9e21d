"""Inner real forms as Z/2 gradings of the root set.

A marking of Dynkin nodes declares those simple roots noncompact; the
parity of any root is the mod-2 sum of its coefficients on the marked
nodes.  In the equal-rank case the Cartan involution fixes the Cartan
subalgebra pointwise, every root space is an eigenspace, and the
noncompact roots are exactly the weights of the (-1)-eigenspace.
Only inner forms are representable here; outer forms are out of scope.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

from ._linalg import matrix_rank, nullspace_vector
from .errors import BadNodeError, CompactFormError, DegenerateGradingError
from .rootsystem import (
    RootSystem,
    Weight,
    negate,
    pair,
    subsystem_components,
)


@dataclass(frozen=True)
class CompactnessGrading:
    """Partition of the roots into compact and noncompact."""

    marked_simples: frozenset[int]  # 1-based node labels
    compact_roots: frozenset[Weight]
    noncompact_roots: frozenset[Weight]

    def parity(self, v) -> int:
        return sum(v[i - 1] for i in self.marked_simples) % 2


@dataclass(frozen=True)
class HermitianData:
    """Center of k, the split of the noncompact roots it induces, and the
    maximal noncompact weights."""

    center_dim: int  # 0 or 1
    s_plus: tuple[Weight, ...]
    s_minus: tuple[Weight, ...]
    lambda_max_s: tuple[Weight, ...]
    k_type: str
    kname: str

    @property
    def hermitian(self) -> bool:
        return self.center_dim == 1


def grade_roots(rs: RootSystem, marked: Iterable[int]) -> CompactnessGrading:
    """Grade the roots by the mod-2 sum of their marked coefficients."""
    marked = frozenset(marked)
    if not marked:
        raise CompactFormError(
            "empty marking selects the compact real form, which has no flag domains"
        )
    for i in marked:
        if not 1 <= i <= rs.rank:
            raise BadNodeError(f"node {i} outside 1..{rs.rank}")
    compact, noncompact = [], []
    for v in rs.roots:
        if sum(v[i - 1] for i in marked) % 2 == 0:
            compact.append(v)
        else:
            noncompact.append(v)
    return CompactnessGrading(
        marked_simples=marked,
        compact_roots=frozenset(compact),
        noncompact_roots=frozenset(noncompact),
    )


def compact_positive_roots(
    rs: RootSystem, grading: CompactnessGrading
) -> tuple[Weight, ...]:
    return tuple(v for v in rs.positive_roots if v in grading.compact_roots)


def hermitian_data(rs: RootSystem, grading: CompactnessGrading) -> HermitianData:
    """Detect Hermitian type and split the noncompact roots.

    center_dim is the rank deficiency of the span of the compact roots.
    When it is 1, a rational functional xi orthogonal to every compact
    root is solved for exactly and normalized to pair positively with the
    lowest-index marked simple root; the xi-positive noncompact roots
    form s_plus.
    """
    compact_pos = compact_positive_roots(rs, grading)
    center_dim = rs.rank - matrix_rank(compact_pos)
    if center_dim not in (0, 1):
        raise DegenerateGradingError(
            f"compact span has rank deficiency {center_dim}"
        )

    lam_max = tuple(
        sorted(
            a
            for a in grading.noncompact_roots
            if not any(
                tuple(a[i] + g[i] for i in range(rs.rank))
                in grading.noncompact_roots
                for g in compact_pos
            )
        )
    )

    comps = subsystem_components(rs, compact_pos)
    k_type = "×".join(c.label for c in comps) if comps else "0"

    s_plus: tuple[Weight, ...] = ()
    s_minus: tuple[Weight, ...] = ()
    if center_dim == 1:
        xi = _central_functional(rs, compact_pos)
        m0 = min(grading.marked_simples)
        alpha0 = tuple(1 if j == m0 - 1 else 0 for j in range(rs.rank))
        val = pair(rs, xi, alpha0)
        if val == 0:
            raise DegenerateGradingError("central functional kills a marked simple")
        if val < 0:
            xi = tuple(-x for x in xi)
        plus, minus = [], []
        for a in grading.noncompact_roots:
            p = pair(rs, xi, a)
            if p == 0:
                raise DegenerateGradingError(
                    "central functional kills a noncompact root"
                )
            (plus if p > 0 else minus).append(a)
        s_plus = tuple(sorted(plus))
        s_minus = tuple(sorted(minus))
        assert set(s_minus) == {negate(a) for a in s_plus}

    kname = _real_form_name(rs, grading, center_dim, comps, k_type)
    return HermitianData(
        center_dim=center_dim,
        s_plus=s_plus,
        s_minus=s_minus,
        lambda_max_s=lam_max,
        k_type=k_type,
        kname=kname,
    )


def identify_real_form(
    rs: RootSystem, grading: CompactnessGrading, hermitian: HermitianData
) -> str:
    """Best-effort standard name of the real form; cosmetic metadata."""
    return hermitian.kname


def _central_functional(rs, compact_pos):
    """Rational vector xi with (xi, gamma) = 0 for every compact root."""
    if not compact_pos:
        if rs.rank != 1:
            raise DegenerateGradingError("no compact roots at rank > 1")
        return (1,)
    b = rs.pairing_matrix
    rows = [
        tuple(sum(b[k][j] * g[j] for j in range(rs.rank)) for k in range(rs.rank))
        for g in compact_pos
    ]
    xi = nullspace_vector(rows)
    if xi is None:
        raise DegenerateGradingError("central direction is not one-dimensional")
    return xi


def _real_form_name(rs, grading, center_dim, comps, k_type) -> str:
    series, n = rs.dynkin.series, rs.dynkin.rank
    cnt = len(grading.compact_roots)
    labels = tuple(sorted(c.label for c in comps))

    if series == "A":
        total = n + 1
        pq2 = total * total - total - cnt
        if pq2 >= 0 and pq2 % 2 == 0:
            pq = pq2 // 2
            disc = total * total - 4 * pq
            s = math.isqrt(disc) if disc >= 0 else -1
            if s * s == disc and (total + s) % 2 == 0:
                p = (total + s) // 2
                q = total - p
                if p >= 1 and q >= 1 and p * (p - 1) + q * (q - 1) == cnt:
                    return f"su({p},{q})"
    elif series == "B":
        for p in range(1, n + 1):
            q = n - p
            if 2 * p * (p - 1) + 2 * q * q == cnt:
                return f"so({2 * p},{2 * q + 1})"
    elif series == "C":
        if center_dim == 1 and cnt == n * (n - 1):
            return f"sp({n},ℝ)"
        for p in range(n - 1, 0, -1):
            q = n - p
            if p >= q and 2 * p * p + 2 * q * q == cnt:
                return f"sp({p},{q})"
    elif series == "D":
        if center_dim == 1:
            if cnt == 2 * (n - 1) * (n - 2):
                return f"so(2,{2 * (n - 1)})"
            if cnt == n * (n - 1):
                return f"so*({2 * n})"
        else:
            for p in range(n - 2, 1, -1):
                q = n - p
                if p >= q and 2 * p * (p - 1) + 2 * q * (q - 1) == cnt:
                    return f"so({2 * p},{2 * q})"
    else:
        key = (series, n, labels, center_dim)
        table = {
            ("G", 2, ("A1", "A1"), 0): "g2(2) (split)",
            ("F", 4, ("B4",), 0): "f4(-20)",
            ("F", 4, ("A1", "C3"), 0): "f4(4) (split)",
            ("E", 6, ("A1", "A5"), 0): "e6(2)",
            ("E", 6, ("D5",), 1): "e6(-14)",
            ("E", 7, ("A7",), 0): "e7(7) (split)",
            ("E", 7, ("A1", "D6"), 0): "e7(-5)",
            ("E", 7, ("E6",), 1): "e7(-25)",
            ("E", 8, ("D8",), 0): "e8(8) (split)",
            ("E", 8, ("A1", "E7"), 0): "e8(-24)",
        }
        if key in table:
            return table[key]

    suffix = "⊕ℝ" if center_dim == 1 else ""
    return f"{series.lower()}{n}({k_type}{suffix})"
