"""Full pipeline from a (type, marking, levi) triple to a report, plus
the batch sweep over all cases of a type."""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache

from .classify import classify
from .cycle import neutral_fiber, parabolic_data
from .dynkin import DynkinType, diagram_automorphisms
from .errors import DegenerateGeometryError, EnumerationCapError
from .realform import grade_roots, hermitian_data
from .rootsystem import build_root_system
from .snow import ampleness, assemble_input
from .weyl import DEFAULT_CAP


@dataclass(frozen=True)
class CaseSpec:
    """One pipeline input; node lists are sorted, 1-based."""

    dynkin: DynkinType
    noncompact: tuple[int, ...]
    levi: tuple[int, ...] = ()
    method: str = "auto"
    verify: bool = False
    max_weyl: int = DEFAULT_CAP


@dataclass(frozen=True)
class Report:
    """Flat record of everything one run produced."""

    series: str
    rank: int
    noncompact: tuple[int, ...]
    levi: tuple[int, ...]
    realform_name: str
    k_type: str
    center_dim: int
    hermitian: bool
    dim_z: int
    dim_c: int
    rank_e: int
    e0_weights: tuple[tuple[int, ...], ...]
    max_weights: tuple[tuple[int, ...], ...]
    k_simples: tuple[tuple[int, ...], ...]
    w0_max_length: int
    witness_word: tuple[int, ...]  # 0-based indices into k_simples
    levi_correction: int
    ampleness: int
    kind: str
    concavity_degree: int
    cross_check: str
    notes: str

    def to_json_dict(self) -> dict:
        """Stable JSON schema; lists of coordinate vectors for weights,
        1-based generator indices for the witness word."""
        return {
            "input": {
                "series": self.series,
                "rank": self.rank,
                "noncompact": list(self.noncompact),
                "levi": list(self.levi),
            },
            "realform": {
                "name": self.realform_name,
                "k_type": self.k_type,
                "center_dim": self.center_dim,
                "hermitian": self.hermitian,
            },
            "dims": {
                "dim_Z": self.dim_z,
                "dim_C": self.dim_c,
                "rank_E": self.rank_e,
            },
            "weights": {
                "E0": [list(w) for w in self.e0_weights],
                "lambda_max": [list(w) for w in self.max_weights],
            },
            "snow": {
                "w0_max_length": self.w0_max_length,
                "witness_word": [i + 1 for i in self.witness_word],
                "levi_correction": self.levi_correction,
                "ampleness": self.ampleness,
            },
            "classification": {
                "kind": self.kind,
                "concavity_degree": self.concavity_degree,
                "cross_check": self.cross_check,
            },
        }


@lru_cache(maxsize=None)
def _root_system(series: str, rank: int):
    return build_root_system(DynkinType(series, rank))


def run_case(spec: CaseSpec) -> Report:
    """Run the whole pipeline for one case."""
    rs = _root_system(spec.dynkin.series, spec.dynkin.rank)
    grading = grade_roots(rs, spec.noncompact)
    herm = hermitian_data(rs, grading)
    pd = parabolic_data(rs, grading, spec.levi)
    fiber = neutral_fiber(pd, grading)
    inp = assemble_input(rs, grading, herm, pd, fiber)
    amp = ampleness(inp, method=spec.method, verify=spec.verify, cap=spec.max_weyl)
    cls = classify(amp, pd, grading, herm)
    return Report(
        series=spec.dynkin.series,
        rank=spec.dynkin.rank,
        noncompact=tuple(sorted(spec.noncompact)),
        levi=tuple(sorted(spec.levi)),
        realform_name=herm.kname,
        k_type=herm.k_type,
        center_dim=herm.center_dim,
        hermitian=herm.hermitian,
        dim_z=pd.dim_z,
        dim_c=pd.dim_c,
        rank_e=fiber.rank,
        e0_weights=tuple(sorted(fiber.weights)),
        max_weights=amp.max_weights,
        k_simples=inp.k_simples,
        w0_max_length=amp.max_length,
        witness_word=amp.witness.word,
        levi_correction=pd.levi_correction,
        ampleness=amp.ampleness,
        kind=cls.kind,
        concavity_degree=cls.concavity_degree,
        cross_check=cls.cross_check,
        notes=cls.notes,
    )


def sweep_cases(dynkin: DynkinType, dedupe: bool = False):
    """All (marking, levi) pairs of a type, lexicographically ordered.

    Markings are the nonempty node subsets, levis the proper ones; with
    dedupe, only the representative least under the diagram automorphism
    group is kept."""
    n = dynkin.rank
    nodes = range(1, n + 1)
    subsets = sorted(
        itertools.chain.from_iterable(
            itertools.combinations(nodes, k) for k in range(n + 1)
        )
    )
    markings = [s for s in subsets if s]
    levis = [s for s in subsets if len(s) < n]
    cases = [(m, l) for m in markings for l in levis]
    if dedupe:
        autos = diagram_automorphisms(dynkin)
        keep = []
        for m, l in cases:
            canon = min(
                (
                    tuple(sorted(sigma[i - 1] + 1 for i in m)),
                    tuple(sorted(sigma[i - 1] + 1 for i in l)),
                )
                for sigma in autos
            )
            if (m, l) == canon:
                keep.append((m, l))
        cases = keep
    return cases


def _status_tag(exc: Exception) -> str:
    name = type(exc).__name__
    return name[:-5] if name.endswith("Error") else name


def _table_worker(args) -> dict:
    series, rank, marking, levi, method, verify, cap = args
    spec = CaseSpec(
        dynkin=DynkinType(series, rank),
        noncompact=marking,
        levi=levi,
        method=method,
        verify=verify,
        max_weyl=cap,
    )
    row = {
        "input": {
            "series": series,
            "rank": rank,
            "noncompact": list(marking),
            "levi": list(levi),
        }
    }
    try:
        report = run_case(spec)
    except (DegenerateGeometryError, EnumerationCapError) as exc:
        # a degenerate cell or a budget overrun flags its row; the rest
        # of the sweep still runs
        row["status"] = _status_tag(exc)
        row["report"] = None
        return row
    row["status"] = "ok"
    row["report"] = report
    return row


def run_table(
    dynkin: DynkinType,
    method: str = "auto",
    verify: bool = False,
    max_weyl: int = DEFAULT_CAP,
    dedupe: bool = False,
    jobs: int = 1,
) -> list[dict]:
    """Evaluate every case of a type; rows come back in case order
    regardless of parallelism."""
    cases = sweep_cases(dynkin, dedupe=dedupe)
    args = [
        (dynkin.series, dynkin.rank, m, l, method, verify, max_weyl)
        for m, l in cases
    ]
    if jobs <= 1:
        return [_table_worker(a) for a in args]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_table_worker, args))
