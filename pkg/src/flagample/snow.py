"""Ampleness of the normal bundle via length maximization over the Weyl
group of K.

The searched set consists of the elements w of W(K) such that some
maximal fiber weight mu has w^{-1}(mu) again a fiber weight.  The more
common formulation via dual modules asks that the U-invariant weights of
the dual fiber meet w applied to the dual weight set; dualizing negates
both weight sets, and multiplying the resulting condition by -1 gives
exactly the form used here, so the two are equivalent.

The ampleness is the maximal length minus (dim P - dim B), P = K cap Q:
pulling the bundle back to the full flag manifold of K changes the
ampleness by the fiber dimension of K/B -> K/P, and over K/B the maximal
length is the answer; applying the correction as an integer subtraction
is equivalent to literally pulling back (the equality is unit-tested).
"""

from __future__ import annotations

from dataclasses import dataclass

from .cycle import NeutralFiber, ParabolicData
from .errors import InternalInconsistencyError
from .realform import (
    CompactnessGrading,
    HermitianData,
    compact_positive_roots,
)
from .rootsystem import RootSystem, Weight, simple_system
from .weyl import (
    DEFAULT_CAP,
    SubsystemContext,
    WeylElement,
    _enumerate,
    _max_length_with_witness,
    group_order_from_simples,
    invert,
)

METHODS = ("auto", "bruteforce", "fast")


@dataclass(frozen=True)
class AmplenessInput:
    """Everything the length search needs, assembled from one pipeline run."""

    rs: RootSystem
    grading: CompactnessGrading
    hermitian: HermitianData
    parabolic: ParabolicData
    fiber: NeutralFiber
    k_simples: tuple[Weight, ...]
    levi_correction: int


@dataclass(frozen=True)
class AmplenessResult:
    ampleness: int
    max_length: int
    witness: WeylElement
    witness_pair: tuple[Weight, Weight]  # (mu maximal, nu fiber weight)
    max_weights: tuple[Weight, ...]


def assemble_input(
    rs: RootSystem,
    grading: CompactnessGrading,
    hermitian: HermitianData,
    parabolic: ParabolicData,
    fiber: NeutralFiber,
) -> AmplenessInput:
    k_pos = compact_positive_roots(rs, grading)
    k_simples = simple_system(rs, k_pos)
    return AmplenessInput(
        rs=rs,
        grading=grading,
        hermitian=hermitian,
        parabolic=parabolic,
        fiber=fiber,
        k_simples=k_simples,
        levi_correction=parabolic.levi_correction,
    )


def maximal_weights(
    fiber: NeutralFiber, k_positives: tuple[Weight, ...]
) -> tuple[Weight, ...]:
    """Fiber weights to which no positive compact root can be added
    inside the fiber's weight set.

    All weight multiplicities are one, and bracketing a root vector by a
    compact root vector is nonzero whenever the target is a root, so this
    maximality is exactly membership in the top layer of the module: the
    maximal weights are the negatives of the U-invariant weights of the
    dual fiber.
    """
    wset = set(fiber.weights)
    n = len(fiber.weights[0]) if fiber.weights else 0
    out = [
        a
        for a in wset
        if not any(
            tuple(a[i] + g[i] for i in range(n)) in wset for g in k_positives
        )
    ]
    return tuple(sorted(out))


def closed_form_maximal_weights(
    grading: CompactnessGrading,
    hermitian: HermitianData,
    parabolic: ParabolicData,
) -> tuple[Weight, ...]:
    """Independent route to the maximal fiber weights.

    If k is semisimple the noncompact module is irreducible and the only
    maximal weight is its highest weight.  If k has a center the module
    splits into the two xi-halves with highest weights lambda_plus and
    lambda_minus, and a half drops out exactly when it is swallowed by
    the parabolic.
    """
    if hermitian.center_dim == 0:
        if len(hermitian.lambda_max_s) != 1:
            raise InternalInconsistencyError(
                "semisimple k but several maximal noncompact weights"
            )
        return hermitian.lambda_max_s
    if len(hermitian.lambda_max_s) != 2:
        raise InternalInconsistencyError(
            "k has a center but the noncompact module does not split in two"
        )
    q_set = set(parabolic.q_roots)
    keep = []
    for side in (hermitian.s_plus, hermitian.s_minus):
        tops = [a for a in hermitian.lambda_max_s if a in side]
        if len(tops) != 1:
            raise InternalInconsistencyError(
                "xi-half without a unique highest weight"
            )
        if not set(side) <= q_set:
            keep.append(tops[0])
    return tuple(sorted(keep))


def _weights(inp: AmplenessInput) -> tuple[frozenset, tuple[Weight, ...]]:
    k_pos = compact_positive_roots(inp.rs, inp.grading)
    lam = maximal_weights(inp.fiber, k_pos)
    return frozenset(inp.fiber.weights), lam


def _witness_pair(
    rs: RootSystem,
    element: WeylElement,
    lam: tuple[Weight, ...],
    fiber_set: frozenset,
) -> tuple[Weight, Weight]:
    """First (mu, nu) in sorted mu order with element(nu) = mu."""
    inv = invert(element.action)
    for mu in lam:
        nu = rs.roots[inv[rs.root_index[mu]]]
        if nu in fiber_set:
            return mu, nu
    raise InternalInconsistencyError("witness element matches no weight pair")


def max_weyl_length_bruteforce(
    inp: AmplenessInput, cap: int = DEFAULT_CAP
) -> tuple[int, WeylElement, tuple[Weight, Weight]]:
    """Scan the whole group; oracle for the fast search.

    Elements arrive ordered by (length, word), so keeping the first
    strict improvement yields the lexicographically least witness among
    the maximizers.
    """
    rs = inp.rs
    fiber_set, lam = _weights(inp)
    ctx = SubsystemContext(rs, inp.k_simples)
    elements = _enumerate(ctx, cap)
    lam_idx = {rs.root_index[a] for a in lam}
    nu_idx = [rs.root_index[a] for a in sorted(fiber_set)]

    best: WeylElement | None = None
    for el in elements:
        if best is not None and el.length <= best.length:
            continue
        act = el.action
        if any(act[i] in lam_idx for i in nu_idx):
            best = el
    if best is None:
        raise InternalInconsistencyError(
            "identity not in the search set: maximal weights escape the fiber"
        )
    return best.length, best, _witness_pair(rs, best, lam, fiber_set)


def max_weyl_length_fast(
    inp: AmplenessInput,
) -> tuple[int, WeylElement, tuple[Weight, Weight]]:
    """Coset-by-coset search; no group enumeration.

    For each pair (mu maximal, nu fiber weight) the elements mapping nu
    to mu form a single coset whose unique longest element has length
    len(w0) - dist(nu, w0(mu)) in the orbit graph of nu; the global
    answer is the maximum over pairs, with the same witness tie-break as
    the brute-force scan.
    """
    rs = inp.rs
    fiber_set, lam = _weights(inp)
    ctx = SubsystemContext(rs, inp.k_simples)

    best: tuple[int, WeylElement] | None = None
    for mu in lam:
        for nu in sorted(fiber_set):
            res = _max_length_with_witness(ctx, mu, nu)
            if res is None:
                continue
            length, witness = res
            if (
                best is None
                or length > best[0]
                or (length == best[0] and witness.word < best[1].word)
            ):
                best = (length, witness)
    if best is None:
        raise InternalInconsistencyError(
            "no pair admits any group element: maximal weights escape the fiber"
        )
    length, witness = best
    return length, witness, _witness_pair(rs, witness, lam, fiber_set)


def ampleness(
    inp: AmplenessInput,
    method: str = "auto",
    verify: bool = False,
    cap: int = DEFAULT_CAP,
) -> AmplenessResult:
    """Run the length search and apply the Levi correction.

    method 'auto' uses the fast search and, when verification is
    requested and the group fits under the cap, cross-checks against the
    brute-force scan; 'bruteforce' and 'fast' force one route (verify
    then runs the other unconditionally).
    """
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}")
    fiber_set, lam = _weights(inp)
    if not set(lam) <= fiber_set:
        raise InternalInconsistencyError("maximal weights escape the fiber")
    closed = closed_form_maximal_weights(inp.grading, inp.hermitian, inp.parabolic)
    if closed != lam:
        raise InternalInconsistencyError(
            f"maximal weights disagree: combinatorial {lam} vs case analysis {closed}"
        )

    results = {}
    if method == "bruteforce":
        results["bruteforce"] = max_weyl_length_bruteforce(inp, cap)
        if verify:
            results["fast"] = max_weyl_length_fast(inp)
        primary = results["bruteforce"]
    elif method == "fast":
        results["fast"] = max_weyl_length_fast(inp)
        if verify:
            results["bruteforce"] = max_weyl_length_bruteforce(inp, cap)
        primary = results["fast"]
    else:
        results["fast"] = max_weyl_length_fast(inp)
        if verify and group_order_from_simples(inp.rs, inp.k_simples) <= cap:
            results["bruteforce"] = max_weyl_length_bruteforce(inp, cap)
        primary = results["fast"]

    if len(results) == 2:
        a, b = results["fast"], results["bruteforce"]
        if a[0] != b[0] or a[1] != b[1] or a[1].word != b[1].word or a[2] != b[2]:
            raise InternalInconsistencyError(
                f"search methods disagree: fast {a[:1]} vs brute force {b[:1]}"
            )

    max_length, witness, pair_ = primary
    value = max_length - inp.levi_correction
    if not 0 <= value <= inp.parabolic.dim_c:
        raise InternalInconsistencyError(
            f"ampleness {value} outside 0..dim_C={inp.parabolic.dim_c}"
        )
    if witness.length != max_length:
        raise InternalInconsistencyError("witness length mismatch")
    return AmplenessResult(
        ampleness=value,
        max_length=max_length,
        witness=witness,
        witness_pair=pair_,
        max_weights=lam,
    )
