"""Weyl groups of root subsystems: enumeration, lengths, coset maxima.

Elements are represented by their action on the full root set (a
permutation of root indices) together with a reduced word in the simple
reflections of the designated subsystem.  A word (j1, ..., jk) denotes
the composition s_{j1} o s_{j2} o ... o s_{jk} (rightmost applied first).

All lengths are taken with respect to the subsystem: the length of w is
the number of subsystem-positive roots sent to subsystem-negative roots,
which equals the length of any reduced word for w.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from . import kernels
from ._linalg import solve_in_basis
from .errors import EnumerationCapError, InternalInconsistencyError
from .rootsystem import RootSystem, Weight, pair, reflect, subsystem_components

DEFAULT_CAP = 10_000_000

Perm = tuple[int, ...]


@dataclass(frozen=True)
class WeylElement:
    """Group element: canonical reduced word plus root-set permutation.

    Two elements are equal iff their actions coincide; the word is the
    lexicographically least reduced word in the subsystem's generators.
    """

    word: tuple[int, ...]
    action: Perm

    @property
    def length(self) -> int:
        return len(self.word)

    def __eq__(self, other):
        return isinstance(other, WeylElement) and self.action == other.action

    def __hash__(self):
        return hash(self.action)


def compose(a: Perm, b: Perm) -> Perm:
    """(a o b)(x) = a(b(x))."""
    return tuple(a[x] for x in b)


def invert(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


class SubsystemContext:
    """Precomputed data for the reflection group of a root subsystem."""

    def __init__(self, rs: RootSystem, simples: Iterable[Weight]):
        self.rs = rs
        self.simples = tuple(sorted(simples))
        m = len(rs.roots)
        self.identity: Perm = tuple(range(m))
        self.gen_perms: tuple[Perm, ...] = tuple(
            tuple(rs.root_index[reflect(rs, v, g)] for v in rs.roots)
            for g in self.simples
        )
        self.simple_indices = tuple(rs.root_index[g] for g in self.simples)
        self.sub_sign = self._subsystem_signs()
        self.pos_count = sum(1 for s in self.sub_sign.values() if s > 0)
        self._w0_word: tuple[int, ...] | None = None

    def _subsystem_signs(self) -> dict[int, int]:
        """Sign (+1 positive, -1 negative) of each subsystem root, by
        its coordinates in the subsystem's simple basis."""
        if not self.simples:
            return {}
        rs = self.rs
        seen = set(self.simple_indices)
        queue = list(self.simple_indices)
        while queue:
            i = queue.pop()
            for gp in self.gen_perms:
                j = gp[i]
                if j not in seen:
                    seen.add(j)
                    queue.append(j)
        signs = {}
        for i in seen:
            coords = solve_in_basis(self.simples, rs.roots[i])
            assert coords is not None, "subsystem root outside simple span"
            signs[i] = 1 if all(c >= 0 for c in coords) else -1
        return signs

    @property
    def w0_word(self) -> tuple[int, ...]:
        """A reduced word for the longest element of the subsystem group,
        found by walking the sum of the positive subsystem roots into the
        antidominant chamber."""
        if self._w0_word is None:
            rs = self.rs
            v = tuple(
                sum(rs.roots[i][j] for i, s in self.sub_sign.items() if s > 0)
                for j in range(rs.rank)
            )
            steps: list[int] = []
            while True:
                i = next(
                    (
                        k
                        for k, g in enumerate(self.simples)
                        if pair(rs, v, g) > 0
                    ),
                    None,
                )
                if i is None:
                    break
                v = reflect(rs, v, self.simples[i])
                steps.append(i)
            if len(steps) != self.pos_count:
                raise InternalInconsistencyError(
                    "longest-element walk has wrong length"
                )
            # steps[t] is applied first; word order is composition order
            self._w0_word = tuple(reversed(steps))
        return self._w0_word

    def apply_word(self, word: Sequence[int], v: Sequence) -> tuple:
        """Apply s_{word[0]} o ... o s_{word[-1]} to a weight."""
        for i in reversed(word):
            v = reflect(self.rs, v, self.simples[i])
        return tuple(v)

    def perm_of_word(self, word: Sequence[int]) -> Perm:
        p = self.identity
        for i in reversed(word):
            p = compose(self.gen_perms[i], p)
        return p

    def length_of_perm(self, p: Perm) -> int:
        """Inversion count: subsystem-positive roots sent negative."""
        return sum(
            1
            for i, s in self.sub_sign.items()
            if s > 0 and self.sub_sign[p[i]] < 0
        )

    def canonical_word(self, p: Perm) -> tuple[int, ...]:
        """Lexicographically least reduced word, by greedy least left
        descent: i is a left descent of w iff w^{-1}(gamma_i) is a
        subsystem-negative root."""
        word: list[int] = []
        for _ in range(self.pos_count + 1):
            if p == self.identity:
                return tuple(word)
            inv = invert(p)
            i = next(
                k
                for k, gi in enumerate(self.simple_indices)
                if self.sub_sign[inv[gi]] < 0
            )
            word.append(i)
            p = compose(self.gen_perms[i], p)
        raise InternalInconsistencyError("canonical word did not terminate")


def enumerate_weyl(
    rs: RootSystem, simples: Iterable[Weight], cap: int = DEFAULT_CAP
) -> list[WeylElement]:
    """Every element of the reflection group generated by the simple
    system, exactly once, ordered by length with ties broken by the
    lexicographic order of the canonical reduced words."""
    ctx = SubsystemContext(rs, simples)
    return _enumerate(ctx, cap)


def _enumerate(ctx: SubsystemContext, cap: int) -> list[WeylElement]:
    if not ctx.simples:
        return [WeylElement((), ctx.identity)]
    try:
        flat, parents, genids = kernels.enumerate_group(
            ctx.gen_perms, ctx.simple_indices, cap
        )
    except OverflowError as exc:
        raise EnumerationCapError(str(exc)) from None
    m = len(ctx.rs.roots)
    n = len(parents)
    words: list[tuple[int, ...]] = [()] * n
    out: list[WeylElement] = []
    for k in range(n):
        if k > 0:
            words[k] = words[parents[k]] + (genids[k],)
        out.append(WeylElement(words[k], tuple(flat[k * m : (k + 1) * m])))
    return out


def _weight_orbit(
    ctx: SubsystemContext, start: Sequence
) -> dict[tuple, tuple[int, tuple | None, int]]:
    """BFS orbit of a weight under the subsystem's simple reflections.

    Maps each orbit point to (distance, previous point, generator used);
    the distance is the minimal length of a group element carrying
    `start` to that point.
    """
    start = tuple(start)
    rs = ctx.rs
    out: dict[tuple, tuple[int, tuple | None, int]] = {start: (0, None, -1)}
    frontier = [start]
    while frontier:
        nxt = []
        for v in frontier:
            d = out[v][0]
            for i, g in enumerate(ctx.simples):
                w = tuple(reflect(rs, v, g))
                if w not in out:
                    out[w] = (d + 1, v, i)
                    nxt.append(w)
        frontier = nxt
    return out


def max_length_mapping(
    rs: RootSystem, simples: Iterable[Weight], mu: Sequence, nu: Sequence
) -> int | None:
    """Largest subsystem length of an element w with w(nu) = mu, or None
    when mu is not in the orbit of nu.

    Multiplying by the longest element w0 reverses lengths, so the
    maximum equals len(w0) minus the minimal length of an element taking
    nu to w0(mu); the minimum is the graph distance in the orbit of nu
    under the simple reflections.
    """
    ctx = SubsystemContext(rs, simples)
    res = _max_length_with_witness(ctx, tuple(mu), tuple(nu))
    return None if res is None else res[0]


def _max_length_with_witness(
    ctx: SubsystemContext, mu: tuple, nu: tuple
) -> tuple[int, WeylElement] | None:
    rs = ctx.rs
    if not ctx.simples:
        if mu == nu:
            return 0, WeylElement((), ctx.identity)
        return None
    orbit = _weight_orbit(ctx, nu)
    target = ctx.apply_word(ctx.w0_word, mu)
    if target not in orbit:
        return None
    dist = orbit[target][0]
    # walk the BFS tree back from target: collects generators in
    # composition order (last step first)
    path: list[int] = []
    v = target
    while True:
        d, prev, gen = orbit[v]
        if prev is None:
            break
        path.append(gen)
        v = prev
    raw_word = ctx.w0_word + tuple(path)
    p = ctx.perm_of_word(raw_word)
    length = ctx.pos_count - dist
    if ctx.length_of_perm(p) != length:
        raise InternalInconsistencyError(
            "coset maximum length mismatch between routes"
        )
    word = ctx.canonical_word(p)
    if len(word) != length:
        raise InternalInconsistencyError("canonical word length mismatch")
    witness = WeylElement(word, p)
    if ctx.apply_word(word, nu) != mu:
        raise InternalInconsistencyError("witness does not map nu to mu")
    return length, witness


def group_order_from_simples(rs: RootSystem, simples: Iterable[Weight]) -> int:
    """Order of the generated reflection group, via the classification of
    the subsystem into irreducible components."""
    ctx = SubsystemContext(rs, simples)
    if not ctx.simples:
        return 1
    positives = [rs.roots[i] for i, s in ctx.sub_sign.items() if s > 0]
    order = 1
    for comp in subsystem_components(rs, positives):
        order *= comp.order
    return order
