"""Property-based checks of the algebraic invariants."""

import itertools

from hypothesis import given, settings
from hypothesis import strategies as st

from flagample.cycle import neutral_fiber, parabolic_data
from flagample.dynkin import DynkinType
from flagample.realform import grade_roots, hermitian_data
from flagample.rootsystem import build_root_system, reflect
from flagample.snow import (
    assemble_input,
    max_weyl_length_bruteforce,
    max_weyl_length_fast,
)
from flagample.weyl import SubsystemContext, enumerate_weyl, max_length_mapping

_TYPES = [
    DynkinType("A", 1),
    DynkinType("A", 2),
    DynkinType("A", 3),
    DynkinType("B", 2),
    DynkinType("B", 3),
    DynkinType("C", 3),
    DynkinType("D", 3),
    DynkinType("G", 2),
]

_SYSTEMS = {dt: build_root_system(dt) for dt in _TYPES}


@st.composite
def _case(draw):
    dt = draw(st.sampled_from(_TYPES))
    rs = _SYSTEMS[dt]
    nodes = list(range(1, dt.rank + 1))
    marked = draw(
        st.sets(st.sampled_from(nodes), min_size=1, max_size=dt.rank)
    )
    levi = draw(
        st.sets(st.sampled_from(nodes), max_size=dt.rank - 1)
        if dt.rank > 1
        else st.just(set())
    )
    if len(levi) == dt.rank:
        levi = set()
    return rs, frozenset(marked), frozenset(levi)


@given(_case())
@settings(max_examples=60, deadline=None)
def test_reflect_involution_and_lattice(case):
    rs, marked, _ = case
    for gamma in rs.positive_roots:
        for v in rs.roots:
            w = reflect(rs, v, gamma)
            assert all(isinstance(x, int) for x in w)
            assert w in rs.root_index
            assert reflect(rs, w, gamma) == v


@given(_case())
@settings(max_examples=60, deadline=None)
def test_grading_additivity(case):
    rs, marked, _ = case
    g = grade_roots(rs, marked)
    for a, b in itertools.combinations(rs.roots, 2):
        c = tuple(a[i] + b[i] for i in range(rs.rank))
        if c in rs.root_index:
            assert g.parity(c) == (g.parity(a) + g.parity(b)) % 2


@given(_case())
@settings(max_examples=40, deadline=None)
def test_search_routes_agree(case):
    rs, marked, levi = case
    g = grade_roots(rs, marked)
    h = hermitian_data(rs, g)
    pd = parabolic_data(rs, g, levi)
    fiber = neutral_fiber(pd, g)
    inp = assemble_input(rs, g, h, pd, fiber)
    bl, bw, bp = max_weyl_length_bruteforce(inp)
    fl, fw, fp = max_weyl_length_fast(inp)
    assert (bl, bw.word, bw.action, bp) == (fl, fw.word, fw.action, fp)


@given(_case(), st.data())
@settings(max_examples=40, deadline=None)
def test_max_length_mapping_against_scan(case, data):
    rs, marked, _ = case
    g = grade_roots(rs, marked)
    k_pos = [v for v in rs.positive_roots if v in g.compact_roots]
    if not k_pos:
        return
    from flagample.rootsystem import simple_system

    simples = simple_system(rs, k_pos)
    mu = data.draw(st.sampled_from(rs.roots))
    nu = data.draw(st.sampled_from(rs.roots))
    fast = max_length_mapping(rs, simples, mu, nu)
    best = None
    for el in enumerate_weyl(rs, simples):
        if rs.roots[el.action[rs.root_index[nu]]] == mu:
            if best is None or el.length > best:
                best = el.length
    assert fast == best


@given(_case())
@settings(max_examples=40, deadline=None)
def test_weyl_orbit_of_root_stays_in_roots(case):
    rs, marked, _ = case
    g = grade_roots(rs, marked)
    k_pos = [v for v in rs.positive_roots if v in g.compact_roots]
    if not k_pos:
        return
    from flagample.rootsystem import simple_system

    ctx = SubsystemContext(rs, simple_system(rs, k_pos))
    root_set = set(rs.roots)
    for start in rs.roots:
        seen = {start}
        frontier = [start]
        while frontier:
            v = frontier.pop()
            for gsimple in ctx.simples:
                w = reflect(rs, v, gsimple)
                if w not in seen:
                    seen.add(w)
                    frontier.append(w)
        assert seen <= root_set


@given(_case())
@settings(max_examples=60, deadline=None)
def test_dimension_bookkeeping(case):
    rs, marked, levi = case
    g = grade_roots(rs, marked)
    pd = parabolic_data(rs, g, levi)
    fiber = neutral_fiber(pd, g)
    assert pd.dim_z == pd.dim_c + fiber.rank
    assert 1 <= fiber.rank <= pd.dim_z


@given(_case())
@settings(max_examples=60, deadline=None)
def test_s_plus_abelian_and_orthogonality(case):
    rs, marked, _ = case
    g = grade_roots(rs, marked)
    h = hermitian_data(rs, g)
    if not h.hermitian:
        return
    for a in h.s_plus:
        for b in h.s_plus:
            c = tuple(a[i] + b[i] for i in range(rs.rank))
            assert c not in rs.root_index
    # the two halves are swapped by negation and exhaust the noncompacts
    assert {tuple(-x for x in a) for a in h.s_plus} == set(h.s_minus)
    assert len(h.s_plus) + len(h.s_minus) == len(g.noncompact_roots)
