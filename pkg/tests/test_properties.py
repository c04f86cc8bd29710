"""Library-wide laws checked over every fixture.

The suites live in ``suites.py``; here each one runs per fixture under the
reading the construction results need (``PROOF_SEMANTICS``) and under the
all-members reading.  The union reading of weak associativity rejects a
few of the constructions; those cases are pinned down exactly.
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import suites
from conftest import ALL_FIXTURES
from trellisops import construct, core, formats, morph
from trellisops.binop import (
    AssocMode,
    MonoMode,
    OpClass,
    OpTable,
    WeakSemantics,
    is_associative,
    is_commutative,
    is_member,
    is_weakly_associative,
    meet_op,
    pointwise_leq,
)

READINGS = {
    "side": suites.PROOF_SEMANTICS,
    "all": WeakSemantics(MonoMode.UPPER, AssocMode.ALL_MEMBERS),
}
UNION = WeakSemantics(MonoMode.UPPER, AssocMode.ANY_MEMBER)


@pytest.mark.parametrize("reading", sorted(READINGS))
@pytest.mark.parametrize("suite", suites.CARRIER_SUITES, ids=lambda f: f.__name__)
@pytest.mark.parametrize("name", ALL_FIXTURES)
def test_suite(load, name, suite, reading):
    res = suite(load(name), READINGS[reading])
    assert res.ok, res.violations[:5]


@pytest.mark.parametrize("reading", sorted(READINGS))
def test_transport_suite(load, reading):
    pairs = suites.iso_pairs(load)
    assert len(pairs) >= 3
    for iso in pairs:
        res = suites.transport_pair(iso, READINGS[reading])
        assert res.ok and res.checked, res.violations[:5]


class TestUnionReading:
    """What the union reading of weak associativity does to the constructions."""

    def test_constructions(self, load):
        found = {}
        for name in ALL_FIXTURES:
            bad = suites.constructions(load(name), UNION).violations
            if bad:
                found[name] = bad
        assert found == {"FIG1": [("S_e", "a")], "TR8": [("T_e", "d"), ("T_e", "1")]}

    def test_tr8_meet_witness(self, load):
        t = load("TR8")
        out = is_weakly_associative(meet_op(t), UNION)
        assert tuple(t.labels[i] for i in out.witness) == ("a", "c", "f")
        # f is join-associative only; the triple has no meet-associative member
        assert t.index("f") not in suites.classify.classify_elements(t).meet_ass

    def test_other_suites_unaffected(self, load):
        for name in ("C5D", "CYC5", "PS2", "FIG1"):
            for suite in (suites.bounds, suites.drastic_distributes, suites.no_idempotent_tnorm):
                assert suite(load(name), UNION).ok


class TestIdempotenceFromDistributivity:
    def test_fails_with_skipped_pairs(self, load):
        res = suites.idempotence_from_distributivity(load("CH4"), suites.PROOF_SEMANTICS)
        assert len(res.violations) == 2

    @pytest.mark.parametrize("name", ["CH2", "CH4", "CH5", "M4", "CYC5", "C5D"])
    def test_holds_on_all_triples(self, load, name):
        res = suites.idempotence_from_distributivity(load(name), suites.PROOF_SEMANTICS,
                                                     all_pairs=True)
        assert res.ok


class TestSuiteMachinery:
    def test_members_complete_small(self, load):
        ops, complete = suites.members(load("PS2"), OpClass.PSEUDO_T_NORM, suites.PROOF_SEMANTICS)
        assert complete and len(ops) == 1728

    def test_members_sampled_large(self, load):
        ops, complete = suites.members(load("PC8"), OpClass.PSEUDO_T_NORM, suites.PROOF_SEMANTICS)
        assert not complete and len(ops) > suites.HEAD

    def test_result_records(self):
        res = suites.SuiteResult("x")
        res.add(True, "a")
        res.add(False, "b")
        assert res.checked == 2 and res.violations == ["b"] and not res.ok


# -- randomized laws ---------------------------------------------------------

FIXTURE = st.sampled_from(ALL_FIXTURES)


@st.composite
def relabelled(draw):
    t = formats.fixture(draw(FIXTURE))
    perm = draw(st.permutations(range(t.n)))
    return t, perm


@settings(max_examples=40, deadline=None)
@given(relabelled())
def test_relabelling_preserves_structure(pair):
    t, perm = pair
    copy, iso = morph.relabel(t, list(perm))
    assert morph.is_isomorphism(iso)
    assert core.verify_trellis_axioms(copy)
    assert core.is_modular(copy).holds == core.is_modular(t).holds
    assert len(core.simple_cycles(copy.psoset)) == len(core.simple_cycles(t.psoset))


@settings(max_examples=40, deadline=None)
@given(relabelled())
def test_transport_of_drastic_and_meet(pair):
    t, perm = pair
    copy, iso = morph.relabel(t, list(perm))
    back = iso.inverse()
    assert construct.transport(construct.t_drastic(t), back) == construct.t_drastic(copy)
    assert construct.transport(meet_op(t), back).table == copy.meet


@settings(max_examples=60, deadline=None)
@given(FIXTURE, st.data())
def test_random_tables_respect_bounds_when_members(name, data):
    t = formats.fixture(name)
    cells = data.draw(st.lists(st.integers(0, t.n - 1), min_size=t.n * t.n, max_size=t.n * t.n))
    table = [cells[i * t.n:(i + 1) * t.n] for i in range(t.n)]
    # symmetrize and put the neutral element in place
    for x in range(t.n):
        for y in range(x):
            table[x][y] = table[y][x]
        table[t.top][x] = table[x][t.top] = x
    op = OpTable(table, t)
    assert is_commutative(op)
    if is_member(op, OpClass.PSEUDO_T_NORM, suites.PROOF_SEMANTICS):
        assert pointwise_leq(construct.t_drastic(t), op)
        assert pointwise_leq(op, meet_op(t))
    if is_member(op, OpClass.T_NORM):
        assert is_associative(op)


@settings(max_examples=30, deadline=None)
@given(FIXTURE, st.integers(0, 2**16))
def test_sampled_members_satisfy_suites(name, seed):
    t = formats.fixture(name)
    for op in suites.sample_ops(t, OpClass.PSEUDO_T_NORM, suites.PROOF_SEMANTICS, k=3, seed=seed):
        assert pointwise_leq(op, meet_op(t))
        assert all(op(t.bottom, x) == t.bottom for x in range(t.n))
