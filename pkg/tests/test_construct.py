import pytest

from conftest import ALL_FIXTURES, ids
from trellisops import classify, construct, core, morph
from trellisops.binop import AssocMode, MonoMode, OpClass, OpTable, WeakSemantics, is_member
from trellisops.enumeration import enumerate_class

SIDE = WeakSemantics(MonoMode.UPPER, AssocMode.OWN_SIDE)


class TestDrastic:
    @pytest.mark.parametrize("name", ALL_FIXTURES)
    def test_is_t_norm(self, load, name):
        t = load(name)
        assert is_member(construct.t_drastic(t), OpClass.T_NORM)
        assert is_member(construct.s_drastic(t), OpClass.T_CONORM)

    def test_values(self, load):
        t = load("C5D")
        a, b = ids(t, "a", "b")
        td = construct.t_drastic(t)
        assert td(a, b) == t.bottom and td(a, t.top) == a
        sd = construct.s_drastic(t)
        assert sd(a, b) == t.top and sd(a, t.bottom) == a

    def test_cyc5_only_t_norm(self, load):
        t = load("CYC5")
        assert enumerate_class(t, OpClass.T_NORM) == [construct.t_drastic(t)]


class TestAtomCoatom:
    def test_t_coatom(self, load):
        t = load("TR8")
        d = t.index("d")
        op = construct.t_coatom(t, d)
        assert op(d, d) == d
        assert is_member(op, OpClass.T_NORM)

    def test_rejects_non_coatom(self, load):
        t = load("TR8")
        with pytest.raises(construct.NotACoatom):
            construct.t_coatom(t, t.index("a"))

    def test_s_atom(self, load):
        t = load("C5D")
        a = t.index("a")
        op = construct.s_atom(t, a)
        assert op(a, a) == a and is_member(op, OpClass.T_CONORM)

    def test_rejects_non_atom(self, load):
        t = load("C5D")
        with pytest.raises(construct.NotAnAtom):
            construct.s_atom(t, t.index("b"))


class TestParam:
    @pytest.mark.parametrize("name", ALL_FIXTURES)
    def test_meet_associative_e(self, load, name):
        t = load(name)
        for e in classify.classify_elements(t).meet_ass:
            assert is_member(construct.t_param(t, e), OpClass.PSEUDO_T_NORM, SIDE)
        for e in classify.classify_elements(t).join_ass:
            assert is_member(construct.s_param(t, e), OpClass.PSEUDO_T_CONORM, SIDE)

    def test_endpoints(self, load):
        t = load("TR8")
        assert construct.t_param(t, t.top).table == t.meet
        assert construct.t_param(t, t.bottom) == construct.t_drastic(t)
        assert construct.s_param(t, t.bottom).table == t.join

    def test_warning_for_bad_e(self, load, caplog):
        t = load("TR8")
        construct.t_param(t, t.index("e"))
        assert "not meet-associative" in caplog.text


class TestZ:
    @pytest.mark.parametrize("name", ["CH2", "M4", "C5D", "PC8", "PS1", "PS6", "CH5"])
    def test_modular(self, load, name):
        t = load(name)
        assert core.is_modular(t)
        assert is_member(construct.z_norm(t), OpClass.PSEUDO_T_NORM, SIDE)
        assert is_member(construct.z_conorm(t), OpClass.PSEUDO_T_CONORM, SIDE)

    def test_m4_values(self, load):
        t = load("M4")
        a, b = ids(t, "a", "b")
        z = construct.z_norm(t)
        assert z(a, b) == t.bottom and z(a, a) == t.bottom and z(a, t.top) == a

    def test_warns_off_modular(self, load, caplog):
        construct.z_norm(load("PS2"))
        assert "not modular" in caplog.text


class TestOrdinalSum:
    def test_tr8_at_d(self, load):
        t = load("TR8")
        d = t.index("d")
        sub, elements = construct.upper_interval(t, d)
        assert sorted(t.labels[e] for e in elements) == ["1", "d"]
        v = OpTable(sub.meet, sub)
        g = construct.ordinal_sum_norm(t, d, v)
        assert is_member(g, OpClass.PSEUDO_T_NORM, SIDE)
        assert g(d, d) == d
        assert g(t.index("e"), t.index("f")) == t.meet[t.meet[t.index("e")][t.index("f")]][d]

    def test_all_sub_norms_glue(self, load):
        t = load("CH5")
        for a in (1, 2, 3):
            sub, _ = construct.upper_interval(t, a)
            for v in enumerate_class(sub, OpClass.PSEUDO_T_NORM):
                g = construct.ordinal_sum_norm(t, a, v)
                assert is_member(g, OpClass.PSEUDO_T_NORM)

    def test_conorm(self, load):
        t = load("TR8")
        d = t.index("d")
        sub, _ = construct.lower_interval(t, d)
        for w in enumerate_class(sub, OpClass.PSEUDO_T_CONORM, SIDE)[:20]:
            g = construct.ordinal_sum_conorm(t, d, w, SIDE)
            assert is_member(g, OpClass.PSEUDO_T_CONORM, SIDE)

    def test_rejects_bounds_and_non_associative(self, load):
        t = load("C5D")
        sub = core.chain(["x", "y"])
        v = OpTable(sub.meet, sub)
        with pytest.raises(construct.NotAssociativeElement):
            construct.ordinal_sum_norm(t, t.top, v)
        with pytest.raises(construct.NotAssociativeElement):
            construct.ordinal_sum_norm(t, t.index("a"), v)

    def test_rejects_bad_sub_op(self, load):
        t = load("CH5")
        sub, _ = construct.upper_interval(t, 2)
        bad = OpTable(tuple((0,) * sub.n for _ in range(sub.n)), sub)
        with pytest.raises(construct.SubOpNotPseudoTNorm):
            construct.ordinal_sum_norm(t, 2, bad)

    def test_rejects_wrong_size(self, load):
        t = load("CH5")
        other = load("CH4")
        with pytest.raises(construct.ConstructionError):
            construct.ordinal_sum_norm(t, 2, OpTable(other.meet, other))

    def test_piecewise_agrees_on_chain(self, load):
        t = load("CH5")
        sub, _ = construct.upper_interval(t, 2)
        v = OpTable(sub.meet, sub)
        g = construct.ordinal_sum_norm(t, 2, v)
        assert construct.piecewise_mismatches(g, construct.ordinal_sum_norm_piecewise(t, 2, v)) == []

    @pytest.mark.parametrize("name", ALL_FIXTURES)
    def test_piecewise_agrees_everywhere(self, load, name):
        t = load(name)
        for a in sorted(classify.classify_elements(t).ass - {t.bottom, t.top}):
            sub, _ = construct.upper_interval(t, a)
            for v in enumerate_class(sub, OpClass.PSEUDO_T_NORM, SIDE):
                g = construct.ordinal_sum_norm(t, a, v, SIDE)
                p = construct.ordinal_sum_norm_piecewise(t, a, v)
                assert construct.piecewise_mismatches(g, p) == []


class TestTransport:
    def test_c5d_to_ps1(self, load):
        c5d, ps1 = load("C5D"), load("PS1")
        iso = morph.find_isomorphisms(c5d, ps1)[0]
        for f in enumerate_class(ps1, OpClass.PSEUDO_T_NORM):
            g = construct.transport(f, iso)
            assert g.carrier is c5d
            assert is_member(g, OpClass.PSEUDO_T_NORM)

    def test_identity_is_noop(self, load):
        t = load("TR8")
        op = construct.t_drastic(t)
        assert construct.transport(op, morph.identity(t)) == op

    def test_rejects_non_iso(self, load):
        t = load("CH4")
        bad = morph.TrellisMap(t, t, (0, 2, 1, 3))
        with pytest.raises(construct.NotAnIsomorphism):
            construct.transport(construct.t_drastic(t), bad)


class TestBuild:
    def test_dispatch(self, load):
        t = load("TR8")
        d = t.index("d")
        spec = construct.ConstructionSpec(construct.Kind.COATOM_T, element=d)
        assert construct.build(t, spec) == construct.t_coatom(t, d)
        assert construct.build(t, construct.ConstructionSpec(construct.Kind.Z)) == construct.z_norm(t)

    def test_missing_argument(self, load):
        with pytest.raises(construct.ConstructionError):
            construct.build(load("TR8"), construct.ConstructionSpec(construct.Kind.PARAM_T))
