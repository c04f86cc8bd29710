import io
import json
import subprocess
import sys

import pytest

from trellisops import __version__, formats
from trellisops.cli import run_command


def construct_coatom(t, label):
    from trellisops import construct
    return construct.t_coatom(t, t.index(label))


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run_command(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def run_json(*argv):
    code, out, _ = run("--json", *argv)
    data = json.loads(out)
    assert data["schema"] == 1 and data["exit_code"] == code
    return code, data


class TestValidateInfo:
    def test_validate_fixture(self):
        code, out, _ = run("validate", "C5D")
        assert code == 0 and "bounded trellis on 5 elements" in out

    def test_validate_missing(self):
        code, _, err = run("validate", "nothere")
        assert code == 2 and "no such file" in err

    def test_validate_not_trellis(self, tmp_path):
        path = tmp_path / "x.trl"
        path.write_text("elements: a b\n")
        code, data = run_json("validate", str(path))
        assert code == 1 and data["bounded_trellis"] is False

    def test_parse_error_exit(self, tmp_path):
        path = tmp_path / "bad.trl"
        path.write_text("elements: 0 1\nrel: 0 9\n")
        code, data = run_json("validate", str(path))
        assert code == 2 and "unknown element" in data["error"]

    def test_info(self):
        code, data = run_json("info", "TR8")
        assert code == 0
        assert data["elements"]["meet_associative"] == ["0", "d", "1"]
        assert data["elements"]["coatoms"] == ["d", "e"]

    def test_info_cycles(self):
        code, out, _ = run("info", "CYC5")
        assert "cycles: (a b c)" in out

    def test_info_figure_and_dot(self, tmp_path):
        png, dot = tmp_path / "c.png", tmp_path / "c.dot"
        code, _, _ = run("info", "C5D", "--figure", str(png), "--dot", str(dot))
        assert code == 0 and png.stat().st_size > 0
        assert "style=dotted" in dot.read_text()


class TestTables:
    def test_meet_table_round_trips(self, load):
        code, out, _ = run("meet-table", "PC8")
        t = load("PC8")
        assert code == 0 and formats.parse_op(out, t).table == t.meet

    def test_join_table(self, load):
        _, data = run_json("join-table", "C5D")
        assert data["table"][1][3] == "1"

    def test_dual(self, load):
        code, out, _ = run("dual", "C5D")
        d = formats.parse_structure(out)
        assert d.label(d.bottom) == "1"


class TestCheckOp:
    def test_t_norm(self):
        code, data = run_json("check-op", "PC8", "PC8_T1", "--class", "tnorm")
        assert code == 0 and data["verdict"] == "holds"

    def test_param_counterexample(self, tmp_path, load):
        t = load("TR8")
        from trellisops import construct
        path = tmp_path / "te.csv"
        path.write_text(formats.serialize_op(construct.t_param(t, t.index("e"))))
        code, data = run_json("check-op", "TR8", str(path), "--class", "pseudo-tnorm")
        assert code == 1
        assert data["witness"]["witness"] == ["f", "d", "c"]
        assert data["witness"]["values"] == ["a", "0"]

    def test_semantics_flags(self):
        code, _, _ = run("check-op", "C5D", "C5D_G", "--class", "pseudo-tnorm",
                         "--assoc-mode", "all")
        assert code == 1  # not commutative in any reading
        code, out, _ = run("check-op", "C5D", "C5D_G", "--assoc-mode", "any")
        assert "weakly-associative: fails" in out and "witness (b, b, 1)" in out
        code, out, _ = run("check-op", "C5D", "C5D_G", "--assoc-mode", "all")
        assert "weakly-associative: holds" in out

    def test_bad_table(self, tmp_path):
        path = tmp_path / "t.csv"
        path.write_text("F 0 1\n0 0 0\n1 0 1\n")
        code, _, err = run("check-op", "C5D", str(path))
        assert code == 2 and "header" in err

    def test_figure(self, tmp_path):
        png = tmp_path / "t.png"
        code, _, _ = run("check-op", "C5D", "C5D_T", "--figure", str(png))
        assert code == 0 and png.exists()


class TestCompareDistrib:
    def test_incomparable(self):
        code, out, _ = run("compare", "PC8", "PC8_T1", "PC8_T2")
        assert code == 0 and out.startswith("incomparable")

    def test_distrib(self, tmp_path, load):
        from trellisops import construct
        t = load("M4")
        p1, p2 = tmp_path / "td.csv", tmp_path / "m.csv"
        p1.write_text(formats.serialize_op(construct.t_drastic(t)))
        from trellisops.binop import meet_op
        p2.write_text(formats.serialize_op(meet_op(t)))
        assert run("distrib", "M4", str(p1), str(p2))[0] == 0


class TestConstruct:
    def test_drastic(self, tmp_path, load):
        out = tmp_path / "td.csv"
        code, data = run_json("construct", "CYC5", "--kind", "drastic-t", "-o", str(out))
        assert code == 0 and "tnorm" in data["classes"]
        from trellisops import construct
        t = load("CYC5")
        assert formats.load_op(out, t) == construct.t_drastic(t)

    def test_param_needs_element(self):
        code, _, err = run("construct", "TR8", "--kind", "param-t")
        assert code == 2 and "needs element" in err

    def test_unknown_element(self):
        code, _, err = run("construct", "TR8", "--kind", "param-t", "--param", "zz")
        assert code == 2 and "unknown element" in err

    def test_ordinal(self, tmp_path):
        sub = tmp_path / "v.csv"
        sub.write_text("V,d,1\nd,d,d\n1,d,1\n")
        code, data = run_json("construct", "TR8", "--kind", "ordinal-t", "--param", "d",
                              "--sub-op", str(sub), "--assoc-mode", "side")
        assert code == 0 and "pseudo-tnorm" in data["classes"]

    def test_ordinal_bad_split(self, tmp_path):
        sub = tmp_path / "v.csv"
        sub.write_text("V,e,1\ne,e,e\n1,e,1\n")
        code, _, err = run("construct", "TR8", "--kind", "ordinal-t", "--param", "e",
                           "--sub-op", str(sub))
        assert code == 2

    def test_transport(self, tmp_path):
        code, data = run_json("construct", "C5D", "--kind", "transport", "--sub-op", "C5D_T",
                              "--target", "C5D")
        assert code == 0 and "tnorm" in data["classes"]


class TestEnumerate:
    def test_count_only(self):
        code, out, _ = run("enumerate", "PC8", "--class", "tnorm", "--count-only")
        lines = out.splitlines()
        assert code == 0 and lines[0] == "190" and lines[1].startswith("# tnorm")

    def test_joint(self):
        _, out, _ = run("enumerate", "PC8", "--class", "tnorm", "--count-only",
                        "--increasing", "joint")
        assert out.splitlines()[0] == "159"

    def test_list_and_extremes(self, tmp_path):
        code, data = run_json("enumerate", "M4", "--class", "tnorm", "--extremes",
                              "--out-dir", str(tmp_path))
        assert code == 0 and data["count"] == 4 and len(data["tables"]) == 4
        assert data["extremes"]["greatest"] is not None
        assert len(list(tmp_path.glob("T*.csv"))) == 4

    def test_limit(self):
        _, data = run_json("enumerate", "TR8", "--class", "tnorm", "--limit", "3")
        assert data["count"] == 3 and data["limited"]

    def test_bad_limit(self):
        assert run("enumerate", "TR8", "--class", "tnorm", "--limit", "0")[0] == 2

    def test_too_many_tables(self):
        code, _, err = run("enumerate", "PC8", "--class", "pseudo-tnorm")
        assert code == 2 and "1259712000" in err

    def test_bad_class(self):
        assert run("enumerate", "TR8", "--class", "nope")[0] == 2


class TestIsoTransport:
    def test_iso(self):
        code, data = run_json("iso", "C5D", "PS1")
        assert code == 0 and data["count"] >= 1

    def test_not_iso(self):
        assert run("iso", "CH4", "M4")[0] == 1

    def test_transport(self, tmp_path, load):
        from trellisops import construct
        op, out = tmp_path / "td.csv", tmp_path / "moved.csv"
        op.write_text(formats.serialize_op(construct.t_drastic(load("PS1"))))
        code, data = run_json("transport", "C5D", "PS1", str(op), "-o", str(out))
        assert code == 0 and data["classes_before"] == data["classes_after"]
        assert formats.load_op(out, load("C5D")) == construct.t_drastic(load("C5D"))

    def test_explicit_map(self, tmp_path, load):
        path = tmp_path / "m.csv"
        path.write_text(formats.serialize_op(construct_coatom(load("M4"), "a")))
        code, data = run_json("transport", "M4", "M4", str(path), "--map", "0=0,a=b,b=a,1=1")
        assert code == 0 and data["map"]["a"] == "b"
        assert data["table"][2][2] == "b"  # the coatom cell moved from a to b

    def test_bad_map(self, tmp_path, load):
        path = tmp_path / "m.csv"
        from trellisops.binop import meet_op
        path.write_text(formats.serialize_op(meet_op(load("M4"))))
        code, _, err = run("transport", "M4", "M4", str(path), "--map", "0=0,a=b")
        assert code == 2 and "map" in err


class TestReportRender:
    def test_report(self, tmp_path):
        code, data = run_json("report", "CYC5", "--out-dir", str(tmp_path))
        assert code == 0 and data["counts"]["tnorm"] == 1
        assert (tmp_path / "structure.png").stat().st_size > 0
        assert (tmp_path / "counts.png").exists()
        summary = json.loads((tmp_path / "summary.json").read_text())
        assert summary["cycles"] == [["a", "b", "c"]]

    def test_render_structure(self, tmp_path):
        png = tmp_path / "s.png"
        assert run("render", "PC8", "-o", str(png))[0] == 0 and png.exists()

    def test_render_op(self, tmp_path):
        svg = tmp_path / "t.svg"
        assert run("render", "PC8", "PC8_T2", "-o", str(svg))[0] == 0
        assert svg.read_text().lstrip().startswith("<?xml")


def test_version():
    code, out, _ = run("--version")
    assert code == 0


def test_no_command():
    assert run()[0] == 2


@pytest.mark.parametrize("argv", [["validate", "CH2"], ["--json", "info", "M4"]])
def test_console_script(argv):
    proc = subprocess.run([sys.executable, "-m", "trellisops.cli", *argv],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout
    assert __version__
