import json
import subprocess
import sys

import pytest

from vcmax.cli import run
from vcmax.cube import ConceptClass
from vcmax.formats import format_cc, parse_cc, parse_cc_stream
from vcmax.liftshift import closed_below_maximum
from test_vc import STAR_PLUS_EDGE


@pytest.fixture
def cc_file(tmp_path):
    def write(c, name="c.cc"):
        p = tmp_path / name
        p.write_text(format_cc(c))
        return str(p)

    return write


def ok(*argv):
    code, out, err = run(list(argv))
    assert code == 0, err
    return out


def both(*argv):
    return ok(*argv), json.loads(ok(*argv, "--json"))


@pytest.mark.parametrize(
    "argv",
    [
        ["gen", "closed-below", "--n", "4", "--d", "2"],
        ["gen", "theorem6", "--n", "7", "--d", "2"],
        ["gen", "theorem6", "--n", "7", "--d", "2", "--witness"],
        ["gen", "symmetric", "--n", "2"],
        ["gen", "symmetric", "--n", "2", "--extension"],
        ["gen", "boolsum", "--n", "2", "--k", "2"],
        ["gen", "random", "--n", "5", "--d", "2", "--seed", "4"],
    ],
)
def test_gen_round_trip_and_json_parity(argv):
    text, js = both(*argv)
    c = parse_cc(text)
    assert c == parse_cc(format_cc(c))
    assert js["class"] == {"n": c.n, "vertices": c.strings()}


def test_random_generation_is_seeded():
    a = ok("gen", "random", "--n", "5", "--d", "2", "--seed", "1")
    assert a == ok("gen", "random", "--n", "5", "--d", "2", "--seed", "1")


def test_scalar_commands(cc_file):
    f = cc_file(closed_below_maximum(4, 2))
    assert both("vcdim", f) == ("2\n", {"result": 2})
    assert both("sauer", "--n", "4", "--d", "2") == ("11\n", {"result": 11})
    assert both("is-maximum", f) == ("true\n", {"result": True})
    assert ok("is-maximum", f, "--trees") == "true\n"
    assert ok("is-maximal", f) == "true\n"
    assert ok("count-cubes", f, "--k", "2") == "6\n"
    text, js = both("deficiency", f)
    assert js["result"] == {"d": 2, "sauer": 11, "size": 11, "deficiency": 0}
    assert text == "d: 2\nsauer: 11\nsize: 11\ndeficiency: 0\n"


def test_complement_counts(cc_file):
    text, js = both("count-cubes", cc_file(STAR_PLUS_EDGE), "--k", "0", "--complement")
    assert js["result"] == {"k": 0, "count": 6, "bound": 5}
    assert text == "k: 0\ncount: 6\nbound: 5\n"


def test_class_transforms(cc_file):
    f = cc_file(closed_below_maximum(4, 2))
    assert parse_cc(ok("project", f, "--drop", "4")) == closed_below_maximum(3, 2)
    assert parse_cc(ok("reduce", f, "--x", "1")) == closed_below_maximum(3, 1)
    assert len(parse_cc(ok("complement", f))) == 5
    g = cc_file(ConceptClass.from_strings(["11", "10"]), "s.cc")
    assert parse_cc(ok("shift", g)).strings() == ["00", "01"]
    assert parse_cc(ok("shift", g, "--x", "1")).strings() == ["00", "01"]
    assert parse_cc(ok("shift", g, "--x", "2")).strings() == ["10", "11"]


def test_graph_commands(cc_file):
    f = cc_file(closed_below_maximum(3, 2))
    text, js = both("ir", f, "--S", "1")
    assert text.startswith("graph IR_1") and text == js["dot"]
    assert js["is_tree"] and js["components"] == 1 and js["nodes"] == 3
    text, js = both("face-graph", f)
    assert text == js["dot"] and len(js["cubes"]) == 3


def test_enum_and_classify():
    text, js = both("enum-max", "--n", "3", "--d", "2")
    cs = parse_cc_stream(text)
    assert len(cs) == 8 and js["count"] == 8
    assert [c.strings() for c in cs] == [c["vertices"] for c in js["classes"]]
    assert ok("enum-max", "--n", "4", "--d", "2", "--count") == "400\n"
    assert len(parse_cc_stream(ok("classify-maximal", "--n", "4", "--d", "2"))) == 2


def test_embed_outputs(cc_file):
    f = cc_file(STAR_PLUS_EDGE)
    text, js = both("embed", f, "--k", "1")
    assert text.rstrip().endswith(f"{js['count']} classes found")
    body = "\n".join(line for line in text.splitlines() if not line.startswith("#") and "classes found" not in line)
    got = parse_cc_stream(body)
    assert [c.strings() for c in got] == [c["vertices"] for c in js["classes"]]
    assert js["target_vc"] == 3 and js["count"] > 0
    text, js = both("embed-deficiency", f)
    assert parse_cc(text).strings() == js["class"]["vertices"]
    assert js["deficiency"] == 1 and js["vc"] == 3


def test_boolsum_tree_file(tmp_path):
    tree = tmp_path / "t.txt"
    tree.write_text("1\n1 2\n1 3\n2 4\n")
    c = parse_cc(ok("gen", "boolsum", "--n", "2", "--k", "2", "--tree", str(tree)))
    assert len(c) == 11
    tree.write_text("1\n1 2\n1 2\n")
    assert run(["gen", "boolsum", "--n", "2", "--k", "2", "--tree", str(tree)])[0] == 1


@pytest.mark.parametrize(
    "argv",
    [
        ["frobnicate"],
        ["sauer", "--n", "3"],
        ["gen", "theorem6", "--n", "6", "--d", "2"],
        ["gen", "closed-below", "--n", "4"],
        ["vcdim", "/nonexistent.cc"],
        ["enum-max", "--n", "6", "--d", "2"],
        ["classify-maximal", "--n", "6", "--d", "2"],
    ],
)
def test_usage_and_precondition_errors_exit_1(argv):
    code, out, err = run(argv)
    assert code == 1 and out == "" and err


def test_bad_input_and_budget_exit_1(cc_file, tmp_path):
    bad = tmp_path / "bad.cc"
    bad.write_text("n=3\n01\n")
    assert run(["vcdim", str(bad)])[0] == 1
    f = cc_file(closed_below_maximum(4, 2))
    assert run(["embed", f, "--k", "2"])[0] == 1
    assert run(["embed", f, "--k", "1", "--budget", "0"])[0] == 1
    assert run(["is-maximum", cc_file(STAR_PLUS_EDGE, "m.cc"), "--trees"])[0] == 1


def test_broken_guarantee_exits_2(cc_file, monkeypatch):
    from vcmax import cli
    from vcmax.errors import InvariantViolation, StructuralError

    f = cc_file(closed_below_maximum(4, 2))
    for exc in (InvariantViolation, StructuralError):
        def boom(c, exc=exc):
            raise exc("forced")

        monkeypatch.setattr(cli, "vc_dimension", boom)
        code, out, err = run(["vcdim", f])
        assert code == 2 and out == "" and "forced" in err


def test_threads_flag_does_not_change_output(cc_file):
    f = cc_file(closed_below_maximum(4, 2))
    assert ok("vcdim", f, "--threads", "4") == ok("vcdim", f)


def test_module_entry_point(cc_file):
    f = cc_file(closed_below_maximum(4, 2))
    r = subprocess.run([sys.executable, "-m", "vcmax", "vcdim", f], capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout == "2\n"
