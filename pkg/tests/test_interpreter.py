import io

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from strategies import mappings, nssets, universes
from svns import NSMapping, NSSet, Universe
from svns.cli import main, run_lines, run_repl
from svns.errors import (
    DegreeOutOfRange,
    EvalError,
    ParseError,
    ScriptError,
    UnboundName,
    UniverseMismatch,
)
from svns.interpreter import (
    Binary,
    Call,
    MethodCall,
    Name,
    Session,
    Unary,
    eval_statement,
    literal,
    load_session,
    parse_statement,
    random_nsset,
    save_session,
)

SETUP = [
    "let U = universe('a','b','c')",
    'let A = nsset(U, "(0.5,0.3,0.2), (0.6,0.2,0.3), (0.4,0.2,0.7)")',
    'let B = nsset(U, "(0.2,0.2,0.2), (0.4,0.1,0.6), (0.8,0.3,0.1)")',
]


def run(*lines, session=None):
    session = session if session is not None else Session()
    outputs = []
    for line in lines:
        session, out = eval_statement(session, line)
        outputs.append(out)
    return session, outputs


@pytest.fixture
def session():
    s, _ = run(*SETUP)
    return s


class TestParser:
    def expr(self, text):
        return parse_statement(text).expr

    def test_complement_binds_tightest(self):
        node = self.expr("A & ~B")
        assert isinstance(node, Binary) and node.op == "&"
        assert isinstance(node.right, Unary)

    def test_intersection_over_union(self):
        node = self.expr("A + B & C")
        assert node.op == "+" and node.right.op == "&"

    def test_union_difference_left_associative(self):
        node = self.expr("A - B + C")
        assert node.op == "+" and node.left.op == "-"

    def test_comparison_loosest(self):
        node = self.expr("F == A & ~B")
        assert node.op == "==" and node.right.op == "&"

    def test_comparison_not_chainable(self):
        with pytest.raises(ParseError, match="chained") as info:
            parse_statement("A <= B <= C")
        assert info.value.position == 7

    def test_parentheses_group(self):
        node = self.expr("(A + B) & C")
        assert node.op == "&" and node.left.op == "+"

    def test_mapping_application(self):
        node = self.expr("f^-1(f(A))")
        assert isinstance(node, Call) and node.inverse
        assert isinstance(node.args[0], Call) and not node.args[0].inverse

    def test_method_chain(self):
        node = self.expr("f(A).cardinality()")
        assert isinstance(node, MethodCall) and isinstance(node.target, Call)

    def test_print_tabular(self):
        stmt = parse_statement("print A :t")
        assert stmt.tabular and isinstance(stmt.expr, Name)

    @pytest.mark.parametrize("line, position", [
        ("print A :x", 9),
        ("let = A", 4),
        ("A $ B", 2),
        ("A +", 3),
        ("nsset(U, (1,2", 13),
        ("f^-2(A)", 3),
    ])
    def test_parse_error_positions(self, line, position):
        with pytest.raises(ParseError) as info:
            parse_statement(line)
        assert info.value.position == position
        # offsets are 0-based, the message counts columns from 1
        assert f"column {position + 1}" in str(info.value)

    def test_reserved_word(self):
        with pytest.raises(ParseError, match="reserved"):
            parse_statement("let print = A")

    def test_blank_and_comment(self):
        assert parse_statement("   ") is None
        assert parse_statement("# note") is None


class TestEvaluation:
    def test_operator_results(self, session):
        _, out = run("print A + B", "print A & B", "print ~A", "F = A - B",
                     "print F <= A", "print F == A & ~B", session=session)
        assert out == [
            "< a/(0.5,0.3,0.2), b/(0.6,0.2,0.3), c/(0.8,0.3,0.1) >",
            "< a/(0.2,0.2,0.2), b/(0.4,0.1,0.6), c/(0.4,0.2,0.7) >",
            "< a/(0.2,0.7,0.5), b/(0.3,0.8,0.6), c/(0.7,0.8,0.4) >",
            "", "True", "True",
        ]

    def test_bare_expression_echoes(self, session):
        _, out = run("A.cardinality()", "A.getElement('a')", "U", session=session)
        assert out == ["3", "[0.5, 0.3, 0.2]", "{ a, b, c }"]

    def test_universe_comparison_is_inclusion(self, session):
        _, out = run("print universe('a b') <= U", "print U >= universe('c a')",
                     "print U == universe('c b a')", session=session)
        assert out == ["True", "True", "False"]

    def test_unbound_name(self):
        with pytest.raises(UnboundName, match="name 'X' is not defined"):
            run("print X")
        with pytest.raises(NameError):
            run("print X")

    def test_type_errors(self, session):
        with pytest.raises(EvalError):
            run("print A + U", session=session)
        with pytest.raises(EvalError):
            run("print ~U", session=session)
        with pytest.raises(EvalError):
            run("print A == U", session=session)
        with pytest.raises(EvalError):
            run("print A.nosuch()", session=session)
        with pytest.raises(EvalError):
            run("print A(B)", session=session)
        with pytest.raises(EvalError):
            run("print U :t", session=session)
        with pytest.raises(EvalError):
            run("let n = A.cardinality()", session=session)

    def test_core_errors_propagate(self, session):
        with pytest.raises(DegreeOutOfRange):
            run("A.setElement('a', (2, 0, 0))", session=session)
        with pytest.raises(UniverseMismatch):
            run("print A + nsset('x y z')", session=session)

    def test_failing_line_leaves_session_untouched(self, session):
        before = session.lookup("A").get()
        with pytest.raises(DegreeOutOfRange):
            eval_statement(session, "A.setElement('a', (0.1, 0.1, 7))")
        assert session.lookup("A").get() == before
        with pytest.raises(EvalError):
            eval_statement(session, "let A = A.cardinality()")
        assert isinstance(session.lookup("A"), NSSet)

    def test_rebinding_replaces(self, session):
        s, _ = run("let A = B", session=session)
        assert s.lookup("A") == s.lookup("B")
        assert list(s.bindings) == ["U", "B", "A"]

    def test_bindings_are_values(self, session):
        s, _ = run("let C = A", "A.setMembership('a', 0.9)", session=session)
        assert s.lookup("C").get_membership("a") == 0.5

    def test_list_and_help(self, session):
        _, (listing, text) = run("list", "help", session=session)
        assert listing == "U: universe\nA: neutrosophic set\nB: neutrosophic set"
        assert "let NAME = EXPR" in text

    def test_quit(self):
        s, out = run("quit")
        assert s.closed and out == [""]


class TestRandom:
    def test_deterministic(self):
        u = Universe([(i, j) for i in range(1, 6) for j in range(1, 4)])
        assert random_nsset(u, 7) == random_nsset(u, 7)

    @given(universes(max_size=15), st.integers(-2**40, 2**40))
    def test_valid_two_decimal_degrees(self, u, seed):
        s = random_nsset(u, seed)
        for t in s.get().values():
            for x in t:
                assert 0.0 <= x <= 1.0
                assert round(x, 2) == x

    def test_console_form(self, session):
        s, _ = run("let R = random(U, 3)", "let S = random(U, 3)", session=session)
        assert s.lookup("R") == s.lookup("S")
        with pytest.raises(EvalError):
            run("let R = random(U, 'x')", session=session)
        with pytest.raises(UnboundName):
            session.random_nsset("Nope", 1)


class TestPersistence:
    def test_literal_forms(self):
        assert literal(Universe("a b")) == 'universe("a,b")'
        assert literal(Universe([(1, 2)])) == "universe(['(1, 2)'])"
        assert literal(NSSet("a", "(0.5,0,1)")) == 'nsset("a", "(0.5,0.0,1.0)")'
        assert literal(NSMapping("a->2, b->1")) == 'mapping("a,b", "1,2", "a:2, b:1")'

    def test_round_trip_mixed_session(self, tmp_path, session):
        s, _ = run("let f = mapping('a,b,c', '1,2', 'c->2, a|->2; b|->1')",
                   "let g = mapping(\"x:'p-q', y:r\")", session=session)
        path = tmp_path / "s.txt"
        save_session(s, path)
        loaded = load_session(Session(), path)
        assert list(loaded.bindings) == list(s.bindings)
        for name, value in s.bindings.items():
            assert loaded.lookup(name) == value

    def test_save_and_load_statements(self, tmp_path, session):
        path = tmp_path / "session.txt"
        run(f"save {path}", session=session)
        fresh, _ = run(f'load "{path}"')
        assert fresh.bindings == session.bindings

    def test_load_error_reports_line(self, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_text('let A = nsset("a", "(2,0,0)")\n')
        with pytest.raises(ScriptError, match="line 1: DegreeOutOfRange") as info:
            load_session(Session(), path)
        assert info.value.lineno == 1
        assert isinstance(info.value.error, DegreeOutOfRange)

    def test_load_is_all_or_nothing(self, tmp_path, session):
        path = tmp_path / "partial.txt"
        path.write_text("let Z = universe('z')\n\nlet Y = nope\n")
        with pytest.raises(ScriptError, match="line 3"):
            eval_statement(session, f"load {path}")
        assert "Z" not in session.bindings

    @settings(max_examples=30)
    @given(universes(), nssets(), mappings())
    def test_round_trip_property(self, u, a, f):
        s = Session()
        s.bind("U", u)
        s.bind("A", a)
        s.bind("f", f)
        from svns.interpreter import session_script
        replayed = Session()
        for line in session_script(s).splitlines():
            replayed, _ = eval_statement(replayed, line)
        assert replayed.bindings == s.bindings


class TestCli:
    def test_run_lines_continues_after_errors(self):
        out, err = io.StringIO(), io.StringIO()
        status = run_lines(SETUP + ["print X", "A.setElement('a', (2,0,0))", "print A <= A"],
                           out, err)
        assert status == 0
        assert out.getvalue() == "True\n"
        assert err.getvalue() == (
            "UnboundName: name 'X' is not defined\n"
            "DegreeOutOfRange: incompatible membership degree value\n")

    def test_repl_empty_stream(self):
        out = io.StringIO()
        assert run_repl(io.StringIO(""), out, io.StringIO()) == 0
        assert out.getvalue() == ""

    def test_repl_stops_at_quit(self):
        out = io.StringIO()
        run_repl(io.StringIO("print universe('a')\nquit\nprint universe('b')\n"), out)
        assert out.getvalue() == "{ a }\n"

    def test_main_eval(self, capsys):
        assert main(["--eval", "print universe(' ( a b c , d ; e )').cardinality()"]) == 0
        assert capsys.readouterr().out == "5\n"

    def test_main_script_error(self, tmp_path, capsys):
        path = tmp_path / "s.txt"
        path.write_text("let U = universe('a')\nprint W\nprint U\n")
        assert main(["--script", str(path)]) == 1
        captured = capsys.readouterr()
        assert captured.out == ""
        assert captured.err == "line 2: UnboundName: name 'W' is not defined\n"

    def test_main_usage_errors(self, tmp_path, capsys):
        assert main(["--bogus"]) == 2
        assert main(["--script", "a", "--eval", "b"]) == 2
        assert main(["--script", str(tmp_path / "missing.txt")]) == 2
        assert "FileNotFoundError" in capsys.readouterr().err
