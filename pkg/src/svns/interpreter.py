"""Statement language for the interactive console.

Statements::

    let NAME = EXPR          bind (``NAME = EXPR`` is accepted too)
    print EXPR [:t]          show a value; ``:t`` selects the tabular layout
    EXPR                     evaluate and show the result, if any
    save PATH | load PATH    write / replay a session script
    list | help | quit

Expressions, loosest binding first: comparisons ``<= >= == !=`` (not
chainable), then ``+``/``-`` (union, difference; left-associative), then
``&`` (intersection), then prefix ``~`` (complement).  Postfix forms are
method calls ``A.setElement('a', (0.8, 0.2, 0.1))``, image ``f(A)`` and
inverse image ``f^-1(B)``.  Constructors: ``universe(...)``,
``nsset(...)``, ``mapping(...)`` and ``random(U, seed)``.
"""

from __future__ import annotations

import ast
import copy
import random as _random
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable

from .errors import (
    BadSpec,
    EvalError,
    NeutrosophicError,
    ParseError,
    ScriptError,
    UnboundName,
)
from .mapping import NSMapping
from .nsset import DegreeTriple, NSSet, format_degree
from .universe import Universe

Value = Any

NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")
RESERVED = frozenset(
    {"let", "print", "save", "load", "list", "help", "quit", "exit",
     "universe", "nsset", "mapping", "random", "True", "False"}
)

_TOKEN = re.compile(
    r"""\s*(?:
        (?P<number>\d+\.\d*|\.\d+|\d+)
      | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
      | (?P<string>'(?:[^'\\]|\\.)*'|"(?:[^"\\]|\\.)*")
      | (?P<op><=|>=|==|!=|[~&+\-^().,\[\]=:])
    )""",
    re.VERBOSE,
)


@dataclass
class Token:
    kind: str  # number, name, string, op, end
    text: str
    pos: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        tokens.append(Token(kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


# -- syntax tree ------------------------------------------------------------

@dataclass
class Literal:
    value: Value


@dataclass
class Name:
    name: str
    pos: int


@dataclass
class Sequence_:
    items: list
    is_tuple: bool


@dataclass
class Unary:
    op: str
    operand: Any
    pos: int


@dataclass
class Binary:
    op: str
    left: Any
    right: Any
    pos: int


@dataclass
class Call:
    name: str
    args: list
    pos: int
    inverse: bool = False


@dataclass
class MethodCall:
    target: Any
    method: str
    args: list
    pos: int


COMPARISONS = ("<=", ">=", "==", "!=")


class Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        t = self.tokens[self.i]
        self.i += 1
        return t

    def at(self, text: str) -> bool:
        return self.tok.kind == "op" and self.tok.text == text

    def expect(self, text: str) -> Token:
        if not self.at(text):
            raise ParseError(f"expected {text!r}, found {self.tok.text or 'end of line'!r}", self.tok.pos)
        return self.advance()

    def expect_end(self) -> None:
        if self.tok.kind != "end":
            raise ParseError(f"unexpected {self.tok.text!r}", self.tok.pos)

    def expression(self):
        left = self.additive()
        if self.tok.kind == "op" and self.tok.text in COMPARISONS:
            op = self.advance()
            right = self.additive()
            if self.tok.kind == "op" and self.tok.text in COMPARISONS:
                raise ParseError("comparison operators cannot be chained", self.tok.pos)
            return Binary(op.text, left, right, op.pos)
        return left

    def additive(self):
        left = self.intersection()
        while self.at("+") or self.at("-"):
            op = self.advance()
            left = Binary(op.text, left, self.intersection(), op.pos)
        return left

    def intersection(self):
        left = self.unary()
        while self.at("&"):
            op = self.advance()
            left = Binary("&", left, self.unary(), op.pos)
        return left

    def unary(self):
        if self.at("~"):
            op = self.advance()
            return Unary("~", self.unary(), op.pos)
        return self.postfix()

    def postfix(self):
        node = self.primary()
        while self.at("."):
            self.advance()
            t = self.advance()
            if t.kind != "name":
                raise ParseError("expected a method name after '.'", t.pos)
            self.expect("(")
            node = MethodCall(node, t.text, self.arguments(")"), t.pos)
        return node

    def arguments(self, closer: str) -> list:
        args = []
        if self.at(closer):
            self.advance()
            return args
        while True:
            args.append(self.expression())
            if self.at(","):
                self.advance()
                if self.at(closer):
                    self.advance()
                    return args
                continue
            self.expect(closer)
            return args

    def primary(self):
        t = self.tok
        if t.kind == "number":
            self.advance()
            return Literal(_number(t.text))
        if t.kind == "string":
            self.advance()
            try:
                return Literal(ast.literal_eval(t.text))
            except (ValueError, SyntaxError):
                raise ParseError("invalid string literal", t.pos) from None
        if t.kind == "op" and t.text == "-" and self.tokens[self.i + 1].kind == "number":
            self.advance()
            return Literal(-_number(self.advance().text))
        if t.kind == "name":
            self.advance()
            if t.text in ("True", "False"):
                return Literal(t.text == "True")
            if self.at("^"):
                self.advance()
                self.expect("-")
                one = self.advance()
                if one.text != "1":
                    raise ParseError("expected '^-1'", one.pos)
                self.expect("(")
                return Call(t.text, self.arguments(")"), t.pos, inverse=True)
            if self.at("("):
                self.advance()
                return Call(t.text, self.arguments(")"), t.pos)
            return Name(t.text, t.pos)
        if self.at("["):
            self.advance()
            return Sequence_(self.arguments("]"), is_tuple=False)
        if self.at("("):
            self.advance()
            if self.at(")"):
                self.advance()
                return Sequence_([], is_tuple=True)
            first = self.expression()
            if self.at(")"):
                self.advance()
                return first
            if not self.at(","):
                raise ParseError(f"expected ')' or ',', found {self.tok.text!r}", self.tok.pos)
            self.advance()
            return Sequence_([first] + self.arguments(")"), is_tuple=True)
        raise ParseError(f"unexpected {t.text or 'end of line'!r}", t.pos)


def _number(text: str) -> int | float:
    return float(text) if "." in text else int(text)


# -- statements ---------------------------------------------------------------

@dataclass
class Let:
    name: str
    expr: Any


@dataclass
class Show:
    expr: Any
    tabular: bool = False
    explicit: bool = False


@dataclass
class Command:
    name: str
    argument: str = ""


def parse_statement(line: str):
    """Parse one line; returns ``None`` for blank lines and comments."""
    stripped = line.strip()
    if not stripped or stripped.startswith("#"):
        return None
    word, _, rest = stripped.partition(" ")
    if word in ("quit", "exit", "list", "help") and not rest.strip():
        return Command(word)
    if word in ("save", "load"):
        path = rest.strip()
        if len(path) >= 2 and path[0] == path[-1] and path[0] in "'\"":
            path = path[1:-1]
        if not path:
            raise ParseError(f"{word} requires a file path", len(line))
        return Command(word, path)

    parser = Parser(line)
    first = parser.tok
    if first.kind == "name" and first.text == "let":
        parser.advance()
        return _parse_binding(parser)
    if first.kind == "name" and parser.tokens[1].kind == "op" and parser.tokens[1].text == "=":
        return _parse_binding(parser)
    if first.kind == "name" and first.text == "print":
        parser.advance()
        if parser.tok.kind == "end":
            raise ParseError("print requires an expression", parser.tok.pos)
        expr = parser.expression()
        tabular = False
        if parser.at(":"):
            parser.advance()
            spec = parser.advance()
            if spec.text != "t":
                raise ParseError(f"unknown format specifier {spec.text!r}", spec.pos)
            tabular = True
        parser.expect_end()
        return Show(expr, tabular, explicit=True)
    expr = parser.expression()
    parser.expect_end()
    return Show(expr)


def _parse_binding(parser: Parser) -> Let:
    t = parser.advance()
    if t.kind != "name" or not NAME_RE.match(t.text):
        raise ParseError("expected a name to bind", t.pos)
    if t.text in RESERVED:
        raise ParseError(f"{t.text!r} is a reserved word", t.pos)
    parser.expect("=")
    expr = parser.expression()
    parser.expect_end()
    return Let(t.text, expr)


# -- evaluation ---------------------------------------------------------------

def random_nsset(universe: object, seed: int) -> NSSet:
    """Every degree drawn uniformly from [0, 1] and rounded to two decimals."""
    rng = _random.Random(seed)
    result = NSSet(universe if isinstance(universe, Universe) else Universe(universe))
    for u in result.universe:
        result.set_element(u, [round(rng.random(), 2) for _ in range(3)])
    return result


def _universe_of(value: Value) -> Universe:
    if isinstance(value, (NSSet, NSMapping)):
        raise EvalError(f"expected a universe, got {_kind(value)}")
    return value if isinstance(value, Universe) else Universe(value)


CONSTRUCTORS: dict[str, Callable[..., Value]] = {
    "universe": Universe,
    "nsset": NSSet,
    "mapping": NSMapping,
}


def _m(attr: str) -> Callable[..., Value]:
    def call(obj, *args):
        return getattr(obj, attr)(*args)
    return call


def _prop(attr: str) -> Callable[..., Value]:
    def call(obj):
        return getattr(obj, attr)
    return call


METHODS: dict[type, dict[str, Callable[..., Value]]] = {
    Universe: {
        "get": _m("get"),
        "cardinality": _m("cardinality"),
        "isSubset": _m("is_subset"),
    },
    NSSet: {
        "setMembership": _m("set_membership"),
        "setIndeterminacy": _m("set_indeterminacy"),
        "setNonMembership": _m("set_non_membership"),
        "setElement": _m("set_element"),
        "setDegree": _m("set_degree"),
        "getUniverse": _m("get_universe"),
        "get": _m("get"),
        "getElement": _m("get_element"),
        "getDegree": _m("get_degree"),
        "getMembership": _m("get_membership"),
        "getIndeterminacy": _m("get_indeterminacy"),
        "getNonMembership": _m("get_non_membership"),
        "setEmpty": _m("set_empty"),
        "setAbsolute": _m("set_absolute"),
        "cardinality": _m("cardinality"),
        "isNSsubset": _m("is_ns_subset"),
        "isNSsuperset": _m("is_ns_superset"),
        "isNSdisjoint": _m("is_disjoint"),
        "NSunion": _m("union"),
        "NSintersection": _m("intersection"),
        "NScomplement": _m("complement"),
        "NSdifference": _m("difference"),
    },
    NSMapping: {
        "getDomain": _prop("domain"),
        "getCodomain": _prop("codomain"),
        "getMap": _m("get_map"),
        "getValue": _m("get_value"),
        "setValue": _m("set_value"),
        "getFibre": _m("fibre"),
        "NSimage": _m("image"),
        "NScounterimage": _m("counterimage"),
    },
}

# snake_case spellings of the library API work as well
for _cls, _table in METHODS.items():
    for _attr in dir(_cls):
        if not _attr.startswith("_") and callable(getattr(_cls, _attr)):
            _table.setdefault(_attr, _m(_attr))


def _kind(value: Value) -> str:
    if isinstance(value, Universe):
        return "universe"
    if isinstance(value, NSSet):
        return "neutrosophic set"
    if isinstance(value, NSMapping):
        return "mapping"
    return type(value).__name__


@dataclass
class Session:
    """Named bindings of universes, neutrosophic sets and mappings."""

    bindings: dict[str, Value] = field(default_factory=dict)
    closed: bool = False

    def bind(self, name: str, value: Value) -> None:
        if not NAME_RE.match(name) or name in RESERVED:
            raise BadSpec(f"invalid binding name {name!r}")
        if not isinstance(value, (Universe, NSSet, NSMapping)):
            raise EvalError(f"only universes, neutrosophic sets and mappings can be bound, not {_kind(value)}")
        self.bindings.pop(name, None)
        self.bindings[name] = value

    def lookup(self, name: str) -> Value:
        try:
            return self.bindings[name]
        except KeyError:
            raise UnboundName(name) from None

    def copy(self) -> "Session":
        return Session(copy.deepcopy(self.bindings), self.closed)

    def random_nsset(self, universe_name: str, seed: int) -> NSSet:
        return random_nsset(_universe_of(self.lookup(universe_name)), seed)

    def evaluate(self, node) -> Value:
        if isinstance(node, Literal):
            return node.value
        if isinstance(node, Name):
            return self.lookup(node.name)
        if isinstance(node, Sequence_):
            items = [self.evaluate(n) for n in node.items]
            return tuple(items) if node.is_tuple else items
        if isinstance(node, Unary):
            operand = self.evaluate(node.operand)
            if not isinstance(operand, NSSet):
                raise EvalError(f"operator ~ requires a neutrosophic set, got {_kind(operand)}")
            return ~operand
        if isinstance(node, Binary):
            return _binary(node.op, self.evaluate(node.left), self.evaluate(node.right))
        if isinstance(node, Call):
            return self._call(node)
        if isinstance(node, MethodCall):
            target = self.evaluate(node.target)
            table = METHODS.get(type(target))
            if table is None or node.method not in table:
                raise EvalError(f"{_kind(target)} has no method {node.method!r}")
            args = [self.evaluate(a) for a in node.args]
            try:
                return table[node.method](target, *args)
            except TypeError as exc:
                raise EvalError(f"{node.method}: {exc}") from None
        raise EvalError(f"cannot evaluate {node!r}")

    def _call(self, node: Call) -> Value:
        args = [self.evaluate(a) for a in node.args]
        if not node.inverse and node.name in CONSTRUCTORS:
            return CONSTRUCTORS[node.name](*args)
        if not node.inverse and node.name == "random":
            if len(args) != 2 or not isinstance(args[1], int):
                raise EvalError("random expects a universe and an integer seed")
            return random_nsset(_universe_of(args[0]), args[1])
        f = self.lookup(node.name)
        if not isinstance(f, NSMapping):
            raise EvalError(f"{node.name!r} is a {_kind(f)}, not a mapping")
        if len(args) != 1 or not isinstance(args[0], NSSet):
            raise EvalError("a mapping is applied to exactly one neutrosophic set")
        return f.counterimage(args[0]) if node.inverse else f.image(args[0])


def _binary(op: str, left: Value, right: Value) -> Value:
    if op in ("+", "-", "&"):
        if not (isinstance(left, NSSet) and isinstance(right, NSSet)):
            raise EvalError(
                f"operator {op} requires two neutrosophic sets, got {_kind(left)} and {_kind(right)}"
            )
        return {"+": left.union, "-": left.difference, "&": left.intersection}[op](right)
    if isinstance(left, (Universe, NSSet, NSMapping)) or isinstance(right, (Universe, NSSet, NSMapping)):
        if type(left) is not type(right):
            raise EvalError(f"cannot compare {_kind(left)} with {_kind(right)}")
        if isinstance(left, NSMapping) and op in ("<=", ">="):
            raise EvalError(f"operator {op} is not defined for mappings")
        if isinstance(left, Universe) and op in ("<=", ">="):
            return left.is_subset(right) if op == "<=" else right.is_subset(left)
    try:
        if op == "<=":
            return left <= right
        if op == ">=":
            return left >= right
        if op == "==":
            return left == right
        return left != right
    except TypeError:
        raise EvalError(f"cannot compare {_kind(left)} with {_kind(right)}") from None


# -- rendering of results -----------------------------------------------------

def show(value: Value, tabular: bool = False) -> str:
    """Console text for a value; empty for ``None``."""
    if tabular:
        if not isinstance(value, NSSet):
            raise EvalError(f"the t format applies only to neutrosophic sets, not {_kind(value)}")
        return value.render_tabular()
    if value is None:
        return ""
    if isinstance(value, (NSSet, Universe, NSMapping)):
        return str(value)
    if isinstance(value, bool):
        return str(value)
    if isinstance(value, DegreeTriple):
        return "[" + ", ".join(format_degree(x) for x in value) + "]"
    if isinstance(value, float):
        return format_degree(value)
    if isinstance(value, dict):
        return "{" + ", ".join(f"{k!r}: {_inner(v)}" for k, v in value.items()) + "}"
    return str(value)


def _inner(value: Value) -> str:
    return show(value) if isinstance(value, DegreeTriple) else repr(value)


# -- persistence --------------------------------------------------------------

_PLAIN_LABEL = re.compile(r"[^\s{}\[\]()<>,;'\"\\]+\Z")
_PLAIN_DICT_LABEL = re.compile(r"[^\s{}\[\]()<>,;'\"\\:|\-]+\Z")


def _labels_literal(labels, plain: re.Pattern) -> str:
    if all(plain.match(label) for label in labels):
        return '"' + ",".join(labels) + '"'
    return "[" + ", ".join(repr(label) for label in labels) + "]"


def literal(value: Value) -> str:
    """Constructor expression that rebuilds ``value`` exactly."""
    if isinstance(value, Universe):
        return f"universe({_labels_literal(value, _PLAIN_LABEL)})"
    if isinstance(value, NSSet):
        triples = ", ".join(
            "(" + ",".join(format_degree(x) for x in t) + ")" for t in value.get().values()
        )
        return f'nsset({_labels_literal(value.universe, _PLAIN_LABEL)}, "{triples}")'
    if isinstance(value, NSMapping):
        dom = _labels_literal(value.domain, _PLAIN_LABEL)
        cod = _labels_literal(value.codomain, _PLAIN_LABEL)
        pairs = value.get_map()
        if all(_PLAIN_DICT_LABEL.match(x) for x in [*pairs, *pairs.values()]):
            values = '"' + ", ".join(f"{u}:{v}" for u, v in pairs.items()) + '"'
        else:
            values = "[" + ", ".join(repr(v) for v in pairs.values()) + "]"
        return f"mapping({dom}, {cod}, {values})"
    raise EvalError(f"cannot serialize a {_kind(value)}")


def session_script(session: Session) -> str:
    return "".join(f"let {name} = {literal(v)}\n" for name, v in session.bindings.items())


def save_session(session: Session, path: str | Path) -> None:
    Path(path).write_text(session_script(session), encoding="utf-8")


def load_session(session: Session, path: str | Path) -> Session:
    """Replay a script on a copy of ``session``; the first failing line aborts
    the whole load with :class:`ScriptError`."""
    text = Path(path).read_text(encoding="utf-8")
    for lineno, line in enumerate(text.splitlines(), start=1):
        try:
            session, _ = eval_statement(session, line)
        except (NeutrosophicError, ValueError, TypeError, IndexError) as exc:
            raise ScriptError(lineno, exc) from exc
    return session


HELP = __doc__.split("\n", 2)[2].strip()


def _execute(session: Session, stmt) -> str:
    if stmt is None:
        return ""
    if isinstance(stmt, Let):
        # bind a copy so `let C = A` never aliases A
        session.bind(stmt.name, copy.deepcopy(session.evaluate(stmt.expr)))
        return ""
    if isinstance(stmt, Show):
        return show(session.evaluate(stmt.expr), stmt.tabular)
    name = stmt.name
    if name in ("quit", "exit"):
        session.closed = True
        return ""
    if name == "help":
        return HELP
    if name == "list":
        return "\n".join(f"{n}: {_kind(v)}" for n, v in session.bindings.items())
    if name == "save":
        save_session(session, stmt.argument)
        return ""
    loaded = load_session(session, stmt.argument)
    session.bindings = loaded.bindings
    return ""


def eval_statement(session: Session, line: str) -> tuple[Session, str]:
    """Run one statement against a copy of ``session``.

    Returns the updated session and the text to display.  On error the
    exception propagates and ``session`` is left untouched.
    """
    stmt = parse_statement(line)
    work = session.copy()
    output = _execute(work, stmt)
    return work, output
