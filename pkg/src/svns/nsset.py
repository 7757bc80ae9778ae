"""Single-valued neutrosophic sets over a finite universe."""

from __future__ import annotations

import enum
from decimal import Decimal
from typing import Callable, Iterable, NamedTuple, Union

from .errors import (
    ArityMismatch,
    BadSpec,
    DegreeOutOfRange,
    NotATriple,
    NotCallable,
    UnknownElement,
    UniverseMismatch,
    WrongArity,
)
from .textkit import parse_triples_list, split_words, wrap_text
from .universe import Universe

WRAP_WIDTH = 64
LABEL_WIDTH = 10
VALUE_WIDTH = 14
RULE = "-" * 64
TABLE_HEADER = "            |   membership   |  indeterminacy | non-membership |"


class Degree(enum.IntEnum):
    MEMBERSHIP = 0
    INDETERMINACY = 1
    NON_MEMBERSHIP = 2

    @property
    def label(self) -> str:
        return ("membership", "indeterminacy", "non-membership")[self]

    @classmethod
    def coerce(cls, kind: Union["Degree", int, str]) -> "Degree":
        if isinstance(kind, str):
            key = kind.strip().lower().replace("-", "_").replace(" ", "_")
            try:
                return cls[key.upper()]
            except KeyError:
                raise BadSpec(f"unknown degree kind {kind!r}") from None
        return cls(kind)


class DegreeTriple(NamedTuple):
    mu: float
    sigma: float
    omega: float


EMPTY_TRIPLE = DegreeTriple(0.0, 0.0, 1.0)
ABSOLUTE_TRIPLE = DegreeTriple(1.0, 1.0, 0.0)

def _as_degree(value: object, kind: Degree) -> float:
    try:
        r = float(value)  # type: ignore[arg-type]
    except (TypeError, ValueError):
        raise BadSpec(f"non-numeric {kind.label} degree value: {value!r}") from None
    if not 0 <= r <= 1:
        raise DegreeOutOfRange(kind.label)
    return r


def _as_triple(values: Iterable[object]) -> DegreeTriple:
    return DegreeTriple(*(_as_degree(v, Degree(i)) for i, v in enumerate(values)))


def format_degree(x: float) -> str:
    """Shortest round-trip decimal, always positional, at least one fractional digit."""
    text = repr(float(x))
    if "e" in text or "E" in text:
        text = format(Decimal(text), "f")
        if "." not in text:
            text += ".0"
    return text


def format_degree_tabular(x: float) -> str:
    """Like :func:`format_degree` but integral values lose their fraction (``0``, ``1``)."""
    if float(x).is_integer():
        return str(int(x))
    return format_degree(x)


class NSSet:
    """A single-valued neutrosophic set.

    ``NSSet(universe)`` gives the empty set (every element ``(0, 0, 1)``),
    ``NSSet(universe, values)`` binds the i-th triple of ``values`` to the
    i-th element and ``NSSet(other)`` copies.  ``values`` may be a sequence
    of 3-sequences or text such as ``"(0.3,0,0.5), [0.7,0.2,0.2]"``.

    Operators: ``+`` union, ``&`` intersection, ``~`` complement,
    ``-`` difference, ``<=``/``>=`` neutrosophic inclusion, ``==``/``!=``.
    Formatting with the ``t`` specifier gives the tabular layout.
    """

    def __init__(self, *args: object):
        if len(args) == 1:
            spec = args[0]
            if isinstance(spec, NSSet):
                self._universe = spec._universe
                self._degrees = dict(spec._degrees)
                return
            if not isinstance(spec, (Universe, str, list, tuple, set, frozenset)):
                raise BadSpec("value not compatible with the type universe set")
            self._universe = Universe(spec)
            self._degrees = {u: EMPTY_TRIPLE for u in self._universe}
        elif len(args) == 2:
            spec, values = args
            self._universe = NSSet(spec)._universe
            if isinstance(values, str):
                values = parse_triples_list(values)
            if not isinstance(values, (list, tuple)):
                raise BadSpec(
                    "the second parameter of the constructor method must contain "
                    "a list of triples of real numbers"
                )
            if len(values) != len(self._universe):
                raise ArityMismatch(
                    "the number of value triples does not correspond with the number of elements"
                )
            degrees = {}
            for u, t in zip(self._universe, values):
                if not isinstance(t, (list, tuple)) or len(t) != 3:
                    raise NotATriple(
                        "the second parameter of the constructor method must contain only triple"
                    )
                degrees[u] = _as_triple(t)
            self._degrees = degrees
        else:
            raise BadSpec("the number of parameters do not match those of the constructor method")

    # -- access -----------------------------------------------------------

    @property
    def universe(self) -> Universe:
        return self._universe

    def get_universe(self) -> list[str]:
        return self._universe.get()

    def get(self) -> dict[str, DegreeTriple]:
        return dict(self._degrees)

    def _label(self, u: object) -> str:
        u = str(u)
        if u not in self._degrees:
            raise UnknownElement("non-existent element")
        return u

    def get_element(self, u: object) -> DegreeTriple:
        return self._degrees[self._label(u)]

    def get_degree(self, u: object, kind: Union[Degree, int, str]) -> float:
        return self.get_element(u)[Degree.coerce(kind)]

    def get_membership(self, u: object) -> float:
        return self.get_degree(u, Degree.MEMBERSHIP)

    def get_indeterminacy(self, u: object) -> float:
        return self.get_degree(u, Degree.INDETERMINACY)

    def get_non_membership(self, u: object) -> float:
        return self.get_degree(u, Degree.NON_MEMBERSHIP)

    def cardinality(self) -> int:
        return len(self._universe)

    def __len__(self) -> int:
        return len(self._universe)

    # -- mutation ---------------------------------------------------------

    def set_degree(self, u: object, kind: Union[Degree, int, str], value: object) -> None:
        kind = Degree.coerce(kind)
        label = self._label(u)
        r = _as_degree(value, kind)
        triple = list(self._degrees[label])
        triple[kind] = r
        self._degrees[label] = DegreeTriple(*triple)

    def set_membership(self, u: object, mu: object) -> None:
        self.set_degree(u, Degree.MEMBERSHIP, mu)

    def set_indeterminacy(self, u: object, sigma: object) -> None:
        self.set_degree(u, Degree.INDETERMINACY, sigma)

    def set_non_membership(self, u: object, omega: object) -> None:
        self.set_degree(u, Degree.NON_MEMBERSHIP, omega)

    def set_element(self, u: object, triple: object) -> None:
        """Replace all three degrees of ``u``; nothing changes if any is invalid."""
        if isinstance(triple, str):
            triple = split_words(triple)
        else:
            triple = list(triple)  # type: ignore[call-overload]
        if len(triple) != 3:
            raise WrongArity("error in the number of parameters passed")
        label = self._label(u)
        self._degrees[label] = _as_triple(triple)

    def set_empty(self) -> None:
        self._degrees = {u: EMPTY_TRIPLE for u in self._universe}

    def set_absolute(self) -> None:
        self._degrees = {u: ABSOLUTE_TRIPLE for u in self._universe}

    # -- algebra ----------------------------------------------------------

    def _check_universe(self, other: "NSSet") -> None:
        if not isinstance(other, NSSet):
            raise BadSpec(f"expected a neutrosophic set, got {type(other).__name__}")
        if self._universe != other._universe:
            raise UniverseMismatch(
                "the two neutrosophic sets cannot be defined on different universe sets"
            )

    def _combine(
        self,
        other: "NSSet",
        fm: Callable[[float, float], float],
        fs: Callable[[float, float], float],
        fo: Callable[[float, float], float],
    ) -> "NSSet":
        self._check_universe(other)
        if not (callable(fm) and callable(fs) and callable(fo)):
            raise NotCallable("the last three parameters must be functions")
        result = NSSet(self._universe)
        for u in self._universe:
            a, b = self._degrees[u], other._degrees[u]
            result._degrees[u] = _as_triple(
                (fm(a.mu, b.mu), fs(a.sigma, b.sigma), fo(a.omega, b.omega))
            )
        return result

    def is_ns_subset(self, other: "NSSet") -> bool:
        self._check_universe(other)
        for u in self._universe:
            a, b = self._degrees[u], other._degrees[u]
            if a.mu > b.mu or a.sigma > b.sigma or a.omega < b.omega:
                return False
        return True

    def is_ns_superset(self, other: "NSSet") -> bool:
        self._check_universe(other)
        return other.is_ns_subset(self)

    def union(self, other: "NSSet") -> "NSSet":
        return self._combine(other, max, max, min)

    def intersection(self, other: "NSSet") -> "NSSet":
        return self._combine(other, min, min, max)

    def is_disjoint(self, other: "NSSet") -> bool:
        return self.intersection(other) == NSSet(self._universe)

    def complement(self) -> "NSSet":
        result = NSSet(self._universe)
        result._degrees = {
            u: DegreeTriple(t.omega, 1 - t.sigma, t.mu) for u, t in self._degrees.items()
        }
        return result

    def difference(self, other: "NSSet") -> "NSSet":
        self._check_universe(other)
        result = NSSet(self._universe)
        for u in self._universe:
            a, b = self._degrees[u], other._degrees[u]
            result._degrees[u] = DegreeTriple(
                min(a.mu, b.omega), min(a.sigma, 1 - b.sigma), max(a.omega, b.mu)
            )
        return result

    def __add__(self, other: "NSSet") -> "NSSet":
        if not isinstance(other, NSSet):
            return NotImplemented
        return self.union(other)

    def __and__(self, other: "NSSet") -> "NSSet":
        if not isinstance(other, NSSet):
            return NotImplemented
        return self.intersection(other)

    def __sub__(self, other: "NSSet") -> "NSSet":
        if not isinstance(other, NSSet):
            return NotImplemented
        return self.difference(other)

    def __invert__(self) -> "NSSet":
        return self.complement()

    def __le__(self, other: "NSSet") -> bool:
        if not isinstance(other, NSSet):
            return NotImplemented
        return self.is_ns_subset(other)

    def __ge__(self, other: "NSSet") -> bool:
        if not isinstance(other, NSSet):
            return NotImplemented
        return self.is_ns_superset(other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NSSet):
            return NotImplemented
        return self.is_ns_subset(other) and other.is_ns_subset(self)

    def __ne__(self, other: object) -> bool:
        if not isinstance(other, NSSet):
            return NotImplemented
        return not self == other

    __hash__ = None  # type: ignore[assignment]

    # -- rendering --------------------------------------------------------

    def render_simple(self) -> str:
        items = [
            f"{u}/({format_degree(t.mu)},{format_degree(t.sigma)},{format_degree(t.omega)})"
            for u, t in self._degrees.items()
        ]
        return wrap_text("< " + ", ".join(items) + " >", WRAP_WIDTH)

    def render_tabular(self) -> str:
        lines = ["", TABLE_HEADER, RULE]
        for u, t in self._degrees.items():
            cells = " | ".join(f"{format_degree_tabular(x):>{VALUE_WIDTH}}" for x in t)
            lines.append(f" {u:<{LABEL_WIDTH}} | {cells} |")
        lines.append(RULE)
        return "\n".join(lines) + "\n"

    def __str__(self) -> str:
        return self.render_simple()

    def __format__(self, spec: str) -> str:
        return self.render_tabular() if spec == "t" else self.render_simple()

    def __repr__(self) -> str:
        return f"Neutrosophic set: {self}"


def is_ns_disjoint(a: NSSet, b: NSSet) -> bool:
    return a.is_disjoint(b)


def ns_equal(a: NSSet, b: NSSet) -> bool:
    return a == b
