"""Ordered finite universe sets."""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from collections.abc import Set as AbstractSet

from .errors import BadSpec, DuplicateElement, EmptyUniverse, InvalidFormatSpec, UnorderedInput
from .textkit import split_words


def _labels_from(spec: object) -> list[str]:
    if isinstance(spec, Universe):
        return list(spec)
    if isinstance(spec, str):
        return split_words(spec)
    if isinstance(spec, AbstractSet):
        raise UnorderedInput(
            "type set is not suitable because the elements of the universe set "
            "must be assigned in a specific order"
        )
    if isinstance(spec, Iterable) and not isinstance(spec, (bytes, bytearray)):
        return [str(e) for e in spec]
    return [str(spec)]


class Universe:
    """A non-empty ordered collection of distinct text labels.

    Accepts a list or tuple of values, another universe, a free-format
    string (``"{a, b; c d}"``), or the elements themselves as separate
    arguments.  Every element is stored as its ``str``.

    >>> print(Universe("1", 2, 3, "4"))
    { 1, 2, 3, 4 }
    """

    __slots__ = ("_elements",)

    def __init__(self, *args: object):
        if len(args) == 0:
            raise EmptyUniverse("the universe set must contain at least an element")
        if len(args) == 1:
            labels = _labels_from(args[0])
        else:
            labels = [str(a) for a in args]
        if not labels:
            raise EmptyUniverse("the universe set must contain at least an element")
        if any(label == "" for label in labels):
            raise BadSpec("the elements of a universe set must be non-empty labels")
        if len(set(labels)) != len(labels):
            raise DuplicateElement("the universe set cannot contain repeated elements")
        self._elements = tuple(labels)

    def get(self) -> list[str]:
        return list(self._elements)

    elements = get

    def cardinality(self) -> int:
        return len(self._elements)

    def is_subset(self, other: "Universe") -> bool:
        """Order-insensitive inclusion of the element labels."""
        return set(self._elements) <= set(Universe(other)._elements)

    def __len__(self) -> int:
        return len(self._elements)

    def __iter__(self) -> Iterator[str]:
        return iter(self._elements)

    def __contains__(self, label: object) -> bool:
        return str(label) in self._elements

    def __getitem__(self, index: int) -> str:
        return self._elements[index]

    def __eq__(self, other: object) -> bool:
        # sequence equality: order matters
        if not isinstance(other, Universe):
            return NotImplemented
        return self._elements == other._elements

    def __ne__(self, other: object) -> bool:
        if not isinstance(other, Universe):
            return NotImplemented
        return not self == other

    def __hash__(self) -> int:
        return hash(self._elements)

    # immutable: copies may share
    def __copy__(self) -> "Universe":
        return self

    def __deepcopy__(self, memo: dict) -> "Universe":
        return self

    def __str__(self) -> str:
        return "{ " + ", ".join(self._elements) + " }"

    def __format__(self, spec: str) -> str:
        try:
            return format(str(self), spec)
        except ValueError as exc:
            raise InvalidFormatSpec(f"invalid format specifier {spec!r}: {exc}") from None

    def __repr__(self) -> str:
        return f"Universe set: {self}"


def universes_equal(u: Universe, v: Universe) -> bool:
    return u == v


def universes_differ(u: Universe, v: Universe) -> bool:
    return u != v
