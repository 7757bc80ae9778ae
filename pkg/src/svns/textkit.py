"""Free-format text helpers shared by the universe, set and mapping constructors."""

from __future__ import annotations

import re
from typing import Any, Iterable, Mapping, Sequence, Tuple, Union

from .errors import MalformedPair, MalformedTriple

SubstitutionTable = Union[Mapping[str, str], Iterable[Tuple[str, str]]]

_GROUP = re.compile(r"\[(.*?)\]|\((.*?)\)", re.DOTALL)
_NUMBER = re.compile(r"[+-]?(?:\d+(?:\.\d*)?|\.\d+)")

# Whitespace around a key/value separator is glue, not a pair separator.
_SPACED_ARROW = re.compile(r"\s*(\|->|->|:)\s*")

_DICT_STRIP = {"'": "", '"': "", "(": "", ")": "", "[": "", "]": "", "{": "", "}": ""}
_DICT_SEPARATORS = {" ": ",", "\t": ",", "\n": ",", ";": ","}
_DICT_ARROWS = {"|->": ":", "->": ":"}


def substitute_all(text: str, table: SubstitutionTable) -> str:
    """Apply each (pattern, replacement) of ``table`` globally, in order.

    An empty replacement deletes every occurrence of its pattern.
    """
    pairs = table.items() if isinstance(table, Mapping) else table
    for pattern, replacement in pairs:
        text = text.replace(pattern, replacement)
    return text


def parse_number(text: str) -> float:
    """Parse a plain decimal (optional sign, no exponent)."""
    text = text.strip()
    if not _NUMBER.fullmatch(text):
        raise MalformedTriple(f"not a decimal number: {text!r}")
    return float(text)


def parse_triples_list(text: str) -> list[tuple[float, ...]]:
    """Extract every ``(...)`` or ``[...]`` group of numbers from ``text``.

    Groups are matched non-greedily and returned in textual order; arity is
    left to the caller.

    >>> parse_triples_list("[0.5,0.3,0.2],(0.6,0.2,0.3);[0.4,0.2,0.7]")
    [(0.5, 0.3, 0.2), (0.6, 0.2, 0.3), (0.4, 0.2, 0.7)]
    """
    triples = []
    for square, round_ in _GROUP.findall(text):
        body = square if square else round_
        if not body.strip():
            triples.append(())
            continue
        triples.append(tuple(parse_number(part) for part in body.split(",")))
    return triples


def is_extended_dict(value: Any) -> bool:
    return isinstance(value, str) and (":" in value or "->" in value)


def normalize_extended_dict(text: str) -> str:
    text = substitute_all(text, _DICT_STRIP)
    text = _SPACED_ARROW.sub(r"\1", text.strip())
    text = substitute_all(text, _DICT_SEPARATORS)
    while ",," in text:
        text = text.replace(",,", ",")
    return substitute_all(text, _DICT_ARROWS)


def parse_extended_dict(text: str) -> dict[str, str]:
    """Parse ``"a->2, b|->1; c:2"`` style text into an ordered ``dict``.

    Quotes and brackets are dropped, any of ``, ; whitespace`` separates
    pairs and any of ``: -> |->`` separates key from value.  A repeated key
    keeps its first position and takes the last value.
    """
    result: dict[str, str] = {}
    for fragment in normalize_extended_dict(text).split(","):
        if not fragment:
            continue
        parts = fragment.split(":")
        if len(parts) != 2 or not parts[0] or not parts[1]:
            raise MalformedPair(f"invalid key/value pair: {fragment!r}")
        key, value = parts
        result[key] = value
    return result


def wrap_text(text: str, max_length: int) -> str:
    """Greedy word wrap; no produced line is longer than ``max_length``
    unless it holds a single over-long word."""
    if max_length < 1:
        raise ValueError("max_length must be positive")
    lines: list[str] = []
    current = ""
    for word in text.split():
        # `current` carries one trailing space, so this bounds the line at max_length.
        if current and len(current) + len(word) > max_length:
            lines.append(current.rstrip())
            current = ""
        current += word + " "
    lines.append(current.rstrip())
    return "\n".join(lines)


def split_words(text: str, separators: Sequence[str] = ",;") -> list[str]:
    """Split on whitespace and ``separators`` after dropping bracket characters."""
    table = {c: "" for c in "{}[]()"}
    table.update({s: " " for s in separators})
    return substitute_all(text, table).split()
