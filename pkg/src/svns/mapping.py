"""Total mappings between universe sets and the neutrosophic image/inverse image."""

from __future__ import annotations

from collections.abc import Mapping
from collections.abc import Set as AbstractSet

from .errors import (
    BadArity,
    BadCodomain,
    BadDomain,
    BadSpec,
    IncompatibleDomain,
    NeutrosophicError,
    NoParameters,
    UnknownCodomainElement,
    UnknownDomainElement,
    UniverseMismatch,
    UnorderedInput,
    ValueCountMismatch,
    ValueOutsideCodomain,
)
from .nsset import ABSOLUTE_TRIPLE, NSSet, RULE
from .textkit import is_extended_dict, parse_extended_dict, split_words
from .universe import Universe

COLUMN_WIDTH = 28

_UNORDERED = (
    "type set is not suitable because the values of the mapping "
    "must be assigned in a specific order"
)


def _label_order(label: str) -> tuple:
    """Sort key for inferred codomains: numeric labels by value, then text."""
    try:
        return (0, float(label), label)
    except ValueError:
        return (1, 0.0, label)


def _universe_arg(spec: object, error: type[NeutrosophicError], which: str) -> Universe:
    try:
        return Universe(spec)
    except UnorderedInput:
        raise
    except NeutrosophicError as exc:
        raise error(
            f"the {which} parameter of the constructor method must be a universe set ({exc})"
        ) from exc


class NSMapping:
    """A total function between two universe sets.

    Constructor forms::

        NSMapping(domain, codomain, values)  # values aligned with the domain,
                                             # or a dict / extended dictionary
        NSMapping({"a": 2, "b": 1})          # domain = keys, codomain = distinct values
        NSMapping("a->2, b|->1; c:2")        # extended dictionary text
        NSMapping(other)                     # copy
    """

    def __init__(self, *args: object):
        if len(args) == 0:
            raise NoParameters("constructor method must have at least one parameter")
        if len(args) == 1:
            self._init_single(args[0])
        elif len(args) == 3:
            self._init_explicit(*args)
        else:
            raise BadArity("the number of parameters do not match those of the constructor method")

    def _init_single(self, spec: object) -> None:
        if isinstance(spec, NSMapping):
            self._domain = spec._domain
            self._codomain = spec._codomain
            self._map = dict(spec._map)
            return
        if isinstance(spec, str):
            if not is_extended_dict(spec):
                raise BadSpec(f"invalid parameter: {spec!r} is not an extended dictionary")
            spec = parse_extended_dict(spec)
        if isinstance(spec, AbstractSet):
            raise UnorderedInput(_UNORDERED)
        if not isinstance(spec, Mapping):
            raise BadSpec("the type of the parameter do not match those of the constructor method")
        pairs = {str(k): str(v) for k, v in spec.items()}
        self._domain = Universe(list(pairs))
        # distinct values in order of first occurrence
        self._codomain = Universe(sorted(set(pairs.values()), key=_label_order))
        self._map = pairs

    def _init_explicit(self, domain: object, codomain: object, values: object) -> None:
        self._domain = _universe_arg(domain, BadDomain, "first")
        self._codomain = _universe_arg(codomain, BadCodomain, "second")
        if isinstance(values, Mapping) or is_extended_dict(values):
            other = NSMapping(values)
            if set(other._domain) != set(self._domain):
                raise IncompatibleDomain(
                    "the indicated domain is incompatible with the definition of the mapping"
                )
            if not other._codomain.is_subset(self._codomain):
                raise ValueOutsideCodomain(
                    "the indicated codomain is incompatible with the definition of the mapping"
                )
            self._map = {u: other._map[u] for u in self._domain}
            return
        if isinstance(values, AbstractSet):
            raise UnorderedInput(_UNORDERED)
        if isinstance(values, str):
            labels = split_words(values)
        elif isinstance(values, (list, tuple)):
            labels = [str(v) for v in values]
        else:
            raise BadSpec("the third parameter of the constructor method must express a match")
        if len(labels) != len(self._domain):
            raise ValueCountMismatch(
                "the number of values passed does not coincide with the cardinality "
                "of the declared domain"
            )
        if not set(labels) <= set(self._codomain):
            raise ValueOutsideCodomain("one or more values do not belong to the declared codomain")
        self._map = dict(zip(self._domain, labels))

    # -- access -----------------------------------------------------------

    @property
    def domain(self) -> Universe:
        return self._domain

    @property
    def codomain(self) -> Universe:
        return self._codomain

    def get_domain(self) -> list[str]:
        return self._domain.get()

    def get_codomain(self) -> list[str]:
        return self._codomain.get()

    def get_map(self) -> dict[str, str]:
        return dict(self._map)

    def get_value(self, u: object) -> str:
        u = str(u)
        if u not in self._map:
            raise UnknownDomainElement("non-existent element in the domain of the mapping")
        return self._map[u]

    def set_value(self, u: object, v: object) -> None:
        u, v = str(u), str(v)
        if u not in self._map:
            raise UnknownDomainElement("non-existent element in the domain of the mapping")
        if v not in self._codomain:
            raise UnknownCodomainElement("non-existent element in the codomain of the mapping")
        self._map[u] = v

    def fibre(self, v: object) -> list[str]:
        """Domain elements sent to ``v``, in domain order."""
        v = str(v)
        if v not in self._codomain:
            raise UnknownCodomainElement("non-existent element in the codomain of the mapping")
        return [u for u in self._domain if self._map[u] == v]

    # -- neutrosophic transforms ------------------------------------------

    def image(self, nset: NSSet) -> NSSet:
        """Push ``nset`` forward: sup of membership and indeterminacy, inf of
        non-membership over each fibre; ``(1, 1, 0)`` where the fibre is empty."""
        if nset.universe != self._domain:
            raise UniverseMismatch(
                "the neutrosophic set must be defined on the domain of the mapping"
            )
        result = NSSet(self._codomain)
        for v in self._codomain:
            fibre = self.fibre(v)
            if not fibre:
                result.set_element(v, ABSOLUTE_TRIPLE)
                continue
            triples = [nset.get_element(u) for u in fibre]
            result.set_element(
                v,
                (
                    max(t.mu for t in triples),
                    max(t.sigma for t in triples),
                    min(t.omega for t in triples),
                ),
            )
        return result

    def counterimage(self, nset: NSSet) -> NSSet:
        """Pull ``nset`` back along the mapping (each degree composed with it)."""
        if nset.universe != self._codomain:
            raise UniverseMismatch(
                "the neutrosophic set must be defined on the codomain of the mapping"
            )
        result = NSSet(self._domain)
        for u in self._domain:
            result.set_element(u, nset.get_element(self._map[u]))
        return result

    inverse_image = counterimage

    # -- comparison and rendering -----------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NSMapping):
            return NotImplemented
        # codomains compare as label sets: an inferred codomain has no natural order
        if self._domain != other._domain or set(self._codomain) != set(other._codomain):
            return False
        return all(self._map[u] == other._map[u] for u in self._domain)

    def __ne__(self, other: object) -> bool:
        if not isinstance(other, NSMapping):
            return NotImplemented
        return not self == other

    __hash__ = None  # type: ignore[assignment]

    def __str__(self) -> str:
        w = COLUMN_WIDTH
        s = f"\n {str(self._domain):>{w}}   ->   {str(self._codomain):<{w}}\n{RULE}\n"
        for u in self._domain:
            s += f" {u:>{w}}  |->  {self._map[u]:<{w}}\n"
        return s

    render = __str__

    def __repr__(self) -> str:
        return f"Neutrosophic mapping: {self}"


def mappings_equal(f: NSMapping, g: NSMapping) -> bool:
    return f == g


def mappings_differ(f: NSMapping, g: NSMapping) -> bool:
    return f != g
