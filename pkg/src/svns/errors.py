"""Exception hierarchy.

Every error raised by the package derives from :class:`NeutrosophicError`
and from the builtin exception a caller would naturally expect
(``ValueError`` for bad values, ``IndexError`` for missing elements and
wrong counts), so code written against either catches them.
"""


class NeutrosophicError(Exception):
    """Base class for all package errors."""


class BadSpec(NeutrosophicError, ValueError):
    """A constructor received an argument of an unusable kind or count."""


# text parsing

class MalformedTriple(NeutrosophicError, ValueError):
    """A delimited group does not contain comma-separated decimal numbers."""


class MalformedPair(NeutrosophicError, ValueError):
    """An extended-dictionary fragment is not a single key/value pair."""


# universes

class EmptyUniverse(NeutrosophicError, IndexError):
    pass


class DuplicateElement(NeutrosophicError, ValueError):
    pass


class UnorderedInput(NeutrosophicError, ValueError):
    pass


class InvalidFormatSpec(NeutrosophicError, ValueError):
    pass


# neutrosophic sets

class ArityMismatch(NeutrosophicError, IndexError):
    """Number of value triples differs from the universe cardinality."""


class NotATriple(NeutrosophicError, IndexError):
    pass


class WrongArity(NeutrosophicError, ValueError):
    """A single-element assignment did not receive exactly three degrees."""


class DegreeOutOfRange(NeutrosophicError, ValueError):
    def __init__(self, kind: str):
        super().__init__(f"incompatible {kind} degree value")
        self.kind = kind


class UnknownElement(NeutrosophicError, IndexError):
    pass


class UniverseMismatch(NeutrosophicError, ValueError):
    pass


class NotCallable(NeutrosophicError, ValueError):
    pass


# mappings

class NoParameters(NeutrosophicError, ValueError):
    pass


class BadArity(NeutrosophicError, IndexError):
    pass


class BadDomain(NeutrosophicError, ValueError):
    pass


class BadCodomain(NeutrosophicError, ValueError):
    pass


class ValueCountMismatch(NeutrosophicError, IndexError):
    pass


class ValueOutsideCodomain(NeutrosophicError, ValueError):
    pass


class IncompatibleDomain(NeutrosophicError, ValueError):
    pass


class UnknownDomainElement(NeutrosophicError, IndexError):
    pass


class UnknownCodomainElement(NeutrosophicError, IndexError):
    pass


# interpreter

class ParseError(NeutrosophicError, ValueError):
    """Statement text does not match the grammar.

    ``position`` is the zero-based column of the offending token.
    """

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at column {position + 1})")
        self.position = position


class UnboundName(NeutrosophicError, NameError):
    def __init__(self, name: str):
        super().__init__(f"name '{name}' is not defined")
        self.name = name


class EvalError(NeutrosophicError, TypeError):
    """An operator or method was applied to values it does not support."""


class ScriptError(NeutrosophicError):
    """A statement in a session script failed; wraps the original error."""

    def __init__(self, lineno: int, error: Exception):
        super().__init__(f"line {lineno}: {type(error).__name__}: {error}")
        self.lineno = lineno
        self.error = error
