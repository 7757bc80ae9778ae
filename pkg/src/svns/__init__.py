"""Single-valued neutrosophic sets, mappings between universes, and an algebra REPL."""

from .errors import NeutrosophicError
from .mapping import NSMapping
from .nsset import Degree, DegreeTriple, NSSet
from .universe import Universe

__all__ = ["Degree", "DegreeTriple", "NSMapping", "NSSet", "NeutrosophicError", "Universe"]
__version__ = "0.1.0"
