"""Exception taxonomy shared across the package.

Command line exit codes hang off the two intermediate classes: InputError
means the input itself is bad (exit 2), ResourceError means a configured
cap or search budget ran out (exit 3).
"""


class SoficlabError(Exception):
    """Base class for every error raised by this package."""


class InputError(SoficlabError):
    """Invalid or malformed input."""


class ResourceError(SoficlabError):
    """A configured resource cap or search budget was exceeded."""


class ParseError(InputError):
    """A text input (presentation, graph, word, substitution) failed to parse."""


class EmptyShift(InputError):
    """The presented shift is empty: nothing survives trimming."""


class AlphabetMismatch(InputError):
    """A word uses symbols outside the expected alphabet."""


class UnknownSymbol(InputError):
    """An operation named a symbol the alphabet does not contain."""


class SymbolClash(InputError):
    """A symbol to be introduced is already present in the alphabet."""


class TooShort(InputError):
    """A word is shorter than the window a sliding block map needs."""


class NotPrimitive(InputError):
    """A substitution required to be primitive is not."""


class UAbsent(InputError):
    """The probe word is not in the language under inspection."""


class UnknownEdge(InputError):
    """A bracket symbol names an edge the graph does not have."""


class NotIdempotent(InputError):
    """The designated element is not idempotent."""


class UnknownObject(InputError):
    """The designated object is not an object of the category."""


class CapExceeded(ResourceError):
    """An enumeration grew past its configured cap."""


class SearchTimeout(ResourceError):
    """A backtracking search exhausted its node budget."""
