"""Exception types shared across the package."""


class LexgenderError(Exception):
    """Base class for errors raised by this package."""


class TransportError(LexgenderError):
    """A live dictionary lookup failed (network or page-parse failure).

    Deliberately distinct from a word simply being absent from a source:
    mapping transport failures to "not found" would silently bias the
    majority vote, so callers must handle them explicitly.
    """


class DataFormatError(LexgenderError):
    """An input file (gold list, tagged corpus, snapshot, WNDB) is malformed."""
