"""Exception hierarchy shared by the library and the command line."""


class QconvError(Exception):
    """Base class for all errors raised by qconv."""


class ZeroVector(QconvError, ValueError):
    """A root of -1 was requested from a (numerically) zero 3-vector."""


class ShapeMismatch(QconvError, ValueError):
    pass


class RootsNotPerpendicular(QconvError, ValueError):
    """The operation is only defined for anticommuting roots (a = 0)."""


class RootsNotEqual(QconvError, ValueError):
    """The operation needs a single root, i.e. mu == nu."""


class ParseError(QconvError, ValueError):
    pass


class FieldFormatError(QconvError, ValueError):
    """Malformed QF01 file."""


class BadMagic(FieldFormatError):
    pass


class TruncatedPayload(FieldFormatError):
    pass


class UnsupportedFormat(QconvError, ValueError):
    """Image file is not a P6 PPM with maxval 255."""
