"""Left quaternion Fourier transform and classical/Mustard convolution on cyclic grids."""
from .errors import (BadMagic, FieldFormatError, ParseError, QconvError, RootsNotEqual,
                     RootsNotPerpendicular, ShapeMismatch, TruncatedPayload, UnsupportedFormat,
                     ZeroVector)
from .field import REFLECTIONS, QField, ReflectionIndex
from .quaternion import I, J, K, ONE, Quaternion, Root, RootPair, anticommutator, make_root
from .qft import dft_left, fast_qft, idft_left, qft
from .conv import (classical_convolve, classical_via_mustard_equal, classical_via_mustard_general,
                   classical_via_mustard_perp, convolution_spectrum, correlation_spectrum,
                   cross_correlate, mustard_convolve, mustard_via_classical)
from . import _backend

__version__ = "0.1.0"

backend = _backend.kernels.NAME

__all__ = [
    "Quaternion", "Root", "RootPair", "ONE", "I", "J", "K", "make_root", "anticommutator",
    "QField", "ReflectionIndex", "REFLECTIONS",
    "dft_left", "idft_left", "fast_qft", "qft",
    "classical_convolve", "cross_correlate", "mustard_convolve", "mustard_via_classical",
    "classical_via_mustard_equal", "classical_via_mustard_perp",
    "classical_via_mustard_general", "convolution_spectrum", "correlation_spectrum",
    "QconvError", "ZeroVector", "ShapeMismatch", "RootsNotPerpendicular", "RootsNotEqual",
    "ParseError", "FieldFormatError", "BadMagic", "TruncatedPayload", "UnsupportedFormat",
]
