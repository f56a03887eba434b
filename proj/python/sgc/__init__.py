"""Spectrum-preserving graph coarsening.

Thin re-export of the compiled ``_core`` extension. Graph, Partition and the
coarsening results are C++ objects; spectra come back as numpy arrays.
"""

from ._core import *  # noqa: F401,F403
from ._core import (  # noqa: F401
    Error,
    GraphError,
    InvalidArgumentError,
    IoError,
    ParseError,
    __doc__,
)

__all__ = [name for name in dir() if not name.startswith("_")]
