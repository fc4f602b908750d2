"""Minimum selective subsets of vertex-colored graphs.

Vertex and color ids are 0-based here; the text formats are 1-based.
"""

from ._selset import *  # noqa: F401,F403
from ._selset import Error, FormatError, PreconditionError, VerificationError  # noqa: F401
