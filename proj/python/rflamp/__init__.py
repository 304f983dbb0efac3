"""Exact residual-finiteness computations for lamplighter groups Z/p wr Z.

Polynomials and group elements are passed as text in the same grammar the
CLI uses: terms like ``t^3+t+1`` or ``t^-2+1``, elements like ``(1+t, 0)``.
"""

from ._rflamp import *  # noqa: F401,F403
from ._rflamp import __version__  # noqa: F401
