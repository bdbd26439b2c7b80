"""Exact (quasi) 2-norms over rational vectors, seeded axiom verification,
and the Cauchy-sequence completion with rigorous interval enclosures.

Thin re-export of the native module; see the project README for usage.
"""

try:
    from ._q2n import *  # noqa: F401,F403  (installed package layout)
    from ._q2n import __doc__ as _native_doc  # noqa: F401
except ImportError:  # in-tree build: extension sits on sys.path directly
    from _q2n import *  # noqa: F401,F403

__version__ = "0.1.0"
