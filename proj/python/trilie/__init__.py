"""Exact-arithmetic toolkit for finite-dimensional 3-Lie algebras.

All computation happens in the compiled extension; this package only
re-exports it. ``run`` drives the same operations as the ``trilie``
command-line tool and returns ``(exit_code, report)``; pass
``format="json"`` to get machine-readable reports with rationals kept
exact as strings.
"""

from trilie._core import (
    ParseError,
    canonicalize,
    commands,
    property_names,
    run,
    usage,
)

__all__ = [
    "ParseError",
    "canonicalize",
    "commands",
    "property_names",
    "run",
    "usage",
]
__version__ = "0.1.0"
