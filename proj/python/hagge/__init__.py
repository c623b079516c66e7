"""Exact areal-coordinate verifier for the eight-circle orthocentre construction.

Thin convenience layer over the compiled core: each call returns the decoded
JSON report plus the process-style exit code the command line would have used
(0 all good, 1 at least one check failed). Invalid input raises ``ValueError``.
"""

from __future__ import annotations

import json as _json
from typing import Any

from . import _core

__all__ = ["verify", "fuzz", "special", "figure", "InputError"]

InputError = _core.InputError


def _decode(result: Any) -> dict[str, Any]:
    report = _json.loads(result.json)
    report["exit_code"] = result.exit_code
    return report


def verify(
    triangle: str = "4,5,6",
    point: str = "1,1,1",
    *,
    sides: bool = False,
    symbolic: bool = False,
    generic_point: bool = False,
    budget: int = 1_000_000,
    allow_exterior: bool = False,
) -> dict[str, Any]:
    """Run the checklist on one instance (exact rational, or symbolic proof)."""
    return _decode(
        _core.verify(triangle, point, sides, symbolic, generic_point, budget, allow_exterior)
    )


def fuzz(count: int = 100, seed: int = 0, max_coord: int = 40) -> dict[str, Any]:
    """Verify randomly sampled instances; deterministic for a fixed seed."""
    return _decode(_core.fuzz(count, seed, max_coord))


def special(which: str = "h", triangle: str = "4,5,6", *, sides: bool = False) -> dict[str, Any]:
    """Run a degenerate starting point: ``h`` (orthocentre) or ``k`` (symmedian)."""
    return _decode(_core.special(which, triangle, sides))


def figure(
    triangle: str = "4,5,6",
    point: str = "1,1,1",
    out: str = "fig.svg",
    *,
    size: int = 800,
    labels: bool = True,
    sides: bool = False,
) -> dict[str, Any]:
    """Render the construction as a standalone SVG file."""
    return _decode(_core.figure(triangle, point, out, size, labels, sides))
