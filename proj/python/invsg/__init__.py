"""Python interface to the involutory semigroup toolkit."""

import json as _json
import os as _os
import sys as _sys

try:
    from . import _invsg
except ImportError:
    _dir = _os.environ.get("INVSG_EXTENSION_DIR")
    if not _dir:
        raise
    _sys.path.insert(0, _dir)
    import _invsg

InvsgError = _invsg.InvsgError
Semigroup = _invsg.Semigroup
load = _invsg.load
from_table = _invsg.from_table
parse_cayley_json = _invsg.parse_cayley_json
classify = _invsg.classify
satisfies = _invsg.satisfies
tsl_divides = _invsg.tsl_divides
greens = _invsg.greens
cli = _invsg.cli


def analyze(spec, reduct=None, budget=100_000_000, max_iota=8, timings=True):
    """Run the INFB decision pipeline on a spec string and return the report as a dict."""
    return _json.loads(_invsg.analyze_json(spec, reduct, budget, max_iota, timings))


__all__ = [
    "InvsgError",
    "Semigroup",
    "analyze",
    "classify",
    "cli",
    "from_table",
    "greens",
    "load",
    "parse_cayley_json",
    "satisfies",
    "tsl_divides",
]
