"""DSOS / DCSOS polynomial decompositions.

Thin convenience layer over the compiled core: expressions go in as text
(`x1`, `x2`, ... with `+ - * ^` and rational literals like `1/4`), results
come back as plain dicts mirroring the CLI's JSON documents.
"""

import json as _json

from dcsos._core import (
    algorithms,
    canonical,
    decompose_json,
    direct_spectral_lambdas,
    verify_json,
)

__all__ = [
    "algorithms",
    "canonical",
    "decompose",
    "direct_spectral_lambdas",
    "verify",
]


def decompose(expr, algo="dsos-parity-improved", nvars=0, s="1"):
    """Decompose `expr` with the given algorithm and return the audited
    result document as a dict."""
    return _json.loads(decompose_json(expr, algo, nvars, s))


def verify(document):
    """Re-audit a result document (dict or JSON text); returns the report."""
    if not isinstance(document, str):
        document = _json.dumps(document)
    return _json.loads(verify_json(document))
