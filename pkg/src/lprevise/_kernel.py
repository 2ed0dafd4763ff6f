"""Kernel selection.

The compiled ``_ckernel`` is used when it imported and the literal base fits in
64 bits; otherwise calls fall through to ``_pykernel``. Setting
``LPREVISE_PURE_PYTHON=1`` forces the fallback.
"""

import os

from . import _pykernel
from ._pykernel import CONSISTENT, INCONSISTENT, VIOLATED  # noqa: F401

try:
    if os.environ.get("LPREVISE_PURE_PYTHON", "") not in ("", "0"):
        raise ImportError("pure Python kernel forced")
    from . import _ckernel
except ImportError:
    _ckernel = None

COMPILED = _ckernel is not None
MAX_COMPILED_ATOMS = 32


def backend(n_atoms):
    if _ckernel is not None and n_atoms <= MAX_COMPILED_ATOMS:
        return _ckernel
    return _pykernel


def closure(rules, n_atoms, block, erase):
    return backend(n_atoms).closure(rules, n_atoms, block, erase)


def answer_sets(rules, n_atoms, naf, limit=0):
    return backend(n_atoms).answer_sets(rules, n_atoms, naf, limit)


def minimal_erasures(rules, n_atoms, plus, base):
    if bin(base).count("1") >= 63:
        return _pykernel.minimal_erasures(rules, n_atoms, plus, base)
    return backend(n_atoms).minimal_erasures(rules, n_atoms, plus, base)
