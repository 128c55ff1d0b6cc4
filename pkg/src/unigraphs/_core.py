"""Kernel backend selection.

The compiled extension is used when it imports and ``UNIGRAPHS_PURE`` is not
set; otherwise the pure-Python kernels. Graph kernels fall back to Python for
n > 64 regardless, since the compiled ones work on single machine words.
"""

from __future__ import annotations

import contextlib
import os

from . import _kpure

try:
    from . import _kext
except ImportError:  # extension not built
    _kext = None

BACKENDS = {"python": _kpure}
if _kext is not None:
    BACKENDS["cython"] = _kext

kernels = _kpure if (_kext is None or os.environ.get("UNIGRAPHS_PURE")) else _kext


def backend_name() -> str:
    return kernels.NAME


def set_backend(name: str) -> None:
    global kernels
    try:
        kernels = BACKENDS[name]
    except KeyError:
        raise ValueError(f"backend {name!r} unavailable; have {sorted(BACKENDS)}") from None


@contextlib.contextmanager
def using(name: str):
    prev = kernels.NAME
    set_backend(name)
    try:
        yield
    finally:
        set_backend(prev)


def canon_order(n, rows, colors=None):
    k = kernels if n <= 64 else _kpure
    return k.canon_order(n, rows, colors)


def find_induced(hn, hrows, pn, prows):
    k = kernels if hn <= 64 else _kpure
    return k.find_induced(hn, hrows, pn, prows)


def eg_scan(d):
    return kernels.eg_scan(d)


def eg_points(d):
    return kernels.eg_points(d)


def m_index(d):
    return kernels.m_index(d)


def hu_scan(d, eg, conj, both=False):
    return kernels.hu_scan(d, eg, conj, both)
