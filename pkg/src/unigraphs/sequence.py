"""Degree sequences, Erdos-Gallai slack profile, conjugates.

Indices follow two conventions: Python indexing of ``DegreeSequence`` is
0-based, while ``k`` in slack/EG lists and ``j`` in ``conjugate``/``delta``
count terms (the k-th inequality involves the first k terms).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from . import _core
from .errors import NotGraphic, SequenceError


class DegreeSequence:
    """Nonincreasing sequence of nonnegative integers backed by an int64 array."""

    __slots__ = ("terms",)

    def __init__(self, terms: Iterable[int]):
        arr = np.array(terms if not isinstance(terms, np.ndarray) else terms, dtype=np.int64)
        if arr.ndim != 1:
            raise SequenceError("degree sequence must be one-dimensional")
        if arr.size:
            if arr.min() < 0:
                raise SequenceError("negative term")
            if np.any(arr[1:] > arr[:-1]):
                raise SequenceError("terms must be in nonincreasing order; use normalize()")
        arr.setflags(write=False)
        self.terms = arr

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms.tolist())

    def __getitem__(self, i):
        return self.terms.tolist()[i] if isinstance(i, slice) else int(self.terms[i])

    def __eq__(self, other) -> bool:
        if isinstance(other, DegreeSequence):
            return np.array_equal(self.terms, other.terms)
        if isinstance(other, (tuple, list)):
            return self.as_tuple() == tuple(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.as_tuple())

    def __repr__(self) -> str:
        return f"DegreeSequence({self.as_tuple()})"

    def as_tuple(self) -> tuple[int, ...]:
        return tuple(self.terms.tolist())

    @property
    def n(self) -> int:
        return len(self.terms)

    def total(self) -> int:
        return int(self.terms.sum())

    def to_text(self) -> str:
        return ",".join(map(str, self.terms.tolist()))


def normalize(raw) -> DegreeSequence:
    """Sort into nonincreasing order (counting sort when values are O(n))."""
    arr = np.asarray(raw, dtype=np.int64).ravel() if not isinstance(raw, DegreeSequence) else raw.terms
    if arr.size == 0:
        return DegreeSequence(arr)
    if arr.min() < 0:
        raise SequenceError("negative term")
    top = int(arr.max())
    if top <= 4 * arr.size + 16:
        counts = np.bincount(arr, minlength=top + 1)
        out = np.repeat(np.arange(top, -1, -1, dtype=np.int64), counts[::-1])
    else:
        out = np.sort(arr)[::-1]
    return DegreeSequence(out)


_TOKEN = re.compile(r"\s*(\d+)(?:\s*\^\s*(\d+))?\s*$")


def parse_sequence(text: str) -> DegreeSequence:
    """Parse ``"4,2,2,2,2,2"`` or ``"4,2^5"`` (``k^a`` = a copies of k)."""
    text = text.strip()
    if not text:
        return DegreeSequence([])
    out: list[int] = []
    col = 1
    for tok in text.split(","):
        m = _TOKEN.match(tok)
        if not m:
            bad = next((i for i, ch in enumerate(tok) if not (ch.isdigit() or ch in " ^\t")), 0)
            raise SequenceError(f"cannot parse term {tok.strip()!r}", col + bad)
        value = int(m.group(1))
        reps = int(m.group(2)) if m.group(2) is not None else 1
        out.extend([value] * reps)
        col += len(tok) + 1
    return normalize(out)


def as_sequence(d) -> DegreeSequence:
    if isinstance(d, DegreeSequence):
        return d
    if isinstance(d, str):
        return parse_sequence(d)
    return normalize(d)


# ---- Erdos-Gallai ---------------------------------------------------------

@dataclass(frozen=True)
class EGProfile:
    """Equality profile of the Erdos-Gallai inequalities.

    ``eg``: ascending k with zero slack (always starts at 0); ``m``: m(d);
    ``conj``: d*_0..d*_{d_1}; ``slack``: RHS - LHS for k = 0..n.
    """

    eg: np.ndarray
    m: int
    conj: np.ndarray
    slack: np.ndarray
    graphic: bool
    conj_full: np.ndarray  # d*_j for j = 0..n+1, used by the scans

    @property
    def t(self) -> int:
        return int(self.eg[-1])

    def to_dict(self) -> dict:
        return {
            "eg": self.eg.tolist(),
            "m": self.m,
            "t": self.t,
            "slack": self.slack.tolist(),
            "conjugate": self.conj.tolist(),
        }


def eg_profile(d) -> EGProfile:
    d = as_sequence(d)
    terms = d.terms
    slack, conj_full = _core.eg_scan(terms)
    eg = np.flatnonzero(slack == 0).astype(np.int64)
    m = int(_core.m_index(terms))
    top = int(terms[0]) if len(terms) else 0
    if top <= len(terms) + 1:
        conj = conj_full[: top + 1]
    else:
        # a term above n+1: not graphic; conjugate reported only up to n+1
        conj = conj_full
    graphic = bool(int(terms.sum()) % 2 == 0 and (slack.min() >= 0 if slack.size else True))
    for a in (eg, conj, slack, conj_full):
        a.setflags(write=False)
    return EGProfile(eg=eg, m=m, conj=conj, slack=slack, graphic=graphic, conj_full=conj_full)


def is_graphic(d) -> bool:
    return eg_profile(d).graphic


def require_graphic(d) -> EGProfile:
    prof = eg_profile(d)
    if not prof.graphic:
        raise NotGraphic(f"{as_sequence(d).to_text()!r} is not graphic")
    return prof


def m_of(d) -> int:
    """m(d) = max{i : d_i >= i-1}; 0 for the empty sequence."""
    return int(_core.m_index(as_sequence(d).terms))


def conjugate(d) -> list[int]:
    """d*_j = #{i : d_i >= j} for j = 0..d_1 (d*_0 = n)."""
    return eg_profile(d).conj.tolist()


def delta(d, j: int) -> int:
    """#{i : i > j and d_i = j} (1-based positions)."""
    if j < 0:
        raise SequenceError("delta needs j >= 0")
    terms = as_sequence(d).terms
    return int(np.count_nonzero(terms[j:] == j))


def slack_direct(d) -> list[int]:
    """RHS - LHS of every EG inequality, straight from the definition (O(n^2))."""
    t = as_sequence(d).as_tuple()
    n = len(t)
    out = []
    for k in range(n + 1):
        lhs = sum(t[:k])
        rhs = k * (k - 1) + sum(min(k, x) for x in t[k:])
        out.append(rhs - lhs)
    return out
