"""Exact rank over Q for sparse integer matrices."""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping


def _primitive(row: dict) -> dict:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    return {k: v // g for k, v in row.items()}


def _integral(row: Mapping) -> dict:
    den = 1
    for v in row.values():
        if isinstance(v, Fraction):
            den = den * v.denominator // gcd(den, v.denominator)
    return {k: int(v * den) for k, v in row.items() if v}


_PRIME = (1 << 61) - 1


def rank_mod_p(rows: Iterable[Mapping[object, int]], p: int = _PRIME) -> int:
    """Rank over F_p of integer rows; a lower bound for the rank over Q."""
    pivots: dict = {}
    for raw in rows:
        row = {k: v % p for k, v in raw.items() if v % p}
        while row:
            col = min(row)
            piv = pivots.get(col)
            if piv is None:
                inv = pow(row[col], -1, p)
                pivots[col] = {k: v * inv % p for k, v in row.items()}
                break
            f = row[col]
            for k, v in piv.items():
                nv = (row.get(k, 0) - f * v) % p
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
    return len(pivots)


def rank(rows: Iterable[Mapping]) -> int:
    """Rank of the matrix whose rows are sparse maps column -> rational entry.

    Shortcut: the rank mod p never exceeds the rank over Q, which never exceeds
    min(#rows, #columns). When the first reaches the last the answer is exact.
    Otherwise fall back to fraction-free elimination.
    """
    rows = [_integral(r) for r in rows]
    cols = set()
    for r in rows:
        cols.update(r)
    bound = min(len(rows), len(cols))
    if rank_mod_p(rows) == bound:
        return bound
    return rank_exact(rows)


def rank_exact(rows: Iterable[Mapping]) -> int:
    """Fraction-free elimination: each incoming row is reduced against the
    stored pivots by integer cross-multiplication, then made primitive.
    """
    pivots: dict = {}
    for raw in rows:
        row = _integral(raw)
        while row:
            col = min(row)
            piv = pivots.get(col)
            if piv is None:
                pivots[col] = _primitive(row)
                break
            a, b = piv[col], row[col]
            g = gcd(a, b)
            ma, mb = a // g, b // g
            new = {k: v * ma for k, v in row.items()}
            for k, v in piv.items():
                nv = new.get(k, 0) - v * mb
                if nv:
                    new[k] = nv
                else:
                    new.pop(k, None)
            row = _primitive(new) if new else new
    return len(pivots)
