"""Exact ranks of sparse matrices over Q and GF(2)."""

from __future__ import annotations

from fractions import Fraction


def rank_rational(rows) -> int:
    """Rank over the rationals of a matrix given as sparse rows ``{col: value}``.

    Row reduction with :class:`fractions.Fraction`; no rounding anywhere.
    """
    pivots = {}
    rank = 0
    for raw in rows:
        row = {c: Fraction(v) for c, v in raw.items() if v}
        while row:
            c = min(row)
            piv = pivots.get(c)
            if piv is None:
                lead = row[c]
                pivots[c] = {k: v / lead for k, v in row.items()}
                rank += 1
                break
            factor = row[c]
            for k, v in piv.items():
                nv = row.get(k, 0) - factor * v
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
    return rank


def rank_gf2(rows) -> int:
    """Rank over GF(2) of a matrix given as integer bit masks (one per row)."""
    pivots = {}
    rank = 0
    for r in rows:
        while r:
            top = r.bit_length() - 1
            p = pivots.get(top)
            if p is None:
                pivots[top] = r
                rank += 1
                break
            r ^= p
    return rank
