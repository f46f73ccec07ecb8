"""Small exact linear algebra over a field.

Only what the rank certificates need: incremental row reduction over Q or a
prime field.  Rows are lists of ring elements; the ring must support
division.
"""

from __future__ import annotations

from .coeffring import Ring

__all__ = ["RankTracker", "rank_of"]


class RankTracker:
    """Feed rows one at a time; keeps a reduced row per pivot column."""

    def __init__(self, ncols: int, ring: Ring):
        if not ring.has_division:
            raise ValueError("rank computation needs a field")
        self.ncols = ncols
        self.ring = ring
        self.pivots: dict[int, list] = {}  # pivot column -> normalized row

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def add(self, row) -> bool:
        """Reduce a row against the current space; True if it was new."""
        R = self.ring
        if len(row) != self.ncols:
            raise ValueError("row length mismatch")
        row = list(row)
        for col in sorted(self.pivots):
            c = row[col]
            if R.is_zero(c):
                continue
            prow = self.pivots[col]
            for t in range(col, self.ncols):
                row[t] = R.sub(row[t], R.mul(c, prow[t]))
        for col, c in enumerate(row):
            if not R.is_zero(c):
                inv = R.inv(c)
                self.pivots[col] = [R.mul(inv, v) for v in row]
                return True
        return False


def rank_of(rows, ncols: int, ring: Ring) -> int:
    tr = RankTracker(ncols, ring)
    for row in rows:
        tr.add(row)
    return tr.rank
