"""Exact sparse Gaussian elimination over the coefficient field."""

from __future__ import annotations

from .scalar import ONE, Scalar

__all__ = ["SparseEliminator", "sparse_rank"]


def _inv(c):
    return ONE / c if isinstance(c, Scalar) else c.inverse()


class SparseEliminator:
    """Incrementally row-reduces sparse vectors ``{key: coeff}``.

    Keys must be mutually comparable; the pivot of a reduced vector is its
    smallest key.
    """

    def __init__(self):
        self.pivots: dict = {}

    def reduce(self, vec: dict) -> dict:
        v = {k: c for k, c in vec.items() if c}
        while v:
            p = min(v)
            row = self.pivots.get(p)
            if row is None:
                return v
            f = v[p]
            for k, c in row.items():
                nv = v.get(k)
                nv = -(f * c) if nv is None else nv - f * c
                if nv:
                    v[k] = nv
                else:
                    v.pop(k, None)
        return v

    def add(self, vec: dict) -> bool:
        """Insert a vector; return False when it is dependent on earlier ones."""
        v = self.reduce(vec)
        if not v:
            return False
        p = min(v)
        inv = _inv(v[p])
        self.pivots[p] = {k: c * inv for k, c in v.items()}
        return True

    @property
    def rank(self) -> int:
        return len(self.pivots)


def sparse_rank(vectors) -> int:
    e = SparseEliminator()
    for v in vectors:
        e.add(v)
    return e.rank
