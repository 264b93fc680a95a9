"""Sparse exact Gaussian elimination over a field.

Vectors are dicts mapping column index to a nonzero field element.  The
reducers keep their stored rows fully reduced against each other, so residuals
are canonical and every derived object (kernel vectors, witnesses) is
deterministic for a fixed insertion order.
"""

from __future__ import annotations


def vec_axpy(target: dict, coeff, source: dict) -> None:
    """target += coeff * source, dropping cancelled entries in place."""
    for col, val in source.items():
        new = target.get(col, 0) + coeff * val
        if new:
            target[col] = new
        elif col in target:
            del target[col]


def vec_scale(vec: dict, coeff) -> dict:
    return {col: coeff * val for col, val in vec.items()}


class RowReducer:
    """Incremental reduced row echelon form."""

    def __init__(self):
        self.rows: dict[int, dict] = {}  # pivot column -> row, row[pivot] == 1

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, vec: dict) -> dict:
        """Fully reduce a copy of vec against the stored rows."""
        residual = dict(vec)
        # repeatedly clear the smallest reducible column
        while True:
            hit = None
            for col in residual:
                if col in self.rows:
                    hit = col if hit is None or col < hit else hit
            if hit is None:
                return residual
            vec_axpy(residual, -residual[hit], self.rows[hit])

    def add(self, vec: dict):
        """Insert vec; returns its pivot column, or None if dependent."""
        residual = self.reduce(vec)
        if not residual:
            return None
        pivot = min(residual)
        inv = 1 / residual[pivot]
        row = vec_scale(residual, inv)
        for other in self.rows.values():
            if pivot in other:
                vec_axpy(other, -other[pivot], row)
        self.rows[pivot] = row
        return pivot

    def contains(self, vec: dict) -> bool:
        return not self.reduce(vec)


class TrackedReducer:
    """Row reducer that remembers how each stored row was built, so vectors
    can be expressed as combinations of the inserted ones."""

    def __init__(self):
        self.rows: dict[int, dict] = {}
        self.reps: dict[int, dict] = {}  # pivot column -> {tag: coeff}

    @property
    def rank(self) -> int:
        return len(self.rows)

    def express(self, vec: dict) -> tuple[dict, dict]:
        """Return (residual, rep) with vec == residual + sum rep[tag]*inserted[tag]."""
        residual = dict(vec)
        rep: dict = {}
        while True:
            hit = None
            for col in residual:
                if col in self.rows:
                    hit = col if hit is None or col < hit else hit
            if hit is None:
                return residual, rep
            c = residual[hit]
            vec_axpy(residual, -c, self.rows[hit])
            vec_axpy(rep, c, self.reps[hit])

    def add(self, vec: dict, tag):
        """Insert vec under a fresh tag; if dependent, return the dependency
        {tag: 1, earlier tags: ...} summing to zero, else None."""
        residual, rep = self.express(vec)
        if tag in rep:
            raise ValueError(f"tag {tag!r} reused")
        if not residual:
            # vec == sum rep[t] * inserted[t]
            dep = {tag: 1}
            for k, v in rep.items():
                if v:
                    dep[k] = -v
            return dep
        pivot = min(residual)
        inv = 1 / residual[pivot]
        # row == inv*vec - sum inv*rep[t]*inserted[t]
        row = vec_scale(residual, inv)
        new_rep = vec_scale(rep, -inv)
        new_rep[tag] = inv
        for pcol, other in self.rows.items():
            if pivot in other:
                c = other[pivot]
                vec_axpy(other, -c, row)
                vec_axpy(self.reps[pcol], -c, new_rep)
        self.rows[pivot] = row
        self.reps[pivot] = new_rep
        return None


def span_rank(vectors) -> int:
    red = RowReducer()
    for v in vectors:
        red.add(v)
    return red.rank


def span_basis(vectors) -> list[dict]:
    """Subset of the input vectors forming a basis of their span."""
    red = RowReducer()
    out = []
    for v in vectors:
        if red.add(v) is not None:
            out.append(v)
    return out


def span_dependencies(vectors) -> list[dict]:
    """Basis of the linear dependencies among the given vectors.

    Each dependency is a dict {index: coeff} with sum coeff*vectors[index]
    equal to zero.  One dependency per dependent vector; together they span
    the full dependency space.
    """
    red = TrackedReducer()
    deps = []
    for i, v in enumerate(vectors):
        dep = red.add(v, i)
        if dep is not None:
            deps.append(dep)
    return deps
