"""Exact sparse linear algebra over the rationals.

Two tools live here.  ``nullspace`` is a dense textbook kernel
computation for the small systems (singular vectors, parameter
recovery).  ``Echelon`` is an incremental row-echelon span for the big
jobs -- submodule closure and Whittaker searches -- where vectors are
sparse dicts keyed by arbitrary hashable basis labels and insertion
order matters for performance.  Every stored row keeps its pivot as
the minimum of its support (under the supplied ordering), which makes
membership reduction a strictly-increasing sweep and hence easy to
reason about.

No floats anywhere; there is no tolerance to tune.
"""

from .scalars import Q, ZERO


def rref(rows):
    """In-place reduced row echelon form; returns the pivot column list."""
    if not rows:
        return []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = rows[r][c]
        rows[r] = [x / inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return pivots


def nullspace(rows, ncols):
    """Basis of the right kernel of the matrix (list of coefficient lists).

    Deterministic: one basis vector per free column, in column order,
    with a 1 in the free position.
    """
    work = [list(r) for r in rows]
    pivots = rref(work)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for fc in free:
        v = [ZERO] * ncols
        v[fc] = Q(1)
        for r, pc in enumerate(pivots):
            v[pc] = -work[r][fc]
        basis.append(v)
    return basis


class Echelon:
    """Incremental echelon span of sparse dict-vectors.

    keyfn maps a basis label to a sortable value; smaller keys are
    preferred as pivots.  Rows, once stored, are never modified, which
    keeps combination bookkeeping (for tags) simple.
    """

    def __init__(self, keyfn=None):
        self.keyfn = keyfn or (lambda k: k)
        self.rows = []
        self.pivot_of = {}  # basis label -> row index

    def __len__(self):
        return len(self.rows)

    def reduce(self, vec):
        """Fully reduce a sparse vector against the span.

        Returns (residual, combo): residual is what remains, and combo
        maps row indices to the coefficients that were subtracted, so
        vec = residual + sum(combo[i] * rows[i]).

        Pivot hits are consumed smallest-first through a heap; since a
        stored row's support never goes below its own pivot, each
        subtraction only introduces keys above the one just cleared,
        and the sweep terminates.
        """
        import heapq

        residual = {k: c for k, c in vec.items() if c != 0}
        combo = {}
        keyfn = self.keyfn
        pivot_of = self.pivot_of
        heap = [(keyfn(k), k) for k in residual if k in pivot_of]
        heapq.heapify(heap)
        while heap:
            _, k = heapq.heappop(heap)
            c = residual.get(k)
            if not c or k not in pivot_of:
                continue
            ri = pivot_of[k]
            combo[ri] = combo.get(ri, ZERO) + c
            for k2, v2 in self.rows[ri].items():
                old = residual.get(k2, ZERO)
                s = old - c * v2
                if s:
                    residual[k2] = s
                    if old == 0 and k2 in pivot_of:
                        heapq.heappush(heap, (keyfn(k2), k2))
                else:
                    residual.pop(k2, None)
        return residual, combo

    def contains(self, vec):
        residual, _ = self.reduce(vec)
        return not residual

    def insert(self, vec):
        """Reduce and, if independent, store (normalized to pivot 1).

        Returns (row_index, combo, scale): row_index is None when vec
        was already in the span.  Otherwise the stored row equals
        (vec - sum(combo[i] * rows[i])) / scale.
        """
        residual, combo = self.reduce(vec)
        if not residual:
            return None, combo, None
        keyfn = self.keyfn
        pivot = min(residual, key=keyfn)
        scale = residual[pivot]
        row = {k: c / scale for k, c in residual.items()}
        idx = len(self.rows)
        self.rows.append(row)
        self.pivot_of[pivot] = idx
        return idx, combo, scale
