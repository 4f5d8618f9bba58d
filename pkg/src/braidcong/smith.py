"""Integer Smith normal form with full transform tracking, plus exact solvers.

All arithmetic is arbitrary precision.  The decomposition satisfies
left * A * right = D with left and right unimodular and D diagonal with a
divisibility chain d_1 | d_2 | ... on its positive entries.
"""

from __future__ import annotations

from dataclasses import dataclass

from .matrices import IntMatrix, identity


@dataclass(frozen=True)
class SmithForm:
    rows: int
    cols: int
    diagonal: tuple[int, ...]
    rank: int
    left: IntMatrix
    right: IntMatrix
    right_inverse: IntMatrix

    @property
    def invariant_factors(self) -> tuple[int, ...]:
        """Diagonal entries greater than 1 (the torsion factors)."""
        return tuple(d for d in self.diagonal if d > 1)


def smith_normal_form(matrix) -> SmithForm:
    """Diagonalize an integer matrix by unimodular row and column operations.

    Pivot choice is the globally smallest nonzero entry by absolute value,
    which keeps intermediate entries small in practice.
    """
    m = [list(row) for row in matrix]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    left = [list(row) for row in identity(nrows)]
    right = [list(row) for row in identity(ncols)]
    rinv = [list(row) for row in identity(ncols)]

    def row_op(dst: int, src: int, q: int) -> None:
        if q == 0:
            return
        mrow = m[src]
        for c in range(ncols):
            m[dst][c] -= q * mrow[c]
        lrow = left[src]
        for c in range(nrows):
            left[dst][c] -= q * lrow[c]

    def col_op(dst: int, src: int, q: int) -> None:
        # column dst minus q times column src; keep right and its inverse in sync
        if q == 0:
            return
        for r in range(nrows):
            m[r][dst] -= q * m[r][src]
        for r in range(ncols):
            right[r][dst] -= q * right[r][src]
        rrow = rinv[dst]
        srow = rinv[src]
        for c in range(ncols):
            srow[c] += q * rrow[c]

    def swap_rows(a: int, b: int) -> None:
        if a != b:
            m[a], m[b] = m[b], m[a]
            left[a], left[b] = left[b], left[a]

    def swap_cols(a: int, b: int) -> None:
        if a == b:
            return
        for r in range(nrows):
            m[r][a], m[r][b] = m[r][b], m[r][a]
        for r in range(ncols):
            right[r][a], right[r][b] = right[r][b], right[r][a]
        rinv[a], rinv[b] = rinv[b], rinv[a]

    def negate_row(r: int) -> None:
        m[r] = [-x for x in m[r]]
        left[r] = [-x for x in left[r]]

    t = 0
    bound = min(nrows, ncols)
    while t < bound:
        # locate the smallest nonzero entry of the trailing block
        best = None
        for r in range(t, nrows):
            for c in range(t, ncols):
                v = m[r][c]
                if v != 0 and (best is None or abs(v) < abs(m[best[0]][best[1]])):
                    best = (r, c)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        if m[t][t] < 0:
            negate_row(t)
        pivot = m[t][t]
        dirty = False
        for r in range(t + 1, nrows):
            if m[r][t]:
                row_op(r, t, m[r][t] // pivot)
                if m[r][t]:
                    dirty = True
        for c in range(t + 1, ncols):
            if m[t][c]:
                col_op(c, t, m[t][c] // pivot)
                if m[t][c]:
                    dirty = True
        if dirty:
            continue
        # enforce the divisibility chain before advancing
        offender = None
        for r in range(t + 1, nrows):
            for c in range(t + 1, ncols):
                if m[r][c] % pivot:
                    offender = r
                    break
            if offender is not None:
                break
        if offender is not None:
            row_op(t, offender, -1)
            continue
        t += 1

    diagonal = tuple(m[k][k] for k in range(bound))
    rank = sum(1 for d in diagonal if d)
    return SmithForm(
        rows=nrows,
        cols=ncols,
        diagonal=diagonal,
        rank=rank,
        left=tuple(tuple(row) for row in left),
        right=tuple(tuple(row) for row in right),
        right_inverse=tuple(tuple(row) for row in rinv),
    )


def solve_integer(a, b: tuple[int, ...]) -> tuple[int, ...] | None:
    """An integer solution x of a x = b, or None when none exists."""
    nrows = len(a)
    ncols = len(a[0]) if nrows else 0
    if len(b) != nrows:
        raise ValueError(f"length mismatch: {nrows} rows vs {len(b)} entries")
    s = smith_normal_form(a)
    ub = [sum(s.left[r][k] * b[k] for k in range(nrows)) for r in range(nrows)]
    y = [0] * ncols
    for t in range(min(nrows, ncols)):
        d = s.diagonal[t]
        if d:
            if ub[t] % d:
                return None
            y[t] = ub[t] // d
        elif ub[t]:
            return None
    for t in range(min(nrows, ncols), nrows):
        if ub[t]:
            return None
    return tuple(
        sum(s.right[r][k] * y[k] for k in range(ncols)) for r in range(ncols)
    )


def kernel_basis(a) -> tuple[tuple[int, ...], ...]:
    """A basis of the integer kernel lattice {x : a x = 0}."""
    nrows = len(a)
    ncols = len(a[0]) if nrows else 0
    s = smith_normal_form(a)
    basis = []
    for k in range(s.rank, ncols):
        basis.append(tuple(s.right[r][k] for r in range(ncols)))
    return tuple(basis)
