"""Exact integer matrix helpers on immutable tuple-of-rows values."""

from __future__ import annotations

IntMatrix = tuple[tuple[int, ...], ...]


def identity(n: int) -> IntMatrix:
    return tuple(tuple(1 if r == c else 0 for c in range(n)) for r in range(n))


def mat_mul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    if len(a[0]) != len(b):
        raise ValueError(f"shape mismatch: {len(a)}x{len(a[0])} times {len(b)}x{len(b[0])}")
    bt = tuple(zip(*b))
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a
    )


def mat_vec(a: IntMatrix, v: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def vec_mat(v: tuple[int, ...], a: IntMatrix) -> tuple[int, ...]:
    return tuple(sum(v[r] * a[r][c] for r in range(len(v))) for c in range(len(a[0])))


def transpose(a: IntMatrix) -> IntMatrix:
    return tuple(zip(*a))


def is_identity(a: IntMatrix) -> bool:
    return all(
        a[r][c] == (1 if r == c else 0) for r in range(len(a)) for c in range(len(a[0]))
    )


def mat_pow(a: IntMatrix, k: int) -> IntMatrix:
    if k < 0:
        raise ValueError("negative matrix power not supported")
    out = identity(len(a))
    base = a
    while k:
        if k & 1:
            out = mat_mul(out, base)
        base = mat_mul(base, base) if k > 1 else base
        k >>= 1
    return out


def determinant(a: IntMatrix) -> int:
    """Fraction-free Bareiss determinant of a square integer matrix."""
    n = len(a)
    if n == 0:
        return 1
    m = [list(row) for row in a]
    sign = 1
    prev = 1
    for t in range(n - 1):
        if m[t][t] == 0:
            pivot = next((r for r in range(t + 1, n) if m[r][t] != 0), None)
            if pivot is None:
                return 0
            m[t], m[pivot] = m[pivot], m[t]
            sign = -sign
        for r in range(t + 1, n):
            for c in range(t + 1, n):
                m[r][c] = (m[r][c] * m[t][t] - m[r][t] * m[t][c]) // prev
            m[r][t] = 0
        prev = m[t][t]
    return sign * m[n - 1][n - 1]
