"""The integral homological braid representation and its mod-m reductions.

The representation is the n-dimensional unreduced Burau representation
specialized at t = -1, used uniformly for every n.  Generator i acts by the
unipotent block [[2, -1], [1, 0]] at rows and columns (i, i+1) of the
identity.  Every image fixes the all-ones column vector on the right and the
alternating covector on the left.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from random import Random

from . import matrices
from .matrices import IntMatrix
from .smith import kernel_basis
from .words import BraidWord, pair_list, pair_position, random_word

__all__ = [
    "ModularMatrix",
    "InvariantFormWitness",
    "generator_matrix",
    "burau_matrix",
    "burau_matrix_mod",
    "order_mod",
    "ones_vector",
    "alternating_covector",
    "invariant_form",
    "transvection_generator",
    "check_transvection_model",
]


def generator_matrix(n: int, i: int, sign: int = 1) -> IntMatrix:
    """Image of the i-th generator (or its inverse) as an exact integer matrix."""
    if not (1 <= i < n):
        raise ValueError(f"generator index {i} out of range for {n} strands")
    rows = [[1 if r == c else 0 for c in range(n)] for r in range(n)]
    if sign > 0:
        rows[i - 1][i - 1 : i + 1] = [2, -1]
        rows[i][i - 1 : i + 1] = [1, 0]
    else:
        rows[i - 1][i - 1 : i + 1] = [0, 1]
        rows[i][i - 1 : i + 1] = [-1, 2]
    return tuple(tuple(r) for r in rows)


def burau_matrix(w: BraidWord) -> IntMatrix:
    """Exact integer image of a braid word; determinant 1 for every word."""
    out = [list(row) for row in matrices.identity(w.n)]
    for k in w.letters:
        _apply_letter(out, k, None)
    return tuple(tuple(row) for row in out)


def _apply_letter(rows: list[list[int]], letter: int, m: int | None) -> None:
    # right-multiply in place by a generator block; only two columns change
    i = abs(letter) - 1
    for row in rows:
        a, b = row[i], row[i + 1]
        if letter > 0:
            row[i], row[i + 1] = 2 * a + b, -a
        else:
            row[i], row[i + 1] = -b, a + 2 * b
        if m is not None:
            row[i] %= m
            row[i + 1] %= m


@dataclass(frozen=True)
class ModularMatrix:
    """A square matrix over Z/mZ with entries stored in [0, m)."""

    m: int
    entries: IntMatrix

    def __post_init__(self) -> None:
        if self.m < 2:
            raise ValueError(f"modulus must be at least 2, got {self.m}")
        object.__setattr__(
            self,
            "entries",
            tuple(tuple(x % self.m for x in row) for row in self.entries),
        )

    @classmethod
    def identity(cls, n: int, m: int) -> "ModularMatrix":
        return cls(m, matrices.identity(n))

    @classmethod
    def reduce(cls, a: IntMatrix, m: int) -> "ModularMatrix":
        return cls(m, a)

    @property
    def n(self) -> int:
        return len(self.entries)

    def __mul__(self, other: "ModularMatrix") -> "ModularMatrix":
        if self.m != other.m:
            raise ValueError(f"modulus mismatch: {self.m} vs {other.m}")
        return ModularMatrix(self.m, matrices.mat_mul(self.entries, other.entries))

    def is_identity(self) -> bool:
        return all(
            x == (1 if r == c else 0)
            for r, row in enumerate(self.entries)
            for c, x in enumerate(row)
        )


def burau_matrix_mod(w: BraidWord, m: int) -> ModularMatrix:
    """Image of a braid word with entries reduced mod m at every step."""
    if m < 2:
        raise ValueError(f"modulus must be at least 2, got {m}")
    out = [list(row) for row in matrices.identity(w.n)]
    for k in w.letters:
        _apply_letter(out, k, m)
    return ModularMatrix(m, tuple(tuple(row) for row in out))


def order_mod(mat: ModularMatrix, cap: int | None = None) -> int | None:
    """Least k with mat^k = identity, or None when k would exceed the cap.

    The default cap is 4 * m * n, comfortably above every order arising from
    generator powers and full twists.
    """
    if cap is None:
        cap = 4 * mat.m * mat.n
    if cap < 1:
        raise ValueError(f"cap must be positive, got {cap}")
    acc = mat
    for k in range(1, cap + 1):
        if acc.is_identity():
            return k
        acc = acc * mat
    return None


def ones_vector(n: int) -> tuple[int, ...]:
    """The right-invariant column vector of the representation."""
    return (1,) * n


def alternating_covector(n: int) -> tuple[int, ...]:
    """The left-invariant row vector (1, -1, 1, ...)."""
    return tuple((-1) ** k for k in range(n))


@dataclass(frozen=True)
class InvariantFormWitness:
    """A skew form preserved by all generator images, with parity diagnostics.

    For odd n the form restricted to the kernel of the alternating covector is
    unimodular (restricted_determinant is +1 or -1).  For even n that
    restriction is degenerate; its radical is spanned by vectors fixed by
    every generator image.
    """

    n: int
    form: IntMatrix
    generators: tuple[IntMatrix, ...]
    solution_dimension: int
    restricted_determinant: int | None = None
    radical_basis: tuple[tuple[int, ...], ...] = ()
    radical_fixed: bool = field(default=True)


def invariant_form(n: int) -> InvariantFormWitness:
    """Solve for the skew-symmetric integer form preserved by the representation.

    Unknowns are the above-diagonal entries of the form, indexed by strand
    pairs; each generator contributes one linear constraint per pair.  The
    integer kernel of the constraint matrix gives primitive solutions.
    """
    if n < 3:
        raise ValueError(f"need at least 3 strands, got {n}")
    pairs = pair_list(n)
    gens = tuple(generator_matrix(n, i) for i in range(1, n))
    rows = []
    for g in gens:
        for p in pairs:
            row = [0] * len(pairs)
            for a in pairs:
                # coefficient of J[a] in (g^T J g - J)[p]
                coeff = (
                    g[a.i - 1][p.i - 1] * g[a.j - 1][p.j - 1]
                    - g[a.j - 1][p.i - 1] * g[a.i - 1][p.j - 1]
                )
                if a == p:
                    coeff -= 1
                row[pair_position(n, a)] = coeff
            rows.append(row)
    basis = kernel_basis(rows)
    if not basis:
        raise RuntimeError("no invariant skew form found; construction bug")
    vec = basis[0]
    lead = next(x for x in vec if x)
    if lead < 0:
        vec = tuple(-x for x in vec)
    form = [[0] * n for _ in range(n)]
    for pos, p in enumerate(pairs):
        form[p.i - 1][p.j - 1] = vec[pos]
        form[p.j - 1][p.i - 1] = -vec[pos]
    form_t = tuple(tuple(row) for row in form)
    for i in range(1, n):
        for sign in (1, -1):
            g = generator_matrix(n, i, sign)
            gt = matrices.transpose(g)
            if matrices.mat_mul(gt, matrices.mat_mul(form_t, g)) != form_t:
                raise RuntimeError("candidate form not preserved; construction bug")

    # restrict to the kernel of the alternating covector, basis e_k + e_{k+1}
    restriction = tuple(
        tuple(
            form_t[a][b] + form_t[a][b + 1] + form_t[a + 1][b] + form_t[a + 1][b + 1]
            for b in range(n - 1)
        )
        for a in range(n - 1)
    )
    if n % 2 == 1:
        det = matrices.determinant(restriction)
        return InvariantFormWitness(
            n=n,
            form=form_t,
            generators=gens,
            solution_dimension=len(basis),
            restricted_determinant=det,
        )
    radical = kernel_basis(restriction)
    lifted = tuple(_lift_kernel_vector(y, n) for y in radical)
    fixed = all(
        matrices.mat_vec(generator_matrix(n, i), u) == u
        for u in lifted
        for i in range(1, n)
    )
    return InvariantFormWitness(
        n=n,
        form=form_t,
        generators=gens,
        solution_dimension=len(basis),
        radical_basis=lifted,
        radical_fixed=fixed,
    )


def _lift_kernel_vector(y: tuple[int, ...], n: int) -> tuple[int, ...]:
    # image of a restricted vector under the basis e_k + e_{k+1} of ker(covector)
    u = [0] * n
    for k, c in enumerate(y):
        u[k] += c
        u[k + 1] += c
    return tuple(u)


def transvection_generator(n: int, i: int, sign: int = 1) -> IntMatrix:
    """Generator image in the chain model of dimension n - 1.

    Basis vectors are the classes of a chain of curves with consecutive
    intersection one; each generator acts as a transvection along its curve.
    """
    d = n - 1
    if not (1 <= i <= d):
        raise ValueError(f"generator index {i} out of range for {n} strands")
    rows = [[1 if r == c else 0 for c in range(d)] for r in range(d)]
    if i >= 2:
        rows[i - 1][i - 2] = sign
    if i < d:
        rows[i - 1][i] = -sign
    return tuple(tuple(r) for r in rows)


def _chain_matrix_mod(w: BraidWord, m: int) -> IntMatrix:
    out = matrices.identity(w.n - 1)
    for k in w.letters:
        g = transvection_generator(w.n, abs(k), 1 if k > 0 else -1)
        out = tuple(
            tuple(x % m for x in row) for row in matrices.mat_mul(out, g)
        )
    return out


def check_transvection_model(n: int, m: int, samples: int = 200, seed: int = 0) -> bool:
    """Compare mod-m kernel membership across the two models on random words.

    Half the samples are plain random words; the other half are synthesized
    kernel members (products of conjugated m-th generator powers), so the
    agreement is exercised in both directions.
    """
    if n % 2 != 1:
        raise ValueError(f"chain model comparison requires odd strand count, got {n}")
    if m < 2:
        raise ValueError(f"modulus must be at least 2, got {m}")
    rng = Random(seed)
    identity = matrices.identity(n - 1)
    for t in range(samples):
        if t % 2 == 0:
            w = random_word(rng, n, 25)
        else:
            w = BraidWord(n)
            for _ in range(rng.randint(1, 3)):
                conj = random_word(rng, n, 6)
                i = rng.randint(1, n - 1)
                power = BraidWord(n, (rng.choice((1, -1)) * i,) * m)
                w = w * conj * power * conj.inverse()
        in_full = burau_matrix_mod(w, m).is_identity()
        in_chain = _chain_matrix_mod(w, m) == tuple(
            tuple(x % m for x in row) for row in identity
        )
        if in_full != in_chain:
            return False
    return True
