"""Level-m congruence subgroups: membership, finite images, abelianizations.

The level-m subgroup is the kernel of the mod-m representation.  Its index in
the braid group is the order of the finite matrix image, so cosets are
enumerated by a breadth-first walk over image matrices.  Subgroup
abelianizations come from Schreier rewriting of the Artin relators against
the coset table, followed by an integer Smith normal form.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from random import Random

from . import matrices
from .matrices import IntMatrix, mat_mul
from .burau import ModularMatrix, burau_matrix_mod
from .smith import SmithForm, smith_normal_form
from .words import BraidWord, random_word

__all__ = [
    "LimitExceeded",
    "ImageGroup",
    "CosetTable",
    "AbelianizationResult",
    "ActionMatrix",
    "is_member",
    "letter_order",
    "encode_matrix",
    "decode_matrix",
    "enumerate_image",
    "image_center",
    "coset_table",
    "artin_relators",
    "abelianization",
    "conjugation_action",
    "divisibility_check",
]


class LimitExceeded(RuntimeError):
    """An enumeration or table size cap was hit; carries the partial size."""

    def __init__(self, message: str, partial: int | None = None):
        super().__init__(message)
        self.partial = partial


def is_member(w: BraidWord, m: int) -> bool:
    """Whether a word lies in the level-m congruence subgroup."""
    return burau_matrix_mod(w, m).is_identity()


def letter_order(n: int) -> tuple[int, ...]:
    """The fixed letter scan order: each index, positive sign before negative."""
    return tuple(s * i for i in range(1, n) for s in (1, -1))


def _entry_width(m: int) -> int:
    return ((m - 1).bit_length() + 7) // 8


def encode_matrix(mat: ModularMatrix) -> bytes:
    """Canonical byte key: row-major residues, fixed-width little-endian."""
    width = _entry_width(mat.m)
    return b"".join(
        x.to_bytes(width, "little") for row in mat.entries for x in row
    )


def decode_matrix(data: bytes, n: int, m: int) -> ModularMatrix:
    width = _entry_width(m)
    flat = [
        int.from_bytes(data[k * width : (k + 1) * width], "little")
        for k in range(n * n)
    ]
    return ModularMatrix(m, tuple(tuple(flat[r * n : (r + 1) * n]) for r in range(n)))


@dataclass(frozen=True)
class ImageGroup:
    """The finite image of the mod-m representation, numbered in BFS order.

    Element 0 is the identity.  Discovery scans elements in numbering order
    and letters in letter_order; edges[k][t] is the element reached from
    element k by right multiplication with letter letter_order(n)[t].
    """

    n: int
    m: int
    letters: tuple[int, ...]
    elements: tuple[bytes, ...]
    edges: tuple[tuple[int, ...], ...]
    generator_images: tuple[ModularMatrix, ...] = field(compare=False)

    @property
    def size(self) -> int:
        return len(self.elements)

    def matrix(self, k: int) -> ModularMatrix:
        return decode_matrix(self.elements[k], self.n, self.m)

    def index_of(self, mat: ModularMatrix) -> int:
        key = encode_matrix(mat)
        try:
            return self.elements.index(key)
        except ValueError:
            raise KeyError("matrix is not in the enumerated image") from None


def enumerate_image(n: int, m: int, element_cap: int = 10**6) -> ImageGroup:
    """Breadth-first closure of the generator images and their inverses."""
    if element_cap < 1:
        raise ValueError(f"element cap must be positive, got {element_cap}")
    letters = letter_order(n)
    gens = tuple(burau_matrix_mod(BraidWord(n, (l,)), m) for l in letters)
    start = ModularMatrix.identity(n, m)
    elements = [encode_matrix(start)]
    mats = [start]
    index = {elements[0]: 0}
    edges: list[list[int]] = []
    k = 0
    while k < len(mats):
        row = []
        current = mats[k]
        for g in gens:
            product = current * g
            key = encode_matrix(product)
            target = index.get(key)
            if target is None:
                if len(mats) >= element_cap:
                    raise LimitExceeded(
                        f"image of ({n}, {m}) exceeds the element cap "
                        f"{element_cap}; partial size {len(mats)}",
                        partial=len(mats),
                    )
                target = len(mats)
                index[key] = target
                mats.append(product)
                elements.append(key)
            row.append(target)
        edges.append(row)
        k += 1
    return ImageGroup(
        n=n,
        m=m,
        letters=letters,
        elements=tuple(elements),
        edges=tuple(tuple(r) for r in edges),
        generator_images=gens,
    )


def image_center(group: ImageGroup) -> tuple[int, ...]:
    """Elements commuting with every generator image, as element numbers."""
    positive = [
        g for l, g in zip(group.letters, group.generator_images) if l > 0
    ]
    central = []
    for k in range(group.size):
        mat = group.matrix(k)
        if all(mat * g == g * mat for g in positive):
            central.append(k)
    return tuple(central)


@dataclass(frozen=True)
class CosetTable:
    """Cosets of the level-m subgroup, numbered 1..N with coset 1 the subgroup.

    Arrays are stored 0-based internally; the public methods take and return
    1-based coset numbers.  Transversal words form a breadth-first tree with
    the shortlex tie-break of letter_order (positive sign before negative).
    """

    n: int
    m: int
    letters: tuple[int, ...]
    action: tuple[tuple[int, ...], ...]
    transversals: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.action)

    def _letter_pos(self, letter: int) -> int:
        if letter == 0 or abs(letter) >= self.n:
            raise ValueError(f"letter {letter} out of range for {self.n} strands")
        return (abs(letter) - 1) * 2 + (0 if letter > 0 else 1)

    def apply(self, coset: int, letter: int) -> int:
        """Right action of one letter on a 1-based coset number."""
        return self.action[coset - 1][self._letter_pos(letter)] + 1

    def trace(self, coset: int, w: BraidWord) -> int:
        for letter in w.letters:
            coset = self.apply(coset, letter)
        return coset

    def transversal(self, coset: int) -> BraidWord:
        """The tree word carrying coset 1 to the given coset."""
        return BraidWord(self.n, self.transversals[coset - 1])


def coset_table(n: int, m: int, element_cap: int = 10**6) -> CosetTable:
    """Coset table of the level-m subgroup via the enumerated image."""
    group = enumerate_image(n, m, element_cap)
    size = group.size
    parents: list[tuple[int, int] | None] = [None] * size
    seen = [False] * size
    seen[0] = True
    for k in range(size):
        for pos, letter in enumerate(group.letters):
            t = group.edges[k][pos]
            if not seen[t]:
                seen[t] = True
                parents[t] = (k, letter)
    words: list[tuple[int, ...]] = [()] * size
    for k in range(1, size):
        parent = parents[k]
        if parent is None:
            raise RuntimeError("enumeration produced an unreachable coset")
        words[k] = words[parent[0]] + (parent[1],)
    return CosetTable(
        n=n,
        m=m,
        letters=group.letters,
        action=group.edges,
        transversals=tuple(words),
    )


def artin_relators(n: int) -> tuple[BraidWord, ...]:
    """The (n-1)(n-2)/2 defining relators of the braid group on n strands."""
    rels = []
    for i in range(1, n - 1):
        rels.append(BraidWord(n, (i, i + 1, i, -(i + 1), -i, -(i + 1))))
    for i in range(1, n - 1):
        for j in range(i + 2, n):
            rels.append(BraidWord(n, (i, j, -i, -j)))
    return tuple(rels)


def _rewrite(table: CosetTable, start: int, w: BraidWord) -> tuple[list[int], int]:
    # Schreier rewriting: walk w from a 0-based coset, logging one exponent
    # per (coset, generator index) coordinate; returns (coords, final coset)
    n = table.n
    coords = [0] * (table.size * (n - 1))
    x = start
    for letter in w.letters:
        if letter > 0:
            coords[x * (n - 1) + letter - 1] += 1
            x = table.action[x][(letter - 1) * 2]
        else:
            y = table.action[x][(-letter - 1) * 2 + 1]
            coords[y * (n - 1) + (-letter) - 1] -= 1
            x = y
    return coords, x


def subgroup_coordinates(table: CosetTable, w: BraidWord) -> tuple[int, ...]:
    """Exponent vector of a subgroup member over the Schreier generators.

    Coordinate c*(n-1) + (i-1) counts the generator of 0-based coset c and
    braid index i.  Raises when the word is not in the subgroup.
    """
    coords, final = _rewrite(table, 0, w)
    if final != 0:
        raise ValueError("word is not a member of the subgroup")
    return tuple(coords)


@dataclass(frozen=True)
class AbelianizationResult:
    """Abelian invariants of the level-m subgroup with change-of-basis data.

    The subgroup abelianization is Z^free_rank plus one cyclic factor per
    invariant factor.  Coordinates transform by the right matrix of the Smith
    form: for an exponent vector x over the Schreier generators, x @ right
    has its torsion coordinates first (positions with nonzero diagonal) and
    its free coordinates at positions rank.. of the diagonal.
    """

    n: int
    m: int
    table: CosetTable
    num_generators: int
    num_relations: int
    diagonal: tuple[int, ...]
    rank: int
    invariant_factors: tuple[int, ...]
    free_rank: int
    left: IntMatrix = field(repr=False)
    right: IntMatrix = field(repr=False)
    right_inverse: IntMatrix = field(repr=False)

    def coordinate_index(self, coset: int, i: int) -> int:
        """Column of the Schreier generator of a 1-based coset and braid index."""
        if not (1 <= i < self.n):
            raise ValueError(f"generator index {i} out of range for {self.n} strands")
        return (coset - 1) * (self.n - 1) + (i - 1)

    def free_coordinates(self, x: tuple[int, ...]) -> tuple[int, ...]:
        """Project an exponent vector to the free part of the abelianization."""
        y = matrices.vec_mat(x, self.right)
        return y[self.rank :]


def abelianization(
    n: int, m: int, coset_cap: int = 10_000, element_cap: int = 10**6
) -> AbelianizationResult:
    """Abelianization of the level-m subgroup by Schreier rewriting plus SNF.

    Relation rows are the rewritten Artin relators traced from every coset,
    plus one unit row per tree edge; all of the Schreier generators are kept
    as columns and the Smith normal form absorbs the redundancy.  Tables with
    more than coset_cap cosets are refused; pass a larger cap to override.
    """
    table = coset_table(n, m, element_cap)
    size = table.size
    if size > coset_cap:
        raise LimitExceeded(
            f"index {size} of ({n}, {m}) exceeds the coset cap {coset_cap}",
            partial=size,
        )
    degree = size * (n - 1)
    relators = artin_relators(n)
    rows: list[list[int]] = []
    for c in range(size):
        for rel in relators:
            coords, final = _rewrite(table, c, rel)
            if final != c:
                raise RuntimeError("relator does not fix a coset; table bug")
            rows.append(coords)
    for c in range(1, size):
        word = table.transversals[c]
        last = word[-1]
        parent = table.trace(c + 1, BraidWord(n, (-last,))) - 1
        row = [0] * degree
        if last > 0:
            row[parent * (n - 1) + last - 1] = 1
        else:
            row[c * (n - 1) + (-last) - 1] = 1
        rows.append(row)
    form = smith_normal_form(rows)
    return AbelianizationResult(
        n=n,
        m=m,
        table=table,
        num_generators=degree,
        num_relations=len(rows),
        diagonal=form.diagonal,
        rank=form.rank,
        invariant_factors=form.invariant_factors,
        free_rank=degree - form.rank,
        left=form.left,
        right=form.right,
        right_inverse=form.right_inverse,
    )


@dataclass(frozen=True)
class ActionMatrix:
    """Conjugation action on the free part of a subgroup abelianization.

    Rows follow the row-vector convention, so the map on coordinate vectors
    is x -> x @ matrix and the assignment of words to matrices is
    multiplicative.  Nonzero images in torsion coordinates are reported in
    torsion_leak as (free row, torsion column, residue) and never dropped.
    """

    matrix: IntMatrix
    word: BraidWord
    torsion_leak: tuple[tuple[int, int, int], ...] = ()

    def is_identity(self) -> bool:
        return matrices.is_identity(self.matrix) and not self.torsion_leak


def conjugation_action(ab: AbelianizationResult, w: BraidWord) -> ActionMatrix:
    """Matrix of conjugation by a braid word on the subgroup abelianization.

    Each Schreier generator s maps to the rewritten coordinates of
    w^{-1} s w; the full coordinate matrix is conjugated into the Smith basis
    and restricted to the free block.
    """
    if w.n != ab.n:
        raise ValueError(f"strand count mismatch: {w.n} vs {ab.n}")
    table = ab.table
    n = ab.n
    degree = ab.num_generators
    winv = w.inverse()
    theta = []
    for c in range(table.size):
        tau = BraidWord(n, table.transversals[c])
        for i in range(1, n):
            target = table.trace(c + 1, BraidWord(n, (i,)))
            gen_word = tau * BraidWord(n, (i,)) * table.transversal(target).inverse()
            theta.append(list(subgroup_coordinates(table, winv * gen_word * w)))
    conjugated = mat_mul(mat_mul(ab.right_inverse, tuple(map(tuple, theta))), ab.right)
    rank = ab.rank
    for t in range(rank):
        for s in range(rank, degree):
            if conjugated[t][s]:
                raise RuntimeError("action does not preserve the relation lattice")
    leaks = []
    for s in range(rank, degree):
        for t in range(rank):
            d = ab.diagonal[t]
            if d > 1 and conjugated[s][t] % d:
                leaks.append((s - rank, t, conjugated[s][t] % d))
    free_block = tuple(tuple(row[rank:]) for row in conjugated[rank:])
    return ActionMatrix(matrix=free_block, word=w, torsion_leak=tuple(leaks))


def divisibility_check(n: int, m: int, k: int, samples: int, seed: int = 0) -> bool:
    """Sampled containment of the level-k subgroup in the level-m subgroup."""
    if m < 2 or k % m:
        raise ValueError(f"need m >= 2 dividing k, got m={m}, k={k}")
    rng = Random(seed)
    for _ in range(samples):
        w = BraidWord(n)
        for _ in range(rng.randint(1, 3)):
            conj = random_word(rng, n, 6)
            i = rng.randint(1, n - 1)
            power = BraidWord(n, (rng.choice((1, -1)) * i,) * k)
            w = w * conj * power * conj.inverse()
        if not is_member(w, k):
            raise RuntimeError("synthesized word left the level-k subgroup; bug")
        if not is_member(w, m):
            return False
    return True
