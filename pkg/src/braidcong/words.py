"""Braid words, permutations, strand-pair coordinates and linking numbers.

A braid word on n strands is a sequence of letters; the letter k (a nonzero
integer with |k| < n) denotes the k-th Artin generator when k > 0 and its
inverse when k < 0.  Words act on strand positions left to right, and all
permutations compose left to right: (p * q)(x) = q(p(x)).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from random import Random


@dataclass(frozen=True)
class BraidWord:
    """A word in the Artin generators of the braid group on n strands."""

    n: int
    letters: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError(f"strand count must be at least 2, got {self.n}")
        if not isinstance(self.letters, tuple):
            object.__setattr__(self, "letters", tuple(self.letters))
        for k in self.letters:
            if k == 0 or abs(k) >= self.n:
                raise ValueError(f"letter {k} is out of range for {self.n} strands")

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if self.n != other.n:
            raise ValueError(f"strand count mismatch: {self.n} vs {other.n}")
        return BraidWord(self.n, self.letters + other.letters)

    def __pow__(self, k: int) -> "BraidWord":
        if k < 0:
            return self.inverse() ** (-k)
        return BraidWord(self.n, self.letters * k)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.n, tuple(-k for k in reversed(self.letters)))

    def free_cancel(self) -> "BraidWord":
        """Remove adjacent cancelling pairs until none remain.

        This is an explicit optional pass; no operation applies it implicitly.
        """
        out: list[int] = []
        for k in self.letters:
            if out and out[-1] == -k:
                out.pop()
            else:
                out.append(k)
        return BraidWord(self.n, tuple(out))


@dataclass(frozen=True)
class Permutation:
    """A permutation of {1..n}, stored as the tuple of images of 1..n."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.images, tuple):
            object.__setattr__(self, "images", tuple(self.images))
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(self.images)}: {self.images}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        # left to right: apply self first, then other
        return Permutation(tuple(other.images[i - 1] for i in self.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for x, y in enumerate(self.images, start=1):
            inv[y - 1] = x
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(y == x for x, y in enumerate(self.images, start=1))

    def order(self) -> int:
        k = 1
        p = self
        while not p.is_identity():
            p = p * self
            k += 1
        return k

    def pair_image(self, pair: "PairIndex") -> "PairIndex":
        return PairIndex(self(pair.i), self(pair.j))


@dataclass(frozen=True, order=True)
class PairIndex:
    """An unordered pair of strand labels, normalized so that i < j."""

    i: int
    j: int

    def __post_init__(self) -> None:
        if self.i == self.j:
            raise ValueError(f"pair components must differ, got ({self.i}, {self.j})")
        if self.i > self.j:
            lo, hi = self.j, self.i
            object.__setattr__(self, "i", lo)
            object.__setattr__(self, "j", hi)
        if self.i < 1:
            raise ValueError(f"strand labels start at 1, got ({self.i}, {self.j})")


def pair_count(n: int) -> int:
    return n * (n - 1) // 2


def pair_list(n: int) -> tuple[PairIndex, ...]:
    """All strand pairs in the fixed lexicographic coordinate order."""
    return tuple(PairIndex(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1))


def pair_position(n: int, pair: PairIndex) -> int:
    """0-based coordinate of a pair in the lexicographic order on pairs."""
    i, j = pair.i, pair.j
    if j > n:
        raise ValueError(f"pair {pair} is out of range for {n} strands")
    # pairs (1,*), (2,*), ... precede those starting at i
    return (i - 1) * n - i * (i - 1) // 2 + (j - i - 1)


@dataclass(frozen=True)
class LinkingVector:
    """Integer vector indexed by strand pairs in the fixed lexicographic order."""

    n: int
    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.coords, tuple):
            object.__setattr__(self, "coords", tuple(self.coords))
        if len(self.coords) != pair_count(self.n):
            raise ValueError(
                f"expected {pair_count(self.n)} coordinates for {self.n} strands, "
                f"got {len(self.coords)}"
            )

    @classmethod
    def zero(cls, n: int) -> "LinkingVector":
        return cls(n, (0,) * pair_count(n))

    @classmethod
    def unit(cls, n: int, i: int, j: int) -> "LinkingVector":
        pos = pair_position(n, PairIndex(i, j))
        coords = [0] * pair_count(n)
        coords[pos] = 1
        return cls(n, tuple(coords))

    def __add__(self, other: "LinkingVector") -> "LinkingVector":
        self._check(other)
        return LinkingVector(self.n, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "LinkingVector") -> "LinkingVector":
        self._check(other)
        return LinkingVector(self.n, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "LinkingVector":
        return LinkingVector(self.n, tuple(-a for a in self.coords))

    def scaled(self, k: int) -> "LinkingVector":
        return LinkingVector(self.n, tuple(k * a for a in self.coords))

    def _check(self, other: "LinkingVector") -> None:
        if self.n != other.n:
            raise ValueError(f"strand count mismatch: {self.n} vs {other.n}")

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coords)

    def coordinate(self, pair: PairIndex) -> int:
        return self.coords[pair_position(self.n, pair)]

    def permuted(self, perm: Permutation) -> "LinkingVector":
        """Move each coordinate from pair p to the pair image under perm."""
        out = [0] * len(self.coords)
        for pos, pair in enumerate(pair_list(self.n)):
            out[pair_position(self.n, perm.pair_image(pair))] = self.coords[pos]
        return LinkingVector(self.n, tuple(out))


def permutation(w: BraidWord) -> Permutation:
    """The underlying permutation of a braid word (strand k ends at position images[k-1])."""
    seats = list(range(1, w.n + 1))
    for k in w.letters:
        i = abs(k)
        seats[i - 1], seats[i] = seats[i], seats[i - 1]
    images = [0] * w.n
    for pos, strand in enumerate(seats, start=1):
        images[strand - 1] = pos
    return Permutation(tuple(images))


def pure_generator(n: int, i: int, j: int) -> BraidWord:
    """The standard pure braid word twisting strands i and j once around each other."""
    if not (1 <= i < j <= n):
        raise ValueError(f"need 1 <= i < j <= n, got i={i}, j={j}, n={n}")
    conj = BraidWord(n, tuple(range(j - 1, i, -1)))
    return conj * BraidWord(n, (i, i)) * conj.inverse()


def full_twist(n: int) -> BraidWord:
    """The central full twist word, of length n(n-1)."""
    return BraidWord(n, tuple(range(1, n)) * n)


def torelli_chain(n: int, k: int) -> BraidWord:
    """The (2k+2)-th power of the first k generators; pure for even k.

    These elements are squares of Dehn twists about chains of an odd number of
    punctures and lie in the kernel of the integral representation.
    """
    if k % 2 != 0:
        raise ValueError(f"chain length k must be even, got {k}")
    if not (2 <= k < n):
        raise ValueError(f"need 2 <= k < n, got k={k}, n={n}")
    return BraidWord(n, tuple(range(1, k + 1))) ** (2 * k + 2)


def linking_vector(w: BraidWord) -> LinkingVector:
    """Pairwise linking numbers of a pure braid word.

    Walks the word tracking which original strand sits at each position; a
    letter at position k adds its sign to the counter of the unordered pair of
    original strands currently at positions (k, k+1).  Each counter must come
    out even; the result is the halved counters.
    """
    n = w.n
    seats = list(range(1, n + 1))
    counters = [0] * pair_count(n)
    for k in w.letters:
        i = abs(k)
        a, b = seats[i - 1], seats[i]
        counters[pair_position(n, PairIndex(a, b))] += 1 if k > 0 else -1
        seats[i - 1], seats[i] = seats[i], seats[i - 1]
    if seats != list(range(1, n + 1)):
        raise ValueError("linking_vector needs a pure word (trivial permutation)")
    if any(c % 2 for c in counters):
        raise RuntimeError("odd crossing counter on a pure word; internal bug")
    return LinkingVector(n, tuple(c // 2 for c in counters))


def conjugated_generator_class(
    k: int, sign: int, i: int, j: int, n: int
) -> tuple[tuple[PairIndex, int], ...]:
    """Conjugate of a standard pure generator by one braid generator.

    Returns the word for sigma_k^sign A_{(i,j)} sigma_k^{-sign} as a formal
    sequence of (pair, exponent) factors with exponents +1 or -1.
    Abelianized, the result is the unit vector of the transposed pair.
    """
    if not (1 <= k < n and 1 <= i < j <= n):
        raise ValueError(f"bad indices k={k}, i={i}, j={j} for n={n}")
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    A = lambda a, b, e=1: (PairIndex(a, b), e)
    if k not in (i - 1, i, j - 1, j):
        return (A(i, j),)
    if sign == 1:
        if j == k:
            return (A(i, j + 1),)
        if j == k + 1 and i < k:
            return (A(i, j, -1), A(i, j - 1), A(i, j))
        if j == k + 1 and i == k:
            return (A(i, j),)
        if i == k and k < j - 1:
            return (A(i + 1, j),)
        # i == k + 1
        return (A(i, j, -1), A(i - 1, j), A(i, j))
    # conjugation by the inverse generator, the inverse automorphism of the above
    if j == k:
        return (A(i, k), A(i, k + 1), A(i, k, -1))
    if j == k + 1 and i < k:
        return (A(i, k),)
    if j == k + 1 and i == k:
        return (A(i, j),)
    if i == k and k < j - 1:
        return (A(k, j), A(k + 1, j), A(k, j, -1))
    # i == k + 1
    return (A(k, j),)


def formal_class_vector(n: int, factors: tuple[tuple[PairIndex, int], ...]) -> LinkingVector:
    """Abelianization of a formal word in the standard pure generators."""
    coords = [0] * pair_count(n)
    for pair, exp in factors:
        coords[pair_position(n, pair)] += exp
    return LinkingVector(n, tuple(coords))


def formal_class_word(n: int, factors: tuple[tuple[PairIndex, int], ...]) -> BraidWord:
    """Expand a formal word in the standard pure generators into a braid word."""
    w = BraidWord(n)
    for pair, exp in factors:
        w = w * pure_generator(n, pair.i, pair.j) ** exp
    return w


def random_word(rng: Random, n: int, max_length: int) -> BraidWord:
    """Uniform random word of length 0..max_length."""
    length = rng.randint(0, max_length)
    letters = tuple(
        rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(length)
    )
    return BraidWord(n, letters)


def random_pure_word(rng: Random, n: int, factors: int = 3, conj_length: int = 4) -> BraidWord:
    """Random pure word: a product of conjugated standard pure generators."""
    w = BraidWord(n)
    for _ in range(factors):
        conj = random_word(rng, n, conj_length)
        i, j = sorted(rng.sample(range(1, n + 1), 2))
        block = conj * pure_generator(n, i, j) ** rng.choice((1, -1)) * conj.inverse()
        w = w * block
    return w


def all_permutations(n: int):
    """Iterate over all permutations of {1..n}."""
    for images in itertools.permutations(range(1, n + 1)):
        yield Permutation(images)
