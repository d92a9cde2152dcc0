"""
The hyperoctahedral group W of type C_n as signed permutations.

An element w = (perm, signs) acts on integer vectors by
    (w . e)[perm[i]] = signs[i] * e[i]
so coordinate i moves to position perm[i], negated when signs[i] = -1.
Indices are 0-based internally; coordinate i corresponds to alpha_{i+1}.

Positive roots are e_j - e_i (i < j), e_i + e_j and 2 e_i, i.e. the vectors
whose last nonzero coordinate is positive. The simple reflections are then
the adjacent transpositions and the sign flip of the first coordinate, and
rho = (1, 2, ..., n).

>>> w = SignedPermutation((1, 0), (1, 1))
>>> w.apply((1, 2))
(2, 1)
>>> longest_element(2).length()
4
"""
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product
from typing import Dict, List, NewType, Tuple

from ..utils.errors import DimensionMismatch, InvalidInput

# number of positive roots sent negative
CoxeterLength = NewType('CoxeterLength', int)

# a vector in Z^n, exponent vector of a monomial in alpha
ExponentVector = Tuple[int, ...]


@dataclass(frozen=True)
class SignedPermutation:
    """Element of W_{2n}: a permutation of range(n) and a sign per coordinate"""
    perm: Tuple[int, ...]
    signs: Tuple[int, ...]

    def __post_init__(self):
        if len(self.perm) != len(self.signs):
            raise DimensionMismatch("perm and signs must have equal length")
        if sorted(self.perm) != list(range(len(self.perm))):
            raise InvalidInput(f"{self.perm} is not a permutation of range({len(self.perm)})")
        if any(s not in (1, -1) for s in self.signs):
            raise InvalidInput(f"signs must be +-1, got {self.signs}")

    @property
    def n(self) -> int:
        return len(self.perm)

    @classmethod
    def identity(cls, n: int) -> 'SignedPermutation':
        return cls(tuple(range(n)), (1,) * n)

    def apply(self, vector: ExponentVector) -> ExponentVector:
        """w . e"""
        if len(vector) != self.n:
            raise DimensionMismatch(f"vector of length {len(vector)} for W of rank {self.n}")
        result = [0] * self.n
        for i, value in enumerate(vector):
            result[self.perm[i]] = self.signs[i] * value
        return tuple(result)

    def __mul__(self, other: 'SignedPermutation') -> 'SignedPermutation':
        """Composition: (self * other) . e = self . (other . e)"""
        if other.n != self.n:
            raise DimensionMismatch(f"cannot compose rank {self.n} with rank {other.n}")
        perm = tuple(self.perm[other.perm[i]] for i in range(self.n))
        signs = tuple(self.signs[other.perm[i]] * other.signs[i] for i in range(self.n))
        return SignedPermutation(perm, signs)

    def inverse(self) -> 'SignedPermutation':
        perm = [0] * self.n
        signs = [1] * self.n
        for i, target in enumerate(self.perm):
            perm[target] = i
            signs[target] = self.signs[i]
        return SignedPermutation(tuple(perm), tuple(signs))

    def length(self) -> CoxeterLength:
        return _length(self)

    def determinant(self) -> int:
        """det of w as a linear map; equals (-1)^length"""
        return _determinant(self)

    def is_identity(self) -> bool:
        return self == SignedPermutation.identity(self.n)

    def __str__(self) -> str:
        images = []
        for i in range(self.n):
            sign = '-' if self.signs[i] < 0 else ''
            images.append(f"{i + 1}->{sign}{self.perm[i] + 1}")
        return f"[{', '.join(images)}]"


def _is_positive(root: ExponentVector) -> bool:
    for value in reversed(root):
        if value:
            return value > 0
    raise ValueError("zero vector is not a root")


@lru_cache(maxsize=None)
def positive_roots(n: int) -> Tuple[ExponentVector, ...]:
    """Positive roots of C_n in the convention of this module"""
    roots = []
    for j in range(n):
        for i in range(j):
            minus = [0] * n
            minus[j], minus[i] = 1, -1
            plus = [0] * n
            plus[j], plus[i] = 1, 1
            roots.extend([tuple(minus), tuple(plus)])
        long_root = [0] * n
        long_root[j] = 2
        roots.append(tuple(long_root))
    return tuple(roots)


@lru_cache(maxsize=None)
def _length(w: SignedPermutation) -> CoxeterLength:
    return CoxeterLength(sum(1 for root in positive_roots(w.n)
                             if not _is_positive(w.apply(root))))


@lru_cache(maxsize=None)
def _determinant(w: SignedPermutation) -> int:
    inversions = sum(1 for i in range(w.n) for j in range(i + 1, w.n) if w.perm[i] > w.perm[j])
    sign = -1 if inversions % 2 else 1
    for s in w.signs:
        sign *= s
    return sign


def simple_reflections(n: int) -> List[SignedPermutation]:
    """Adjacent transpositions s_1..s_{n-1}, then the sign flip of coordinate 1"""
    reflections = []
    for i in range(n - 1):
        perm = list(range(n))
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
        reflections.append(SignedPermutation(tuple(perm), (1,) * n))
    reflections.append(sign_flip(n, 0))
    return reflections


def sign_flip(n: int, index: int) -> SignedPermutation:
    signs = [1] * n
    signs[index] = -1
    return SignedPermutation(tuple(range(n)), tuple(signs))


def transposition(n: int, i: int, j: int) -> SignedPermutation:
    perm = list(range(n))
    perm[i], perm[j] = perm[j], perm[i]
    return SignedPermutation(tuple(perm), (1,) * n)


def longest_element(n: int) -> SignedPermutation:
    """w_0 = -1"""
    return SignedPermutation(tuple(range(n)), (-1,) * n)


@lru_cache(maxsize=None)
def hyperoctahedral_group(n: int) -> Tuple[SignedPermutation, ...]:
    """All 2^n n! elements in a fixed deterministic order"""
    if n < 1:
        raise InvalidInput(f"rank must be >= 1, got {n}")
    return tuple(
        SignedPermutation(perm, signs)
        for perm in permutations(range(n))
        for signs in product((1, -1), repeat=n)
    )


@lru_cache(maxsize=None)
def coxeter_length_table(n: int) -> Dict[SignedPermutation, Tuple[int, ...]]:
    """
    Reduced words for every element by breadth-first search on the Cayley
    graph of the simple reflections. Word letters index simple_reflections(n).
    """
    generators = simple_reflections(n)
    identity = SignedPermutation.identity(n)
    words: Dict[SignedPermutation, Tuple[int, ...]] = {identity: ()}
    queue = deque([identity])
    while queue:
        current = queue.popleft()
        for letter, s in enumerate(generators):
            neighbour = current * s
            if neighbour not in words:
                words[neighbour] = words[current] + (letter,)
                queue.append(neighbour)
    return words


def reduced_word(w: SignedPermutation) -> Tuple[int, ...]:
    return coxeter_length_table(w.n)[w]


def reduced_word_length(w: SignedPermutation) -> int:
    return len(reduced_word(w))
