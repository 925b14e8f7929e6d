"""Exact rank-2 root systems (A2, G2).

Roots live in the simple-root basis with :class:`fractions.Fraction`
coefficients, so reflections and closure checks are exact. Euclidean
coordinates are only produced on request through an :class:`Embedding`.
"""
from __future__ import annotations

import math
from collections import deque
from functools import lru_cache
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Sequence, Tuple

__all__ = [
    "RationalVector",
    "CartanMatrix",
    "RootSystem",
    "Embedding",
    "WeylWord",
    "build_group",
    "weyl_reflect",
    "apply_word",
    "fundamental_weights",
    "embed",
    "get_embedding",
    "GROUPS",
]

GROUPS = ("A2", "G2")


def _q(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True, order=True)
class RationalVector:
    """Exact vector c1*alpha1 + c2*alpha2."""

    c1: Fraction
    c2: Fraction

    def __post_init__(self):
        object.__setattr__(self, "c1", _q(self.c1))
        object.__setattr__(self, "c2", _q(self.c2))

    @classmethod
    def of(cls, c1, c2) -> "RationalVector":
        return cls(_q(c1), _q(c2))

    def __iter__(self):
        yield self.c1
        yield self.c2

    def __add__(self, other: "RationalVector") -> "RationalVector":
        return RationalVector(self.c1 + other.c1, self.c2 + other.c2)

    def __sub__(self, other: "RationalVector") -> "RationalVector":
        return RationalVector(self.c1 - other.c1, self.c2 - other.c2)

    def __neg__(self) -> "RationalVector":
        return RationalVector(-self.c1, -self.c2)

    def __mul__(self, k) -> "RationalVector":
        k = _q(k)
        return RationalVector(self.c1 * k, self.c2 * k)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return self.c1 == 0 and self.c2 == 0

    def is_positive(self) -> bool:
        """True when the leading nonzero coefficient is positive."""
        if self.c1 != 0:
            return self.c1 > 0
        return self.c2 > 0

    def label(self) -> str:
        """Human-readable form such as ``3a1+2a2``."""
        parts = []
        for coef, name in ((self.c1, "a1"), (self.c2, "a2")):
            if coef == 0:
                continue
            sign = "-" if coef < 0 else "+"
            mag = abs(coef)
            mag_s = "" if mag == 1 else str(mag)
            parts.append((sign, f"{mag_s}{name}"))
        if not parts:
            return "0"
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            out += sign + body
        return out


@dataclass(frozen=True)
class CartanMatrix:
    entries: Tuple[Tuple[int, int], Tuple[int, int]]

    def __post_init__(self):
        k = self.entries
        if k[0][0] != 2 or k[1][1] != 2:
            raise ValueError("Cartan matrix must have 2 on the diagonal")
        if k[0][1] > 0 or k[1][0] > 0:
            raise ValueError("off-diagonal Cartan entries must be non-positive")
        if (k[0][1] == 0) != (k[1][0] == 0):
            raise ValueError("Cartan off-diagonal zeros must be symmetric")

    def __getitem__(self, ij: Tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i - 1][j - 1]


WeylWord = Tuple[int, ...]


@dataclass(frozen=True)
class RootSystem:
    name: str
    cartan: CartanMatrix
    gram: Tuple[Tuple[Fraction, Fraction], Tuple[Fraction, Fraction]]
    simple_roots: Tuple[RationalVector, RationalVector]
    roots: Tuple[RationalVector, ...]
    coxeter_number: int
    rank: int = 2
    _short_length: Fraction = field(default=Fraction(2), repr=False)

    def dot(self, x: RationalVector, y: RationalVector) -> Fraction:
        g = self.gram
        return (x.c1 * (g[0][0] * y.c1 + g[0][1] * y.c2)
                + x.c2 * (g[1][0] * y.c1 + g[1][1] * y.c2))

    def norm2(self, x: RationalVector) -> Fraction:
        return self.dot(x, x)

    def length_class(self, root: RationalVector) -> str:
        return "short" if self.norm2(root) == self._short_length else "long"

    @property
    def positive_roots(self) -> Tuple[RationalVector, ...]:
        return tuple(r for r in self.roots if r.is_positive())

    @property
    def short_roots(self) -> Tuple[RationalVector, ...]:
        return tuple(r for r in self.roots if self.length_class(r) == "short")

    @property
    def long_roots(self) -> Tuple[RationalVector, ...]:
        return tuple(r for r in self.roots if self.length_class(r) == "long")

    def simple(self, i: int) -> RationalVector:
        return self.simple_roots[i - 1]


# Cartan data; the short simple root is normalised to length^2 = 2.
_CARTAN: Dict[str, Tuple[Tuple[int, int], Tuple[int, int]]] = {
    "A2": ((2, -1), (-1, 2)),
    "G2": ((2, -1), (-3, 2)),
}
_COXETER = {"A2": 3, "G2": 6}


def _gram_from_cartan(k: CartanMatrix):
    # K_ij = 2 a_i.a_j / a_j^2 and K_12/K_21 = a_1^2/a_2^2.
    if k[1, 2] == 0:
        len2 = (Fraction(2), Fraction(2))
    else:
        ratio = Fraction(k[2, 1], k[1, 2])  # a2^2 / a1^2
        if ratio >= 1:
            len2 = (Fraction(2), 2 * ratio)
        else:
            len2 = (2 / ratio, Fraction(2))
    g12 = Fraction(k[1, 2]) * len2[1] / 2
    return ((len2[0], g12), (g12, len2[1]))


def _closure(simple: Sequence[RationalVector], gram, reflect) -> List[RationalVector]:
    seen = {r: None for r in simple}
    queue = deque(simple)
    while queue:
        x = queue.popleft()
        for i in (1, 2):
            y = reflect(i, x)
            if y not in seen:
                seen[y] = None
                queue.append(y)
    return list(seen)


@lru_cache(maxsize=None)
def build_group(name: str) -> RootSystem:
    """Build the root system for ``name`` (``"A2"`` or ``"G2"``).

    The full root set is obtained by closing the simple roots under the two
    simple reflections.
    """
    key = name.upper()
    if key not in _CARTAN:
        raise ValueError(f"unknown group {name!r}; expected one of {GROUPS}")
    cartan = CartanMatrix(_CARTAN[key])
    gram = _gram_from_cartan(cartan)
    simple = (RationalVector.of(1, 0), RationalVector.of(0, 1))

    def reflect(i, x):
        return _reflect(gram, simple, i, x)

    roots = _closure(simple, gram, reflect)
    roots.sort(key=lambda r: (not r.is_positive(), abs(r.c1) + abs(r.c2), abs(r.c2), r.c1 < 0))
    system = RootSystem(
        name=key,
        cartan=cartan,
        gram=gram,
        simple_roots=simple,
        roots=tuple(roots),
        coxeter_number=_COXETER[key],
        _short_length=min(gram[0][0], gram[1][1]),
    )
    if len(system.roots) != system.rank * system.coxeter_number:
        raise AssertionError(f"{key}: closure produced {len(system.roots)} roots")
    return system


def _reflect(gram, simple, i: int, x: RationalVector) -> RationalVector:
    a = simple[i - 1]
    xa = (x.c1 * (gram[0][0] * a.c1 + gram[0][1] * a.c2)
          + x.c2 * (gram[1][0] * a.c1 + gram[1][1] * a.c2))
    aa = gram[i - 1][i - 1]
    return x - a * (2 * xa / aa)


def weyl_reflect(system: RootSystem, i: int, x: RationalVector) -> RationalVector:
    """Simple reflection sigma_i(x) = x - 2 (x.a_i / a_i^2) a_i, exactly."""
    if i not in (1, 2):
        raise ValueError(f"generator index must be 1 or 2, got {i}")
    return _reflect(system.gram, system.simple_roots, i, x)


def apply_word(system: RootSystem, word: Iterable[int], x: RationalVector) -> RationalVector:
    """Apply the operator product sigma_{w[0]} sigma_{w[1]} ... to ``x``.

    As in operator notation the rightmost generator acts first; the empty
    word is the identity.
    """
    for i in reversed(tuple(word)):
        x = weyl_reflect(system, i, x)
    return x


def fundamental_weights(system: RootSystem) -> Tuple[RationalVector, RationalVector]:
    """Weights lambda_i with 2 lambda_i.a_j / a_j^2 = delta_ij."""
    g = system.gram
    det = g[0][0] * g[1][1] - g[0][1] * g[1][0]
    inv = ((g[1][1] / det, -g[0][1] / det), (-g[1][0] / det, g[0][0] / det))
    half = (g[0][0] / 2, g[1][1] / 2)
    # row i of C = half_i * row i of G^{-1}
    return tuple(
        RationalVector(half[i] * inv[i][0], half[i] * inv[i][1]) for i in range(2)
    )


@dataclass(frozen=True)
class Embedding:
    group: str
    name: str
    images: Tuple[Tuple[float, ...], Tuple[float, ...]]

    @property
    def dim(self) -> int:
        return len(self.images[0])

    def __call__(self, x: RationalVector) -> Tuple[float, ...]:
        a, b = self.images
        c1, c2 = float(x.c1), float(x.c2)
        return tuple(c1 * u + c2 * v for u, v in zip(a, b))


_S2, _S3, _S6 = math.sqrt(2.0), math.sqrt(3.0), math.sqrt(6.0)

# The plane A2 embedding is fixed by the Gram matrix: a1^2 = a2^2 = 2, a1.a2 = -1.
_EMBEDDINGS = {
    ("A2", "standard3d"): ((1.0, -1.0, 0.0), (0.0, 1.0, -1.0)),
    ("A2", "plane2d"): ((_S2, 0.0), (-1.0 / _S2, math.sqrt(1.5))),
    ("G2", "standard3d"): ((1.0, -1.0, 0.0), (-2.0, 1.0, 1.0)),
    ("G2", "plane2d"): ((-_S3 / _S2, 1.0 / _S2), (_S6, 0.0)),
}
EMBEDDING_NAMES = ("standard3d", "plane2d")


def get_embedding(system: RootSystem, name: str = "standard3d") -> Embedding:
    try:
        images = _EMBEDDINGS[(system.name, name)]
    except KeyError:
        raise ValueError(f"no embedding {name!r} for {system.name}") from None
    emb = Embedding(system.name, name, images)
    for i in range(2):
        for j in range(2):
            got = sum(u * v for u, v in zip(images[i], images[j]))
            if abs(got - float(system.gram[i][j])) > 1e-12:
                raise AssertionError(f"embedding {name} inconsistent with Gram matrix")
    return emb


def embed(system: RootSystem, e: Embedding, x: RationalVector) -> Tuple[float, ...]:
    """Coordinates of ``x`` under embedding ``e``."""
    if e.group != system.name:
        raise ValueError(f"embedding for {e.group} used with {system.name}")
    return e(x)
