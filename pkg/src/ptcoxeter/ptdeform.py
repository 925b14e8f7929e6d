"""PT-symmetric complex deformations of the A2 and G2 root systems.

A deformed root is kept symbolically as ``R(eps) * a + 1j * I(eps) * b`` with
``a`` and ``b`` exact :class:`RationalVector` s. The extended reflection
sigma~ = sigma o T then acts as ``(a, b) -> (sigma a, -sigma b)`` which makes
orbit closure an exact, eps-independent statement. Floats only appear when a
root is evaluated at a concrete ``eps``.
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from enum import Enum
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

from .rootsys import (
    Embedding,
    RationalVector,
    RootSystem,
    build_group,
    fundamental_weights,
    get_embedding,
    weyl_reflect,
)

__all__ = [
    "Variant",
    "DeformationScheme",
    "ComplexVector",
    "DeformedRoot",
    "DeformedSystem",
    "ClosureError",
    "standard_scheme",
    "typeB_scheme",
    "extended_reflect",
    "deform_seed_typeA",
    "deform_typeB",
    "generate_deformed_system",
    "check_orthogonality",
    "check_inner_products",
    "closure_drift",
    "linearity_drift",
    "complex_dot",
    "in_system",
    "InnerProductReport",
    "r_function",
    "i_function",
]


class Variant(str, Enum):
    TYPE_A = "typeA"  # imaginary part in the reflecting hyperplane
    TYPE_B = "typeB"  # imaginary part parallel to the root


R_FUNCTIONS = ("cosh", "one")
I_FUNCTIONS = ("sqrt3_sinh", "inv_sqrt3_sinh", "sinh", "epsilon_over_r")


def r_function(name: str, eps: float) -> float:
    if name == "cosh":
        return math.cosh(eps)
    if name == "one":
        return 1.0
    raise ValueError(f"unknown R function {name!r}")


def i_function(name: str, eps: float, r: Optional[float] = None) -> float:
    if name == "sqrt3_sinh":
        return math.sqrt(3.0) * math.sinh(eps)
    if name == "inv_sqrt3_sinh":
        return math.sinh(eps) / math.sqrt(3.0)
    if name == "sinh":
        return math.sinh(eps)
    if name == "epsilon_over_r":
        if r is None:
            raise ValueError("I(eps) = eps/r needs the invariant radius r of the point")
        if r == 0:
            raise ZeroDivisionError("I(eps) = eps/r is undefined at r = 0")
        return eps / r
    raise ValueError(f"unknown I function {name!r}")


@dataclass(frozen=True)
class DeformationScheme:
    variant: Variant
    r_func: str = "cosh"
    i_func: str = "sqrt3_sinh"
    # TypeA: imaginary coefficient multiplying the complementary weight of
    # each simple seed, e.g. (1, 3) for G2 gives a2~ = R a2 -/+ 3 i I lambda_1.
    weight_coefficients: Tuple[int, int] = (1, 1)
    seed_sign: int = 1

    def __post_init__(self):
        object.__setattr__(self, "variant", Variant(self.variant))
        if self.r_func not in R_FUNCTIONS:
            raise ValueError(f"unknown R function {self.r_func!r}")
        if self.i_func not in I_FUNCTIONS:
            raise ValueError(f"unknown I function {self.i_func!r}")
        if self.seed_sign not in (1, -1):
            raise ValueError("seed_sign must be +1 or -1")
        # R(0) = 1 and I(0) = 0 are required for the undeformed limit.
        if r_function(self.r_func, 0.0) != 1.0 or i_function(self.i_func, 0.0, 1.0) != 0.0:
            raise AssertionError("deformation functions violate R(0)=1, I(0)=0")

    def R(self, eps: float) -> float:
        return r_function(self.r_func, eps)

    def I(self, eps: float, r: Optional[float] = None) -> float:
        return i_function(self.i_func, eps, r)

    @property
    def point_dependent(self) -> bool:
        return self.i_func == "epsilon_over_r"


def standard_scheme(group: str, seed_sign: int = 1) -> DeformationScheme:
    """TypeA scheme that keeps all inner products undeformed.

    A2: R = cosh, I = sqrt(3) sinh. G2: R = cosh, I = sinh / sqrt(3) with
    the long seed carrying a factor 3.
    """
    g = group.upper()
    if g == "A2":
        return DeformationScheme(Variant.TYPE_A, "cosh", "sqrt3_sinh", (1, 1), seed_sign)
    if g == "G2":
        return DeformationScheme(Variant.TYPE_A, "cosh", "inv_sqrt3_sinh", (1, 3), seed_sign)
    raise ValueError(f"unknown group {group!r}")


def typeB_scheme(r_func: str = "cosh", i_func: str = "sinh") -> DeformationScheme:
    return DeformationScheme(Variant.TYPE_B, r_func, i_func)


@dataclass(frozen=True)
class ComplexVector:
    """re + i*im, both in one basis (exact simple-root basis or float coordinates)."""

    re: tuple
    im: tuple

    def __post_init__(self):
        if len(tuple(self.re)) != len(tuple(self.im)):
            raise ValueError("real and imaginary parts differ in dimension")

    def as_complex(self) -> Tuple[complex, ...]:
        return tuple(complex(a, b) for a, b in zip(self.re, self.im))


@dataclass(frozen=True)
class DeformedRoot:
    """R(eps) * re_coef + i I(eps) * im_coef, labelled by its undeformed root."""

    label: RationalVector
    re_coef: RationalVector
    im_coef: RationalVector
    scheme: DeformationScheme
    epsilon: float
    group: str = "A2"

    def parts(self, r: Optional[float] = None) -> Tuple[float, float]:
        """Numerical (R, I) at this root's epsilon."""
        return self.scheme.R(self.epsilon), self.scheme.I(self.epsilon, r)

    def value(self, emb: Embedding, r: Optional[float] = None) -> ComplexVector:
        R, I = self.parts(r)
        re = tuple(R * x for x in emb(self.re_coef))
        im = tuple(I * x for x in emb(self.im_coef))
        return ComplexVector(re, im)

    def complex_coords(self, emb: Embedding, r: Optional[float] = None) -> Tuple[complex, ...]:
        return self.value(emb, r).as_complex()


class ClosureError(RuntimeError):
    """Raised when the extended reflections fail to close on a root set."""

    def __init__(self, message: str, word: Sequence[int] = ()):
        super().__init__(f"{message} (word {list(word)})")
        self.word = tuple(word)


def extended_reflect(system: RootSystem, i: int, v):
    """sigma~_i = sigma_i o T on a complex vector.

    Accepts either a :class:`DeformedRoot` (acted on symbolically), a pair
    ``(re, im)`` of :class:`RationalVector` , or a :class:`ComplexVector`
    whose parts are RationalVectors.
    """
    if isinstance(v, DeformedRoot):
        return DeformedRoot(
            label=weyl_reflect(system, i, v.label),
            re_coef=weyl_reflect(system, i, v.re_coef),
            im_coef=-weyl_reflect(system, i, v.im_coef),
            scheme=v.scheme,
            epsilon=v.epsilon,
            group=v.group,
        )
    if isinstance(v, ComplexVector):
        return ComplexVector(weyl_reflect(system, i, v.re), -weyl_reflect(system, i, v.im))
    re, im = v
    return weyl_reflect(system, i, re), -weyl_reflect(system, i, im)


def deform_seed_typeA(system: RootSystem, root_index: int, scheme: DeformationScheme,
                      eps: float) -> DeformedRoot:
    """Deformed simple root a_i~ = R a_i + s_i i I k_i lambda_j (j != i).

    The sign pattern follows the seeds a1~ = R a1 +/- i I lambda_2 and
    a2~ = R a2 -/+ i k_2 I lambda_1 (upper sign for ``seed_sign=+1``).
    """
    if scheme.variant is not Variant.TYPE_A:
        raise ValueError("deform_seed_typeA needs a TypeA scheme")
    if root_index not in (1, 2):
        raise ValueError(f"seed must be a simple root index, got {root_index}")
    lam1, lam2 = fundamental_weights(system)
    s = scheme.seed_sign
    k = scheme.weight_coefficients[root_index - 1]
    if root_index == 1:
        im = lam2 * (s * k)
    else:
        im = lam1 * (-s * k)
    a = system.simple(root_index)
    return DeformedRoot(a, a, im, scheme, eps, system.name)


def deform_typeB(root: RationalVector, sign: int, scheme: DeformationScheme,
                 eps: float, group: str = "A2") -> DeformedRoot:
    """a~^{+/-} = +/- R a + i I a for a positive root ``a``.

    ``root`` may also be a negative root, in which case the sign is read off
    from it and ``sign`` must agree.
    """
    if scheme.variant is not Variant.TYPE_B:
        raise ValueError("deform_typeB needs a TypeB scheme")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    base = root if root.is_positive() else -root
    if not root.is_positive() and sign == 1:
        raise ValueError("negative root given with sign +1")
    return DeformedRoot(base * sign, base * sign, base, scheme, eps, group)


@dataclass(frozen=True)
class DeformedSystem:
    parent: RootSystem
    scheme: DeformationScheme
    epsilon: float
    roots: Tuple[DeformedRoot, ...]

    def __post_init__(self):
        labels = [d.label for d in self.roots]
        if len(set(labels)) != len(labels) or set(labels) != set(self.parent.roots):
            raise ValueError("deformed roots must be in bijection with the parent roots")

    def by_label(self) -> Dict[RationalVector, DeformedRoot]:
        return {d.label: d for d in self.roots}

    def __getitem__(self, label: RationalVector) -> DeformedRoot:
        return self.by_label()[label]

    def __len__(self):
        return len(self.roots)

    def with_epsilon(self, eps: float) -> "DeformedSystem":
        return DeformedSystem(
            self.parent, self.scheme, eps,
            tuple(DeformedRoot(d.label, d.re_coef, d.im_coef, d.scheme, eps, d.group)
                  for d in self.roots),
        )


def _sort_like_parent(system: RootSystem, roots: Dict[RationalVector, DeformedRoot]):
    return tuple(roots[r] for r in system.roots)


def generate_deformed_system(system: RootSystem, scheme: DeformationScheme,
                             eps: float) -> DeformedSystem:
    """All ell*h deformed roots of ``system``.

    TypeA: breadth-first closure of the simple seeds under sigma~_1,
    sigma~_2; every root reached twice must agree exactly, otherwise
    :class:`ClosureError` names the offending word. TypeB: each root is
    deformed directly and the result is checked to be closed up to an
    overall sign.
    """
    if scheme.variant is Variant.TYPE_B:
        found = {}
        for r in system.roots:
            sign = 1 if r.is_positive() else -1
            found[r] = deform_typeB(r, sign, scheme, eps, system.name)
        ds = DeformedSystem(system, scheme, eps, _sort_like_parent(system, found))
        _verify_typeB_closure(ds)
        return ds

    seeds = [deform_seed_typeA(system, 1, scheme, eps)]
    if system.name != "A2":
        seeds.append(deform_seed_typeA(system, 2, scheme, eps))
    found: Dict[RationalVector, Tuple[DeformedRoot, Tuple[int, ...]]] = {}
    queue = deque()
    for s in seeds:
        found[s.label] = (s, ())
        queue.append(s)
    while queue:
        d = queue.popleft()
        word = found[d.label][1]
        for i in (1, 2):
            img = extended_reflect(system, i, d)
            new_word = (i,) + word
            if img.label in found:
                known = found[img.label][0]
                if (known.re_coef, known.im_coef) != (img.re_coef, img.im_coef):
                    raise ClosureError(
                        f"inconsistent deformation of {img.label.label()}", new_word)
                continue
            found[img.label] = (img, new_word)
            queue.append(img)
    if len(found) != len(system.roots):
        raise ClosureError(f"orbit produced {len(found)} roots, expected {len(system.roots)}")
    return DeformedSystem(system, scheme, eps,
                          _sort_like_parent(system, {k: v[0] for k, v in found.items()}))


def _verify_typeB_closure(ds: DeformedSystem):
    pairs = {(d.re_coef, d.im_coef) for d in ds.roots}
    for d in ds.roots:
        for i in (1, 2):
            img = extended_reflect(ds.parent, i, d)
            key = (img.re_coef, img.im_coef)
            neg = (-img.re_coef, -img.im_coef)
            if key not in pairs and neg not in pairs:
                raise ClosureError(f"image of {d.label.label()} not in +/- system", (i,))


def in_system(ds: DeformedSystem, d: DeformedRoot, up_to_sign: bool = False) -> bool:
    pairs = {(x.re_coef, x.im_coef) for x in ds.roots}
    if (d.re_coef, d.im_coef) in pairs:
        return True
    return up_to_sign and (-d.re_coef, -d.im_coef) in pairs


def _dot_terms(system: RootSystem, x: DeformedRoot, y: DeformedRoot):
    """Exact pieces of the bilinear product: (a.c, b.d, a.d + b.c)."""
    return (system.dot(x.re_coef, y.re_coef),
            system.dot(x.im_coef, y.im_coef),
            system.dot(x.re_coef, y.im_coef) + system.dot(x.im_coef, y.re_coef))


def complex_dot(system: RootSystem, x: DeformedRoot, y: DeformedRoot,
                r: Optional[float] = None) -> complex:
    """Non-conjugated bilinear product x~ . y~."""
    rr, ii, ri = _dot_terms(system, x, y)
    R, I = x.parts(r)
    return complex(R * R * float(rr) - I * I * float(ii), R * I * float(ri))


def check_orthogonality(d: DeformedRoot, system: Optional[RootSystem] = None,
                        r: Optional[float] = None) -> float:
    """|Re(a~) . Im(a~)| for one deformed root."""
    if system is None:
        system = build_group(d.group)
    R, I = d.parts(r)
    return abs(R * I * float(system.dot(d.re_coef, d.im_coef)))


@dataclass(frozen=True)
class InnerProductReport:
    max_drift: float
    worst_pair: Tuple[str, str]

    @property
    def passed(self) -> bool:
        return self.max_drift <= 1e-12


def check_inner_products(ds: DeformedSystem, r: Optional[float] = None) -> InnerProductReport:
    """max over all root pairs of |a~_i . a~_j - a_i . a_j|."""
    worst, pair = 0.0, ("", "")
    for x, y in product(ds.roots, repeat=2):
        drift = abs(complex_dot(ds.parent, x, y, r) - float(ds.parent.dot(x.label, y.label)))
        if drift > worst:
            worst, pair = drift, (x.label.label(), y.label.label())
    return InnerProductReport(worst, pair)


def _reflection_matrix(emb: Embedding, system: RootSystem, i: int):
    a = emb(system.simple(i))
    aa = sum(x * x for x in a)
    n = len(a)
    return [[(1.0 if p == q else 0.0) - 2.0 * a[p] * a[q] / aa for q in range(n)]
            for p in range(n)]


def closure_drift(ds: DeformedSystem, max_length: int = 5, emb: Optional[Embedding] = None,
                  r: Optional[float] = None) -> Tuple[float, Tuple[int, ...]]:
    """Float check that all words of length <= max_length map the system to itself.

    Each sigma~_i is applied numerically (reflection matrix, then complex
    conjugation) to every evaluated root. Returns the largest per-component
    distance from the image to its nearest system element and the word
    realising it. TypeB systems are compared up to an overall sign.
    """
    if emb is None:
        emb = get_embedding(ds.parent, "standard3d")
    mats = {i: _reflection_matrix(emb, ds.parent, i) for i in (1, 2)}
    vals = [d.complex_coords(emb, r) for d in ds.roots]
    targets = list(vals)
    if ds.scheme.variant is Variant.TYPE_B:
        targets += [tuple(-z for z in v) for v in vals]

    def act(i, v):
        m = mats[i]
        w = [sum(m[p][q] * v[q] for q in range(len(v))) for p in range(len(v))]
        return tuple(z.conjugate() for z in w)

    worst, worst_word = 0.0, ()
    for length in range(1, max_length + 1):
        for word in product((1, 2), repeat=length):
            for v in vals:
                img = v
                for i in reversed(word):
                    img = act(i, img)
                best = min(max(abs(a - b) for a, b in zip(img, t)) for t in targets)
                if best > worst:
                    worst, worst_word = best, word
    return worst, worst_word


def linearity_drift(ds: DeformedSystem) -> int:
    """Number of roots c1 a1 + c2 a2 whose deformation differs from c1 a1~ + c2 a2~."""
    if ds.scheme.variant is not Variant.TYPE_A:
        raise ValueError("sum decomposition is only expected for TypeA")
    by = ds.by_label()
    s1, s2 = by[ds.parent.simple(1)], by[ds.parent.simple(2)]
    bad = 0
    for d in ds.roots:
        c1, c2 = d.label
        if (d.re_coef != s1.re_coef * c1 + s2.re_coef * c2
                or d.im_coef != s1.im_coef * c1 + s2.im_coef * c2):
            bad += 1
    return bad
