"""Deformed Calogero-Moser-Sutherland potentials in standard and polar form."""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence, Tuple

from .ptdeform import DeformedSystem
from .rootsys import RootSystem, get_embedding

__all__ = [
    "PotentialKind",
    "RootSubset",
    "PolarMode",
    "SingularEvaluationError",
    "CMSModel",
    "potential_value",
    "assemble_potential",
    "confining_term",
    "polar_potential_a2",
    "polar_potential_g2",
    "to_jacobi",
    "to_jacobi_polar",
    "from_jacobi_polar",
    "invariant_radius",
    "reflect_point",
    "pt_invariance_residual",
    "inner_product_chains",
    "calogero_angular_short",
    "calogero_angular_long",
    "omega_from_mass",
]

POLE_THRESHOLD = 1e-300
SQ2, SQ3, SQ6 = math.sqrt(2.0), math.sqrt(3.0), math.sqrt(6.0)
TWO_PI_3 = 2.0 * math.pi / 3.0


class SingularEvaluationError(ArithmeticError):
    """The potential was evaluated on one of its poles."""


class PotentialKind(str, Enum):
    RATIONAL = "rational"
    TRIGONOMETRIC = "trigonometric"
    HYPERBOLIC = "hyperbolic"


class RootSubset(str, Enum):
    ALL = "all"
    POSITIVE = "positiveOnly"
    NEGATIVE = "negativeOnly"


class PolarMode(str, Enum):
    PHI_SHIFT = "phiShift"
    R_SHIFT_POS = "rShiftPos"
    R_SHIFT_NEG = "rShiftNeg"
    R_SHIFT_BOTH = "rShiftBoth"


def potential_value(kind, x: complex) -> complex:
    """V(x) = 1/x^2, 1/sin^2 x or 1/sinh^2 x at complex ``x``."""
    kind = PotentialKind(kind)
    x = complex(x)
    if kind is PotentialKind.RATIONAL:
        d = x
    elif kind is PotentialKind.TRIGONOMETRIC:
        d = cmath.sin(x)
    else:
        d = cmath.sinh(x)
    if abs(d) < POLE_THRESHOLD:
        raise SingularEvaluationError(f"{kind.value} potential has a pole at x={x}")
    return 1.0 / (d * d)


def omega_from_mass(m: float) -> float:
    return SQ3 / 2.0 * m


@dataclass(frozen=True)
class CMSModel:
    """Potential part of a (deformed) CMS Hamiltonian on A2 or G2.

    ``system`` supplies the (possibly deformed) roots; couplings are
    constant on length classes and ``gl`` is ignored for A2.
    """

    system: DeformedSystem
    gs: float = 1.0
    gl: float = 0.0
    mass: float = 0.0
    kind: PotentialKind = PotentialKind.RATIONAL
    root_subset: RootSubset = RootSubset.ALL
    coupling_scale: Optional[float] = None

    def __post_init__(self):
        object.__setattr__(self, "kind", PotentialKind(self.kind))
        object.__setattr__(self, "root_subset", RootSubset(self.root_subset))
        if self.coupling_scale is None:
            scale = 1.0 if self.root_subset is RootSubset.ALL else 2.0
            object.__setattr__(self, "coupling_scale", scale)

    @property
    def parent(self) -> RootSystem:
        return self.system.parent

    @property
    def omega(self) -> float:
        return omega_from_mass(self.mass)

    def coupling(self, label) -> float:
        if self.parent.length_class(label) == "short":
            return self.gs
        return self.gl if self.parent.name != "A2" else self.gs

    def selected(self):
        for d in self.system.roots:
            if self.root_subset is RootSubset.POSITIVE and not d.label.is_positive():
                continue
            if self.root_subset is RootSubset.NEGATIVE and d.label.is_positive():
                continue
            yield d


def invariant_radius(q: Sequence[float]) -> float:
    """r with r^2 = (1/3) sum_{j<k} (q_j - q_k)^2; Weyl invariant."""
    q1, q2, q3 = q
    return math.sqrt(((q1 - q2) ** 2 + (q2 - q3) ** 2 + (q1 - q3) ** 2) / 3.0)


def _deformed_products(model: CMSModel, q: Sequence[float]):
    emb = get_embedding(model.parent, "standard3d")
    r = invariant_radius(q) if model.system.scheme.point_dependent else None
    for d in model.system.roots:
        coords = d.complex_coords(emb, r)
        yield d, sum(c * x for c, x in zip(coords, q))


def confining_term(model: CMSModel, q: Sequence[float]) -> complex:
    """(m^2/16) sum over short deformed roots of (a~.q)^2."""
    if model.mass == 0:
        return 0j
    total = 0j
    for d, aq in _deformed_products(model, q):
        if model.parent.length_class(d.label) == "short":
            total += aq * aq
    return model.mass ** 2 / 16.0 * total


def assemble_potential(model: CMSModel, q: Sequence[float]) -> complex:
    """Full potential (1/2) sum g V(a~.q) + confining term at a real point q."""
    if len(q) != 3:
        raise ValueError("standard coordinates need 3 components")
    selected = {d.label for d in model.selected()}
    total = 0j
    for d, aq in _deformed_products(model, q):
        if d.label in selected:
            g = model.coupling(d.label) * model.coupling_scale
            if g != 0:
                total += 0.5 * g * potential_value(model.kind, aq)
    return total + confining_term(model, q)


def to_jacobi(q: Sequence[float]) -> Tuple[float, float, float]:
    """(R, X, Y): centre of mass and the two relative coordinates."""
    q1, q2, q3 = q
    return (q1 + q2 + q3) / 3.0, (q1 - q2) / SQ2, (q1 + q2 - 2.0 * q3) / SQ6


def to_jacobi_polar(q: Sequence[float]) -> Tuple[float, float, float]:
    """(R, r, phi) with X = r sin(phi), Y = r cos(phi)."""
    R, X, Y = to_jacobi(q)
    if X == 0.0 and Y == 0.0:
        raise ValueError("polar angle undefined on the centre-of-mass line")
    return R, math.hypot(X, Y), math.atan2(X, Y)


def from_jacobi_polar(R, r, phi):
    """Inverse of :func:`to_jacobi_polar`; accepts complex r or phi."""
    sin, cos = (cmath.sin, cmath.cos) if isinstance(phi, complex) else (math.sin, math.cos)
    X, Y = r * sin(phi), r * cos(phi)
    q3 = R - SQ6 * Y / 3.0
    q1 = R + SQ6 * Y / 6.0 + X / SQ2
    q2 = R + SQ6 * Y / 6.0 - X / SQ2
    return q1, q2, q3


def inner_product_chains(q: Sequence[float]):
    """The six G2 root products in standard, Jacobi and polar form.

    Yields ``(root_label, standard, jacobi, polar)`` for a1, a1+a2,
    2a1+a2, a2, 3a1+a2, 3a1+2a2.
    """
    q1, q2, q3 = q
    _, X, Y = to_jacobi(q)
    _, r, phi = to_jacobi_polar(q)
    s32 = math.sqrt(1.5)
    return [
        ("a1", q1 - q2, SQ2 * X, SQ2 * r * math.sin(phi)),
        ("a1+a2", q3 - q1, -(SQ3 * Y + X) / SQ2, -SQ2 * r * math.sin(TWO_PI_3 - phi)),
        ("2a1+a2", q3 - q2, -(SQ3 * Y - X) / SQ2, -SQ2 * r * math.sin(TWO_PI_3 + phi)),
        ("a2", q2 + q3 - 2 * q1, -s32 * (SQ3 * X + Y), SQ6 * r * math.cos(TWO_PI_3 + phi)),
        ("3a1+a2", q1 + q3 - 2 * q2, s32 * (SQ3 * X - Y), SQ6 * r * math.cos(TWO_PI_3 - phi)),
        ("3a1+2a2", 2 * q3 - q1 - q2, -SQ6 * Y, -SQ6 * r * math.cos(phi)),
    ]


def reflect_point(system: RootSystem, i: int, q: Sequence[float]) -> Tuple[float, ...]:
    """Simple Weyl reflection acting on q in the standard representation."""
    a = get_embedding(system, "standard3d")(system.simple(i))
    aa = sum(x * x for x in a)
    qa = sum(x * y for x, y in zip(q, a))
    return tuple(x - 2.0 * qa / aa * y for x, y in zip(q, a))


def pt_invariance_residual(model: CMSModel, i: int, q: Sequence[float]) -> float:
    """|conj(V(sigma_i q)) - V(q)| for the total potential."""
    v = assemble_potential(model, q)
    w = assemble_potential(model, reflect_point(model.parent, i, q))
    return abs(w.conjugate() - v)


def _angle_args(phi, eps: float, mode: PolarMode):
    if mode is PolarMode.PHI_SHIFT:
        return [complex(phi, -eps) + k * TWO_PI_3 for k in (-1, 0, 1)]
    return [phi + k * TWO_PI_3 for k in (-1, 0, 1)]


def _radii(r: float, eps: float, mode: PolarMode):
    """(radius, weight) pairs for the requested mode."""
    if mode is PolarMode.PHI_SHIFT:
        return [(complex(r), 1.0)]
    if mode is PolarMode.R_SHIFT_POS:
        return [(complex(r, eps), 1.0)]
    if mode is PolarMode.R_SHIFT_NEG:
        return [(complex(r, -eps), 1.0)]
    return [(complex(r, eps), 0.5), (complex(r, -eps), 0.5)]


def polar_potential_a2(gs: float, kind, r: float, phi: float, eps: float,
                       mode=PolarMode.PHI_SHIFT) -> complex:
    """A2 potential in polar Jacobi coordinates.

    phiShift: g sum_k V[sqrt2 r sin(phi - i eps + 2 pi k/3)];
    rShiftPos/Neg: r -> r +/- i eps with phi real; rShiftBoth: the average of
    the two r-shifted forms.
    """
    return polar_potential_g2(gs, 0.0, kind, r, phi, eps, mode)


def polar_potential_g2(gs: float, gl: float, kind, r: float, phi: float, eps: float,
                       mode=PolarMode.PHI_SHIFT) -> complex:
    """G2 potential in polar Jacobi coordinates, short terms gs, long terms gl."""
    mode = PolarMode(mode)
    if r <= 0:
        raise ValueError("polar potential needs r > 0")
    total = 0j
    for rad, w in _radii(r, eps, mode):
        for t in _angle_args(phi, eps, mode):
            total += w * gs * potential_value(kind, SQ2 * rad * cmath.sin(t))
            if gl != 0:
                total += w * gl * potential_value(kind, SQ6 * rad * cmath.cos(t))
    return total


def calogero_angular_short(gs: float, r: float, phi: float) -> float:
    """(9 gs / 2) / (r^2 sin^2(3 phi))."""
    return 4.5 * gs / (r * r * math.sin(3 * phi) ** 2)


def calogero_angular_long(gl: float, r: float, phi: float) -> float:
    """(3 gl / 2) / (r^2 cos^2(3 phi)), the long-root sum with unit coupling normalisation."""
    return 1.5 * gl / (r * r * math.cos(3 * phi) ** 2)
