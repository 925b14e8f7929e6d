"""Exact eigensystems of the (deformed) A2/G2 Calogero models in polar form.

The radial factor is r^lam exp(-w r^2/2) 1F1[-n; 1+lam; w r^2] and the
angular factor sin^{2ks}(3 phi) cos^{2kl}(3 phi) 2F1[...; sin^2(3 phi)].
Deformations enter only as complex shifts of r or phi, together with a
relaxed constraint profile that admits additional branches.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, replace
from fractions import Fraction
from itertools import product
from typing import Iterable, List, Optional, Sequence, Tuple

from .special import (
    UnsupportedEvaluationError,
    hyp1f1_terminating,
    hyp2f1_terminating,
    jacobi,
    laguerre,
    pochhammer,
)

__all__ = [
    "BranchCutError",
    "ConstraintProfile",
    "PROFILES",
    "KappaPair",
    "WaveFunctionSpec",
    "EnergyLevel",
    "kappa",
    "kappa_pair",
    "coupling_from_kappa",
    "p4_lambda",
    "energy_levels",
    "radial_energies",
    "radial_wavefunction",
    "angular_wavefunction",
    "ode_residual",
    "degeneracy_rhs",
    "degeneracy_pairs",
    "degeneracy_pairs_bruteforce",
]


class BranchCutError(ValueError):
    """Principal-branch power evaluated on its cut (or at a singular origin)."""


def kappa(g: float, branch="+") -> float:
    """Exponent (1 +/- sqrt(1 + 4 g)) / 4."""
    disc = 1.0 + 4.0 * g
    if disc < 0:
        raise ValueError(f"kappa needs 1 + 4g >= 0, got g={g}")
    sign = _sign(branch)
    return (1.0 + sign * math.sqrt(disc)) / 4.0


def coupling_from_kappa(k: float) -> float:
    """Inverse relation g = 4 k^2 - 2 k."""
    return 4.0 * k * k - 2.0 * k


def _sign(branch) -> int:
    if branch in ("+", 1, "+1"):
        return 1
    if branch in ("-", -1, "-1"):
        return -1
    raise ValueError(f"branch must be '+' or '-', got {branch!r}")


@dataclass(frozen=True)
class KappaPair:
    gs: float
    gl: float
    branch_s: str = "+"
    branch_l: str = "+"

    @property
    def ks(self) -> float:
        return kappa(self.gs, self.branch_s)

    @property
    def kl(self) -> float:
        return kappa(self.gl, self.branch_l)


def kappa_pair(gs: float, gl: float, branches: str = "++") -> KappaPair:
    return KappaPair(gs, gl, branches[0], branches[1])


@dataclass(frozen=True)
class ConstraintProfile:
    """Which of the admissibility conditions P1-P4 are enforced.

    P1: radial series terminates; P2: lam > 0; P3: kappa on the + branch;
    P4: angular series terminates.
    """

    name: str
    p1: bool = True
    p2: bool = True
    p3: bool = True
    p4: bool = True

    def kappa_branches(self) -> List[str]:
        return ["++"] if self.p3 else ["++", "+-", "-+", "--"]

    def radial_signs(self) -> List[str]:
        return ["+"] if self.p2 else ["+", "-"]


PROFILES = {
    "undeformed": ConstraintProfile("undeformed"),
    "phi-shift": ConstraintProfile("phi-shift", p3=False),
    "r-shift": ConstraintProfile("r-shift", p2=False),
}


def _profile(p) -> ConstraintProfile:
    if isinstance(p, ConstraintProfile):
        return p
    try:
        return PROFILES[p]
    except KeyError:
        raise ValueError(f"unknown profile {p!r}; expected one of {sorted(PROFILES)}") from None


def p4_lambda(ks: float, kl: float, ell: int, sign: int = 1) -> float:
    """Angular quantisation lam = +/- 6 (ks + kl + ell)."""
    return sign * 6.0 * (ks + kl + ell)


@dataclass(frozen=True)
class WaveFunctionSpec:
    omega: float
    n: int
    ell: int
    kappa_s: float
    kappa_l: float
    lam: float
    shift: complex = 0j

    @classmethod
    def from_quantum_numbers(cls, omega: float, n: int, ell: int, gs: float, gl: float,
                             branches: str = "++", radial_sign: int = 1,
                             shift: complex = 0j) -> "WaveFunctionSpec":
        ks, kl = kappa(gs, branches[0]), kappa(gl, branches[1])
        return cls(omega, n, ell, ks, kl, p4_lambda(ks, kl, ell, radial_sign), complex(shift))

    @property
    def gs(self) -> float:
        return coupling_from_kappa(self.kappa_s)

    @property
    def gl(self) -> float:
        return coupling_from_kappa(self.kappa_l)

    @property
    def energy(self) -> float:
        """P1 radial eigenvalue 2|w| (2n + lam + 1)."""
        return 2.0 * abs(self.omega) * (2 * self.n + self.lam + 1)

    def with_shift(self, shift: complex) -> "WaveFunctionSpec":
        return replace(self, shift=complex(shift))


@dataclass(frozen=True, order=True)
class EnergyLevel:
    branch: str  # kappa branches, e.g. "++", or "r+"/"r-" for the radial sign
    ell: int
    n: int
    value: float
    profile: str = "undeformed"
    lam: float = 0.0


def energy_levels(profile, omega: float, gs: float, gl: float, n_max: int,
                  l_max: int) -> List[EnergyLevel]:
    """All levels with n <= n_max, ell <= l_max admitted by ``profile``.

    undeformed: E = 2|w| [2n + 6(ks+ + kl+ + ell) + 1].
    phi-shift: the same formula on all four kappa branches.
    r-shift: E = 2|w| (2n +/- lam + 1) with lam from the + branches.
    """
    prof = _profile(profile)
    if omega == 0:
        raise ValueError("omega must be nonzero")
    w = abs(omega)
    out = []
    for branches in prof.kappa_branches():
        ks, kl = kappa(gs, branches[0]), kappa(gl, branches[1])
        for ell in range(l_max + 1):
            lam = p4_lambda(ks, kl, ell)
            for sgn in prof.radial_signs():
                label = branches if prof.p2 else f"r{sgn}"
                if not prof.p3 and not prof.p2:
                    label = f"{branches}r{sgn}"
                s = _sign(sgn)
                for n in range(n_max + 1):
                    e = 2.0 * w * (2 * n + s * lam + 1)
                    out.append(EnergyLevel(label, ell, n, float(e), prof.name, s * lam))
    out.sort(key=lambda lv: (lv.branch, lv.ell, lv.n))
    return out


def radial_energies(omega: float, lam: float, n_max: int) -> List[Tuple[int, float, float]]:
    """(n, E+, E-) with E+/- = 2|w| (2n +/- lam + 1)."""
    w = abs(omega)
    return [(n, 2 * w * (2 * n + lam + 1), 2 * w * (2 * n - lam + 1)) for n in range(n_max + 1)]


def _cpow(z: complex, p: float) -> complex:
    """Principal-branch z**p; integer p is evaluated exactly."""
    pi = round(p)
    if abs(p - pi) <= 1e-12:
        if z == 0 and pi < 0:
            raise BranchCutError("negative power at the origin")
        return complex(z) ** int(pi)
    if z == 0:
        if p > 0:
            return 0j
        raise BranchCutError("non-positive power at the origin")
    if z.imag == 0 and z.real < 0:
        raise BranchCutError(f"z={z} lies on the branch cut of z**{p}")
    return cmath.exp(p * cmath.log(z))


def radial_wavefunction(spec: WaveFunctionSpec, r, normalization: str = "kummer") -> complex:
    """chi(r + shift).

    kummer: z^lam exp(-w z^2/2) 1F1[-n; 1+lam; w z^2];
    kummer-series: the same, summing the 1F1 power series directly;
    laguerre: n! w^(lam/2) z^lam exp(-w z^2/2) L_n^lam(w z^2).
    """
    z = complex(r) + spec.shift
    w = spec.omega
    x = w * z * z
    pre = _cpow(z, spec.lam) * cmath.exp(-x / 2)
    if normalization == "kummer":
        # The power series cancels badly once w z^2 is large; go through the
        # Laguerre recurrence whenever the rescaling factor is finite.
        scale = pochhammer(1 + spec.lam, spec.n)
        if abs(scale) > 1e-9:
            return pre * math.factorial(spec.n) / scale * laguerre(spec.n, spec.lam, x)
        return pre * hyp1f1_terminating(-spec.n, 1 + spec.lam, x)
    if normalization == "kummer-series":
        return pre * hyp1f1_terminating(-spec.n, 1 + spec.lam, x)
    if normalization == "laguerre":
        return (math.factorial(spec.n) * w ** (spec.lam / 2) * pre
                * laguerre(spec.n, spec.lam, x))
    raise ValueError(f"unknown normalization {normalization!r}")


def angular_wavefunction(spec: WaveFunctionSpec, phi, form: str = "hypergeometric") -> complex:
    """f(phi + shift).

    hypergeometric: s^{2ks} c^{2kl} 2F1[ks+kl-lam/6, ks+kl+lam/6; 2ks+1/2; s^2];
    jacobi: ell! s^{2ks} c^{2kl} P_ell^(2ks-1/2, 2kl-1/2)(1 - 2 s^2), with
    s = sin(3 phi), c = cos(3 phi).
    """
    t = 3 * (complex(phi) + spec.shift)
    s, c = cmath.sin(t), cmath.cos(t)
    pre = _cpow(s, 2 * spec.kappa_s) * _cpow(c, 2 * spec.kappa_l)
    ksl = spec.kappa_s + spec.kappa_l
    if form == "hypergeometric":
        series = hyp2f1_terminating(ksl - spec.lam / 6, ksl + spec.lam / 6,
                                    2 * spec.kappa_s + 0.5, s * s)
        return pre * series
    if form == "jacobi":
        if abs(abs(spec.lam) - 6 * (ksl + spec.ell)) > 1e-9 * max(1.0, abs(spec.lam)):
            raise UnsupportedEvaluationError("Jacobi form needs lam = +/- 6(ks + kl + ell)")
        a, b = 2 * spec.kappa_s - 0.5, 2 * spec.kappa_l - 0.5
        return math.factorial(spec.ell) * pre * jacobi(spec.ell, a, b, 1 - 2 * s * s)
    raise ValueError(f"unknown form {form!r}")


_D1 = (1.0, -8.0, 0.0, 8.0, -1.0)
_D2 = (-1.0, 16.0, -30.0, 16.0, -1.0)


def _stencil(f, z: complex, h: float):
    vals = [f(z + k * h) for k in (-2, -1, 0, 1, 2)]
    d1 = sum(c * v for c, v in zip(_D1, vals)) / (12 * h)
    d2 = sum(c * v for c, v in zip(_D2, vals)) / (12 * h * h)
    return vals, d1, d2


def ode_residual(which: str, spec: WaveFunctionSpec, point, h: float = 1e-3,
                 eigenvalue: Optional[float] = None, **kwargs) -> float:
    """Normalised residual of the separated radial or angular equation.

    radial: -chi'' - chi'/z + w^2 z^2 chi + lam^2/z^2 chi - E chi (E from P1
    unless ``eigenvalue`` is given);
    angular: -f'' + 9 gs/sin^2(3t) f + 9 gl/cos^2(3t) f - lam^2 f.
    Derivatives are 5-point central differences with real step ``h`` at the
    shifted argument; the result is divided by max(|f|, 1) over the stencil.
    """
    if h <= 0:
        raise ValueError("h must be positive")
    shift = spec.shift
    base = spec.with_shift(0j)
    z = complex(point) + shift
    if which == "radial":
        e = spec.energy if eigenvalue is None else eigenvalue
        vals, d1, d2 = _stencil(lambda x: radial_wavefunction(base, x, **kwargs), z, h)
        f = vals[2]
        res = -d2 - d1 / z + (spec.omega ** 2 * z * z + spec.lam ** 2 / (z * z) - e) * f
    elif which == "angular":
        e = spec.lam ** 2 if eigenvalue is None else eigenvalue
        vals, d1, d2 = _stencil(lambda x: angular_wavefunction(base, x, **kwargs), z, h)
        f = vals[2]
        s, c = cmath.sin(3 * z), cmath.cos(3 * z)
        if abs(s) < 1e-12 or abs(c) < 1e-12:
            raise BranchCutError("angular stencil touches a singular point")
        res = -d2 + (9 * spec.gs / (s * s) + 9 * spec.gl / (c * c) - e) * f
    else:
        raise ValueError(f"which must be 'radial' or 'angular', got {which!r}")
    return abs(res) / max(1.0, max(abs(v) for v in vals))


def _rational_sqrt(x: Fraction) -> Optional[Fraction]:
    if x < 0:
        return None
    p, q = x.numerator, x.denominator
    rp, rq = math.isqrt(p), math.isqrt(q)
    if rp * rp == p and rq * rq == q:
        return Fraction(rp, rq)
    return None


def degeneracy_rhs(gs: float, gl: float) -> Tuple[float, Optional[int]]:
    """(3/2)(sqrt(1+4gs) + sqrt(1+4gl)) and its exact integer value if it has one."""
    val = 1.5 * (math.sqrt(1 + 4 * gs) + math.sqrt(1 + 4 * gl))
    rs = _rational_sqrt(1 + 4 * Fraction(gs))
    rl = _rational_sqrt(1 + 4 * Fraction(gl))
    exact = None
    if rs is not None and rl is not None:
        total = Fraction(3, 2) * (rs + rl)
        if total.denominator == 1:
            exact = int(total)
    return val, exact


def _plus_minus_energy(omega, gs, gl, n, ell, branch):
    ks, kl = kappa(gs, branch), kappa(gl, branch)
    return 2.0 * abs(omega) * (2 * n + 6 * (ks + kl + ell) + 1)


def degeneracy_pairs(gs: float, gl: float, omega: float, n_max: int,
                     l_max: int) -> List[Tuple[Tuple[int, int], Tuple[int, int]]]:
    """Pairs ((n, ell), (n', ell')) with E+_{n ell} = E-_{n' ell'}.

    Uses n' - n + 3(ell' - ell) = (3/2)(sqrt(1+4gs) + sqrt(1+4gl)), which has
    solutions only when the right-hand side is an integer. Every pair is
    confirmed by comparing the energies directly.
    """
    _, d = degeneracy_rhs(gs, gl)
    if d is None:
        return []
    out = []
    for n, ell, n2, ell2 in product(range(n_max + 1), range(l_max + 1),
                                    range(n_max + 1), range(l_max + 1)):
        if n2 - n + 3 * (ell2 - ell) != d:
            continue
        ep = _plus_minus_energy(omega, gs, gl, n, ell, "+")
        em = _plus_minus_energy(omega, gs, gl, n2, ell2, "-")
        if abs(ep - em) > 1e-12 * max(1.0, abs(ep)):
            raise AssertionError(f"closed-form degeneracy not confirmed at {(n, ell, n2, ell2)}")
        out.append(((n, ell), (n2, ell2)))
    return out


def degeneracy_pairs_bruteforce(gs: float, gl: float, omega: float, n_max: int, l_max: int,
                                rel_tol: float = 1e-9):
    """Same list by comparing every E+ with every E- on the grid."""
    plus = {(n, l): _plus_minus_energy(omega, gs, gl, n, l, "+")
            for n in range(n_max + 1) for l in range(l_max + 1)}
    minus = {(n, l): _plus_minus_energy(omega, gs, gl, n, l, "-")
             for n in range(n_max + 1) for l in range(l_max + 1)}
    return [(a, b) for a in sorted(plus) for b in sorted(minus)
            if abs(plus[a] - minus[b]) <= rel_tol * max(1.0, abs(plus[a]))]
