import math
import random

import mpmath
import pytest

from ptcoxeter.special import (
    UnsupportedEvaluationError,
    as_nonpositive_int,
    hyp1f1_coefficients,
    hyp1f1_terminating,
    hyp2f1_terminating,
    jacobi,
    laguerre,
    laguerre_identity_residual,
    ortho_poly_eval,
    pochhammer,
)

rng = random.Random(17)
ZS = [complex(rng.uniform(-3, 3), rng.uniform(-2, 2)) for _ in range(15)]


def close(a, b, tol=1e-11):
    return abs(complex(a) - complex(b)) <= tol * max(1.0, abs(complex(b)))


def test_pochhammer():
    assert pochhammer(3, 0) == 1
    assert pochhammer(3, 4) == 3 * 4 * 5 * 6
    assert pochhammer(-2, 3) == 0


def test_as_nonpositive_int():
    assert as_nonpositive_int(-3.0) == -3
    assert as_nonpositive_int(0) == 0
    assert as_nonpositive_int(1) is None
    assert as_nonpositive_int(-2.5) is None
    assert as_nonpositive_int(complex(-1, 0.1)) is None


@pytest.mark.parametrize("n", range(7))
def test_hyp1f1_termination_and_mpmath(n):
    assert len(hyp1f1_coefficients(-n, 2.5)) == n + 1
    for z in ZS:
        assert close(hyp1f1_terminating(-n, 2.5, z), mpmath.hyp1f1(-n, 2.5, z))


def test_hyp1f1_rejects_non_terminating():
    with pytest.raises(UnsupportedEvaluationError):
        hyp1f1_terminating(0.5, 1.0, 0.3)
    with pytest.raises(UnsupportedEvaluationError):
        hyp1f1_terminating(-3, -1, 0.3)


@pytest.mark.parametrize("n", range(6))
def test_hyp2f1_mpmath(n):
    for z in ZS:
        assert close(hyp2f1_terminating(-n, 3.7, 1.25, z), mpmath.hyp2f1(-n, 3.7, 1.25, z))
        assert close(hyp2f1_terminating(3.7, -n, 1.25, z), mpmath.hyp2f1(3.7, -n, 1.25, z))


def test_hyp2f1_errors():
    with pytest.raises(UnsupportedEvaluationError):
        hyp2f1_terminating(0.5, 0.5, 1.0, 0.3)
    with pytest.raises(UnsupportedEvaluationError):
        hyp2f1_terminating(-2, 1.0, 0.0, 0.3)


@pytest.mark.parametrize("alpha", [0.0, 0.5, 3.0, 12.0, -2.0, -4.5])
def test_laguerre_mpmath(alpha):
    for n in range(7):
        for z in ZS:
            assert close(laguerre(n, alpha, z), mpmath.laguerre(n, alpha, z))


def test_laguerre_matches_kummer_series():
    for n in range(6):
        for z in ZS:
            want = (math.comb(n + 3, n) * hyp1f1_terminating(-n, 4, z))
            assert close(laguerre(n, 3, z), want)


@pytest.mark.parametrize("a,b", [(0.5, 1.5), (1.0, 1.0), (-0.5, 2.0), (1.5, -0.5), (-0.5, -0.5)])
def test_jacobi_mpmath(a, b):
    for n in range(7):
        for z in ZS:
            assert close(jacobi(n, a, b, z), mpmath.jacobi(n, a, b, z))


def test_jacobi_degenerate_recurrence_falls_back():
    # a + b = -2 zeroes the k = 2 recurrence denominator
    for n in range(2, 6):
        for z in ZS[:5]:
            assert close(jacobi(n, -0.5, -1.5, z), mpmath.jacobi(n, -0.5, -1.5, z))


def test_ortho_poly_eval_dispatch():
    z = 0.3 + 0.2j
    assert ortho_poly_eval("laguerre", (3, 1.0), z) == laguerre(3, 1.0, z)
    assert ortho_poly_eval("jacobi", (2, 0.5, 0.5), z) == jacobi(2, 0.5, 0.5, z)
    assert ortho_poly_eval("hyp1f1", (-2, 1.5), z) == hyp1f1_terminating(-2, 1.5, z)
    assert ortho_poly_eval("hyp2f1", (-2, 1.0, 1.5), z) == hyp2f1_terminating(-2, 1.0, 1.5, z)
    with pytest.raises(ValueError):
        ortho_poly_eval("hermite", (2,), z)


def test_laguerre_identity():
    assert laguerre_identity_residual(3, 3, 0.7 + 0.1j) == 0
    assert laguerre_identity_residual(0, 2, 1 + 0.5j) < 1e-12
    for z in ZS:
        assert laguerre_identity_residual(1, 3, z) < 1e-10


def test_negative_degree():
    with pytest.raises(ValueError):
        laguerre(-1, 0.0, 1.0)
    with pytest.raises(ValueError):
        jacobi(-1, 0.0, 0.0, 1.0)
