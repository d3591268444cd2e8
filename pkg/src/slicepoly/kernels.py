"""Pointwise float evaluation of the slice Cauchy kernels.

The kernels are rational, not polynomial, so they are never built
symbolically; every structural claim about them is checked through the
finite-difference oracle or through quadrature.  All arguments must be
float-backed quaternions.
"""

from __future__ import annotations

import math

from .errors import OnSingularSphere
from .quat import Quaternion

#: evaluation closer than this to the singular sphere raises OnSingularSphere
SINGULAR_GUARD = 1e-9


def _require_float(q: Quaternion, name: str) -> None:
    if q.is_exact:
        raise TypeError(f"{name} must be float-backed; call to_float() first")


def _check_off_sphere(s: Quaternion, q: Quaternion) -> None:
    gap = abs(q.w - s.w) + abs(math.sqrt(q.vec_norm_sq()) - math.sqrt(s.vec_norm_sq()))
    if gap < SINGULAR_GUARD:
        raise OnSingularSphere(f"q={q} lies on the singular sphere of s={s}")


def _denominator(s: Quaternion, q: Quaternion) -> Quaternion:
    # s^2 - 2 Re(q) s + |q|^2, a quaternion that commutes with itself
    return s * s - s * (2.0 * q.w) + Quaternion(q.norm_sq(), 0.0, 0.0, 0.0)


def s_inv(s: Quaternion, q: Quaternion) -> Quaternion:
    """Slice Cauchy kernel (s - conj q)(s^2 - 2 Re(q) s + |q|^2)^(-1).

    Left slice regular in q, right slice regular in s; reduces to (s - q)^(-1)
    when both arguments share a slice.
    """
    _require_float(s, "s")
    _require_float(q, "q")
    _check_off_sphere(s, q)
    return (s - q.conjugate()) * _denominator(s, q).inverse()


def delta_s_inv(s: Quaternion, q: Quaternion) -> Quaternion:
    """Laplacian image of the slice Cauchy kernel: -4 (s - conj q) D(s, q)^(-2).

    Fueter regular in q away from the singular sphere.
    """
    _require_float(s, "s")
    _require_float(q, "q")
    _check_off_sphere(s, q)
    inv = _denominator(s, q).inverse()
    return (s - q.conjugate()) * (inv * inv) * -4.0


def f_j(w: Quaternion, q: Quaternion, j: int) -> Quaternion:
    """Order-j reproducing kernel s_inv(w, q) * Re(w - q)^j / j!.

    j = 0 is exactly the slice Cauchy kernel.
    """
    if j < 0:
        raise ValueError("kernel index must be nonnegative")
    base = s_inv(w, q)
    if j == 0:
        return base
    return base * ((w.w - q.w) ** j / math.factorial(j))
