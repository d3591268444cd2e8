"""Finite-difference realizations of the differential operators.

These act on arbitrary black-box quaternion-valued functions and back every
derived value and kernel-side property with an independent second opinion.
All stencils are central and second-order accurate; composed operators
inherit roughly O(h^2) * (next-derivative scale) noise, which is why nested
uses default to a larger step.
"""

from __future__ import annotations

from typing import Callable

from .errors import OnRealAxis
from .quat import E1, E2, E3, Quaternion, quatf

QFunc = Callable[[Quaternion], Quaternion]

#: default step for single stencils
DEFAULT_H = 1e-3
#: default step for nested (composed) stencils
NESTED_H = 1e-2

_AXES = (quatf(1.0), E1.to_float(), E2.to_float(), E3.to_float())


def fd_partial(f: QFunc, q: Quaternion, axis: int, h: float = DEFAULT_H) -> Quaternion:
    """Central difference (f(q + h e_axis) - f(q - h e_axis)) / 2h."""
    if h <= 0:
        raise ValueError("step must be positive")
    e = _AXES[axis] * h
    return (f(q + e) - f(q - e)) * (0.5 / h)


def fd_laplacian(f: QFunc, q: Quaternion, h: float = DEFAULT_H) -> Quaternion:
    """Sum of second central differences over the four axes."""
    if h <= 0:
        raise ValueError("step must be positive")
    center = f(q) * 8.0
    acc = quatf()
    for axis in range(4):
        e = _AXES[axis] * h
        acc = acc + f(q + e) + f(q - e)
    return (acc - center) * (1.0 / (h * h))


def fd_cauchy_fueter(f: QFunc, q: Quaternion, h: float = DEFAULT_H) -> Quaternion:
    """d/dx0 + e1 d/dx1 + e2 d/dx2 + e3 d/dx3, units multiplying from the left."""
    acc = fd_partial(f, q, 0, h)
    for axis in (1, 2, 3):
        acc = acc + _AXES[axis] * fd_partial(f, q, axis, h)
    return acc


def fd_global_v(f: QFunc, q: Quaternion, h: float = DEFAULT_H) -> Quaternion:
    """d/dx0 + (vec q / |vec q|^2) sum_l x_l d/dx_l; undefined on the real axis."""
    v2 = q.vec_norm_sq()
    if v2 < 1e-24:
        raise OnRealAxis("the normalized global operator needs a nonreal point")
    radial = (
        fd_partial(f, q, 1, h) * q.x
        + fd_partial(f, q, 2, h) * q.y
        + fd_partial(f, q, 3, h) * q.z
    )
    return fd_partial(f, q, 0, h) + q.vec() * (1.0 / v2) * radial


def fd_slice_cr(
    f: QFunc, unit: Quaternion, z: Quaternion, h: float = DEFAULT_H, side: str = "left"
) -> Quaternion:
    """Slice Cauchy-Riemann stencil (D_x f + I D_y f)/2 on the slice of ``unit``.

    ``side`` places the unit left or right of the y-derivative; the right
    version tests right slice regularity.
    """
    ex = quatf(h)
    ey = unit * h
    dx = (f(z + ex) - f(z - ex)) * (0.5 / h)
    dy = (f(z + ey) - f(z - ey)) * (0.5 / h)
    if side == "left":
        return (dx + unit * dy) * 0.5
    if side == "right":
        return (dx + dy * unit) * 0.5
    raise ValueError("side must be 'left' or 'right'")


def richardson(stencil: Callable[[float], Quaternion], h: float) -> Quaternion:
    """One Richardson step for an O(h^2) stencil: (4 S(h/2) - S(h)) / 3."""
    return (stencil(h / 2.0) * 4.0 - stencil(h)) * (1.0 / 3.0)
