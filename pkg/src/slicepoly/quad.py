"""Circle quadrature on a slice realizing the reproducing and mapping integrals.

The contour is the circle of radius rho in the slice of a chosen imaginary
unit, sampled at N equispaced nodes; for the (analytic, periodic) integrands
that arise here the trapezoidal rule converges spectrally, so the default
N = 512 is far past the point where the results stop moving.

Every integrand is a noncommutative sandwich: kernel value, then the scalar
line element exp(I theta) rho dtheta of the slice measure, then the slice
derivative of the integrated function, multiplied in exactly that order.
Swapping the line element out of the middle changes the answer for
noncommuting data; the test suite keeps a witness of that.

Node sums are reduced per component with math.fsum, which is deterministic
and exactly rounded, so results are reproducible bit for bit for a given N.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

from . import kernels
from .errors import OrderMismatch, OutsideContour
from .quat import Quaternion, UnitImaginary, quatf
from .slicefn import RightSlicePolyFn, SlicePolyFn, right_cr_derivative, slice_cr_derivative


@dataclass(frozen=True)
class CirclePath:
    """Quadrature contour: N nodes on the circle of radius rho in one slice.

    Node counts are conventionally powers of two (default 512) so doubling
    studies reuse even subgrids; any N >= 4 is accepted.
    """

    unit: UnitImaginary
    rho: float = 1.0
    n: int = 512
    _nodes: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.rho <= 0.0:
            raise ValueError("radius must be positive")
        if self.n < 4:
            raise ValueError("node count must be at least 4")
        object.__setattr__(self, "unit", self.unit.to_float())
        u = self.unit.u
        dtheta = 2.0 * math.pi / self.n
        nodes = []
        for m in range(self.n):
            theta = dtheta * m
            c, s = math.cos(theta), math.sin(theta)
            w = quatf(self.rho * c) + u * (self.rho * s)
            # dw_I = exp(I theta) rho dtheta: scalar element sitting mid-product
            dw = quatf(c * self.rho * dtheta) + u * (s * self.rho * dtheta)
            nodes.append((w, dw))
        object.__setattr__(self, "_nodes", tuple(nodes))

    def nodes(self) -> tuple:
        """Pairs (w_m, dw_m) in node order."""
        return self._nodes

    def to_json(self) -> dict:
        u = self.unit.u
        return {"unit": [u.x, u.y, u.z], "radius": self.rho, "nodes": self.n}

    @classmethod
    def from_json(cls, data) -> "CirclePath":
        if not isinstance(data, dict) or "unit" not in data:
            raise ValueError('contour JSON must be {"unit": [x,y,z], "radius": r, "nodes": N}')
        ux, uy, uz = (float(v) for v in data["unit"])
        return cls(
            UnitImaginary.from_vector(ux, uy, uz),
            float(data.get("radius", 1.0)),
            int(data.get("nodes", 512)),
        )


def _require_inside(q: Quaternion, path: CirclePath) -> Quaternion:
    q = q.to_float()
    if abs(q) >= path.rho:
        raise OutsideContour(f"|q| = {abs(q)} is not inside radius {path.rho}")
    return q


def _reduce(terms: list[Quaternion], scale: float) -> Quaternion:
    return Quaternion(
        math.fsum(t.w for t in terms) * scale,
        math.fsum(t.x for t in terms) * scale,
        math.fsum(t.y for t in terms) * scale,
        math.fsum(t.z for t in terms) * scale,
    )


def poly_cauchy_eval(f: SlicePolyFn, q: Quaternion, path: CirclePath) -> Quaternion:
    """Reproduce f(q) from boundary data of all slice CR derivatives.

    Quadrature of (1/2 pi) sum_j (-2)^j [s_inv(w,q) Re(w-q)^j / j!] dw_I
    (d/d conj z)^j f(w) over the contour.
    """
    q = _require_inside(q, path)
    ff = f.to_float()
    derivs = [slice_cr_derivative(ff, path.unit, j) for j in range(ff.order)]
    signs = [(-2.0) ** j for j in range(ff.order)]
    terms = []
    for w, dw in path.nodes():
        for j in range(ff.order):
            dval = derivs[j](w)
            if dval.is_zero():
                continue
            terms.append(kernels.f_j(w, q, j) * dw * dval * signs[j])
    return _reduce(terms, 0.5 / math.pi)


def fueter_integral(f: SlicePolyFn, q: Quaternion, path: CirclePath) -> Quaternion:
    """Integral form of the order-n Fueter map: matches tau_n of the expansion.

    Quadrature of (2^(n-1) / 2 pi) [laplacian s_inv](w, q) dw_I
    (d/d conj z)^(n-1) f(w).
    """
    q = _require_inside(q, path)
    ff = f.to_float()
    n = ff.order
    top = slice_cr_derivative(ff, path.unit, n - 1)
    terms = []
    for w, dw in path.nodes():
        dval = top(w)
        if dval.is_zero():
            continue
        terms.append(kernels.delta_s_inv(w, q) * dw * dval)
    return _reduce(terms, 2.0 ** (n - 1) / (2.0 * math.pi))


def fueter_integral_explicit(f: SlicePolyFn, q: Quaternion, path: CirclePath) -> Quaternion:
    """Same map written with the expanded kernel (conj q - w) D(w,q)^(-2) and prefactor 2^n / pi."""
    q = _require_inside(q, path)
    ff = f.to_float()
    n = ff.order
    top = slice_cr_derivative(ff, path.unit, n - 1)
    qbar = q.conjugate()
    norm2 = Quaternion(q.norm_sq(), 0.0, 0.0, 0.0)
    terms = []
    for w, dw in path.nodes():
        dval = top(w)
        if dval.is_zero():
            continue
        dinv = (w * w - w * (2.0 * q.w) + norm2).inverse()
        kernel = (qbar - w) * (dinv * dinv)
        terms.append(kernel * dw * dval)
    return _reduce(terms, 2.0**n / math.pi)


def cauchy_theorem_residual(
    f: SlicePolyFn, g: RightSlicePolyFn, path: CirclePath
) -> Quaternion:
    """Value of the bilinear boundary integral pairing g against f.

    sum_j (-1)^j [right CR^(n-1-j) g](w) dw_I [CR^j f](w) integrated over the
    contour; vanishes (to quadrature accuracy) when both sides are slice
    polyanalytic of the same order on a neighborhood of the closed disk.
    """
    if f.order != g.order:
        raise OrderMismatch(f"orders differ: {f.order} vs {g.order}")
    n = f.order
    ff = f.to_float()
    gg = g.to_float()
    lder = [slice_cr_derivative(ff, path.unit, j) for j in range(n)]
    rder = [right_cr_derivative(gg, path.unit, j) for j in range(n)]
    terms = []
    for w, dw in path.nodes():
        for j in range(n):
            val = rder[n - 1 - j](w) * dw * lder[j](w)
            terms.append(val if j % 2 == 0 else -val)
    return _reduce(terms, 1.0)


def unit_independence_check(
    f: SlicePolyFn,
    q: Quaternion,
    unit1: UnitImaginary,
    unit2: UnitImaginary,
    rho: float = 1.0,
    n: int = 512,
    integral: Callable[[SlicePolyFn, Quaternion, CirclePath], Quaternion] = poly_cauchy_eval,
) -> float:
    """Absolute gap between the same integral evaluated over two slice contours."""
    a = integral(f, q, CirclePath(unit1, rho, n))
    b = integral(f, q, CirclePath(unit2, rho, n))
    return abs(a - b)
