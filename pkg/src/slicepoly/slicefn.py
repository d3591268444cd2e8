"""Slice regular series and slice polyanalytic functions.

A slice regular (finite) series is ``f(q) = sum_m q^m a_m`` with right
quaternion coefficients.  A slice polyanalytic function of order n is an
ordered list ``(f_0, ..., f_{n-1})`` of such series representing
``f(q) = sum_k conj(q)^k f_k(q)``; the decomposition is unique, and this
module recovers it from a raw polynomial expansion, restricts functions to a
complex slice, splits restrictions over an orthogonal pair of units, takes
slice Cauchy-Riemann derivatives in closed form, extends slice data by the
representation formula, and exposes the Appell ladder of conjugate powers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from . import qpoly
from .errors import NotDivisible, NotInClass, NotOrthogonal
from .qpoly import QPoly
from .quat import Quaternion, UnitImaginary, ZERO, quatf, slice_decompose


def _falling(k: int, j: int) -> int:
    """k! / (k-j)! for 0 <= j <= k."""
    out = 1
    for i in range(k, k - j, -1):
        out *= i
    return out


class SliceRegularSeries:
    """Finite power series sum_m q^m a_m with right quaternion coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Sequence[Quaternion] = ()):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        if coeffs:
            exact = coeffs[0].is_exact
            if any(c.is_exact != exact for c in coeffs):
                raise TypeError("series coefficients must share one scalar backend")
        self._coeffs = tuple(coeffs)

    @property
    def coeffs(self) -> tuple[Quaternion, ...]:
        return self._coeffs

    @property
    def degree(self):
        return len(self._coeffs) - 1 if self._coeffs else float("-inf")

    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def is_exact(self) -> bool:
        return not self._coeffs or self._coeffs[0].is_exact

    def __eq__(self, other) -> bool:
        if not isinstance(other, SliceRegularSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __repr__(self) -> str:
        return f"SliceRegularSeries(degree={self.degree})"

    def evaluate(self, q: Quaternion) -> Quaternion:
        """Horner evaluation; a float point converts coefficients on the fly."""
        coeffs = self._coeffs
        if not coeffs:
            return ZERO if q.is_exact else quatf()
        if not q.is_exact and coeffs[0].is_exact:
            coeffs = tuple(c.to_float() for c in coeffs)
        elif q.is_exact and not coeffs[0].is_exact:
            raise TypeError("cannot evaluate a float series at an exact point")
        acc = coeffs[-1]
        for m in range(len(coeffs) - 2, -1, -1):
            acc = q * acc + coeffs[m]
        return acc

    def expand(self) -> QPoly:
        """Exact polynomial expansion sum_m (q^m as QPoly) a_m."""
        if not self.is_exact:
            raise TypeError("only exact series expand to polynomials")
        acc = QPoly.zero()
        for m, a in enumerate(self._coeffs):
            acc = acc + qpoly.expand_q_power(m) * a
        return acc

    def scale(self, s) -> "SliceRegularSeries":
        """Multiply every coefficient by a real scalar."""
        return SliceRegularSeries([c * s for c in self._coeffs])

    def to_float(self) -> "SliceRegularSeries":
        return SliceRegularSeries([c.to_float() for c in self._coeffs])

    def to_json(self):
        return [c.to_json() for c in self._coeffs]

    @classmethod
    def from_json(cls, data) -> "SliceRegularSeries":
        if not isinstance(data, list):
            raise ValueError("series JSON must be a list of coefficients")
        return cls([Quaternion.from_json(c) for c in data])


class SlicePolyFn:
    """Slice polyanalytic function of declared order n as components (f_0..f_{n-1}).

    The declared order is an upper bound: trailing components may be zero.
    """

    __slots__ = ("_components",)

    def __init__(self, components: Sequence[SliceRegularSeries]):
        components = tuple(components)
        if not components:
            raise ValueError("order must be at least 1")
        self._components = components

    @property
    def order(self) -> int:
        return len(self._components)

    @property
    def components(self) -> tuple[SliceRegularSeries, ...]:
        return self._components

    @property
    def is_exact(self) -> bool:
        return all(c.is_exact for c in self._components)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SlicePolyFn):
            return NotImplemented
        return self._components == other._components

    def __repr__(self) -> str:
        return f"SlicePolyFn(order={self.order})"

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self._components)

    def trim(self) -> "SlicePolyFn":
        """Drop trailing zero components down to the minimal order (at least 1)."""
        comps = list(self._components)
        while len(comps) > 1 and comps[-1].is_zero():
            comps.pop()
        return SlicePolyFn(comps)

    def evaluate(self, q: Quaternion) -> Quaternion:
        qbar = q.conjugate()
        acc = ZERO if q.is_exact else quatf()
        for k, comp in enumerate(self._components):
            if comp.is_zero():
                continue
            acc = acc + qbar**k * comp.evaluate(q)
        return acc

    def expand(self) -> QPoly:
        """Exact expansion sum_k conj(q)^k f_k as a polynomial in x0..x3."""
        acc = QPoly.zero()
        for k, comp in enumerate(self._components):
            if not comp.is_zero():
                acc = acc + qpoly.expand_qbar_power(k) * comp.expand()
        return acc

    def component_expansions(self) -> list[QPoly]:
        return [c.expand() for c in self._components]

    def fueter_image(self) -> QPoly:
        """laplacian o V^(order-1) of the expansion: a Fueter regular polynomial."""
        return qpoly.tau_n(self.expand(), self.order)

    def poly_fueter_image(self) -> QPoly:
        """sum_k x0^k laplacian(f_k): poly-Fueter regular of the same order."""
        return qpoly.c_n(self.component_expansions())

    def to_float(self) -> "SlicePolyFn":
        return SlicePolyFn([c.to_float() for c in self._components])

    def to_json(self) -> dict:
        return {"order": self.order, "components": [c.to_json() for c in self._components]}

    @classmethod
    def from_json(cls, data) -> "SlicePolyFn":
        order, comps = _parse_fn_json(data)
        return cls(comps)


def _parse_fn_json(data) -> tuple[int, list[SliceRegularSeries]]:
    if not isinstance(data, dict) or "order" not in data or "components" not in data:
        raise ValueError('function JSON must be {"order": n, "components": [...]}')
    order = data["order"]
    raw = data["components"]
    if not isinstance(order, int) or order < 1:
        raise ValueError("order must be a positive integer")
    if not isinstance(raw, list) or len(raw) > order:
        raise ValueError("components must be a list with at most `order` entries")
    comps = [SliceRegularSeries.from_json(c) for c in raw]
    while len(comps) < order:
        comps.append(SliceRegularSeries())
    return order, comps


def expand(f: SlicePolyFn) -> QPoly:
    return f.expand()


def series_from_expansion(p: QPoly) -> SliceRegularSeries:
    """Recover sum_m q^m a_m from its expansion; NotInClass if p is not slice regular.

    a_m is the coefficient of the pure x0^m monomial, because q^m is the only
    power contributing that monomial (with unit coefficient).
    """
    if p.is_zero():
        return SliceRegularSeries()
    coeffs = [p.coeff((m, 0, 0, 0)) for m in range(int(p.degree) + 1)]
    rebuilt = QPoly.zero()
    for m, a in enumerate(coeffs):
        if not a.is_zero():
            rebuilt = rebuilt + qpoly.expand_q_power(m) * a
    if rebuilt != p:
        raise NotInClass("polynomial is not the expansion of a slice regular series")
    return SliceRegularSeries(coeffs)


def decompose(p: QPoly, n: int) -> SlicePolyFn:
    """Recover the unique components of an order-n slice polyanalytic expansion.

    Peels from the top: V^k applied to the residual isolates
    2^k k! (f_k expansion), which is read back into a series.  Returns the
    minimal order; raises NotInClass when p is outside the class.
    """
    if n < 1:
        raise ValueError("order must be >= 1")
    comps: list[SliceRegularSeries] = [SliceRegularSeries()] * n
    work = p
    for k in range(n - 1, -1, -1):
        g = work
        try:
            for _ in range(k):
                g = qpoly.global_v(g)
        except NotDivisible as exc:
            raise NotInClass(
                f"normalized global operator does not extend at level {k}"
            ) from exc
        f_k = series_from_expansion(g * Fraction(1, (2**k) * math.factorial(k)))
        comps[k] = f_k
        if not f_k.is_zero():
            work = work - qpoly.expand_qbar_power(k) * f_k.expand()
    if not work.is_zero():
        raise NotInClass("nonzero residual after peeling all components")
    return SlicePolyFn(comps).trim()


# -- slice restriction and splitting -------------------------------------------


def _dot4(a: Quaternion, b: Quaternion) -> float:
    return a.w * b.w + a.x * b.x + a.y * b.y + a.z * b.z


def _anticommute(i: UnitImaginary, j: UnitImaginary, tol: float = 1e-12) -> bool:
    s = i.u * j.u + j.u * i.u
    return abs(s) <= tol


def canonical_perp(i: UnitImaginary) -> UnitImaginary:
    """A deterministic unit orthogonal to i: normalize i x e1, falling back to i x e2."""
    u = i.to_float().u
    vx, vy, vz = 0.0, u.z, -u.y          # cross(vec(i), e1)
    if vy * vy + vz * vz < 1e-12:
        vx, vy, vz = -u.z, 0.0, u.x      # cross(vec(i), e2)
    return UnitImaginary.from_vector(vx, vy, vz)


def embed_complex(c: complex, i: UnitImaginary) -> Quaternion:
    """The point c.real + c.imag * i on the slice of i (float backend)."""
    u = i.to_float().u
    return quatf(c.real) + u * c.imag


def project_complex(q: Quaternion, i: UnitImaginary) -> complex:
    """Inverse of embed_complex for points on the slice of i."""
    qf = q.to_float()
    return complex(qf.w, _dot4(qf, i.to_float().u))


@dataclass(frozen=True)
class SliceRestriction:
    """Restriction of a slice polyanalytic function to a complex slice.

    Holds the split ``f_I(z) = F(z) + G(z) J`` with F, G complex polyanalytic
    polynomials in (z, conj z), identified with ordinary complex values via
    1 -> 1, I -> i.  Calling the restriction evaluates f on the slice.
    """

    I: UnitImaginary
    J: UnitImaginary
    order: int
    f_terms: dict = field(repr=False)
    g_terms: dict = field(repr=False)

    def _eval_terms(self, terms: dict, z: complex) -> complex:
        acc = 0j
        zbar = z.conjugate()
        for (k, m), c in terms.items():
            acc += zbar**k * z**m * c
        return acc

    def F(self, z: complex) -> complex:
        return self._eval_terms(self.f_terms, z)

    def G(self, z: complex) -> complex:
        return self._eval_terms(self.g_terms, z)

    def __call__(self, z: complex) -> Quaternion:
        fv = embed_complex(self.F(z), self.I)
        gv = embed_complex(self.G(z), self.I)
        return fv + gv * self.J.to_float().u


def restrict(f: SlicePolyFn, i: UnitImaginary, j: UnitImaginary) -> SliceRestriction:
    """Split the restriction f_I over the orthogonal pair (i, j).

    Every coefficient a splits as a1 + a2 j with a1, a2 on the slice of i;
    the (k, m) term conj(z)^k z^m a then contributes a1 to F and a2 to G.
    Raises NotOrthogonal unless i and j anticommute.
    """
    i = i.to_float()
    j = j.to_float()
    if not _anticommute(i, j):
        raise NotOrthogonal("the chosen units do not anticommute")
    one = quatf(1.0)
    iu, ju = i.u, j.u
    ku = iu * ju
    f_terms: dict[tuple[int, int], complex] = {}
    g_terms: dict[tuple[int, int], complex] = {}
    for k, comp in enumerate(f.components):
        for m, a in enumerate(comp.coeffs):
            av = a.to_float()
            c1 = complex(_dot4(av, one), _dot4(av, iu))
            c2 = complex(_dot4(av, ju), _dot4(av, ku))
            if c1:
                f_terms[(k, m)] = f_terms.get((k, m), 0j) + c1
            if c2:
                g_terms[(k, m)] = g_terms.get((k, m), 0j) + c2
    return SliceRestriction(I=i, J=j, order=f.order, f_terms=f_terms, g_terms=g_terms)


# -- slice Cauchy-Riemann derivatives and the representation formula ------------


def slice_cr_derivative(
    f: SlicePolyFn, i: UnitImaginary, j: int
) -> Callable[[Quaternion], Quaternion]:
    """The j-th slice CR derivative of f as a callable on the slice of ``i``.

    Closed form: sum_{k >= j} k!/(k-j)! conj(z)^(k-j) f_k(z).  The value only
    depends on z, which the caller must take on the slice of ``i``; j >= order
    gives the zero function.
    """
    if j < 0:
        raise ValueError("derivative order must be nonnegative")
    comps = f.components
    order = f.order

    def deriv(z: Quaternion) -> Quaternion:
        acc = ZERO if z.is_exact else quatf()
        if j >= order:
            return acc
        zbar = z.conjugate()
        for k in range(j, order):
            comp = comps[k]
            if comp.is_zero():
                continue
            acc = acc + zbar ** (k - j) * comp.evaluate(z) * _falling(k, j)
        return acc

    return deriv


def slice_extend(
    phi: Callable[[Quaternion], Quaternion], j: UnitImaginary, q: Quaternion
) -> Quaternion:
    """Representation-formula extension of slice data to an arbitrary point.

    phi supplies values on the slice of ``j`` at z = x + jy and conj(z); the
    extension at q = x + I_q y is
    (phi(z) + phi(conj z))/2 + (I_q j / 2)(phi(conj z) - phi(z)).
    Real q reproduces phi(x) independently of the unit convention.
    """
    coords = slice_decompose(q.to_float())
    ju = j.to_float().u
    z = quatf(coords.x) + ju * coords.y
    a = phi(z)
    b = phi(z.conjugate())
    return (a + b) * 0.5 + (coords.I.u * ju) * ((b - a) * 0.5)


# -- the Appell ladder ------------------------------------------------------------


def appell_apply(f: SliceRegularSeries, k: int) -> SlicePolyFn:
    """The order-(k+1) function conj(q)^k f(q)."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    comps = [SliceRegularSeries()] * k + [f]
    return SlicePolyFn(comps)


def appell_check(f: SliceRegularSeries, k: int) -> bool:
    """Exact ladder identity: (1/2) V(conj(q)^k f) == k conj(q)^(k-1) f."""
    lhs = qpoly.global_v(appell_apply(f, k).expand()) * Fraction(1, 2)
    if k == 0:
        return lhs.is_zero()
    rhs = appell_apply(f, k - 1).expand() * k
    return lhs == rhs


# -- right-sided variants (for the bilinear Cauchy integral) -----------------------


class RightSlicePolyFn:
    """Right slice polyanalytic function g(q) = sum_k g_k(q) conj(q)^k.

    Component series carry *left* coefficients: g_k(q) = sum_m a_m q^m.
    """

    __slots__ = ("_components",)

    def __init__(self, components: Sequence[Sequence[Quaternion]]):
        comps = []
        for coeffs in components:
            coeffs = list(coeffs)
            while coeffs and coeffs[-1].is_zero():
                coeffs.pop()
            comps.append(tuple(coeffs))
        if not comps:
            raise ValueError("order must be at least 1")
        self._components = tuple(comps)

    @property
    def order(self) -> int:
        return len(self._components)

    @property
    def components(self) -> tuple[tuple[Quaternion, ...], ...]:
        return self._components

    def evaluate(self, q: Quaternion) -> Quaternion:
        qbar = q.conjugate()
        acc = ZERO if q.is_exact else quatf()
        for k, coeffs in enumerate(self._components):
            if coeffs:
                acc = acc + self._eval_component(k, q) * qbar**k
        return acc

    def _eval_component(self, k: int, q: Quaternion) -> Quaternion:
        coeffs = self._components[k]
        if not coeffs:
            return ZERO if q.is_exact else quatf()
        if not q.is_exact and coeffs[0].is_exact:
            coeffs = tuple(c.to_float() for c in coeffs)
        acc = coeffs[-1]
        for m in range(len(coeffs) - 2, -1, -1):
            acc = acc * q + coeffs[m]
        return acc

    def to_float(self) -> "RightSlicePolyFn":
        return RightSlicePolyFn([[c.to_float() for c in comp] for comp in self._components])

    @classmethod
    def from_json(cls, data) -> "RightSlicePolyFn":
        order, comps = _parse_fn_json(data)
        return cls([c.coeffs for c in comps])


def right_cr_derivative(
    g: RightSlicePolyFn, i: UnitImaginary, j: int
) -> Callable[[Quaternion], Quaternion]:
    """j-th right slice CR derivative: sum_{k >= j} k!/(k-j)! g_k(z) conj(z)^(k-j)."""
    if j < 0:
        raise ValueError("derivative order must be nonnegative")
    order = g.order

    def deriv(z: Quaternion) -> Quaternion:
        acc = ZERO if z.is_exact else quatf()
        if j >= order:
            return acc
        zbar = z.conjugate()
        for k in range(j, order):
            if g.components[k]:
                acc = acc + g._eval_component(k, z) * zbar ** (k - j) * _falling(k, j)
        return acc

    return deriv
