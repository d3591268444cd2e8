"""Quaternion arithmetic over two scalar backends.

A quaternion ``w + x*e1 + y*e2 + z*e3`` either carries exact rational
components (``fractions.Fraction``) or binary64 components.  The backend is
fixed per value, arithmetic never mixes backends, and the only way from exact
to float is the explicit ``to_float`` call.  Exact values feed the polynomial
operator calculus; float values feed kernel evaluation and quadrature.

All values are immutable and all operations are pure, so everything here can
be shared freely between threads.
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass
from fractions import Fraction

from .errors import NoExactSqrt

Scalar = Fraction | float

#: default absolute tolerance for float comparisons of O(1) quantities
DEFAULT_TOL = 1e-12

_UNIT_ULPS = 8 * sys.float_info.epsilon


def exact_sqrt(value: Fraction | int) -> Fraction:
    """Square root of a nonnegative rational, or NoExactSqrt if irrational."""
    if value < 0:
        raise ValueError("square root of a negative rational")
    value = Fraction(value)
    num, den = value.numerator, value.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn != num or rd * rd != den:
        raise NoExactSqrt(f"{value} has no rational square root")
    return Fraction(rn, rd)


@dataclass(frozen=True, slots=True)
class Quaternion:
    """A quaternion with homogeneous scalar components.

    Integer and ``Fraction`` components form the exact backend; a single
    float component makes the whole value float-backed.  Mixing a float with
    a ``Fraction`` raises, since that would silently lose exactness.
    """

    w: Scalar
    x: Scalar
    y: Scalar
    z: Scalar

    def __post_init__(self):
        comps = (self.w, self.x, self.y, self.z)
        if any(type(c) is float for c in comps):
            if any(isinstance(c, Fraction) for c in comps):
                raise TypeError("cannot mix float and exact components; use to_float()")
            for name, c in zip("wxyz", comps):
                if type(c) is not float:
                    object.__setattr__(self, name, float(c))
        else:
            # exact backend: ints stay ints (fast path), Fractions appear only
            # where division forces them; both are exact and interoperate
            for name, c in zip("wxyz", comps):
                if not isinstance(c, (int, Fraction)):
                    raise TypeError(f"unsupported scalar type {type(c).__name__}")

    # -- backend ----------------------------------------------------------

    @classmethod
    def _new(cls, w, x, y, z) -> "Quaternion":
        # trusted fast path for arithmetic results: components are already
        # homogeneous, skip normalization
        q = cls.__new__(cls)
        object.__setattr__(q, "w", w)
        object.__setattr__(q, "x", x)
        object.__setattr__(q, "y", y)
        object.__setattr__(q, "z", z)
        return q

    @property
    def is_exact(self) -> bool:
        return not isinstance(self.w, float)

    def to_float(self) -> "Quaternion":
        """Explicit one-way conversion to the binary64 backend."""
        if not self.is_exact:
            return self
        return Quaternion(float(self.w), float(self.x), float(self.y), float(self.z))

    def _same_backend(self, other: "Quaternion") -> None:
        if self.is_exact != other.is_exact:
            raise TypeError("mixed scalar backends; convert explicitly with to_float()")

    # -- ring structure ----------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Quaternion):
            return NotImplemented
        self._same_backend(other)
        return Quaternion._new(self.w + other.w, self.x + other.x, self.y + other.y, self.z + other.z)

    def __sub__(self, other):
        if not isinstance(other, Quaternion):
            return NotImplemented
        self._same_backend(other)
        return Quaternion._new(self.w - other.w, self.x - other.x, self.y - other.y, self.z - other.z)

    def __neg__(self):
        return Quaternion._new(-self.w, -self.x, -self.y, -self.z)

    def __mul__(self, other):
        if isinstance(other, Quaternion):
            self._same_backend(other)
            a, b, c, d = self.w, self.x, self.y, self.z
            e, f, g, h = other.w, other.x, other.y, other.z
            return Quaternion._new(
                a * e - b * f - c * g - d * h,
                a * f + b * e + c * h - d * g,
                a * g - b * h + c * e + d * f,
                a * h + b * g - c * f + d * e,
            )
        if isinstance(other, (int, Fraction, float)):
            s = self._coerce_scalar(other)
            return Quaternion._new(self.w * s, self.x * s, self.y * s, self.z * s)
        return NotImplemented

    def __rmul__(self, other):
        # real scalars commute with everything
        if isinstance(other, (int, Fraction, float)):
            return self.__mul__(other)
        return NotImplemented

    def _coerce_scalar(self, s):
        if isinstance(s, int):
            return s
        if self.is_exact:
            if isinstance(s, Fraction):
                return s
            raise TypeError("float scalar applied to an exact quaternion")
        if isinstance(s, float):
            return s
        raise TypeError("exact scalar applied to a float quaternion")

    def __pow__(self, n: int) -> "Quaternion":
        if not isinstance(n, int) or n < 0:
            raise ValueError("quaternion powers are defined for nonnegative integers")
        result = Quaternion(1, 0, 0, 0) if self.is_exact else Quaternion(1.0, 0.0, 0.0, 0.0)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # -- involutions and norms ---------------------------------------------

    def conjugate(self) -> "Quaternion":
        return Quaternion._new(self.w, -self.x, -self.y, -self.z)

    def norm_sq(self) -> Scalar:
        return self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z

    def vec_norm_sq(self) -> Scalar:
        """Squared norm of the vector part."""
        return self.x * self.x + self.y * self.y + self.z * self.z

    def __abs__(self) -> float:
        return math.sqrt(float(self.norm_sq()))

    def vec(self) -> "Quaternion":
        zero = 0 if self.is_exact else 0.0
        return Quaternion._new(zero, self.x, self.y, self.z)

    def is_zero(self) -> bool:
        return not (self.w or self.x or self.y or self.z)

    def is_real(self) -> bool:
        return not (self.x or self.y or self.z)

    def inverse(self) -> "Quaternion":
        n2 = self.norm_sq()
        if not n2:
            raise ZeroDivisionError("zero quaternion has no inverse")
        if self.is_exact:
            return self.conjugate() * (Fraction(1) / n2)
        return self.conjugate() * (1.0 / n2)

    def approx_eq(self, other: "Quaternion", tol: float = DEFAULT_TOL) -> bool:
        d = self.to_float() - other.to_float()
        return abs(d) <= tol

    # -- serialization -----------------------------------------------------

    def to_json(self):
        """JSON 4-array; exact scalars become "p/q" strings."""
        if self.is_exact:
            return [str(c) for c in (self.w, self.x, self.y, self.z)]
        return [self.w, self.x, self.y, self.z]

    @classmethod
    def from_json(cls, data) -> "Quaternion":
        if isinstance(data, (int, float, str)):
            data = [data, 0, 0, 0]
        if not isinstance(data, (list, tuple)) or len(data) != 4:
            raise ValueError("quaternion JSON must be a 4-array [w, x, y, z]")
        return cls(*(_scalar_from_json(c) for c in data))

    def __str__(self) -> str:
        return f"({self.w}, {self.x}, {self.y}, {self.z})"


def _scalar_from_json(c) -> Scalar:
    if isinstance(c, str):
        return Fraction(c)
    if isinstance(c, bool) or not isinstance(c, (int, float)):
        raise ValueError(f"bad scalar in quaternion JSON: {c!r}")
    return c


def quatf(w=0.0, x=0.0, y=0.0, z=0.0) -> Quaternion:
    """Float-backed quaternion from anything numeric."""
    return Quaternion(float(w), float(x), float(y), float(z))


ZERO = Quaternion(0, 0, 0, 0)
ONE = Quaternion(1, 0, 0, 0)
E1 = Quaternion(0, 1, 0, 0)
E2 = Quaternion(0, 0, 1, 0)
E3 = Quaternion(0, 0, 0, 1)


def mul(p: Quaternion, q: Quaternion) -> Quaternion:
    """Hamilton product (noncommutative)."""
    return p * q


def inverse(q: Quaternion) -> Quaternion:
    return q.inverse()


@dataclass(frozen=True, slots=True)
class UnitImaginary:
    """An imaginary unit: zero real part and unit vector norm, so u*u == -1.

    The exact backend validates exactly; the float backend allows 8 ulps of
    drift on both conditions.
    """

    u: Quaternion

    def __post_init__(self):
        q = self.u
        if q.is_exact:
            if q.w != 0 or q.vec_norm_sq() != 1:
                raise ValueError(f"{q} is not an exact imaginary unit")
        else:
            if abs(q.w) > _UNIT_ULPS or abs(q.vec_norm_sq() - 1.0) > _UNIT_ULPS:
                raise ValueError(f"{q} is not an imaginary unit within 8 ulps")

    @classmethod
    def from_vector(cls, x: float, y: float, z: float) -> "UnitImaginary":
        """Normalize a nonzero 3-vector into a float-backed unit."""
        n = math.sqrt(x * x + y * y + z * z)
        if n == 0.0:
            raise ValueError("cannot normalize the zero vector")
        return cls(Quaternion(0.0, x / n, y / n, z / n))

    @property
    def is_exact(self) -> bool:
        return self.u.is_exact

    def to_float(self) -> "UnitImaginary":
        return self if not self.is_exact else UnitImaginary(self.u.to_float())

    def __str__(self) -> str:
        return str(self.u)


U1 = UnitImaginary(E1)
U2 = UnitImaginary(E2)
U3 = UnitImaginary(E3)


@dataclass(frozen=True, slots=True)
class SliceCoords:
    """Coordinates q = x + I*y with y >= 0 on the complex slice spanned by I."""

    x: Scalar
    y: Scalar
    I: UnitImaginary

    def recompose(self) -> Quaternion:
        if isinstance(self.x, float):
            return Quaternion(self.x, 0.0, 0.0, 0.0) + self.I.u * self.y
        return Quaternion(self.x, 0, 0, 0) + self.I.u * self.y


def slice_decompose(q: Quaternion) -> SliceCoords:
    """Write q = x + I*y with y >= 0; real q gets the e1 convention.

    On the exact backend the vector norm must have a rational square root
    (real axis, single-axis values, Pythagorean vector parts); otherwise
    NoExactSqrt is raised and the caller should convert to float first.
    """
    v2 = q.vec_norm_sq()
    if q.is_exact:
        if v2 == 0:
            return SliceCoords(q.w, Fraction(0), U1)
        y = exact_sqrt(v2)
        inv_y = Fraction(1) / y
        return SliceCoords(q.w, y, UnitImaginary(q.vec() * inv_y))
    if v2 == 0.0:
        return SliceCoords(q.w, 0.0, UnitImaginary(E1.to_float()))
    y = math.sqrt(v2)
    return SliceCoords(q.w, y, UnitImaginary(q.vec() * (1.0 / y)))


@dataclass(frozen=True, slots=True)
class QSphere:
    """The 2-sphere of quaternions sharing a real part and a vector modulus.

    The radius is stored squared so the exact backend never needs a square
    root; ``rad`` exposes the float radius.
    """

    re: Scalar
    rad_sq: Scalar

    @property
    def rad(self) -> float:
        return math.sqrt(float(self.rad_sq))

    def contains(self, q: Quaternion, tol: float = DEFAULT_TOL) -> bool:
        if not isinstance(self.re, float) and q.is_exact:
            return q.w == self.re and q.vec_norm_sq() == self.rad_sq
        qf = q.to_float()
        return (
            abs(qf.w - float(self.re)) <= tol
            and abs(math.sqrt(qf.vec_norm_sq()) - self.rad) <= tol
        )


def sphere_of(s: Quaternion) -> QSphere:
    return QSphere(s.w, s.vec_norm_sq())


def sphere_contains(sphere: QSphere, q: Quaternion, tol: float = DEFAULT_TOL) -> bool:
    return sphere.contains(q, tol)
