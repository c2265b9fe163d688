"""
Exact Field

Cyclotomic number fields ℚ(ζ_n) with exact rational arithmetic.

An element is stored as an integer coefficient vector over a common positive
denominator, reduced modulo the n-th cyclotomic polynomial, so equality is
plain equality of the stored vectors.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from math import gcd
from typing import Iterable, List, Sequence, Tuple, Union

from backend.core.errors import FieldMismatchError

logger = logging.getLogger(__name__)

Rational = Union[int, Fraction]


# ---------------------------------------------------------------------------
# Integer polynomials
# ---------------------------------------------------------------------------


def _divisors(n: int) -> List[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def _exact_monic_div(num: List[int], den: Sequence[int]) -> List[int]:
    """Divide integer polynomials (lowest degree first); den is monic and divides num."""
    num = list(num)
    dn = len(den) - 1
    quot = [0] * (len(num) - dn)
    for k in range(len(num) - 1, dn - 1, -1):
        c = num[k]
        if c:
            quot[k - dn] = c
            for i in range(dn + 1):
                num[k - dn + i] -= c * den[i]
    if any(num):
        raise ArithmeticError("cyclotomic division left a remainder")
    return quot


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> Tuple[int, ...]:
    """
    Integer coefficients of Φ_n, lowest degree first.

    Computed by dividing xⁿ − 1 by Φ_d for every proper divisor d of n.
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"cyclotomic conductor must be a positive integer, got {n!r}")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in _divisors(n)[:-1]:
        poly = _exact_monic_div(poly, cyclotomic_polynomial(d))
    return tuple(poly)


def euler_phi(n: int) -> int:
    return len(cyclotomic_polynomial(n)) - 1


def _reduce_mod(poly: List[int], modulus: Sequence[int]) -> List[int]:
    """Reduce an integer polynomial modulo a monic integer polynomial, in place."""
    deg = len(modulus) - 1
    for k in range(len(poly) - 1, deg - 1, -1):
        c = poly[k]
        if c:
            poly[k] = 0
            base = k - deg
            for i in range(deg):
                if modulus[i]:
                    poly[base + i] -= c * modulus[i]
    del poly[deg:]
    poly.extend([0] * (deg - len(poly)))
    return poly


# ---------------------------------------------------------------------------
# Field and scalars
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CycloField:
    """The cyclotomic field ℚ(ζ_n); conductor 1 (or 2) is ℚ itself."""

    conductor: int

    @classmethod
    def of(cls, conductor: int) -> "CycloField":
        return _field(conductor)

    @property
    def modulus(self) -> Tuple[int, ...]:
        return cyclotomic_polynomial(self.conductor)

    @property
    def degree(self) -> int:
        return len(self.modulus) - 1

    def zero(self) -> "Scalar":
        return Scalar._make(self, (0,) * self.degree, 1)

    def one(self) -> "Scalar":
        return self.rational(1)

    def rational(self, value: Rational) -> "Scalar":
        value = Fraction(value)
        return Scalar._make(self, (value.numerator,) + (0,) * (self.degree - 1), value.denominator)

    def zeta(self, k: int = 1) -> "Scalar":
        """ζ_n^k for any integer k."""
        k %= self.conductor
        raw = [0] * (k + 1)
        raw[k] = 1
        return Scalar._make(self, tuple(_reduce_mod(raw, self.modulus)), 1)

    def from_coeffs(self, coeffs: Iterable[Rational]) -> "Scalar":
        """Element Σ c_k ζ^k; any length, reduced modulo Φ_n."""
        fracs = [Fraction(c) for c in coeffs]
        if not fracs:
            return self.zero()
        den = reduce(lambda a, b: a * b // gcd(a, b), (f.denominator for f in fracs), 1)
        raw = [f.numerator * (den // f.denominator) for f in fracs]
        return Scalar._normalized(self, _reduce_mod(raw, self.modulus), den)

    def coerce(self, value: Union["Scalar", Rational]) -> "Scalar":
        if isinstance(value, Scalar):
            if value.field != self:
                raise FieldMismatchError(
                    f"scalar from ℚ(ζ_{value.field.conductor}) used in ℚ(ζ_{self.conductor})"
                )
            return value
        if isinstance(value, (int, Fraction)):
            return self.rational(value)
        raise TypeError(f"cannot coerce {type(value).__name__} into a cyclotomic field")

    def __repr__(self):
        return f"CycloField({self.conductor})"


@lru_cache(maxsize=None)
def _field(conductor: int) -> CycloField:
    cyclotomic_polynomial(conductor)
    return CycloField(conductor)


class Scalar:
    """Immutable element of a cyclotomic field."""

    __slots__ = ("field", "num", "den", "_hash")

    def __init__(self, *args, **kwargs):
        raise TypeError("build scalars through CycloField (rational, zeta, from_coeffs)")

    @classmethod
    def _make(cls, field: CycloField, num: Tuple[int, ...], den: int) -> "Scalar":
        obj = object.__new__(cls)
        object.__setattr__(obj, "field", field)
        object.__setattr__(obj, "num", num)
        object.__setattr__(obj, "den", den)
        object.__setattr__(obj, "_hash", None)
        return obj

    @classmethod
    def _normalized(cls, field: CycloField, num: List[int], den: int) -> "Scalar":
        if den < 0:
            num = [-c for c in num]
            den = -den
        g = reduce(gcd, num, den)
        if g == 0 or not any(num):
            return cls._make(field, (0,) * field.degree, 1)
        if g != 1:
            num = [c // g for c in num]
            den //= g
        return cls._make(field, tuple(num), den)

    def __setattr__(self, key, value):
        raise AttributeError("Scalar is immutable")

    # -- inspection ---------------------------------------------------------

    @property
    def coeffs(self) -> Tuple[Fraction, ...]:
        return tuple(Fraction(c, self.den) for c in self.num)

    def is_zero(self) -> bool:
        return not any(self.num)

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self.num[0], self.den)

    def __bool__(self):
        return not self.is_zero()

    # -- arithmetic ---------------------------------------------------------

    def _other(self, other) -> "Scalar":
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldMismatchError(
                    f"ℚ(ζ_{self.field.conductor}) and ℚ(ζ_{other.field.conductor}) scalars mixed"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.rational(other)
        return NotImplemented

    def __add__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return Scalar._normalized(self.field, [a + b for a, b in zip(self.num, other.num)], self.den)
        return Scalar._normalized(
            self.field,
            [a * other.den + b * self.den for a, b in zip(self.num, other.num)],
            self.den * other.den,
        )

    __radd__ = __add__

    def __neg__(self):
        return Scalar._make(self.field, tuple(-c for c in self.num), self.den)

    def __sub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        if self.is_rational():
            a = self.num[0]
            return Scalar._normalized(self.field, [a * c for c in other.num], self.den * other.den)
        if other.is_rational():
            b = other.num[0]
            return Scalar._normalized(self.field, [b * c for c in self.num], self.den * other.den)
        prod = [0] * (2 * self.field.degree - 1)
        for i, a in enumerate(self.num):
            if a:
                for j, b in enumerate(other.num):
                    if b:
                        prod[i + j] += a * b
        return Scalar._normalized(self.field, _reduce_mod(prod, self.field.modulus), self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        return _inverse(self)

    def __truediv__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        result = self.field.one()
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field.rational(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.field == other.field and self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            if self.is_rational():
                value = hash(Fraction(self.num[0], self.den))
            else:
                value = hash((self.field.conductor, self.num, self.den))
            object.__setattr__(self, "_hash", value)
        return self._hash

    # -- rendering ----------------------------------------------------------

    def __str__(self):
        if self.is_rational():
            return str(Fraction(self.num[0], self.den))
        parts = []
        for k, c in enumerate(self.num):
            if not c:
                continue
            coeff = Fraction(c, self.den)
            power = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
            if not power:
                parts.append(str(coeff))
            elif coeff == 1:
                parts.append(power)
            elif coeff == -1:
                parts.append(f"-{power}")
            else:
                parts.append(f"{coeff}*{power}")
        return "(" + " + ".join(parts).replace("+ -", "- ") + ")"

    def __repr__(self):
        return f"Scalar[{self.field.conductor}]{self}"


# ---------------------------------------------------------------------------
# Inversion by extended Euclid over ℚ[x]
# ---------------------------------------------------------------------------


def _trim(p: List[Fraction]) -> List[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod(a: List[Fraction], b: List[Fraction]) -> Tuple[List[Fraction], List[Fraction]]:
    a = list(a)
    quot = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lead = b[-1]
    while len(_trim(a)) >= len(b):
        shift = len(a) - len(b)
        c = a[-1] / lead
        quot[shift] = c
        for i, bc in enumerate(b):
            a[shift + i] -= c * bc
    return _trim(quot), a


def _poly_sub_mul(s0: List[Fraction], q: List[Fraction], s1: List[Fraction]) -> List[Fraction]:
    out = list(s0) + [Fraction(0)] * max(0, len(q) + len(s1) - 1 - len(s0))
    for i, a in enumerate(q):
        for j, b in enumerate(s1):
            out[i + j] -= a * b
    return _trim(out)


@lru_cache(maxsize=4096)
def _inverse(x: Scalar) -> Scalar:
    field = x.field
    r0 = [Fraction(c) for c in field.modulus]
    r1 = _trim([Fraction(c, x.den) for c in x.num])
    s0: List[Fraction] = []
    s1 = [Fraction(1)]
    while r1:
        q, rem = _poly_divmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, _poly_sub_mul(s0, q, s1)
    # r0 is a nonzero constant because Φ_n is irreducible
    c = r0[0]
    return field.from_coeffs([a / c for a in s0])


# ---------------------------------------------------------------------------
# Quantum parameters
# ---------------------------------------------------------------------------


def quantum_integer(n: int, q: Scalar) -> Scalar:
    """⟦n⟧ = (qⁿ − q⁻ⁿ)/(q − q⁻¹)."""
    denominator = q - q.inverse()
    if denominator.is_zero():
        raise ValueError("quantum integers need q² ≠ 1")
    return (q ** n - q ** (-n)) / denominator


def sqrt_two(field: CycloField) -> Scalar:
    """√2 = ω + ω⁻¹ for the primitive 8th root of unity ω = ζ^(n/8)."""
    if field.conductor % 8:
        raise ValueError(f"√2 is not available in ℚ(ζ_{field.conductor}); conductor must be a multiple of 8")
    step = field.conductor // 8
    return field.zeta(step) + field.zeta(-step)


@dataclass(frozen=True)
class RootOfUnityLevel:
    """
    Parameters of level r: ζ = ζ_{8r}, ε = ζ² (a primitive 4r-th root),
    q = ε² and q^{1/2} = ε, all inside one ambient field.
    """

    r: int

    def __post_init__(self):
        if not isinstance(self.r, int) or self.r < 3:
            raise ValueError(f"level r must be an integer ≥ 3, got {self.r!r}")

    @property
    def field(self) -> CycloField:
        return CycloField.of(8 * self.r)

    @property
    def epsilon(self) -> Scalar:
        return self.field.zeta(2)

    @property
    def q(self) -> Scalar:
        return self.field.zeta(4)

    def q_half_power(self, k: int) -> Scalar:
        """q^{k/2}."""
        return self.field.zeta(2 * k)

    def qint(self, n: int) -> Scalar:
        return _level_qint(self.r, n)

    @property
    def sqrt2(self) -> Scalar:
        return sqrt_two(self.field)


@lru_cache(maxsize=None)
def _level_qint(r: int, n: int) -> Scalar:
    return quantum_integer(n, CycloField.of(8 * r).zeta(4))
