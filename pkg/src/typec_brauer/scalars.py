"""Exact coefficient arithmetic.

Coefficients live in the ring of Laurent polynomials in the loop
parameter (printed ``d``) over the rationals.  Generic computations use
the fraction field of that ring; numeric computations specialize the
loop parameter into Q or into a prime field.  Everything is exact:
plain integers and ``fractions.Fraction``, never floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    BadDenominatorError,
    DeltaNotInvertibleError,
    InvalidFieldError,
)

GENERIC = "generic"


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


class Laurent:
    """Sparse Laurent polynomial in the loop parameter over Q.

    Canonical form: term tuple sorted by ascending exponent with no zero
    coefficients, so two values are equal iff their stored terms are.
    Instances are immutable and hashable.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=()):
        acc: dict[int, Fraction] = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for exp, coeff in items:
            coeff = _as_fraction(coeff)
            if coeff:
                exp = int(exp)
                acc[exp] = acc.get(exp, Fraction(0)) + coeff
        object.__setattr__(self, "terms", tuple(sorted((e, c) for e, c in acc.items() if c)))

    def __setattr__(self, name, value):
        raise AttributeError("Laurent values are immutable")

    @classmethod
    def zero(cls) -> "Laurent":
        return cls()

    @classmethod
    def one(cls) -> "Laurent":
        return cls([(0, 1)])

    @classmethod
    def delta(cls, power: int = 1) -> "Laurent":
        return cls([(power, 1)])

    @classmethod
    def from_rational(cls, q) -> "Laurent":
        return cls([(0, _as_fraction(q))])

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, Laurent) and self.terms == other.terms

    def __hash__(self):
        return hash(self.terms)

    def __add__(self, other):
        return Laurent(list(self.terms) + list(other.terms))

    def __neg__(self):
        return Laurent([(e, -c) for e, c in self.terms])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        acc: dict[int, Fraction] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = e1 + e2
                acc[e] = acc.get(e, Fraction(0)) + c1 * c2
        return Laurent(acc)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are only defined for monomials")
        out = Laurent.one()
        for _ in range(k):
            out = out * self
        return out

    def shift(self, k: int) -> "Laurent":
        """Multiply by the k-th power of the loop parameter."""
        return Laurent([(e + k, c) for e, c in self.terms])

    def lowest_exponent(self) -> int:
        if not self.terms:
            raise ValueError("the zero polynomial has no lowest exponent")
        return self.terms[0][0]

    def highest_exponent(self) -> int:
        if not self.terms:
            raise ValueError("the zero polynomial has no highest exponent")
        return self.terms[-1][0]

    def leading_coefficient(self) -> Fraction:
        return self.terms[-1][1]

    def scale(self, q) -> "Laurent":
        q = _as_fraction(q)
        return Laurent([(e, c * q) for e, c in self.terms])

    def evaluate_rational(self, delta) -> Fraction:
        """Evaluate at a rational value of the loop parameter."""
        delta = _as_fraction(delta)
        total = Fraction(0)
        for e, c in self.terms:
            if e < 0 and delta == 0:
                raise DeltaNotInvertibleError(
                    "negative exponent evaluated at delta = 0"
                )
            total += c * delta**e
        return total

    def evaluate_mod(self, p: int, delta: int) -> int:
        """Evaluate at an element of the prime field F_p."""
        delta %= p
        total = 0
        for e, c in self.terms:
            if c.denominator % p == 0:
                raise BadDenominatorError(
                    f"denominator {c.denominator} vanishes in characteristic {p}"
                )
            if e < 0:
                if delta == 0:
                    raise DeltaNotInvertibleError(
                        "negative exponent evaluated at delta = 0"
                    )
                base = pow(delta, -e, p)
                base = pow(base, p - 2, p)
            else:
                base = pow(delta, e, p)
            num = c.numerator % p
            den_inv = pow(c.denominator % p, p - 2, p)
            total = (total + num * den_inv * base) % p
        return total

    def to_json(self):
        return [
            {"exp": e, "num": c.numerator, "den": c.denominator}
            for e, c in self.terms
        ]

    @classmethod
    def from_json(cls, data) -> "Laurent":
        return cls([(t["exp"], Fraction(t["num"], t["den"])) for t in data])

    def __repr__(self):
        return f"Laurent({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in reversed(self.terms):
            if e == 0:
                mon = str(c)
            else:
                dpow = "d" if e == 1 else f"d^{e}"
                if c == 1:
                    mon = dpow
                elif c == -1:
                    mon = f"-{dpow}"
                else:
                    mon = f"{c}*{dpow}"
            parts.append(mon)
        out = parts[0]
        for mon in parts[1:]:
            out += f" - {mon[1:]}" if mon.startswith("-") else f" + {mon}"
        return out


ZERO = Laurent.zero()
ONE = Laurent.one()
DELTA = Laurent.delta()


# -- polynomial helpers for the fraction field ------------------------------
#
# A "polynomial" here is a Laurent value with lowest exponent >= 0.


def _poly_divmod(a: Laurent, b: Laurent):
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    quot: dict[int, Fraction] = {}
    rem = a
    db = b.highest_exponent()
    lb = b.leading_coefficient()
    while rem and rem.highest_exponent() >= db:
        e = rem.highest_exponent() - db
        c = rem.leading_coefficient() / lb
        quot[e] = quot.get(e, Fraction(0)) + c
        rem = rem - b.shift(e).scale(c)
    return Laurent(quot), rem


def _poly_gcd(a: Laurent, b: Laurent) -> Laurent:
    """Monic gcd of two polynomials over Q (gcd(0, 0) = 0)."""
    while b:
        a, b = b, _poly_divmod(a, b)[1]
    if a.is_zero():
        return a
    return a.scale(1 / a.leading_coefficient())


def _poly_exact_div(a: Laurent, b: Laurent) -> Laurent:
    q, r = _poly_divmod(a, b)
    if r:
        raise ArithmeticError("division was expected to be exact")
    return q


class LaurentFraction:
    """Element of the fraction field of the Laurent ring.

    Canonical form: the denominator is a monic polynomial with nonzero
    constant term, coprime to the numerator's polynomial part; loop
    parameter powers are carried by the numerator alone.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Laurent, den: Laurent = ONE, _canonical=False):
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if not _canonical:
            num, den = self._normalize(num, den)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentFraction values are immutable")

    @staticmethod
    def _normalize(num: Laurent, den: Laurent):
        if num.is_zero():
            return ZERO, ONE
        shift_num = num.lowest_exponent()
        shift_den = den.lowest_exponent()
        num_poly = num.shift(-shift_num)
        den_poly = den.shift(-shift_den)
        g = _poly_gcd(num_poly, den_poly)
        if g.highest_exponent() > 0 or g.leading_coefficient() != 1:
            num_poly = _poly_exact_div(num_poly, g)
            den_poly = _poly_exact_div(den_poly, g)
        lc = den_poly.leading_coefficient()
        num_poly = num_poly.scale(1 / lc)
        den_poly = den_poly.scale(1 / lc)
        return num_poly.shift(shift_num - shift_den), den_poly

    @classmethod
    def zero(cls):
        return cls(ZERO, ONE, _canonical=True)

    @classmethod
    def one(cls):
        return cls(ONE, ONE, _canonical=True)

    @classmethod
    def from_laurent(cls, a: Laurent):
        return cls(a, ONE)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        return (
            isinstance(other, LaurentFraction)
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        return LaurentFraction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    def __neg__(self):
        return LaurentFraction(-self.num, self.den, _canonical=True)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        return LaurentFraction(self.num * other.num, self.den * other.den)

    def __truediv__(self, other):
        if other.is_zero():
            raise ZeroDivisionError("division by zero")
        return LaurentFraction(self.num * other.den, self.den * other.num)

    def __str__(self):
        if self.den == ONE:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"LaurentFraction({self})"


# -- field specifications ----------------------------------------------------


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    q = 2
    while q * q <= p:
        if p % q == 0:
            return False
        q += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Where coefficients live: characteristic and loop-parameter value.

    ``delta`` is ``None`` for the generic fraction field (characteristic
    must be 0), a Fraction in characteristic 0, or an int residue in
    characteristic p.
    """

    characteristic: int
    delta: object

    def __post_init__(self):
        p = self.characteristic
        if p != 0 and not _is_prime(p):
            raise InvalidFieldError(f"characteristic {p} is neither 0 nor prime")
        if self.delta is None:
            if p != 0:
                raise InvalidFieldError("generic delta requires characteristic 0")
        elif p == 0:
            if not isinstance(self.delta, (int, Fraction)):
                raise InvalidFieldError("delta must be rational in characteristic 0")
            object.__setattr__(self, "delta", _as_fraction(self.delta))
        else:
            if not isinstance(self.delta, int):
                raise InvalidFieldError("delta must be an integer residue mod p")
            object.__setattr__(self, "delta", self.delta % p)

    @classmethod
    def generic(cls) -> "FieldSpec":
        return cls(0, None)

    @classmethod
    def rational(cls, delta) -> "FieldSpec":
        return cls(0, _as_fraction(delta))

    @classmethod
    def prime(cls, p: int, delta: int) -> "FieldSpec":
        return cls(p, delta)

    @classmethod
    def parse(cls, delta_text: str, characteristic: int = 0) -> "FieldSpec":
        """Build a spec from CLI-style text: ``generic``, ``3``, or ``2/3``."""
        if delta_text == GENERIC:
            if characteristic != 0:
                raise InvalidFieldError("generic delta requires characteristic 0")
            return cls.generic()
        try:
            value = Fraction(delta_text)
        except (ValueError, ZeroDivisionError) as exc:
            raise InvalidFieldError(f"cannot parse delta {delta_text!r}") from exc
        if characteristic == 0:
            return cls(0, value)
        if value.denominator % characteristic == 0:
            raise BadDenominatorError(
                f"denominator {value.denominator} vanishes mod {characteristic}"
            )
        p = characteristic
        residue = value.numerator * pow(value.denominator % p, p - 2, p) % p
        return cls(p, residue)

    @property
    def is_generic(self) -> bool:
        return self.delta is None

    @property
    def delta_is_zero(self) -> bool:
        return self.delta == 0 if self.delta is not None else False

    @property
    def delta_text(self) -> str:
        return GENERIC if self.delta is None else str(self.delta)

    def field(self):
        if self.is_generic:
            return GenericField()
        if self.characteristic == 0:
            return RationalField(self.delta)
        return PrimeField(self.characteristic, self.delta)


class GenericField:
    """The fraction field of the Laurent ring."""

    name = "Q(d)"

    def zero(self):
        return LaurentFraction.zero()

    def one(self):
        return LaurentFraction.one()

    def from_rational(self, q):
        return LaurentFraction(Laurent.from_rational(q))

    def from_laurent(self, a: Laurent):
        return LaurentFraction(a)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def div(self, a, b):
        return a / b

    def is_zero(self, a):
        return a.is_zero()


class RationalField:
    """Q with a fixed rational value of the loop parameter."""

    def __init__(self, delta):
        self.delta = _as_fraction(delta)
        self.name = f"Q at delta={self.delta}"

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def from_rational(self, q):
        return _as_fraction(q)

    def from_laurent(self, a: Laurent):
        return a.evaluate_rational(self.delta)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero")
        return a / b

    def is_zero(self, a):
        return a == 0


class PrimeField:
    """F_p with a fixed residue of the loop parameter."""

    def __init__(self, p: int, delta: int):
        if not _is_prime(p):
            raise InvalidFieldError(f"{p} is not prime")
        self.p = p
        self.delta = delta % p
        self.name = f"F_{p} at delta={self.delta}"

    def zero(self):
        return 0

    def one(self):
        return 1

    def from_rational(self, q):
        q = _as_fraction(q)
        if q.denominator % self.p == 0:
            raise BadDenominatorError(
                f"denominator {q.denominator} vanishes in characteristic {self.p}"
            )
        return q.numerator * pow(q.denominator % self.p, self.p - 2, self.p) % self.p

    def from_laurent(self, a: Laurent):
        return a.evaluate_mod(self.p, self.delta)

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def div(self, a, b):
        if b % self.p == 0:
            raise ZeroDivisionError("division by zero")
        return a * pow(b, self.p - 2, self.p) % self.p

    def is_zero(self, a):
        return a % self.p == 0


def scalar_add(a: Laurent, b: Laurent) -> Laurent:
    return a + b


def scalar_multiply(a: Laurent, b: Laurent) -> Laurent:
    return a * b


def specialize(a: Laurent, spec: FieldSpec):
    """Map a Laurent scalar into the field described by ``spec``."""
    return spec.field().from_laurent(a)
