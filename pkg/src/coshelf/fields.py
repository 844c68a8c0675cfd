"""Exact scalar arithmetic over Q, Q(i), and prime fields F_p.

Every computation in this library is exact: rationals are stdlib
``fractions.Fraction`` (arbitrary-precision), Gaussian rationals are pairs of
fractions, and prime-field elements are residues ``0 <= r < p``.  Equality of
canonical forms is decidable, so verification of algebraic identities reduces
to structural equality of matrices.

Raw payloads vs. wrapped elements: matrices elsewhere in the package store
*raw* payloads (``int``/``Fraction`` for Q, ``GaussianRational`` for Q(i),
``int`` residues for F_p).  The ``FieldElement`` wrapper carries the field
spec alongside the payload and is the unit of the public parse/arith API.
For Q an integer-valued scalar is kept as a plain ``int`` (exact, and much
faster in hot loops); ``Fraction(2, 1) == 2`` so equality is unaffected.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

RATIONALS = "Rationals"
GAUSSIAN = "GaussianRationals"
PRIME = "PrimeField"


class FieldError(ValueError):
    pass


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class GaussianRational:
    """re + im*i with both parts reduced fractions."""

    re: Fraction
    im: Fraction

    def __add__(self, other):
        other = _as_gauss(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_gauss(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = _as_gauss(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _as_gauss(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __truediv__(self, other):
        other = _as_gauss(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _as_gauss(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def inverse(self) -> "GaussianRational":
        n = self.re * self.re + self.im * self.im
        if n == 0:
            raise ZeroDivisionError("inverse of zero in Q(i)")
        return GaussianRational(self.re / n, -self.im / n)

    def __eq__(self, other):
        other = _as_gauss(other)
        if other is NotImplemented:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __abs__(self):
        # Only used by generic code asking "is this nonzero"; not an absolute value.
        raise TypeError("Q(i) has no ordering")


def _as_gauss(x):
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (int, Fraction)):
        return GaussianRational(Fraction(x), Fraction(0))
    return NotImplemented


GAUSS_I = GaussianRational(Fraction(0), Fraction(1))


@dataclass(frozen=True)
class FieldSpec:
    """Which exact field scalars live in; ``modulus`` only for F_p."""

    kind: str
    modulus: int | None = None

    def __post_init__(self):
        if self.kind not in (RATIONALS, GAUSSIAN, PRIME):
            raise FieldError(f"unknown field kind {self.kind!r}")
        if self.kind == PRIME:
            if self.modulus is None or not _is_prime(self.modulus):
                raise FieldError(f"modulus {self.modulus!r} is not prime")
        elif self.modulus is not None:
            raise FieldError("modulus only makes sense for a prime field")

    # ----- characteristic bookkeeping ------------------------------------
    @property
    def characteristic(self) -> int:
        return self.modulus if self.kind == PRIME else 0

    @property
    def is_modular(self) -> bool:
        return self.kind == PRIME

    # ----- raw payload helpers -------------------------------------------
    def zero(self):
        if self.kind == GAUSSIAN:
            return GaussianRational(Fraction(0), Fraction(0))
        return 0

    def one(self):
        if self.kind == GAUSSIAN:
            return GaussianRational(Fraction(1), Fraction(0))
        return 1

    def coerce(self, x):
        """Bring x (int / Fraction / GaussianRational / FieldElement) to a raw payload."""
        if isinstance(x, FieldElement):
            if x.spec != self:
                raise FieldError(f"element of {x.spec} used in {self}")
            return x.value
        if self.kind == PRIME:
            if isinstance(x, (int,)):
                return x % self.modulus
            if isinstance(x, Fraction):
                if x.denominator == 1:
                    return x.numerator % self.modulus
                return (x.numerator * pow(x.denominator, -1, self.modulus)) % self.modulus
            raise FieldError(f"cannot coerce {x!r} into F_{self.modulus}")
        if self.kind == RATIONALS:
            if isinstance(x, int):
                return x
            if isinstance(x, Fraction):
                return x.numerator if x.denominator == 1 else x
            raise FieldError(f"cannot coerce {x!r} into Q")
        g = _as_gauss(x)
        if g is NotImplemented:
            raise FieldError(f"cannot coerce {x!r} into Q(i)")
        return g

    def add(self, a, b):
        return (a + b) % self.modulus if self.kind == PRIME else a + b

    def sub(self, a, b):
        return (a - b) % self.modulus if self.kind == PRIME else a - b

    def mul(self, a, b):
        return (a * b) % self.modulus if self.kind == PRIME else a * b

    def neg(self, a):
        return (-a) % self.modulus if self.kind == PRIME else -a

    def inv(self, a):
        if self.kind == PRIME:
            if a % self.modulus == 0:
                raise ZeroDivisionError("inverse of zero in F_p")
            return pow(a, -1, self.modulus)
        if not a:
            raise ZeroDivisionError("inverse of zero")
        if self.kind == GAUSSIAN:
            return a.inverse()
        r = Fraction(1) / Fraction(a)
        return r.numerator if r.denominator == 1 else r

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a) -> bool:
        return (a % self.modulus == 0) if self.kind == PRIME else not a

    # ----- element wrapper -------------------------------------------------
    def element(self, x) -> "FieldElement":
        return FieldElement(self, self.coerce(x))

    # ----- printing --------------------------------------------------------
    def format(self, x) -> str:
        x = self.coerce(x)
        if self.kind == PRIME:
            return str(x)
        if self.kind == RATIONALS:
            return str(Fraction(x))
        return _format_gauss(x)

    def parse(self, text: str) -> "FieldElement":
        return parse_element(text, self)

    def __str__(self):
        if self.kind == PRIME:
            return f"F_{self.modulus}"
        return "Q" if self.kind == RATIONALS else "Q(i)"


QQ = FieldSpec(RATIONALS)
QQI = FieldSpec(GAUSSIAN)


def GF(p: int) -> FieldSpec:
    return FieldSpec(PRIME, p)


@dataclass(frozen=True)
class FieldElement:
    """A scalar in canonical form together with its field spec."""

    spec: FieldSpec
    value: object

    def _bin(self, other, op):
        if not isinstance(other, FieldElement):
            other = self.spec.element(other)
        if other.spec != self.spec:
            raise FieldError(f"mixed field specs {self.spec} and {other.spec}")
        return FieldElement(self.spec, op(self.value, other.value))

    def __add__(self, other):
        return self._bin(other, self.spec.add)

    def __sub__(self, other):
        return self._bin(other, self.spec.sub)

    def __mul__(self, other):
        return self._bin(other, self.spec.mul)

    def __neg__(self):
        return FieldElement(self.spec, self.spec.neg(self.value))

    def inverse(self):
        return FieldElement(self.spec, self.spec.inv(self.value))

    def __truediv__(self, other):
        return self._bin(other, self.spec.div)

    def is_zero(self):
        return self.spec.is_zero(self.value)

    def __str__(self):
        return self.spec.format(self.value)

    def __repr__(self):
        return f"FieldElement({self.spec}, {self})"


def arith(op: str, x: FieldElement, y: FieldElement | None = None) -> FieldElement:
    """Named-op entry point: add/sub/mul/neg/inv on canonical elements."""
    if op in ("neg", "inv"):
        if y is not None:
            raise FieldError(f"{op} is unary")
        return -x if op == "neg" else x.inverse()
    if y is None:
        raise FieldError(f"{op} needs two operands")
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    raise FieldError(f"unknown op {op!r}")


# --------------------------------------------------------------------------
# Literal grammar:  int | int/int | (frac)(+|-)(frac)i | int 'mod' p
# plus pure-imaginary forms like "i", "-i", "2i", "1/2i".
# --------------------------------------------------------------------------

_FRAC = r"-?\d+(?:/\d+)?"
_RE_FRAC = re.compile(rf"^({_FRAC})$")
_RE_MOD = re.compile(rf"^(-?\d+)\s*mod\s*(\d+)$")
_RE_IMAG = re.compile(rf"^([+-]?)((?:\d+(?:/\d+)?)?)i$")
_RE_COMPLEX = re.compile(rf"^({_FRAC})\s*([+-])\s*((?:\d+(?:/\d+)?)?)i$")


def _parse_frac(text: str) -> Fraction:
    if "/" in text:
        num, den = text.split("/")
        if int(den) == 0:
            raise FieldError("denominator zero")
        return Fraction(int(num), int(den))
    return Fraction(int(text))


def parse_element(literal: str, spec: FieldSpec) -> FieldElement:
    """Parse a scalar literal; parsing then printing round-trips on canonical forms."""
    text = literal.strip()
    m = _RE_MOD.match(text)
    if m:
        if spec.kind != PRIME:
            raise FieldError(f"'mod' literal {literal!r} outside a prime field")
        if int(m.group(2)) != spec.modulus:
            raise FieldError(f"modulus mismatch: {literal!r} vs {spec}")
        return spec.element(int(m.group(1)))
    if spec.kind == GAUSSIAN:
        m = _RE_COMPLEX.match(text)
        if m:
            re_part = _parse_frac(m.group(1))
            im = _parse_frac(m.group(3)) if m.group(3) else Fraction(1)
            if m.group(2) == "-":
                im = -im
            return spec.element(GaussianRational(re_part, im))
        m = _RE_IMAG.match(text)
        if m:
            im = _parse_frac(m.group(2)) if m.group(2) else Fraction(1)
            if m.group(1) == "-":
                im = -im
            return spec.element(GaussianRational(Fraction(0), im))
    m = _RE_FRAC.match(text)
    if m:
        return spec.element(_parse_frac(text))
    raise FieldError(f"malformed {spec} literal {literal!r}")


def _format_frac_for_gauss(f: Fraction) -> str:
    return str(f)


def _format_gauss(g: GaussianRational) -> str:
    re_part, im = g.re, g.im
    if not im:
        return str(re_part)
    if im > 0:
        ustr = "i" if im == 1 else f"{im}i"
        sign = "+"
    else:
        ustr = "i" if im == -1 else f"{-im}i"
        sign = "-"
    if not re_part:
        return ustr if sign == "+" else f"-{ustr}"
    return f"{re_part}{sign}{ustr}"


def parse_field_spec(text: str) -> FieldSpec:
    """CLI/file field tags: 'q', 'qi', 'fp:<p>' (also 'f<p>' as a convenience)."""
    t = text.strip().lower()
    if t == "q":
        return QQ
    if t == "qi":
        return QQI
    m = re.match(r"^fp?:?(\d+)$", t)
    if m:
        return GF(int(m.group(1)))
    raise FieldError(f"unknown field spec {text!r}")


def field_spec_tag(spec: FieldSpec) -> str:
    if spec.kind == RATIONALS:
        return "q"
    if spec.kind == GAUSSIAN:
        return "qi"
    return f"fp:{spec.modulus}"
