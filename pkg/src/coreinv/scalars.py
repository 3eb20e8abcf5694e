"""Exact scalar fields with an involution.

Three fields are supported:

* ``Q``  -- rationals, involution is the identity;
* ``Qi`` -- Gaussian rationals ``re + im*i``, involution is complex conjugation;
* ``Fp`` -- residues modulo a prime ``p < 2**16``, involution is the identity.

Rationals are ``gmpy2.mpq`` values when gmpy2 is importable and
:class:`fractions.Fraction` otherwise; both are always kept in lowest terms
with a positive denominator.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from .errors import FieldMismatch, MatrixFormatError

try:  # pragma: no cover - exercised implicitly
    from gmpy2 import mpq as Rational

    _RATIONAL_TYPES: tuple = (type(Rational(0)),)
except ImportError:  # pragma: no cover
    from fractions import Fraction as Rational

    _RATIONAL_TYPES = (Rational,)

__all__ = [
    "Rational",
    "GaussianRational",
    "PrimeFieldElement",
    "FieldSpec",
    "Q",
    "QI",
    "Fp",
    "is_prime",
    "scalar_arith",
]

MAX_PRIME = 1 << 16


def is_rational(x) -> bool:
    return isinstance(x, _RATIONAL_TYPES)


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class GaussianRational:
    """Element ``re + im*i`` of Q(i)."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if is_rational(re) else Rational(re)
        self.im = im if is_rational(im) else Rational(im)

    def _coerce(self, other):
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, int):
            return GaussianRational(other, 0)
        raise FieldMismatch(f"cannot combine Gaussian rational with {type(other).__name__}")

    def __add__(self, other):
        o = self._coerce(other)
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        a, b, c, d = self.re, self.im, o.re, o.im
        return GaussianRational(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        norm = o.re * o.re + o.im * o.im
        if not norm:
            raise ZeroDivisionError("division by zero in Q(i)")
        a, b, c, d = self.re, self.im, o.re, o.im
        return GaussianRational((a * c + b * d) / norm, (b * c - a * d) / norm)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, int):
            return self.re == other and not self.im
        return NotImplemented

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self):
        return f"GaussianRational({self.re!s}, {self.im!s})"

    def __str__(self):
        return QI.format(self)


class PrimeFieldElement:
    """Residue class modulo a prime ``p``."""

    __slots__ = ("residue", "p")

    def __init__(self, residue: int, p: int):
        self.p = p
        self.residue = residue % p

    def _coerce(self, other):
        if isinstance(other, PrimeFieldElement):
            if other.p != self.p:
                raise FieldMismatch(f"F_{self.p} vs F_{other.p}")
            return other.residue
        if isinstance(other, int):
            return other
        raise FieldMismatch(f"cannot combine F_{self.p} element with {type(other).__name__}")

    def __add__(self, other):
        return PrimeFieldElement(self.residue + self._coerce(other), self.p)

    __radd__ = __add__

    def __sub__(self, other):
        return PrimeFieldElement(self.residue - self._coerce(other), self.p)

    def __rsub__(self, other):
        return PrimeFieldElement(self._coerce(other) - self.residue, self.p)

    def __mul__(self, other):
        return PrimeFieldElement(self.residue * self._coerce(other), self.p)

    __rmul__ = __mul__

    def inverse(self):
        if not self.residue:
            raise ZeroDivisionError(f"division by zero in F_{self.p}")
        return PrimeFieldElement(pow(self.residue, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._coerce(other) % self.p
        if not o:
            raise ZeroDivisionError(f"division by zero in F_{self.p}")
        return PrimeFieldElement(self.residue * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        return PrimeFieldElement(self._coerce(other), self.p) / self

    def __neg__(self):
        return PrimeFieldElement(-self.residue, self.p)

    def __pos__(self):
        return self

    def conjugate(self):
        return self

    def __bool__(self):
        return self.residue != 0

    def __int__(self):
        return self.residue

    def __eq__(self, other):
        if isinstance(other, PrimeFieldElement):
            return self.p == other.p and self.residue == other.residue
        if isinstance(other, int):
            return self.residue == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.residue, self.p))

    def __repr__(self):
        return f"PrimeFieldElement({self.residue}, {self.p})"

    def __str__(self):
        return str(self.residue)


Scalar = Union[GaussianRational, PrimeFieldElement, "Rational"]

_RAT_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def _parse_rational(tok: str):
    if not _RAT_RE.match(tok):
        raise MatrixFormatError(f"bad rational token {tok!r}", token=tok)
    num, _, den = tok.partition("/")
    if den and int(den) == 0:
        raise MatrixFormatError(f"zero denominator in {tok!r}", token=tok)
    return Rational(int(num), int(den) if den else 1)


def _format_rational(x) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class FieldSpec:
    """Which scalar field (and hence which involution) a matrix lives over."""

    tag: str
    p: int | None = None

    def __post_init__(self):
        if self.tag not in ("Q", "Qi", "Fp"):
            raise ValueError(f"unknown field tag {self.tag!r}")
        if self.tag == "Fp":
            if self.p is None or not is_prime(self.p) or self.p >= MAX_PRIME:
                raise ValueError(f"Fp needs a prime p < {MAX_PRIME}, got {self.p!r}")
        elif self.p is not None:
            raise ValueError(f"field {self.tag} takes no modulus")

    @property
    def involution(self) -> str:
        return "conjugation" if self.tag == "Qi" else "identity"

    @property
    def is_finite(self) -> bool:
        return self.tag == "Fp"

    def __str__(self):
        return f"Fp:{self.p}" if self.tag == "Fp" else self.tag

    @classmethod
    def from_string(cls, text: str) -> "FieldSpec":
        """Parse ``Q``, ``Qi``, ``Fp:p`` (or ``Fp p``)."""
        t = text.strip()
        if t in ("Q", "Qi"):
            return cls(t)
        m = re.fullmatch(r"Fp[:\s]\s*(\d+)", t)
        if m:
            try:
                return cls("Fp", int(m.group(1)))
            except ValueError as exc:
                raise MatrixFormatError(str(exc), token=t) from None
        raise MatrixFormatError(f"unknown field {text!r}", token=text)

    def header(self) -> str:
        return f"field Fp {self.p}" if self.tag == "Fp" else f"field {self.tag}"

    # -- elements ---------------------------------------------------------

    def zero(self):
        return self.coerce(0)

    def one(self):
        return self.coerce(1)

    def coerce(self, value):
        """Embed an int, rational or element of this field."""
        if self.tag == "Q":
            if is_rational(value):
                return value
            if isinstance(value, (GaussianRational, PrimeFieldElement)):
                raise FieldMismatch(f"{value!r} is not in Q")
            return Rational(value)
        if self.tag == "Qi":
            if isinstance(value, GaussianRational):
                return value
            if isinstance(value, PrimeFieldElement):
                raise FieldMismatch(f"{value!r} is not in Qi")
            if isinstance(value, complex):
                raise TypeError("floating point values are not exact")
            return GaussianRational(value, 0)
        if isinstance(value, PrimeFieldElement):
            if value.p != self.p:
                raise FieldMismatch(f"F_{value.p} element used in F_{self.p}")
            return value
        if isinstance(value, int):
            return PrimeFieldElement(value, self.p)
        if is_rational(value) or hasattr(value, "denominator"):
            num = PrimeFieldElement(int(value.numerator), self.p)
            return num / PrimeFieldElement(int(value.denominator), self.p)
        raise FieldMismatch(f"cannot embed {value!r} in F_{self.p}")

    def contains(self, x) -> bool:
        if self.tag == "Q":
            return is_rational(x)
        if self.tag == "Qi":
            return isinstance(x, GaussianRational)
        return isinstance(x, PrimeFieldElement) and x.p == self.p

    def conj(self, x):
        if self.tag == "Qi":
            return x.conjugate()
        return x

    # -- text syntax ------------------------------------------------------

    def parse(self, token: str):
        tok = token.strip().replace("−", "-")
        if not tok:
            raise MatrixFormatError("empty scalar token", token=token)
        if self.tag == "Q":
            return _parse_rational(tok)
        if self.tag == "Fp":
            if not re.fullmatch(r"[+-]?\d+", tok):
                raise MatrixFormatError(f"bad F_{self.p} token {token!r}", token=token)
            return PrimeFieldElement(int(tok), self.p)
        if not tok.endswith("i"):
            return GaussianRational(_parse_rational(tok), 0)
        body = tok[:-1]
        split = max(body.rfind("+"), body.rfind("-"))
        if split > 0:
            re_part, im_part = body[:split], body[split:]
        else:
            re_part, im_part = "", body
        if im_part in ("", "+"):
            im = Rational(1)
        elif im_part == "-":
            im = Rational(-1)
        else:
            try:
                im = _parse_rational(im_part)
            except MatrixFormatError:
                raise MatrixFormatError(f"bad Gaussian token {token!r}", token=token) from None
        try:
            re_val = _parse_rational(re_part) if re_part else Rational(0)
        except MatrixFormatError:
            raise MatrixFormatError(f"bad Gaussian token {token!r}", token=token) from None
        return GaussianRational(re_val, im)

    def format(self, x) -> str:
        if self.tag == "Q":
            return _format_rational(x)
        if self.tag == "Fp":
            return str(x.residue)
        re_s = _format_rational(x.re)
        if not x.im:
            return re_s
        if x.im == 1:
            im_s = "i"
        elif x.im == -1:
            im_s = "-i"
        else:
            im_s = _format_rational(x.im) + "i"
        if not x.re:
            return im_s
        return re_s + (im_s if im_s.startswith("-") else "+" + im_s)


Q = FieldSpec("Q")
QI = FieldSpec("Qi")


def Fp(p: int) -> FieldSpec:
    return FieldSpec("Fp", p)


def scalar_arith(x, y, op: str, field: FieldSpec | None = None):
    """Apply one of ``add sub mul div neg conj eq`` to scalars.

    ``y`` is ignored by the unary ``neg`` and ``conj``. Operands from
    different fields raise :class:`FieldMismatch`.
    """
    if op in ("neg", "conj"):
        if op == "neg":
            return -x
        return x.conjugate() if isinstance(x, (GaussianRational, PrimeFieldElement)) else x
    if field is not None:
        if not (field.contains(x) and field.contains(y)):
            raise FieldMismatch(f"operands are not both in {field}")
    elif type(x) is not type(y):
        raise FieldMismatch(f"{type(x).__name__} vs {type(y).__name__}")
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        if not y:
            raise ZeroDivisionError("division by zero")
        return x / y
    if op == "eq":
        return x == y
    raise ValueError(f"unknown scalar op {op!r}")
