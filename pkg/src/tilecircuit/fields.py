"""Exact scalar arithmetic shared by every solver in the package.

Three concrete scalar fields, all immutable and exact:

  * ``Rational``    -- arbitrary-precision rationals (``fractions.Fraction``)
  * ``QuadExt``     -- real quadratic extensions a + b*sqrt(d), one squarefree
                       d per context; mixing radicands is an error
  * ``RatFunc``     -- univariate rational functions over the rationals,
                       kept with monic denominator coprime to the numerator

``Poly`` holds rational-coefficient polynomials (lowest degree first) and
supplies the division, gcd and Horner-evaluation machinery the other types
and the algebraic checks are built on.

Scalars have a textual syntax used by every file format: a rational is
``p/q`` or ``p``; a quadratic element is ``a/b + c/e*sqrt(d)`` with either
term omissible and whitespace insignificant.  Parsing and printing
round-trip exactly.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import lru_cache

Rational = Fraction


class ScalarParseError(ValueError):
    """A scalar string does not match the textual syntax."""


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


@lru_cache(maxsize=None)
def _is_squarefree(d: int) -> bool:
    if d <= 1:
        return False
    k = 2
    while k * k <= d:
        if d % (k * k) == 0:
            return False
        k += 1
    return True


class QuadExt:
    """Element a + b*sqrt(d) of the real quadratic field Q(sqrt(d)).

    d must be a squarefree integer > 1 and is fixed per element; arithmetic
    between elements with different radicands raises ``ValueError``.  Plain
    ints and ``Fraction`` values coerce as b = 0 elements.  The field is
    ordered by its real embedding, decided exactly.
    """

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b, d: int):
        if not _is_squarefree(d):
            raise ValueError(f"radicand must be a squarefree integer > 1, got {d}")
        object.__setattr__(self, "a", _as_fraction(a))
        object.__setattr__(self, "b", _as_fraction(b))
        object.__setattr__(self, "d", d)

    def __setattr__(self, name, value):
        raise AttributeError("QuadExt values are immutable")

    def _coerce(self, other) -> "QuadExt | None":
        if isinstance(other, QuadExt):
            if other.d != self.d:
                raise ValueError(f"mixed radicands sqrt({self.d}) and sqrt({other.d})")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadExt(other, 0, self.d)
        return None

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def conjugate(self) -> "QuadExt":
        """The field conjugate a - b*sqrt(d)."""
        return QuadExt(self.a, -self.b, self.d)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExt(self.a + o.a, self.b + o.b, self.d)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExt(self.a - o.a, self.b - o.b, self.d)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExt(o.a - self.a, o.b - self.b, self.d)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExt(
            self.a * o.a + self.b * o.b * self.d,
            self.a * o.b + self.b * o.a,
            self.d,
        )

    __rmul__ = __mul__

    def inverse(self) -> "QuadExt":
        norm = self.a * self.a - self.b * self.b * self.d
        if norm == 0:
            raise ZeroDivisionError("division by zero in quadratic field")
        return QuadExt(self.a / norm, -self.b / norm, self.d)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __neg__(self):
        return QuadExt(-self.a, -self.b, self.d)

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out = QuadExt(1, 0, self.d)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, QuadExt) and other.d != self.d:
            # only the rational embeddings of distinct fields can agree
            return self.b == 0 and other.b == 0 and self.a == other.a
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def _sign(self) -> int:
        a, b = self.a, self.b
        if b == 0:
            return -1 if a < 0 else (1 if a > 0 else 0)
        if a == 0:
            return 1 if b > 0 else -1
        if (a > 0) == (b > 0):
            return 1 if a > 0 else -1
        # opposite signs: compare a^2 against b^2*d, exactly
        aa, bb = a * a, b * b * self.d
        if a > 0:
            return 1 if aa > bb else -1
        return 1 if bb > aa else -1

    def _cmp(self, other) -> int:
        o = self._coerce(other)
        if o is None:
            raise TypeError(f"cannot order QuadExt against {type(other).__name__}")
        return (self - o)._sign()

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def __float__(self):
        return float(self.a) + float(self.b) * math.sqrt(self.d)

    def __str__(self):
        return format_scalar(self)

    def __repr__(self):
        return f"QuadExt({self.a}, {self.b}, d={self.d})"


def quad_conjugate(x):
    """Map a + b*sqrt(d) to a - b*sqrt(d); rationals are fixed points."""
    if isinstance(x, QuadExt):
        return x.conjugate()
    return _as_fraction(x)


class Poly:
    """Polynomial with rational coefficients, lowest degree first.

    The zero polynomial is the empty coefficient tuple; otherwise the
    leading coefficient is nonzero.  Evaluation accepts any field value
    whose arithmetic coerces rationals (QuadExt in particular).
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly values are immutable")

    @classmethod
    def constant(cls, c) -> "Poly":
        return cls((c,))

    @classmethod
    def x(cls) -> "Poly":
        return cls((0, 1))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial assigned -1."""
        return len(self.coeffs) - 1

    def leading(self) -> Fraction:
        if self.is_zero:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __add__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [Fraction(0)] * (n - len(self.coeffs))
        b = list(other.coeffs) + [Fraction(0)] * (n - len(other.coeffs))
        return Poly([x + y for x, y in zip(a, b)])

    def __sub__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Poly):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, ci in enumerate(self.coeffs):
            if ci == 0:
                continue
            for j, cj in enumerate(other.coeffs):
                out[i + j] += ci * cj
        return Poly(out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def scale(self, c) -> "Poly":
        c = _as_fraction(c)
        return Poly([c * x for x in self.coeffs])

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def divmod(self, divisor: "Poly") -> tuple["Poly", "Poly"]:
        """Exact division with remainder: self = q*divisor + r, deg r < deg divisor."""
        if divisor.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dn = len(divisor.coeffs)
        lead = divisor.coeffs[-1]
        if len(rem) < dn:
            return Poly(), Poly(rem)
        quo = [Fraction(0)] * (len(rem) - dn + 1)
        for k in range(len(rem) - dn, -1, -1):
            c = rem[k + dn - 1] / lead
            quo[k] = c
            if c != 0:
                for j, dj in enumerate(divisor.coeffs):
                    rem[k + j] -= c * dj
        return Poly(quo), Poly(rem[: dn - 1])

    def __divmod__(self, other):
        return self.divmod(other)

    def monic(self) -> "Poly":
        if self.is_zero:
            return self
        return self.scale(1 / self.leading())

    def derivative(self) -> "Poly":
        return Poly([k * c for k, c in enumerate(self.coeffs)][1:])

    def eval(self, x):
        """Horner evaluation; exact in whatever field x lives in."""
        if self.is_zero:
            return Fraction(0)
        acc = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * x + c
        return acc

    def compose_square(self) -> "Poly":
        """Substitute x^2 for the variable."""
        out = [Fraction(0)] * (2 * len(self.coeffs) - 1) if self.coeffs else []
        for k, c in enumerate(self.coeffs):
            out[2 * k] = c
        return Poly(out)

    def shift_up(self, k: int = 1) -> "Poly":
        """Multiply by x^k."""
        if self.is_zero:
            return self
        return Poly((Fraction(0),) * k + self.coeffs)

    def clear_denominators(self) -> tuple[tuple[int, ...], int]:
        """Integer coefficients plus the positive multiplier that was applied."""
        if self.is_zero:
            return (), 1
        mult = 1
        for c in self.coeffs:
            mult = mult * c.denominator // math.gcd(mult, c.denominator)
        return tuple(int(c * mult) for c in self.coeffs), mult

    def format(self, var: str = "x") -> str:
        return _format_poly(self.coeffs, var)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"Poly({list(self.coeffs)})"


def poly_divmod(p: Poly, d: Poly) -> tuple[Poly, Poly]:
    return p.divmod(d)


def poly_eval(p: Poly, x):
    return p.eval(x)


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Monic gcd via the Euclidean algorithm."""
    if p.is_zero and q.is_zero:
        raise ValueError("gcd of two zero polynomials is undefined")
    a, b = p, q
    while not b.is_zero:
        a, b = b, a.divmod(b)[1]
    return a.monic()


def squarefree_check(p: Poly) -> bool:
    """True when gcd(p, p') is constant, i.e. p has no repeated roots."""
    if p.is_zero:
        raise ValueError("zero polynomial")
    if p.degree == 0:
        return True
    return poly_gcd(p, p.derivative()).degree == 0


def _format_poly(coeffs, var: str) -> str:
    if not coeffs:
        return "0"
    parts = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            x = var if k == 1 else f"{var}^{k}"
            body = x if mag == 1 else f"{mag}*{x}"
        parts.append((sign, body))
    if not parts:
        return "0"
    first_sign, first_body = parts[0]
    text = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text


class RatFunc:
    """Rational function num/den over Q; den monic and coprime to num."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly = Poly((1,))):
        if not isinstance(num, Poly):
            num = Poly.constant(_as_fraction(num))
        if not isinstance(den, Poly):
            den = Poly.constant(_as_fraction(den))
        if den.is_zero:
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero:
            num, den = Poly(), Poly((1,))
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = num.divmod(g)[0]
                den = den.divmod(g)[0]
            lead = den.leading()
            if lead != 1:
                num = num.scale(1 / lead)
                den = den.scale(1 / lead)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RatFunc values are immutable")

    @classmethod
    def constant(cls, c) -> "RatFunc":
        return cls(Poly.constant(c))

    @classmethod
    def t(cls) -> "RatFunc":
        return cls(Poly.x())

    def _coerce(self, other) -> "RatFunc | None":
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, (int, Fraction)):
            return RatFunc.constant(other)
        return None

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.num * o.den - o.num * self.den, self.den * o.den)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if self.is_zero:
            raise ZeroDivisionError("inverse of the zero rational function")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self):
        return not self.is_zero

    def eval(self, t0) -> Fraction:
        t0 = _as_fraction(t0)
        d = self.den.eval(t0)
        if d == 0:
            raise ZeroDivisionError(f"denominator vanishes at t = {t0}")
        return self.num.eval(t0) / d

    def format(self, var: str = "t") -> str:
        num = self.num.format(var)
        if self.den == Poly((1,)):
            return num
        if len([c for c in self.num.coeffs if c != 0]) > 1:
            num = f"({num})"
        return f"{num}/({self.den.format(var)})"

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"RatFunc({self.num!r}, {self.den!r})"


def zero_like(x):
    """Additive identity of the field x belongs to."""
    if isinstance(x, QuadExt):
        return QuadExt(0, 0, x.d)
    if isinstance(x, RatFunc):
        return RatFunc(Poly())
    return Fraction(0)


def one_like(x):
    """Multiplicative identity of the field x belongs to."""
    if isinstance(x, QuadExt):
        return QuadExt(1, 0, x.d)
    if isinstance(x, RatFunc):
        return RatFunc.constant(1)
    return Fraction(1)


# --- textual scalar syntax ------------------------------------------------

_RATIONAL_RE = re.compile(r"^[+-]?\d+(?:/\d+)?$")
_SQRT_TERM_RE = re.compile(r"^([+-]?)(?:(\d+(?:/\d+)?)\*)?sqrt\((\d+)\)$")
_TERM_SPLIT_RE = re.compile(r"[+-]?[^+-]+")


def parse_rational(text: str) -> Fraction:
    s = "".join(text.split())
    if not _RATIONAL_RE.match(s):
        raise ScalarParseError(f"not a rational scalar: {text!r}")
    return Fraction(s)


def parse_quadext(text: str, d: int | None = None):
    """Parse ``a/b + c/e*sqrt(d)`` with either term omissible.

    Returns a QuadExt when a sqrt term appears or a radicand is supplied,
    otherwise a plain Fraction.
    """
    s = "".join(text.split())
    if not s:
        raise ScalarParseError("empty scalar")
    rational = Fraction(0)
    coeff = Fraction(0)
    seen_d = None
    pieces = _TERM_SPLIT_RE.findall(s)
    if "".join(pieces) != s:
        raise ScalarParseError(f"malformed scalar: {text!r}")
    for piece in pieces:
        m = _SQRT_TERM_RE.match(piece)
        if m:
            sign = -1 if m.group(1) == "-" else 1
            c = Fraction(m.group(2)) if m.group(2) else Fraction(1)
            dd = int(m.group(3))
            if seen_d is not None and dd != seen_d:
                raise ScalarParseError(f"mixed radicands in scalar: {text!r}")
            seen_d = dd
            coeff += sign * c
        elif _RATIONAL_RE.match(piece):
            rational += Fraction(piece)
        else:
            raise ScalarParseError(f"malformed scalar term: {piece!r}")
    if seen_d is not None:
        if d is not None and seen_d != d:
            raise ScalarParseError(
                f"scalar uses sqrt({seen_d}) but the field is Q(sqrt({d}))"
            )
        return QuadExt(rational, coeff, seen_d)
    if d is not None:
        return QuadExt(rational, 0, d)
    return rational


def format_scalar(x) -> str:
    """Canonical text for a Rational or QuadExt scalar; round-trips exactly."""
    if isinstance(x, (int, Fraction)):
        return str(Fraction(x))
    if isinstance(x, QuadExt):
        if x.b == 0:
            return str(x.a)
        mag = abs(x.b)
        root = f"sqrt({x.d})" if mag == 1 else f"{mag}*sqrt({x.d})"
        if x.a == 0:
            return root if x.b > 0 else f"-{root}"
        op = "+" if x.b > 0 else "-"
        return f"{x.a} {op} {root}"
    if isinstance(x, RatFunc):
        return x.format()
    raise TypeError(f"cannot format {type(x).__name__} as a scalar")


_SYMBOLIC_RE = re.compile(r"^([+-]?\d+(?:/\d+)?)?\*?(t)?$")


def parse_symbolic_scalar(text: str) -> RatFunc:
    """Parse a netlist scalar in symbolic mode: a rational, ``t`` or ``c*t``."""
    s = "".join(text.split())
    m = _SYMBOLIC_RE.match(s)
    if not m or (m.group(1) is None and m.group(2) is None):
        raise ScalarParseError(f"not a symbolic scalar: {text!r}")
    c = Fraction(m.group(1)) if m.group(1) else Fraction(1)
    if m.group(2):
        return RatFunc(Poly.x().scale(c))
    return RatFunc.constant(c)


class FieldSpec:
    """Descriptor for the scalar field a dissection or netlist lives over."""

    __slots__ = ("kind", "d")

    def __init__(self, kind: str, d: int | None = None):
        if kind == "rational":
            if d is not None:
                raise ValueError("rational field takes no radicand")
        elif kind == "quadratic":
            if d is None or not _is_squarefree(d):
                raise ValueError("quadratic field needs a squarefree d > 1")
        else:
            raise ValueError(f"unknown field kind {kind!r}")
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "d", d)

    def __setattr__(self, name, value):
        raise AttributeError("FieldSpec is immutable")

    @classmethod
    def rational(cls) -> "FieldSpec":
        return cls("rational")

    @classmethod
    def quadratic(cls, d: int) -> "FieldSpec":
        return cls("quadratic", d)

    @property
    def zero(self):
        return Fraction(0) if self.kind == "rational" else QuadExt(0, 0, self.d)

    @property
    def one(self):
        return Fraction(1) if self.kind == "rational" else QuadExt(1, 0, self.d)

    def parse(self, text: str):
        if self.kind == "rational":
            return parse_rational(text)
        return parse_quadext(text, self.d)

    def format(self, x) -> str:
        return format_scalar(x)

    def to_json(self) -> dict:
        if self.kind == "rational":
            return {"kind": "rational"}
        return {"kind": "quadratic", "d": self.d}

    @classmethod
    def from_json(cls, obj: dict) -> "FieldSpec":
        kind = obj.get("kind")
        if kind == "rational":
            return cls.rational()
        if kind == "quadratic":
            return cls.quadratic(int(obj["d"]))
        raise ScalarParseError(f"unknown field descriptor: {obj!r}")

    def __eq__(self, other):
        return (
            isinstance(other, FieldSpec)
            and self.kind == other.kind
            and self.d == other.d
        )

    def __hash__(self):
        return hash((self.kind, self.d))

    def __repr__(self):
        if self.kind == "rational":
            return "FieldSpec.rational()"
        return f"FieldSpec.quadratic({self.d})"
