"""Exact scalars: rationals and rational functions in the formal parameter ``a``.

Rationals are plain :class:`fractions.Fraction` values.  The formal
eigenvalue parameter lives in :class:`RatFunc`, a reduced quotient of
univariate polynomials with rational coefficients.  Nothing in this module
(or anywhere downstream) rounds.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Sequence, Union

# Polynomials are tuples of Fractions in ascending powers, without trailing
# zeros.  The zero polynomial is the empty tuple.
Poly = tuple


class ScalarError(ArithmeticError):
    pass


class ModeError(ScalarError, TypeError):
    """Raised when rational and symbolic scalars are mixed where not allowed."""


class PoleError(ScalarError, ZeroDivisionError):
    """Raised when a rational function is evaluated at a root of its denominator."""


# -- polynomial helpers -------------------------------------------------------

def poly_trim(p: Iterable) -> Poly:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def poly_add(p: Sequence, q: Sequence) -> Poly:
    n = max(len(p), len(q))
    zero = Fraction(0)
    return poly_trim((p[i] if i < len(p) else zero) + (q[i] if i < len(q) else zero)
                     for i in range(n))


def poly_neg(p: Sequence) -> Poly:
    return tuple(-c for c in p)


def poly_sub(p: Sequence, q: Sequence) -> Poly:
    return poly_add(p, poly_neg(q))


def poly_mul(p: Sequence, q: Sequence) -> Poly:
    """Product of two coefficient lists over any commutative ring."""
    if not p or not q:
        return ()
    out = [p[0] * 0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] = out[i + j] + a * b
    return poly_trim(out)


def poly_scale(p: Sequence, c) -> Poly:
    if c == 0:
        return ()
    return tuple(x * c for x in p)


def poly_divmod(p: Sequence, q: Sequence) -> tuple[Poly, Poly]:
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    p = list(p)
    lead = q[-1]
    dq = len(q) - 1
    quot = [Fraction(0)] * max(len(p) - dq, 0)
    for i in range(len(p) - 1, dq - 1, -1):
        c = p[i] / lead
        if c == 0:
            continue
        quot[i - dq] = c
        for j, b in enumerate(q):
            p[i - dq + j] -= c * b
    return poly_trim(quot), poly_trim(p[:dq])


def poly_monic(p: Sequence) -> Poly:
    if not p:
        return ()
    lead = p[-1]
    return tuple(Fraction(c) / lead for c in p)


def poly_gcd(p: Sequence, q: Sequence) -> Poly:
    """Monic gcd over the rationals (Euclid; the zero gcd is the empty tuple)."""
    p, q = poly_trim(p), poly_trim(q)
    while q:
        p, q = q, poly_divmod(p, q)[1]
    return poly_monic(p)


def poly_eval(p: Sequence, x):
    acc = x * 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def poly_derivative(p: Sequence) -> Poly:
    return poly_trim(i * c for i, c in enumerate(p) if i)


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, RatFunc):
        if x.is_constant():
            return x.constant()
        raise ModeError(f"{x} is not a rational number")
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


# -- rational functions -------------------------------------------------------

def ratfunc_reduce(num: Sequence, den: Sequence) -> "RatFunc":
    """Return ``num/den`` in lowest terms with a monic denominator."""
    num = poly_trim(Fraction(c) for c in num)
    den = poly_trim(Fraction(c) for c in den)
    if not den:
        raise ZeroDivisionError("zero denominator")
    if not num:
        return RatFunc._make((), (Fraction(1),))
    g = poly_gcd(num, den)
    if len(g) > 1:
        num = poly_divmod(num, g)[0]
        den = poly_divmod(den, g)[0]
    lead = den[-1]
    return RatFunc._make(tuple(c / lead for c in num), tuple(c / lead for c in den))


class RatFunc:
    """Element of Q(a), kept as a reduced fraction with monic denominator."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: Sequence = (), den: Sequence = (1,)):
        r = ratfunc_reduce(num, den)
        self.num, self.den, self._hash = r.num, r.den, None

    @classmethod
    def _make(cls, num: Poly, den: Poly) -> "RatFunc":
        obj = cls.__new__(cls)
        obj.num, obj.den, obj._hash = num, den, None
        return obj

    @classmethod
    def alpha(cls) -> "RatFunc":
        return cls._make((Fraction(0), Fraction(1)), (Fraction(1),))

    @classmethod
    def const(cls, c) -> "RatFunc":
        c = _as_fraction(c)
        return cls._make((c,) if c else (), (Fraction(1),))

    @staticmethod
    def _coerce(other) -> "RatFunc | None":
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, (int, Fraction)):
            return RatFunc.const(other)
        return None

    # predicates
    def is_zero(self) -> bool:
        return not self.num

    def is_constant(self) -> bool:
        return len(self.num) <= 1 and len(self.den) == 1

    def constant(self) -> Fraction:
        if not self.is_constant():
            raise ModeError(f"{self} is not constant")
        return self.num[0] if self.num else Fraction(0)

    # arithmetic
    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o.num:
            return self
        if not self.num:
            return o
        if self.den == o.den:
            return ratfunc_reduce(poly_add(self.num, o.num), self.den)
        return ratfunc_reduce(
            poly_add(poly_mul(self.num, o.den), poly_mul(o.num, self.den)),
            poly_mul(self.den, o.den))

    __radd__ = __add__

    def __neg__(self):
        return RatFunc._make(poly_neg(self.num), self.den)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self.num or not o.num:
            return RatFunc._make((), (Fraction(1),))
        if o.is_constant():
            c = o.num[0]
            return RatFunc._make(tuple(x * c for x in self.num), self.den)
        if self.is_constant():
            c = self.num[0]
            return RatFunc._make(tuple(x * c for x in o.num), o.den)
        return ratfunc_reduce(poly_mul(self.num, o.num), poly_mul(self.den, o.den))

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if not self.num:
            raise ZeroDivisionError("inverse of zero")
        return ratfunc_reduce(self.den, self.num)

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

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        out = RatFunc.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # comparison / hashing
    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        if self._hash is None:
            self._hash = (hash(self.constant()) if self.is_constant()
                          else hash((self.num, self.den)))
        return self._hash

    def __bool__(self):
        return bool(self.num)

    # evaluation and display
    def __call__(self, a) -> Fraction:
        return evaluate_at(self, a)

    def __repr__(self):
        return f"RatFunc({format_scalar(self)!r})"

    def __str__(self):
        return format_scalar(self)


ALPHA = RatFunc.alpha()

Scalar = Union[Fraction, RatFunc]


def evaluate_at(f, a) -> Fraction:
    """Specialise ``f`` at ``a = value``; raises :class:`PoleError` at a pole."""
    a = _as_fraction(a)
    if isinstance(f, (int, Fraction)):
        return Fraction(f)
    d = poly_eval(f.den, a)
    if d == 0:
        raise PoleError(f"{f} has a pole at a = {a}")
    return poly_eval(f.num, a) / d


def is_zero(x) -> bool:
    return x == 0


# -- field modes --------------------------------------------------------------

class Field:
    """The scalar field an algebra is defined over: QQ or QQ(a)."""

    def __init__(self, symbolic: bool):
        self.symbolic = symbolic
        self.name = "QQ(a)" if symbolic else "QQ"

    def __repr__(self):
        return self.name

    def __eq__(self, other):
        return isinstance(other, Field) and other.symbolic == self.symbolic

    def __hash__(self):
        return hash(self.symbolic)

    @property
    def zero(self):
        return RatFunc.const(0) if self.symbolic else Fraction(0)

    @property
    def one(self):
        return RatFunc.const(1) if self.symbolic else Fraction(1)

    def __call__(self, x) -> Scalar:
        """Coerce ``x`` into this field; a non-constant RatFunc never enters QQ."""
        if self.symbolic:
            if isinstance(x, RatFunc):
                return x
            return RatFunc.const(_as_fraction(x))
        if isinstance(x, RatFunc) and not x.is_constant():
            raise ModeError(f"symbolic scalar {x} used in a rational algebra")
        return _as_fraction(x)

    def check(self, x) -> None:
        if self.symbolic != isinstance(x, RatFunc):
            raise ModeError(f"{x!r} does not belong to {self.name}")

    @staticmethod
    def of(x) -> "Field":
        return QQA if isinstance(x, RatFunc) else QQ


QQ = Field(False)
QQA = Field(True)


def check_same_mode(a, b) -> None:
    if isinstance(a, RatFunc) != isinstance(b, RatFunc):
        raise ModeError(f"cannot mix {a!r} and {b!r}")


# -- serialisation ------------------------------------------------------------

def _format_poly(coeffs: Sequence[int]) -> str:
    terms = []
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            var = "a" if k == 1 else f"a^{k}"
            body = var if mag == 1 else f"{mag}*{var}"
        terms.append(("-" if c < 0 else "+", body))
    if not terms:
        return "0"
    sign, body = terms[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def format_scalar(x) -> str:
    """``p/q`` for rationals, ``(num)/(den)`` in ascending powers of ``a``.

    Rational-function output is scaled to integer coefficients with no
    common content and a positive leading denominator coefficient, so that
    ``3a/(2+2a)`` prints as ``(3*a)/(2 + 2*a)``.
    """
    if isinstance(x, int):
        return str(x)
    if isinstance(x, Fraction):
        return str(x)
    if x.is_constant():
        return str(x.constant())
    coeffs = list(x.num) + list(x.den)
    lcm = 1
    for c in coeffs:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    ints = [int(c * lcm) for c in coeffs]
    g = 0
    for c in ints:
        g = math.gcd(g, c)
    ints = [c // g for c in ints]
    num, den = ints[:len(x.num)], ints[len(x.num):]
    if den == [1]:
        return _format_poly(num)
    return f"({_format_poly(num)})/({_format_poly(den)})"


_TOKEN = re.compile(r"\s*(?:(\d+)|(alpha|a|α)|(.))")


def parse_scalar(text: str, field: Field | None = None) -> Scalar:
    """Parse ``"3/10"``, ``"-2"`` or an expression in ``a`` such as ``"(3*a)/(2 + 2*a)"``.

    Without an explicit field the result is a Fraction when the text has no
    ``a`` and a RatFunc otherwise.
    """
    tokens = []
    for num, var, op in _TOKEN.findall(text.strip()):
        if num:
            tokens.append(("num", int(num)))
        elif var:
            tokens.append(("var", None))
        elif op.strip():
            if op not in "+-*/^()":
                raise ValueError(f"unexpected character {op!r} in {text!r}")
            tokens.append(("op", op))
    if not tokens:
        raise ValueError("empty scalar")
    pos = 0
    symbolic = any(t[0] == "var" for t in tokens)

    def peek():
        return tokens[pos] if pos < len(tokens) else ("end", None)

    def take(expected=None):
        nonlocal pos
        tok = peek()
        if expected is not None and tok != ("op", expected):
            raise ValueError(f"expected {expected!r} in {text!r}")
        pos += 1
        return tok

    def expr():
        val = term()
        while peek() in (("op", "+"), ("op", "-")):
            op = take()[1]
            rhs = term()
            val = val + rhs if op == "+" else val - rhs
        return val

    def term():
        val = unary()
        while peek() in (("op", "*"), ("op", "/")):
            op = take()[1]
            rhs = unary()
            if op == "*":
                val = val * rhs
            else:
                if rhs == 0:
                    raise ZeroDivisionError(f"division by zero in {text!r}")
                val = val / rhs
        return val

    def unary():
        if peek() == ("op", "-"):
            take()
            return -unary()
        if peek() == ("op", "+"):
            take()
            return unary()
        return power()

    def power():
        base = atom()
        if peek() == ("op", "^"):
            take()
            kind, k = take()
            if kind != "num":
                raise ValueError(f"integer exponent expected in {text!r}")
            base = base ** k
        return base

    def atom():
        kind, val = take()
        if kind == "num":
            return RatFunc.const(val) if symbolic else Fraction(val)
        if kind == "var":
            return ALPHA
        if (kind, val) == ("op", "("):
            inner = expr()
            take(")")
            return inner
        raise ValueError(f"unexpected token {val!r} in {text!r}")

    value = expr()
    if pos != len(tokens):
        raise ValueError(f"trailing input in {text!r}")
    if field is not None:
        return field(value)
    if isinstance(value, RatFunc) and value.is_constant():
        return value.constant()
    return value
