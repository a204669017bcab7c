"""Exact scalars: rationals (``Fraction``) and rational functions in ``v``.

A :class:`RatFunc` is stored as a pair of integer polynomials ``(num, den)``
that are coprime in Z[v] (no common polynomial factor and no common integer
content) with ``lc(den) > 0``.  This form is canonical, so equality is tuple
equality.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

from . import kernels as K


class ScalarSyntaxError(ValueError):
    pass


def _as_pair(x):
    if isinstance(x, RatFunc):
        return x.num, x.den
    if isinstance(x, int):
        return ((x,) if x else ()), (1,)
    if isinstance(x, Rational):
        n, d = x.numerator, x.denominator
        return ((n,) if n else ()), (d,)
    return None


class RatFunc:
    """Element of Q(v)."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=(), den=(1,), *, _normalized=False):
        if not _normalized:
            num, den = K.rf_normalize(K.p_trim(tuple(num)), K.p_trim(tuple(den)))
        self.num = num
        self.den = den
        self._hash = None

    @classmethod
    def _raw(cls, pair):
        obj = cls.__new__(cls)
        obj.num, obj.den = pair
        obj._hash = None
        return obj

    @classmethod
    def const(cls, x) -> "RatFunc":
        pair = _as_pair(x)
        if pair is None:
            raise TypeError(f"cannot coerce {x!r} to RatFunc")
        return cls._raw(pair)

    @classmethod
    def monomial(cls, c, k: int) -> "RatFunc":
        """c * v**k for rational c and any integer k."""
        c = Fraction(c)
        if not c:
            return cls._raw(((), (1,)))
        if k >= 0:
            return cls._raw(((0,) * k + (c.numerator,), (c.denominator,)))
        return cls._raw(((c.numerator,), (0,) * (-k) + (c.denominator,)))

    # arithmetic ---------------------------------------------------------
    def __add__(self, other):
        o = _as_pair(other)
        if o is None:
            return NotImplemented
        if not o[0]:
            return self
        if not self.num:
            return other if isinstance(other, RatFunc) else RatFunc._raw(o)
        return RatFunc._raw(K.rf_add(self.num, self.den, o[0], o[1]))

    __radd__ = __add__

    def __sub__(self, other):
        o = _as_pair(other)
        if o is None:
            return NotImplemented
        if not o[0]:
            return self
        return RatFunc._raw(K.rf_sub(self.num, self.den, o[0], o[1]))

    def __rsub__(self, other):
        o = _as_pair(other)
        if o is None:
            return NotImplemented
        return RatFunc._raw(K.rf_sub(o[0], o[1], self.num, self.den))

    def __mul__(self, other):
        o = _as_pair(other)
        if o is None:
            return NotImplemented
        if o == ((1,), (1,)):
            return self
        return RatFunc._raw(K.rf_mul(self.num, self.den, o[0], o[1]))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _as_pair(other)
        if o is None:
            return NotImplemented
        return RatFunc._raw(K.rf_div(self.num, self.den, o[0], o[1]))

    def __rtruediv__(self, other):
        o = _as_pair(other)
        if o is None:
            return NotImplemented
        return RatFunc._raw(K.rf_div(o[0], o[1], self.num, self.den))

    def __neg__(self):
        return RatFunc._raw((K.p_neg(self.num), self.den))

    def __pos__(self):
        return self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return (RatFunc._raw(((1,), (1,))) / self) ** (-k)
        result = RatFunc._raw(((1,), (1,)))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # comparison ---------------------------------------------------------
    def __eq__(self, other):
        o = _as_pair(other)
        if o is None:
            return NotImplemented
        return self.num == o[0] and self.den == o[1]

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self):
        if self._hash is None:
            if len(self.num) <= 1 and len(self.den) == 1:
                self._hash = hash(Fraction(self.num[0] if self.num else 0, self.den[0]))
            else:
                self._hash = hash((self.num, self.den))
        return self._hash

    def __bool__(self):
        return bool(self.num)

    # inspection ---------------------------------------------------------
    def is_constant(self) -> bool:
        return len(self.num) <= 1 and len(self.den) == 1

    def to_fraction(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return Fraction(self.num[0] if self.num else 0, self.den[0])

    def subs(self, x):
        """Evaluate at a rational point; raises ZeroDivisionError at a pole."""
        d = K.p_eval(self.den, Fraction(x))
        if not d:
            raise ZeroDivisionError("evaluation at a pole")
        return Fraction(K.p_eval(self.num, Fraction(x))) / d

    def __repr__(self):
        return f"RatFunc({format_scalar(self)!r})"

    __str__ = lambda self: format_scalar(self)


# ---------------------------------------------------------------------------
# fields


class Field:
    """Tag object for one of the two supported base fields."""

    def __init__(self, name: str):
        self.name = name

    def __repr__(self):
        return f"Field({self.name!r})"

    def __eq__(self, other):
        return isinstance(other, Field) and other.name == self.name

    def __hash__(self):
        return hash(self.name)

    @property
    def zero(self):
        return Fraction(0) if self.name == "Q" else RatFunc._raw(((), (1,)))

    @property
    def one(self):
        return Fraction(1) if self.name == "Q" else RatFunc._raw(((1,), (1,)))

    def coerce(self, x):
        if self.name == "Q":
            if isinstance(x, Fraction):
                return x
            if isinstance(x, RatFunc):
                return x.to_fraction()
            if isinstance(x, (int, Rational)):
                return Fraction(x)
            if isinstance(x, str):
                return self.parse(x)
            raise TypeError(f"cannot coerce {x!r} into Q")
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, str):
            return self.parse(x)
        return RatFunc.const(x)

    def parse(self, text: str):
        return parse_scalar(text, self)

    def format(self, x) -> str:
        return format_scalar(x)

    def sort_key(self, x):
        """Deterministic total order used for listing eigenvalues."""
        if self.name == "Q":
            return (0, x, "")
        x = self.coerce(x)
        if x.is_constant():
            return (0, x.to_fraction(), "")
        return (1, Fraction(len(x.num) - len(x.den)), format_scalar(x))


QQ = Field("Q")
QV = Field("Qv")


def field_from_tag(tag: str) -> Field:
    if tag == "Q":
        return QQ
    if tag == "Qv":
        return QV
    raise ValueError(f"unknown field tag {tag!r} (expected 'Q' or 'Qv')")


V = RatFunc._raw(((0, 1), (1,)))


# ---------------------------------------------------------------------------
# grammar: integer ::= ['-']digits; atom ::= integer | "v" | "(" expr ")";
# power ::= atom ["^" ['-']digits]; expr ::= power (op power)*


def _tokenize(text: str):
    toks = []
    i = 0
    s = "".join(text.split())
    if not s:
        raise ScalarSyntaxError("empty scalar")
    n = len(s)
    while i < n:
        ch = s[i]
        unary_ok = not toks or toks[-1] in ("+", "-", "*", "/", "(", "^")
        if ch.isdigit() or (ch == "-" and unary_ok and i + 1 < n and s[i + 1].isdigit()):
            j = i + 1
            while j < n and s[j].isdigit():
                j += 1
            toks.append(int(s[i:j]))
            i = j
        elif ch in "+-*/()^":
            toks.append(ch)
            i += 1
        elif ch == "v":
            toks.append("v")
            i += 1
        else:
            raise ScalarSyntaxError(f"unexpected character {ch!r} in {text!r}")
    return toks


class _Parser:
    def __init__(self, toks, field: Field):
        self.toks = toks
        self.pos = 0
        self.field = field

    def peek(self):
        return self.toks[self.pos] if self.pos < len(self.toks) else None

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def expr(self):
        acc = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self):
        acc = self.power()
        while self.peek() in ("*", "/"):
            op = self.take()
            rhs = self.power()
            if op == "*":
                acc = acc * rhs
            else:
                if not rhs:
                    raise ZeroDivisionError("division by zero in scalar literal")
                acc = acc / rhs
        return acc

    def power(self):
        base = self.atom()
        if self.peek() == "^":
            self.take()
            e = self.take()
            if not isinstance(e, int):
                raise ScalarSyntaxError("exponent must be an integer literal")
            if e < 0 and not base:
                raise ZeroDivisionError("negative power of zero")
            base = base ** e
        return base

    def atom(self):
        tok = self.take()
        if isinstance(tok, int):
            return self.field.coerce(tok)
        if tok == "v":
            if self.field.name != "Qv":
                raise ScalarSyntaxError("symbol 'v' is not allowed over Q")
            return V
        if tok == "(":
            val = self.expr()
            if self.take() != ")":
                raise ScalarSyntaxError("missing ')'")
            return val
        raise ScalarSyntaxError(f"unexpected token {tok!r}")


def parse_scalar(text: str, field: Field = QV):
    """Parse ``text`` into a canonical scalar of ``field``.

    >>> parse_scalar("3/6", QQ)
    Fraction(1, 2)
    >>> str(parse_scalar("(v^2-1)/(v-1)", QV))
    'v+1'
    """
    p = _Parser(_tokenize(text), field)
    val = p.expr()
    if p.pos != len(p.toks):
        raise ScalarSyntaxError(f"trailing tokens in {text!r}")
    return field.coerce(val)


def _format_poly(coeffs) -> str:
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if not c:
            continue
        if k == 0:
            body = str(abs(c))
        else:
            mono = "v" if k == 1 else f"v^{k}"
            body = mono if abs(c) == 1 else f"{abs(c)}*{mono}"
        if not terms:
            if c < 0:
                body = f"-{abs(c)}" if k == 0 else f"-{abs(c)}*{body.split('*')[-1]}"
            terms.append(body)
        else:
            terms.append(("-" if c < 0 else "+") + body)
    return "".join(terms) if terms else "0"


def format_scalar(x) -> str:
    """Print a scalar so that :func:`parse_scalar` reads it back unchanged."""
    if isinstance(x, int):
        return str(x)
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    if isinstance(x, RatFunc):
        num = _format_poly(x.num)
        if x.den == (1,):
            return num
        den = _format_poly(x.den)
        if len(x.num) > 1 and sum(1 for c in x.num if c) > 1:
            num = f"({num})"
        elif len(x.num) > 1 and x.num[-1] < 0:
            num = f"({num})"
        if sum(1 for c in x.den if c) > 1 or x.den[-1] != 1 and len(x.den) > 1:
            den = f"({den})"
        return f"{num}/{den}"
    raise TypeError(f"not a scalar: {x!r}")
