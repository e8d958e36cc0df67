"""Exact commutative domains: arbitrary-precision integers and Z[x].

Integers are plain Python ``int`` values. Polynomials with integer
coefficients are :class:`Polynomial` instances. Both are immutable, so
elements can be shared freely between concurrent tasks.
"""
from __future__ import annotations

import re
from typing import Iterable, Union

__all__ = [
    "DomainError",
    "DomainMismatch",
    "NotDivisible",
    "ElementSyntaxError",
    "Polynomial",
    "Element",
    "Domain",
    "INTEGERS",
    "domain_of",
    "is_zero",
    "add",
    "sub",
    "mul",
    "neg",
    "exact_div",
    "parse_element",
    "format_element",
]


class DomainError(Exception):
    """Base class for domain arithmetic failures."""


class DomainMismatch(DomainError, TypeError):
    pass


class NotDivisible(DomainError, ArithmeticError):
    """Raised when an exact division leaves a nonzero remainder."""

    def __init__(self, a, b, where=None):
        self.dividend = a
        self.divisor = b
        self.where = where
        msg = f"{format_element(a)} is not divisible by {format_element(b)}"
        if where is not None:
            msg += f" at entry {where}"
        super().__init__(msg)


class ElementSyntaxError(DomainError, ValueError):
    def __init__(self, text, pos, reason):
        self.text = text
        self.pos = pos
        super().__init__(f"{reason} at position {pos} in {text!r}")


class Polynomial:
    """Dense univariate polynomial with integer coefficients.

    ``coeffs[k]`` is the coefficient of ``x**k``. Trailing zeros are
    stripped on construction, so the zero polynomial has ``coeffs == ()``.
    """

    __slots__ = ("coeffs", "var", "_hash")

    def __init__(self, coeffs: Iterable[int] = (), var: str = "x"):
        cs = list(coeffs)
        for c in cs:
            if type(c) is not int:
                raise DomainMismatch(f"polynomial coefficient must be int, got {type(c).__name__}")
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "var", var)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    def __reduce__(self):
        return (Polynomial, (self.coeffs, self.var))

    @classmethod
    def constant(cls, c: int, var: str = "x") -> "Polynomial":
        return cls((c,), var)

    @classmethod
    def monomial(cls, k: int, c: int = 1, var: str = "x") -> "Polynomial":
        return cls([0] * k + [c], var)

    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.var != self.var:
                raise DomainMismatch(f"variables differ: {self.var!r} vs {other.var!r}")
            return other
        if type(other) is int:
            return Polynomial((other,), self.var)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.var == other.var and self.coeffs == other.coeffs
        if type(other) is int:
            return self.coeffs == ((other,) if other else ())
        return NotImplemented

    def __hash__(self):
        h = self._hash
        if h is None:
            # constants hash like the matching int
            h = hash(self.coeffs[0] if self.coeffs else 0) if len(self.coeffs) <= 1 else hash((self.var, self.coeffs))
            object.__setattr__(self, "_hash", h)
        return h

    def __neg__(self):
        return Polynomial([-c for c in self.coeffs], self.var)

    def __pos__(self):
        return self

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out, self.var)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, other):
        if type(other) is int:
            return Polynomial([c * other for c in self.coeffs], self.var)
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        a, b = self.coeffs, o.coeffs
        if not a or not b:
            return Polynomial((), self.var)
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return Polynomial(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if type(k) is not int or k < 0:
            raise ValueError("exponent must be a non-negative int")
        result = Polynomial((1,), self.var)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def divmod_exact(self, other: "Polynomial"):
        """Long division over Z; returns ``(q, r)`` or ``None`` if a
        leading-coefficient step is not integral."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = other.degree
        lcb = other.lc
        q = [0] * max(len(rem) - db, 0)
        bc = other.coeffs
        for k in range(len(rem) - 1, db - 1, -1):
            c = rem[k]
            if c == 0:
                continue
            t, r = divmod(c, lcb)
            if r:
                return None
            q[k - db] = t
            off = k - db
            for i, b in enumerate(bc):
                rem[off + i] -= t * b
        return Polynomial(q, self.var), Polynomial(rem, self.var)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self):
        return f"Polynomial({list(self.coeffs)!r}, var={self.var!r})"

    def __str__(self):
        return format_element(self)


Element = Union[int, Polynomial]


class Domain:
    """Descriptor for one of the supported domains.

    ``kind`` is ``"int"`` or ``"poly"``; polynomial domains also carry the
    variable name.
    """

    __slots__ = ("kind", "var")

    def __init__(self, kind: str = "int", var: str = "x"):
        if kind not in ("int", "poly"):
            raise ValueError(f"unknown domain {kind!r}")
        self.kind = kind
        self.var = var

    @property
    def zero(self) -> Element:
        return 0 if self.kind == "int" else Polynomial((), self.var)

    @property
    def one(self) -> Element:
        return 1 if self.kind == "int" else Polynomial((1,), self.var)

    def coerce(self, value) -> Element:
        if self.kind == "int":
            if type(value) is int:
                return value
            if isinstance(value, Polynomial) and value.degree <= 0:
                return value.coeffs[0] if value.coeffs else 0
            raise DomainMismatch(f"cannot coerce {value!r} into the integers")
        if isinstance(value, Polynomial):
            if value.var != self.var:
                raise DomainMismatch(f"variables differ: {value.var!r} vs {self.var!r}")
            return value
        if type(value) is int:
            return Polynomial((value,), self.var)
        raise DomainMismatch(f"cannot coerce {value!r} into Z[{self.var}]")

    def __eq__(self, other):
        if not isinstance(other, Domain):
            return NotImplemented
        if self.kind != other.kind:
            return False
        return self.kind == "int" or self.var == other.var

    def __hash__(self):
        return hash(("int",)) if self.kind == "int" else hash(("poly", self.var))

    def __repr__(self):
        return "Domain('int')" if self.kind == "int" else f"Domain('poly', var={self.var!r})"

    def __str__(self):
        return "ZZ" if self.kind == "int" else f"ZZ[{self.var}]"


INTEGERS = Domain("int")


def domain_of(e) -> Domain:
    if type(e) is int:
        return INTEGERS
    if isinstance(e, Polynomial):
        return Domain("poly", e.var)
    raise DomainMismatch(f"{e!r} ({type(e).__name__}) is not a domain element")


def _same_domain(a, b):
    da, db = domain_of(a), domain_of(b)
    if da != db:
        raise DomainMismatch(f"operands live in different domains: {da} and {db}")


def is_zero(e) -> bool:
    return not e


def add(a, b):
    _same_domain(a, b)
    return a + b


def sub(a, b):
    _same_domain(a, b)
    return a - b


def mul(a, b):
    _same_domain(a, b)
    return a * b


def neg(a):
    domain_of(a)
    return -a


def exact_div(a, b, where=None):
    """Return ``q`` with ``q * b == a``.

    Raises :class:`NotDivisible` when the remainder is nonzero and
    :class:`ZeroDivisionError` when ``b`` is zero. ``int`` divisors are
    accepted for polynomial dividends (and constant polynomials for int
    dividends) since the algorithm mixes scalar and element arithmetic.
    """
    if not b:
        raise ZeroDivisionError("exact division by zero")
    if type(a) is int and type(b) is int:
        q, r = divmod(a, b)
        if r:
            raise NotDivisible(a, b, where)
        return q
    if type(a) is int:
        a = b._coerce(a)
    if isinstance(a, Polynomial) and type(b) is int:
        if b == 1:
            return a
        out = []
        for c in a.coeffs:
            q, r = divmod(c, b)
            if r:
                raise NotDivisible(a, b, where)
            out.append(q)
        return Polynomial(out, a.var)
    b = a._coerce(b)
    res = a.divmod_exact(b)
    if res is None or res[1]:
        raise NotDivisible(a, b, where)
    return res[0]


_TERM = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?:
            (?P<coef>\d+)\s*(?:\*\s*(?P<v1>[A-Za-z_]\w*)(?:\s*\^\s*(?P<e1>\d+))?)?
          | (?P<v2>[A-Za-z_]\w*)(?:\s*\^\s*(?P<e2>\d+))?
        )\s*""",
    re.VERBOSE,
)


def parse_element(text: str, domain: Domain | str | None = None) -> Element:
    """Parse an integer or a sum of terms like ``3*x^2-x+1``.

    With ``domain=None`` the result is an ``int`` when no variable appears
    and a :class:`Polynomial` otherwise. Passing ``"int"``/``"poly"`` (or a
    :class:`Domain`) forces the result into that domain.
    """
    if isinstance(domain, str):
        domain = Domain(domain)
    s = text
    if not s.strip():
        raise ElementSyntaxError(text, 0, "empty element")
    pos = 0
    terms = {}
    var = None
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        if m is None or m.end() == pos or (m.group("coef") is None and m.group("v2") is None):
            raise ElementSyntaxError(text, pos, "expected a term")
        if not first and m.group("sign") is None:
            raise ElementSyntaxError(text, m.start(), "missing '+' or '-' between terms")
        first = False
        sign = -1 if m.group("sign") == "-" else 1
        if m.group("coef") is not None:
            c = int(m.group("coef"))
            v = m.group("v1")
            e = m.group("e1")
        else:
            c = 1
            v = m.group("v2")
            e = m.group("e2")
        if v is None:
            k = 0
        else:
            if var is not None and v != var:
                raise ElementSyntaxError(text, m.start(), f"second variable {v!r}")
            var = v
            k = int(e) if e is not None else 1
        terms[k] = terms.get(k, 0) + sign * c
        pos = m.end()

    if domain is None:
        domain = Domain("poly", var) if var is not None else INTEGERS
    if domain.kind == "int":
        if var is not None:
            raise ElementSyntaxError(text, 0, "variable in an integer element")
        return terms.get(0, 0)
    if var is not None and var != domain.var:
        raise ElementSyntaxError(text, 0, f"expected variable {domain.var!r}, found {var!r}")
    deg = max(terms)
    return Polynomial([terms.get(k, 0) for k in range(deg + 1)], domain.var)


def format_element(e) -> str:
    """Canonical text: decimal integers, polynomials in decreasing degree."""
    if type(e) is int:
        return str(e)
    if not isinstance(e, Polynomial):
        raise DomainMismatch(f"{e!r} is not a domain element")
    if e.is_zero():
        return "0"
    parts = []
    for k in range(e.degree, -1, -1):
        c = e.coeffs[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if k == 0:
            body = str(a)
        else:
            mono = e.var if k == 1 else f"{e.var}^{k}"
            body = mono if a == 1 else f"{a}*{mono}"
        if not parts:
            parts.append(body if sign == "+" else "-" + body)
        else:
            parts.append(sign + body)
    return "".join(parts)
