"""Dense univariate polynomials over the integers.

Coefficients are stored in ascending order (index i holds the coefficient of
x^i) as a tuple of Python ints, so every value is exact and immutable.
"""

from __future__ import annotations

import json
import math
import re
from typing import Iterable, Sequence

NEG_INF = -math.inf


class NotDivisible(ArithmeticError):
    """Raised when an exact division over Z[x] leaves a remainder."""


class ZeroPolynomial(ValueError):
    pass


class NonMonic(ValueError):
    pass


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def _strip(coeffs: list[int]) -> tuple[int, ...]:
    n = len(coeffs)
    while n and coeffs[n - 1] == 0:
        n -= 1
    return tuple(coeffs[:n])


class IntPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        object.__setattr__(self, "coeffs", _strip([int(c) for c in coeffs]))

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    @classmethod
    def x(cls) -> IntPoly:
        return cls((0, 1))

    @classmethod
    def const(cls, c: int) -> IntPoly:
        return cls((c,))

    @classmethod
    def monomial(cls, c: int, k: int) -> IntPoly:
        return cls([0] * k + [c])

    # -- basic queries -----------------------------------------------------

    @property
    def degree(self) -> int | float:
        """Degree, or ``NEG_INF`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.lc == 1

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = IntPoly.const(other)
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(("IntPoly", self.coeffs))

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)!r})"

    def __str__(self) -> str:
        return pretty(self)

    # -- ring operations ---------------------------------------------------

    def __neg__(self) -> IntPoly:
        return IntPoly([-c for c in self.coeffs])

    def __add__(self, other) -> IntPoly:
        other = _coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    __radd__ = __add__

    def __sub__(self, other) -> IntPoly:
        return self + (-_coerce(other))

    def __rsub__(self, other) -> IntPoly:
        return _coerce(other) - self

    def __mul__(self, other) -> IntPoly:
        other = _coerce(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> IntPoly:
        if k < 0:
            raise ValueError("negative exponent")
        result, base = IntPoly.const(1), self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def scale(self, c: int) -> IntPoly:
        return IntPoly([c * a for a in self.coeffs])

    def shift_up(self, k: int) -> IntPoly:
        """Multiply by x^k."""
        return IntPoly([0] * k + list(self.coeffs)) if self.coeffs else self

    def derivative(self) -> IntPoly:
        return IntPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = math.gcd(g, c)
        return g

    def __call__(self, t: int) -> int:
        return evaluate(self, t)

    # -- serialization -----------------------------------------------------

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[str | int]) -> IntPoly:
        return cls(int(c) for c in data)


def _coerce(value) -> IntPoly:
    if isinstance(value, IntPoly):
        return value
    if isinstance(value, int):
        return IntPoly.const(value)
    raise TypeError(f"cannot combine IntPoly with {type(value).__name__}")


ZERO = IntPoly()
ONE = IntPoly.const(1)
X = IntPoly.x()


def divmod_poly(num: IntPoly, den: IntPoly) -> tuple[IntPoly, IntPoly]:
    """Long division in Z[x]; requires the leading coefficient of ``den`` to
    divide every intermediate leading term, otherwise raises NotDivisible."""
    if den.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    rem = list(num.coeffs)
    db = len(den.coeffs) - 1
    lc = den.lc
    if len(rem) - 1 < db:
        return ZERO, num
    quot = [0] * (len(rem) - db)
    dc = den.coeffs
    for k in range(len(rem) - 1 - db, -1, -1):
        top = rem[k + db]
        if top == 0:
            continue
        q, r = divmod(top, lc)
        if r:
            raise NotDivisible(f"leading coefficient {lc} does not divide {top}")
        quot[k] = q
        for i, c in enumerate(dc):
            rem[k + i] -= q * c
    return IntPoly(quot), IntPoly(rem)


def divide_exact(num: IntPoly, den: IntPoly) -> IntPoly:
    q, r = divmod_poly(num, den)
    if not r.is_zero():
        raise NotDivisible(f"nonzero remainder {r}")
    return q


def divides(den: IntPoly, num: IntPoly) -> bool:
    try:
        divide_exact(num, den)
    except NotDivisible:
        return False
    return True


def taylor_shift(f: IntPoly, c: int) -> IntPoly:
    """Return f(x + c) by repeated synthetic division."""
    a = list(f.coeffs)
    n = len(a)
    if c == 0 or n < 2:
        return f
    for i in range(n - 1):
        for j in range(n - 2, i - 1, -1):
            a[j] += c * a[j + 1]
    return IntPoly(a)


def compose_square(f: IntPoly) -> IntPoly:
    """Return f(x^2)."""
    out = [0] * (2 * len(f.coeffs) - 1) if f.coeffs else []
    for i, c in enumerate(f.coeffs):
        out[2 * i] = c
    return IntPoly(out)


def evaluate(f: IntPoly, t: int) -> int:
    acc = 0
    for c in reversed(f.coeffs):
        acc = acc * t + c
    return acc


def pseudo_remainder(a: IntPoly, b: IntPoly) -> IntPoly:
    """prem(a, b): remainder of lc(b)^(deg a - deg b + 1) * a by b."""
    rem = list(a.coeffs)
    db = len(b.coeffs) - 1
    delta = len(rem) - 1 - db
    if delta < 0:
        return a
    lc = b.lc
    bc = b.coeffs
    for k in range(delta, -1, -1):
        top = rem[k + db]
        # each step multiplies the working remainder by lc(b)
        rem = [lc * c for c in rem]
        if top:
            for i, c in enumerate(bc):
                rem[k + i] -= top * c
        rem[k + db] = 0
    return IntPoly(rem)


def resultant(f: IntPoly, g: IntPoly) -> int:
    """Resultant via the subresultant PRS (Collins / Brown-Traub)."""
    if f.is_zero() or g.is_zero():
        raise ZeroPolynomial("resultant of the zero polynomial")
    a, b = f, g
    sign = 1
    if a.degree < b.degree:
        a, b = b, a
        if a.degree % 2 and b.degree % 2:
            sign = -1
    if b.degree == 0:
        return sign * b.lc ** a.degree

    ca, cb = a.content(), b.content()
    a = IntPoly([c // ca for c in a.coeffs])
    b = IntPoly([c // cb for c in b.coeffs])
    t = ca ** b.degree * cb ** a.degree

    g_, h_ = 1, 1
    while True:
        da, db = a.degree, b.degree
        delta = da - db
        if da % 2 and db % 2:
            sign = -sign
        r = pseudo_remainder(a, b)
        a = b
        if r.is_zero():
            return 0
        div = g_ * h_ ** delta
        b = IntPoly([c // div for c in r.coeffs])
        g_ = a.lc
        # h <- g^delta / h^(delta - 1), exact in Z
        h_ = g_ ** delta // h_ ** (delta - 1) if delta >= 1 else h_
        if b.degree == 0:
            break
    # final step: h <- lc(b)^deg(a) / h^(deg(a) - 1)
    da = a.degree
    h_ = b.lc ** da // h_ ** (da - 1) if da >= 1 else h_
    return sign * t * h_


def discriminant(f: IntPoly) -> int:
    if f.is_zero():
        raise ZeroPolynomial("discriminant of the zero polynomial")
    if not f.is_monic():
        raise NonMonic(f"discriminant requires a monic polynomial, got lc={f.lc}")
    n = f.degree
    if n < 1:
        raise ValueError("discriminant requires degree >= 1")
    if n == 1:
        return 1
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * resultant(f, f.derivative())


def reduce_mod(f: IntPoly, p: int):
    from .fppoly import FpPoly

    return FpPoly(p, f.coeffs)


# -- text forms ------------------------------------------------------------


def pretty(f: IntPoly, var: str = "x") -> str:
    if f.is_zero():
        return "0"
    parts: list[str] = []
    for i in range(len(f.coeffs) - 1, -1, -1):
        c = f.coeffs[i]
        if c == 0:
            continue
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            mono = var if i == 1 else f"{var}^{i}"
            body = mono if mag == 1 else f"{mag}{mono}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)


_TERM = re.compile(r"\s*([+-])?\s*(\d+)?\s*(\*?\s*([a-zA-Z])\s*(?:\^\s*(\d+))?)?")


def parse_poly(text: str) -> IntPoly:
    """Parse a JSON coefficient array or a human form like ``x^2 - 5x + 5``."""
    stripped = text.strip()
    if stripped.startswith("["):
        try:
            data = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise ParseError(exc.msg, exc.pos) from None
        if not isinstance(data, list):
            raise ParseError("expected a JSON array", 0)
        out = []
        for k, item in enumerate(data):
            if isinstance(item, bool) or not isinstance(item, (str, int)):
                raise ParseError(f"element {k} is not a decimal string", 0)
            try:
                out.append(int(item))
            except ValueError:
                raise ParseError(f"element {k} is not a decimal string", 0) from None
        return IntPoly(out)
    return _parse_human(text)


def _parse_human(text: str) -> IntPoly:
    coeffs: dict[int, int] = {}
    pos = 0
    n = len(text)
    var = None
    first = True
    while True:
        while pos < n and text[pos].isspace():
            pos += 1
        if pos >= n:
            break
        m = _TERM.match(text, pos)
        sign, digits, has_var, name, exp = m.groups() if m else (None,) * 5
        if not m or (digits is None and has_var is None):
            raise ParseError("expected a term", pos)
        if sign is None and not first:
            raise ParseError("expected '+' or '-'", pos)
        if has_var is not None:
            if var is None:
                var = name
            elif name != var:
                raise ParseError(f"unexpected variable {name!r}", pos)
            if digits is None and has_var.lstrip().startswith("*"):
                raise ParseError("'*' without a coefficient", pos)
        c = int(digits) if digits is not None else 1
        if sign == "-":
            c = -c
        k = (int(exp) if exp is not None else 1) if has_var is not None else 0
        coeffs[k] = coeffs.get(k, 0) + c
        pos = m.end()
        first = False
    if first:
        raise ParseError("empty polynomial", pos)
    if pos < n:
        raise ParseError("trailing characters", pos)
    top = max(coeffs)
    return IntPoly([coeffs.get(i, 0) for i in range(top + 1)])
