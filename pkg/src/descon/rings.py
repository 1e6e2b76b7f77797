"""Exact coefficient arithmetic: integer polynomials in q, Laurent polynomials
in q, and truncated integer power series in x.

Coefficients are plain Python ints, so every operation is exact. Values are
immutable after construction and safe to share between workers.

JSON wire format for both polynomial flavours (used by the CLI emitters):
``{"min": <int>, "coeffs": ["<int>", ...]}`` with coefficients as decimal
strings, ascending exponents; plain polynomials always have ``"min": 0``.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Sequence

__all__ = [
    "InexactDivisionError",
    "IntPolynomial",
    "LaurentPolynomial",
    "TruncatedSeries",
    "q_int",
    "q_factorial",
    "q_multinomial",
]


class InexactDivisionError(ArithmeticError):
    """A division that must be exact left a remainder.

    The counting formulas implemented here guarantee divisibility, so this
    always indicates an internal bug; callers must never truncate past it.
    """


def _format_terms(pairs: Iterable[tuple[int, int]]) -> str:
    """Render (exponent, coefficient) pairs compactly, e.g. ``1-q+2q^3``.

    No spaces, so rendered values are safe as unquoted CSV cells.
    """
    terms = []
    for exp, coeff in pairs:
        if coeff == 0:
            continue
        if exp == 0:
            terms.append(str(coeff))
            continue
        base = "q" if exp == 1 else f"q^{exp}"
        if coeff == 1:
            terms.append(base)
        elif coeff == -1:
            terms.append(f"-{base}")
        else:
            terms.append(f"{coeff}{base}")
    if not terms:
        return "0"
    out = terms[0]
    for term in terms[1:]:
        out += term if term.startswith("-") else f"+{term}"
    return out


class IntPolynomial:
    """Dense polynomial in q with integer coefficients.

    ``coeffs[i]`` is the coefficient of ``q**i``; trailing zeros are trimmed
    on construction and the zero polynomial is the empty tuple.

    >>> p = IntPolynomial([1, 2, 1])
    >>> str(p * p)
    '1+4q+6q^2+4q^3+q^4'
    >>> p.evaluate(1)
    4
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        for c in cs:
            if not isinstance(c, int):
                raise TypeError(f"integer coefficient required, got {type(c).__name__}")
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs = tuple(cs)

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    def coeff(self, exp: int) -> int:
        if 0 <= exp < len(self._coeffs):
            return self._coeffs[exp]
        return 0

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    @staticmethod
    def _coerce(other) -> "IntPolynomial | None":
        if isinstance(other, IntPolynomial):
            return other
        if isinstance(other, int):
            return IntPolynomial((other,))
        return None

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._coeffs == o._coeffs

    def __hash__(self) -> int:
        if len(self._coeffs) <= 1:
            return hash(self._coeffs[0] if self._coeffs else 0)
        return hash(self._coeffs)

    def __add__(self, other) -> "IntPolynomial":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self._coeffs, o._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    __radd__ = __add__

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-c for c in self._coeffs))

    def __sub__(self, other) -> "IntPolynomial":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> "IntPolynomial":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other) -> "IntPolynomial":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self._coeffs, o._coeffs
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, exp: int) -> "IntPolynomial":
        if not isinstance(exp, int) or exp < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = IntPolynomial((1,))
        for _ in range(exp):
            result = result * self
        return result

    def shifted(self, k: int) -> "IntPolynomial":
        """Multiply by q**k (k >= 0)."""
        if k < 0:
            raise ValueError("shift must be nonnegative; use LaurentPolynomial for q^-k")
        if not self._coeffs:
            return self
        return IntPolynomial((0,) * k + self._coeffs)

    def evaluate(self, value: int) -> int:
        """Evaluate at an integer point (Horner)."""
        acc = 0
        for c in reversed(self._coeffs):
            acc = acc * value + c
        return acc

    def exact_div(self, divisor: "IntPolynomial") -> "IntPolynomial":
        """Divide exactly; raise InexactDivisionError if any remainder appears."""
        d = self._coerce(divisor)
        if d is None:
            raise TypeError("divisor must be an IntPolynomial or int")
        if not d:
            raise ZeroDivisionError("polynomial division by zero")
        if not self:
            return IntPolynomial()
        rem = list(self._coeffs)
        dc = d._coeffs
        lead = dc[-1]
        if len(rem) < len(dc):
            raise InexactDivisionError(f"{self!r} is not divisible by {d!r}")
        quot = [0] * (len(rem) - len(dc) + 1)
        for pos in range(len(quot) - 1, -1, -1):
            head = rem[pos + len(dc) - 1]
            if head == 0:
                continue
            q, r = divmod(head, lead)
            if r != 0:
                raise InexactDivisionError(f"{self!r} is not divisible by {d!r}")
            quot[pos] = q
            for i, c in enumerate(dc):
                rem[pos + i] -= q * c
        if any(rem):
            raise InexactDivisionError(f"{self!r} is not divisible by {d!r}")
        return IntPolynomial(quot)

    def substitute_reciprocal(self) -> "LaurentPolynomial":
        """Return p(1/q) as a Laurent polynomial."""
        if not self._coeffs:
            return LaurentPolynomial()
        return LaurentPolynomial(tuple(reversed(self._coeffs)), -self.degree)

    def to_json_dict(self) -> dict:
        return {"min": 0, "coeffs": [str(c) for c in self._coeffs]}

    def __str__(self) -> str:
        return _format_terms(enumerate(self._coeffs))

    def __repr__(self) -> str:
        return f"IntPolynomial({self._coeffs!r})"


class LaurentPolynomial:
    """Polynomial in q and 1/q with integer coefficients.

    ``coeffs[i]`` is the coefficient of ``q**(min_exp + i)``. Normalization
    trims zeros from both ends; zero is canonically ``((), 0)``.

    >>> str(LaurentPolynomial((1, 2), -3))
    'q^-3+2q^-2'
    """

    __slots__ = ("_min_exp", "_coeffs")

    def __init__(self, coeffs: Iterable[int] = (), min_exp: int = 0):
        cs = list(coeffs)
        for c in cs:
            if not isinstance(c, int):
                raise TypeError(f"integer coefficient required, got {type(c).__name__}")
        while cs and cs[-1] == 0:
            cs.pop()
        while cs and cs[0] == 0:
            cs.pop(0)
            min_exp += 1
        if not cs:
            min_exp = 0
        self._coeffs = tuple(cs)
        self._min_exp = min_exp

    @classmethod
    def from_polynomial(cls, p: IntPolynomial) -> "LaurentPolynomial":
        return cls(p.coeffs, 0)

    @classmethod
    def q_power(cls, exp: int) -> "LaurentPolynomial":
        """The monomial q**exp (exp may be negative)."""
        return cls((1,), exp)

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._coeffs

    @property
    def min_exp(self) -> int:
        return self._min_exp

    @property
    def max_exp(self) -> int:
        return self._min_exp + len(self._coeffs) - 1

    def coeff(self, exp: int) -> int:
        i = exp - self._min_exp
        if 0 <= i < len(self._coeffs):
            return self._coeffs[i]
        return 0

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    @staticmethod
    def _coerce(other) -> "LaurentPolynomial | None":
        if isinstance(other, LaurentPolynomial):
            return other
        if isinstance(other, IntPolynomial):
            return LaurentPolynomial.from_polynomial(other)
        if isinstance(other, int):
            return LaurentPolynomial((other,), 0)
        return None

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self._min_exp, self._coeffs) == (o._min_exp, o._coeffs)

    def __hash__(self) -> int:
        if self._min_exp == 0 and len(self._coeffs) <= 1:
            return hash(self._coeffs[0] if self._coeffs else 0)
        return hash((self._min_exp, self._coeffs))

    def __add__(self, other) -> "LaurentPolynomial":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self:
            return o
        if not o:
            return self
        lo = min(self._min_exp, o._min_exp)
        hi = max(self.max_exp, o.max_exp)
        out = [0] * (hi - lo + 1)
        for i, c in enumerate(self._coeffs):
            out[self._min_exp - lo + i] += c
        for i, c in enumerate(o._coeffs):
            out[o._min_exp - lo + i] += c
        return LaurentPolynomial(out, lo)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPolynomial":
        return LaurentPolynomial(tuple(-c for c in self._coeffs), self._min_exp)

    def __sub__(self, other) -> "LaurentPolynomial":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> "LaurentPolynomial":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other) -> "LaurentPolynomial":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self or not o:
            return LaurentPolynomial()
        out = [0] * (len(self._coeffs) + len(o._coeffs) - 1)
        for i, ca in enumerate(self._coeffs):
            if ca == 0:
                continue
            for j, cb in enumerate(o._coeffs):
                out[i + j] += ca * cb
        return LaurentPolynomial(out, self._min_exp + o._min_exp)

    __rmul__ = __mul__

    def substitute_reciprocal(self) -> "LaurentPolynomial":
        """Negate all exponents (q -> 1/q); an involution."""
        return LaurentPolynomial(tuple(reversed(self._coeffs)), -self.max_exp if self else 0)

    def evaluate_at_one(self) -> int:
        return sum(self._coeffs)

    def to_json_dict(self) -> dict:
        return {"min": self._min_exp, "coeffs": [str(c) for c in self._coeffs]}

    def __str__(self) -> str:
        return _format_terms((self._min_exp + i, c) for i, c in enumerate(self._coeffs))

    def __repr__(self) -> str:
        return f"LaurentPolynomial({self._coeffs!r}, {self._min_exp!r})"


class TruncatedSeries:
    """Integer power series in x truncated at a fixed order N.

    All arithmetic discards terms above x**N; operands must share the same
    order (mixed orders are rejected, never coerced).

    >>> s = TruncatedSeries(3, [1, 1])
    >>> str(s.reciprocal())
    '1-x+x^2-x^3'
    """

    __slots__ = ("_order", "_coeffs")

    def __init__(self, order: int, coeffs: Iterable[int] = ()):
        if not isinstance(order, int) or order < 1:
            raise ValueError("series order must be a positive integer")
        cs = list(coeffs)[: order + 1]
        for c in cs:
            if not isinstance(c, int):
                raise TypeError(f"integer coefficient required, got {type(c).__name__}")
        cs.extend([0] * (order + 1 - len(cs)))
        self._order = order
        self._coeffs = tuple(cs)

    @property
    def order(self) -> int:
        return self._order

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._coeffs

    def coeff(self, exp: int) -> int:
        if not 0 <= exp <= self._order:
            raise IndexError(f"coefficient index {exp} outside truncation order {self._order}")
        return self._coeffs[exp]

    def _coerce(self, other) -> "TruncatedSeries | None":
        if isinstance(other, TruncatedSeries):
            if other._order != self._order:
                raise ValueError(
                    f"mixed truncation orders {self._order} and {other._order}"
                )
            return other
        if isinstance(other, int):
            return TruncatedSeries(self._order, (other,))
        return None

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (self._order, self._coeffs) == (other._order, other._coeffs)

    def __hash__(self) -> int:
        return hash((self._order, self._coeffs))

    def __add__(self, other) -> "TruncatedSeries":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return TruncatedSeries(self._order, tuple(a + b for a, b in zip(self._coeffs, o._coeffs)))

    __radd__ = __add__

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(self._order, tuple(-c for c in self._coeffs))

    def __sub__(self, other) -> "TruncatedSeries":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> "TruncatedSeries":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other) -> "TruncatedSeries":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = [0] * (self._order + 1)
        for i, ca in enumerate(self._coeffs):
            if ca == 0:
                continue
            for j in range(self._order + 1 - i):
                out[i + j] += ca * o._coeffs[j]
        return TruncatedSeries(self._order, out)

    __rmul__ = __mul__

    def reciprocal(self) -> "TruncatedSeries":
        """Series t with self * t == 1 up to the truncation order.

        The constant term must be a unit of the integers (+1 or -1).
        """
        a = self._coeffs
        if a[0] not in (1, -1):
            raise ValueError("series reciprocal requires constant term +1 or -1")
        out = [0] * (self._order + 1)
        out[0] = a[0]
        for k in range(1, self._order + 1):
            acc = 0
            for i in range(1, k + 1):
                acc += a[i] * out[k - i]
            out[k] = -a[0] * acc
        return TruncatedSeries(self._order, out)

    def __str__(self) -> str:
        return _format_terms(enumerate(self._coeffs)).replace("q", "x")

    def __repr__(self) -> str:
        return f"TruncatedSeries({self._order!r}, {self._coeffs!r})"


def q_int(j: int) -> IntPolynomial:
    """The q-analogue of the integer j: 1 + q + ... + q**(j-1).

    >>> str(q_int(3))
    '1+q+q^2'
    """
    if not isinstance(j, int) or j < 1:
        raise ValueError(f"q_int requires a positive integer, got {j!r}")
    return IntPolynomial((1,) * j)


@lru_cache(maxsize=None)
def q_factorial(j: int) -> IntPolynomial:
    """The q-analogue of j!: the product q_int(1) * q_int(2) * ... * q_int(j).

    >>> str(q_factorial(3))
    '1+2q+2q^2+q^3'
    >>> q_factorial(4).evaluate(1)
    24
    """
    if not isinstance(j, int) or j < 0:
        raise ValueError(f"q_factorial requires a nonnegative integer, got {j!r}")
    if j == 0:
        return IntPolynomial((1,))
    return q_factorial(j - 1) * q_int(j)


def q_multinomial(m: int, parts: Sequence[int]) -> IntPolynomial:
    """Gaussian multinomial coefficient: q_factorial(m) over the parts.

    The division is exact by construction; a remainder would be an internal
    arithmetic bug and raises InexactDivisionError.

    >>> str(q_multinomial(4, [2, 2]))
    '1+q+2q^2+q^3+q^4'
    """
    if not parts:
        raise ValueError("q_multinomial requires at least one part")
    if any(not isinstance(p, int) or p < 1 for p in parts):
        raise ValueError(f"q_multinomial parts must be positive integers, got {parts!r}")
    if sum(parts) != m:
        raise ValueError(f"q_multinomial parts {parts!r} do not sum to {m}")
    numerator = q_factorial(m)
    for p in parts:
        numerator = numerator.exact_div(q_factorial(p))
    return numerator
