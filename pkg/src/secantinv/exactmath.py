"""Exact scalar, polynomial, and series arithmetic.

Everything here is integer or rational arithmetic with no rounding of any
kind: integers are Python ints, rationals are ``fractions.Fraction`` (always
stored in lowest terms with positive denominator), and polynomials carry a
dense ascending list of rational coefficients in the twist variable t.

Serialization contract used across the package: a rational renders as the
string ``"p/q"`` with q > 0 and gcd(|p|, q) = 1, or plain ``"p"`` when q = 1;
a polynomial renders as the list of such strings in ascending degree.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .errors import DuplicateNode, NonvanishingTail

# The only numeric carriers in the package.
Rational = Fraction
RationalLike = Fraction | int

__all__ = [
    "Rational",
    "QPolynomial",
    "binomial",
    "binomial_poly",
    "lagrange_interpolate",
    "finite_difference_numerator",
    "format_rational",
    "parse_rational",
]


def binomial(n: int, j: int) -> int:
    """Generalized binomial coefficient C(n, j) for any integer n.

    For j < 0 the value is 0; otherwise it is the falling-factorial product
    n(n-1)...(n-j+1)/j!, which is an integer for every integer n.  In
    particular C(n, j) = 0 for 0 <= n < j, and C(-1, 2) = 1.
    """
    if j < 0:
        return 0
    if n >= 0:
        return math.comb(n, j)
    # C(n, j) = (-1)^j C(j - n - 1, j) for n < 0
    return (-1) ** j * math.comb(j - n - 1, j)


def format_rational(value: RationalLike) -> str:
    """Render a rational as "p/q" (q > 0, lowest terms) or "p" when q = 1."""
    q = Fraction(value)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    """Inverse of :func:`format_rational` (also accepts any Fraction spelling)."""
    return Fraction(text)


@dataclass(frozen=True)
class QPolynomial:
    """Univariate polynomial in the twist variable t with exact rational
    coefficients, stored densely in ascending degree.

    The highest-index coefficient is nonzero unless the polynomial is zero,
    which is represented by an empty coefficient tuple (degree -1).
    Instances are immutable and safe to share between threads.
    """

    coefficients: tuple[Fraction, ...] = ()

    def __post_init__(self) -> None:
        coeffs = [Fraction(c) for c in self.coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    @classmethod
    def zero(cls) -> "QPolynomial":
        return cls(())

    @classmethod
    def constant(cls, value: RationalLike) -> "QPolynomial":
        return cls((Fraction(value),))

    @classmethod
    def variable(cls) -> "QPolynomial":
        """The polynomial t."""
        return cls((Fraction(0), Fraction(1)))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coefficients

    @property
    def leading_coefficient(self) -> Fraction:
        if not self.coefficients:
            raise ValueError("the zero polynomial has no leading coefficient")
        return self.coefficients[-1]

    def coefficient(self, power: int) -> Fraction:
        if 0 <= power < len(self.coefficients):
            return self.coefficients[power]
        return Fraction(0)

    def __call__(self, point: RationalLike) -> Fraction:
        x = Fraction(point)
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def __add__(self, other: "QPolynomial") -> "QPolynomial":
        a, b = self.coefficients, other.coefficients
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPolynomial(out)

    def __neg__(self) -> "QPolynomial":
        return QPolynomial(tuple(-c for c in self.coefficients))

    def __sub__(self, other: "QPolynomial") -> "QPolynomial":
        return self + (-other)

    def __mul__(self, other: "QPolynomial | RationalLike") -> "QPolynomial":
        if isinstance(other, QPolynomial):
            if self.is_zero or other.is_zero:
                return QPolynomial.zero()
            out = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1)
            for i, a in enumerate(self.coefficients):
                if a == 0:
                    continue
                for j, b in enumerate(other.coefficients):
                    out[i + j] += a * b
            return QPolynomial(out)
        scale = Fraction(other)
        return QPolynomial(tuple(c * scale for c in self.coefficients))

    def __rmul__(self, other: RationalLike) -> "QPolynomial":
        return self * other

    def divide_by_linear(self, root: RationalLike) -> tuple["QPolynomial", Fraction]:
        """Synthetic division by (t - root); returns (quotient, remainder)."""
        r = Fraction(root)
        quotient: list[Fraction] = []
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * r + c
            quotient.append(acc)
        if not quotient:
            return QPolynomial.zero(), Fraction(0)
        remainder = quotient.pop()
        quotient.reverse()
        return QPolynomial(quotient), remainder

    def to_strings(self) -> list[str]:
        """Ascending-degree list of "p/q" strings (the wire format)."""
        return [format_rational(c) for c in self.coefficients]

    @classmethod
    def from_strings(cls, items: Iterable[str]) -> "QPolynomial":
        return cls(tuple(parse_rational(s) for s in items))

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts: list[str] = []
        for power in range(self.degree, -1, -1):
            c = self.coefficients[power]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if power == 0:
                body = format_rational(mag)
            else:
                t = "t" if power == 1 else f"t^{power}"
                body = t if mag == 1 else f"{format_rational(mag)}*{t}"
            parts.append(f"{sign} {body}" if parts else (f"-{body}" if c < 0 else body))
        return " ".join(parts)


def binomial_poly(shift: int, lower: int) -> QPolynomial:
    """The degree-``lower`` polynomial C(t + shift, lower), i.e. the product
    (t+shift)(t+shift-1)...(t+shift-lower+1) divided by lower!.

    Evaluating it at any integer t0 agrees with ``binomial(t0 + shift, lower)``.
    """
    if lower < 0:
        raise ValueError("lower index of binomial_poly must be nonnegative")
    poly = QPolynomial.constant(1)
    for i in range(lower):
        poly = poly * QPolynomial((Fraction(shift - i), Fraction(1)))
    return poly * Fraction(1, math.factorial(lower))


def lagrange_interpolate(
    nodes: Sequence[tuple[RationalLike, RationalLike]],
) -> QPolynomial:
    """Unique polynomial of degree <= len(nodes)-1 through the given nodes.

    Computed by Newton divided differences over exact rationals, so the
    result reproduces every node ordinate with zero error.  Raises
    :class:`DuplicateNode` if two abscissae coincide.
    """
    if not nodes:
        raise ValueError("lagrange_interpolate requires at least one node")
    xs = [Fraction(x) for x, _ in nodes]
    ys = [Fraction(y) for _, y in nodes]
    if len(set(xs)) != len(xs):
        raise DuplicateNode("interpolation abscissae must be pairwise distinct")

    # Divided-difference table, in place: coef[i] ends as f[x_0, ..., x_i].
    coef = ys[:]
    n = len(nodes)
    for order in range(1, n):
        for i in range(n - 1, order - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - order])

    # Expand the Newton form coef[0] + coef[1](t-x_0) + ... into monomials.
    poly = QPolynomial.constant(coef[n - 1])
    for i in range(n - 2, -1, -1):
        linear = QPolynomial((-xs[i], Fraction(1)))
        poly = poly * linear + QPolynomial.constant(coef[i])
    return poly


def finite_difference_numerator(
    values: Callable[[int], int],
    krull_dim: int,
    cutoff: int,
) -> QPolynomial:
    """Numerator Q of a Hilbert series H(t) = Q(t)/(1-t)^krull_dim.

    ``values`` must vanish for negative arguments and agree with a polynomial
    of degree < krull_dim for all arguments >= 1.  Q_n is the alternating
    binomial sum of krull_dim successive values ending at n; every Q_n with
    krull_dim < n <= cutoff must then vanish, and :class:`NonvanishingTail`
    is raised otherwise (a violated precondition).  The returned coefficients
    are integers.
    """
    if krull_dim < 1:
        raise ValueError("krull_dim must be positive")
    if cutoff < krull_dim + 1:
        raise ValueError("cutoff must be at least krull_dim + 1")
    signs = [(-1) ** j * binomial(krull_dim, j) for j in range(krull_dim + 1)]
    cache = {n: values(n) for n in range(-krull_dim, cutoff + 1)}
    coeffs: list[Fraction] = []
    for n in range(cutoff + 1):
        q_n = sum(signs[j] * cache[n - j] for j in range(krull_dim + 1))
        if n > krull_dim:
            if q_n != 0:
                raise NonvanishingTail(
                    f"difference of order {krull_dim} is {q_n} != 0 at twist {n}"
                )
        else:
            coeffs.append(Fraction(q_n))
    return QPolynomial(coeffs)
