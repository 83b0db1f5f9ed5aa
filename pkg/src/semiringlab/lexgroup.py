"""Exact element algebra for a lexicographically ordered non-commutative l-group.

The carrier is H = G x Z where G is the group of 2x2 upper-triangular rational
matrices [[alpha, beta], [0, 1]] with alpha > 0, ordered first by (alpha,
beta) and then by the integer component. H is totally ordered, so join and
meet are max and min. The interval [unit, u] of H carries the multiplication
a . b = (a * u^-1 * b) v unit, giving a non-commutative integral semiring at
the element level; the interval is infinite, so only element operations and a
deterministic sampler are exposed.

All arithmetic is exact over Fractions; order comparisons never touch floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InputError


@dataclass(frozen=True)
class LexGroupElement:
    alpha: Fraction
    beta: Fraction
    k: int

    def __post_init__(self):
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        object.__setattr__(self, "beta", Fraction(self.beta))
        object.__setattr__(self, "k", int(self.k))
        if self.alpha <= 0:
            raise InputError(f"alpha must be positive, got {self.alpha}")

    def key(self):
        return (self.alpha, self.beta, self.k)

    def __repr__(self):
        return f"(({self.alpha},{self.beta}),{self.k})"


GROUP_UNIT = LexGroupElement(Fraction(1), Fraction(0), 0)
# least element strictly above the unit in the lexicographic order
LEAST_ABOVE_UNIT = LexGroupElement(Fraction(1), Fraction(0), 1)


def lex_mul(x, y):
    """Group product: matrix part multiplies, integer part adds."""
    return LexGroupElement(x.alpha * y.alpha, x.alpha * y.beta + x.beta, x.k + y.k)


def lex_inv(x):
    return LexGroupElement(1 / x.alpha, -x.beta / x.alpha, -x.k)


def lex_cmp(x, y):
    a, b = x.key(), y.key()
    return (a > b) - (a < b)


def lex_le(x, y):
    return x.key() <= y.key()


def lex_join(x, y):
    return x if lex_cmp(x, y) >= 0 else y


def lex_meet(x, y):
    return x if lex_cmp(x, y) <= 0 else y


def mv_product(a, b, u):
    """Interval product (a * u^-1 * b) joined with the unit, inside [unit, u]."""
    if lex_cmp(u, GROUP_UNIT) <= 0:
        raise InputError(f"interval top {u} must lie strictly above the unit")
    for name, x in (("a", a), ("b", b)):
        if not (lex_le(GROUP_UNIT, x) and lex_le(x, u)):
            raise InputError(f"operand {name} = {x} outside the interval [{GROUP_UNIT}, {u}]")
    return lex_join(lex_mul(lex_mul(a, lex_inv(u)), b), GROUP_UNIT)


def sample_interval(u, denominator_bound=4, height_bound=2):
    """Deterministic grid of interval elements, sorted by the total order.

    Alphas and betas range over rationals p/q with 1 <= p, q <= the bound
    (betas also take 0 and negatives); integer parts range over
    [-height_bound, height_bound]. Only elements inside [unit, u] survive.
    """
    Q = denominator_bound
    pos = sorted({Fraction(p, q) for p in range(1, Q + 1) for q in range(1, Q + 1)})
    betas = sorted({Fraction(0)} | set(pos) | {-f for f in pos})
    out = set()
    for alpha in pos:
        for beta in betas:
            for k in range(-height_bound, height_bound + 1):
                x = LexGroupElement(alpha, beta, k)
                if lex_le(GROUP_UNIT, x) and lex_le(x, u):
                    out.add(x)
    return sorted(out, key=LexGroupElement.key)
