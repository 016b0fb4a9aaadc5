"""
The graded Euler polynomial V(t, q, x), computed from a state sum and
from a homology table.

The state sum weights each resolution by (tq)^I and each trivial circle by
q + 1/q, each non-trivial circle by qx + 1/(qx), then applies the
normalizing factor t^(-n_minus) q^(n_plus - 2 n_minus). Homology gives
sum of rank * t^i q^j x^k. Both agree after setting t = -1.
"""

import logging
from collections import defaultdict
from typing import Dict, Iterable, Optional, Tuple

import sympy

from diagram.resolutions import all_resolutions
from models.diagram import AnnularDiagram
from models.results import TrigradedRanks

logger = logging.getLogger(__name__)

Monomial = Tuple[int, int, int]

T, Q, X = sympy.symbols("t q x")


class EulerPolynomial:
    """
    A Laurent polynomial in t, q, x with integer coefficients.

    Example:
        >>> unknot = EulerPolynomial({(0, 1, 1): 1, (0, -1, -1): 1})
        >>> str(unknot)
        'q*x + 1/(q*x)'
    """

    def __init__(self, coefficients: Optional[Dict[Monomial, int]] = None):
        self.coefficients: Dict[Monomial, int] = {
            m: c for m, c in (coefficients or {}).items() if c
        }

    @classmethod
    def monomial(cls, i: int = 0, j: int = 0, k: int = 0, coefficient: int = 1) -> "EulerPolynomial":
        return cls({(i, j, k): coefficient})

    @classmethod
    def trivial_circle(cls) -> "EulerPolynomial":
        return cls({(0, 1, 0): 1, (0, -1, 0): 1})

    @classmethod
    def nontrivial_circle(cls) -> "EulerPolynomial":
        return cls({(0, 1, 1): 1, (0, -1, -1): 1})

    def __add__(self, other: "EulerPolynomial") -> "EulerPolynomial":
        out = defaultdict(int, self.coefficients)
        for m, c in other.coefficients.items():
            out[m] += c
        return EulerPolynomial(out)

    def __sub__(self, other: "EulerPolynomial") -> "EulerPolynomial":
        return self + other.scaled(-1)

    def __mul__(self, other: "EulerPolynomial") -> "EulerPolynomial":
        out: Dict[Monomial, int] = defaultdict(int)
        for (i1, j1, k1), c1 in self.coefficients.items():
            for (i2, j2, k2), c2 in other.coefficients.items():
                out[(i1 + i2, j1 + j2, k1 + k2)] += c1 * c2
        return EulerPolynomial(out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, EulerPolynomial):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self):
        return hash(frozenset(self.coefficients.items()))

    def __repr__(self) -> str:
        return f"EulerPolynomial({self})"

    def __str__(self) -> str:
        return str(self.as_expr())

    def scaled(self, factor: int) -> "EulerPolynomial":
        return EulerPolynomial({m: c * factor for m, c in self.coefficients.items()})

    def shifted(self, i: int = 0, j: int = 0, k: int = 0) -> "EulerPolynomial":
        return EulerPolynomial({(a + i, b + j, c + k): v for (a, b, c), v in self.coefficients.items()})

    def power(self, exponent: int) -> "EulerPolynomial":
        out = EulerPolynomial.monomial()
        for _ in range(exponent):
            out = out * self
        return out

    def at_t_minus_one(self) -> "EulerPolynomial":
        """Specialize t = -1, keeping the result in the same ring with i = 0."""
        out: Dict[Monomial, int] = defaultdict(int)
        for (i, j, k), c in self.coefficients.items():
            out[(0, j, k)] += c if i % 2 == 0 else -c
        return EulerPolynomial(out)

    def jones(self) -> Dict[int, int]:
        """Coefficients of q after t = -1 and x = 1."""
        out: Dict[int, int] = defaultdict(int)
        for (i, j, _), c in self.coefficients.items():
            out[j] += c if i % 2 == 0 else -c
        return {j: c for j, c in sorted(out.items()) if c}

    def divide_by_nontrivial_circle(self) -> "EulerPolynomial":
        """
        Exact quotient by qx + 1/(qx).

        With u = qx the divisor is (u^2 + 1)/u, so the polynomial is
        multiplied by u and divided by u^2 + 1 within each class of
        monomials that differ by powers of u.

        Raises:
            ValueError: If the division leaves a remainder
        """
        classes: Dict[Tuple[int, int], Dict[int, int]] = defaultdict(dict)
        for (i, j, k), c in self.shifted(0, 1, 1).coefficients.items():
            classes[(i, j - k)][k] = c
        out: Dict[Monomial, int] = {}
        for (i, offset), series in classes.items():
            lowest = min(series)
            remainder = dict(series)
            while remainder:
                top = max(remainder)
                c = remainder.pop(top)
                if top - 2 < lowest:
                    raise ValueError("polynomial is not divisible by qx + 1/(qx)")
                out[(i, offset + top - 2, top - 2)] = c
                remainder[top - 2] = remainder.get(top - 2, 0) - c
                if not remainder[top - 2]:
                    del remainder[top - 2]
        return EulerPolynomial(out)

    def as_expr(self) -> sympy.Expr:
        return sympy.Add(*[
            c * T**i * Q**j * X**k for (i, j, k), c in sorted(self.coefficients.items())
        ])

    def as_dict(self) -> Dict[str, int]:
        return {f"{i},{j},{k}": c for (i, j, k), c in sorted(self.coefficients.items())}


def euler_statesum(d: AnnularDiagram, cap: Optional[int] = None, shifted: bool = True) -> EulerPolynomial:
    """
    V(t, q, x) from the bracket state sum.

    Example:
        >>> str(euler_statesum(parse_braid_word("1:")))
        'q*x + 1/(q*x)'
    """
    trivial = EulerPolynomial.trivial_circle()
    nontrivial = EulerPolynomial.nontrivial_circle()
    total = EulerPolynomial()
    for config in all_resolutions(d, cap):
        term = EulerPolynomial.monomial(config.degree, config.degree, 0)
        term = term * trivial.power(config.m) * nontrivial.power(config.l)
        total = total + term
    if shifted:
        total = total.shifted(-d.n_minus, d.n_plus - 2 * d.n_minus, 0)
    logger.debug("state sum over %d resolutions", 2 ** d.crossing_count)
    return total


def euler_from_homology(ranks: TrigradedRanks) -> EulerPolynomial:
    """Poincare polynomial of a rank table: sum of rank * t^i q^j x^k."""
    return EulerPolynomial({(e.i, e.j, e.k): e.rank for e in ranks.ranks})


def euler_from_counts(counts: Iterable[Tuple[Monomial, int]]) -> EulerPolynomial:
    out: Dict[Monomial, int] = defaultdict(int)
    for monomial, value in counts:
        out[monomial] += value
    return EulerPolynomial(out)
