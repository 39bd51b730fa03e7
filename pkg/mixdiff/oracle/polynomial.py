"""Exact multivariate polynomials over the rationals.

Monomials are tuples of (variable, exponent) pairs sorted by variable, with
positive exponents; the empty tuple is the constant monomial. Variable 0 is
the placeholder t of univariate outer functions f(t); the variables x1, x2, ...
of a signature use their positive ids.
"""
from fractions import Fraction
from random import Random
from typing import Iterable, Mapping

from ..errors import MissingVariableError

T = 0

Monomial = tuple[tuple[int, int], ...]


def _mul_monomials(a: Monomial, b: Monomial) -> Monomial:
    exps = dict(a)
    for var, e in b:
        exps[var] = exps.get(var, 0) + e
    return tuple(sorted(exps.items()))


class Polynomial:
    """An immutable polynomial with Fraction coefficients."""
    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, object] | None = None):
        cleaned: dict[Monomial, Fraction] = {}
        for monomial, coefficient in (terms or {}).items():
            coefficient = Fraction(coefficient)
            if coefficient == 0:
                continue
            if any(e < 0 for _, e in monomial):
                raise ValueError(f"Negative exponent in monomial {monomial}")
            key = tuple((var, e) for var, e in _mul_monomials((), monomial) if e != 0)
            cleaned[key] = cleaned.get(key, Fraction(0)) + coefficient
        self._terms = {m: c for m, c in cleaned.items() if c != 0}

    @classmethod
    def constant(cls, value) -> 'Polynomial':
        return cls({(): value})

    @classmethod
    def variable(cls, var: int) -> 'Polynomial':
        return cls({((var, 1),): 1})

    @classmethod
    def univariate(cls, coefficients: Iterable, var: int = T) -> 'Polynomial':
        """c_0 + c_1 t + c_2 t^2 + ... in the given variable."""
        return cls({((var, power),) if power else (): c for power, c in enumerate(coefficients)})

    @property
    def terms(self) -> dict[Monomial, Fraction]:
        return dict(self._terms)

    @property
    def variables(self) -> frozenset[int]:
        return frozenset(var for monomial in self._terms for var, _ in monomial)

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        return max(sum(e for _, e in monomial) for monomial in self._terms)

    def degree_in(self, var: int) -> int:
        return max((dict(m).get(var, 0) for m in self._terms), default=-1)

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other) -> 'Polynomial':
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(other)
        terms = dict(self._terms)
        for monomial, coefficient in other._terms.items():
            terms[monomial] = terms.get(monomial, Fraction(0)) + coefficient
        return Polynomial(terms)

    def __radd__(self, other) -> 'Polynomial':
        return self + other

    def __neg__(self) -> 'Polynomial':
        return Polynomial({m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> 'Polynomial':
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(other)
        return self + -other

    def __rsub__(self, other) -> 'Polynomial':
        return Polynomial.constant(other) - self

    def __mul__(self, other) -> 'Polynomial':
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(other)
        terms: dict[Monomial, Fraction] = {}
        for ma, ca in self._terms.items():
            for mb, cb in other._terms.items():
                m = _mul_monomials(ma, mb)
                terms[m] = terms.get(m, Fraction(0)) + ca * cb
        return Polynomial(terms)

    def __rmul__(self, other) -> 'Polynomial':
        return self * other

    def __pow__(self, exponent: int) -> 'Polynomial':
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(f"Exponent must be a non-negative integer, got {exponent!r}")
        result = Polynomial.constant(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def partial(self, var: int) -> 'Polynomial':
        """Exact partial derivative with respect to var."""
        terms: dict[Monomial, Fraction] = {}
        for monomial, coefficient in self._terms.items():
            exps = dict(monomial)
            e = exps.get(var, 0)
            if e == 0:
                continue
            exps[var] = e - 1
            m = tuple(sorted((v, x) for v, x in exps.items() if x))
            terms[m] = terms.get(m, Fraction(0)) + coefficient * e
        return Polynomial(terms)

    def substitute(self, var: int, replacement: 'Polynomial') -> 'Polynomial':
        """Replace var by a polynomial everywhere (composition)."""
        powers = {0: Polynomial.constant(1)}
        result = Polynomial()
        for monomial, coefficient in self._terms.items():
            exps = dict(monomial)
            e = exps.pop(var, 0)
            if e not in powers:
                powers[e] = replacement ** e
            rest = Polynomial({tuple(sorted(exps.items())): coefficient})
            result = result + rest * powers[e]
        return result

    def evaluate(self, assignment: Mapping[int, object]) -> Fraction:
        """Exact value at a point.

        Raises:
            MissingVariableError: If a variable in the polynomial has no value
        """
        total = Fraction(0)
        for monomial, coefficient in self._terms.items():
            value = coefficient
            for var, e in monomial:
                if var not in assignment:
                    raise MissingVariableError(var)
                value *= Fraction(assignment[var]) ** e
            total += value
        return total

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for monomial in sorted(self._terms, key=lambda m: (-sum(e for _, e in m), m)):
            coefficient = self._terms[monomial]
            factors = [
                ("t" if var == T else f"x{var}") + (f"^{e}" if e > 1 else "")
                for var, e in monomial
            ]
            if not factors:
                pieces.append(str(coefficient))
            elif coefficient == 1:
                pieces.append("*".join(factors))
            elif coefficient == -1:
                pieces.append("-" + "*".join(factors))
            else:
                pieces.append(f"{coefficient}*" + "*".join(factors))
        return " + ".join(pieces).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"Polynomial({self})"


def poly_partial(p: Polynomial, var: int) -> Polynomial:
    """Exact partial derivative of p with respect to x_var."""
    return p.partial(var)


def compose(f: Polynomial, y: Polynomial) -> Polynomial:
    """f(y) for a univariate f in the placeholder variable t."""
    return f.substitute(T, y)


def random_rational(rng: Random, bound: int = 5) -> Fraction:
    """A small non-zero rational p/q with |p| <= bound, 1 <= q <= bound."""
    numerator = 0
    while numerator == 0:
        numerator = rng.randint(-bound, bound)
    return Fraction(numerator, rng.randint(1, bound))


def random_polynomial(
    rng: Random,
    variables: Iterable[int],
    max_degree: int,
    max_terms: int = 4,
) -> Polynomial:
    """A random polynomial of total degree at most max_degree in variables."""
    variables = sorted(variables)
    terms: dict[Monomial, Fraction] = {}
    for _ in range(rng.randint(1, max_terms)):
        degree = rng.randint(0, max_degree)
        exps: dict[int, int] = {}
        for _ in range(degree):
            var = rng.choice(variables)
            exps[var] = exps.get(var, 0) + 1
        terms[tuple(sorted(exps.items()))] = random_rational(rng)
    return Polynomial(terms)


__all__ = [
    'T',
    'Polynomial',
    'poly_partial',
    'compose',
    'random_rational',
    'random_polynomial',
]
