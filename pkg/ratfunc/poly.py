"""
Sparse multivariate polynomials over the rationals.

Terms are stored as a dict from exponent tuples to nonzero Fractions and ordered
graded-lexicographically whenever an order matters (leading term, division, text).
"""

import heapq
import math
from fractions import Fraction
from numbers import Rational
from typing import Iterable

from misc.errors import TermLimitExceeded

Exponents = tuple[int, ...]


def _term_limit() -> int:
    from misc.config import config
    return config.term_limit


def grlex_key(e: Exponents) -> tuple:
    return sum(e), e


class MultiPoly:
    """Immutable sparse polynomial in named variables."""

    __slots__ = ('variables', 'terms')

    def __init__(self, variables: Iterable[str], terms: dict[Exponents, Fraction] | None = None):
        self.variables: tuple[str, ...] = tuple(variables)
        self.terms: dict[Exponents, Fraction] = {}
        n = len(self.variables)
        for e, c in (terms or {}).items():
            if len(e) != n:
                raise ValueError(f"Exponent vector {e} does not match variables {self.variables}")
            if c:
                self.terms[tuple(e)] = Fraction(c)

    # constructors

    @classmethod
    def constant(cls, value, variables: Iterable[str]) -> 'MultiPoly':
        variables = tuple(variables)
        return cls(variables, {(0,) * len(variables): Fraction(value)})

    @classmethod
    def variable(cls, name: str, variables: Iterable[str]) -> 'MultiPoly':
        variables = tuple(variables)
        if name not in variables:
            raise ValueError(f"Unknown variable {name} (ring has {variables})")
        e = tuple(1 if v == name else 0 for v in variables)
        return cls(variables, {e: Fraction(1)})

    @classmethod
    def _raw(cls, variables: tuple[str, ...], terms: dict[Exponents, Fraction]) -> 'MultiPoly':
        poly = cls.__new__(cls)
        poly.variables = variables
        poly.terms = terms
        return poly

    # variable handling

    def with_variables(self, variables: Iterable[str]) -> 'MultiPoly':
        variables = tuple(variables)
        if variables == self.variables:
            return self
        missing = [v for i, v in enumerate(self.variables)
                   if v not in variables and any(e[i] for e in self.terms)]
        if missing:
            raise ValueError(f"Cannot drop variables {missing} that occur in the polynomial")
        index = [self.variables.index(v) if v in self.variables else None for v in variables]
        terms = {tuple(e[i] if i is not None else 0 for i in index): c for e, c in self.terms.items()}
        return MultiPoly._raw(variables, terms)

    def _align(self, other) -> tuple['MultiPoly', 'MultiPoly']:
        if isinstance(other, Rational):
            return self, MultiPoly.constant(other, self.variables)
        if not isinstance(other, MultiPoly):
            return NotImplemented, NotImplemented
        if other.variables == self.variables:
            return self, other
        merged = self.variables + tuple(v for v in other.variables if v not in self.variables)
        return self.with_variables(merged), other.with_variables(merged)

    # predicates and accessors

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def constant_value(self) -> Fraction:
        return self.terms.get((0,) * len(self.variables), Fraction(0))

    def __len__(self) -> int:
        return len(self.terms)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def degrees(self) -> tuple[int, ...]:
        """Largest exponent of each variable."""
        if not self.terms:
            return (0,) * len(self.variables)
        return tuple(max(col) for col in zip(*self.terms))

    def leading_term(self) -> tuple[Exponents, Fraction]:
        if not self.terms:
            raise ValueError("The zero polynomial has no leading term")
        e = max(self.terms, key=grlex_key)
        return e, self.terms[e]

    def content(self) -> Fraction:
        """Positive rational c such that self/c has coprime integer coefficients."""
        if not self.terms:
            return Fraction(0)
        num = 0
        den = 1
        for c in self.terms.values():
            num = math.gcd(num, c.numerator)
            den = den * c.denominator // math.gcd(den, c.denominator)
        return Fraction(num, den)

    def primitive(self) -> tuple[Fraction, 'MultiPoly']:
        """Split into (c, P) with P primitive and of positive leading coefficient."""
        c = self.content()
        if not c:
            return Fraction(0), self
        if self.leading_term()[1] < 0:
            c = -c
        return c, MultiPoly._raw(self.variables, {e: v / c for e, v in self.terms.items()})

    def monomial_content(self) -> Exponents:
        if not self.terms:
            return (0,) * len(self.variables)
        return tuple(min(col) for col in zip(*self.terms))

    def shift(self, e: Exponents, sign: int = -1) -> 'MultiPoly':
        """Multiply (sign=+1) or exactly divide (sign=-1) by the monomial x^e."""
        return MultiPoly._raw(self.variables, {tuple(a + sign * b for a, b in zip(k, e)): c
                                               for k, c in self.terms.items()})

    # ring operations

    def __neg__(self) -> 'MultiPoly':
        return MultiPoly._raw(self.variables, {e: -c for e, c in self.terms.items()})

    def __pos__(self) -> 'MultiPoly':
        return self

    def __add__(self, other) -> 'MultiPoly':
        a, b = self._align(other)
        if a is NotImplemented:
            return NotImplemented
        terms = dict(a.terms)
        for e, c in b.terms.items():
            s = terms.get(e, 0) + c
            if s:
                terms[e] = s
            else:
                terms.pop(e, None)
        return MultiPoly._raw(a.variables, terms)

    __radd__ = __add__

    def __sub__(self, other) -> 'MultiPoly':
        a, b = self._align(other)
        if a is NotImplemented:
            return NotImplemented
        return a + (-b)

    def __rsub__(self, other) -> 'MultiPoly':
        return (-self) + other

    def __mul__(self, other) -> 'MultiPoly':
        if isinstance(other, Rational):
            if not other:
                return MultiPoly._raw(self.variables, {})
            return MultiPoly._raw(self.variables, {e: c * other for e, c in self.terms.items()})
        a, b = self._align(other)
        if a is NotImplemented:
            return NotImplemented
        if len(a.terms) < len(b.terms):
            a, b = b, a
        terms: dict[Exponents, Fraction] = {}
        limit = _term_limit()
        for eb, cb in b.terms.items():
            for ea, ca in a.terms.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                s = terms.get(e, 0) + ca * cb
                if s:
                    terms[e] = s
                else:
                    del terms[e]
            if len(terms) > limit:
                raise TermLimitExceeded(f"Product exceeded {limit} terms")
        return MultiPoly._raw(a.variables, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> 'MultiPoly':
        if not isinstance(n, int) or n < 0:
            raise ValueError(f"Polynomial powers need a nonnegative integer exponent, got {n}")
        result = MultiPoly.constant(1, self.variables)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        a, b = self._align(other)
        if a is NotImplemented:
            return NotImplemented
        return a.terms == b.terms

    def __hash__(self) -> int:
        return hash((self.variables, frozenset(self.terms.items())))

    def exact_quotient(self, divisor: 'MultiPoly') -> 'MultiPoly | None':
        """
        Quotient self/divisor when the division is exact, otherwise None.

        With a single divisor the grlex division algorithm leaves a zero remainder
        exactly when the divisor divides, so the first leading term that the
        divisor's leading term does not divide settles the answer.
        """
        a, g = self._align(divisor)
        if g.is_zero():
            raise ZeroDivisionError("Division by the zero polynomial")
        if any(x < y for x, y in zip(a.degrees(), g.degrees())) and not a.is_zero():
            return None
        lead_e, lead_c = g.leading_term()
        rest = [(e, c) for e, c in g.terms.items() if e != lead_e]
        remainder = dict(a.terms)
        heap = [(-sum(e), tuple(-x for x in e)) for e in remainder]
        heapq.heapify(heap)
        quotient: dict[Exponents, Fraction] = {}
        while heap:
            _, neg = heapq.heappop(heap)
            e = tuple(-x for x in neg)
            c = remainder.pop(e, None)
            if not c:
                continue
            shift = tuple(x - y for x, y in zip(e, lead_e))
            if min(shift) < 0:
                return None
            q = c / lead_c
            quotient[shift] = q
            for eg, cg in rest:
                k = tuple(x + y for x, y in zip(eg, shift))
                old = remainder.get(k)
                if old is None:
                    remainder[k] = -q * cg
                    heapq.heappush(heap, (-sum(k), tuple(-x for x in k)))
                else:
                    s = old - q * cg
                    if s:
                        remainder[k] = s
                    else:
                        del remainder[k]
        return MultiPoly._raw(a.variables, quotient)

    # calculus and evaluation

    def differentiate(self, name: str) -> 'MultiPoly':
        if name not in self.variables:
            return MultiPoly._raw(self.variables, {})
        i = self.variables.index(name)
        terms = {}
        for e, c in self.terms.items():
            if e[i]:
                terms[e[:i] + (e[i] - 1,) + e[i + 1:]] = c * e[i]
        return MultiPoly._raw(self.variables, terms)

    def evaluate(self, values: dict):
        """Evaluate at numbers (complex, float or Fraction) bound to every occurring variable."""
        powers = []
        exact = True
        for v, d in zip(self.variables, self.degrees()):
            if d == 0:
                powers.append(None)
                continue
            if v not in values:
                raise KeyError(f"No value bound to variable {v}")
            x = values[v]
            exact = exact and isinstance(x, Rational)
            row = [1]
            for _ in range(d):
                row.append(row[-1] * x)
            powers.append(row)
        total = Fraction(0) if exact else 0j
        for e, c in self.terms.items():
            term = c if exact else complex(c)
            for k, row in zip(e, powers):
                if k:
                    term = term * row[k]
            total = total + term
        return total

    def compose(self, bindings: dict[str, tuple['MultiPoly', 'MultiPoly']]) -> tuple['MultiPoly', 'MultiPoly']:
        """
        Substitute v -> n_v/d_v for the bound variables.

        Returns the pair (N, D) with D = prod d_v^deg_v(self), so no cancellation is attempted.
        """
        targets = dict(bindings)
        ring = self.variables
        for n, d in targets.values():
            for extra in n.variables + d.variables:
                if extra not in ring:
                    ring = ring + (extra,)
        degs = dict(zip(self.variables, self.degrees()))
        one = MultiPoly.constant(1, ring)
        cache: dict[tuple[str, int, int], MultiPoly] = {}

        def factor(v: str, k: int) -> MultiPoly:
            key = (v, k, degs[v])
            if key not in cache:
                n, d = targets[v]
                cache[key] = (n.with_variables(ring) ** k) * (d.with_variables(ring) ** (degs[v] - k))
            return cache[key]

        numerator = MultiPoly._raw(ring, {})
        kept = [i for i, v in enumerate(self.variables) if v not in targets]
        bound = [(i, v) for i, v in enumerate(self.variables) if v in targets]
        for e, c in self.terms.items():
            free = [0] * len(ring)
            for i in kept:
                free[ring.index(self.variables[i])] = e[i]
            term = MultiPoly._raw(ring, {tuple(free): c})
            for i, v in bound:
                if degs[v]:
                    term = term * factor(v, e[i])
            numerator = numerator + term
        denominator = one
        for v, (_, d) in targets.items():
            if v in degs and degs[v]:
                denominator = denominator * (d.with_variables(ring) ** degs[v])
        return numerator, denominator

    # text

    def to_text(self) -> str:
        """Canonical text, terms in descending grlex order."""
        if not self.terms:
            return '0'
        parts = []
        for e in sorted(self.terms, key=grlex_key, reverse=True):
            c = self.terms[e]
            mono = '*'.join(v if k == 1 else f'{v}^{k}' for v, k in zip(self.variables, e) if k)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f'{mag}*{mono}'
            parts.append(('- ' if c < 0 else '+ ') + body)
        text = ' '.join(parts)
        return text[2:] if text.startswith('+ ') else '-' + text[1:]

    def leading_text(self) -> str:
        if not self.terms:
            return '0'
        e, c = self.leading_term()
        return MultiPoly._raw(self.variables, {e: c}).to_text()

    def __repr__(self) -> str:
        return f"MultiPoly({self.to_text()})"


def ring(*names: str) -> tuple[MultiPoly, ...]:
    """Generators of the polynomial ring in the given variables."""
    return tuple(MultiPoly.variable(n, names) for n in names)
