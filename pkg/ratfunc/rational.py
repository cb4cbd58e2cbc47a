"""Rational functions as unreduced numerator/denominator pairs of MultiPoly."""

from fractions import Fraction
from numbers import Rational
from typing import Iterable

from misc.errors import DivisionByZeroPoly, SingularLocus
from ratfunc.poly import MultiPoly


class RatFunc:
    """
    Exact rational function num/den.

    Only integer content and shared monomial factors are cancelled; equality is
    decided by cross-multiplication.
    """

    __slots__ = ('num', 'den')

    def __init__(self, num: MultiPoly, den: MultiPoly | None = None):
        if den is None:
            den = MultiPoly.constant(1, num.variables)
        num, den = num._align(den)
        if den.is_zero():
            raise DivisionByZeroPoly("Denominator is the zero polynomial")
        self.num, self.den = self._normalize(num, den)

    @staticmethod
    def _normalize(num: MultiPoly, den: MultiPoly) -> tuple[MultiPoly, MultiPoly]:
        if num.is_zero():
            return num, MultiPoly.constant(1, den.variables)
        shared = tuple(min(a, b) for a, b in zip(num.monomial_content(), den.monomial_content()))
        if any(shared):
            num, den = num.shift(shared), den.shift(shared)
        c, den = den.primitive()
        return num * (1 / c), den

    @classmethod
    def constant(cls, value, variables: Iterable[str]) -> 'RatFunc':
        return cls(MultiPoly.constant(value, variables))

    @classmethod
    def variable(cls, name: str, variables: Iterable[str]) -> 'RatFunc':
        return cls(MultiPoly.variable(name, variables))

    @classmethod
    def coerce(cls, value, variables: Iterable[str]) -> 'RatFunc':
        if isinstance(value, RatFunc):
            return value
        if isinstance(value, MultiPoly):
            return cls(value)
        if isinstance(value, (Rational, int)):
            return cls.constant(value, variables)
        raise TypeError(f"Cannot interpret {value!r} as a rational function")

    @property
    def variables(self) -> tuple[str, ...]:
        return self.num.variables

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.is_constant()

    # arithmetic

    def _pair(self, other) -> 'RatFunc':
        return RatFunc.coerce(other, self.variables)

    def __neg__(self) -> 'RatFunc':
        return RatFunc(-self.num, self.den)

    def __pos__(self) -> 'RatFunc':
        return self

    def __add__(self, other) -> 'RatFunc':
        try:
            other = self._pair(other)
        except TypeError:
            return NotImplemented
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other) -> 'RatFunc':
        try:
            other = self._pair(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> 'RatFunc':
        return (-self) + other

    def __mul__(self, other) -> 'RatFunc':
        try:
            other = self._pair(other)
        except TypeError:
            return NotImplemented
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> 'RatFunc':
        try:
            other = self._pair(other)
        except TypeError:
            return NotImplemented
        if other.is_zero():
            raise DivisionByZeroPoly("Division by the zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other) -> 'RatFunc':
        return self._pair(other) / self

    def __pow__(self, n: int) -> 'RatFunc':
        if not isinstance(n, int):
            raise ValueError(f"Rational functions take integer powers only, got {n}")
        if n < 0:
            if self.is_zero():
                raise DivisionByZeroPoly("Negative power of zero")
            return RatFunc(self.den ** -n, self.num ** -n)
        return RatFunc(self.num ** n, self.den ** n)

    def __eq__(self, other) -> bool:
        try:
            other = self._pair(other)
        except TypeError:
            return NotImplemented
        return ratfunc_equal(self, other)

    __hash__ = None

    # composition and calculus

    def substitute(self, bindings: dict) -> 'RatFunc':
        """
        Compose with variable -> value bindings.

        Raises
        ------
        DivisionByZeroPoly
            When the composed denominator vanishes identically.
        """
        pairs = {}
        for name, value in bindings.items():
            value = RatFunc.coerce(value, self.variables)
            pairs[name] = (value.num, value.den)
        n_num, n_den = self.num.compose(pairs)
        d_num, d_den = self.den.compose(pairs)
        if d_num.is_zero():
            raise DivisionByZeroPoly(f"Denominator {self.den.to_text()} vanishes after substitution")
        return RatFunc(n_num * d_den, n_den * d_num)

    def differentiate(self, name: str) -> 'RatFunc':
        dn = self.num.differentiate(name)
        dd = self.den.differentiate(name)
        if dd.is_zero():
            return RatFunc(dn, self.den)
        return RatFunc(dn * self.den - self.num * dd, self.den * self.den)

    def evaluate(self, values: dict):
        """Numeric value at a point; SingularLocus when the denominator vanishes there."""
        den = self.den.evaluate(values)
        if den == 0:
            raise SingularLocus(f"Denominator {self.den.to_text()} vanishes at {values}")
        return self.num.evaluate(values) / den

    def to_text(self) -> str:
        if self.den.is_constant() and self.den.constant_value() == 1:
            return self.num.to_text()
        return f"({self.num.to_text()})/({self.den.to_text()})"

    def __repr__(self) -> str:
        return f"RatFunc({self.to_text()})"


def ratfunc_equal(f: RatFunc, g: RatFunc) -> bool:
    """True iff f.num·g.den - g.num·f.den is the zero polynomial."""
    return (f.num * g.den - g.num * f.den).is_zero()


def rational_ring(*names: str) -> tuple[RatFunc, ...]:
    """Generators x_i/1 of the field of fractions in the given variables."""
    return tuple(RatFunc.variable(n, names) for n in names)


def as_fraction(value) -> Fraction:
    return value if isinstance(value, Fraction) else Fraction(value)
