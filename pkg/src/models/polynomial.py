"""
Dense univariate polynomials over exact (or any commutative) coefficient rings
"""

from fractions import Fraction
from typing import Any, Callable, Iterable, List, Optional, Tuple

from core.errors import NotInvertibleError, ValuationError, VariableMismatchError

ExactRational = Fraction


def normalize_scalar(value: Any) -> Any:
    """Collapse integral Fractions to int so integer-valued arithmetic stays fast"""
    if isinstance(value, Fraction) and value.denominator == 1:
        return value.numerator
    return value


def invert_scalar(value: Any) -> Any:
    """Inverse of a ring element: delegates to ``inverse()`` when available"""
    if hasattr(value, "inverse"):
        return value.inverse()
    if value == 0:
        raise NotInvertibleError("zero has no inverse")
    if isinstance(value, int):
        return value if value in (1, -1) else Fraction(1, value)
    if isinstance(value, Fraction):
        return normalize_scalar(1 / value)
    return 1 / value


def _is_ring_object(value: Any) -> bool:
    return hasattr(value, "variable")


def _mul_coefficients(left: Tuple, right: Tuple) -> List:
    if not left or not right:
        return []
    out: List[Any] = [0] * (len(left) + len(right) - 1)
    for i, a in enumerate(left):
        if a == 0:
            continue
        for j, b in enumerate(right):
            out[i + j] += a * b
    return out


class Polynomial:
    """Immutable polynomial with trailing zeros stripped"""

    __slots__ = ("coefficients", "variable")

    def __init__(self, coefficients: Iterable = (), variable: str = "x"):
        coeffs = [normalize_scalar(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coefficients: Tuple = tuple(coeffs)
        self.variable = variable

    # Construction

    @classmethod
    def constant(cls, value: Any, variable: str = "x") -> "Polynomial":
        return cls([value], variable)

    @classmethod
    def monomial(cls, degree: int, value: Any = 1, variable: str = "x") -> "Polynomial":
        return cls([0] * degree + [value], variable)

    @classmethod
    def gen(cls, variable: str = "x") -> "Polynomial":
        return cls([0, 1], variable)

    @classmethod
    def coerce(cls, value: Any, variable: str) -> "Polynomial":
        if isinstance(value, Polynomial):
            if value.variable != variable and not value.is_constant():
                raise VariableMismatchError(f"expected a polynomial in {variable}, got one in {value.variable}")
            return value if value.variable == variable else cls(value.coefficients, variable)
        return cls([value], variable)

    # Structure

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def is_constant(self) -> bool:
        return len(self.coefficients) <= 1

    @property
    def leading(self) -> Any:
        return self.coefficients[-1] if self.coefficients else 0

    def coefficient(self, index: int) -> Any:
        if 0 <= index < len(self.coefficients):
            return self.coefficients[index]
        return 0

    __getitem__ = coefficient

    def valuation(self) -> Optional[int]:
        for index, c in enumerate(self.coefficients):
            if c != 0:
                return index
        return None

    # Arithmetic

    def _other(self, other: Any) -> Optional["Polynomial"]:
        if isinstance(other, Polynomial):
            if other.variable != self.variable:
                if other.is_constant():
                    return Polynomial(other.coefficients, self.variable)
                if self.is_constant():
                    return None
                raise VariableMismatchError(f"cannot combine {self.variable} and {other.variable}")
            return other
        if _is_ring_object(other):
            return None
        return Polynomial([other], self.variable)

    def __add__(self, other: Any) -> "Polynomial":
        rhs = self._other(other)
        if rhs is None:
            return NotImplemented
        size = max(len(self.coefficients), len(rhs.coefficients))
        return Polynomial([self[i] + rhs[i] for i in range(size)], self.variable)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial([-c for c in self.coefficients], self.variable)

    def __sub__(self, other: Any) -> "Polynomial":
        rhs = self._other(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: Any) -> "Polynomial":
        return (-self) + other

    def __mul__(self, other: Any) -> "Polynomial":
        if isinstance(other, Polynomial):
            rhs = self._other(other)
            if rhs is None:
                return NotImplemented
            return Polynomial(_mul_coefficients(self.coefficients, rhs.coefficients), self.variable)
        if _is_ring_object(other):
            return NotImplemented
        return Polynomial([c * other for c in self.coefficients], self.variable)

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.is_constant():
                return self * invert_scalar(other.coefficient(0))
            quotient, remainder = self.divmod(other)
            if not remainder.is_zero():
                raise NotInvertibleError("polynomial division leaves a remainder")
            return quotient
        if _is_ring_object(other):
            return NotImplemented
        return self * invert_scalar(other)

    def __pow__(self, exponent: int) -> "Polynomial":
        if exponent < 0:
            return Polynomial([1], self.variable) / (self ** (-exponent))
        result = Polynomial([1], self.variable)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def inverse(self) -> "Polynomial":
        if not self.is_constant():
            raise NotInvertibleError(f"{self!r} is not a unit")
        return Polynomial([invert_scalar(self.coefficient(0))], self.variable)

    def divmod(self, divisor: "Polynomial") -> Tuple["Polynomial", "Polynomial"]:
        """Euclidean division over a field of fractions"""
        if divisor.is_zero():
            raise NotInvertibleError("division by the zero polynomial")
        remainder = list(self.coefficients)
        lead_inverse = invert_scalar(divisor.leading)
        quotient: List[Any] = [0] * max(len(remainder) - divisor.degree, 0)
        for shift in range(len(remainder) - len(divisor.coefficients), -1, -1):
            factor = normalize_scalar(remainder[shift + divisor.degree] * lead_inverse)
            if factor == 0:
                continue
            quotient[shift] = factor
            for i, c in enumerate(divisor.coefficients):
                remainder[shift + i] = normalize_scalar(remainder[shift + i] - factor * c)
        return Polynomial(quotient, self.variable), Polynomial(remainder, self.variable)

    def monic(self) -> "Polynomial":
        if self.is_zero():
            return self
        return self * invert_scalar(self.leading)

    @staticmethod
    def gcd(left: "Polynomial", right: "Polynomial") -> "Polynomial":
        """Monic greatest common divisor by Euclid's algorithm"""
        a, b = left, right
        while not b.is_zero():
            _, remainder = a.divmod(b)
            a, b = b, remainder.monic()
        return a.monic() if not a.is_zero() else Polynomial([1], left.variable)

    # Calculus and substitution

    def derivative(self) -> "Polynomial":
        return Polynomial([i * c for i, c in enumerate(self.coefficients)][1:], self.variable)

    def evaluate(self, value: Any) -> Any:
        """Horner evaluation; ``value`` may be a number, a polynomial or a series"""
        acc: Any = 0
        for c in reversed(self.coefficients):
            acc = acc * value + c
        return acc

    __call__ = evaluate

    def truncate(self, max_degree: int) -> "Polynomial":
        return Polynomial(self.coefficients[: max_degree + 1], self.variable)

    def shift(self, places: int) -> "Polynomial":
        if self.is_zero():
            return self
        return Polynomial([0] * places + list(self.coefficients), self.variable)

    def divide_by_variable(self, places: int = 1) -> "Polynomial":
        if any(c != 0 for c in self.coefficients[:places]):
            raise ValuationError(f"{self!r} is not divisible by {self.variable}^{places}")
        return Polynomial(self.coefficients[places:], self.variable)

    def map_coefficients(self, function: Callable[[Any], Any]) -> "Polynomial":
        return Polynomial([function(c) for c in self.coefficients], self.variable)

    # Comparison

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, Polynomial):
            if other.variable != self.variable and not (self.is_constant() and other.is_constant()):
                return False
            return self.coefficients == other.coefficients
        if _is_ring_object(other):
            return NotImplemented
        if self.is_zero():
            return other == 0
        return self.is_constant() and self.coefficients[0] == other

    def __hash__(self) -> int:
        if self.is_constant():
            return hash(self.coefficient(0))
        return hash((self.variable, self.coefficients))

    def __repr__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for power, c in enumerate(self.coefficients):
            if c == 0:
                continue
            if power == 0:
                terms.append(f"{c}")
            elif power == 1:
                terms.append(f"{c}*{self.variable}")
            else:
                terms.append(f"{c}*{self.variable}^{power}")
        return " + ".join(terms)
