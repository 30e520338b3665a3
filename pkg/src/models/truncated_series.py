"""
Truncated power series over a generic commutative coefficient ring.

Coefficients may be ints, Fractions, mpmath numbers, Polynomials or even
TruncatedSeries in a *different* variable, which is how the engine builds
G-series over Q[t], G-series over Q[a] and epsilon-series over delta-series.
Operators treat a series in the same variable as a series and anything else
as a scalar of the coefficient ring.
"""

from fractions import Fraction
from typing import Any, Callable, Iterable, List, Optional

from core.errors import NotInvertibleError, PoleError, ValuationError, VariableMismatchError
from models.polynomial import Polynomial, invert_scalar, normalize_scalar
from models.rational_function import RationalFunction


class TruncatedSeries:
    """Coefficients c_0..c_N of a series known modulo var^(N+1)"""

    __slots__ = ("coefficients", "order", "variable")

    def __init__(self, coefficients: Iterable = (), order: Optional[int] = None, variable: str = "g"):
        coeffs = [normalize_scalar(c) for c in coefficients]
        if order is None:
            order = max(len(coeffs) - 1, 0)
        if order < 0:
            raise ValuationError(f"negative truncation order {order}")
        coeffs = coeffs[: order + 1]
        coeffs.extend([0] * (order + 1 - len(coeffs)))
        self.coefficients = tuple(coeffs)
        self.order = order
        self.variable = variable

    @classmethod
    def constant(cls, value: Any, order: int, variable: str = "g") -> "TruncatedSeries":
        return cls([value], order, variable)

    @classmethod
    def zero(cls, order: int, variable: str = "g") -> "TruncatedSeries":
        return cls([], order, variable)

    @classmethod
    def variable_series(cls, order: int, variable: str = "g") -> "TruncatedSeries":
        return cls([0, 1], order, variable)

    @classmethod
    def from_polynomial(cls, poly: Polynomial, order: int, variable: Optional[str] = None) -> "TruncatedSeries":
        return cls(poly.coefficients, order, variable or poly.variable)

    # Structure

    def coefficient(self, index: int) -> Any:
        if index > self.order:
            raise ValuationError(f"coefficient {index} lies beyond the truncation order {self.order}")
        return self.coefficients[index] if index >= 0 else 0

    __getitem__ = coefficient

    def valuation(self) -> Optional[int]:
        for index, c in enumerate(self.coefficients):
            if c != 0:
                return index
        return None

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coefficients)

    def truncate(self, order: int) -> "TruncatedSeries":
        return TruncatedSeries(self.coefficients, min(order, self.order), self.variable)

    def shift(self, places: int) -> "TruncatedSeries":
        """Multiply by var^places; the result is known to order + places"""
        return TruncatedSeries([0] * places + list(self.coefficients), self.order + places, self.variable)

    def divide_by_variable(self, places: int = 1) -> "TruncatedSeries":
        if any(c != 0 for c in self.coefficients[:places]):
            raise ValuationError(f"series is not divisible by {self.variable}^{places}")
        return TruncatedSeries(self.coefficients[places:], self.order - places, self.variable)

    def map_coefficients(self, function: Callable[[Any], Any], variable: Optional[str] = None) -> "TruncatedSeries":
        return TruncatedSeries([function(c) for c in self.coefficients], self.order, variable or self.variable)

    def evaluate(self, value: Any) -> Any:
        """Partial sum at ``value``"""
        acc: Any = 0
        for c in reversed(self.coefficients):
            acc = acc * value + c
        return acc

    # Arithmetic

    def _same(self, other: Any) -> bool:
        return isinstance(other, TruncatedSeries) and other.variable == self.variable

    def __add__(self, other: Any) -> "TruncatedSeries":
        if self._same(other):
            order = min(self.order, other.order)
            return TruncatedSeries(
                [self.coefficients[i] + other.coefficients[i] for i in range(order + 1)], order, self.variable
            )
        coeffs = list(self.coefficients)
        coeffs[0] = coeffs[0] + other
        return TruncatedSeries(coeffs, self.order, self.variable)

    __radd__ = __add__

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries([-c for c in self.coefficients], self.order, self.variable)

    def __sub__(self, other: Any) -> "TruncatedSeries":
        return self + (-other)

    def __rsub__(self, other: Any) -> "TruncatedSeries":
        return (-self) + other

    def __mul__(self, other: Any) -> "TruncatedSeries":
        if self._same(other):
            order = min(self.order, other.order)
            left = [(i, c) for i, c in enumerate(self.coefficients[: order + 1]) if c != 0]
            right = [(j, c) for j, c in enumerate(other.coefficients[: order + 1]) if c != 0]
            out: List[Any] = [0] * (order + 1)
            for i, a in left:
                for j, b in right:
                    if i + j > order:
                        break
                    out[i + j] += a * b
            return TruncatedSeries(out, order, self.variable)
        return TruncatedSeries([c * other for c in self.coefficients], self.order, self.variable)

    def __rmul__(self, other: Any) -> "TruncatedSeries":
        return TruncatedSeries([other * c for c in self.coefficients], self.order, self.variable)

    def inverse(self) -> "TruncatedSeries":
        head = self.coefficients[0]
        try:
            head_inverse = invert_scalar(head)
        except NotInvertibleError as e:
            raise NotInvertibleError(f"constant term {head!r} is not a unit") from e
        out: List[Any] = [head_inverse]
        nonzero = [(i, c) for i, c in enumerate(self.coefficients) if i > 0 and c != 0]
        for n in range(1, self.order + 1):
            acc: Any = 0
            for i, c in nonzero:
                if i > n:
                    break
                acc = acc + c * out[n - i]
            out.append(normalize_scalar(-(acc * head_inverse)))
        return TruncatedSeries(out, self.order, self.variable)

    def __truediv__(self, other: Any) -> "TruncatedSeries":
        if self._same(other):
            return self * other.inverse()
        return self * invert_scalar(other)

    def __rtruediv__(self, other: Any) -> "TruncatedSeries":
        return self.inverse() * other

    def __pow__(self, exponent: int) -> "TruncatedSeries":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = TruncatedSeries.constant(1, self.order, self.variable)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other: Any) -> bool:
        """Equality up to the common truncation order"""
        if self._same(other):
            order = min(self.order, other.order)
            return all(self.coefficients[i] == other.coefficients[i] for i in range(order + 1))
        if isinstance(other, TruncatedSeries):
            return False
        return self.coefficients[0] == other and all(c == 0 for c in self.coefficients[1:])

    __hash__ = None  # equality up to order is not transitive

    def __repr__(self) -> str:
        terms = []
        for power, c in enumerate(self.coefficients):
            if c == 0:
                continue
            if power == 0:
                terms.append(f"{c!r}")
            else:
                terms.append(f"({c!r})*{self.variable}^{power}")
        body = " + ".join(terms) if terms else "0"
        return f"{body} + O({self.variable}^{self.order + 1})"


def _check_same_variable(left: TruncatedSeries, right: TruncatedSeries) -> None:
    if left.variable != right.variable:
        raise VariableMismatchError(f"series in {left.variable} and {right.variable}")


def series_mul(left: TruncatedSeries, right: TruncatedSeries) -> TruncatedSeries:
    _check_same_variable(left, right)
    return left * right


def series_div(left: TruncatedSeries, right: TruncatedSeries) -> TruncatedSeries:
    _check_same_variable(left, right)
    return left * right.inverse()


def series_sqrt(series: TruncatedSeries) -> TruncatedSeries:
    """Square root of a series with constant term 1"""
    if series.coefficients[0] != 1:
        raise ValuationError(f"square root needs constant term 1, got {series.coefficients[0]!r}")
    half = Fraction(1, 2)
    out: List[Any] = [1]
    for n in range(1, series.order + 1):
        acc: Any = 0
        for i in range(1, n):
            acc = acc + out[i] * out[n - i]
        out.append(normalize_scalar((series.coefficients[n] - acc) * half))
    return TruncatedSeries(out, series.order, series.variable)


def series_compose(outer: TruncatedSeries, inner: TruncatedSeries) -> TruncatedSeries:
    """outer(inner) for an inner series without constant term.

    The result is known to var^min(N_inner, (N_outer + 1) * val(inner) - 1).
    """
    if inner.coefficients[0] != 0:
        raise ValuationError("composition needs an inner series with zero constant term")
    valuation = inner.valuation()
    order = inner.order if valuation is None else min(inner.order, (outer.order + 1) * valuation - 1)
    inner = inner.truncate(order)
    result = TruncatedSeries.constant(outer.coefficients[-1], order, inner.variable)
    for c in reversed(outer.coefficients[:-1]):
        result = result * inner + c
    return result


def series_revert(series: TruncatedSeries, variable: Optional[str] = None) -> TruncatedSeries:
    """Compositional inverse b with series(b(y)) = y, by Newton-free fixed point"""
    if series.coefficients[0] != 0:
        raise ValuationError("reversion needs zero constant term")
    if series.order < 1 or series.coefficients[1] == 0:
        raise NotInvertibleError("reversion needs an invertible linear coefficient")
    variable = variable or series.variable
    inverse_linear = invert_scalar(series.coefficients[1])
    identity = TruncatedSeries.variable_series(series.order, variable)
    result = identity * inverse_linear
    for _ in range(series.order):
        residual = series_compose(series, result) - identity
        if residual.is_zero():
            break
        result = result - residual * inverse_linear
    return result


def series_from_rational(function: RationalFunction, order: int, variable: Optional[str] = None) -> TruncatedSeries:
    """Taylor expansion at 0 of a rational function regular there"""
    variable = variable or function.variable
    bottom = TruncatedSeries.from_polynomial(function.denominator, order, variable)
    if bottom.coefficients[0] == 0:
        raise ValuationError(f"{function!r} is singular at {variable} = 0")
    return TruncatedSeries.from_polynomial(function.numerator, order, variable) / bottom


def _moebius_clear(poly: Polynomial, variable: str) -> Polynomial:
    """sum c_i (1 - e)^i (1 + e)^(deg - i)"""
    degree = max(poly.degree, 0)
    minus = [Polynomial([1], variable)]
    plus = [Polynomial([1], variable)]
    for _ in range(degree):
        minus.append(minus[-1] * Polynomial([1, -1], variable))
        plus.append(plus[-1] * Polynomial([1, 1], variable))
    total = Polynomial([], variable)
    for i, c in enumerate(poly.coefficients):
        if c != 0:
            total = total + minus[i] * plus[degree - i] * c
    return total


def rf_expand_epsilon(function: RationalFunction, order: int, variable: str = "eps") -> TruncatedSeries:
    """Expansion of f((1 - eps)/(1 + eps)) around eps = 0"""
    if function.is_zero():
        return TruncatedSeries.zero(order, variable)
    top = _moebius_clear(function.numerator, variable)
    bottom = _moebius_clear(function.denominator, variable)
    shift = max(function.denominator.degree, 0) - max(function.numerator.degree, 0)
    top_valuation, bottom_valuation = top.valuation(), bottom.valuation()
    if bottom_valuation > top_valuation:
        raise PoleError(bottom_valuation - top_valuation)
    top = top.divide_by_variable(bottom_valuation)
    bottom = bottom.divide_by_variable(bottom_valuation)
    ratio = TruncatedSeries.from_polynomial(top, order, variable) / TruncatedSeries.from_polynomial(
        bottom, order, variable
    )
    factor = TruncatedSeries([1, 1], order, variable) ** shift
    return ratio * factor

