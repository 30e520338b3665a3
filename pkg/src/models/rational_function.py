"""
Reduced univariate rational functions with exact rational coefficients
"""

from fractions import Fraction
from typing import Any, List, Optional

from core.errors import NotInvertibleError, VariableMismatchError
from models.polynomial import Polynomial, invert_scalar


class RationalFunction:
    """Quotient of coprime polynomials with a monic denominator"""

    __slots__ = ("numerator", "denominator", "variable")

    def __init__(self, numerator: Any, denominator: Any = 1, variable: Optional[str] = None):
        if variable is None:
            variable = next(
                (p.variable for p in (numerator, denominator) if isinstance(p, Polynomial) and not p.is_constant()),
                numerator.variable if isinstance(numerator, Polynomial) else "x",
            )
        num = Polynomial.coerce(numerator, variable)
        den = Polynomial.coerce(denominator, variable)
        if den.is_zero():
            raise NotInvertibleError("rational function with zero denominator")
        if num.is_zero():
            den = Polynomial([1], variable)
        else:
            common = Polynomial.gcd(num, den)
            if not common.is_constant():
                num, _ = num.divmod(common)
                den, _ = den.divmod(common)
            scale = invert_scalar(den.leading)
            num, den = num * scale, den * scale
        self.numerator = num
        self.denominator = den
        self.variable = variable

    @classmethod
    def gen(cls, variable: str = "x") -> "RationalFunction":
        return cls(Polynomial.gen(variable), 1, variable)

    @classmethod
    def constant(cls, value: Any, variable: str = "x") -> "RationalFunction":
        return cls(Polynomial([value], variable), 1, variable)

    def _other(self, other: Any) -> "RationalFunction":
        if isinstance(other, RationalFunction):
            if other.variable != self.variable:
                if other.is_constant():
                    return RationalFunction(other.numerator.coefficient(0), 1, self.variable)
                raise VariableMismatchError(f"cannot combine {self.variable} and {other.variable}")
            return other
        if isinstance(other, Polynomial):
            return RationalFunction(other, 1, self.variable)
        return RationalFunction(Polynomial([other], self.variable), 1, self.variable)

    def is_zero(self) -> bool:
        return self.numerator.is_zero()

    def is_constant(self) -> bool:
        return self.numerator.is_constant() and self.denominator.is_constant()

    def __add__(self, other: Any) -> "RationalFunction":
        rhs = self._other(other)
        return RationalFunction(
            self.numerator * rhs.denominator + rhs.numerator * self.denominator,
            self.denominator * rhs.denominator,
            self.variable,
        )

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.numerator, self.denominator, self.variable)

    def __sub__(self, other: Any) -> "RationalFunction":
        return self + (-self._other(other))

    def __rsub__(self, other: Any) -> "RationalFunction":
        return self._other(other) - self

    def __mul__(self, other: Any) -> "RationalFunction":
        rhs = self._other(other)
        return RationalFunction(self.numerator * rhs.numerator, self.denominator * rhs.denominator, self.variable)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if self.is_zero():
            raise NotInvertibleError("zero rational function has no inverse")
        return RationalFunction(self.denominator, self.numerator, self.variable)

    def __truediv__(self, other: Any) -> "RationalFunction":
        return self * self._other(other).inverse()

    def __rtruediv__(self, other: Any) -> "RationalFunction":
        return self._other(other) * self.inverse()

    def __pow__(self, exponent: int) -> "RationalFunction":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return RationalFunction(self.numerator ** exponent, self.denominator ** exponent, self.variable)

    def __eq__(self, other: Any) -> bool:
        try:
            rhs = self._other(other)
        except VariableMismatchError:
            return False
        return self.numerator * rhs.denominator == rhs.numerator * self.denominator

    def __hash__(self) -> int:
        return hash((self.variable, self.numerator.coefficients, self.denominator.coefficients))

    def evaluate(self, value: Any) -> Any:
        """Value at a point; raises NotInvertibleError at a pole"""
        bottom = self.denominator.evaluate(value)
        if bottom == 0:
            raise NotInvertibleError(f"{self!r} has a pole at {value}")
        top = self.numerator.evaluate(value)
        if isinstance(top, int) and isinstance(bottom, int):
            return Fraction(top, bottom) if top % bottom else top // bottom
        return top / bottom

    __call__ = evaluate

    def compose(self, inner: "RationalFunction") -> "RationalFunction":
        """Substitute ``inner`` for the variable, clearing denominators homogeneously"""
        if isinstance(inner, Polynomial):
            inner = RationalFunction(inner, 1, inner.variable)
        p, q = inner.numerator, inner.denominator
        top_degree = max(self.numerator.degree, self.denominator.degree, 0)
        p_powers: List[Polynomial] = [Polynomial([1], inner.variable)]
        q_powers: List[Polynomial] = [Polynomial([1], inner.variable)]
        for _ in range(top_degree):
            p_powers.append(p_powers[-1] * p)
            q_powers.append(q_powers[-1] * q)

        def homogenize(poly: Polynomial) -> Polynomial:
            total = Polynomial([], inner.variable)
            for i, c in enumerate(poly.coefficients):
                if c != 0:
                    total = total + p_powers[i] * q_powers[top_degree - i] * c
            return total

        return RationalFunction(homogenize(self.numerator), homogenize(self.denominator), inner.variable)

    def reciprocal_substitution(self) -> "RationalFunction":
        """f(1/x)"""
        return self.compose(RationalFunction(1, Polynomial.gen(self.variable), self.variable))

    def derivative(self) -> "RationalFunction":
        n, d = self.numerator, self.denominator
        return RationalFunction(n.derivative() * d - n * d.derivative(), d * d, self.variable)

    def __repr__(self) -> str:
        if self.denominator == 1:
            return f"({self.numerator!r})"
        return f"({self.numerator!r}) / ({self.denominator!r})"
