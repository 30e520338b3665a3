"""
Explicit rational parametrizations of the slice generating functions.

Everything in x lives on the parametrization g = x(1+x^2)/(1+x)^4, and
everything in C on C = x/(1+x^2).
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Tuple

from core.errors import DomainError
from models.polynomial import Polynomial
from models.rational_function import RationalFunction

logger = logging.getLogger(__name__)

X = Polynomial.gen("x")
ONE_X = Polynomial([1], "x")
C_VAR = Polynomial.gen("C")


def _rf(numerator: Any, denominator: Any = 1, variable: str = "x") -> RationalFunction:
    return RationalFunction(numerator, denominator, variable)


def one_minus_x_power(j: int) -> Polynomial:
    """1 - x^j"""
    return ONE_X - Polynomial.monomial(j, 1, "x")


QUINTIC = Polynomial([1, 1, 1, 1, 1], "x")  # 1 + x + x^2 + x^3 + x^4
ONE_PLUS_X = Polynomial([1, 1], "x")
ONE_PLUS_X2 = Polynomial([1, 0, 1], "x")
TRINOMIAL = Polynomial([1, 1, 1], "x")  # 1 + x + x^2


# Parametrizations in x

def g_of_x() -> RationalFunction:
    return _rf(X * ONE_PLUS_X2, ONE_PLUS_X ** 4)


def C_of_x() -> RationalFunction:
    return _rf(X, ONE_PLUS_X2)


def G_of_x() -> RationalFunction:
    """Rescaled variable G = g R_1^2"""
    return _rf(X * QUINTIC ** 2, ONE_PLUS_X ** 4 * ONE_PLUS_X2 ** 3)


def R_infinity_closed() -> RationalFunction:
    return _rf(ONE_PLUS_X ** 2, ONE_PLUS_X2)


def r_infinity_closed() -> RationalFunction:
    return _rf(ONE_PLUS_X ** 2 * ONE_PLUS_X2, QUINTIC)


def Rk_closed(k: int) -> RationalFunction:
    if k < 0:
        raise DomainError(f"R_k needs k >= 0, got {k}")
    if k == 0:
        return _rf(0)
    u = one_minus_x_power
    return R_infinity_closed() * _rf(u(k) * u(k + 4), u(k + 1) * u(k + 3))


def Gk_closed(k: int) -> RationalFunction:
    if k < 1:
        raise DomainError(f"G_k needs k >= 1, got {k}")
    result = Rk_closed(k) - Rk_closed(k - 1)
    return result - 1 if k == 1 else result


def Gk_product(k: int) -> RationalFunction:
    """Factored form of G_k"""
    if k < 1:
        raise DomainError(f"G_k needs k >= 1, got {k}")
    u = one_minus_x_power
    top = (ONE_X - X) ** 3 * ONE_PLUS_X ** 2 * TRINOMIAL * Polynomial.monomial(k - 1, 1, "x") * u(2 * k + 3)
    bottom = ONE_PLUS_X2 * u(k) * u(k + 1) * u(k + 2) * u(k + 3)
    result = _rf(top, bottom)
    return result - 1 if k == 1 else result


def Tk_closed(k: int) -> RationalFunction:
    """T_k = R_k - R_1"""
    if k < 1:
        raise DomainError(f"T_k needs k >= 1, got {k}")
    u = one_minus_x_power
    prefactor = _rf(X * TRINOMIAL, ONE_PLUS_X2 ** 2)
    return prefactor * _rf(u(k - 1) * u(k + 5), u(k + 1) * u(k + 3))


def tk_closed(k: int) -> RationalFunction:
    return Tk_closed(k) / Rk_closed(1)


def rk_closed(k: int) -> RationalFunction:
    return Rk_closed(k) / Rk_closed(1)


def Yk_closed(k: int) -> RationalFunction:
    if k < 1:
        raise DomainError(f"Y_k needs k >= 1, got {k}")
    u = one_minus_x_power
    return -_rf(TRINOMIAL, ONE_PLUS_X2 ** 2) * _rf(u(k + 3), u(k + 1))


def alpha_fixed_point() -> RationalFunction:
    return -_rf(TRINOMIAL, ONE_PLUS_X2 ** 2)


def beta_fixed_point() -> RationalFunction:
    return -_rf(X ** 2 * TRINOMIAL, ONE_PLUS_X2 ** 2)


def Wk_closed(k: int) -> RationalFunction:
    """(Y_k - alpha) / (Y_k - beta), geometric with ratio x"""
    y = Yk_closed(k)
    return (y - alpha_fixed_point()) / (y - beta_fixed_point())


@dataclass(frozen=True)
class HomographicMap:
    """Y -> (a Y + b) / (c Y + d)"""

    a: RationalFunction
    b: RationalFunction
    c: RationalFunction
    d: RationalFunction

    def apply(self, y: Any) -> Any:
        return (self.a * y + self.b) / (self.c * y + self.d)

    def fixed_point_relations(self, alpha: RationalFunction, beta: RationalFunction) -> Dict[str, bool]:
        """Vieta relations of c Y^2 + (d - a) Y - b = 0"""
        return {
            "sum": (alpha + beta) * self.c == self.a - self.d,
            "product": alpha * beta * self.c == -self.b,
        }

    def multiplier(self, alpha: RationalFunction, beta: RationalFunction) -> RationalFunction:
        return (self.c * beta + self.d) / (self.c * alpha + self.d)


def homographic_map() -> HomographicMap:
    """Y_k = (C+1)^2 (Y_{k-1} + C^2) / (C(C+1) - Y_{k-1}), written in x"""
    c_value = C_of_x()
    return HomographicMap(
        a=(c_value + 1) ** 2,
        b=c_value ** 2 * (c_value + 1) ** 2,
        c=_rf(-1),
        d=c_value * (c_value + 1),
    )


def factorized_recursion(k: int) -> Tuple[RationalFunction, RationalFunction]:
    """Both factors of the Y-recursion evaluated on Y_{k-1}, Y_k; the second must vanish"""
    if k < 2:
        raise DomainError(f"factorized recursion needs k >= 2, got {k}")
    c_value = C_of_x()
    previous, current = Yk_closed(k - 1), Yk_closed(k)
    first = c_value ** 3 * (c_value + 1) - c_value ** 2 * previous - c_value ** 2 * current - previous * current
    second = (
        c_value ** 2 * (c_value + 1) ** 2
        + (c_value + 1) ** 2 * previous
        - c_value * (c_value + 1) * current
        + previous * current
    )
    return first, second


# Parametrizations in C

def G_of_C() -> RationalFunction:
    c = C_VAR
    return RationalFunction(c * (c * c - c - 1) ** 2, (2 * c + 1) ** 2, "C")


def h4_of_C() -> RationalFunction:
    c = C_VAR
    return RationalFunction(c * (c ** 3 + 2 * c * c - c - 1), (c - 1) * (2 * c + 1) ** 2, "C")


def t_line_of_C() -> RationalFunction:
    c = C_VAR
    return RationalFunction(-c * (c + 1), c * c - c - 1, "C")


@dataclass
class SpecialLineReport:
    """Exact identities along the line where both h4 expressions coincide"""

    residuals: Dict[str, RationalFunction] = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return all(r.is_zero() for r in self.residuals.values())

    def failing(self) -> List[str]:
        return [name for name, r in self.residuals.items() if not r.is_zero()]


def h4_expressions(g_value: Any, t: Any, phi: Any, omega: Any) -> Tuple[Any, Any]:
    """The two expressions of h4 obtained by eliminating h4 from the kernel system"""
    u = (t + 1) * phi - 1
    first = (g_value * (t + 1) * phi + t * omega * u) / (g_value + t * omega * u)
    v = (t + 1) * omega - 1
    second = (g_value * (omega * t * t - t - phi) - t * phi * v) / (g_value * (t + 1) * (t * omega - 1) - t * phi * v)
    return first, second


def h4_on_line(g_value: Any, t: Any) -> Any:
    """h4 once omega and phi are eliminated along the special line"""
    top = g_value ** 2 * t * (t + 1) ** 3 + t - g_value * (t ** 3 + 3 * t * t + 2 * t + 1)
    bottom = g_value ** 2 * (t + 1) ** 4 - g_value * (t + 1) ** 3 + t
    return top / bottom


def check_special_line() -> SpecialLineReport:
    """Residuals of the line equation and the h4 agreement, as rational functions in C"""
    t = t_line_of_C()
    g_value = G_of_C()
    phi = t / (t + 1) ** 2
    omega = (t - g_value * (t + 1) ** 2) / (t * (t + 1))
    first, second = h4_expressions(g_value, t, phi, omega)
    report = SpecialLineReport()
    report.residuals["line"] = (t + 1) ** 5 * g_value ** 2 - (t - 1) * (t + 1) ** 2 * g_value - t
    report.residuals["h4 agreement"] = first - second
    report.residuals["h4 parametric"] = first - h4_of_C()
    report.residuals["h4 eliminated"] = h4_on_line(g_value, t) - h4_of_C()
    report.residuals["G at the composition"] = G_of_C().compose(C_of_x()) - G_of_x()
    return report


# Quadratic in phi at fixed C

def _c_quantities(c: Any) -> Dict[str, Any]:
    return {"s": c * c - c - 1, "q": c ** 3 + 2 * c * c - c - 1, "w": 2 * c + 1}


def phi_quadratic(c: Fraction) -> Tuple[Polynomial, Polynomial, Polynomial]:
    """Coefficients (A, B, C0) in t of A phi^2 + B phi + C0 = 0 for a fixed rational C"""
    q = _c_quantities(c)
    t = Polynomial.gen("t")
    constant = c * (c + 1) ** 3 * (c * q["q"] + q["s"] ** 2 * t)
    linear = -q["w"] ** 2 * (
        c * (c - 1) * (c + 1) ** 3
        + (c + 1) * (2 * c ** 4 - 2 * c ** 3 + c * c + 3 * c + 1) * t
        + c * q["s"] ** 2 * t * t
    )
    quadratic = q["w"] ** 4 * t * (t + 1)
    return quadratic, linear, constant


def phi_discriminant_factorization(c: Fraction) -> Tuple[Polynomial, Polynomial]:
    """(B^2 - 4 A C0, its factored form) as polynomials in t"""
    a, b, c0 = phi_quadratic(c)
    q = _c_quantities(c)
    t = Polynomial.gen("t")
    delta = ((c - 1) ** 2 * (c + 1) + c * q["s"] * t) * ((c + 1) ** 3 + c * q["s"] * t)
    factored = q["w"] ** 4 * (c * (c + 1) + q["s"] * t) ** 2 * delta
    return b * b - 4 * a * c0, factored


def y_quadratic(c: Fraction) -> Tuple[Polynomial, Polynomial, Polynomial]:
    """Y^2 + B(t) Y + C^2 (C+1)^2 = 0"""
    q = _c_quantities(c)
    t = Polynomial.gen("t")
    linear = (c + 1) * (c * c + 1) + c * q["s"] * t
    return Polynomial([1], "t"), linear, Polynomial([c * c * (c + 1) ** 2], "t")


def t_of_Y(y: Any, c: Fraction) -> Any:
    if y == 0:
        raise DomainError(f"t(Y) has a pole at Y = 0 for C = {c}")
    q = _c_quantities(c)
    return -(c + y + 1) * (c ** 3 + c * c + y) / (c * q["s"] * y)


def t_of_Y_rational(c: Fraction) -> RationalFunction:
    """t as a rational function of Y at a fixed C"""
    q = _c_quantities(c)
    y = Polynomial.gen("Y")
    return RationalFunction(-(y + (c + 1)) * (y + (c ** 3 + c * c)), c * q["s"] * y, "Y")


def phi_of_Y(y: Any, c: Fraction) -> Any:
    if y == -c * c or y == -(c ** 3 + c * c):
        raise DomainError(f"phi(Y) has a pole at Y = {y} for C = {c}")
    q = _c_quantities(c)
    top = -c * q["s"] * y * (c ** 4 + 2 * c ** 3 - y * c * c + c * c + y * c + y)
    bottom = q["w"] ** 2 * (c * c + y) * (c ** 3 + c * c + y)
    return top / bottom


def select_Y(t: Any, c: Any, sqrt=None) -> Any:
    """Branch of the Y-quadratic through Y_1 = -(C+1) at t = 0"""
    if sqrt is None:
        from mpmath import sqrt
    q = _c_quantities(c)
    linear = (c + 1) * (c * c + 1) + c * q["s"] * t
    return -(linear + sqrt(linear * linear - 4 * c * c * (c + 1) ** 2)) / 2


def phi_param(t: Any, c: Any) -> Any:
    """phi(t) at fixed C through the Y-parametrization"""
    return phi_of_Y(select_Y(t, c), c)


def lambda_map(d: int, x: Fraction) -> RationalFunction:
    """lam -> (1 - lam x^(d-1))(1 - lam x^(d+5)) / ((1 - lam x^(d+1))(1 - lam x^(d+3))) at a fixed x"""
    if d < 1:
        raise DomainError(f"lambda map needs d >= 1, got {d}")

    def factor(n: int) -> Polynomial:
        return Polynomial([1, -x ** n], "lam")

    return RationalFunction(factor(d - 1) * factor(d + 5), factor(d + 1) * factor(d + 3), "lam")


@dataclass(frozen=True)
class Parametrization:
    name: str
    forward: RationalFunction
    interval: Tuple[Fraction, Fraction]
    open_right: bool = False

    def is_injective(self, samples: int = 16) -> bool:
        """Derivative keeps a strict sign on interior sample points"""
        lo, hi = self.interval
        slope = self.forward.derivative()
        signs = set()
        for i in range(1, samples):
            point = lo + (hi - lo) * Fraction(i, samples)
            value = slope.evaluate(point)
            if value == 0:
                return False
            signs.add(value > 0)
        return len(signs) == 1


def parametrizations() -> List[Parametrization]:
    return [
        Parametrization("x-of-g", g_of_x(), (Fraction(0), Fraction(1)), open_right=True),
        Parametrization("C-of-x", C_of_x(), (Fraction(0), Fraction(1)), open_right=True),
        Parametrization("G-of-x", G_of_x(), (Fraction(0), Fraction(1)), open_right=True),
        Parametrization("G-of-C", G_of_C(), (Fraction(0), Fraction(1, 2))),
        Parametrization("t-of-C", t_line_of_C(), (Fraction(0), Fraction(1, 2))),
        # Y runs from Y_1 = -(C+1) at t = 0 to the branch point -C(C+1), here at C = 1/2
        Parametrization("t-of-Y", t_of_Y_rational(Fraction(1, 2)), (-Fraction(3, 2), -Fraction(3, 4))),
        Parametrization("lambda-map", lambda_map(2, Fraction(1, 2)), (Fraction(0), Fraction(1))),
    ]


def critical_values() -> Dict[str, Fraction]:
    """Images of the critical point x = 1 (C = 1/2)"""
    return {
        "g": g_of_x().evaluate(Fraction(1)),
        "C": C_of_x().evaluate(Fraction(1)),
        "G": G_of_C().evaluate(Fraction(1, 2)),
    }
