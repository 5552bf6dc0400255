"""Exact arithmetic substrate.

Dense rational-coefficient polynomials, canonical rational functions (in the
Laplace variable s and in u = omega^2), truncated power series, quadratic
surds a + b*sqrt(d), exact Lagrange/Newton interpolation, and correctly
rounded decimal rendering of surds.

Every coefficient is a `fractions.Fraction`, so all operations here are
exact. All values are immutable after construction and every operation is a
pure function; instances may be freely shared across threads.

Rationals serialize as "p/q" strings (the "/q" omitted when q = 1), which is
exactly what `str(Fraction)` produces and `Fraction(str)` parses back.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

Coefficient = Union[Fraction, int, str]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _frac(x: Coefficient) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class Polynomial:
    """Dense univariate polynomial with exact rational coefficients.

    Coefficients are stored in ascending degree order with no trailing
    zeros; the zero polynomial stores an empty tuple and reports degree -1.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coefficients: Iterable[Coefficient] = ()):
        coeffs = [_frac(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self._coeffs = tuple(coeffs)

    @classmethod
    def monomial(cls, power: int, coefficient: Coefficient = 1) -> "Polynomial":
        c = _frac(coefficient)
        if c == 0:
            return cls()
        return cls([0] * power + [c])

    @classmethod
    def constant(cls, value: Coefficient) -> "Polynomial":
        return cls([value])

    # -- basic queries ----------------------------------------------------

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def leading(self) -> Fraction:
        if not self._coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self._coeffs[-1]

    def coeff(self, power: int) -> Fraction:
        """Coefficient of x**power (zero beyond the stored degree)."""
        if 0 <= power < len(self._coeffs):
            return self._coeffs[power]
        return _ZERO

    def lowest_nonzero_power(self) -> int:
        if not self._coeffs:
            raise ValueError("zero polynomial")
        for k, c in enumerate(self._coeffs):
            if c != 0:
                return k
        raise AssertionError("unreachable: trailing zeros are stripped")

    # -- ring operations --------------------------------------------------

    def __add__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    def __neg__(self) -> "Polynomial":
        return Polynomial([-c for c in self._coeffs])

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            if self.is_zero or other.is_zero:
                return Polynomial()
            out = [_ZERO] * (len(self._coeffs) + len(other._coeffs) - 1)
            for i, a in enumerate(self._coeffs):
                if a == 0:
                    continue
                for j, b in enumerate(other._coeffs):
                    out[i + j] += a * b
            return Polynomial(out)
        if isinstance(other, (int, Fraction)):
            return Polynomial([c * other for c in self._coeffs])
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Polynomial":
        if exponent < 0:
            raise ValueError("negative polynomial power")
        result = Polynomial([1])
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other) -> bool:
        return isinstance(other, Polynomial) and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    # -- evaluation and calculus ------------------------------------------

    def __call__(self, x):
        """Horner evaluation; x may be Fraction, int, float or complex."""
        result = _ZERO
        for c in reversed(self._coeffs):
            result = result * x + c
        return result

    def derivative(self) -> "Polynomial":
        return Polynomial([k * c for k, c in enumerate(self._coeffs)][1:])

    def scale_substitute(self, c: Coefficient) -> "Polynomial":
        """Return p(c*x): the x**k coefficient is multiplied by c**k."""
        c = _frac(c)
        out = []
        power = _ONE
        for coeff in self._coeffs:
            out.append(coeff * power)
            power *= c
        return Polynomial(out)

    def even_part(self) -> "Polynomial":
        """E with p(x) = E(x^2) + x*O(x^2)."""
        return Polynomial(self._coeffs[0::2])

    def odd_part(self) -> "Polynomial":
        """O with p(x) = E(x^2) + x*O(x^2)."""
        return Polynomial(self._coeffs[1::2])

    # -- division ----------------------------------------------------------

    def __divmod__(self, other: "Polynomial"):
        if not isinstance(other, Polynomial):
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self._coeffs)
        dq = other.degree
        lead = other.leading
        if self.degree < dq:
            return Polynomial(), self
        quot = [_ZERO] * (self.degree - dq + 1)
        for k in range(self.degree - dq, -1, -1):
            factor = rem[k + dq] / lead
            quot[k] = factor
            if factor != 0:
                for i, c in enumerate(other._coeffs):
                    rem[k + i] -= factor * c
        return Polynomial(quot), Polynomial(rem)

    def __floordiv__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[0]

    def __mod__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[1]

    def divides(self, other: "Polynomial") -> bool:
        """True when self divides other with zero remainder."""
        if self.is_zero:
            return other.is_zero
        return (other % self).is_zero

    def monic(self) -> "Polynomial":
        if self.is_zero:
            raise ValueError("cannot normalize the zero polynomial")
        lead = self.leading
        if lead == 1:
            return self
        return Polynomial([c / lead for c in self._coeffs])

    def content(self) -> Fraction:
        """Positive rational c with self/c primitive (integer coefficients, gcd 1)."""
        if self.is_zero:
            raise ValueError("zero polynomial has no content")
        den_lcm = 1
        for c in self._coeffs:
            den_lcm = math.lcm(den_lcm, c.denominator)
        num_gcd = 0
        for c in self._coeffs:
            num_gcd = math.gcd(num_gcd, abs(c.numerator) * (den_lcm // c.denominator))
        return Fraction(num_gcd, den_lcm)

    # -- rendering ---------------------------------------------------------

    def to_str(self, var: str = "s") -> str:
        """Render in descending powers, e.g. "s^3 + 9 s^2 + 36 s + 60"."""
        if self.is_zero:
            return "0"
        parts: list[str] = []
        for power in range(self.degree, -1, -1):
            c = self._coeffs[power]
            if c == 0:
                continue
            mag = abs(c)
            if power == 0:
                body = str(mag)
            else:
                x = var if power == 1 else f"{var}^{power}"
                body = x if mag == 1 else f"{mag} {x}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __str__(self) -> str:
        return self.to_str()

    def __repr__(self) -> str:
        return f"Polynomial([{', '.join(str(c) for c in self._coeffs)}])"


def poly_scale_substitute(p: Polynomial, c: Coefficient) -> Polynomial:
    """Return p(c*x); free-function form of Polynomial.scale_substitute."""
    return p.scale_substitute(c)


def poly_gcd(p: Polynomial, q: Polynomial) -> Polynomial:
    """Monic greatest common divisor under exact rational arithmetic."""
    if p.is_zero and q.is_zero:
        raise ValueError("gcd(0, 0) is undefined")
    a, b = p, q
    while not b.is_zero:
        a, b = b, a % b
        if not b.is_zero:
            b = b.monic()  # keeps intermediate coefficients small
    return a.monic()


def _reduce_pair(num: Polynomial, den: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Divide out the gcd and scale so the denominator is monic."""
    if den.is_zero:
        raise ZeroDivisionError("zero denominator")
    if num.is_zero:
        return Polynomial(), Polynomial([1])
    g = poly_gcd(num, den)
    if g.degree > 0:
        num = num // g
        den = den // g
    lead = den.leading
    if lead != 1:
        num = num * (1 / lead)
        den = den.monic()
    return num, den


def _wrap(p: Polynomial, var: str) -> str:
    s = p.to_str(var)
    return f"({s})" if len(p.coefficients) > 1 else s


class TransferFunction:
    """Reduced rational function of s with monic denominator.

    The canonical form (coprime numerator/denominator, denominator scaled
    monic) is the normalization under which printed textbook forms are
    reproduced verbatim, so equality is plain field comparison.
    """

    __slots__ = ("_num", "_den")

    def __init__(self, numerator: Polynomial, denominator: Polynomial):
        self._num, self._den = _reduce_pair(numerator, denominator)

    @property
    def numerator(self) -> Polynomial:
        return self._num

    @property
    def denominator(self) -> Polynomial:
        return self._den

    def value_at(self, s):
        return self._num(s) / self._den(s)

    def at_origin(self) -> Fraction:
        den0 = self._den.coeff(0)
        if den0 == 0:
            raise ZeroDivisionError("pole at s = 0")
        return self._num.coeff(0) / den0

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TransferFunction)
            and self._num == other._num
            and self._den == other._den
        )

    def __hash__(self) -> int:
        return hash((self._num, self._den))

    def __str__(self) -> str:
        return f"{_wrap(self._num, 's')} / {_wrap(self._den, 's')}"

    def __repr__(self) -> str:
        return f"TransferFunction({self._num!r}, {self._den!r})"


class EvenRationalFunction:
    """Reduced rational function of u = omega^2 with monic denominator.

    Carries squared magnitudes and group delays. The denominator must not
    vanish at the origin (its constant term is required positive), matching
    the lowpass prototypes this library analyzes.
    """

    __slots__ = ("_num", "_den")

    def __init__(self, numerator: Polynomial, denominator: Polynomial):
        num, den = _reduce_pair(numerator, denominator)
        if den.coeff(0) <= 0:
            raise ValueError(
                "even rational function requires a positive denominator constant term"
            )
        self._num, self._den = num, den

    @property
    def numerator(self) -> Polynomial:
        return self._num

    @property
    def denominator(self) -> Polynomial:
        return self._den

    def value_at(self, u):
        return self._num(u) / self._den(u)

    def at_origin(self) -> Fraction:
        return self._num.coeff(0) / self._den.coeff(0)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, EvenRationalFunction)
            and self._num == other._num
            and self._den == other._den
        )

    def __hash__(self) -> int:
        return hash((self._num, self._den))

    def __str__(self) -> str:
        return f"{_wrap(self._num, 'u')} / {_wrap(self._den, 'u')}"

    def __repr__(self) -> str:
        return f"EvenRationalFunction({self._num!r}, {self._den!r})"


class TruncatedSeries:
    """Exact power-series prefix: the first `order` Maclaurin coefficients.

    Arithmetic never reads beyond the stored prefix; combining two series
    truncates to the shorter order.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coefficients: Iterable[Coefficient]):
        self._coeffs = tuple(_frac(c) for c in coefficients)

    @classmethod
    def from_polynomial(cls, p: Polynomial, order: int) -> "TruncatedSeries":
        return cls([p.coeff(k) for k in range(order)])

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def order(self) -> int:
        return len(self._coeffs)

    def __getitem__(self, k: int) -> Fraction:
        return self._coeffs[k]

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = min(self.order, other.order)
        return TruncatedSeries([self._coeffs[k] + other._coeffs[k] for k in range(n)])

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = min(self.order, other.order)
        return TruncatedSeries([self._coeffs[k] - other._coeffs[k] for k in range(n)])

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            n = min(self.order, other.order)
            out = [_ZERO] * n
            for i in range(n):
                a = self._coeffs[i]
                if a == 0:
                    continue
                for j in range(n - i):
                    out[i + j] += a * other._coeffs[j]
            return TruncatedSeries(out)
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries([c * other for c in self._coeffs])
        return NotImplemented

    __rmul__ = __mul__

    def first_nonzero(self) -> int | None:
        """Index of the first nonzero coefficient, None if all stored are zero."""
        for k, c in enumerate(self._coeffs):
            if c != 0:
                return k
        return None

    def __eq__(self, other) -> bool:
        return isinstance(other, TruncatedSeries) and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"TruncatedSeries([{', '.join(str(c) for c in self._coeffs)}])"


def series_of_ratio(num: Polynomial, den: Polynomial, terms: int) -> TruncatedSeries:
    """First `terms` Maclaurin coefficients of num/den, exact.

    Long division: f_k = (p_k - sum_{i<k} f_i q_{k-i}) / q_0, requiring
    q_0 = den(0) nonzero.
    """
    if terms < 0:
        raise ValueError("terms must be non-negative")
    q0 = den.coeff(0)
    if q0 == 0:
        raise ZeroDivisionError("ratio is singular at the origin")
    out: list[Fraction] = []
    for k in range(terms):
        acc = num.coeff(k)
        for i in range(k):
            acc -= out[i] * den.coeff(k - i)
        out.append(acc / q0)
    return TruncatedSeries(out)


def exp_series(sign: int, terms: int) -> TruncatedSeries:
    """Maclaurin prefix of e^(sign*x): coefficients sign^k / k!."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if terms < 1:
        raise ValueError("terms must be at least 1")
    out = []
    c = _ONE
    for k in range(terms):
        if k:
            c = c * sign / k
        out.append(c)
    return TruncatedSeries(out)


def interpolate(points: Sequence[tuple[Coefficient, Coefficient]]) -> Polynomial:
    """Unique polynomial of degree < len(points) through the given points.

    Newton's divided differences over exact rationals; duplicated abscissae
    are rejected.
    """
    if not points:
        raise ValueError("need at least one point")
    xs = [_frac(x) for x, _ in points]
    ys = [_frac(y) for _, y in points]
    if len(set(xs)) != len(xs):
        raise ValueError("duplicated abscissa")
    # divided-difference coefficients, in place
    coef = list(ys)
    n = len(xs)
    for level in range(1, n):
        for i in range(n - 1, level - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - level])
    # Horner assembly: p = c_{n-1}; p = p*(x - x_k) + c_k
    poly = Polynomial([coef[-1]])
    for k in range(n - 2, -1, -1):
        poly = poly * Polynomial([-xs[k], 1]) + Polynomial([coef[k]])
    return poly


# ---------------------------------------------------------------------------
# Intervals and integer roots
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Enclosure:
    """Closed interval [lo, hi] with exact rational endpoints."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError("empty enclosure")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains(self, x) -> bool:
        return self.lo <= x <= self.hi

    def disjoint_from(self, other: "Enclosure") -> bool:
        return self.hi < other.lo or other.hi < self.lo

    def __float__(self) -> float:
        return float(self.midpoint)


def int_nth_root(n: int, k: int) -> int:
    """floor(n ** (1/k)) for n >= 0, k >= 1, exact."""
    if n < 0 or k < 1:
        raise ValueError("int_nth_root requires n >= 0, k >= 1")
    if n == 0:
        return 0
    if k == 1:
        return n
    if k == 2:
        return math.isqrt(n)
    x = int(round(n ** (1.0 / k))) + 1
    while x**k > n:
        # Newton step, floored; converges from above
        x = ((k - 1) * x + n // x ** (k - 1)) // k
    while (x + 1) ** k <= n:
        x += 1
    return x


def nth_root_enclosure(x: Fraction, k: int, digits: int) -> Enclosure:
    """Enclosure of x**(1/k) of width at most 10**-digits, for x >= 0."""
    if x < 0:
        raise ValueError("nth_root_enclosure requires x >= 0")
    scale = 10**digits
    lo = int_nth_root((x.numerator * scale**k) // x.denominator, k)
    return Enclosure(Fraction(lo, scale), Fraction(lo + 1, scale))


def _squarefree_split(n: int) -> tuple[int, int]:
    """n = square * d with d squarefree; returns (sqrt(square), d)."""
    if n <= 0:
        raise ValueError("need a positive integer")
    root = 1
    d = n
    f = 2
    while f * f <= d:
        sq = f * f
        while d % sq == 0:
            d //= sq
            root *= f
        f += 1
    return root, d


class QuadSurd:
    """Exact value a + b*sqrt(d) with rational a, b and squarefree d > 0.

    A closed type: only sums of a rational and a rational multiple of one
    square root, which is all the quadratic-flatness solutions ever need.
    b = 0 (and then d = 1) is the rational degenerate case.
    """

    __slots__ = ("_a", "_b", "_d")

    def __init__(self, a: Coefficient, b: Coefficient, d: int):
        a, b = _frac(a), _frac(b)
        if b == 0:
            d = 1
        else:
            if d <= 0:
                raise ValueError("radicand must be positive")
            root, d = _squarefree_split(d)
            b *= root
            if d == 1:  # perfect square: fold into the rational part
                a += b
                b = _ZERO
        self._a, self._b, self._d = a, b, d

    @classmethod
    def from_rational(cls, value: Coefficient) -> "QuadSurd":
        return cls(value, 0, 1)

    @property
    def a(self) -> Fraction:
        return self._a

    @property
    def b(self) -> Fraction:
        return self._b

    @property
    def d(self) -> int:
        return self._d

    @property
    def is_rational(self) -> bool:
        return self._b == 0

    def __eq__(self, other) -> bool:
        if isinstance(other, QuadSurd):
            return (self._a, self._b, self._d) == (other._a, other._b, other._d)
        if isinstance(other, (int, Fraction)):
            return self._b == 0 and self._a == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._a, self._b, self._d))

    def __neg__(self) -> "QuadSurd":
        return QuadSurd(-self._a, -self._b, self._d)

    def compare_to_rational(self, r: Coefficient) -> int:
        """Sign of (self - r), decided exactly."""
        t = self._a - _frac(r)
        b = self._b
        if b == 0:
            return (t > 0) - (t < 0)
        # sign of t + b*sqrt(d), with b*sqrt(d) irrational
        if b > 0:
            if t >= 0:
                return 1
            return 1 if b * b * self._d > t * t else -1
        if t <= 0:
            return -1
        return 1 if t * t > b * b * self._d else -1

    def __lt__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.compare_to_rational(other) < 0
        return NotImplemented

    def __gt__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.compare_to_rational(other) > 0
        return NotImplemented

    def enclosure(self, digits: int) -> Enclosure:
        """Interval of width <= 2 * 10**-digits around the exact value."""
        if self._b == 0:
            return Enclosure(self._a, self._a)
        root = nth_root_enclosure(Fraction(self._d), 2, digits)
        if self._b > 0:
            return Enclosure(self._a + self._b * root.lo, self._a + self._b * root.hi)
        return Enclosure(self._a + self._b * root.hi, self._a + self._b * root.lo)

    def __float__(self) -> float:
        return float(self._a) + float(self._b) * math.sqrt(self._d)

    def __str__(self) -> str:
        if self._b == 0:
            return str(self._a)
        common = math.lcm(self._a.denominator, self._b.denominator)
        p = self._a.numerator * (common // self._a.denominator)
        q = self._b.numerator * (common // self._b.denominator)
        root = f"sqrt({self._d})" if abs(q) == 1 else f"{abs(q)}*sqrt({self._d})"
        if p == 0:
            body = root if q > 0 else f"-{root}"
            return body if common == 1 else f"{body}/{common}"
        sign = "+" if q > 0 else "-"
        if common == 1:
            return f"{p}{sign}{root}"
        return f"({p}{sign}{root})/{common}"

    def __repr__(self) -> str:
        return f"QuadSurd({self._a}, {self._b}, {self._d})"


# ---------------------------------------------------------------------------
# Correctly rounded decimal rendering
# ---------------------------------------------------------------------------


def _decimal_exponent(v: Fraction) -> int:
    """floor(log10(v)) for v > 0, exact."""
    p, q = v.numerator, v.denominator
    if p >= q:
        return len(str(p // q)) - 1
    e = 0
    while p < q:
        p *= 10
        e -= 1
    return e


def _format_fixed(digits: str, exponent: int, negative: bool) -> str:
    """Fixed-notation string for mantissa `digits` with leading-digit
    exponent `exponent` (value = 0.digits * 10**(exponent+1))."""
    p = len(digits)
    if exponent >= p - 1:
        body = digits + "0" * (exponent - p + 1)
    elif exponent >= 0:
        body = digits[: exponent + 1] + "." + digits[exponent + 1 :]
    else:
        body = "0." + "0" * (-exponent - 1) + digits
    return "-" + body if negative else body


def _round_sig_half_even(v: Fraction, precision: int) -> str:
    """Exact round-half-even of a rational to `precision` significant digits."""
    if v == 0:
        return _format_fixed("0" * precision, 0, False)
    negative = v < 0
    v = abs(v)
    e = _decimal_exponent(v)
    # round at position e - precision + 1
    pos = e - precision + 1
    scaled = v * Fraction(10) ** (-pos)
    n = scaled.numerator // scaled.denominator
    frac = scaled - n
    if frac > Fraction(1, 2) or (frac == Fraction(1, 2) and n % 2 == 1):
        n += 1
    if n == 10**precision:
        n //= 10
        e += 1
    return _format_fixed(str(n), e, negative)


def _round_sig_nearest(v: Fraction, precision: int) -> str:
    """Nearest rounding (ties up) used on interval endpoints; the caller
    tightens the interval until both endpoints agree."""
    if v == 0:
        return _format_fixed("0" * precision, 0, False)
    negative = v < 0
    v = abs(v)
    e = _decimal_exponent(v)
    pos = e - precision + 1
    scaled = v * Fraction(10) ** (-pos)
    n = (scaled.numerator * 2 + scaled.denominator) // (2 * scaled.denominator)
    if n == 10**precision:
        n //= 10
        e += 1
    return _format_fixed(str(n), e, negative)


def surd_to_float(x: QuadSurd, precision: int) -> str:
    """Correctly rounded decimal expansion of a + b*sqrt(d).

    `precision` counts significant decimal digits. Rational values round
    exactly (half to even); irrational values are bracketed by shrinking
    exact intervals until the rounded output is unambiguous, so the printed
    digits are always those of the true value.
    """
    if precision < 1:
        raise ValueError("precision must be at least 1")
    if x.is_rational:
        return _round_sig_half_even(x.a, precision)
    digits = precision + 8
    while True:
        enc = x.enclosure(digits)
        if enc.lo == 0 or enc.hi == 0 or (enc.lo < 0) != (enc.hi < 0):
            digits *= 2
            continue
        lo_s = _round_sig_nearest(enc.lo, precision)
        hi_s = _round_sig_nearest(enc.hi, precision)
        if lo_s == hi_s:
            return lo_s
        digits *= 2
