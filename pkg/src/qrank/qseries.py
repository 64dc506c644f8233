"""q-combinatorics: Gaussian binomials, lattice Moebius coefficients,
q-products/powers/transforms of homogeneous bivariate polynomials, and
the P_j coefficients of the rank-metric MacWilliams identity.

Coefficients are exact rationals internally (m-shifts can pass through
q^{m-i} with m-i < 0); every externally exposed value is asserted
integral before return.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .errors import NegativeExponent, NonIntegralResult


def qpow(q: int, k: int):
    """q^k as an exact number, valid for negative k."""
    if k >= 0:
        return q**k
    return Fraction(1, q**-k)


@lru_cache(maxsize=None)
def gaussian_binomial(a: int, b: int, q: int) -> int:
    """Number of b-dimensional subspaces of F_q^a; 0 outside 0 <= b <= a."""
    if b < 0 or b > a:
        return 0
    num, out = 1, 1
    # product formula with exact integer division at each step
    for i in range(b):
        num = num * (q ** (a - i) - 1)
        den = q ** (i + 1) - 1
        assert num % den == 0
        num //= den
    return num


def galois_number(n: int, q: int) -> int:
    """Total number of subspaces of F_q^n."""
    return sum(gaussian_binomial(n, d, q) for d in range(n + 1))


def moebius_coefficient(k: int, q: int) -> int:
    """(-1)^k q^{k(k-1)/2}: the Moebius kernel on the subspace lattice."""
    if k < 0:
        raise ValueError("k must be >= 0")
    return (-1) ** k * q ** (k * (k - 1) // 2)


def _join_signed(terms):
    if not terms:
        return "0"
    out = []
    for idx, (negative, body) in enumerate(terms):
        if idx == 0:
            out.append(f"-{body}" if negative else body)
        else:
            out.append(f"- {body}" if negative else f"+ {body}")
    return " ".join(out)


def _as_int(v):
    if isinstance(v, Fraction):
        if v.denominator != 1:
            raise NonIntegralResult(f"expected integer, got {v}")
        return v.numerator
    return v


class HomogeneousPoly:
    """Homogeneous bivariate polynomial: coeffs[i] multiplies x^{r-i} y^i."""

    __slots__ = ("degree", "coeffs")

    def __init__(self, degree: int, coeffs):
        coeffs = tuple(coeffs)
        if len(coeffs) != degree + 1:
            raise ValueError("coefficient list must have length degree+1")
        self.degree = degree
        self.coeffs = coeffs

    def integral(self) -> "HomogeneousPoly":
        return HomogeneousPoly(self.degree, tuple(_as_int(c) for c in self.coeffs))

    def scale(self, c) -> "HomogeneousPoly":
        return HomogeneousPoly(self.degree, tuple(c * a for a in self.coeffs))

    def __add__(self, other):
        if self.degree != other.degree:
            raise ValueError("degrees differ")
        return HomogeneousPoly(self.degree, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __eq__(self, other):
        return (
            isinstance(other, HomogeneousPoly)
            and self.degree == other.degree
            and all(a == b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __hash__(self):
        return hash((self.degree, self.coeffs))

    def __str__(self):
        terms = []
        r = self.degree
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            parts = []
            if abs(c) != 1 or (r - i == 0 and i == 0):
                parts.append(str(abs(c)))
            if r - i > 0:
                parts.append("x" if r - i == 1 else f"x^{r - i}")
            if i > 0:
                parts.append("y" if i == 1 else f"y^{i}")
            terms.append((c < 0, "*".join(parts)))
        return _join_signed(terms)

    def __repr__(self):
        return f"HomogeneousPoly({self})"


class HomogeneousMPoly:
    """Homogeneous bivariate polynomial whose coefficients are functions
    of the integer parameter m (memoized), as required by the q-product's
    m-shift."""

    __slots__ = ("degree", "_oracle", "_memo")

    def __init__(self, degree: int, oracle):
        self.degree = degree
        self._oracle = oracle
        self._memo = {}

    @classmethod
    def constant(cls, coeffs) -> "HomogeneousMPoly":
        coeffs = tuple(coeffs)
        return cls(len(coeffs) - 1, lambda m: coeffs)

    def at(self, m: int):
        if m not in self._memo:
            coeffs = tuple(self._oracle(m))
            if len(coeffs) != self.degree + 1:
                raise ValueError("oracle returned wrong coefficient count")
            self._memo[m] = coeffs
        return self._memo[m]

    def poly_at(self, m: int) -> HomogeneousPoly:
        return HomogeneousPoly(self.degree, self.at(m))


def x_poly() -> HomogeneousMPoly:
    return HomogeneousMPoly.constant((1, 0))


def y_poly() -> HomogeneousMPoly:
    return HomogeneousMPoly.constant((0, 1))


def x_minus_y() -> HomogeneousMPoly:
    return HomogeneousMPoly.constant((1, -1))


def qm_y(q: int) -> HomogeneousMPoly:
    """The polynomial q^m y, coefficient a function of m."""
    return HomogeneousMPoly(1, lambda m: (0, qpow(q, m)))


def x_plus_qm_minus_1_y(q: int) -> HomogeneousMPoly:
    """The polynomial x + (q^m - 1) y."""
    return HomogeneousMPoly(1, lambda m: (1, qpow(q, m) - 1))


def one_mpoly() -> HomogeneousMPoly:
    return HomogeneousMPoly.constant((1,))


def q_product(a: HomogeneousMPoly, b: HomogeneousMPoly, q: int) -> HomogeneousMPoly:
    """Non-commutative q-product: c_u(m) = sum_i q^{is} a_i(m) b_{u-i}(m-i)."""
    r, s = a.degree, b.degree

    def oracle(m):
        ac = a.at(m)
        out = []
        for u in range(r + s + 1):
            acc = 0
            for i in range(max(0, u - s), min(r, u) + 1):
                if ac[i]:
                    acc += qpow(q, i * s) * ac[i] * b.at(m - i)[u - i]
            out.append(acc)
        return tuple(out)

    return HomogeneousMPoly(r + s, oracle)


def q_power(a: HomogeneousMPoly, n: int, q: int) -> HomogeneousMPoly:
    """a^{[n]}: a^{[0]} = 1, a^{[n]} = a^{[n-1]} * a."""
    if n < 0:
        raise NegativeExponent("q-power exponent must be >= 0")
    acc = one_mpoly()
    for _ in range(n):
        acc = q_product(acc, a, q)
    return acc


def q_transform(a: HomogeneousMPoly, q: int) -> HomogeneousMPoly:
    """sum_i a_i(m) y^{[i]} * x^{[r-i]}, operand order as stated."""
    r = a.degree
    pieces = [q_product(q_power(y_poly(), i, q), q_power(x_poly(), r - i, q), q) for i in range(r + 1)]

    def oracle(m):
        ac = a.at(m)
        out = [0] * (r + 1)
        for i in range(r + 1):
            if ac[i]:
                pc = pieces[i].at(m)
                for u in range(r + 1):
                    out[u] += ac[i] * pc[u]
        return tuple(out)

    return HomogeneousMPoly(r, oracle)


def p_j_coeff(i: int, j: int, m: int, n: int, q: int) -> int:
    """P_j(i; m, n) from the rank-metric MacWilliams expansion:
    the coefficient of y^j x^{n-j} in (x-y)^{[i]} * (x+(q^m-1)y)^{[n-i]}.

    The Gaussian factor is [i choose l]_q (resolved empirically against
    the q-product expansion; see the identity tests).
    """
    if not (0 <= i <= n and 0 <= j <= n):
        raise ValueError("require 0 <= i, j <= n")
    total = Fraction(0)
    for l in range(j + 1):
        g = gaussian_binomial(i, l, q) * gaussian_binomial(n - i, j - l, q)
        if g == 0:
            continue
        term = Fraction(g) * (-1) ** l * q ** (l * (l - 1) // 2) * qpow(q, l * (n - i))
        for u in range(j - l):
            term *= qpow(q, m - l) - q**u
        total += term
    return _as_int(total)


@lru_cache(maxsize=None)
def g_poly(q: int, l: int):
    """Coefficients of g^l(X, Y) = prod_{i<l} (X - q^i Y): returns the
    tuple (c_0, ..., c_l) with c_u multiplying X^{l-u} Y^u."""
    coeffs = [1]
    for i in range(l):
        nxt = [0] * (len(coeffs) + 1)
        for u, c in enumerate(coeffs):
            nxt[u] += c
            nxt[u + 1] -= c * q**i
        coeffs = nxt
    return tuple(coeffs)


class MultiPoly:
    """Sparse exact-integer polynomial in up to four variables; exponent
    tuples may be negative internally (Laurent workspace)."""

    __slots__ = ("terms",)

    VARS = ("X1", "X2", "X3", "X4")

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for exps, c in dict(terms).items():
                self.add_term(exps, c)

    def add_term(self, exps, coeff):
        if coeff == 0:
            return
        exps = tuple(exps)
        new = self.terms.get(exps, 0) + coeff
        if new:
            self.terms[exps] = new
        else:
            del self.terms[exps]

    def __add__(self, other):
        out = MultiPoly(self.terms)
        for e, c in other.terms.items():
            out.add_term(e, c)
        return out

    def __sub__(self, other):
        out = MultiPoly(self.terms)
        for e, c in other.terms.items():
            out.add_term(e, -c)
        return out

    def is_zero(self):
        return not self.terms

    def sorted_terms(self):
        return sorted(self.terms.items())

    def to_records(self):
        """Records [e1, e2, e3, e4, coefficient], lexicographically sorted."""
        return [[*e, c] for e, c in self.sorted_terms()]

    def swap_x1_x2(self) -> "MultiPoly":
        out = MultiPoly()
        for (e1, e2, e3, e4), c in self.terms.items():
            out.add_term((e2, e1, e3, e4), c)
        return out

    def __eq__(self, other):
        return isinstance(other, MultiPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __str__(self):
        parts = []
        for exps, c in self.sorted_terms():
            factors = []
            if abs(c) != 1 or all(e == 0 for e in exps):
                factors.append(str(abs(c)))
            for name, e in zip(self.VARS, exps):
                if e == 1:
                    factors.append(name)
                elif e != 0:
                    factors.append(f"{name}^{e}")
            parts.append((c < 0, "*".join(factors)))
        return _join_signed(parts)

    def __repr__(self):
        return f"MultiPoly({self})"
