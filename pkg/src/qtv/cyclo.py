"""Exact arithmetic in the cyclotomic field Q(zeta_N) for N divisible by 4.

Elements are stored in the canonical power basis zeta^0 .. zeta^{phi(N)-1}
modulo the N-th cyclotomic polynomial, with exact rational coefficients.
Two elements are equal iff their coefficient vectors are equal, which is what
makes the rationality/integrality decisions downstream trustworthy.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache

try:
    from gmpy2 import mpq as _Q
except ImportError:  # pragma: no cover
    _Q = Fraction

_Q0 = _Q(0)
_Q1 = _Q(1)


def _poly_mul_int(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ci in enumerate(a):
        if ci:
            for j, cj in enumerate(b):
                out[i + j] += ci * cj
    return out


def _poly_divmod_int(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    """Division of integer polynomials; requires exact integer quotients."""
    num = list(num)
    q = [0] * max(1, len(num) - len(den) + 1)
    while len(num) >= len(den) and any(num):
        while num and num[-1] == 0:
            num.pop()
        if len(num) < len(den):
            break
        shift = len(num) - len(den)
        lead, rem = divmod(num[-1], den[-1])
        if rem:
            raise ArithmeticError("non-exact integer polynomial division")
        q[shift] = lead
        for i, c in enumerate(den):
            num[shift + i] -= lead * c
    while num and num[-1] == 0:
        num.pop()
    return q, num


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, low degree first."""
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return (-1, 1)
    num = [0] * (n + 1)
    num[0], num[n] = -1, 1
    poly = num
    for d in range(1, n):
        if n % d == 0:
            poly, rem = _poly_divmod_int(poly, list(cyclotomic_polynomial(d)))
            if rem:
                raise ArithmeticError("cyclotomic division left a remainder")
    return tuple(poly)


class _OrderContext:
    """Per-order reduction data, built once and shared read-only."""

    def __init__(self, order: int):
        phi_poly = cyclotomic_polynomial(order)
        self.order = order
        self.phi = len(phi_poly) - 1
        self.poly = phi_poly
        # power_table[m] = integer coefficient vector of zeta^m, m in [0, order)
        top = [-c for c in phi_poly[:-1]]  # zeta^phi, since Phi is monic
        table = []
        cur = [0] * self.phi
        for m in range(order):
            if m < self.phi:
                vec = [0] * self.phi
                vec[m] = 1
            else:
                # zeta^m = zeta * zeta^{m-1}
                prev = table[m - 1]
                vec = [0] + list(prev[:-1])
                lead = prev[-1]
                if lead:
                    vec = [v + lead * t for v, t in zip(vec, top)]
            table.append(vec)
        del cur
        self.power_table = tuple(tuple(v) for v in table)
        # reduction rows for exponents phi .. 2*phi-2 (what a product can reach)
        self.reduction_rows = tuple(self.power_table[m] for m in range(self.phi, 2 * self.phi - 1))
        self.embed_powers = tuple(
            cmath.exp(2j * cmath.pi * m / order) for m in range(self.phi)
        )


@lru_cache(maxsize=None)
def order_context(order: int) -> _OrderContext:
    if order < 4 or order % 4 != 0:
        raise ValueError(f"order must be >= 4 and divisible by 4, got {order}")
    return _OrderContext(order)


def reduce_int_vector(vec: list[int], ctx: _OrderContext) -> list[int]:
    """Fold an integer coefficient vector of any length into the canonical basis."""
    phi = ctx.phi
    out = list(vec[:phi]) + [0] * max(0, phi - len(vec))
    for m in range(len(vec) - 1, phi - 1, -1):
        c = vec[m]
        if c:
            row = ctx.power_table[m % ctx.order] if m >= ctx.order else ctx.power_table[m]
            for j, t in enumerate(row):
                if t:
                    out[j] += c * t
    return out


class CyclotomicElement:
    """An element of Q(zeta_order) in canonical reduced form.

    Supports exact ring/field operations, Galois substitutions zeta -> zeta^k,
    a float embedding at zeta = exp(2*pi*i/order), and the rationality test.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs):
        ctx = order_context(order)
        coeffs = tuple(_Q(c) for c in coeffs)
        if len(coeffs) != ctx.phi:
            raise ValueError(f"need {ctx.phi} coefficients for order {order}, got {len(coeffs)}")
        self.order = order
        self.coeffs = coeffs

    # -- constructors ------------------------------------------------------

    @classmethod
    def root(cls, order: int, power: int = 1) -> "CyclotomicElement":
        """Canonical form of zeta_order^power."""
        ctx = order_context(order)
        vec = ctx.power_table[power % order]
        return cls(order, vec)

    @classmethod
    def from_rational(cls, order: int, value) -> "CyclotomicElement":
        ctx = order_context(order)
        vec = [_Q(value)] + [_Q0] * (ctx.phi - 1)
        return cls(order, vec)

    @classmethod
    def zero(cls, order: int) -> "CyclotomicElement":
        return cls.from_rational(order, 0)

    @classmethod
    def one(cls, order: int) -> "CyclotomicElement":
        return cls.from_rational(order, 1)

    # -- helpers -----------------------------------------------------------

    def _check(self, other: "CyclotomicElement") -> "CyclotomicElement":
        if isinstance(other, (int, Fraction)) or type(other) is type(_Q1):
            return CyclotomicElement.from_rational(self.order, other)
        if not isinstance(other, CyclotomicElement):
            return NotImplemented
        if other.order != self.order:
            raise ValueError(f"order mismatch: {self.order} vs {other.order}")
        return other

    @property
    def ctx(self) -> _OrderContext:
        return order_context(self.order)

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        return CyclotomicElement(self.order, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        return CyclotomicElement(self.order, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return CyclotomicElement(self.order, [-a for a in self.coeffs])

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        ctx = self.ctx
        phi = ctx.phi
        conv = [_Q0] * (2 * phi - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        conv[i + j] += a * b
        out = list(conv[:phi])
        for m in range(2 * phi - 2, phi - 1, -1):
            c = conv[m]
            if c:
                for j, t in enumerate(ctx.reduction_rows[m - phi]):
                    if t:
                        out[j] += c * t
        return CyclotomicElement(self.order, out)

    __rmul__ = __mul__

    def inverse(self) -> "CyclotomicElement":
        """Field inverse via extended Euclid against Phi_order."""
        if not any(self.coeffs):
            raise ZeroDivisionError("inverse of zero cyclotomic element")
        # work over Q[x]: r0 = Phi, r1 = self
        r0 = [_Q(c) for c in self.ctx.poly]
        r1 = list(self.coeffs)
        s0, s1 = [_Q0], [_Q1]

        def deg(p):
            d = len(p) - 1
            while d >= 0 and not p[d]:
                d -= 1
            return d

        while True:
            d1 = deg(r1)
            if d1 < 0:
                raise ZeroDivisionError("element not invertible (unexpected)")
            if d1 == 0:
                inv = 1 / r1[0]
                vec = [c * inv for c in s1] + [_Q0] * self.ctx.phi
                return CyclotomicElement(self.order, vec[: self.ctx.phi])
            d0 = deg(r0)
            if d0 < d1:
                r0, r1, s0, s1 = r1, r0, s1, s0
                continue
            factor = r0[d0] / r1[d1]
            shift = d0 - d1
            for i in range(d1 + 1):
                r0[i + shift] -= factor * r1[i]
            s1_shifted = [_Q0] * shift + s1
            if len(s0) < len(s1_shifted):
                s0 = s0 + [_Q0] * (len(s1_shifted) - len(s0))
            for i, c in enumerate(s1_shifted):
                s0[i] -= factor * c

    def __truediv__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = CyclotomicElement.one(self.order)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)) or type(other) is type(_Q1):
            other = CyclotomicElement.from_rational(self.order, other)
        if not isinstance(other, CyclotomicElement):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    # -- Galois, embedding, rationality -------------------------------------

    def galois(self, k: int) -> "CyclotomicElement":
        """Apply the automorphism zeta -> zeta^k; requires gcd(k, order) = 1."""
        import math

        if math.gcd(k, self.order) != 1:
            raise ValueError(f"k={k} not coprime to order {self.order}")
        ctx = self.ctx
        out = [_Q0] * ctx.phi
        for i, c in enumerate(self.coeffs):
            if c:
                for j, t in enumerate(ctx.power_table[(i * k) % self.order]):
                    if t:
                        out[j] += c * t
        return CyclotomicElement(self.order, out)

    def conjugate(self) -> "CyclotomicElement":
        return self.galois(-1 % self.order)

    def embed(self) -> complex:
        """Numerical value at zeta = exp(2*pi*i/order)."""
        ctx = self.ctx
        return sum(float(c) * w for c, w in zip(self.coeffs, ctx.embed_powers) if c)

    def is_rational(self):
        """The exact rational value if the element is rational, else None."""
        if any(self.coeffs[1:]):
            return None
        return self.coeffs[0]

    def is_integer(self):
        """The exact int value if the element is a rational integer, else None."""
        q = self.is_rational()
        if q is None or q.denominator != 1:
            return None
        return int(q)

    def is_real(self) -> bool:
        return self == self.conjugate()

    def abs_squared(self) -> "CyclotomicElement":
        return self * self.conjugate()

    # -- serialization -------------------------------------------------------

    def coeff_strings(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_coeff_strings(cls, order: int, strings) -> "CyclotomicElement":
        return cls(order, [_Q(s) for s in strings])

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}*z^{i}" if i else f"{c}")
        body = " + ".join(terms) if terms else "0"
        return f"Cyc[{self.order}]({body})"


def rational(value) -> "_Q":
    """The exact rational type in use (gmpy2.mpq when available)."""
    return _Q(value)
