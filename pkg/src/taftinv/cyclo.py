"""Exact arithmetic in the cyclotomic field Q(zeta_N).

Elements are residues of Q[t] modulo the N-th cyclotomic polynomial, stored
as integer numerators over one positive common denominator and reduced
eagerly, so equality is plain tuple comparison.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from numbers import Rational

__all__ = [
    "CycNum",
    "RootOfUnity",
    "cyclotomic_polynomial",
    "primitive_root",
    "order_of",
    "gauss_binomial",
    "divisors",
]


def divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _poly_divexact(num: list[int], den: list[int]) -> list[int]:
    # exact division of integer polynomials, den monic up to sign
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    lead = den[-1]
    for i in range(len(out) - 1, -1, -1):
        c, r = divmod(num[i + len(den) - 1], lead)
        if r:
            raise ArithmeticError("inexact polynomial division")
        out[i] = c
        if c:
            for j, dc in enumerate(den):
                num[i + j] -= c * dc
    if any(num[: len(den) - 1]):
        raise ArithmeticError("inexact polynomial division")
    return out


@lru_cache(maxsize=None)
def _cyclotomic(n: int) -> tuple[int, ...]:
    num = [-1] + [0] * (n - 1) + [1]
    for d in divisors(n)[:-1]:
        num = _poly_divexact(num, list(_cyclotomic(d)))
    return tuple(num)


def cyclotomic_polynomial(n: int) -> list[int]:
    """Coefficients of Phi_n, lowest degree first."""
    if n < 1:
        raise ValueError("cyclotomic_polynomial needs n >= 1")
    return list(_cyclotomic(n))


class _Level:
    """Read-only reduction data for one field Q(zeta_N)."""

    def __init__(self, level: int):
        self.level = level
        self.poly = _cyclotomic(level)
        self.phi = len(self.poly) - 1
        # rows[e] = t^(phi + e) mod Phi_N, for 0 <= e <= phi - 2
        rows = []
        cur = [-c for c in self.poly[:-1]]
        for _ in range(max(self.phi - 1, 0)):
            rows.append(tuple(cur))
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                for i in range(self.phi):
                    cur[i] -= top * self.poly[i]
        self.rows = rows

    def reduce(self, coeffs: list[int]) -> list[int]:
        phi = self.phi
        out = coeffs[:phi] + [0] * max(0, phi - len(coeffs))
        if len(coeffs) > phi:
            # coefficients beyond 2*phi - 2 only arise from raw inputs
            if len(coeffs) > 2 * phi - 1:
                return self.reduce_long(coeffs)
            for e, c in enumerate(coeffs[phi:]):
                if c:
                    row = self.rows[e]
                    for i in range(phi):
                        out[i] += c * row[i]
        return out

    def reduce_long(self, coeffs: list[int]) -> list[int]:
        coeffs = list(coeffs)
        phi = self.phi
        for top in range(len(coeffs) - 1, phi - 1, -1):
            c = coeffs[top]
            if c:
                coeffs[top] = 0
                base = top - phi
                for i in range(phi):
                    coeffs[base + i] -= c * self.poly[i]
        return coeffs[:phi] + [0] * max(0, phi - len(coeffs))


@lru_cache(maxsize=None)
def _level(n: int) -> _Level:
    return _Level(n)


class CycNum:
    """An element of Q(zeta_N) in canonical reduced form.

    ``nums`` holds integer numerators of the coefficients of
    1, t, ..., t^(phi-1); ``den`` is their common positive denominator.
    """

    __slots__ = ("level", "nums", "den", "_hash")

    def __init__(self, level: int, coeffs=(), den: int = 1):
        if level < 1:
            raise ValueError("level must be positive")
        lv = _level(level)
        fr = [Fraction(c) for c in coeffs]
        if any(f.denominator != 1 for f in fr):
            common = 1
            for f in fr:
                common = common * f.denominator // gcd(common, f.denominator)
            ints = [int(f * common) for f in fr]
            den *= common
        else:
            ints = [int(f) for f in fr]
        self._set(level, lv.reduce(ints), den)

    def _set(self, level: int, nums: list[int], den: int) -> None:
        if den < 0:
            nums = [-x for x in nums]
            den = -den
        g = den
        for x in nums:
            if x:
                g = gcd(g, x)
                if g == 1:
                    break
        if g != 1:
            nums = [x // g for x in nums]
            den //= g
        self.level = level
        self.nums = tuple(nums)
        self.den = den
        self._hash = None

    @classmethod
    def _raw(cls, level: int, nums: list[int], den: int) -> CycNum:
        obj = cls.__new__(cls)
        obj._set(level, nums, den)
        return obj

    @classmethod
    def rational(cls, level: int, value) -> CycNum:
        f = Fraction(value)
        phi = _level(level).phi
        return cls._raw(level, [f.numerator] + [0] * (phi - 1), f.denominator)

    @classmethod
    def from_polynomial(cls, level: int, coeffs) -> CycNum:
        """Class of sum coeffs[i] * t^i, any length."""
        return cls(level, coeffs)

    @property
    def phi(self) -> int:
        return len(self.nums)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(x, self.den) for x in self.nums)

    def is_zero(self) -> bool:
        return not any(self.nums)

    def is_rational(self) -> bool:
        return not any(self.nums[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self.nums[0], self.den)

    def _coerce(self, other) -> CycNum | None:
        if isinstance(other, CycNum):
            if other.level != self.level:
                if other.is_rational():
                    return CycNum.rational(self.level, other.to_fraction())
                if self.is_rational():
                    return None
                raise ValueError(
                    f"cannot mix Q(zeta_{self.level}) and Q(zeta_{other.level})"
                )
            return other
        if isinstance(other, (int, Rational)):
            return CycNum.rational(self.level, other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            if isinstance(other, CycNum):
                return other.__add__(self)
            return NotImplemented
        if self.den == o.den:
            return CycNum._raw(self.level, [a + b for a, b in zip(self.nums, o.nums)], self.den)
        d1, d2 = self.den, o.den
        return CycNum._raw(
            self.level, [a * d2 + b * d1 for a, b in zip(self.nums, o.nums)], d1 * d2
        )

    __radd__ = __add__

    def __neg__(self):
        return CycNum._raw(self.level, [-a for a in self.nums], self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            if isinstance(other, CycNum):
                return (-other).__add__(self)
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            if isinstance(other, CycNum):
                return other.__mul__(self)
            return NotImplemented
        a, b = self.nums, o.nums
        phi = len(a)
        if not any(b[1:]):
            c = b[0]
            return CycNum._raw(self.level, [x * c for x in a], self.den * o.den)
        if not any(a[1:]):
            c = a[0]
            return CycNum._raw(self.level, [x * c for x in b], self.den * o.den)
        prod = [0] * (2 * phi - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return CycNum._raw(self.level, _level(self.level).reduce(prod), self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> CycNum:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in cyclotomic field")
        if self.is_rational():
            return CycNum.rational(self.level, 1 / self.to_fraction())
        # extended Euclid in Q[t] against Phi_N
        lv = _level(self.level)
        r0 = [Fraction(c) for c in lv.poly]
        r1 = _trim([Fraction(x, self.den) for x in self.nums])
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while len(r1) > 1 or r1[0] == 0:
            q, r = _fdivmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _fsub(s0, _fmul(q, s1))
        inv = 1 / r1[0]
        return CycNum(self.level, [c * inv for c in s1])

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = CycNum.rational(self.level, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, CycNum):
            if other.level != self.level:
                if self.is_rational() and other.is_rational():
                    return self.to_fraction() == other.to_fraction()
                return False
            return self.nums == other.nums and self.den == other.den
        if isinstance(other, (int, Rational)):
            return self.is_rational() and Fraction(self.nums[0], self.den) == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(Fraction(self.nums[0], self.den))
            else:
                self._hash = hash((self.level, self.nums, self.den))
        return self._hash

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return f"CycNum({self.level}, {str(self)!r})"

    def __str__(self):
        return self.to_string("r")

    def to_string(self, symbol: str = "r") -> str:
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                mono = symbol if i == 1 else f"{symbol}^{i}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        if not parts:
            return "0"
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


def _trim(p: list[Fraction]) -> list[Fraction]:
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _fmul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _fsub(a, b):
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]
    return _trim([Fraction(x) for x in out])


def _fdivmod(a, b):
    a = list(a)
    q = [Fraction(0)] * max(1, len(a) - len(b) + 1)
    lead = b[-1]
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1] / lead
        q[i] = c
        if c:
            for j, y in enumerate(b):
                a[i + j] -= c * y
    return _trim(q), _trim(a[: len(b) - 1] or [Fraction(0)])


def primitive_root(n: int) -> CycNum:
    """The class of t in Q[t]/Phi_n."""
    if n < 1:
        raise ValueError("primitive_root needs n >= 1")
    return CycNum(n, [0, 1])


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def order_of(c: CycNum) -> int | None:
    """Multiplicative order of c, or None when c is not a root of unity."""
    if c.is_zero():
        raise ValueError("order_of(0) is undefined")
    bound = _lcm(2, c.level)
    one = CycNum.rational(c.level, 1)
    if c ** bound != one:
        return None
    for d in divisors(bound):
        if c ** d == one:
            return d
    return None  # pragma: no cover


class RootOfUnity:
    """exp(2*pi*i * exponent/order), kept in lowest terms with 0 <= exponent < order."""

    __slots__ = ("exponent", "order")

    def __init__(self, exponent: int, order: int):
        if order < 1:
            raise ValueError("order must be positive")
        f = Fraction(exponent, order) % 1
        self.exponent = f.numerator
        self.order = f.denominator

    @classmethod
    def from_fraction(cls, f: Fraction) -> RootOfUnity:
        f = Fraction(f)
        return cls(f.numerator, f.denominator)

    @property
    def angle(self) -> Fraction:
        return Fraction(self.exponent, self.order)

    def __mul__(self, other: RootOfUnity) -> RootOfUnity:
        return RootOfUnity.from_fraction(self.angle + other.angle)

    def __pow__(self, e: int) -> RootOfUnity:
        return RootOfUnity.from_fraction(self.angle * e)

    def inverse(self) -> RootOfUnity:
        return self ** -1

    def is_power_of(self, other: RootOfUnity) -> bool:
        # the powers of a root of order m are exactly the m-th roots of unity
        return other.order % self.order == 0

    def to_cycnum(self, level: int) -> CycNum:
        if level % self.order:
            raise ValueError(f"root of order {self.order} does not lie in Q(zeta_{level})")
        return primitive_root(level) ** (self.exponent * (level // self.order))

    def __eq__(self, other):
        return (
            isinstance(other, RootOfUnity)
            and self.exponent == other.exponent
            and self.order == other.order
        )

    def __hash__(self):
        return hash((self.exponent, self.order))

    def __repr__(self):
        return f"RootOfUnity({self.exponent}, {self.order})"


@lru_cache(maxsize=4096)
def _gauss_row(m: int, q: CycNum) -> tuple[CycNum, ...]:
    one = CycNum.rational(q.level, 1)
    if m == 0:
        return (one,)
    prev = _gauss_row(m - 1, q)
    row = [one]
    qp = one
    # [m, r] = [m-1, r] + q^(m-r) [m-1, r-1]; q^(m-r) runs downward, so precompute
    powers = [one]
    for _ in range(m):
        qp = qp * q
        powers.append(qp)
    for r in range(1, m + 1):
        left = prev[r] if r < len(prev) else CycNum.rational(q.level, 0)
        row.append(left + powers[m - r] * prev[r - 1])
    return tuple(row)


def gauss_binomial(m: int, r: int, q) -> CycNum:
    """Gaussian binomial [m choose r]_q via the q-Pascal recurrence.

    Never divides, so it is valid when q is a root of unity.
    """
    if not isinstance(q, CycNum):
        q = CycNum.rational(1, q)
    if m < 0 or r < 0:
        raise ValueError("gauss_binomial needs non-negative m and r")
    if r > m:
        return CycNum.rational(q.level, 0)
    if m > 200:
        # iterate to keep the recursion in _gauss_row shallow
        for j in range(0, m, 200):
            _gauss_row(j, q)
    return _gauss_row(m, q)[r]
