"""Hilbert and trace series as rational functions in t.

Molien averaging over <g> acting on A^x, Stanley's functional-equation test,
homological determinants, the odd-order congruence and the Gorenstein table.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .cyclo import CycNum
from .freealg import ActionSpec, superpotential_check

# -- polynomials as coefficient lists, index = power of t ------------------------


def _trim(p: list) -> list:
    p = list(p)
    while p and not p[-1]:
        p.pop()
    return p


def padd(a: list, b: list) -> list:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        if c:
            out[i] = out[i] + c
    return _trim(out)


def pscale(a: list, c) -> list:
    return _trim([x * c for x in a])


def psub(a: list, b: list) -> list:
    return padd(a, pscale(b, -1))


def pmul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] = x * y + out[i + j]
    return _trim(out)


def pdivmod(a: list, b: list) -> tuple[list, list]:
    b = _trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = _trim(a)
    if len(a) < len(b):
        return [], a
    q = [0] * (len(a) - len(b) + 1)
    r = list(a)
    lead = b[-1]
    for i in range(len(q) - 1, -1, -1):
        c = r[i + len(b) - 1]
        if not c:
            continue
        c = c / lead if not isinstance(c, int) or not isinstance(lead, int) else Fraction(c, lead)
        q[i] = c
        for j, y in enumerate(b):
            if y:
                r[i + j] = r[i + j] - c * y
    return _trim(q), _trim(r)


def pexactdiv(a: list, b: list) -> list:
    q, r = pdivmod(a, b)
    if r:
        raise ArithmeticError("inexact polynomial division")
    return q


def pgcd(a: list, b: list) -> list:
    a, b = _trim(a), _trim(b)
    while b:
        a, b = b, pdivmod(a, b)[1]
    if not a:
        return [1]
    lead = a[-1]
    return [c / lead if not isinstance(c, int) else Fraction(c) / lead for c in a]


def one_minus(e: int, coef=1) -> list:
    """1 - coef t^e."""
    if e == 0:
        return _trim([1 - coef])
    p = [0] * (e + 1)
    p[0] = 1
    p[e] = -coef
    return p


def valuation(p: list) -> int:
    return next(i for i, c in enumerate(p) if c)


def _poly_text(p: list, var: str = "t") -> str:
    p = _trim(p)
    if not p:
        return "0"
    out = ""
    for i, c in enumerate(p):
        if not c:
            continue
        if isinstance(c, CycNum):
            if c.is_rational:
                c = c.to_fraction()
            else:
                cs = f"({c})"
                mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
                term = cs if not mono else f"{cs}*{mono}"
                out += term if not out else f" + {term}"
                continue
        mag = abs(c)
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        body = str(mag) if not mono else (mono if mag == 1 else f"{mag}*{mono}")
        if not out:
            out = ("-" if c < 0 else "") + body
        else:
            out += (" - " if c < 0 else " + ") + body
    return out


# -- rational functions --------------------------------------------------------


class RatFn:
    """num / den in t.  ``factors`` optionally records den = prod (1 - t^e)."""

    __slots__ = ("num", "den", "factors")

    def __init__(self, num, den=(1,), factors: tuple[int, ...] | None = None):
        self.num = _trim(num)
        self.den = _trim(den)
        if not self.den:
            raise ZeroDivisionError("zero denominator")
        self.factors = tuple(sorted(factors)) if factors is not None else None

    @classmethod
    def product_form(cls, num: list, exps) -> RatFn:
        den = [1]
        for e in exps:
            den = pmul(den, one_minus(e))
        return cls(num, den, tuple(exps))

    @classmethod
    def from_text(cls, num: list, exps) -> RatFn:
        return cls.product_form(num, exps)

    def __add__(self, other: RatFn) -> RatFn:
        if self.den == other.den:
            return RatFn(padd(self.num, other.num), self.den, self.factors)
        return RatFn(
            padd(pmul(self.num, other.den), pmul(other.num, self.den)), pmul(self.den, other.den)
        )

    def __neg__(self) -> RatFn:
        return RatFn(pscale(self.num, -1), self.den, self.factors)

    def __sub__(self, other: RatFn) -> RatFn:
        return self + (-other)

    def __mul__(self, other) -> RatFn:
        if isinstance(other, RatFn):
            return RatFn(pmul(self.num, other.num), pmul(self.den, other.den))
        return RatFn(pscale(self.num, other), self.den, self.factors)

    __rmul__ = __mul__

    def __truediv__(self, other) -> RatFn:
        if isinstance(other, RatFn):
            if not other.num:
                raise ZeroDivisionError("division by the zero rational function")
            return RatFn(pmul(self.num, other.den), pmul(self.den, other.num))
        inv = Fraction(1, other) if isinstance(other, int) else 1 / other
        return RatFn(pscale(self.num, inv), self.den, self.factors)

    def __eq__(self, other):
        if not isinstance(other, RatFn):
            return NotImplemented
        return not psub(pmul(self.num, other.den), pmul(other.num, self.den))

    def __hash__(self):
        raise TypeError("RatFn is not hashable")

    def is_zero(self) -> bool:
        return not self.num

    def series(self, order: int) -> list:
        """Coefficients of t^0 .. t^order (requires den(0) != 0)."""
        d0 = self.den[0]
        if not d0:
            raise ValueError("denominator vanishes at t = 0")
        inv = Fraction(1, d0) if isinstance(d0, int) else 1 / d0
        out = []
        for i in range(order + 1):
            acc = self.num[i] if i < len(self.num) else 0
            for j in range(1, min(i, len(self.den) - 1) + 1):
                if self.den[j] and out[i - j]:
                    acc = acc - self.den[j] * out[i - j]
            out.append(acc * inv if acc else 0)
        return [int(c) if isinstance(c, Fraction) and c.denominator == 1 else c for c in out]

    def at_inverse(self) -> RatFn:
        """h(1/t), with both sides multiplied through by t^max(deg)."""
        top = max(len(self.num), len(self.den)) - 1
        num = [0] * (top + 1)
        den = [0] * (top + 1)
        for i, c in enumerate(self.num):
            num[top - i] = c
        for i, c in enumerate(self.den):
            den[top - i] = c
        return RatFn(num, den)

    def normalize(self) -> RatFn:
        g = pgcd(self.num, self.den)
        num, den = self.num, self.den
        if len(g) > 1:
            num, den = pexactdiv(num, g), pexactdiv(den, g)
        lead = den[0] if den[0] else den[-1]
        if lead != 1:
            inv = Fraction(1, lead) if isinstance(lead, int) else 1 / lead
            num, den = pscale(num, inv), pscale(den, inv)
        return RatFn([_clean(c) for c in num], [_clean(c) for c in den])

    def cancel_factors(self) -> RatFn:
        """Cancel whole (1 - t^e) factors of a product-form denominator from the numerator."""
        if self.factors is None:
            return self
        num = self.num
        keep = []
        for e in sorted(self.factors, reverse=True):
            q, r = pdivmod(num, one_minus(e))
            if not r:
                num = q
            else:
                keep.append(e)
        num = [_clean(c) for c in num]
        return RatFn.product_form(num, sorted(keep))

    def is_rational(self) -> bool:
        return all(
            not isinstance(c, CycNum) or c.is_rational for c in self.num + self.den
        )

    def to_rational(self) -> RatFn:
        if not self.is_rational():
            raise ValueError("rational function has non-rational coefficients")
        conv = lambda c: _clean(c.to_fraction() if isinstance(c, CycNum) else c)  # noqa: E731
        return RatFn([conv(c) for c in self.num], [conv(c) for c in self.den], self.factors)

    def to_text(self) -> str:
        num = _poly_text(self.num)
        if self.factors is not None:
            if not self.factors:
                return num
            den = "".join(f"({_poly_text(one_minus(e))})" for e in self.factors)
            return f"{num} / {den}" if len(self.num) <= 1 else f"({num}) / {den}"
        if self.den == [1]:
            return num
        return f"({num}) / ({_poly_text(self.den)})"

    def __repr__(self):
        return f"RatFn({self.to_text()})"


def _clean(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


# -- Stanley ------------------------------------------------------------------


@dataclass(frozen=True)
class GorensteinVerdict:
    gorenstein: bool
    sign: int | None = None
    exponent: int | None = None

    def describe(self) -> str:
        if not self.gorenstein:
            return "not Gorenstein"
        s = "+" if self.sign > 0 else "-"
        return f"Gorenstein: h(1/t) = {s}t^{self.exponent} h(t)"


def stanley_test(h: RatFn) -> GorensteinVerdict:
    """Decide whether h(1/t) = +-t^m h(t) identically."""
    if not h.num:
        raise ValueError("the zero function has no functional equation")
    vn, vd = valuation(h.num), valuation(h.den)
    n0, d0 = h.num[vn:], h.den[vd:]
    p = pmul(n0[::-1], d0)
    q = pmul(d0[::-1], n0)
    c = p[0] / q[0] if not (isinstance(p[0], int) and isinstance(q[0], int)) else Fraction(p[0], q[0])
    if psub(p, pscale(q, c)):
        return GorensteinVerdict(False)
    if c not in (1, -1):
        return GorensteinVerdict(False)
    m = 2 * (vd - vn) + (len(d0) - 1) - (len(n0) - 1)
    return GorensteinVerdict(True, int(c), m)


# -- traces on A^x ------------------------------------------------------------------


def _require_case1(spec: ActionSpec) -> None:
    if spec.case != 1:
        raise ValueError("expected a case-1 spec; call spec.normalized()")


def trace_factors(spec: ActionSpec) -> tuple[list[tuple[int, int, int]], list[tuple[int, int]]]:
    """Trace of g^m on A^x as data in omega-exponents.

    Returns (numerator terms (a, e, c) meaning c omega^(a m) t^e,
    denominator factors (a, e) meaning 1 - omega^(a m) t^e).
    """
    n, k = spec.n, spec.k
    if spec.regime == "n":
        return [(0, 0, 1)], [(k + 1, 1), (2 * k + 1, 2), (0, n)]
    return (
        [(0, 0, 1), (-2 * (k + 1), 4 * n - 2, -1)],
        [(k + 1, 1), (2 * k + 1, 2), (-(k + 1), 2 * n - 1), (0, 2 * n)],
    )


def trace_series_Ax(spec: ActionSpec, m: int) -> RatFn:
    """Closed-form trace of g^m on A^x, coefficients in Q(zeta_2n)."""
    _require_case1(spec)
    w = spec.omega
    nums, dens = trace_factors(spec)
    num: list = []
    for a, e, c in nums:
        num = padd(num, [0] * e + [w ** (a * m) * c])
    den: list = [w**0]
    for a, e in dens:
        den = pmul(den, one_minus(e, w ** (a * m)))
    return RatFn(num, den)


def brute_trace(spec: ActionSpec, m: int, max_degree: int) -> list:
    """Trace of g^m on the computed kernels of x, degree by degree."""
    from .invariants import bidegrees, block_kernel
    from .taft import g_exponent

    _require_case1(spec)
    w = spec.omega
    out = []
    for d in range(max_degree + 1):
        acc = CycNum.rational(spec.level, 0)
        for p, q in bidegrees(d):
            dim = len(block_kernel(spec, p, q, "x-only"))
            if dim:
                acc = acc + w ** (m * g_exponent(spec, p, q)) * dim
        out.append(acc)
    return out


def hilbert_Ax(spec: ActionSpec) -> RatFn:
    """Hilbert series of A^x in product form with integer coefficients."""
    _require_case1(spec)
    n = spec.n
    if spec.regime == "n":
        return RatFn.product_form([1], (1, 2, n))
    return RatFn.product_form(one_minus(4 * n - 2), (1, 2, 2 * n - 1, 2 * n))


# -- Molien ------------------------------------------------------------------


def _common_denominator(spec: ActionSpec) -> list[int]:
    n = spec.n
    _, dens = trace_factors(spec)
    return [e * (n // gcd(a % n, n)) for a, e in dens]


def molien(spec: ActionSpec, method: str = "character") -> RatFn:
    """Hilbert series of A^T = (A^x)^g: the average over m of the traces of g^m."""
    _require_case1(spec)
    if method == "character":
        return _molien_character(spec)
    if method == "cyclotomic":
        return _molien_cyclotomic(spec)
    raise ValueError("method must be 'character' or 'cyclotomic'")


def _molien_character(spec: ActionSpec) -> RatFn:
    # Work in Z[C_n][t]: a term is (omega-exponent mod n, t-exponent) -> integer.
    # Each 1/(1 - r^a t^e) becomes (sum_{i<o} r^(ai) t^(ei)) / (1 - t^(eo)) with r^(ao) = 1;
    # averaging over m keeps the r^0 part.
    n = spec.n
    nums, dens = trace_factors(spec)
    poly: dict[tuple[int, int], int] = {}
    for a, e, c in nums:
        key = (a % n, e)
        poly[key] = poly.get(key, 0) + c
    exps = []
    for a, e in dens:
        o = n // gcd(a % n, n)
        exps.append(e * o)
        new: dict[tuple[int, int], int] = {}
        for (x, t), c in poly.items():
            for i in range(o):
                key = ((x + a * i) % n, t + e * i)
                new[key] = new.get(key, 0) + c
        poly = {k: v for k, v in new.items() if v}
    top = max((t for _, t in poly), default=0)
    num = [0] * (top + 1)
    for (x, t), c in poly.items():
        if x == 0:
            num[t] += c
    return RatFn.product_form(num, exps)


def _molien_cyclotomic(spec: ActionSpec) -> RatFn:
    """Literal average of trace_series_Ax over m, on the common denominator."""
    n = spec.n
    exps = _common_denominator(spec)
    common = [1]
    for e in exps:
        common = pmul(common, one_minus(e))
    total: list = []
    for m in range(n):
        tr = trace_series_Ax(spec, m)
        total = padd(total, pmul(tr.num, pexactdiv(common, tr.den)))
    avg = RatFn(pscale(total, Fraction(1, n)), common, tuple(exps))
    if not avg.is_rational():
        raise ArithmeticError("Molien average has non-rational coefficients")
    return avg.to_rational()


# -- homological determinants ------------------------------------------------


def trace_leading_term(h: RatFn) -> tuple[object, int]:
    """(c, e) with h = c t^e + lower order terms as t -> infinity."""
    n, d = _trim(h.num), _trim(h.den)
    if not n:
        raise ValueError("zero function")
    c = n[-1] / d[-1] if not (isinstance(n[-1], int) and isinstance(d[-1], int)) else Fraction(n[-1], d[-1])
    return c, (len(n) - 1) - (len(d) - 1)


def hdet_from_trace(h: RatFn, dimension: int):
    """c with Tr = (-1)^dimension c^-1 t^-l + lower terms."""
    lead, _ = trace_leading_term(h)
    return (-1) ** dimension / lead


def hdet_ax(spec: ActionSpec) -> CycNum:
    """Homological determinant of g on A^x, with the sign/inverse convention giving omega^-(4k+3).

    The leading term of Tr(g, t) at infinity is -omega^-(4k+3) t^-4; the value
    returned is (-1)^3 times that coefficient.
    """
    _require_case1(spec)
    if spec.regime != "2n":
        raise ValueError("hdet_ax is defined here for the order-2n regime")
    lead, _ = trace_leading_term(trace_series_Ax(spec, 1))
    return -lead


def trace_series_A(spec: ActionSpec, m: int = 1) -> RatFn:
    """Trace of g^m on A: g is diagonal on the PBW generators u, z, v."""
    _require_case1(spec)
    w, k = spec.omega, spec.k
    den = [w**0]
    for a, e in ((k + 1, 1), (2 * k + 1, 2), (k, 1)):
        den = pmul(den, one_minus(e, w ** (a * m)))
    return RatFn([w**0], den)


def hdet_a(spec: ActionSpec) -> CycNum:
    """g-eigenvalue of the superpotential (x kills it)."""
    spec = spec.normalized()
    x_kills, lam = superpotential_check(spec)
    if not x_kills:
        raise ArithmeticError("x does not annihilate the superpotential")
    return lam


# -- order-n regime ------------------------------------------------------------


@dataclass(frozen=True)
class ReflectionClass:
    case: int
    d: int
    e: int


def reflection_classify(n: int, k: int) -> ReflectionClass:
    if n < 2 or not 0 <= k < n:
        raise ValueError("need n >= 2 and 0 <= k < n")
    d, e = gcd(k + 1, n), gcd(2 * k + 1, n)
    if d * e == 1:
        case = 1
    elif d * e == n:
        case = 2
    else:
        case = 3
    return ReflectionClass(case, d, e)


def gorenstein_congruence(n: int, k: int) -> bool:
    d, e = gcd(k + 1, n), gcd(2 * k + 1, n)
    return ((k + 1) * e + (2 * k + 1) * d) % n == 0


def restricted_partition(parts, d: int) -> int:
    """Number of ways to write d as a nonnegative combination of the listed parts."""
    parts = list(parts)
    if not parts:
        raise ValueError("the part list must be nonempty")
    if any(p <= 0 for p in parts):
        raise ValueError("parts must be positive")
    if d < 0:
        return 0
    ways = [1] + [0] * d
    for p in parts:
        for i in range(p, d + 1):
            ways[i] += ways[i - p]
    return ways[d]


# -- closed forms stated for particular families -------------------------------


def known_closed_form(spec: ActionSpec) -> tuple[str, RatFn] | None:
    """Closed-form Hilbert series of A^T where one is known, with a label."""
    n, k = spec.n, spec.k
    if spec.regime == "n":
        return None
    if k == n - 1:
        return "k = n-1", RatFn.product_form(one_minus(4 * n - 2), (1, 2 * n - 1, 2 * n, 2 * n))
    if n % 2 == 1 and k == (n - 1) // 2:
        return "n odd, k = (n-1)/2", RatFn.product_form(one_minus(4 * n), (2, n, 2 * n, 2 * n))
    if n == 2 and k == 0:
        num = [1, 0, 0, 0, 0, 0, -1, -1, -2, -1, 0, 2, 2, 2, 1, -1, -1, -1]
        return "n = 2, k = 0", RatFn.product_form(num, (2, 3, 4, 4, 4, 5))
    if n % 4 == 2 and n >= 3 and (4 * k + 2) % n == 0:
        if (n % 8 == 6 and 4 * k == n - 2) or (n % 8 == 2 and 4 * k == 3 * n - 2):
            return "n = 2 mod 4, gcd(n, k+1) = 2", RatFn.product_form(
                one_minus(4 * n), (4, n // 2, 2 * n, 2 * n)
            )
        num = [0] * (5 * n + 5)
        num[0], num[n + 4], num[4 * n], num[5 * n + 4] = 1, -1, -1, 1
        return "n = 2 mod 4, gcd(n, k+1) = 1", RatFn.product_form(num, (4, n // 2 + 2, n, 2 * n, 2 * n))
    return None


# -- the table --------------------------------------------------------------------


def condition_flag(n: int, k: int) -> str:
    """Which sufficient condition covers the cell: a, b, c or '-'."""
    if k == n - 1:
        return "a"
    if (4 * k + 3) % n == 0:
        return "b"
    if n >= 3 and (4 * k + 2) % n == 0:
        return "c"
    return "-"


@dataclass(frozen=True)
class TableCell:
    n: int
    k: int
    gorenstein: bool
    covered_by: str
    sign: int | None = None
    exponent: int | None = None


def table_cell(n: int, k: int) -> TableCell:
    spec = ActionSpec(n, k, sqrt_choice="principal")
    v = stanley_test(molien(spec))
    return TableCell(n, k, v.gorenstein, condition_flag(n, k), v.sign, v.exponent)


def _cell_args(args):
    return table_cell(*args)


def gorenstein_table(n_max: int, workers: int | None = None) -> list[TableCell]:
    """Verdict for every (n, k) with 2 <= n <= n_max in the order-2n regime."""
    if n_max < 2:
        raise ValueError("n_max must be at least 2")
    cells = [(n, k) for n in range(2, n_max + 1) for k in range(n)]
    if workers is None:
        workers = int(os.environ.get("TAFTINV_WORKERS", "1") or 1)
    if workers > 1:
        from multiprocessing import Pool

        with Pool(workers) as pool:
            return pool.map(_cell_args, cells)
    return [table_cell(n, k) for n, k in cells]


def table_csv(cells: list[TableCell]) -> str:
    lines = ["n,k,gorenstein,covered_by_thm"]
    for c in cells:
        lines.append(f"{c.n},{c.k},{'true' if c.gorenstein else 'false'},{c.covered_by}")
    return "\n".join(lines) + "\n"


def table_grid(cells: list[TableCell]) -> str:
    """Rows n, columns k: '@' covered and Gorenstein, '+' Gorenstein, '.' neither."""
    n_max = max(c.n for c in cells)
    width = len(str(n_max - 1)) + 1
    head = "n\\k".rjust(4) + "".join(str(k).rjust(width) for k in range(n_max))
    rows = [head]
    by_n: dict[int, list[TableCell]] = {}
    for c in cells:
        by_n.setdefault(c.n, []).append(c)
    for n in sorted(by_n):
        marks = []
        for c in sorted(by_n[n], key=lambda c: c.k):
            mark = "." if not c.gorenstein else ("@" if c.covered_by != "-" else "+")
            marks.append(mark.rjust(width))
        rows.append(str(n).rjust(4) + "".join(marks))
    rows.append("@ Gorenstein and covered by a sufficient condition; + Gorenstein; . not Gorenstein")
    return "\n".join(rows) + "\n"
