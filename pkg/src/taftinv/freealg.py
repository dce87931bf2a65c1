"""Taft-algebra actions on the free algebra k<u, v> and their classification.

The action of a Taft pair (g, x) on degree one is given by 2x2 matrices whose
columns are the images of u and v.  g extends as an algebra automorphism and
x as a (g, 1)-skew derivation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd
from typing import Iterable

from .cyclo import CycNum, RootOfUnity, divisors, order_of, primitive_root
from .linalg import in_span, is_zero_matrix, matmul, matpow

LETTERS = "uv"
SQRT_CHOICES = ("principal", "alt")


class ActionError(ValueError):
    pass


class FreeElement:
    """Finite linear combination of words in u, v."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[str, CycNum] | None = None):
        self.terms = {w: c for w, c in (terms or {}).items() if c}

    @classmethod
    def word(cls, w: str, coef) -> FreeElement:
        return cls({w: coef})

    def __add__(self, other: FreeElement) -> FreeElement:
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out[w] + c if w in out else c
        return FreeElement(out)

    def __sub__(self, other: FreeElement) -> FreeElement:
        return self + other.scale(-1)

    def scale(self, c) -> FreeElement:
        return FreeElement({w: c * v for w, v in self.terms.items()})

    def __mul__(self, other: FreeElement) -> FreeElement:
        out: dict[str, CycNum] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                c = c1 * c2
                out[w] = out[w] + c if w in out else c
        return FreeElement(out)

    def __eq__(self, other):
        return isinstance(other, FreeElement) and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def homogeneous(self, d: int) -> FreeElement:
        return FreeElement({w: c for w, c in self.terms.items() if len(w) == d})

    def __repr__(self):
        if not self.terms:
            return "FreeElement(0)"
        body = " + ".join(f"({c})*{w or '1'}" for w, c in sorted(self.terms.items()))
        return f"FreeElement({body})"


Matrix = tuple[tuple[CycNum, CycNum], tuple[CycNum, CycNum]]


@dataclass(frozen=True)
class TaftPair:
    n: int
    omega: CycNum
    gmat: Matrix
    xmat: Matrix

    def letter_image(self, which: str, letter: str) -> FreeElement:
        mat = self.gmat if which == "g" else self.xmat
        col = LETTERS.index(letter)
        return FreeElement({LETTERS[i]: mat[i][col] for i in range(2)})


def _as_matrix(rows) -> Matrix:
    return tuple(tuple(r) for r in rows)  # type: ignore[return-value]


def act_free(pair: TaftPair, which: str, e: FreeElement) -> FreeElement:
    """Act by g (automorphism) or x (skew derivation) on a free-algebra element."""
    if which not in ("g", "x"):
        raise ValueError(f"unknown Taft generator {which!r}")
    level = pair.omega.level
    one = CycNum.rational(level, 1)
    gimg = {c: pair.letter_image("g", c) for c in LETTERS}
    ximg = {c: pair.letter_image("x", c) for c in LETTERS}
    out = FreeElement()
    for w, coef in e.terms.items():
        if which == "g":
            img = FreeElement({"": one})
            for c in w:
                img = img * gimg[c]
        else:
            img = FreeElement()
            prefix = FreeElement({"": one})
            for i, c in enumerate(w):
                img = img + prefix * ximg[c] * FreeElement({w[i + 1 :]: one})
                prefix = prefix * gimg[c]
        out = out + img.scale(coef)
    return out


def relation_elements(alpha: CycNum, beta: CycNum) -> tuple[FreeElement, FreeElement]:
    one = alpha * 0 + 1
    r1 = FreeElement({"vvu": one, "vuv": -alpha, "uvv": -beta})
    r2 = FreeElement({"vuu": one, "uvu": -alpha, "uuv": -beta})
    return r1, r2


def _degree3_vector(e: FreeElement, zero) -> list:
    words = [a + b + c for a in LETTERS for b in LETTERS for c in LETTERS]
    return [e.terms.get(w, zero) for w in words]


@dataclass(frozen=True)
class ValidityReport:
    valid: bool
    failed: str | None = None
    message: str = ""

    def __bool__(self):
        return self.valid


def _matrix_order_is(mat, n: int, zero, one) -> bool:
    ident = [[one, zero], [zero, one]]
    m = [list(r) for r in mat]
    if matpow(m, n, zero, one) != ident:
        return False
    return all(matpow(m, n // p, zero, one) != ident for p in _primes(n))


def _primes(n: int) -> list[int]:
    return [p for p in divisors(n)[1:] if all(p % q for q in range(2, p))]


def is_valid_action(pair: TaftPair, alpha, beta) -> ValidityReport:
    """Check the Taft relations, inner faithfulness and preservation of the
    down-up relations.  Returns the first violated constraint."""
    level = pair.omega.level
    alpha = CycNum.rational(level, 0) + alpha
    beta = CycNum.rational(level, 0) + beta
    if beta.is_zero():
        raise ActionError("beta = 0: the down-up algebra is not noetherian")
    zero, one = CycNum.rational(level, 0), CycNum.rational(level, 1)
    n = pair.n
    g = [list(r) for r in pair.gmat]
    x = [list(r) for r in pair.xmat]

    if order_of(pair.omega) != n or not _matrix_order_is(g, n, zero, one):
        return ValidityReport(False, "g_order", "g must act with order exactly n")
    if not is_zero_matrix(matmul(x, x, zero)):
        return ValidityReport(False, "x_square", "x^2 must vanish on degree one")
    gx = matmul(g, x, zero)
    xg = matmul(x, g, zero)
    if any(a != pair.omega * b for ra, rb in zip(gx, xg) for a, b in zip(ra, rb)):
        return ValidityReport(False, "commutation", "g x = omega x g fails")
    if is_zero_matrix(x):
        return ValidityReport(False, "inner_faithful", "x acts trivially")
    rels = relation_elements(alpha, beta)
    span = [_degree3_vector(r, zero) for r in rels]
    for which in ("g", "x"):
        for idx, r in enumerate(rels, start=1):
            img = act_free(pair, which, r)
            if not in_span(span, _degree3_vector(img, zero)):
                return ValidityReport(
                    False, "relations", f"{which} does not preserve relation r{idx}"
                )
    return ValidityReport(True)


@dataclass(frozen=True)
class ActionSpec:
    """One classified action: case 1 or 2, parameter k, and a square root choice.

    ``omega_exp`` selects omega = zeta^(2*omega_exp) with zeta the fixed
    primitive 2n-th root; the classification itself always uses 1.
    """

    n: int
    k: int
    case: int = 1
    sqrt_choice: str = "principal"
    q: object = None
    omega_exp: int = 1

    def __post_init__(self):
        if self.n < 2:
            raise ActionError("n must be at least 2")
        if not 0 <= self.k < self.n:
            raise ActionError(f"k must lie in [0, {self.n - 1}]")
        if self.case not in (1, 2):
            raise ActionError("case must be 1 or 2")
        if self.sqrt_choice not in SQRT_CHOICES:
            raise ActionError(f"sqrt choice must be one of {SQRT_CHOICES}")
        if gcd(self.omega_exp, self.n) != 1:
            raise ActionError("omega must be a primitive n-th root of unity")
        q = CycNum.rational(self.level, 1) if self.q is None else self.q + CycNum.rational(self.level, 0)
        if q.is_zero():
            raise ActionError("the scale q must be nonzero")
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "omega_exp", self.omega_exp % self.n)

    @property
    def level(self) -> int:
        return 2 * self.n

    @cached_property
    def zeta(self) -> CycNum:
        return primitive_root(self.level)

    @cached_property
    def omega(self) -> CycNum:
        return self.zeta ** (2 * self.omega_exp)

    @property
    def root_exp(self) -> int:
        """zeta-exponent of the chosen root: of omega in case 1, of omega^-1 in case 2."""
        base = self.omega_exp if self.case == 1 else -self.omega_exp
        shift = 0 if self.sqrt_choice == "principal" else self.n
        return (base + shift) % self.level

    @cached_property
    def sqrt_omega(self) -> CycNum:
        e = self.root_exp if self.case == 1 else -self.root_exp
        return self.zeta ** e

    @cached_property
    def alpha(self) -> CycNum:
        w, s, k = self.omega, self.sqrt_omega, self.k
        if self.case == 1:
            return w ** (-(k + 1)) * (1 + s)
        return w ** (k + 1) * (1 + s.inverse())

    @cached_property
    def beta(self) -> CycNum:
        w, s, k = self.omega, self.sqrt_omega, self.k
        if self.case == 1:
            return -(w ** (-2 * (k + 1))) * s
        return -(w ** (2 * (k + 1))) * s.inverse()

    @cached_property
    def eps(self) -> CycNum:
        return self.omega ** (-(self.k + 1)) * self.sqrt_omega

    @cached_property
    def sqrt_order(self) -> int:
        return order_of(self.sqrt_omega)

    @property
    def regime(self) -> str:
        return "n" if self.sqrt_order == self.n else "2n"

    @property
    def gmat(self) -> Matrix:
        w, k = self.omega, self.k
        z = CycNum.rational(self.level, 0)
        if self.case == 1:
            return _as_matrix([[w ** (k + 1), z], [z, w**k]])
        return _as_matrix([[w**k, z], [z, w ** (k + 1)]])

    @property
    def xmat(self) -> Matrix:
        z = CycNum.rational(self.level, 0)
        if self.case == 1:
            return _as_matrix([[z, self.q], [z, z]])
        return _as_matrix([[z, z], [self.q, z]])

    def taft_pair(self) -> TaftPair:
        return TaftPair(self.n, self.omega, self.gmat, self.xmat)

    def normalized(self) -> ActionSpec:
        """Case-1 spec obtained by conjugating with the swap u <-> v."""
        if self.case == 1:
            return self
        return ActionSpec(self.n, self.k, 1, self.sqrt_choice, self.q, self.omega_exp)

    def characteristic_roots(self) -> tuple[RootOfUnity, RootOfUnity]:
        """Roots of t^2 - alpha t - beta as abstract roots of unity."""
        two_n = self.level
        w = 2 * self.omega_exp
        if self.case == 1:
            g1 = -w * (self.k + 1)
            g2 = g1 + self.root_exp
        else:
            g1 = w * (self.k + 1)
            g2 = g1 + self.root_exp
        return RootOfUnity(g1, two_n), RootOfUnity(g2, two_n)

    def describe(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "case": self.case,
            "sqrt": self.sqrt_choice,
            "omega_exp": self.omega_exp,
            "alpha": str(self.alpha),
            "beta": str(self.beta),
            "sqrt_order": self.sqrt_order,
        }


def classify_actions(n: int) -> list[ActionSpec]:
    """All 4n inner-faithful homogeneous actions of T_n (with q = 1)."""
    if n < 2:
        raise ActionError("n must be at least 2")
    return [
        ActionSpec(n, k, case, sq)
        for case in (1, 2)
        for k in range(n)
        for sq in SQRT_CHOICES
    ]


def actions_for_downup(g1: RootOfUnity, g2: RootOfUnity) -> list[ActionSpec]:
    """Actions on the down-up algebra whose characteristic roots are g1, g2.

    Empty when no Taft algebra acts (including g1^-2 g2^2 = 1).
    """
    found: list[ActionSpec] = []
    for a, b in ((g1, g2), (g2, g1)):
        w = (a ** -2) * (b**2)
        n = w.order
        if n < 2 or not a.is_power_of(w):
            continue
        j = w.exponent
        two_n = 2 * n
        s = (b.angle - a.angle) * two_n
        if s.denominator != 1:
            continue  # pragma: no cover - b/a always squares to w
        s = int(s) % two_n
        a_num = int(a.angle * n)
        kp1 = (-a_num * pow(j, -1, n)) % n
        k = (kp1 - 1) % n
        case1 = ActionSpec(n, k, 1, "principal" if s == j % two_n else "alt", omega_exp=j)
        jp = (-j) % n
        case2_choice = "principal" if s == (-jp) % two_n else "alt"
        case2 = ActionSpec(n, k, 2, case2_choice, omega_exp=jp)
        for spec in (case1, case2):
            if spec not in found:
                found.append(spec)
    return found


def superpotential(alpha: CycNum, beta: CycNum) -> FreeElement:
    binv = beta.inverse()
    one = alpha * 0 + 1
    return FreeElement(
        {
            "uvvu": one,
            "uvuv": -alpha,
            "uuvv": -beta,
            "vvuu": -binv,
            "vuvu": alpha * binv,
            "vuuv": one,
        }
    )


def superpotential_check(spec: ActionSpec) -> tuple[bool, CycNum]:
    """(x . w == 0, lambda) where g . w = lambda w for the twisted superpotential w."""
    pair = spec.taft_pair()
    w = superpotential(spec.alpha, spec.beta)
    xw = act_free(pair, "x", w)
    gw = act_free(pair, "g", w)
    word, coef = next(iter(w.terms.items()))
    lam = gw.terms.get(word, CycNum.rational(spec.level, 0)) / coef
    if gw != w.scale(lam):
        raise ActionError("g . w is not proportional to w")
    return (not xw), lam


def random_cycnum(rng, level: int, bound: int = 3) -> CycNum:
    from .cyclo import _level

    phi = _level(level).phi
    while True:
        c = CycNum(level, [Fraction(rng.randint(-bound, bound), rng.randint(1, bound)) for _ in range(phi)])
        if c:
            return c


def perturbations(spec: ActionSpec, rng, count: int) -> Iterable[tuple[str, TaftPair, CycNum, CycNum]]:
    """Random single-entry perturbations of (alpha, beta, gmat, xmat).

    The x-matrix entry carrying the free scale q is left alone: every nonzero
    value there is again a valid action.
    """
    pair = spec.taft_pair()
    scale_pos = (0, 1) if spec.case == 1 else (1, 0)
    slots = ["alpha", "beta"] + [("g", i, j) for i in range(2) for j in range(2)]
    slots += [("x", i, j) for i in range(2) for j in range(2) if (i, j) != scale_pos]
    produced = 0
    while produced < count:
        slot = rng.choice(slots)
        delta = random_cycnum(rng, spec.level)
        alpha, beta = spec.alpha, spec.beta
        g = [list(r) for r in pair.gmat]
        x = [list(r) for r in pair.xmat]
        if slot == "alpha":
            alpha = alpha + delta
        elif slot == "beta":
            beta = beta + delta
            if beta.is_zero():
                continue
        else:
            which, i, j = slot
            target = g if which == "g" else x
            target[i][j] = target[i][j] + delta
        produced += 1
        name = slot if isinstance(slot, str) else f"{slot[0]}[{slot[1]}][{slot[2]}]"
        yield name, TaftPair(spec.n, spec.omega, _as_matrix(g), _as_matrix(x)), alpha, beta
