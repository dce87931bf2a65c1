"""Action of the Taft generators g and x on the PBW basis.

For u^i z^j v^l:

    g . u^i z^j v^l = omega^((k+1)i + (2k+1)j + kl) u^i z^j v^l
    x . u^i z^j v^l = q omega^((k+1)i + (2k+1)j) u^i z^j (lam_l u v^(l-1) + mu_l z v^(l-2))

with lam_m = [m,1] at omega^-1 and mu_m = omega^k [m,2] at sqrt(omega)^-1.
``act_x_recursive`` recomputes x from the twisted Leibniz rule only.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .cyclo import CycNum, gauss_binomial
from .downup import DownUpAlgebra, Mono, PBWElement, algebra, bidegree_basis, graded_basis
from .freealg import ActionSpec


def _case1(spec: ActionSpec) -> ActionSpec:
    if spec.case != 1:
        raise ValueError("expected a case-1 spec; call spec.normalized()")
    return spec


def g_eigenvalue(spec: ActionSpec, mono: Mono) -> CycNum:
    i, j, l = mono
    k = spec.k
    return spec.omega ** ((k + 1) * i + (2 * k + 1) * j + k * l)


def g_exponent(spec: ActionSpec, p: int, q: int) -> int:
    """g acts on bidegree (p, q) by omega to this power (mod n)."""
    return ((spec.k + 1) * p + spec.k * q) % spec.n


@lru_cache(maxsize=None)
def lam(spec: ActionSpec, m: int) -> CycNum:
    return gauss_binomial(m, 1, spec.omega.inverse())


@lru_cache(maxsize=None)
def mu(spec: ActionSpec, m: int) -> CycNum:
    return spec.omega**spec.k * gauss_binomial(m, 2, spec.sqrt_omega.inverse())


def act_g(spec: ActionSpec, e: PBWElement) -> PBWElement:
    _case1(spec)
    return PBWElement({m: c * g_eigenvalue(spec, m) for m, c in e.terms.items()})


def x_on_monomial(spec: ActionSpec, mono: Mono) -> dict[Mono, CycNum]:
    i, j, l = mono
    if l == 0:
        return {}
    k = spec.k
    pref = spec.q * spec.omega ** ((k + 1) * i + (2 * k + 1) * j)
    out = {}
    a = pref * lam(spec, l) * spec.eps**j
    if a:
        out[(i + 1, j, l - 1)] = a
    if l >= 2:
        b = pref * mu(spec, l)
        if b:
            out[(i, j + 1, l - 2)] = b
    return out


def act_x(spec: ActionSpec, e: PBWElement) -> PBWElement:
    _case1(spec)
    out: dict[Mono, CycNum] = {}
    for m, c in e.terms.items():
        for m2, v in x_on_monomial(spec, m).items():
            out[m2] = out[m2] + c * v if m2 in out else c * v
    return PBWElement(out)


def iterated_x(spec: ActionSpec, m: int, e: PBWElement) -> PBWElement:
    for _ in range(m):
        e = act_x(spec, e)
    return e


class _Recursive:
    """x and g computed from the letters u, v and x(ab) = g(a) x(b) + x(a) b."""

    def __init__(self, spec: ActionSpec):
        self.spec = spec
        self.alg: DownUpAlgebra = algebra(spec)
        w, k = spec.omega, spec.k
        u, v = self.alg.mono(1, 0, 0), self.alg.mono(0, 0, 1)
        zero = PBWElement()
        self.g_letter = {"u": u.scale(w ** (k + 1)), "v": v.scale(w**k)}
        self.x_letter = {"u": zero, "v": u.scale(spec.q)}
        self.letter = {"u": u, "v": v}
        self._x: dict[Mono, PBWElement] = {}
        self._g: dict[Mono, PBWElement] = {}

    def _word_of(self, word: str) -> tuple[PBWElement, PBWElement, PBWElement]:
        """(element, g(element), x(element)) for a word in u and v."""
        mul = self.alg.mul
        elem = self.alg.scalar(1)
        g = self.alg.scalar(1)
        x = PBWElement()
        for ch in reversed(word):
            # prepend ch: x(ch * rest) = g(ch) x(rest) + x(ch) rest
            x = mul(self.g_letter[ch], x) + mul(self.x_letter[ch], elem)
            g = mul(self.g_letter[ch], g)
            elem = mul(self.letter[ch], elem)
        return elem, g, x

    def z_data(self):
        vu = self._word_of("vu")
        uv = self._word_of("uv")
        c = self.alg.c
        return tuple(a - b.scale(c) for a, b in zip(vu, uv))

    def x(self, mono: Mono) -> PBWElement:
        hit = self._x.get(mono)
        if hit is not None:
            return hit
        i, j, l = mono
        mul = self.alg.mul
        if mono == (0, 0, 0):
            out = PBWElement()
        else:
            if i:
                head, gh, xh = self._word_of("u")
                rest = (i - 1, j, l)
            elif j:
                head, gh, xh = self.z_data()
                rest = (0, j - 1, l)
            else:
                head, gh, xh = self._word_of("v")
                rest = (0, 0, l - 1)
            out = mul(gh, self.x(rest)) + mul(xh, self.alg.mono(*rest))
        self._x[mono] = out
        return out


@lru_cache(maxsize=64)
def _recursive(spec: ActionSpec) -> _Recursive:
    return _Recursive(spec)


def act_x_recursive(spec: ActionSpec, e: PBWElement) -> PBWElement:
    _case1(spec)
    r = _recursive(spec)
    out = PBWElement()
    for m, c in e.terms.items():
        out = out + r.x(m).scale(c)
    return out


def act_g_recursive(spec: ActionSpec, e: PBWElement) -> PBWElement:
    """g as an algebra map, from its values on u and v."""
    _case1(spec)
    r = _recursive(spec)
    gz = r.z_data()[1]
    alg = r.alg
    out = PBWElement()
    for (i, j, l), c in e.terms.items():
        t = alg.power(r.g_letter["u"], i)
        t = alg.mul(t, alg.power(gz, j))
        t = alg.mul(t, alg.power(r.g_letter["v"], l))
        out = out + t.scale(c)
    return out


@dataclass
class GradedOperator:
    """Matrix of g or x between graded pieces, columns indexed by the source basis."""

    label: str
    degree: int
    source: list[Mono]
    target: list[Mono]
    matrix: list[list[CycNum]]

    def apply(self, vec: list) -> list:
        out = []
        for row in self.matrix:
            acc = 0
            for a, b in zip(row, vec):
                if a and b:
                    acc = a * b + acc
            out.append(acc)
        return out


def operator_matrix(spec: ActionSpec, which: str, d: int) -> GradedOperator:
    """Matrix of g (A_d -> A_d) or x (A_d -> A_d) in the graded basis."""
    _case1(spec)
    basis = graded_basis(d)
    index = {m: t for t, m in enumerate(basis)}
    zero = CycNum.rational(spec.level, 0)
    mat = [[zero] * len(basis) for _ in basis]
    for col, m in enumerate(basis):
        if which == "g":
            mat[col][col] = g_eigenvalue(spec, m)
        elif which == "x":
            for m2, v in x_on_monomial(spec, m).items():
                mat[index[m2]][col] = v
        else:
            raise ValueError("operator must be 'g' or 'x'")
    return GradedOperator(which, d, basis, basis, mat)


def x_block(spec: ActionSpec, p: int, q: int) -> list[list[CycNum]]:
    """x restricted to bidegree (p, q) -> (p + 1, q - 1)."""
    src = bidegree_basis(p, q)
    tgt = bidegree_basis(p + 1, q - 1) if q >= 1 else []
    index = {m: t for t, m in enumerate(tgt)}
    zero = CycNum.rational(spec.level, 0)
    mat = [[zero] * len(src) for _ in tgt]
    for col, m in enumerate(src):
        for m2, v in x_on_monomial(spec, m).items():
            mat[index[m2]][col] = v
    return mat
