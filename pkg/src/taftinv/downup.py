"""The down-up algebra of a case-1 action in the PBW basis u^i z^j v^l.

z = vu - omega^-(k+1) uv.  Products are normalised with the closed form for
v^m u and the skew-commutation of z with u and v.  A slow word-rewriting
normaliser is kept alongside as an independent check.
"""

from __future__ import annotations

from functools import lru_cache

from .cyclo import CycNum, gauss_binomial
from .freealg import ActionSpec

Mono = tuple[int, int, int]


class PBWElement:
    """Sparse linear combination of PBW monomials (i, j, l) = u^i z^j v^l."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[Mono, CycNum] | None = None):
        self.terms = {m: c for m, c in (terms or {}).items() if c}

    @classmethod
    def monomial(cls, i: int, j: int, l: int, coef) -> PBWElement:
        return cls({(i, j, l): coef})

    def __add__(self, other: PBWElement) -> PBWElement:
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out[m] + c if m in out else c
        return PBWElement(out)

    def __sub__(self, other: PBWElement) -> PBWElement:
        return self + other.scale(-1)

    def __neg__(self) -> PBWElement:
        return self.scale(-1)

    def scale(self, c) -> PBWElement:
        if not c:
            return PBWElement()
        return PBWElement({m: c * v for m, v in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, PBWElement) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def items(self):
        return sorted(self.terms.items())

    def coefficient(self, i: int, j: int, l: int, zero=0):
        return self.terms.get((i, j, l), zero)

    def degrees(self) -> set[int]:
        return {i + 2 * j + l for i, j, l in self.terms}

    def degree(self) -> int:
        ds = self.degrees()
        if len(ds) != 1:
            raise ValueError("element is not homogeneous")
        return ds.pop()

    def homogeneous(self, d: int) -> PBWElement:
        return PBWElement({m: c for m, c in self.terms.items() if m[0] + 2 * m[1] + m[2] == d})

    def bidegrees(self) -> set[tuple[int, int]]:
        return {(i + j, j + l) for i, j, l in self.terms}

    def to_lines(self) -> str:
        return "\n".join(f"{i} {j} {l} : {c}" for (i, j, l), c in self.items())

    @classmethod
    def from_lines(cls, text: str, level: int) -> PBWElement:
        from .parsing import parse_scalar

        terms = {}
        for line in text.splitlines():
            if not line.strip():
                continue
            mono, _, coef = line.partition(":")
            i, j, l = (int(x) for x in mono.split())
            terms[(i, j, l)] = parse_scalar(coef, level)
        return cls(terms)

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (i, j, l), c in self.items():
            factors = [
                f"{s}^{e}" if e > 1 else s for s, e in (("u", i), ("z", j), ("v", l)) if e
            ]
            cs = str(c)
            if not factors:
                parts.append(f"({cs})")
            elif c == 1:
                parts.append("*".join(factors))
            else:
                parts.append(f"({cs})*" + "*".join(factors))
        return " + ".join(parts)

    def __repr__(self):
        return f"PBWElement({self.to_text()})"


def graded_basis(d: int) -> list[Mono]:
    """All (i, j, l) with i + 2j + l = d, lexicographically ordered."""
    out = []
    for i in range(d + 1):
        for j in range((d - i) // 2 + 1):
            out.append((i, j, d - i - 2 * j))
    return out


def bidegree_basis(p: int, q: int) -> list[Mono]:
    """Monomials of (u, v)-bidegree (p, q): u^(p-j) z^j v^(q-j)."""
    return [(p - j, j, q - j) for j in range(min(p, q) + 1)]


class DownUpAlgebra:
    """Multiplication tables for A(alpha, beta) of one case-1 spec."""

    def __init__(self, spec: ActionSpec):
        if spec.case != 1:
            raise ValueError("the PBW engine works with case-1 specs; call spec.normalized()")
        self.spec = spec
        self.level = spec.level
        self.zero = CycNum.rational(self.level, 0)
        self.one = CycNum.rational(self.level, 1)
        self.c = spec.omega ** (-(spec.k + 1))
        self.eps = spec.eps
        self._eps_pows = [self.one]
        self._vu: dict[int, tuple[CycNum, CycNum]] = {}
        self._vlua: dict[tuple[int, int], dict[Mono, CycNum]] = {}
        self._mono: dict[tuple[Mono, Mono], dict[Mono, CycNum]] = {}

    def eps_pow(self, e: int) -> CycNum:
        e %= 2 * self.spec.n  # eps is a power of the primitive 2n-th root
        while len(self._eps_pows) <= e:
            self._eps_pows.append(self._eps_pows[-1] * self.eps)
        return self._eps_pows[e]

    def vm_u(self, m: int) -> tuple[CycNum, CycNum]:
        """(a, b) with v^m u = a u v^m + b z v^(m-1)."""
        if m not in self._vu:
            w, k = self.spec.omega, self.spec.k
            a = w ** (-m * (k + 1))
            b = w ** (-(m - 1) * (k + 1)) * gauss_binomial(m, 1, self.spec.sqrt_omega)
            self._vu[m] = (a, b)
        return self._vu[m]

    def vl_ua(self, l: int, a: int) -> dict[Mono, CycNum]:
        key = (l, a)
        hit = self._vlua.get(key)
        if hit is not None:
            return hit
        if l == 0 or a == 0:
            out = {(a, 0, l): self.one}
        else:
            c1, c2 = self.vm_u(l)
            out = {}
            for (p, q, r), coef in self.vl_ua(l, a - 1).items():
                m = (p + 1, q, r)
                out[m] = out.get(m, self.zero) + c1 * coef
            if c2:
                for (p, q, r), coef in self.vl_ua(l - 1, a - 1).items():
                    m = (p, q + 1, r)
                    out[m] = out.get(m, self.zero) + c2 * self.eps_pow(p) * coef
            out = {m: c for m, c in out.items() if c}
        self._vlua[key] = out
        return out

    def mono_mul(self, x: Mono, y: Mono) -> dict[Mono, CycNum]:
        key = (x, y)
        hit = self._mono.get(key)
        if hit is not None:
            return hit
        i, j, l = x
        a, b, c = y
        out: dict[Mono, CycNum] = {}
        for (p, q, r), coef in self.vl_ua(l, a).items():
            e = j * p + r * b
            m = (i + p, j + q + b, r + c)
            val = coef * self.eps_pow(e) if e else coef
            out[m] = out[m] + val if m in out else val
        out = {m: v for m, v in out.items() if v}
        self._mono[key] = out
        return out

    def mul(self, x: PBWElement, y: PBWElement) -> PBWElement:
        out: dict[Mono, CycNum] = {}
        for m1, c1 in x.terms.items():
            for m2, c2 in y.terms.items():
                cc = c1 * c2
                for m, v in self.mono_mul(m1, m2).items():
                    val = cc * v
                    out[m] = out[m] + val if m in out else val
        return PBWElement(out)

    def power(self, x: PBWElement, e: int) -> PBWElement:
        result = PBWElement({(0, 0, 0): self.one})
        for _ in range(e):
            result = self.mul(result, x)
        return result

    def mono(self, i: int, j: int, l: int, coef=None) -> PBWElement:
        return PBWElement({(i, j, l): self.one if coef is None else coef})

    def scalar(self, c) -> PBWElement:
        return PBWElement({(0, 0, 0): self.zero + c})

    def commutator(self, x: PBWElement, y: PBWElement) -> PBWElement:
        return self.mul(x, y) - self.mul(y, x)

    # -- independent letter-by-letter normaliser ------------------------------

    def normal_form_word(self, word: str) -> PBWElement:
        """Normalise a word in u, z, v using only vu = c uv + z, vz = eps zv, zu = eps uz."""
        rules = {
            "vu": ((self.c, "uv"), (self.one, "z")),
            "vz": ((self.eps, "zv"),),
            "zu": ((self.eps, "uz"),),
        }
        done: dict[str, CycNum] = {}
        todo: dict[str, CycNum] = {word: self.one}
        while todo:
            w, coef = todo.popitem()
            for pos in range(len(w) - 1):
                rule = rules.get(w[pos : pos + 2])
                if rule:
                    for c, rep in rule:
                        nw = w[:pos] + rep + w[pos + 2 :]
                        todo[nw] = todo.get(nw, self.zero) + coef * c
                    break
            else:
                done[w] = done.get(w, self.zero) + coef
        out: dict[Mono, CycNum] = {}
        for w, coef in done.items():
            m = (w.count("u"), w.count("z"), w.count("v"))
            out[m] = out.get(m, self.zero) + coef
        return PBWElement(out)


@lru_cache(maxsize=256)
def algebra(spec: ActionSpec) -> DownUpAlgebra:
    return DownUpAlgebra(spec)


def pbw_mul(spec: ActionSpec, a: PBWElement, b: PBWElement) -> PBWElement:
    return algebra(spec).mul(a, b)


def parse_element(text: str, spec: ActionSpec) -> PBWElement:
    from .parsing import parse_element as _parse

    return _parse(text, spec)
