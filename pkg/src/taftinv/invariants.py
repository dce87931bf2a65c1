"""Graded invariants A^x and A^T = (A^x)^g, generators, presentations.

A is bigraded by (u-degree, v-degree), with u^i z^j v^l in bidegree
(i + j, j + l).  x maps bidegree (p, q) into (p + 1, q - 1) and g is a
scalar on each bidegree, so every kernel is computed block by block.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .cyclo import CycNum, gauss_binomial
from .downup import PBWElement, algebra, bidegree_basis
from .freealg import ActionSpec
from .linalg import nullspace, rank, rref
from .taft import act_g, act_x, g_exponent, iterated_x, x_block

FLAVORS = ("x-only", "full")


@dataclass
class InvariantBasis:
    degree: int
    vectors: list[PBWElement]
    flavor: str = "full"

    @property
    def dim(self) -> int:
        return len(self.vectors)


def _case1(spec: ActionSpec) -> None:
    if spec.case != 1:
        raise ValueError("expected a case-1 spec; call spec.normalized()")


def bidegrees(d: int):
    """Bidegrees (p, q) of total degree d, u-heavy first."""
    return [(p, d - p) for p in range(d, -1, -1)]


def block_kernel(spec: ActionSpec, p: int, q: int, flavor: str = "x-only") -> list[list[CycNum]]:
    """Coordinates (in bidegree_basis(p, q)) of a basis of the invariants in that block."""
    if flavor == "full" and g_exponent(spec, p, q):
        return []
    size = min(p, q) + 1
    zero, one = CycNum.rational(spec.level, 0), CycNum.rational(spec.level, 1)
    mat = x_block(spec, p, q)
    if not mat:
        return [[one if i == j else zero for j in range(size)] for i in range(size)]
    return nullspace(mat, size, zero, one)


def _to_element(p: int, q: int, coords) -> PBWElement:
    return PBWElement(dict(zip(bidegree_basis(p, q), coords)))


def _coords(p: int, q: int, e: PBWElement, zero) -> list:
    return [e.terms.get(m, zero) for m in bidegree_basis(p, q)]


def _invariants(spec: ActionSpec, d: int, flavor: str) -> InvariantBasis:
    _case1(spec)
    if flavor not in FLAVORS:
        raise ValueError(f"flavor must be one of {FLAVORS}")
    vecs = []
    for p, q in bidegrees(d):
        vecs.extend(_to_element(p, q, c) for c in block_kernel(spec, p, q, flavor))
    return InvariantBasis(d, vecs, flavor)


def x_invariants(spec: ActionSpec, d: int) -> InvariantBasis:
    return _invariants(spec, d, "x-only")


def full_invariants(spec: ActionSpec, d: int) -> InvariantBasis:
    return _invariants(spec, d, "full")


def invariant_dims(spec: ActionSpec, max_degree: int, flavor: str = "full") -> list[int]:
    """dim of the invariants in each degree 0..max_degree (block dimensions only)."""
    _case1(spec)
    out = []
    for d in range(max_degree + 1):
        total = 0
        for p, q in bidegrees(d):
            if flavor == "full" and g_exponent(spec, p, q):
                continue
            size = min(p, q) + 1
            mat = x_block(spec, p, q)
            total += size - (rank(mat) if mat else 0)
        out.append(total)
    return out


# -- generators ----------------------------------------------------------------


@dataclass
class GeneratorReport:
    generators: list[tuple[int, PBWElement]]
    relation_checks: list[tuple[str, bool]] = field(default_factory=list)
    dimension_table: dict[int, tuple[int, int]] = field(default_factory=dict)
    flavor: str = "full"
    max_degree: int = 0

    @property
    def degrees(self) -> list[int]:
        return [d for d, _ in self.generators]

    def to_dict(self) -> dict:
        return {
            "flavor": self.flavor,
            "max_degree": self.max_degree,
            "generator_degrees": self.degrees,
            "generators": [{"degree": d, "terms": g.to_lines().splitlines()} for d, g in self.generators],
            "dimension_table": {str(d): list(v) for d, v in self.dimension_table.items()},
            "relation_checks": [{"name": n, "ok": ok} for n, ok in self.relation_checks],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def find_generators(spec: ActionSpec, max_degree: int, flavor: str = "full") -> GeneratorReport:
    """Greedy subalgebra closure, degree by degree and block by block."""
    _case1(spec)
    alg = algebra(spec)
    zero = alg.zero
    gens: list[tuple[tuple[int, int], PBWElement]] = []
    # span of products of chosen generators, per bidegree, as PBW elements
    span: dict[tuple[int, int], list[PBWElement]] = {(0, 0): [alg.scalar(1)]}
    report = GeneratorReport([], flavor=flavor, max_degree=max_degree)
    report.dimension_table[0] = (1, 1)
    for d in range(1, max_degree + 1):
        got = want = 0
        for p, q in bidegrees(d):
            products = []
            for (gp, gq), g in gens:
                for s in span.get((p - gp, q - gq), []):
                    products.append(_coords(p, q, alg.mul(g, s), zero))
            basis, _ = rref(products) if products else ([], [])
            kernel = block_kernel(spec, p, q, flavor)
            for vec in kernel:
                if len(basis) == len(kernel):
                    break
                if rank(basis + [vec]) > len(basis):
                    basis = rref(basis + [vec])[0]
                    gens.append(((p, q), _to_element(p, q, vec)))
                    report.generators.append((d, _to_element(p, q, vec)))
            if basis:
                span[(p, q)] = [_to_element(p, q, row) for row in basis]
            got += len(basis)
            want += len(kernel)
        report.dimension_table[d] = (got, want)
    return report


# -- closed forms for the order-2n case ------------------------------------------


def a_element(spec: ActionSpec) -> PBWElement:
    """x^(n-1) . v^(2n-1)."""
    n = spec.n
    return iterated_x(spec, n - 1, algebra(spec).mono(0, 0, 2 * n - 1))


def z_power_scalar(spec: ActionSpec) -> CycNum:
    """S with x^(n-1) . v^(2n-2) = S z^(n-1), from the product of the mu's."""
    n, k, w = spec.n, spec.k, spec.omega
    prod = spec.q ** (n - 1)
    for i in range(1, n):
        prod = prod * gauss_binomial(2 * i, 2, spec.sqrt_omega.inverse())
    return prod * w ** ((n - 1) * (n - 2) * (2 * k + 1) // 2 + k * (n - 1))


def a_squared_scalar(spec: ActionSpec) -> CycNum:
    """c with a^2 = c u^(2n-2) v^(2n)."""
    n, k, w = spec.n, spec.k, spec.omega
    prod = spec.q ** (n - 1)
    for m in range(1, n):
        prod = prod * gauss_binomial(m, 1, w.inverse())
    return w ** (2 * (k + 1)) * prod * prod


# -- presentations ---------------------------------------------------------------


@dataclass
class PresentationReport:
    regime: str
    checks: list[tuple[str, bool, str]] = field(default_factory=list)
    dimension_table: dict[int, tuple[int, int, int]] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(c[1] for c in self.checks) and self.dimensions_ok

    @property
    def dimensions_ok(self) -> bool:
        return all(cnt == rk == dim for cnt, rk, dim in self.dimension_table.values())

    def first_failure(self) -> str | None:
        for name, ok, detail in self.checks:
            if not ok:
                return f"{name}: {detail}"
        for d, v in self.dimension_table.items():
            if len(set(v)) != 1:
                return f"degree {d}: monomials {v[0]}, rank {v[1]}, kernel {v[2]}"
        return None


def _identity(report: PresentationReport, name: str, lhs: PBWElement, rhs: PBWElement) -> None:
    ok = lhs == rhs
    report.checks.append((name, ok, "" if ok else f"lhs = {lhs.to_text()} ; rhs = {rhs.to_text()}"))


def verify_presentation(spec: ActionSpec, max_degree: int | None = None) -> PresentationReport:
    """Check the defining relations and the monomial counts of A^x."""
    _case1(spec)
    n = spec.n
    if max_degree is None:
        max_degree = 4 * n + 2
    alg = algebra(spec)
    mul = alg.mul
    u, z = alg.mono(1, 0, 0), alg.mono(0, 1, 0)
    report = PresentationReport(spec.regime)
    zero = alg.zero
    if spec.regime == "n":
        vn = alg.mono(0, 0, n)
        _identity(report, "v^n u = u v^n", mul(vn, u), mul(u, vn))
        _identity(report, "z u = eps u z", mul(z, u), mul(u, z).scale(spec.eps))
        _identity(report, "v^n z = z v^n", mul(vn, z), mul(z, vn))
        _identity(report, "x v^n = 0", act_x(spec, vn), PBWElement())
        # ordered monomials u^i z^j v^(nm) are PBW monomials of bidegree (i + j, j + nm)
        def gens_in(p, q):
            out = []
            for j in range(min(p, q) + 1):
                if (q - j) % n == 0:
                    out.append(alg.mono(p - j, j, q - j))
            return out
    else:
        v2n = alg.mono(0, 0, 2 * n)
        a = a_element(spec)
        _identity(report, "v^2n u = u v^2n", mul(v2n, u), mul(u, v2n))
        _identity(report, "v^2n z = z v^2n", mul(v2n, z), mul(z, v2n))
        _identity(report, "v^2n a = a v^2n", mul(v2n, a), mul(a, v2n))
        _identity(report, "z u = eps u z", mul(z, u), mul(u, z).scale(spec.eps))
        _identity(report, "a z = eps z a", mul(a, z), mul(z, a).scale(spec.eps))
        _identity(
            report,
            "x^(n-1) v^(2n-2) = S z^(n-1)",
            iterated_x(spec, n - 1, alg.mono(0, 0, 2 * n - 2)),
            alg.mono(0, n - 1, 0, z_power_scalar(spec)),
        )
        _identity(
            report,
            "a u - u a = -sqrt(w) S z^n",
            alg.commutator(a, u),
            alg.mono(0, n, 0, -spec.sqrt_omega * z_power_scalar(spec)),
        )
        _identity(report, "a^2 = c u^(2n-2) v^(2n)", mul(a, a), alg.mono(2 * n - 2, 0, 2 * n, a_squared_scalar(spec)))
        lead = a.coefficient(n - 1, 0, n, zero)
        report.checks.append(("a has u^(n-1) v^n term", bool(lead), str(lead)))
        top = max(l for _, _, l in a.terms)
        report.checks.append(("other terms of a have lower v-degree", top == n and
                              all(l < n for (i, j, l) in a.terms if (i, j, l) != (n - 1, 0, n)), ""))

        def gens_in(p, q):
            out = []
            for eps_ in (0, 1):
                p0, q0 = p - eps_ * (n - 1), q - eps_ * n
                if p0 < 0 or q0 < 0:
                    continue
                for l in range(min(p0, q0) + 1):
                    j = p0 - l
                    rest = q0 - l
                    if rest % (2 * n) == 0:
                        mono = alg.mono(j, l, rest)
                        if eps_:
                            mono = mul(a, mono)
                        out.append(mono)
            return out

    for d in range(max_degree + 1):
        count = rk = dim = 0
        for p, q in bidegrees(d):
            elems = gens_in(p, q)
            count += len(elems)
            if elems:
                rk += rank([_coords(p, q, e, zero) for e in elems])
            dim += len(block_kernel(spec, p, q, "x-only"))
        report.dimension_table[d] = (count, rk, dim)
    return report


# -- commutativity -----------------------------------------------------------------


@dataclass
class CommutativityReport:
    commutative: bool
    witness: tuple[PBWElement, PBWElement] | None = None
    anticommute: bool = False


def commutativity_report(spec: ActionSpec, max_degree: int, candidates=()) -> CommutativityReport:
    """Search pairs of full-invariant basis vectors (each of degree <= max_degree).

    Pairs in ``candidates`` are tried first, after checking they are invariant
    and within the degree bound.
    """
    _case1(spec)
    alg = algebra(spec)
    for x, y in candidates:
        if not (is_invariant(spec, x) and is_invariant(spec, y)):
            continue
        if max(x.degrees() | y.degrees()) > max_degree:
            continue
        xy, yx = alg.mul(x, y), alg.mul(y, x)
        if xy != yx:
            return CommutativityReport(False, (x, y), xy == -yx)
    basis = []
    for d in range(1, max_degree + 1):
        basis.extend(full_invariants(spec, d).vectors)
    for i, x in enumerate(basis):
        for y in basis[i + 1 :]:
            xy, yx = alg.mul(x, y), alg.mul(y, x)
            if xy != yx:
                return CommutativityReport(False, (x, y), xy == -yx)
    return CommutativityReport(True)


def anticommuting_pair(spec: ActionSpec) -> tuple[PBWElement, PBWElement]:
    """u^(2k+1) z^(n-k-1) and z^n: both invariant, and they anticommute when sqrt(omega) has order 2n."""
    n, k = spec.n, spec.k
    alg = algebra(spec)
    return alg.mono(2 * k + 1, n - k - 1, 0), alg.mono(0, n, 0)


def is_invariant(spec: ActionSpec, e: PBWElement, flavor: str = "full") -> bool:
    if act_x(spec, e):
        return False
    return flavor == "x-only" or act_g(spec, e) == e
