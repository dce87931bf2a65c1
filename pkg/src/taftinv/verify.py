"""Acceptance suites.  Each check returns a CheckResult; the CLI and the
acceptance tests both run these.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

from .downup import algebra
from .freealg import (
    ActionError,
    ActionSpec,
    actions_for_downup,
    classify_actions,
    is_valid_action,
    perturbations,
    superpotential_check,
)
from .invariants import (
    a_element,
    a_squared_scalar,
    anticommuting_pair,
    commutativity_report,
    invariant_dims,
    is_invariant,
    verify_presentation,
    z_power_scalar,
)
from .series import (
    RatFn,
    gorenstein_congruence,
    gorenstein_table,
    hdet_ax,
    hilbert_Ax,
    molien,
    one_minus,
    stanley_test,
    trace_series_Ax,
)
from .taft import act_x, act_x_recursive, iterated_x

# Gorenstein cells (n -> (all k, k covered by a sufficient condition)).
REFERENCE_GRID: dict[int, tuple[frozenset, frozenset]] = {
    n: (frozenset(a), frozenset(b))
    for n, a, b in [
        (2, {1}, {1}),
        (3, {0, 1, 2}, {0, 1, 2}),
        (4, {3}, {3}),
        (5, {2, 3, 4}, {2, 3, 4}),
        (6, {1, 4, 5}, {1, 4, 5}),
        (7, {1, 3, 6}, {1, 3, 6}),
        (8, {7}, {7}),
        (9, {1, 4, 5, 6, 8}, {4, 6, 8}),
        (10, {1, 2, 7, 9}, {2, 7, 9}),
        (11, {2, 5, 10}, {2, 5, 10}),
        (12, {1, 3, 4, 7, 11}, {11}),
        (13, {6, 9, 12}, {6, 9, 12}),
        (14, {3, 10, 11, 13}, {3, 10, 13}),
        (15, {2, 3, 4, 5, 7, 12, 14}, {3, 7, 14}),
        (16, {15}, {15}),
    ]
}


@dataclass
class CheckResult:
    number: int
    name: str
    passed: bool = True
    failures: list[str] = field(default_factory=list)
    seconds: float = 0.0
    count: int = 0

    def fail(self, msg: str) -> None:
        self.passed = False
        if len(self.failures) < 20:
            self.failures.append(msg)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f"; first failure: {self.failures[0]}" if self.failures else ""
        return f"[{status}] criterion {self.number}: {self.name} ({self.count} checks, {self.seconds:.1f}s){extra}"


def _timed(number: int, name: str):
    def wrap(fn):
        def run(*args, **kwargs) -> CheckResult:
            res = CheckResult(number, name)
            t0 = time.perf_counter()
            fn(res, *args, **kwargs)
            res.seconds = time.perf_counter() - t0
            return res

        run.__name__ = fn.__name__
        run.__doc__ = fn.__doc__
        return run

    return wrap


def case1_specs(n: int) -> list[ActionSpec]:
    return [s for s in classify_actions(n) if s.case == 1]


# 1 and 2 ------------------------------------------------------------------------


@_timed(1, "Gorenstein table reproduction")
def check_table(res: CheckResult, n_max: int = 16, cells=None) -> None:
    cells = cells if cells is not None else gorenstein_table(n_max)
    expected = sum(range(2, n_max + 1))
    if len(cells) != expected:
        res.fail(f"{len(cells)} cells, expected {expected}")
    for c in cells:
        res.count += 1
        want = c.k in REFERENCE_GRID[c.n][0]
        if c.gorenstein != want:
            res.fail(f"n={c.n} k={c.k}: computed {c.gorenstein}, expected {want}")


@_timed(2, "sufficient-condition annotations")
def check_annotations(res: CheckResult, n_max: int = 16, cells=None) -> None:
    cells = cells if cells is not None else gorenstein_table(n_max)
    for c in cells:
        res.count += 1
        flagged = c.covered_by != "-"
        if flagged and not c.gorenstein:
            res.fail(f"n={c.n} k={c.k}: flagged {c.covered_by} but not Gorenstein")
        if flagged != (c.k in REFERENCE_GRID[c.n][1]):
            res.fail(f"n={c.n} k={c.k}: circled mismatch")


# 3 ------------------------------------------------------------------------------


@_timed(3, "Molien series vs brute-force invariant dimensions")
def check_molien_oracle(res: CheckResult, n_max: int = 6) -> None:
    for n in range(2, n_max + 1):
        for spec in case1_specs(n):
            d = 4 * n + 4
            res.count += 1
            got = molien(spec).series(d - 1)
            want = invariant_dims(spec, d - 1, "full")
            if got != want:
                res.fail(f"{spec.n},{spec.k},{spec.sqrt_choice}: {got} != {want}")


# 4 ------------------------------------------------------------------------------


@_timed(4, "identity suite")
def check_identities(res: CheckResult, n_max: int = 6) -> None:
    for n in range(2, n_max + 1):
        for spec in case1_specs(n):
            alg = algebra(spec)
            tag = f"n={n} k={spec.k} {spec.sqrt_choice}"
            for m in range(1, 4 * n + 1):
                vm = alg.mono(0, 0, m)
                res.count += 1
                if act_x(spec, vm) != act_x_recursive(spec, vm):
                    res.fail(f"{tag}: x.v^{m} closed form vs recursion")
                res.count += 1
                a, b = alg.vm_u(m)
                closed = alg.mono(1, 0, m, a) + alg.mono(0, 1, m - 1, b)
                if alg.normal_form_word("v" * m + "u") != closed:
                    res.fail(f"{tag}: v^{m} u rewrite")
            if spec.regime != "2n":
                continue
            u, z = alg.mono(1, 0, 0), alg.mono(0, 1, 0)
            a = a_element(spec)
            s = z_power_scalar(spec)
            checks = [
                ("x^(n-1).v^(2n-2)", iterated_x(spec, n - 1, alg.mono(0, 0, 2 * n - 2)), alg.mono(0, n - 1, 0, s)),
                ("az = eps za", alg.mul(a, z), alg.mul(z, a).scale(spec.eps)),
                ("au - ua", alg.commutator(a, u), alg.mono(0, n, 0, -spec.sqrt_omega * s)),
                ("a^2", alg.mul(a, a), alg.mono(2 * n - 2, 0, 2 * n, a_squared_scalar(spec))),
            ]
            for name, lhs, rhs in checks:
                res.count += 1
                if lhs != rhs:
                    res.fail(f"{tag}: {name}")


# 5 ------------------------------------------------------------------------------


def _regression_cases():
    """(label, spec, expected series or None, expected verdict (gorenstein, sign, m))."""
    out = []
    for n in range(2, 7):
        spec = ActionSpec(n, 0, sqrt_choice="alt") if n % 2 else None
        if spec is not None:
            out.append((f"A^x order n, n={n}", spec, RatFn.product_form([1], (1, 2, n)), (True, -1, n + 3), "ax"))
    for n in range(2, 7):
        series = RatFn.product_form(one_minus(4 * n - 2), (1, 2 * n - 1, 2 * n, 2 * n))
        out.append((f"k=n-1, n={n}", ActionSpec(n, n - 1), series, (True, -1, 2 * (n + 1)), "at"))
    for n in (3, 5):
        series = RatFn.product_form(one_minus(4 * n), (2, n, 2 * n, 2 * n))
        out.append((f"n odd k=(n-1)/2, n={n}", ActionSpec(n, (n - 1) // 2), series, (True, -1, n + 2), "at"))
    for n in (6, 10):
        k1 = (n - 2) // 4 if n % 8 == 6 else (3 * n - 2) // 4
        k2 = (3 * n - 2) // 4 if n % 8 == 6 else (n - 2) // 4
        s1 = RatFn.product_form(one_minus(4 * n), (4, n // 2, 2 * n, 2 * n))
        num = [0] * (5 * n + 5)
        num[0], num[n + 4], num[4 * n], num[5 * n + 4] = 1, -1, -1, 1
        s2 = RatFn.product_form(num, (4, n // 2 + 2, n, 2 * n, 2 * n))
        out.append((f"n=2 mod 4 first subcase, n={n} k={k1}", ActionSpec(n, k1), s1, (True, -1, n // 2 + 4), "at"))
        out.append((f"n=2 mod 4 second subcase, n={n} k={k2}", ActionSpec(n, k2), s2, (True, -1, n // 2 + 2), "at"))
    num = [1, 0, 0, 0, 0, 0, -1, -1, -2, -1, 0, 2, 2, 2, 1, -1, -1, -1]
    out.append(("n=2 k=0", ActionSpec(2, 0), RatFn.product_form(num, (2, 3, 4, 4, 4, 5)), (False, None, None), "at"))
    return out


@_timed(5, "Hilbert-series regressions")
def check_hilbert(res: CheckResult) -> None:
    for label, spec, series, verdict, which in _regression_cases():
        res.count += 1
        got = hilbert_Ax(spec) if which == "ax" else molien(spec)
        if which == "ax":
            d = 4 * spec.n + 4
            if trace_series_Ax(spec, 0) != series:
                res.fail(f"{label}: trace at m=0 differs")
            if series.series(d) != invariant_dims(spec, d, "x-only"):
                res.fail(f"{label}: kernel dimensions differ from the series")
        if got != series:
            res.fail(f"{label}: {got.to_text()} != {series.to_text()}")
        if got.normalize() != series.normalize() or got.normalize().to_text() != series.normalize().to_text():
            res.fail(f"{label}: normalized forms differ")
        if verdict is not None:
            v = stanley_test(got)
            if (v.gorenstein, v.sign, v.exponent) != verdict:
                res.fail(f"{label}: verdict {v} != {verdict}")


# 6 ------------------------------------------------------------------------------


@_timed(6, "homological determinants")
def check_hdet(res: CheckResult, n_max: int = 8) -> None:
    for n in range(2, n_max + 1):
        for spec in classify_actions(n):
            res.count += 1
            kills, lam = superpotential_check(spec)
            if not kills or lam != spec.omega ** (4 * spec.k + 2):
                res.fail(f"n={n} k={spec.k} case {spec.case} {spec.sqrt_choice}: superpotential")
            if spec.case == 1 and spec.regime == "2n":
                res.count += 1
                if hdet_ax(spec) != spec.omega ** (-(4 * spec.k + 3)):
                    res.fail(f"n={n} k={spec.k} {spec.sqrt_choice}: hdet on A^x")


# 7 ------------------------------------------------------------------------------


@_timed(7, "classification")
def check_classification(res: CheckResult, n_valid: int = 16, n_perturb: int = 6, n_roundtrip: int = 10,
                         trials: int = 100, seed: int = 20240601) -> None:
    rng = random.Random(seed)
    for n in range(2, n_valid + 1):
        specs = classify_actions(n)
        if len(specs) != 4 * n:
            res.fail(f"n={n}: {len(specs)} specs")
        for spec in specs:
            res.count += 1
            rep = is_valid_action(spec.taft_pair(), spec.alpha, spec.beta)
            if not rep.valid:
                res.fail(f"n={n} k={spec.k} case {spec.case} {spec.sqrt_choice}: {rep.message}")
            if (spec.alpha, spec.beta) in ((0, 1), (2, -1)):
                res.fail(f"n={n} k={spec.k}: excluded (alpha, beta)")
    for n in range(2, n_perturb + 1):
        specs = classify_actions(n)
        for t in range(trials):
            spec = specs[t % len(specs)]
            name, pair, alpha, beta = next(iter(perturbations(spec, rng, 1)))
            res.count += 1
            try:
                ok = is_valid_action(pair, alpha, beta).valid
            except ActionError:
                ok = False
            if ok:
                res.fail(f"n={n}: perturbation of {name} still valid")
    for n in range(2, n_roundtrip + 1):
        for spec in classify_actions(n):
            res.count += 1
            g1, g2 = spec.characteristic_roots()
            found = actions_for_downup(g1, g2)
            if spec not in found:
                res.fail(f"n={n} k={spec.k} case {spec.case} {spec.sqrt_choice}: not recovered")
            for other in found:
                if (other.alpha, other.beta) != (spec.alpha, spec.beta):
                    res.fail(f"n={n} k={spec.k}: recovered action on a different algebra")


# 8 ------------------------------------------------------------------------------


@_timed(8, "presentations and commutativity")
def check_presentations(res: CheckResult, n_pres: int = 5, n_comm: int = 6) -> None:
    for n in range(2, n_pres + 1):
        for spec in case1_specs(n):
            res.count += 1
            rep = verify_presentation(spec, 4 * n + 2)
            if not rep.ok:
                res.fail(f"n={n} k={spec.k} {spec.sqrt_choice}: {rep.first_failure()}")
    for n in range(2, n_comm + 1):
        for spec in case1_specs(n):
            res.count += 1
            if spec.regime == "n":
                if not commutativity_report(spec, 3 * n).commutative:
                    res.fail(f"n={n} k={spec.k}: order-n invariants not commutative")
                continue
            pair = anticommuting_pair(spec)
            if not all(is_invariant(spec, e) for e in pair):
                res.fail(f"n={n} k={spec.k}: witness pair not invariant")
            rep = commutativity_report(spec, 2 * n, [pair])
            if rep.commutative or rep.witness != pair or not rep.anticommute:
                res.fail(f"n={n} k={spec.k}: no anticommuting witness")


# 9 ------------------------------------------------------------------------------


@_timed(9, "odd-order congruence vs Stanley")
def check_congruence(res: CheckResult, n_max: int = 15) -> None:
    for n in range(3, n_max + 1, 2):
        for k in range(n):
            res.count += 1
            spec = ActionSpec(n, k, sqrt_choice="alt")
            v = stanley_test(molien(spec)).gorenstein
            if v != gorenstein_congruence(n, k):
                res.fail(f"n={n} k={k}: Stanley {v}, congruence {not v}")


SUITES = {
    "table": ("check_table", "check_annotations"),
    "molien": ("check_molien_oracle", "check_hilbert", "check_congruence"),
    "identities": ("check_identities", "check_hdet", "check_classification"),
    "presentations": ("check_presentations",),
}


def run_suite(name: str) -> list[CheckResult]:
    names = [f for s in SUITES.values() for f in s] if name == "all" else SUITES[name]
    out = []
    cells = None
    for fname in names:
        fn = globals()[fname]
        if fname in ("check_table", "check_annotations"):
            if cells is None:
                cells = gorenstein_table(16)
            out.append(fn(cells=cells))
        else:
            out.append(fn())
    return out
