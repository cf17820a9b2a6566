"""
Verification suites shared by the command line and the acceptance tests.
Each check returns plain records; nothing here prints.
"""

from __future__ import annotations

__all__ = [
    "Check", "Agreement", "census_vs_formula", "period_check",
    "identity_checks", "csp_checks", "congruence_checks", "oracle_checks",
    "decomposition_checks",
]

from dataclasses import dataclass
from math import comb

from . import formulas
from .coxeter import (
    AffineType, decompose_A, decompose_C, fc_census, graph, is_involution,
    iter_fc_layers, recompose_A, recompose_C,
)
from .heaps import is_alternating
from .numtheory import qbi_at_root
from .partitions import (
    box_partitions, distinct_partitions, durfee_decompose, durfee_recompose,
    staircase_bijection, staircase_inverse,
)
from .paths import G_poly, O_poly, csp_verify
from .qseries import (
    Poly, TailReport, eval_at_root, expand, gauss_binomial, neg_q_pochhammer,
    residue_sums, tail_min_period,
)


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str = ""


@dataclass(frozen=True)
class Agreement:
    type: AffineType
    variant: str
    max_len: int
    period: int
    agree_from: int
    census: tuple[int, ...]
    formula: tuple[int, ...]

    @property
    def suffix(self) -> int:
        return self.max_len + 1 - self.agree_from

    @property
    def ok(self) -> bool:
        return self.suffix >= 2 * self.period


def census_vs_formula(t: AffineType, variant: str = "FC", max_len: int | None = None,
                      workers: int = 1) -> Agreement:
    """
    Compare the brute-force census with the closed-form expansion. The default
    window is ``n^2 + 4 * period``, widened when needed so that it extends two
    periods past the degree of the closed form's polynomial part.
    """
    period = formulas.minimal_period(t, variant)
    if period == formulas.FINITE_SUPPORT:
        period = 1
    f = formulas.closed_tail(t, variant)
    if max_len is None:
        max_len = max(t.n ** 2 + 4 * period, f.degree + 2 * period)
    census = fc_census(t, max_len, variant == "FCI", workers).counts
    series = expand(f, max_len)
    s = max_len + 1
    while s > 0 and census[s - 1] == series[s - 1]:
        s -= 1
    return Agreement(t, variant, max_len, period, s, census, tuple(series))


def period_check(t: AffineType, variant: str = "FC") -> tuple[object, TailReport]:
    """Formula period and the period detected on the expanded closed form."""
    f = formulas.closed_tail(t, variant)
    if not f.terms:
        return formulas.minimal_period(t, variant), TailReport(0, 1, (0,), 0)
    L = f.lcm
    report = tail_min_period(expand(f, f.degree + 4 * L), L)
    return formulas.minimal_period(t, variant), report


def identity_checks(max_ab: int = 20, max_stair: int = 25, max_root: int = 40,
                    max_box: int = 9, max_distinct: int = 15) -> list[Check]:
    out = []
    ok = True
    for a in range(max_ab + 1):
        for b in range(max_ab + 1):
            lhs = Poly()
            for k in range(min(a, b) + 1):
                lhs = lhs + (gauss_binomial(a, k) * gauss_binomial(b, k)).shift(k * k)
            ok &= lhs == gauss_binomial(a + b, a)
    out.append(Check(f"durfee a,b<={max_ab}", ok))

    ok = True
    for n in range(max_stair + 1):
        lhs = Poly()
        for k in range(n + 1):
            lhs = lhs + gauss_binomial(n, k).shift(k * (k + 1) // 2)
        ok &= lhs == neg_q_pochhammer(n)
    out.append(Check(f"staircase n<={max_stair}", ok))

    worst = 0.0
    for n in range(1, max_root + 1):
        for k in range(n + 1):
            P = gauss_binomial(n, k)
            for j in range(n):
                worst = max(worst, abs(eval_at_root(P, n, j) - qbi_at_root(n, k, j)))
    out.append(Check(f"q-binomial at roots n<={max_root}", worst < 1e-6, f"max residue {worst:.2e}"))

    ok = True
    for a in range(max_box + 1):
        for b in range(max_box + 1):
            for lam in box_partitions(a, b):
                k, left, right = durfee_decompose(lam, a, b)
                ok &= durfee_recompose(k, left, right) == lam
                ok &= lam.size == k * k + left.size + right.size
    out.append(Check(f"durfee round trip a,b<={max_box}", ok))

    ok = True
    for n in range(max_distinct + 1):
        for lam in distinct_partitions(n):
            k, mu = staircase_bijection(lam, n)
            ok &= staircase_inverse(k, mu) == lam and lam.size == mu.size + k * (k + 1) // 2
    out.append(Check(f"staircase round trip n<={max_distinct}", ok))
    return out


def csp_checks(max_n: int = 10) -> list[Check]:
    return [Check(f"csp n={n}", all(r.ok for r in csp_verify(n))) for n in range(1, max_n + 1)]


def congruence_checks(max_n: int = 10) -> list[Check]:
    out = []
    for n in range(1, max_n + 1):
        out.append(Check(f"O_n ~ [2n,n] mod 1-q^n, n={n}",
                         residue_sums(O_poly(n), n) == residue_sums(gauss_binomial(2 * n, n), n)))
        out.append(Check(f"G_n ~ (-q;q)_n^2 mod 1-q^(n+1), n={n}",
                         residue_sums(G_poly(n), n + 1) == residue_sums(neg_q_pochhammer(n) ** 2, n + 1)))
        out.append(Check(f"|O_n| = C(2n,n), n={n}", O_poly(n).at_one() == comb(2 * n, n)))
    return out


def oracle_checks(max_n: int = 4, workers: int = 1) -> list[Check]:
    """Census against closed forms for the small parameters of every family."""
    cases = [("A", n) for n in range(3, max_n + 2)] + [(f, n) for f in "CBD" for n in range(2, max_n + 1)]
    out = []
    for fam, n in cases:
        a = census_vs_formula(AffineType(fam, n), workers=workers)
        out.append(Check(f"census {fam} n={n} window {a.max_len}", a.ok,
                         f"agrees from {a.agree_from}, period {a.period}"))
    return out


def decomposition_checks(cases=(("A", 4, 30), ("A", 5, 40), ("C", 2, 30), ("C", 3, 36))) -> list[Check]:
    out = []
    for fam, n, L in cases:
        t = AffineType(fam, n)
        ok, seen = True, 0
        for layer in iter_fc_layers(graph(t), L):
            for h in layer:
                m = len(h.chain(0))
                if fam == "A":
                    if 2 * m <= n:
                        continue
                    d = decompose_A(h, t)
                    back = recompose_A(d, t)
                    sym = d.k == n - d.k and d.low == d.high
                else:
                    if not is_alternating(h) or m <= n:
                        continue
                    d = decompose_C(h, t)
                    back = recompose_C(d, t)
                    sym = d.j == n - d.k and d.low == d.high
                seen += 1
                ok &= back == h and d.size(n) == len(h)
                if is_involution(h):
                    ok &= sym
        out.append(Check(f"decomposition {fam} n={n} up to length {L}", ok and seen > 0, f"{seen} heaps"))
    return out
