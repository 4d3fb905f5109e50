"""Built-in consistency suites behind the `selftest` CLI command.

Each suite re-derives a family of values two independent ways and counts
agreements; any disagreement is a bug.  These deliberately overlap with the
pytest suite so a deployed installation can be smoke-checked without a test
harness present.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from decimal import Decimal, getcontext

from . import bn_core, maximal_loci
from .errors import InternalError
from .exact_arith import floor_neg_2sqrt, isqrt, surd_sign


@dataclass
class SuiteResult:
    name: str
    passed: int = 0
    failed: int = 0
    failures: list[str] = field(default_factory=list)

    def check(self, ok: bool, detail: str) -> None:
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            if len(self.failures) < 8:
                self.failures.append(detail)


def suite_exact_arithmetic() -> SuiteResult:
    res = SuiteResult("exact-arithmetic")
    for n in range(0, 20_000):
        s = isqrt(n)
        res.check(s * s <= n < (s + 1) * (s + 1), f"isqrt floor property fails at n={n}")
    for n in range(1, 5_000):
        # linear-search oracle for ceil(2*sqrt(n))
        m = 0
        while m * m < 4 * n:
            m += 1
        res.check(floor_neg_2sqrt(n) == -m, f"floor_neg_2sqrt({n}) != {-m}")
    for n in range(1, 10_000):
        a = isqrt(4 * n)
        b = isqrt(4 * n - 1)
        ca = a if a * a == 4 * n else a + 1
        cb = b if b * b == 4 * n - 1 else b + 1
        res.check(ca == cb, f"ceil(sqrt(4n)) != ceil(sqrt(4n-1)) at n={n}")
    getcontext().prec = 60
    rng = random.Random(20260815)
    for _ in range(2_000):
        a = rng.randint(-(10**6), 10**6)
        b = rng.randint(-(10**6), 10**6)
        m = rng.randint(0, 10**3)
        numeric = Decimal(a) + Decimal(b) * Decimal(m).sqrt()
        if abs(numeric) < Decimal("1e-30"):
            # exact zero: cross-multiplied magnitudes agree and signs oppose
            res.check(
                a * a == b * b * m and a * b <= 0 and surd_sign(a, b, m) == 0,
                f"zero surd misclassified at ({a},{b},{m})",
            )
            continue
        want = 1 if numeric > 0 else -1
        res.check(
            surd_sign(a, b, m) == want,
            f"surd_sign({a},{b},{m}) != numeric sign {want}",
        )
    return res


def suite_kappa_oracle(gmax: int) -> SuiteResult:
    res = SuiteResult("kappa-oracle-equivalence")
    for g in range(3, gmax + 1):
        for r in range(1, g // 2 + 1):
            for d in range(2 * r, g):
                if bn_core.rho(g, r, d) >= 0:
                    continue
                closed = bn_core.kappa_closed(g, r, d)
                brute = bn_core.kappa_brute(g, r, d)
                res.check(
                    closed.value == brute.value,
                    f"closed {closed.value} != brute {brute.value} at ({g},{r},{d})",
                )
    return res


def suite_maximal_degree(gmax: int) -> SuiteResult:
    res = SuiteResult("maximal-degree-formulas")
    for g in range(3, gmax + 1):
        for r in range(1, maximal_loci.r_max_expected(g) + 1):
            d = maximal_loci.d_max(g, r)
            res.check(
                bn_core.rho(g, r, d) < 0 <= bn_core.rho(g, r, d + 1),
                f"d_max({g},{r}) = {d} is not the last degree with rho < 0",
            )
            res.check(
                maximal_loci.rho_at_dmax(g, r) == bn_core.rho(g, r, d),
                f"rho_at_dmax({g},{r}) != rho",
            )
            res.check(
                maximal_loci.kappa_at_dmax(g, r) == bn_core.kappa(g, r, d).value,
                f"kappa_at_dmax({g},{r}) != kappa",
            )
    return res


def suite_kappa_bounds(gmax: int) -> SuiteResult:
    res = SuiteResult("kappa-bounds")
    for g in range(3, gmax + 1):
        for r in range(1, maximal_loci.r_max_expected(g) + 1):
            k = maximal_loci.kappa_at_dmax(g, r)
            lower, upper = maximal_loci.kappa_bounds(g, r)
            res.check(
                lower.minus_int(k).sign() < 0 <= upper.minus_int(k).sign(),
                f"kappa {k} outside bounds at ({g},{r})",
            )
    return res


def suite_certificates(gmax: int) -> SuiteResult:
    from . import certificates

    res = SuiteResult("certificate-reverification")
    example = None
    for g in range(4, min(gmax, 30) + 1):
        report = certificates.genus_report(g, ledger=None)
        for pair in report.pairs:
            cert = pair.status.certificate
            if cert is None:
                continue
            res.check(cert.verify(), f"certificate fails to re-verify: {cert}")
            example = example or cert
    if example is not None:
        corrupt = certificates.NonContainmentCertificate(
            example.source,
            example.target,
            example.rule,
            {**example.witness, next(iter(example.witness)): 10**6},
        )
        res.check(not corrupt.verify(), "corrupted witness still verifies")
    return res


def run_all(gmax: int = 60) -> list[SuiteResult]:
    return [
        suite_exact_arithmetic(),
        suite_kappa_oracle(gmax),
        suite_maximal_degree(max(gmax, 60)),
        suite_kappa_bounds(max(gmax, 60)),
        suite_certificates(gmax),
    ]


def render(results: list[SuiteResult]) -> tuple[str, bool]:
    """Human-readable summary and overall pass flag."""
    lines = []
    ok = True
    for r in results:
        status = "PASS" if r.failed == 0 else "FAIL"
        ok = ok and r.failed == 0
        lines.append(f"{status}  {r.name}: {r.passed} passed, {r.failed} failed")
        lines.extend(f"      {msg}" for msg in r.failures)
    total_pass = sum(r.passed for r in results)
    total_fail = sum(r.failed for r in results)
    lines.append(f"total: {total_pass} passed, {total_fail} failed")
    return "\n".join(lines), ok


def assert_all(gmax: int = 30) -> None:
    """Raise InternalError if any suite fails (used by library callers)."""
    results = run_all(gmax)
    bad = [r for r in results if r.failed]
    if bad:
        raise InternalError("; ".join(f"{r.name}: {r.failures[:1]}" for r in bad))
