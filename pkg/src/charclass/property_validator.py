"""
Property Validation Module

This module re-derives the closed-form results symbolically and checks the algebraic
properties of every layer:
- ring: ring axioms, inverses, mod-2 reduction, oracle evaluation
- bundles: Whitney product, dual and tensor rules, Chern-to-Pontrjagin relation, stability
- stiefel: dimension and rank bookkeeping, gcd condition, symmetry in the weights
- classify: p1/w2 identities, three-way agreement, parallelizability table, span cases, known spaces

Randomized checks draw from numpy's default_rng(seed), so a failing counterexample
reproduces exactly under the same seed.
"""

import logging
import math
import time
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional

import numpy as np

from charclass.bundle_algebra import (
    BundleExpr,
    solve_stable,
    tensor_lines,
    total_chern,
    total_pontrjagin,
    total_sw,
)
from charclass.classifier import (
    DerivationMismatchError,
    classify,
    p1_closed_form,
    p1_intermediate_form,
    span_cases,
    w2_closed_form,
    w2_intermediate_form,
    w2_parity_condition,
)
from charclass.series_ring import (
    MultiPoly,
    RootBag,
    TruncSeries,
    add,
    invert,
    mul,
    multipoly_eval_symmetric,
    multipoly_mul,
    reduce_mod2,
)
from charclass.settings import load_verify_defaults
from charclass.stiefel_manifold import (
    NotAManifoldError,
    StiefelParams,
    dimension,
    iter_canonical_params,
    tangent_stable_equation,
    validate,
)

logger = logging.getLogger(__name__)

# Failure messages kept per suite; the count keeps going
MAX_REPORTED_FAILURES = 20


@dataclass
class SuiteResult:
    """
    Container for one property suite's results.
    """
    suite: str
    passed: bool = True
    checked: int = 0
    failures: List[str] = field(default_factory=list)
    failure_count: int = 0
    elapsed_seconds: float = 0.0

    def check(self, condition: bool, message: Callable[[], str]):
        """Count one check; record the lazily built message on failure."""
        self.checked += 1
        if not condition:
            self.add_failure(message())

    def add_failure(self, message: str):
        """Add a failure message."""
        self.failure_count += 1
        self.passed = False
        if len(self.failures) < MAX_REPORTED_FAILURES:
            self.failures.append(message)

    def summary(self) -> str:
        """Generate summary line."""
        status = "✅ PASSED" if self.passed else "❌ FAILED"
        line = f"  {self.suite:<10} {status}  checks={self.checked}  failures={self.failure_count}"
        return f"{line}  ({self.elapsed_seconds:.2f}s)"


class PropertyValidator:
    """
    Runs the property suites with a fixed seed.
    """

    def __init__(
        self,
        seed: int,
        samples: Optional[int] = None,
        cap: int = 2,
        defaults: Optional[Dict[str, Dict[str, Any]]] = None
    ):
        """
        Initialize the validator.

        Args:
            seed: Seed for numpy's default_rng
            samples: Overrides every randomized sample count (None = config defaults)
            cap: Degree cap for the oracle cross-checks (>= 2)
            defaults: Suite parameters (None = load config/verify_defaults.json)
        """
        if cap < 2:
            raise ValueError(f"degree cap must be >= 2, got {cap}")
        if samples is not None and samples < 1:
            raise ValueError(f"samples must be >= 1, got {samples}")

        self.seed = seed
        self.samples = samples
        self.cap = cap
        self.defaults = defaults if defaults is not None else load_verify_defaults()
        self.rng = np.random.default_rng(seed)

    def _count(self, suite: str, key: str) -> int:
        if self.samples is not None:
            return self.samples
        return int(self.defaults[suite][key])

    def _ints(self, low: int, high: int, size: int) -> List[int]:
        """size integers uniform in [low, high], as Python ints."""
        return [int(x) for x in self.rng.integers(low, high + 1, size=size)]

    def _random_series(self, cap: int, low: int, high: int, unit: bool = False) -> TruncSeries:
        coeffs = self._ints(low, high, cap + 1)
        if unit:
            coeffs[0] = 1 if self.rng.integers(0, 2) else -1
        return TruncSeries(tuple(coeffs))

    def _random_expression(self, max_exponent: int, max_multiplicity: int, positive: bool = False) -> BundleExpr:
        terms = self.rng.integers(1, 4)
        low = 1 if positive else -max_multiplicity
        pairs = tuple(
            (int(self.rng.integers(-max_exponent, max_exponent + 1)),
             int(self.rng.integers(low, max_multiplicity + 1)))
            for _ in range(terms)
        )
        return BundleExpr(pairs)

    # ------------------------------------------------------------------
    # ring
    # ------------------------------------------------------------------

    def check_ring(self) -> SuiteResult:
        """Ring axioms, two-sided inverses, mod-2 homomorphism, oracle evaluation."""
        result = SuiteResult("ring")
        config = self.defaults["ring"]
        low, high = config["coeff_range"]
        triples = self._count("ring", "triples")
        caps = sorted(set(config["caps"]) | {self.cap})

        for cap in caps:
            one = TruncSeries.one(cap)
            for _ in range(triples):
                a, b, c = (self._random_series(cap, low, high) for _ in range(3))
                ctx = lambda: f"cap={cap} a={a.coeffs} b={b.coeffs} c={c.coeffs}"
                result.check(add(a, b) == add(b, a), lambda: f"add not commutative: {ctx()}")
                result.check(mul(a, b) == mul(b, a), lambda: f"mul not commutative: {ctx()}")
                result.check(add(add(a, b), c) == add(a, add(b, c)), lambda: f"add not associative: {ctx()}")
                result.check(mul(mul(a, b), c) == mul(a, mul(b, c)), lambda: f"mul not associative: {ctx()}")
                result.check(
                    mul(a, add(b, c)) == add(mul(a, b), mul(a, c)),
                    lambda: f"mul does not distribute: {ctx()}"
                )
                result.check(
                    reduce_mod2(mul(a, b)) == reduce_mod2(a) * reduce_mod2(b),
                    lambda: f"reduce_mod2 not multiplicative: {ctx()}"
                )
                result.check(
                    reduce_mod2(add(a, b)) == reduce_mod2(a) + reduce_mod2(b),
                    lambda: f"reduce_mod2 not additive: {ctx()}"
                )

                u = self._random_series(cap, low, high, unit=True)
                inverse = invert(u)
                result.check(
                    mul(u, inverse) == one and mul(inverse, u) == one,
                    lambda: f"invert is not a two-sided inverse: cap={cap} u={u.coeffs}"
                )

        x, y = MultiPoly.generators(["x", "y"], cap=self.cap)
        for _ in range(max(1, triples // 10)):
            a1, b1, a2, b2, sx, sy = self._ints(-5, 5, 6)
            p = (1 + x * a1 + y * b1) * (1 + x * b1)
            q = 1 + x * a2 + y * b2
            target = {"x": sx, "y": sy}
            result.check(
                multipoly_eval_symmetric(multipoly_mul(p, q), target)
                == mul(multipoly_eval_symmetric(p, target), multipoly_eval_symmetric(q, target)),
                lambda: f"oracle evaluation not multiplicative: p={p} q={q} target={target}"
            )

        return result

    # ------------------------------------------------------------------
    # bundles
    # ------------------------------------------------------------------

    def check_bundles(self) -> SuiteResult:
        """Whitney, dual, tensor (oracle), Chern-to-Pontrjagin, stability, mod-2."""
        result = SuiteResult("bundles")
        config = self.defaults["bundles"]
        count = self._count("bundles", "expressions")
        max_exp, max_mult = config["max_exponent"], config["max_multiplicity"]
        cap = self.cap

        for _ in range(count):
            e1 = self._random_expression(max_exp, max_mult)
            e2 = self._random_expression(max_exp, max_mult)
            ctx = lambda: f"e1={e1} e2={e2} cap={cap}"

            result.check(
                total_chern(e1 + e2, cap) == mul(total_chern(e1, cap), total_chern(e2, cap)),
                lambda: f"Whitney product fails: {ctx()}"
            )
            result.check(
                total_chern(e1.dual(), cap) == total_chern(e1, cap).conjugate(),
                lambda: f"dual rule fails: {ctx()}"
            )

            chern = total_chern(e1, cap)
            pont = total_pontrjagin(e1, cap)
            signed = TruncSeries(tuple(
                (-1 if (i // 2) % 2 else 1) * pont[i] if i % 2 == 0 else 0
                for i in range(cap + 1)
            ))
            result.check(
                signed == mul(chern.conjugate(), chern),
                lambda: f"Chern-to-Pontrjagin relation not reproduced: {ctx()}"
            )

            padded = e1 + BundleExpr.trivial(complex_rank=3, real_rank=5)
            result.check(
                total_pontrjagin(padded, cap) == pont and total_sw(padded, cap) == total_sw(e1, cap),
                lambda: f"trivial summands changed a class: {ctx()}"
            )
            result.check(
                total_sw(e1, cap) == reduce_mod2(chern),
                lambda: f"total_sw differs from reduced Chern class: {ctx()}"
            )

            known = e2 + BundleExpr.trivial(real_rank=2)
            report = solve_stable(known, e1, cap)
            result.check(
                report.total_pontrjagin == total_pontrjagin(e1 - known, cap),
                lambda: f"solve_stable differs from the virtual difference: {ctx()}"
            )

            positive = self._random_expression(max_exp, max_mult, positive=True)
            bag = RootBag(tuple(
                (("t", m),) for m, k in positive.line_terms for _ in range(k)
            ))
            result.check(
                multipoly_eval_symmetric(bag.chern_polynomial(cap, ["t"]), {"t": 1}) == total_chern(positive, cap)
                and multipoly_eval_symmetric(bag.pontrjagin_polynomial(cap, ["t"]), {"t": 1})
                == total_pontrjagin(positive, cap),
                lambda: f"splitting-principle oracle disagrees: e={positive} cap={cap}"
            )

        for m in range(-max_exp, max_exp + 1):
            result.check(
                total_chern(BundleExpr.line(-m), cap) == TruncSeries.linear(-m, cap),
                lambda: f"c(xi^-m) != 1 - m c for m={m}"
            )

        bound = config["tensor_exponent_bound"]
        oracle = RootBag.formal(["x"]).tensor(RootBag.formal(["y"])).chern_polynomial(cap, ["x", "y"])
        for m1 in range(-bound, bound + 1):
            for m2 in range(-bound, bound + 1):
                result.check(
                    total_chern(tensor_lines(m1, m2), cap)
                    == multipoly_eval_symmetric(oracle, {"x": m1, "y": m2}),
                    lambda: f"tensor rule disagrees with oracle: m1={m1} m2={m2} cap={cap}"
                )

        return result

    # ------------------------------------------------------------------
    # stiefel
    # ------------------------------------------------------------------

    def check_stiefel(self) -> SuiteResult:
        """Dimension, rank bookkeeping, gcd condition, weight symmetry."""
        result = SuiteResult("stiefel")
        config = self.defaults["stiefel"]
        cap = self.cap

        for p in iter_canonical_params(config["n_max"], config["l_max"]):
            dim = dimension(p)
            equation = tangent_stable_equation(p)
            result.check(
                dim >= 2 and dim == 2 * p.n * p.k - p.k ** 2 - 1,
                lambda: f"dimension wrong for {p.label()}: {dim}"
            )
            result.check(
                equation.rank_balanced() and equation.rhs.real_rank == 2 * p.n * p.k,
                lambda: f"rank bookkeeping fails for {p.label()}"
            )
            result.check(
                equation.tangent_virtual().real_rank == dim,
                lambda: f"tangent virtual rank differs from dimension for {p.label()}"
            )

            permuted = StiefelParams(p.n, p.k, tuple(reversed(p.l)))
            permuted_eq = tangent_stable_equation(permuted)
            result.check(
                dimension(permuted) == dim
                and solve_stable(permuted_eq.known, permuted_eq.rhs, cap)
                == solve_stable(equation.known, equation.rhs, cap),
                lambda: f"classes not symmetric in the weights for {p.label()}"
            )

        for _ in range(self._count("stiefel", "gcd_samples")):
            k = int(self.rng.integers(1, 5))
            n = int(self.rng.integers(max(2, k), 8))
            weights = tuple(self._ints(-6, 6, k))
            g = math.gcd(*weights)
            try:
                validate(n, k, weights)
                accepted = True
            except NotAManifoldError:
                accepted = False
            result.check(
                accepted == (g == 1),
                lambda: f"validate disagrees with gcd for n={n} k={k} l={weights} (gcd {g})"
            )

        p1_pos = p1_closed_form(validate(5, 2, (1, 2)))
        p1_neg = p1_closed_form(validate(5, 2, (1, -2)))
        result.check(
            (p1_pos, p1_neg) == (24, 16),
            lambda: f"p1 sign sensitivity wrong: {(p1_pos, p1_neg)} != (24, 16)"
        )
        return result

    # ------------------------------------------------------------------
    # classify
    # ------------------------------------------------------------------

    def check_classify(self) -> SuiteResult:
        """Identities on random weights, then the parallelizability table over the grid."""
        result = SuiteResult("classify")
        config = self.defaults["classify"]
        samples = self._count("classify", "identity_samples")

        for _ in range(samples):
            k = int(self.rng.integers(1, config["k_max"] + 1))
            n = int(self.rng.integers(k, config["n_max"] + 1))
            bound = config["l_abs_max"]
            p = StiefelParams(n, k, tuple(self._ints(-bound, bound, k)))
            r = p.even_weight_count
            result.check(
                p1_intermediate_form(p) == p1_closed_form(p),
                lambda: f"p1 identity fails for n={p.n} k={p.k} l={p.l}"
            )
            result.check(
                ((n + r) * (k - r)) % 2 == ((n - k + 1) * (k - r)) % 2
                and w2_closed_form(p) == w2_intermediate_form(p),
                lambda: f"w2 parity identity fails for n={p.n} k={p.k} l={p.l}"
            )

        for p in iter_canonical_params(config["grid_n_max"], config["grid_l_max"]):
            try:
                c = classify(p, self.cap)
            except DerivationMismatchError as e:
                result.add_failure(str(e))
                continue

            expected_stable = p.k in (p.n - 1, p.n)
            result.check(
                c.stably_parallelizable == expected_stable
                and c.parallelizable == (expected_stable and (p.n, p.k) != (2, 1)),
                lambda: f"parallelizability table mismatch for {p.label()}"
            )
            violations = c.invariant_violations()
            result.check(not violations, lambda: f"{p.label()}: {'; '.join(violations)}")

            r = p.even_weight_count
            expected_cases = set()
            if p.k > 1 and p.k % 2 == 1:
                expected_cases.add(1)
            if p.k % 4 == 2 and p.k > 2 and p.n % 2 == 1:
                expected_cases.add(2)
            if p.k % 4 == 2 and p.k > 2 and p.n % 2 == 0 and r % 2 == 0:
                expected_cases.add(3)
            result.check(
                c.span_cases == expected_cases,
                lambda: f"span cases {sorted(c.span_cases)} != {sorted(expected_cases)} for {p.label()}"
            )
            if c.cohomology_applicable:
                result.check(
                    c.w2_possibly_nonzero == w2_parity_condition(p),
                    lambda: f"w2 nonvanishing differs from parity characterization for {p.label()}"
                )

            permuted = StiefelParams(p.n, p.k, tuple(reversed(p.l)))
            result.check(
                (p1_closed_form(permuted), w2_closed_form(permuted), span_cases(permuted))
                == (c.p1_coefficient, c.w2_coefficient, c.span_cases),
                lambda: f"verdict not symmetric under permutation for {p.label()}"
            )

        self._check_known_spaces(result, config["grid_n_max"])
        return result

    def _check_known_spaces(self, result: SuiteResult, n_max: int):
        # W(n,1;1) is complex projective space CP^(n-1): p = (1 + x^2)^n
        for n in range(2, n_max + 1):
            c = classify(validate(n, 1, (1,)), self.cap)
            expected = [math.comb(n, i // 2) if i % 2 == 0 else 0 for i in range(self.cap + 1)]
            result.check(
                c.p1_coefficient == n and list(c.tangent_pontrjagin.coeffs) == expected,
                lambda: f"CP^{n - 1} Pontrjagin class {c.tangent_pontrjagin} != binomial expansion"
            )

        cp2 = classify(validate(3, 1, (1,)), self.cap)
        result.check(cp2.w2_possibly_nonzero, lambda: "CP^2 must have w2 possibly nonzero")

        sphere = classify(validate(2, 1, (1,)), self.cap)
        result.check(
            sphere.dimension == 2 and sphere.stably_parallelizable and not sphere.parallelizable,
            lambda: "W(2,1;1) must be the 2-sphere: dimension 2, stably but not parallelizable"
        )

    # ------------------------------------------------------------------

    def run_all(self) -> List[SuiteResult]:
        """
        Run every suite in order.

        Returns:
            List of SuiteResult objects
        """
        suites = [
            self.check_ring,
            self.check_bundles,
            self.check_stiefel,
            self.check_classify,
        ]
        results = []
        for suite in suites:
            start = time.perf_counter()
            suite_result = suite()
            suite_result.elapsed_seconds = time.perf_counter() - start
            logger.info(
                f"Suite {suite_result.suite}: {'PASSED' if suite_result.passed else 'FAILED'} "
                f"({suite_result.checked} checks)"
            )
            results.append(suite_result)
        return results


def generate_summary_report(results: List[SuiteResult], seed: int) -> str:
    """
    Generate summary report of a verification run.

    Args:
        results: Suite results
        seed: Seed used for the run

    Returns:
        Report string
    """
    total = sum(r.checked for r in results)
    failed = sum(r.failure_count for r in results)

    report = f"""
{'=' * 72}
VERIFICATION SUMMARY (seed {seed})
{'=' * 72}
Total checks: {total}
Failed: {failed}

SUITES:
"""
    for result in results:
        report += result.summary() + "\n"
        for failure in result.failures:
            report += f"      - {failure}\n"

    report += f"{'=' * 72}\n"
    return report
