"""Golden suite: every reference value recomputed through the pipeline and compared."""

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, List, Tuple

from YM_Beta.cohomology import (
    beta_one_loop,
    coboundary_B_Bdual,
    coboundary_F_Bdual,
    first_order_action,
    reduce_to_class,
)
from YM_Beta.constants import BB, FB, FF, SPACETIME_INDICES
from YM_Beta.diagrams import (
    aa_split_counterterm,
    analytic_weight_I1,
    analytic_weight_tt,
    analytic_weight_xt,
    analytic_weight_xxt,
    analytic_weight_xxx,
    analytic_weight_xxx2,
    combinatorial_weight,
    diagram_counterterm,
    diagram_spec,
    evaluate_diagrams,
    reduced_counterterms,
    tadpole_weights,
)
from YM_Beta.errors import BetaError
from YM_Beta.exact import to_fraction
from YM_Beta.gaussian import add_index, unit
from YM_Beta.lie import adjoint_representation, builtin_algebra, casimir_adjoint
from YM_Beta.repcheck import K1, K2, S_PLUS, has_trivial_summand, tensor_decompose
from YM_Beta.spacetime import vertex_tensors
from YM_Beta.spacetime.gamma import expected_trace4
from YM_Beta.tintegrals import TRationalTerm, clear_tau, log_coefficient, numeric_singular_fit, wheel_convergence_check

logger = logging.getLogger("YM_Beta")


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    expected: str
    actual: str


def _check(name: str, expected, compute: Callable[[], object], compare=None) -> CheckResult:
    try:
        actual = compute()
    except BetaError as exc:
        return CheckResult(name, False, str(expected), f"{exc.module} error: {exc}")
    passed = compare(actual, expected) if compare else actual == expected
    return CheckResult(name, bool(passed), str(expected), str(actual))


def _close(tolerance: float):
    return lambda actual, expected: abs(float(actual) - float(expected)) < tolerance


# ---------------------------------------------------------------------------
# Check groups
# ---------------------------------------------------------------------------

def _tintegral_checks() -> List[CheckResult]:
    checks = [
        _check("clear_tau t1^-3 t2^-2 tau^-3", (0, 1, 3), lambda: clear_tau(1, 3, 2, 3).exponents),
        _check("clear_tau t1^-3 t2^-3 tau^-4", (1, 1, 4), lambda: clear_tau(1, 3, 3, 4).exponents),
    ]
    for exponents, expected in (((0, 1, 3), Fraction(-1, 2)), ((0, 0, 3), Fraction(0)),
                                ((1, 1, 4), Fraction(-1, 6)), ((2, 0, 4), Fraction(-1, 3))):
        term = TRationalTerm(Fraction(1), *exponents)
        checks.append(_check(f"log_coefficient{exponents}", expected, lambda term=term: log_coefficient(term)))
    checks.append(_check(
        "numeric fit (0,1,3)", -0.5, lambda: numeric_singular_fit(TRationalTerm(Fraction(1), 0, 1, 3)), _close(1e-3)
    ))
    return checks


def _analytic_checks() -> List[CheckResult]:
    zero = (0,) * len(SPACETIME_INDICES)
    return [
        _check("I1(1,2)", {add_index(unit(1), unit(2)): Fraction(-1, 6)}, lambda: analytic_weight_I1(1, 2)),
        _check("I1(1,1)", {unit(1, 2): Fraction(-1, 4), unit(2, 2): Fraction(-1, 12),
                           unit(3, 2): Fraction(-1, 12), unit(4, 2): Fraction(-1, 12)},
               lambda: analytic_weight_I1(1, 1)),
        _check("xt(1)", {unit(1): Fraction(-1, 2)}, lambda: analytic_weight_xt(1)),
        _check("xxx(1,2,2)", {unit(1): Fraction(-1, 6)}, lambda: analytic_weight_xxx(1, 2, 2)),
        _check("xxx(1,1,2)", {unit(2): Fraction(1, 12)}, lambda: analytic_weight_xxx(1, 1, 2)),
        _check("tt", {zero: Fraction(-1)}, analytic_weight_tt),
        _check("xxt(1,1)", {zero: Fraction(1, 4)}, lambda: analytic_weight_xxt(1, 1)),
        _check("xxt(1,2)", {}, lambda: analytic_weight_xxt(1, 2)),
        _check("xxx2 vanishes", True, lambda: all(
            not analytic_weight_xxx2(i, j, m) for i, j, m in itertools.product(SPACETIME_INDICES, repeat=3)
        )),
    ]


def _aab_pairing(a: int, b: int) -> Fraction:
    """sum over m, n of AAB(m, n, a) AAB(n, m, b): both A-A lines joined crosswise."""
    aab = vertex_tensors()["AAB"]
    return sum(
        (to_fraction(aab(f"A{m}", f"A{n}", f"B{a}") * aab(f"A{n}", f"A{m}", f"B{b}"))
         for m, n in itertools.product(SPACETIME_INDICES, repeat=2)),
        Fraction(0),
    )


def _combinatorial_checks() -> List[CheckResult]:
    I, II, V = (diagram_spec(label) for label in ("I", "II", "V"))
    checks = [
        _check("C_I a=b=i=j", Fraction(3), lambda: combinatorial_weight(I, (1, 1, 1, 1))),
        _check("C_I a=b, i=j!=a", Fraction(-2), lambda: combinatorial_weight(I, (1, 1, 2, 2))),
        _check("C_I a=b, i!=j", Fraction(0), lambda: combinatorial_weight(I, (1, 1, 1, 2))),
        _check("C_I (i,j)=(b,a)", Fraction(3), lambda: combinatorial_weight(I, (1, 2, 2, 1))),
        _check("C_I (i,j)=(a,b)", Fraction(2), lambda: combinatorial_weight(I, (1, 2, 1, 2))),
        _check("C_II (i,j)=(a,b)", Fraction(-1), lambda: combinatorial_weight(II, (2, 3, 2, 3))),
        _check("C_II (i,j)=(b,a)", Fraction(0), lambda: combinatorial_weight(II, (2, 3, 3, 2))),
    ]
    for a, b in itertools.product((2, 3, 4), repeat=2):
        checks.append(_check(
            f"AAB pairing a={a} b={b}", Fraction(-4 if a == b else 0), lambda a=a, b=b: _aab_pairing(a, b),
        ))
    checks.append(_check("C_V = -tr(G^i G^a G^j G^b), 256 cases", True, lambda: all(
        combinatorial_weight(V, (a, b, i, j)) == -expected_trace4(i, a, j, b)
        for a, b, i, j in itertools.product(SPACETIME_INDICES, repeat=4)
    )))
    return checks


def _diagram_checks() -> List[CheckResult]:
    reduced = reduced_counterterms(evaluate_diagrams())
    expected = {
        "I+II": (FF, Fraction(-4, 3)),
        "III": (FB, Fraction(1)),
        "IV": (BB, Fraction(-4)),
        "V": (FF, Fraction(8, 3)),
    }
    checks = []
    for label, (key, value) in expected.items():
        checks.append(_check(
            f"diagram {label}", {key: value},
            lambda label=label: {k: v for k, v in reduced[label].terms.items() if v},
        ))
    for label in ("III", "IV"):
        spec = diagram_spec(label)
        checks.append(_check(
            f"diagram {label} from P_AA summands", True,
            lambda spec=spec: aa_split_counterterm(spec) == diagram_counterterm(spec),
        ))
    checks.append(_check("tadpoles vanish", True, lambda: all(
        weight.value == 0 for weight in tadpole_weights().values()
    )))
    return checks


def _cohomology_checks() -> List[CheckResult]:
    checks = [
        _check("d(F+ ^ Bv) is exact", Fraction(0), lambda: reduce_to_class(coboundary_F_Bdual()).coefficient),
        _check("d(B ^ Bv) is exact", Fraction(0), lambda: reduce_to_class(coboundary_B_Bdual()).coefficient),
        _check("first-order action class", Fraction(1, 2), lambda: reduce_to_class(first_order_action()).coefficient),
        _check("C(su2-eps)", Fraction(2), lambda: casimir_adjoint(builtin_algebra("su2-eps").data)),
    ]
    for name in ("su2", "su3"):
        L = builtin_algebra(name).data
        checks.append(_check(
            f"b({name}, pure)", Fraction(-13, 6) * casimir_adjoint(L), lambda L=L: beta_one_loop(L).b
        ))
        checks.append(_check(
            f"b({name}, adjoint)", Fraction(-5, 6) * casimir_adjoint(L),
            lambda L=L: beta_one_loop(L, [(adjoint_representation(L), 1)]).b,
        ))
    return checks


def _repcheck_checks() -> List[CheckResult]:
    return [
        _check("K1 x K2 has no (0,0)", False, lambda: has_trivial_summand(tensor_decompose(K1, K2))),
        _check("dim K1 x K2", 48, lambda: tensor_decompose(K1, K2).dimension),
        _check("S+ x S+ has one (0,0)", 1, lambda: tensor_decompose(S_PLUS, S_PLUS).multiplicity(0, 0)),
    ]


def _wheel_checks() -> List[CheckResult]:
    checks = [_check("wheel n=2 diverges", False, lambda: wheel_convergence_check(2).bounded)]
    for n in (3, 4, 5):
        checks.append(_check(f"wheel n={n} bounded", True, lambda n=n: wheel_convergence_check(n).bounded))
    return checks


GROUPS: Tuple[Tuple[str, Callable[[], List[CheckResult]]], ...] = (
    ("t-integrals", _tintegral_checks),
    ("analytic weights", _analytic_checks),
    ("combinatorial weights", _combinatorial_checks),
    ("diagrams", _diagram_checks),
    ("cohomology", _cohomology_checks),
    ("repcheck", _repcheck_checks),
    ("wheels", _wheel_checks),
)


def run_golden_suite() -> List[Tuple[str, CheckResult]]:
    results = []
    for group, build in GROUPS:
        for check in build():
            if not check.passed:
                logger.warning("FAIL %s / %s: expected %s, got %s", group, check.name, check.expected, check.actual)
            results.append((group, check))
    failed = sum(not check.passed for _, check in results)
    logger.info("Golden suite: %d checks, %d failed", len(results), failed)
    return results


def render_suite(results: List[Tuple[str, CheckResult]]) -> str:
    lines = []
    for group, check in results:
        status = "PASS" if check.passed else "FAIL"
        line = f"{status}  {group:<22} {check.name}"
        if not check.passed:
            line += f"  (expected {check.expected}, got {check.actual})"
        lines.append(line)
    failed = sum(not check.passed for _, check in results)
    lines.append(f"{len(results) - failed}/{len(results)} checks passed")
    return "\n".join(lines) + "\n"
