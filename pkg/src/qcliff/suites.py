"""Suite runner: executes named verification suites and assembles reports.

Reports separate *assertions* (expected truths; any failure flips the run to
not-ok) from *findings* (measured outcomes the run only records: vanishing
determinants, the momentum-diagonal discrepancy, closure-investigation
results).  Identical configurations produce byte-identical reports.
"""
from __future__ import annotations

import cmath
import random
from fractions import Fraction

from . import SCHEMA_VERSION
from .cliffalg import clifford_generators, frame_quadruple, omega_commute_exponent
from .phaseword import FRAME_THETA
from .qgroup import (
    alternative_diagonal_investigation,
    build_A,
    det_power_findings,
    entries_pairwise_commute,
    epsilon_squared_is_minus_one,
    matrix_power,
    matrix_product,
    oracle_relation_norms,
    plane_action,
    qdet,
    residual_factor,
    symbolic_quantization_suite,
    symplectic_check,
    verify_quantization,
)
from .qsu2 import amplitudes_squared, polar_report
from .weylqm import verify_weyl_pair

SUITE_NAMES = (
    "clifford",
    "frames",
    "qmatrix",
    "power",
    "plane",
    "symplectic",
    "investigate",
    "su2",
    "weyl",
)

DEFAULT_BOUND_COEFFS = [(1, 2, 3, 6), (2, 3, 4, 6), (1, 1, 1, 1)]
DEFAULT_VIOLATING_COEFFS = [(1, 1, 1, 2), (1, 2, 3, 5)]
DEFAULT_Q_GRID = ["1/2", "1", "2", "phase:1/7", "omega:23"]


def parse_q_spec(text: str):
    """'a/b' or 'a' for real q; 'phase:a/b' for exp(i*pi*a/b); 'omega:n' for exp(2*pi*i/n)."""
    text = str(text).strip()
    try:
        if text.startswith("phase:"):
            frac = Fraction(text.split(":", 1)[1])
            return cmath.exp(1j * cmath.pi * float(frac))
        if text.startswith("omega:"):
            n = int(text.split(":", 1)[1])
            if n < 1:
                raise ValueError("root order must be positive")
            return cmath.exp(2j * cmath.pi / n)
        return float(Fraction(text))
    except (ZeroDivisionError, ValueError) as exc:
        raise ValueError(f"bad q specification {text!r}: {exc}") from None


def _assertion(aid: str, ok: bool, **detail) -> dict:
    out = {"id": aid, "ok": bool(ok)}
    out.update(detail)
    return out


def _finding(fid: str, **payload) -> dict:
    out = {"id": fid}
    out.update(payload)
    return out


def _random_quadruples(seed: int):
    """One bound-satisfying and one bound-violating quadruple, seed-determined."""
    rng = random.Random(seed)
    x, y, X = (rng.randint(1, 9) for _ in range(3))
    bound = (x, y, X, Fraction(y * X, x))
    while True:
        vx, vy, vX, vY = (rng.randint(1, 9) for _ in range(4))
        if vx * vY != vy * vX:
            return bound, (vx, vy, vX, vY)


def suite_clifford(n: int) -> tuple[list, list]:
    system = clifford_generators(n, 4)
    exponents = {
        f"{i + 1},{j + 1}": omega_commute_exponent(system.generators[i], system.generators[j])
        for i in range(4)
        for j in range(i + 1, 4)
    }
    ident = system.generators[0].power(0)
    orders_ok = all(g.power(n) == ident for g in system.generators)
    return (
        [
            _assertion(
                f"clifford_pair_exponents_n{n}",
                all(v == 1 % n for v in exponents.values()),
                exponents=exponents,
            ),
            _assertion(f"clifford_orders_n{n}", orders_ok),
        ],
        [],
    )


def suite_frames(n: int) -> tuple[list, list]:
    frame = frame_quadruple(n)
    measured = frame.exponent_matrix()
    expected = tuple(tuple(v % n for v in row) for row in FRAME_THETA)
    copy = frame_quadruple(n, gamma_offset=2)
    copies_commute = all(
        omega_commute_exponent(a, b) == 0
        for a in frame.operators()
        for b in copy.operators()
    )
    return (
        [
            _assertion(
                f"frame_exponent_matrix_n{n}",
                measured == expected,
                measured=[list(r) for r in measured],
                expected=[list(r) for r in expected],
            ),
            _assertion(f"frame_commuting_copies_n{n}", copies_commute),
        ],
        [],
    )


def _coeff_label(coeffs) -> str:
    return ",".join(str(v) for v in coeffs)


def suite_qmatrix(n: int, coeffs_list, violating_list, seed: int) -> tuple[list, list]:
    assertions = []
    findings = []
    extra_bound, extra_violating = _random_quadruples(seed)
    for coeffs in list(coeffs_list) + [extra_bound]:
        A = build_A(n, *coeffs)
        report = verify_quantization(A)
        assertions.append(
            _assertion(
                f"quantization_holds_n{n}_c{_coeff_label(coeffs)}",
                report.all_hold(),
                failing=report.failing(),
            )
        )
        det = qdet(A)
        assertions.append(
            _assertion(
                f"qdet_forms_agree_n{n}_c{_coeff_label(coeffs)}",
                det.forms_agree and det.central,
            )
        )
        findings.append(
            _finding(
                f"qdet_vanishes_n{n}_c{_coeff_label(coeffs)}",
                det_is_zero=det.vanishes,
                centrality_vacuous=det.centrality_vacuous,
            )
        )
        if n <= 4:
            norms = oracle_relation_norms(A)
            assertions.append(
                _assertion(
                    f"oracle_agrees_n{n}_c{_coeff_label(coeffs)}",
                    max(norms.values()) < 1e-10,
                    residual_norms=norms,
                )
            )
    for coeffs in list(violating_list) + [extra_violating]:
        A = build_A(n, *coeffs)
        report = verify_quantization(A)
        expected_failure = ["diag_ad"] if n > 2 else []
        assertions.append(
            _assertion(
                f"only_diagonal_fails_n{n}_c{_coeff_label(coeffs)}",
                report.failing() == expected_failure,
                failing=report.failing(),
            )
        )
        fact = residual_factor(A)
        assertions.append(
            _assertion(
                f"residual_factorises_n{n}_c{_coeff_label(coeffs)}",
                fact.verified and fact.vanishes_iff_bound,
                gap=str(fact.gap),
            )
        )
        det = qdet(A)
        findings.append(
            _finding(
                f"qdet_forms_n{n}_c{_coeff_label(coeffs)}",
                forms_agree=det.forms_agree,
                det_is_zero=det.vanishes,
            )
        )
        if n <= 4:
            norms = oracle_relation_norms(A)
            exact_verdicts = {o.relation_id: o.holds() for o in report.outcomes}
            agree = all(
                exact_verdicts[rel] == (norms[rel] < 1e-10) for rel in norms
            )
            assertions.append(
                _assertion(
                    f"oracle_verdicts_agree_n{n}_c{_coeff_label(coeffs)}",
                    agree,
                    residual_norms=norms,
                )
            )
    return assertions, findings


def suite_power(n: int, coeffs) -> tuple[list, list]:
    assertions = []
    findings = []
    A = build_A(n, *coeffs)
    for k in range(1, n + 1):
        Ak = matrix_power(A, k)
        report = verify_quantization(Ak)
        assertions.append(
            _assertion(
                f"power_relations_n{n}_k{k}",
                report.all_hold(),
                failing=report.failing(),
            )
        )
    assertions.append(
        _assertion(f"nth_power_entries_commute_n{n}", entries_pairwise_commute(matrix_power(A, n)))
    )
    B = build_A(n, 2, 3, 4, 6, slot_offset=2)
    product = matrix_product(A, B)
    assertions.append(
        _assertion(f"product_passes_at_exponent_1_n{n}", verify_quantization(product).all_hold())
    )
    det_findings = det_power_findings(A, min(3, n))
    for entry in det_findings:
        findings.append(_finding(f"det_power_readings_n{n}_k{entry['k']}", **entry))
    square = next((e for e in det_findings if e["k"] == 2), None)
    if square is not None:
        assertions.append(
            _assertion(
                f"det_square_identity_n{n}",
                square["det_at_exponent_2_equals_power"],
                both_sides_zero=square["both_sides_zero"],
            )
        )
    return assertions, findings


def suite_plane(n: int, coeffs_list, violating_list) -> tuple[list, list]:
    assertions = []
    for coeffs in coeffs_list:
        report = plane_action(build_A(n, *coeffs))
        assertions.append(
            _assertion(f"plane_closure_n{n}_c{_coeff_label(coeffs)}", report.holds())
        )
    for coeffs in violating_list:
        report = plane_action(build_A(n, *coeffs))
        ok = (
            report.plane_relation_ok
            and report.coords_commute_with_entries
            and (not report.closure_ok if n > 2 else report.closure_ok)
        )
        assertions.append(
            _assertion(
                f"plane_closure_fails_without_bound_n{n}_c{_coeff_label(coeffs)}",
                ok,
                residual_terms=len(report.closure_residual.terms),
            )
        )
    return assertions, []


def suite_symplectic(n: int, coeffs_list, violating_list) -> tuple[list, list]:
    assertions = [_assertion(f"epsilon_squared_n{n}", epsilon_squared_is_minus_one(n))]
    findings = []
    for coeffs in coeffs_list:
        report = symplectic_check(build_A(n, *coeffs))
        assertions.append(
            _assertion(f"symplectic_n{n}_c{_coeff_label(coeffs)}", report.holds())
        )
    for coeffs in violating_list:
        report = symplectic_check(build_A(n, *coeffs))
        findings.append(
            _finding(
                f"symplectic_without_bound_n{n}_c{_coeff_label(coeffs)}",
                holds=report.holds(),
                left_ok=report.transpose_left_ok,
                right_ok=report.transpose_right_ok,
            )
        )
    return assertions, findings


def suite_investigate(n: int | None) -> tuple[list, list]:
    symbolic = symbolic_quantization_suite()
    inv = alternative_diagonal_investigation(n=n, witness=True)
    assertions = [
        _assertion(
            "symbolic_quantization_suite",
            symbolic["row_ab_zero"]
            and symbolic["row_cd_zero"]
            and symbolic["col_ac_zero"]
            and symbolic["col_bd_zero"]
            and symbolic["diag_bc_zero"]
            and symbolic["diag_ad_divisible_by_bound"]
            and symbolic["diag_ad_quotient_is_expected"],
            quotient=symbolic["diag_ad_quotient"],
        ),
        _assertion(
            "investigation_scenario_relations_hold",
            inv["scenario"]["rows_cols_hold"] and inv["scenario"]["alternative_diagonal_holds"],
        ),
        _assertion(
            "closure_restored_under_both_bounds",
            inv["standard_closure_restored_under_both_bounds"],
        ),
    ]
    witnesses = inv.get("witnesses", {})
    for name, wit in witnesses.items():
        assertions.append(
            _assertion(f"witness_oracle_agreement_{name}", wit["exact_oracle_agree"])
        )
    findings = [
        _finding("alternative_diagonal_closure", **{
            "modulus": inv["modulus"],
            "product_relations": inv["product_relations"],
        })
    ]
    if witnesses:
        findings.append(_finding("investigation_witnesses", **witnesses))
    return assertions, findings


def suite_su2(two_j_max: int, q_specs) -> tuple[list, list]:
    assertions = []
    findings = []
    for spec in q_specs:
        q = parse_q_spec(spec)
        worst = 0.0
        degenerate_cells = []
        for two_j in range(0, two_j_max + 1):
            cell = polar_report(two_j, q)
            if cell["degenerate"]:
                degenerate_cells.append(two_j)
                continue
            worst = max(worst, cell["max_residual"])
        assertions.append(
            _assertion(
                f"su2_residuals_q_{spec.replace(':', '_').replace('/', '_')}",
                worst < 1e-10,
                max_residual=worst,
            )
        )
        if degenerate_cells:
            findings.append(
                _finding(
                    f"su2_degenerate_cells_q_{spec.replace(':', '_').replace('/', '_')}",
                    two_j=degenerate_cells,
                )
            )
    classical_ok = True
    for two_j in range(0, two_j_max + 1):
        plus_sq, minus_sq = amplitudes_squared(two_j, 1)
        for i in range(two_j + 1):
            classical_ok &= plus_sq[i] == i * (two_j - i + 1)
            classical_ok &= minus_sq[i] == (two_j - i) * (i + 1)
    assertions.append(_assertion("su2_classical_amplitudes_exact", classical_ok))
    return assertions, findings


def suite_weyl(n: int) -> tuple[list, list]:
    report = verify_weyl_pair(n)
    assertions = [
        _assertion(f"weyl_exact_identities_n{n}", report["exact_ok"]),
        _assertion(
            f"weyl_float_exponential_n{n}",
            report["float_ok"],
            residual=report["float_exponential_residual"],
        ),
    ]
    findings = [
        _finding(
            f"weyl_momentum_diagonal_n{n}",
            diagonal_discrepancy=report["diagonal_discrepancy"],
            formula_diagonal=0,
            formula_exponential_phase=report["formula_exponential_phase"],
        )
    ]
    return assertions, findings


def run_suite(config: dict) -> dict:
    """Execute the selected suites and assemble a deterministic report."""
    cfg = {
        "suite": config.get("suite", "all"),
        "n": int(config.get("n", 3)),
        "coeffs": [str(v) for v in (config.get("coeffs") or (1, 2, 3, 6))],
        "coeffs2": [str(v) for v in config["coeffs2"]] if config.get("coeffs2") else None,
        "k": int(config.get("k", 1)),
        "two_j": int(config.get("two_j", 10)),
        "q": [str(s) for s in (config.get("q") or DEFAULT_Q_GRID)],
        "seed": int(config.get("seed", 0)),
        "backend": config.get("backend", "exact"),
        "schema_version": SCHEMA_VERSION,
    }
    n = cfg["n"]
    if n < 2:
        raise ValueError("quantum-group suites need n >= 2")
    coeffs = tuple(Fraction(v) for v in cfg["coeffs"])
    selected = SUITE_NAMES if cfg["suite"] == "all" else (cfg["suite"],)
    unknown = [s for s in selected if s not in SUITE_NAMES]
    if unknown:
        raise ValueError(f"unknown suite: {unknown[0]}")

    bound_list = [coeffs] + [c for c in DEFAULT_BOUND_COEFFS if c != coeffs]
    suites = {}
    for name in SUITE_NAMES:
        if name not in selected:
            continue
        if name == "clifford":
            result = suite_clifford(n)
        elif name == "frames":
            result = suite_frames(n)
        elif name == "qmatrix":
            result = suite_qmatrix(n, bound_list, DEFAULT_VIOLATING_COEFFS, cfg["seed"])
        elif name == "power":
            result = suite_power(n, coeffs)
        elif name == "plane":
            result = suite_plane(n, bound_list[:2], DEFAULT_VIOLATING_COEFFS[:1])
        elif name == "symplectic":
            result = suite_symplectic(n, bound_list[:2], DEFAULT_VIOLATING_COEFFS[:1])
        elif name == "investigate":
            result = suite_investigate(n if n <= 3 else None)
        elif name == "su2":
            result = suite_su2(cfg["two_j"], cfg["q"])
        elif name == "weyl":
            result = suite_weyl(n)
        assertions, findings = result
        suites[name] = {"assertions": assertions, "findings": findings}

    failures = sum(
        1 for body in suites.values() for a in body["assertions"] if not a["ok"]
    )
    total = sum(len(body["assertions"]) for body in suites.values())
    return {
        "schema_version": SCHEMA_VERSION,
        "config": cfg,
        "suites": suites,
        "counts": {
            "assertions": total,
            "failures": failures,
            "findings": sum(len(body["findings"]) for body in suites.values()),
        },
        "ok": failures == 0,
    }
