"""Acceptance suite: every criterion at its stated tolerance.

Each check prints one pass/fail line (run with ``pytest -s`` to see them
live).  Tolerances are the stated figure plus the reported error bounds of
the quantities entering the comparison.  All closed-form coefficients are
frozen here as exact rationals.
"""

import math
import random
from fractions import Fraction

import pytest

from zetatails import (
    ZetaPolynomial,
    brute_tail_product_sum,
    duality,
    evaluate_formula,
    integer_square_closed_form,
    mzv,
    mzv_integral,
    proposition_kk1,
    proposition_square,
    reduce_double_odd,
    reduce_n1,
    repeated_tail_formula,
    tail_product_formula,
    weak_ordering_count,
    zeta,
)
from zetatails.verify import admissible_integer_indices

F = Fraction

SEED = 20240811


def _report(name: str, ok: bool, detail: str) -> None:
    print(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
    assert ok, f"{name}: {detail}"


def _check_product_case(name, exponents, poly_terms, tol):
    brute = brute_tail_product_sum(exponents)
    closed = ZetaPolynomial(poly_terms).evaluate(1e-9)
    diff = abs(brute.value - closed.value)
    bound = tol + brute.abs_error_bound + closed.abs_error_bound
    _report(name, diff <= bound, f"|diff|={diff:.3e} tol+bounds={bound:.3e}")


def test_criterion_01_square_of_weight2_tails():
    _check_product_case(
        "criterion-01 brute(2,2)",
        (2.0, 2.0),
        {(3,): F(3), (4,): F(-5, 2)},
        1e-8,
    )


def test_criterion_02_pair_32():
    _check_product_case(
        "criterion-02 brute(3,2)",
        (3.0, 2.0),
        {(4,): F(2), (2, 3): F(-1)},
        1e-8,
    )


def test_criterion_03_pair_43():
    _check_product_case(
        "criterion-03 brute(4,3)",
        (4.0, 3.0),
        {(6,): F(-5, 6), (3, 3): F(3, 2), (3, 4): F(-1)},
        1e-8,
    )


def test_criterion_04_square_of_weight3_tails():
    _check_product_case(
        "criterion-04 brute(3,3)",
        (3.0, 3.0),
        {(5,): F(-10), (2, 3): F(6), (3, 3): F(-1)},
        1e-8,
    )


def test_criterion_05_cube_of_weight2_tails():
    _check_product_case(
        "criterion-05 brute(2,2,2)",
        (2.0, 2.0, 2.0),
        {(2, 3): F(9), (5,): F(-25, 2), (6,): F(-35, 8)},
        1e-7,
    )


def test_criterion_06_triple_322():
    _check_product_case(
        "criterion-06 brute(3,2,2)",
        (3.0, 2.0, 2.0),
        {(6,): F(7, 6), (3, 3): F(3, 2), (2, 2, 3): F(-1)},
        1e-7,
    )


def test_criterion_07_triple_332():
    _check_product_case(
        "criterion-07 brute(3,3,2)",
        (3.0, 3.0, 2.0),
        {(7,): F(77, 8), (2, 2, 3): F(3), (2, 5): F(-10), (2, 3, 3): F(-1)},
        1e-7,
    )


def test_criterion_08_fourfold_r2():
    _check_product_case(
        "criterion-08 brute(2,2,2,2)",
        (2.0, 2.0, 2.0, 2.0),
        {(7,): F(-301, 4), (2, 5): F(10), (2, 2, 3): F(102, 5), (8,): F(-175, 24)},
        1e-6,
    )


def test_criterion_09_random_formula_suite():
    rng = random.Random(SEED)
    failures = []
    for i in range(50):
        k = rng.choice((2, 3))
        while True:
            exps = tuple(rng.uniform(1.2, 4.0) for _ in range(k))
            if sum(exps) > k + 1.01:
                break
        formula = tail_product_formula(exps)
        lhs = evaluate_formula(formula, exps, 1e-7)
        rhs = brute_tail_product_sum(exps, 1e-7)
        diff = abs(lhs.value - rhs.value)
        bound = lhs.abs_error_bound + rhs.abs_error_bound + 1e-6
        if diff > bound:
            failures.append((i, exps, diff, bound))
    _report(
        "criterion-09 random formula-vs-brute (50 draws)",
        not failures,
        f"failures={failures!r}" if failures else "0 failures",
    )


def test_criterion_10_integral_representation():
    rep = mzv_integral(2.0, 1.0, 1e-9)
    z3 = zeta(3.0, 1e-11)
    diff = abs(rep.value - z3.value)
    bound = 1e-8 + rep.abs_error_bound + z3.abs_error_bound
    _report(
        "criterion-10a integral(2,1) = zeta(3)",
        diff <= bound,
        f"|diff|={diff:.3e} tol+bounds={bound:.3e}",
    )
    rng = random.Random(SEED + 1)
    failures = []
    for i in range(20):
        while True:
            r = rng.uniform(1.2, 4.0)
            q = rng.uniform(2.0 - r + 0.2, 4.0)
            if abs(q - round(q)) > 1e-3:
                break
        a = mzv_integral(r, q, 1e-8)
        b = mzv((r, q), 1e-9)
        diff = abs(a.value - b.value)
        bound = a.abs_error_bound + b.abs_error_bound + 1e-7
        if diff > bound:
            failures.append((i, (r, q), diff, bound))
    _report(
        "criterion-10b integral vs nested sum (20 draws)",
        not failures,
        f"failures={failures!r}" if failures else "0 failures",
    )


def test_criterion_11_propositions():
    ok = True
    details = []
    for k in (2.0, 2.5, 3.0):
        for label, prop in (("kk1", proposition_kk1), ("square", proposition_square)):
            lhs, rhs = prop(k)
            diff = abs(lhs.value - rhs.value)
            bound = lhs.abs_error_bound + rhs.abs_error_bound + 1e-7
            if diff > bound:
                ok = False
            details.append(f"{label}(k={k}): {diff:.2e}<={bound:.2e}")
    # cross-check of the k = 2 product case against criterion 2's closed form
    lhs, _ = proposition_kk1(2.0)
    closed = ZetaPolynomial({(4,): F(2), (2, 3): F(-1)}).evaluate(1e-9)
    diff = abs(lhs.value - closed.value)
    bound = 1e-8 + lhs.abs_error_bound + closed.abs_error_bound
    if diff > bound:
        ok = False
    details.append(f"kk1(2) vs closed: {diff:.2e}<={bound:.2e}")
    _report("criterion-11 propositions k in {2, 2.5, 3}", ok, "; ".join(details))


def test_criterion_12_duality():
    indices = admissible_integer_indices(6)
    tau = duality((2, 1, 2))
    _report(
        "criterion-12a tau(2,1,2) = (2,3)",
        tau.args == (2, 3),
        f"got {tau.args}",
    )
    involution_ok = all(
        duality(duality(idx)).args == idx.args for idx in indices
    )
    _report(
        "criterion-12b involution on weight <= 6",
        involution_ok,
        f"{len(indices)} indices",
    )
    failures = []
    for idx in indices:
        dual = duality(idx)
        a = mzv(tuple(float(x) for x in idx.args), 1e-9)
        b = mzv(tuple(float(x) for x in dual.args), 1e-9)
        diff = abs(a.value - b.value)
        bound = 1e-8 + a.abs_error_bound + b.abs_error_bound
        if diff > bound:
            failures.append((idx.args, diff, bound))
    _report(
        "criterion-12c numeric duality on weight <= 6",
        not failures,
        f"failures={failures!r}" if failures else f"{len(indices)} indices agree",
    )


def test_criterion_13_sum_theorem():
    from zetatails import sum_theorem_identity

    failures = []
    for k in (2, 3):
        for n in range(k + 1, 7):
            indices, rhs_poly = sum_theorem_identity(n, k)
            reports = [mzv(tuple(float(x) for x in idx.args), 1e-9) for idx in indices]
            total = math.fsum(r.value for r in reports)
            rhs = rhs_poly.evaluate(1e-10)
            diff = abs(total - rhs.value)
            bound = 1e-8 + sum(r.abs_error_bound for r in reports) + rhs.abs_error_bound
            if diff > bound:
                failures.append((n, k, diff, bound))
    _report(
        "criterion-13 sum theorem n <= 6, depth 2 and 3",
        not failures,
        f"failures={failures!r}" if failures else "all cases agree",
    )


def test_criterion_14_structure_counts():
    c2 = len(tail_product_formula((2.0, 3.0)).zeta_terms)
    c3 = len(tail_product_formula((2.0, 3.0, 4.0)).zeta_terms)
    fub4 = weak_ordering_count(4)
    coeffs = sorted(int(t.coeff) for t in repeated_tail_formula(2.0, 4).zeta_terms)
    ok = (
        c2 == 3
        and c3 == 13
        and fub4 == 75
        and coeffs == [1, 4, 4, 6, 12, 12, 12, 24]
    )
    _report(
        "criterion-14 structure counts",
        ok,
        f"merged k=2: {c2}, k=3: {c3}, fubini(4): {fub4}, coeffs: {coeffs}",
    )


def test_criterion_15_symbolic_reductions():
    ok_n1 = reduce_n1(2) == ZetaPolynomial.single(3)
    _report("criterion-15a reduce_n1(2) = zeta(3)", ok_n1, "exact")

    expected = ZetaPolynomial({(2, 3): F(3), (5,): F(-11, 2)})
    red = reduce_double_odd(3, 2)
    _report(
        "criterion-15b reduce_double_odd(3,2) exact",
        red == expected,
        f"got {red}",
    )

    val = red.evaluate(1e-9)
    direct = mzv((3.0, 2.0), 1e-9)
    diff = abs(val.value - direct.value)
    bound = 1e-8 + val.abs_error_bound + direct.abs_error_bound
    _report(
        "criterion-15c reduce_double_odd(3,2) numeric",
        diff <= bound,
        f"|diff|={diff:.3e} tol+bounds={bound:.3e}",
    )

    square_poly = integer_square_closed_form(3)
    criterion4_poly = ZetaPolynomial({(5,): F(-10), (2, 3): F(6), (3, 3): F(-1)})
    _report(
        "criterion-15d square closed form p=3",
        square_poly == criterion4_poly,
        f"got {square_poly}",
    )
