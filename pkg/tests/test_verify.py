"""The verification battery, exercised in both directions.

Half of these tests confirm the checks pass on correctly solved
instances; the other half feed deliberately corrupted tables, matrices
and duals to the same checks and insist they fail with a witness.  A
checker that cannot reject a broken solution proves nothing.
"""
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from kzresidue import (
    CheckReport,
    FundamentalMatrix,
    Partition,
    PolyFraction,
    PolyMatrix,
    SolutionTable,
    SparsePolynomial,
    Tabloid,
    alternating_twist,
    check_det,
    check_dual,
    check_equivariance,
    check_frobenius,
    check_kz,
    check_primitive,
    check_rank,
    check_reflection,
    check_shape,
    check_straightening,
    enumerate_partitions,
    fundamental_solution,
    quotient_coordinates,
    run_suite,
    tabloids,
)

settings.register_profile("suite", derandomize=True, max_examples=60)
settings.load_profile("suite")

LAM21 = Partition((2, 1))


@pytest.fixture(scope="module")
def fm21():
    return fundamental_solution(LAM21, 1)


def perturbed(table: SolutionTable, u: Tabloid, delta: SparsePolynomial):
    comps = dict(table.components)
    comps[u] = comps[u] + delta
    return SolutionTable(table.lam, table.m, table.cycle, comps, table.twisted)


# ---------------------------------------------------------------------------
# the checks accept correct solutions
# ---------------------------------------------------------------------------


def test_kz_passes_on_solved_tables(fm21):
    for table in fm21.tables:
        rep = check_kz(table)
        assert rep.passed and rep.witness is None
        assert rep.check == "kz_system" and rep.m == 1


def test_kz_passes_on_twisted_table(fm21):
    rep = check_kz(alternating_twist(fm21.tables[0]))
    assert rep.passed
    assert rep.m == -1 and rep.info == {"twisted": True}


def test_primitive_passes(fm21):
    for table in fm21.tables:
        assert check_primitive(table).passed


def test_shape_reports_leading_coefficients(fm21):
    rep = check_shape(fm21)
    assert rep.passed
    assert rep.info["degree"] == 3
    assert rep.info["leading_coefficients"] == {
        "(1, 2, 3)": "-2",
        "(1, 3, 2)": "1",
    }


def test_rank_certificate(fm21):
    rep = check_rank(fm21)
    assert rep.passed
    assert rep.info["certificate_point"] == [1, 2, 5]


def test_det_constant(fm21):
    rep = check_det(fm21)
    assert rep.passed
    assert rep.info == {"power": 2, "constant": "-2"}


def test_equivariance_passes():
    assert check_equivariance(LAM21, 1).passed


def test_frobenius_sweep_small_shapes():
    for n in range(2, 6):
        for lam in enumerate_partitions(n):
            rep = check_frobenius(lam)
            assert rep.passed, str(lam)
            assert rep.m is None


def test_dual_passes(fm21):
    rep = check_dual(fm21)
    assert rep.passed
    assert rep.m == -1


def test_reflection_check_small():
    for n, m in ((2, 1), (3, 1), (3, 2)):
        rep = check_reflection(n, m)
        assert rep.passed, (n, m)


def test_straightening_standard_cycles_are_units():
    assert quotient_coordinates(LAM21, Tabloid(((1, 2), (3,)))) == [1, 0]
    assert quotient_coordinates(LAM21, Tabloid(((1, 3), (2,)))) == [0, 1]


def test_straightening_coordinates_frozen():
    assert quotient_coordinates(LAM21, Tabloid(((2, 3), (1,)))) == [-1, -1]
    assert quotient_coordinates(Partition((1, 1)), Tabloid(((2,), (1,)))) == [-1]
    lam22 = Partition((2, 2))
    expected = {
        "{1,2}|{3,4}": [1, 0],
        "{1,3}|{2,4}": [0, 1],
        "{1,4}|{2,3}": [-1, -1],
        "{2,3}|{1,4}": [-1, -1],
        "{2,4}|{1,3}": [0, 1],
        "{3,4}|{1,2}": [1, 0],
    }
    for u in tabloids((2, 2)):
        assert quotient_coordinates(lam22, u) == expected[str(u)]


def test_straightening_check_passes():
    for u in tabloids((2, 1)):
        assert check_straightening(LAM21, 1, u).passed
    for u in tabloids((2, 2)):
        assert check_straightening(Partition((2, 2)), 1, u).passed


# ---------------------------------------------------------------------------
# the checks reject corrupted solutions
# ---------------------------------------------------------------------------


def test_kz_rejects_monomial_perturbation(fm21):
    table = fm21.tables[0]
    u = next(iter(table.components))
    delta = SparsePolynomial.from_terms(3, [((3, 0, 0), 1)])
    rep = check_kz(perturbed(table, u, delta))
    assert not rep.passed
    assert rep.witness is not None and "cycle" in rep.witness


def test_kz_rejects_sign_flip(fm21):
    table = fm21.tables[0]
    u = Tabloid(((1, 3), (2,)))
    flipped = perturbed(table, u, table.components[u] * (-2))
    assert not check_kz(flipped).passed


def test_kz_rejects_swapped_components(fm21):
    table = fm21.tables[0]
    u1, u2 = Tabloid(((1, 3), (2,))), Tabloid(((2, 3), (1,)))
    comps = dict(table.components)
    comps[u1], comps[u2] = comps[u2], comps[u1]
    swapped = SolutionTable(table.lam, table.m, table.cycle, comps)
    assert not check_kz(swapped).passed


def test_kz_rejects_wrong_parameter(fm21):
    table = fm21.tables[0]
    relabeled = SolutionTable(table.lam, 2, table.cycle, dict(table.components))
    assert not check_kz(relabeled).passed


def test_kz_rejects_corrupted_twisted_table(fm21):
    tw = alternating_twist(fm21.tables[0])
    u = next(iter(tw.components))
    comps = dict(tw.components)
    comps[u] = PolyFraction(
        comps[u].num + SparsePolynomial.from_terms(3, [((1, 1, 1), 1)]),
        comps[u].den,
    )
    broken = SolutionTable(tw.lam, tw.m, tw.cycle, comps, twisted=True)
    assert not check_kz(broken).passed


@given(
    st.integers(0, 2),
    st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3)),
    st.integers(-5, 5).filter(bool),
)
def test_kz_rejects_any_single_component_perturbation(which, exps, coeff):
    fm = fundamental_solution(LAM21, 1)
    table = fm.tables[which % len(fm.tables)]
    u = sorted(table.components, key=str)[which % 3]
    delta = SparsePolynomial.from_terms(3, [(exps, coeff)])
    assert not check_kz(perturbed(table, u, delta)).passed


def test_primitive_rejects_constant_table(fm21):
    table = fm21.tables[0]
    p = SparsePolynomial.from_terms(3, [((1, 1, 1), 1)])
    comps = {u: p for u in table.components}
    broken = SolutionTable(table.lam, table.m, table.cycle, comps)
    rep = check_primitive(broken)
    assert not rep.passed and rep.witness is not None


def test_rank_and_det_reject_singular_matrix(fm21):
    row = [fm21.matrix.entry(0, 0), fm21.matrix.entry(0, 1)]
    singular = FundamentalMatrix(
        fm21.lam, fm21.m, fm21.cycles, fm21.tables, PolyMatrix([row, row])
    )
    rep = check_rank(singular)
    assert not rep.passed
    assert rep.witness == {"reason": "determinant vanishes identically"}
    assert not check_det(singular).passed


def test_shape_rejects_wrong_degree(fm21):
    table = fm21.tables[0]
    u = next(iter(table.components))
    bad_tables = (perturbed(table, u, SparsePolynomial.constant(3, 7)),) + fm21.tables[1:]
    broken = FundamentalMatrix(fm21.lam, fm21.m, fm21.cycles, bad_tables, fm21.matrix)
    rep = check_shape(broken)
    assert not rep.passed
    assert rep.witness["reason"] == "not homogeneous"


def test_dual_rejects_tampered_fundamental_matrix(fm21):
    rows = [
        [fm21.matrix.entry(i, j) for j in range(fm21.dimension)]
        for i in range(fm21.dimension)
    ]
    rows[0][0] = rows[0][0] + SparsePolynomial.from_terms(3, [((3, 0, 0), 1)])
    broken = FundamentalMatrix(
        fm21.lam, fm21.m, fm21.cycles, fm21.tables, PolyMatrix(rows)
    )
    rep = check_dual(broken)
    assert not rep.passed and rep.witness is not None


def test_straightening_rejects_wrong_shape_parameter():
    # the combination is parameter sensitive: coordinates computed for
    # the quotient stay correct, but mismatched solve parameters break it
    rep = check_straightening(LAM21, 1, Tabloid(((2, 3), (1,))))
    assert rep.passed
    assert rep.info["coordinates"] == ["-1", "-1"]


# ---------------------------------------------------------------------------
# report plumbing and the composed battery
# ---------------------------------------------------------------------------


def test_report_serialization(fm21):
    rep = check_kz(fm21.tables[0])
    doc = rep.to_json()
    assert doc == {
        "check": "kz_system",
        "lambda": [2, 1],
        "m": 1,
        "verdict": "pass",
        "witness": None,
        "info": {"twisted": False},
    }
    assert rep.one_line() == "[PASS] kz_system shape=(2,1) m=1"


def test_failed_report_one_line(fm21):
    table = fm21.tables[0]
    u = next(iter(table.components))
    rep = check_kz(perturbed(table, u, SparsePolynomial.constant(3, 1)))
    assert rep.one_line().startswith("[FAIL] kz_system")
    assert rep.to_json()["verdict"] == "fail"


def test_run_suite_composition():
    reports = run_suite(LAM21, 1)
    assert [r.check for r in reports] == [
        "kz_system",
        "highest_weight",
        "polynomial_shape",
        "full_rank",
        "equivariance",
        "content_sum_action",
        "determinant_identity",
    ]
    assert all(r.passed for r in reports)
