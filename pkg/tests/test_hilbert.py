from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from commsyz.hilbert import (
    EulerConstraint,
    GradedBettiTable,
    HilbertSeries,
    canonical_splice_shift,
    divide_by_one_minus_t,
    euler_constraints,
    hilbert_numerator,
    hilbert_of_basis,
    minimalize_monomials,
    monomial_quotient_numerator,
    residual_relations,
    splice_tail,
)

from oracles import count_monomials_outside

# -- series arithmetic ----------------------------------------------------------


def test_divide_by_one_minus_t():
    assert divide_by_one_minus_t([1, -1]) == [1]
    assert divide_by_one_minus_t([1, 0, -3, 2]) == [1, 1, -2]
    assert divide_by_one_minus_t([1, 1]) is None
    assert divide_by_one_minus_t([]) == []


def test_minimalize_monomials():
    out = minimalize_monomials([(2, 0), (2, 1), (0, 1), (0, 2), (2, 0)])
    assert out == ((0, 1), (2, 0))


mon4 = st.tuples(*[st.integers(0, 3)] * 4)


@settings(max_examples=60, deadline=None)
@given(gens=st.lists(mon4, max_size=5), d=st.integers(0, 7))
def test_monomial_numerator_matches_direct_count(gens, d):
    series = HilbertSeries(
        numerator=tuple(monomial_quotient_numerator(gens, 4)), nvars=4
    )
    assert series.hilbert_function(d) == count_monomials_outside(gens, 4, d)


@settings(max_examples=30)
@given(gens=st.lists(mon4, min_size=1, max_size=5))
def test_monomial_numerator_is_order_independent(gens):
    a = monomial_quotient_numerator(gens, 4)
    b = monomial_quotient_numerator(list(reversed(gens)), 4)
    assert a == b


def test_numerator_rejects_bad_input():
    with pytest.raises(ValueError):
        monomial_quotient_numerator([(1, 0)], 4)
    with pytest.raises(ValueError):
        monomial_quotient_numerator([(-1, 0, 0, 0)], 4)


def test_polynomial_ring_series():
    # no generators: free ring, numerator 1
    s = hilbert_numerator([], 4)
    assert tuple(s.numerator) == (1,)
    assert s.dimension == 4
    assert s.multiplicity == 1
    for d in range(5):
        assert s.hilbert_function(d) == comb(d + 3, 3)


def test_complete_intersection_products():
    # one quadric in 3 vars: numerator 1 - t^2, dim 2, degree 2
    s = hilbert_numerator([(2, 0, 0)], 3)
    assert list(s.numerator) == [1, 0, -1]
    assert s.dimension == 2
    assert s.multiplicity == 2
    minimal_num, cancelled = s.reduced()
    assert minimal_num == (1, 1)
    assert cancelled == 1


def test_series_str_mentions_numerator_and_denominator():
    s = hilbert_numerator([(2, 0, 0)], 3)
    text = str(s)
    assert "t" in text and "(1-t)" in text.replace(" ", "")


# -- frozen quotient series for the smallest matrix sizes -------------------------


def test_commutator_quotient_series_smallest(ctx):
    series = hilbert_of_basis(ctx.gb_commutator(2))
    assert list(series.numerator) == [1, 0, -3, 2]
    assert series.dimension == 6
    assert series.multiplicity == 3


def test_commutator_quotient_series_three_by_three(ctx):
    series = hilbert_of_basis(ctx.gb_commutator(3))
    assert list(series.numerator) == [1, 0, -8, 2, 31, -32, -25, 58, -32, 4, 1]
    assert series.dimension == 12


def test_off_diagonal_series_is_a_complete_intersection(ctx):
    for n, quadrics in ((2, 2), (3, 6)):
        series = hilbert_of_basis(ctx.gb_off_diagonal(n))
        expect = [1]
        for _ in range(quadrics):
            expect = [
                a - b
                for a, b in zip(
                    expect + [0, 0], [0, 0] + expect
                )
            ]
        assert list(series.numerator) == expect
        assert series.dimension == n * n + n
    assert hilbert_of_basis(ctx.gb_off_diagonal(3)).multiplicity == 64


def test_quotient_series_matches_monomial_count_oracle(ctx):
    for n, dmax in ((2, 6), (3, 4)):
        gb = ctx.gb_commutator(n)
        series = hilbert_of_basis(gb)
        nvars = gb.ring.nvars
        leads = minimalize_monomials(gb.lead_exponents())
        for d in range(dmax + 1):
            assert series.hilbert_function(d) == count_monomials_outside(
                leads, nvars, d
            )


def test_hilbert_of_basis_refuses_partial_input(ctx):
    from commsyz.groebner import Budget, IncompleteBasisError, buchberger

    gens = ctx.system(2).minimal_gens
    partial = buchberger(gens, budget=Budget(max_spairs=1, on_exhaustion="partial"))
    with pytest.raises(IncompleteBasisError):
        hilbert_of_basis(partial)
    truncated = buchberger(gens, degree_bound=2)
    if truncated.truncation_degree is not None:
        with pytest.raises(IncompleteBasisError):
            hilbert_of_basis(truncated)


# -- graded tables ----------------------------------------------------------------


def _toy_table():
    return GradedBettiTable(
        {(0, 0): 1, (1, 2): 3, (2, 3): "c", (2, 4): 2, (3, 5): "40+"}
    )


def test_table_entries_and_totals():
    t = _toy_table()
    assert t.entry(0, 0) == 1
    assert t.entry(5, 5) == 0
    assert t.max_col == 3
    assert t.min_row == 0 and t.max_row == 2
    assert t.totals() == [1, 3, "2+", "0+"]
    assert t.column_sum(2) == (2, ["c"])
    roundtrip = GradedBettiTable.from_entries(t.to_entries())
    assert roundtrip == t


def test_table_drops_zeros_and_rejects_negatives():
    t = GradedBettiTable({(0, 0): 1, (1, 2): 0})
    assert len(t) == 1
    with pytest.raises(ValueError):
        GradedBettiTable({(0, 0): -1})


def test_table_display_layout():
    t = _toy_table()
    text = t.display()
    lines = text.splitlines()
    assert lines[0].split() == ["total:", "1", "3", "2+", "0+"]
    assert lines[1].split() == ["0:", "1", ".", ".", "."]
    assert lines[2].split() == ["1:", ".", "3", "c", "."]
    assert lines[3].split() == ["2:", ".", ".", "2", "40+"]


def test_euler_constraints_on_a_koszul_complex():
    # quotient by one quadric: betti 1, 1 in degrees 0, 2
    table = GradedBettiTable({(0, 0): 1, (1, 2): 1})
    series = hilbert_numerator([(2, 0, 0)], 3)
    cons = euler_constraints(table, series)
    assert all(c.satisfied for c in cons)
    assert residual_relations(cons) == []


def test_euler_constraints_flag_violations():
    table = GradedBettiTable({(0, 0): 1, (1, 2): 2})
    series = hilbert_numerator([(2, 0, 0)], 3)
    with pytest.raises(ValueError):
        euler_constraints(table, series)


def test_euler_constraints_carry_symbolic_residuals():
    table = GradedBettiTable({(0, 0): 1, (1, 2): "c", (2, 2): "d"})
    series = hilbert_numerator([(2, 0, 0)], 3)
    cons = euler_constraints(table, series)
    res = residual_relations(cons)
    assert len(res) == 1
    c = res[0]
    assert c.degree == 2
    assert c.coeffs == {"c": -1, "d": 1}
    assert c.target == -1
    assert c.satisfied is None
    assert str(c) == "degree 2: - c + d = -1"
    # lower-bound cells become named unknowns with recorded bounds
    t2 = GradedBettiTable({(0, 0): 1, (1, 2): "5+"})
    cons2 = euler_constraints(t2, series)
    res2 = residual_relations(cons2)
    assert res2 and res2[0].bounds == {"b1_2": 5}


def test_splice_shift_values():
    assert canonical_splice_shift(2) == 4
    assert canonical_splice_shift(3) == 12
    assert canonical_splice_shift(4) == 24


def test_splice_tail_reflects_cells():
    canonical = GradedBettiTable({(0, 2): 1, (0, 3): 4, (1, 5): "c"}, computed=[(0, 2)])
    out = splice_tail(canonical, codim=6, sigma=12)
    assert out.cells == {(6, 10): 1, (6, 9): 4, (5, 7): "c"}
    assert out.computed == {(6, 10)}
