import logging
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given,settings,strategies as st

from tork.exactla import SparseRationalMatrix
from tork.exceptions import ChainComplexError,RejectedInputError,SchemaError
from tork.grmod import GradedModule,dual_module,monomial_quotient,point_module,random_artinian_module,stanley_reisner
from tork.koszul import (
    BettiTable,
    KoszulStrand,
    betti_table,
    diff_tables,
    euler_characteristic,
    hrk,
    hrk_ratio,
    poincare_vector,
    projective_dimension,
    strand,
    total_betti,
)
from tork.simplicial import sample_complexes

SQUARE_TABLE = {(0, 0): 1, (1, 2): 2, (2, 4): 1}
PENTAGON_TABLE = {(0, 0): 1, (1, 2): 5, (2, 3): 5, (3, 5): 1}



def sr_table(K):
    return betti_table(stanley_reisner(K, max(K.m, 1)), j_max=K.m)


@pytest.mark.parametrize("m", range(0, 7))
def test_residue_field_has_binomial_betti_numbers(m):
    B = betti_table(point_module(m))
    assert B.entries == {(i, i): comb(m, i) for i in range(m+1)}
    assert hrk(B) == 2 ** m
    assert B.finite


def test_three_generator_quotient(three_generators):
    B = betti_table(three_generators)
    assert B.j_max == 3
    assert B.entries == {(0, 0): 1, (1, 2): 3, (2, 3): 2}
    assert total_betti(B) == [1, 3, 2]
    assert euler_characteristic(B) == 0


def test_square(square):
    B = sr_table(square)
    assert B.entries == SQUARE_TABLE
    assert B.origin == "stanley_reisner"
    assert B.krull_dim == 2
    assert hrk(B) == 4
    assert projective_dimension(B) == 2
    assert poincare_vector(B) == [1, 0, 0, 2, 0, 0, 1]
    assert hrk_ratio(B, square.n) == Fraction(1)


def test_pentagon(pentagon):
    B = sr_table(pentagon)
    assert B.entries == PENTAGON_TABLE
    assert total_betti(B) == [1, 5, 5, 1, 0, 0]
    assert hrk_ratio(B, pentagon.n) == Fraction(3, 2)


def test_strand_shape_and_basis_order(three_generators):
    s = strand(three_generators, 2)
    assert s.dims == (0, 4, 1)
    # d(1 ⊗ u1u2) = v1 ⊗ u2 - v2 ⊗ u1
    assert s.differential(2).to_dense() == [[0], [-1], [1], [0]]
    assert s.homology_dims() == (0, 3, 0)
    assert strand(point_module(2), 1).dims == (0, 2)


def test_strand_rejects_out_of_range_index():
    with pytest.raises(RejectedInputError):
        strand(point_module(2), 3)
    with pytest.raises(RejectedInputError):
        strand(point_module(2), -1)


def test_strand_rejects_invalid_module():
    one = SparseRationalMatrix.identity(1)
    bad = GradedModule(m=2, levels=(1, 1, 1), mult={(0, 0): one, (1, 0): one, (0, 1): one})
    with pytest.raises(RejectedInputError):
        strand(bad, 1)
    with pytest.raises(RejectedInputError):
        betti_table(bad)


def test_verify_detects_nonzero_square():
    one = SparseRationalMatrix.identity(1)
    broken = KoszulStrand(m=1, j=2, dims=(1, 1, 1), differentials=(one, one))
    with pytest.raises(ChainComplexError):
        broken.verify()


def test_parallel_strands_agree(pentagon):
    M = stanley_reisner(pentagon, 5)
    assert betti_table(M, j_max=5, jobs=2) == betti_table(M, j_max=5, jobs=1)


def test_truncated_module_warns_past_last_level(square, caplog):
    with caplog.at_level(logging.WARNING, logger="tork.koszul.table"):
        betti_table(stanley_reisner(square, 2), j_max=4)
    assert "truncated" in caplog.text


def test_table_json_and_tsv(square):
    B = sr_table(square)
    assert BettiTable.from_json(B.to_json()) == B
    assert B.to_tsv() == "i\t2j\tbeta\n0\t0\t1\n1\t4\t2\n2\t8\t1\n"
    with pytest.raises(SchemaError):
        BettiTable.from_json({"m": 1, "entries": [{"i": 0, "j2": 1, "beta": 1}]})
    with pytest.raises(SchemaError):
        BettiTable.from_json({"m": 1, "entries": [{"i": 2, "j2": 4, "beta": 1}]})


def test_render(square):
    assert sr_table(square).render() == (
        "       0 1 2\n"
        "total: 1 2 1\n"
        "    0: 1 . .\n"
        "    1: . 2 .\n"
        "    2: . . 1\n"
    )


def test_zero_table():
    B = betti_table(GradedModule(m=2, levels=(0,)))
    assert B.is_zero()
    assert not B.finite
    with pytest.raises(RejectedInputError):
        projective_dimension(B)
    assert poincare_vector(B) == []


def test_diff_tables():
    a = BettiTable(m=2, j_max=2, entries={(0, 0): 1, (1, 1): 2})
    b = BettiTable(m=2, j_max=2, entries={(0, 0): 1, (1, 2): 2})
    assert diff_tables(a, b) == [(1, 1, 2, 0), (1, 2, 0, 2)]
    assert diff_tables(a, a) == []


def test_hrk_ratio_rejects_bad_n():
    with pytest.raises(RejectedInputError):
        hrk_ratio(betti_table(point_module(2)), 3)



modules = st.builds(
    random_artinian_module,
    m = st.integers(1, 3),
    seed = st.integers(0, 10_000),
    max_level = st.integers(1, 2),
)


@settings(max_examples=40, deadline=None)
@given(modules)
def test_strand_euler_characteristics_agree(M):
    for j in range(M.top_level + M.m + 1):
        s = strand(M, j)
        assert sum((-1)**i * b for i,b in enumerate(s.homology_dims())) == s.euler_characteristic()


@settings(max_examples=40, deadline=None)
@given(modules)
def test_finite_modules_have_zero_euler_characteristic(M):
    assert euler_characteristic(betti_table(M)) == 0


@settings(max_examples=30, deadline=None)
@given(modules)
def test_duality_reverses_total_betti_numbers(M):
    ours = total_betti(betti_table(M))
    theirs = total_betti(betti_table(dual_module(M)))
    assert ours == theirs[::-1]


@settings(max_examples=40, deadline=None)
@given(modules)
def test_total_betti_numbers_are_positive_up_to_pd(M):
    B = betti_table(M)
    totals = total_betti(B)
    assert all(totals[i] >= 1 for i in range(projective_dimension(B) + 1))


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 5), st.integers(0, 10_000))
def test_total_betti_numbers_of_complexes_are_positive_up_to_pd(m, seed):
    B = sr_table(next(sample_complexes(m, 1, seed)))
    totals = total_betti(B)
    assert all(totals[i] >= 1 for i in range(projective_dimension(B) + 1))


def test_tables_cut_below_the_lcm_degree_are_incomplete(square):
    assert not betti_table(stanley_reisner(square, 2)).complete
    assert not betti_table(stanley_reisner(square, 2), j_max=4).complete
    assert sr_table(square).complete
    assert not betti_table(monomial_quotient(2, [[3, 0]], 1)).complete
    assert betti_table(monomial_quotient(2, [[3, 0]], 3)).complete
    assert betti_table(point_module(2)).complete
