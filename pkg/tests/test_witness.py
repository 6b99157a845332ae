import pytest

from eltlinalg import (
    DependenceWitness,
    ELTMatrix,
    NotAField,
    Q,
    SizeBound,
    Z,
    column_rank,
    det,
    find_dependence_witness,
    is_singular,
    rank_report,
    row_rank,
    submatrix_rank,
    verify_witness,
)
from eltlinalg.errors import BadIndex
from eltlinalg.oracles import dependence_oracle
from eltlinalg.sampling import random_matrix, random_vector

from conftest import ev, ni


def intro_rows():
    return [
        (ev(1, 1), ev(2, 1), ev(0, 1)),
        (ev(0, 1), ev(3, 1), ev(2, 1)),
        (ev(0, -1), ev(0, 1), ev(0, 1)),
    ]


def test_intro_vectors_have_a_witness_and_the_known_one_verifies():
    rows = intro_rows()
    w = find_dependence_witness(rows, Q)
    assert w is not None and verify_witness(rows, w)
    known = DependenceWitness((0, 1, 2), (ev(1, 1), ev(0, -1), ev(2, 1)))
    assert verify_witness(rows, known)


def test_all_neg_inf_vector_is_dependent():
    w = find_dependence_witness([(ni, ni, ni)], Q)
    assert w == DependenceWitness((0,), (ev(0, 1),))


def test_crossed_pair_is_dependent_despite_intro_claim():
    # The determinant is zero-layered, so dependence must follow.
    rows = [(ev(1, 1), ev(1, -1)), (ev(1, -1), ev(1, 1))]
    assert det(ELTMatrix(rows, Q)) == ev(2, 0)
    w = find_dependence_witness(rows, Q)
    assert w is not None
    assert verify_witness(rows, DependenceWitness((0, 1), (ev(0, 1), ev(0, 1))))


def test_witness_type_rejects_zero_layer_coefficients():
    with pytest.raises(ValueError):
        DependenceWitness((0,), (ev(0, 0),))
    with pytest.raises(ValueError):
        DependenceWitness((), ())


def test_verify_witness_guards_indices():
    with pytest.raises(BadIndex):
        verify_witness([(ev(0, 1),)], DependenceWitness((3,), (ev(0, 1),)))


def test_witness_search_needs_a_field():
    with pytest.raises(NotAField):
        find_dependence_witness([(ev(0, 1),)], Z)


def test_witness_bounds():
    vectors = [random_vector(__import__("random").Random(0), 7, Q) for _ in range(2)]
    with pytest.raises(SizeBound):
        find_dependence_witness(vectors, Q)


def test_witness_search_is_deterministic(rng):
    for _ in range(50):
        m, n = rng.choice([(2, 2), (3, 3), (3, 2)])
        vectors = [random_vector(rng, n, Q) for _ in range(m)]
        first = find_dependence_witness(vectors, Q)
        second = find_dependence_witness(vectors, Q)
        assert first == second


def test_rank_examples():
    A = ELTMatrix(intro_rows(), Q)
    assert row_rank(A) == 2 and column_rank(A) == 2
    E = ELTMatrix([[ev(0, 3), ni], [ni, ev(0, -2)]], Q)
    assert row_rank(E) == 2
    ones = ELTMatrix([[ev(0, 1)] * 2] * 2, Q)
    assert row_rank(ones) == 1 and column_rank(ones) == 1


def test_rank_report_structure():
    rep = rank_report(ELTMatrix(intro_rows(), Q))
    assert rep.row_rank == rep.column_rank == rep.submatrix_rank == 2
    assert rep.nonsingular_rows is not None and len(rep.nonsingular_rows) == 2
    assert rep.row_dependence is not None and rep.column_dependence is not None
    assert verify_witness(
        [ELTMatrix(intro_rows(), Q).row(i) for i in range(3)], rep.row_dependence
    )


def test_singularity_vs_dependence_property(rng):
    # Square case of the determinant theorem, cross-checked by the oracle.
    for _ in range(200):
        n = rng.choice([2, 3])
        A = random_matrix(rng, n, n, Q)
        sing = is_singular(A)
        row_w = find_dependence_witness(A.rows, Q)
        col_w = find_dependence_witness(A.cols, Q)
        assert (row_w is not None) == sing == (col_w is not None)
        assert dependence_oracle(A.rows, Q) == sing


def test_rank_theorem_property(rng):
    for _ in range(60):
        m, n = rng.choice([(3, 4), (4, 3), (2, 3)])
        A = random_matrix(rng, m, n, Q)
        assert row_rank(A) == column_rank(A) == submatrix_rank(A)


def test_n_plus_one_vectors_are_dependent(rng):
    for _ in range(60):
        n = rng.choice([1, 2, 3])
        vectors = [random_vector(rng, n, Q) for _ in range(n + 1)]
        assert find_dependence_witness(vectors, Q) is not None
