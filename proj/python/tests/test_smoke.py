from fractions import Fraction

import pytest

import cquad


def test_compound_of_diagonal_form():
    c = cquad.compound([[1, 0, 0], [0, 2, 0], [0, 0, 3]], 2)
    assert [c[i][i] for i in range(3)] == [2, 3, 6]


def test_tangent_line_to_a_quadric_surface():
    sphere = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, -1]]
    assert cquad.chow_eval(sphere, 2, [[1, 0], [0, 1], [0, 0], [1, 0]]) == 0
    assert cquad.chow_eval(sphere, 2, [[1, 0], [0, 1], [0, 0], [0, 0]]) == 1


def test_rank_one_limit_has_order_one():
    lim = cquad.chow_limit([[1, 0, 0], [0, 0, 0], [0, 0, 0]], [[0, 0, 0], [0, 1, 0], [0, 0, 1]], 2)
    assert lim["t_order"] == 1


def test_pencil_counts():
    assert cquad.count_degenerations([[1, 0, 0], [0, 1, 0], [0, 0, 1]], [[1, 0, 0], [0, 2, 0], [0, 0, 3]]) == {
        "degree": 3,
        "distinct": 3,
    }
    assert cquad.bk_number(4, 2, seed=3) == 3
    for row in cquad.direct_table_counts(seed=2):
        assert row["degree"] == row["distinct"]


def test_canonical_class_and_table():
    k = cquad.canonical(3)
    assert k["coeffs"] == [-2, -1, -2]
    assert cquad.convert(k, "mixed")["coeffs"] == [-10, 5, 2]
    assert cquad.is_fano(5)
    g = next(r for r in cquad.table_x3() if r["curve"] == "G")
    assert g["values"] == [1, 2, 3, 0, 0, 4]
    assert cquad.pair("G", cquad.divisor([0, 0, 1], basis="E")) == 4


def test_cones_and_duality():
    p = cquad.divisor([4, -2, 4])
    assert cquad.cone_membership(p, "mov") == (True, False)  # an extremal ray
    assert cquad.cone_membership(p, "nef")[0] is False
    assert cquad.xi(cquad.divisor([1, 0, 0]))["coeffs"] == [0, 0, 1]


def test_chambers():
    assert cquad.classify(cquad.divisor([1, 1, 1]))["chamber_id"] == 1
    mid = cquad.classify_segment(Fraction(1, 2))
    assert mid["cell"] == "wall"
    assert mid["certificate"]["pairing"] == 0
    census = cquad.chamber_census(500, seed=4)
    assert census["partition_failures"] == 0


def test_schubert():
    assert cquad.schubert(1, 3, "sigma1^4") == {"2,2": 2}
    assert cquad.schubert_pair(1, 3, "sigma2 + sigma11", "sigma1^2") == 2
    assert cquad.grassmannian_degree(1, 4) == 5


def test_errors_map_to_python_exceptions():
    with pytest.raises(ValueError):
        cquad.canonical(1)
    with pytest.raises(ValueError):
        cquad.schubert(1, 3, "sigma(")
    with pytest.raises(ValueError):
        cquad.classify(cquad.divisor([-1, 0, 0]))
