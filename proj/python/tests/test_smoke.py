import itertools
import math

import pytest

import lieflag


def test_dimensions():
    assert lieflag.dim_flag("E6", [2]) == 21
    assert lieflag.dim_flag("E6", [1, 6]) == 24
    assert lieflag.dim_flag("E7", [1]) == 33


def test_poincare_counts_cosets():
    p = lieflag.poincare_poly("E7", [1])
    assert sum(p) == 126
    assert p == p[::-1]
    assert lieflag.weyl_order("E8") == 696729600


def test_big_coefficients_are_python_ints():
    p = lieflag.poincare_poly("E8", list(range(1, 9)))
    assert sum(p) == lieflag.weyl_order("E8")
    binom = lieflag.eval_rational([[1, 1]] * 100)
    assert binom[50] == math.comb(100, 50) > 2**64


def test_conormed_dichotomy():
    b = [1, 0, 0, 1]
    for circled, degree in (([2], 21), ([1, 6], 24)):
        p = lieflag.conormed_poincare("2E6", circled)
        assert len(p) - 1 == degree
        assert min(p) >= 0
        assert lieflag.divides_ring(p, b) is not None
        assert lieflag.divides_semiring(p, b) is None
    with pytest.raises(lieflag.NotSpecifiedBySource):
        lieflag.conormed_poincare("2E6", [4])


def test_skeletons():
    assert lieflag.tate_skeleton("E6", [3, 4, 5], [2]) == [0, 6, 15, 21]
    assert lieflag.tate_skeleton("E6", [3, 4, 5], [1, 6]) == [0, 9, 15, 24]
    cells = lieflag.double_cosets("E6", [3, 4, 5], [2, 3, 4, 5], star=[6, 2, 5, 4, 3, 1])
    assert sum(c["orbit_size"] for c in cells) == 270


def test_jinv():
    assert lieflag.upper_motive_poly("2E6", [1, 0, 0]) == [1, 0, 0, 1]
    assert [1, 0, 0, 0] in lieflag.enumerate_admissible("E7")
    with pytest.raises(ValueError):
        lieflag.upper_motive_poly("2E6", [2, 0, 0])


def test_residual_witness():
    top = [1] + [0] * 14 + [1]
    total = lieflag.poincare_poly("E6", [2])
    twisted = lieflag.eval_rational([[1, 0, 0, 0, 0, 0, 1], top])
    residual = [a - (twisted[i] if i < len(twisted) else 0) for i, a in enumerate(total)]
    blocks = [[1, 0, 0, 1], [2]]
    witness = lieflag.express_residual(residual, blocks, min_shift=1)
    assert witness is not None
    rebuilt = [0] * len(residual)
    for block, shift, mult in witness:
        assert shift >= 1
        for i, c in enumerate(blocks[block]):
            rebuilt[shift + i] += mult * c
    assert rebuilt == residual


def test_killing_forms():
    for q, o, *gamma in itertools.product([True, False], [True, False], [1, -1], [1, -1], [1, -1]):
        assert lieflag.af_killing_form_e7(q, o, gamma)["dim"] == 133
    compact = lieflag.af_killing_form_e7(True, True, [1, 1, 1])
    assert compact["signature"] == -133 and compact["witt_index"] == 0


def test_tables():
    assert len(lieflag.magic_square()) == 16
    assert lieflag.conditions("E8")["parabolic"] == "any"
    assert lieflag.tits_index("zero")["index"] == "quasi-split"
    with pytest.raises(ValueError):
        lieflag.conditions("E9")


def test_verify():
    report = lieflag.run_verify("dims-*")
    assert [c["name"] for c in report["checks"]] == ["dims-x16", "dims-x2", "dims-y1"]
    assert report["failed"] == 0
