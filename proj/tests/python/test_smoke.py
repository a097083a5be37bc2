import pytest

import perioknot

TREFOIL = "O1+ U2+ O3+ U1+ O2+ U3+"
KISHINO = "U1+ O2- O1+ U2- U3+ O4- O3+ U4-"


def test_parse_and_render():
    code = perioknot.GaussCode("O7+ U9+ O8+ U7+ O9+ U8+")
    assert code.crossing_count == 3
    assert code.render() == TREFOIL
    assert len(code) == 6
    assert code.writhe() == 3
    with pytest.raises(perioknot.GaussError):
        perioknot.GaussCode("O1+ U1-")


def test_periodicity_and_quotient():
    assert perioknot.is_periodic(TREFOIL, 3)
    assert not perioknot.is_periodic(TREFOIL, 2)
    q = perioknot.quotient(TREFOIL, 3)
    assert q["p"] == 3 and q["code"] == "O1+ U1+"
    back = perioknot.symmetrize(q)
    assert back.equivalent(perioknot.GaussCode(TREFOIL))


def test_alexander_and_homs():
    assert perioknot.alexander(TREFOIL) == [1, -1, 1]
    assert perioknot.alexander(KISHINO) == [1]
    assert [perioknot.count_homs(TREFOIL, d) for d in range(1, 5)] == [1, 2, 12, 96]


def test_torus_periods():
    assert sorted(perioknot.torus_periods(2, 3)) == [2, 3]
    with pytest.raises(perioknot.TorusParameterError):
        perioknot.torus_periods(4, 6)


def test_certify():
    report = perioknot.certify(TREFOIL, 3)
    assert report["verdict"] == "consistent"
    assert report["checks"]["longitude"]["witness"]["degree"] == 4
    kishino = perioknot.certify(KISHINO, 2)
    assert kishino["verdict"] == "consistent, hypothesis unverified"
