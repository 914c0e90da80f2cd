import os
from pathlib import Path

import pytest

import curvedhh

FIXTURES = Path(os.environ.get("CURVEDHH_FIXTURES", Path(__file__).resolve().parents[2] / "fixtures"))


def test_two_spheres_table():
    pair = curvedhh.generate("two-spheres", d=2)
    rows = curvedhh.hochschild(pair, 2)
    assert rows[0] == {0: 2}
    assert rows[1] == {-3: 2, -2: 4, -1: 1, 0: 1}
    assert rows[2] == {-5: 4, -4: 6, -3: 1, -2: 1, -1: 1, 0: 1}
    over_f2 = curvedhh.hochschild(pair, 2, field="2")
    assert over_f2[2] == {-5: 4, -4: 6, -3: 2, -2: 2, -1: 1, 0: 1}


def test_fixture_matches_generator():
    pair = curvedhh.load(str(FIXTURES / "am-quiver-m2-d3.cat"))
    fresh = curvedhh.generate("am-quiver", m=2, d=3)
    assert pair.to_text() == fresh.to_text()
    assert pair.objects == ["X1", "X2"]
    assert pair.dimension == 3


def test_e1_vanishing_and_structural_checks():
    pair = curvedhh.generate("am-quiver", m=2, d=3)
    page = curvedhh.e1(pair, 3)
    assert page["e1"][0] == {0: 2}
    assert all(not row for row in page["e2"].values())
    assert curvedhh.insert_a_acyclic(pair)
    assert curvedhh.serre_step_matches(pair)


def test_connes_and_donaldson_agree():
    pair = curvedhh.generate("two-spheres", d=2)
    connes = curvedhh.connes(pair, 1)[1]
    don = curvedhh.donaldson(pair)
    assert connes == {n - pair.dimension - 2: k for n, k in don.items()}


def test_csv_round_trip():
    pair = curvedhh.generate("branched-cover", m=2)
    rows = curvedhh.hochschild(pair, 2)
    text = curvedhh.to_csv(rows)
    assert text.startswith("p,degree,dim\n")
    assert curvedhh.parse_csv(text) == rows


def test_empty_and_errors():
    empty = curvedhh.generate("empty")
    assert all(not row for row in curvedhh.hochschild(empty, 2).values())
    with pytest.raises(curvedhh.CurvedError, match="E_PARSE"):
        curvedhh.parse("format 1\nbogus\n")
    with pytest.raises(curvedhh.CurvedError, match="E_SEMANTIC"):
        curvedhh.parse("format 1\nobject X\ngen e X Y 0\n")
    with pytest.raises(curvedhh.CurvedError, match="E_CONFIG"):
        curvedhh.generate("nope")
