import json
from fractions import Fraction

import pytest

from superelliptic import LieDataError, load_lie, make_lie, sl2
from superelliptic.lie import dump_lie


def test_sl2_structure():
    lie = sl2()
    assert lie.names == ("e", "h", "f")
    assert lie.bracket_basis(0, 2) == {1: 1}
    assert lie.bracket_basis(1, 0) == {0: 2}
    assert lie.form(0, 2) == 4 and lie.form(1, 1) == 8
    assert lie.validation_errors() == []


def test_round_trip_through_json(tmp_path):
    path = tmp_path / "sl2.json"
    path.write_text(json.dumps(dump_lie(sl2(Fraction(1, 2)))))
    assert load_lie(path) == sl2(Fraction(1, 2))


def test_abelian_algebra(tmp_path):
    path = tmp_path / "ab.json"
    path.write_text(json.dumps({"dim": 2, "c": [], "B": [[0, 0, "1"], [1, 1, "2/3"]]}))
    lie = load_lie(path)
    assert lie.bracket({0: 1}, {1: 1}) == {}
    assert lie.form(1, 1) == Fraction(2, 3)


@pytest.mark.parametrize("payload,fragment", [
    ({"dim": 2, "c": [[0, 1, 0, 1]], "B": []}, "antisymmetry"),
    ({"dim": 1, "c": [], "B": [[0, 5, 1]]}, "form index"),
    ({"dim": 2, "c": [], "B": [[0, 1, 1]]}, "symmetric"),
    ({"dim": 2, "c": [[0, 0, 3, 1]], "B": []}, "outside"),
    ({"c": [], "B": []}, "malformed"),
])
def test_invalid_data(tmp_path, payload, fragment):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(payload))
    with pytest.raises(LieDataError, match=fragment):
        load_lie(path)


def test_non_invariant_form():
    # sl2 brackets with a form that is not ad-invariant
    entries = [(0, 2, 1, 1), (2, 0, 1, -1), (1, 0, 0, 2), (0, 1, 0, -2), (1, 2, 2, -2), (2, 1, 2, 2)]
    with pytest.raises(LieDataError, match="invariant"):
        make_lie(3, entries, [(0, 0, 1)])


def test_unreadable_file(tmp_path):
    with pytest.raises(LieDataError):
        load_lie(tmp_path / "missing.json")
    (tmp_path / "junk.json").write_text("{not json")
    with pytest.raises(LieDataError):
        load_lie(tmp_path / "junk.json")
