import json

import pytest
from hypothesis import given, strategies as st

from lvmb import documents, fixtures
from lvmb.documents import DocumentError
from lvmb.exactnum import GaussianRational as G
from lvmb.systems import Configuration, FundamentalSet


@pytest.mark.parametrize("name", fixtures.names())
def test_fixture_round_trip_is_bit_exact(name, tmp_path):
    doc = fixtures.load(name)
    path = tmp_path / f"{name}.json"
    documents.save(doc, path)
    again = documents.load(path)
    assert again == doc
    assert path.read_text() == documents.dumps(again)


def test_ex_8_1_keeps_duplicate_points(fx):
    lam = fx("ex8_1").lam
    assert lam[4] == lam[5] and lam[6] == lam[7]


small = st.fractions(min_value=-9, max_value=9, max_denominator=7)


@given(st.lists(st.tuples(small, small), min_size=3, max_size=6))
def test_round_trip_of_arbitrary_rationals(pairs):
    lam = Configuration(1, tuple((G(a, b),) for a, b in pairs))
    doc = documents.make(None, lam, seed=3)
    assert documents.loads(documents.dumps(doc)) == doc


BASE = {"m": 1, "n": 3, "epsilon": [[1, 2, 3]], "lambda": [[["0", "0"]], [["1", "0"]], [["0", "1"]]]}


def bad(**changes):
    data = json.loads(json.dumps(BASE))
    data.update(changes)
    return data


@pytest.mark.parametrize(
    "data,fragment",
    [
        (bad(**{"lambda": [[["0.5", "0"]], [["1", "0"]], [["0", "1"]]]}), "lambda[1][1]"),
        (bad(**{"lambda": [[[0.5, "0"]], [["1", "0"]], [["0", "1"]]]}), "lambda[1][1]"),
        (bad(**{"lambda": [[["0", "0"]], [["1", "0"]]]}), "lambda: expected 3 vectors"),
        (bad(**{"lambda": [[["0", "0"]], [["1", "0"]], [["0", "1"], ["1", "1"]]]}), "lambda[3]"),
        (bad(epsilon=[[1, 2, 4]]), "epsilon[0][2]: index 4 outside 1..3"),
        (bad(epsilon=[[1, 2]]), "epsilon[0]: has 2 indices"),
        (bad(epsilon=[[1, 1, 2]]), "epsilon[0]: repeated index"),
        (bad(epsilon=[[1, 2, "3"]]), "epsilon[0][2]"),
        (bad(epsilon=[]), "epsilon"),
        (bad(m=True), "m: expected an integer"),
        (bad(n=2), "need m >= 1 and n >= 2m+1"),
        (bad(basis=[[1, 2]]), "basis[1]"),
        (bad(basis=[[1.0]]), "basis[1][1]"),
        (bad(metadata=[1]), "metadata"),
        ({"n": 3}, "missing field 'm'"),
        ([1, 2], "root"),
    ],
)
def test_errors_name_the_offending_field(data, fragment):
    with pytest.raises(DocumentError) as info:
        documents.from_dict(data)
    assert fragment in str(info.value)


def test_float_rationals_are_refused():
    data = bad(**{"lambda": [[["1/2", "0.25"]], [["1", "0"]], [["0", "1"]]]})
    with pytest.raises(DocumentError, match=r"lambda\[1\]\[1\]"):
        documents.from_dict(data)


def test_invalid_json_reports_position():
    with pytest.raises(DocumentError, match="line 2, column"):
        documents.loads('{\n "m": }')


def test_missing_file(tmp_path):
    with pytest.raises(DocumentError, match="cannot read"):
        documents.load(tmp_path / "nope.json")


def test_optional_fields():
    doc = documents.from_dict({"m": 1, "n": 3, "epsilon": [[3, 1, 2]]})
    assert doc.lam is None and doc.basis is None and doc.eps == FundamentalSet.of(1, 3, [(1, 2, 3)])
    assert "lambda" not in documents.to_dict(doc)


def test_unknown_fixture():
    with pytest.raises(KeyError):
        fixtures.load("ex9_9")
