import json
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from minsupport.errors import ParseError
from minsupport.formats import dumps_csv, dumps_json, loads_csv, loads_json, read_matrix, write_matrix
from minsupport.matrix import UMatrix

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=30)
matrices = st.integers(1, 4).flatmap(
    lambda n: st.integers(1, 4).flatmap(
        lambda m: st.lists(st.lists(rationals, min_size=m, max_size=m), min_size=n, max_size=n)
    )
).map(UMatrix)


@given(matrices)
def test_json_round_trip(M):
    text = dumps_json(M)
    assert loads_json(text) == M
    assert dumps_json(loads_json(text)) == text


@given(matrices)
def test_csv_round_trip(M):
    text = dumps_csv(M)
    assert loads_csv(text) == M
    assert dumps_csv(loads_csv(text)) == text


def test_json_layout():
    M = UMatrix([[Fraction(1, 2), 3], [0, Fraction(-4, 6)]])
    obj = json.loads(dumps_json(M))
    assert obj == {"n": 2, "m": 2, "entries": [["1/2", 3], [0, "-2/3"]]}


def test_csv_layout():
    assert dumps_csv(UMatrix([[Fraction(1, 2), 3], [0, 2]])) == "1/2,3\n0,2\n"


def test_non_lowest_terms_are_canonicalised():
    M = loads_json('{"n": 1, "m": 2, "entries": [["2/4", "3"]]}')
    assert dumps_csv(M) == "1/2,3\n"


@pytest.mark.parametrize(
    "text",
    [
        "not json",
        '{"entries": [[1, 0.5]]}',
        '{"entries": []}',
        '{"entries": [[1, 2], [3]]}',
        '{"n": 3, "entries": [[1, 2]]}',
        '{"rows": [[1]]}',
    ],
)
def test_json_errors(text):
    with pytest.raises(ParseError):
        loads_json(text)


@pytest.mark.parametrize("text", ["", "1,2\n3\n", "1,abc\n", "0.25,1\n"])
def test_csv_errors(text):
    with pytest.raises(ParseError):
        loads_csv(text)


def test_files(tmp_path):
    M = UMatrix([[2, 2, 0, 0], [0, 0, 2, 2]])
    for name in ("a.json", "a.csv"):
        p = write_matrix(M, tmp_path / name)
        assert read_matrix(p) == M
    with pytest.raises(ParseError):
        read_matrix(tmp_path / "missing.json")
