"""Wire format round-trips and parse diagnostics."""

import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from binframe import BinMatrix, BinVector, ParseError
from binframe.formats import (
    int_to_vector,
    parse_matrix,
    parse_vector,
    render_matrix,
    vector_to_int,
)

matrices = st.integers(1, 7).flatmap(
    lambda r: st.integers(1, 7).flatmap(
        lambda c: st.lists(st.integers(0, (1 << c) - 1), min_size=r, max_size=r).map(
            lambda rows: BinMatrix(c, tuple(rows))
        )
    )
)


@given(matrices)
def test_dense_round_trip(m):
    assert parse_matrix(render_matrix(m, "dense"), "dense") == m


@given(matrices)
def test_cols_int_round_trip(m):
    assert parse_matrix(render_matrix(m, "cols-int"), "cols-int") == m


@given(matrices)
def test_json_round_trip(m):
    assert parse_matrix(render_matrix(m, "json"), "json") == m


def test_catalog_integer_encoding():
    v = int_to_vector(13, 4)
    assert tuple(v) == (1, 0, 1, 1)
    assert vector_to_int(v) == 13
    assert vector_to_int(BinVector.from_bits([1, 0, 0, 0])) == 1


def test_parse_dense_example():
    m = parse_matrix("101\n011\n110", "dense")
    assert m.to_bitstring_rows() == ["101", "011", "110"]
    spaced = parse_matrix("1 0 1\n0 1 1\n1 1 0\n", "dense")
    assert spaced == m


def test_parse_cols_int_orthogonal_class():
    m = parse_matrix("k=4\n7 11 13 14", "cols-int")
    assert [c.bits for c in m.col_vectors()] == [7, 11, 13, 14]
    single = parse_matrix("k=4\n13", "cols-int")
    assert single.col(0) == BinVector.from_bits([1, 0, 1, 1])


def test_parse_json_document():
    text = json.dumps({"rows": 2, "cols": 3, "data": ["101", "010"]})
    m = parse_matrix(text, "json")
    assert m.shape == (2, 3)
    assert m.to_bitstring_rows() == ["101", "010"]


def test_ragged_dense_rows():
    with pytest.raises(ParseError) as err:
        parse_matrix("101\n01", "dense")
    assert err.value.line == 2


def test_non_binary_character_position():
    with pytest.raises(ParseError) as err:
        parse_matrix("101\n0x1", "dense")
    assert (err.value.line, err.value.column) == (2, 2)


def test_cols_int_value_too_wide():
    with pytest.raises(ParseError) as err:
        parse_matrix("k=3\n8", "cols-int")
    assert err.value.line == 2


def test_cols_int_missing_header():
    with pytest.raises(ParseError):
        parse_matrix("7 11", "cols-int")


def test_cols_int_no_values():
    with pytest.raises(ParseError):
        parse_matrix("k=3\n", "cols-int")


def test_empty_dense_document():
    with pytest.raises(ParseError):
        parse_matrix("   \n  ", "dense")


def test_bad_json_reports_position():
    with pytest.raises(ParseError) as err:
        parse_matrix("{\n  broken", "json")
    assert err.value.line >= 1


def test_json_field_validation():
    with pytest.raises(ParseError):
        parse_matrix(json.dumps({"rows": 1, "cols": 2}), "json")
    with pytest.raises(ParseError):
        parse_matrix(json.dumps({"rows": 2, "cols": 2, "data": ["11"]}), "json")
    with pytest.raises(ParseError):
        parse_matrix(json.dumps({"rows": 1, "cols": 2, "data": ["12"]}), "json")


def test_parse_vector_examples():
    assert parse_vector("1011") == BinVector.from_bits([1, 0, 1, 1])
    assert parse_vector(" 1 0 1 \n") == BinVector.from_bits([1, 0, 1])
    with pytest.raises(ParseError):
        parse_vector("")
    with pytest.raises(ParseError):
        parse_vector("10a")


def test_unknown_format():
    with pytest.raises(ParseError):
        parse_matrix("1", "yaml")
    with pytest.raises(ParseError):
        render_matrix(BinMatrix.identity(2), "yaml")
