"""Grammar, canonical printing, and round-trips."""

import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from revderiv.corpus import CorpusConfig, random_map, random_profile
from revderiv.maps import ArityProfile, PolyMap
from revderiv.poly import Polynomial
from revderiv.syntax import ParseError, parse_map, parse_polynomial


def test_parse_simple_map():
    m = parse_map("(x1^2 - 1, 1/2*x1*x2 + 3)")
    assert m.domain.blocks == (2,)
    assert m.codomain_dim == 2
    assert str(m) == "(x1^2 - 1, 1/2*x1*x2 + 3)"


def test_parse_with_declared_blocks():
    m = parse_map("(x1*x3)", blocks=(1, 1, 1))
    assert m.domain.blocks == (1, 1, 1)
    m2 = parse_map("(x1)", blocks=(2,))
    assert m2.domain.total == 2


def test_parse_whitespace_and_signs():
    assert str(parse_map(" ( -x1 + 2 ) ")) == "(-x1 + 2)"
    assert str(parse_map("(0)")) == "(0)"
    assert str(parse_map("(3 - 3)")) == "(0)"
    assert str(parse_map("(x1^0)")) == "(1)"
    assert str(parse_map("(2*x1 - 0)")) == "(2*x1)"


def test_parse_constant_map_and_empty_map():
    m = parse_map("(5, -1/2)")
    assert m.domain.total == 0
    assert m.evaluate([]) == (5, Fraction(-1, 2))
    e = parse_map("()")
    assert e.codomain_dim == 0


def test_merges_repeated_terms():
    p = parse_polynomial("x1 + x1 + x1^2")
    assert p == Polynomial.from_dict(1, {(1,): Fraction(2), (2,): Fraction(1)})


def test_parse_errors_carry_positions():
    with pytest.raises(ParseError) as err:
        parse_map("(x1^)")
    assert err.value.position == 4
    assert "^" in err.value.caret_text().splitlines()[1]

    with pytest.raises(ParseError):
        parse_map("x1")  # missing parens
    with pytest.raises(ParseError):
        parse_map("(x1))")
    with pytest.raises(ParseError):
        parse_map("(x0)")  # variables start at x1
    with pytest.raises(ParseError):
        parse_map("(1/0)")
    with pytest.raises(ParseError):
        parse_map("(x1 + )")
    with pytest.raises(ParseError):
        parse_map("(x1 ? 2)")


def test_declared_blocks_must_cover_variables():
    with pytest.raises(ParseError, match="x3"):
        parse_map("(x3)", blocks=(1, 1))
    with pytest.raises(ParseError, match="x2"):
        parse_polynomial("x2", dim=1)


def test_round_trip_on_random_corpus():
    rng = random.Random(41)
    cfg = CorpusConfig()
    for _ in range(200):
        prof = random_profile(rng, cfg)
        m = random_map(rng, prof, rng.randint(0, 3), cfg.max_degree)
        back = parse_map(str(m), blocks=prof.blocks)
        assert back == m
        # parse-print-parse is the identity on canonical text
        assert str(back) == str(m)


def test_round_trip_single_polynomials():
    rng = random.Random(42)
    cfg = CorpusConfig()
    for _ in range(200):
        dim = rng.randint(1, 4)
        p = random_map(rng, ArityProfile((dim,)), 1, cfg.max_degree).coords[0]
        assert parse_polynomial(str(p), dim=dim) == p


@given(st.text(alphabet="x0123456789+-*/^(), \t", max_size=40))
def test_parser_rejects_garbage_cleanly(source):
    # any input either parses to a map or raises ParseError, nothing else
    try:
        result = parse_map(source)
    except ParseError:
        return
    assert isinstance(result, PolyMap)


@given(st.text(max_size=20))
def test_parser_handles_arbitrary_text(source):
    try:
        parse_map(source)
    except ParseError:
        pass
