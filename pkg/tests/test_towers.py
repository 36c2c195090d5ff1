"""Higher-order towers: shapes, frozen values, stable rule, transpose bridge."""

import random

import pytest

from revderiv.combinators import reverse_derivative
from revderiv.corpus import CorpusConfig, random_context_map, random_single_block_map
from revderiv.maps import ArityProfile, PolyMap
from revderiv.poly import Polynomial
from revderiv.syntax import parse_map
from revderiv.towers import (
    check_dagger_bridge,
    check_stable_rule,
    check_stable_rule_in_context,
    forward_tower,
    higher_forward,
    higher_reverse,
    reverse_tower,
)


def test_reverse_tower_of_cube():
    f = parse_map("(x1^3)")
    assert str(reverse_tower(f, 1)) == "(3*x1^2*x2)"
    assert str(reverse_tower(f, 2)) == "(6*x1*x2*x3)"
    assert str(reverse_tower(f, 3)) == "(6*x2*x3*x4)"
    assert reverse_tower(f, 4).is_zero()


def test_reverse_tower_order_zero_is_f():
    f = parse_map("(x1^2, x1)")
    assert reverse_tower(f, 0) == f
    assert higher_reverse(f, 0).result == f


def test_reverse_tower_of_linear_vanishes_at_two():
    f = parse_map("(2*x1 - x2, x1)")
    assert reverse_tower(f, 2).is_zero()


def test_forward_tower_values():
    cube = parse_map("(x1^3)")
    assert str(forward_tower(cube, 2)) == "(6*x1*x2*x3)"
    sq = parse_map("(x1^2)")
    assert str(forward_tower(sq, 2)) == "(2*x2*x3)"  # base point drops out
    assert forward_tower(sq, 3).is_zero()  # order beyond the degree


def test_tower_shapes():
    f = parse_map("(x1 + x2, x1*x2, x1^2)", blocks=(2,))  # 2 -> 3
    for order in range(1, 4):
        hr = higher_reverse(f, order)
        assert hr.kind == "reverse" and hr.order == order
        assert hr.result.domain.blocks == (2, 3) + (2,) * (order - 1)
        assert hr.result.codomain_dim == 2
        hf = higher_forward(f, order)
        assert hf.kind == "forward" and hf.order == order
        assert hf.result.domain.blocks == (2,) * (order + 1)
        assert hf.result.codomain_dim == 3


def test_negative_order_rejected():
    f = parse_map("(x1)")
    with pytest.raises(ValueError):
        reverse_tower(f, -1)
    with pytest.raises(ValueError):
        forward_tower(f, -1)


def test_stable_rule_square():
    check = check_stable_rule(parse_map("(x1^2)"))
    assert check.ok
    assert str(check.lhs) == str(check.rhs)


def test_stable_rule_linear_both_sides_zero():
    check = check_stable_rule(parse_map("(3*x1 - x2, x1)", blocks=(2,)))
    assert check.ok
    assert check.lhs.is_zero() and check.rhs.is_zero()


def test_stable_rule_random_corpus():
    rng = random.Random(21)
    cfg = CorpusConfig()
    for _ in range(30):
        f = random_single_block_map(rng, cfg)
        assert check_stable_rule(f).ok


def test_stable_rule_in_context_random():
    rng = random.Random(22)
    cfg = CorpusConfig()
    for _ in range(20):
        f = random_context_map(rng, cfg)
        assert check_stable_rule_in_context(f).ok
    with pytest.raises(ValueError):
        check_stable_rule_in_context(parse_map("(x1)"))


def test_failed_check_carries_witness():
    # feed the in-context checker a map whose middle block is empty by
    # reblocking, then confirm the witness fields are canonical maps
    f = parse_map("(x1^2)")
    check = check_stable_rule(f)
    assert isinstance(check.lhs, PolyMap) and isinstance(check.rhs, PolyMap)
    assert bool(check) is check.ok


def test_dagger_bridge_order_one_is_reverse_derivative():
    f = parse_map("(x1^2 + x2, x1*x2)", blocks=(2,))
    check = check_dagger_bridge(f, 1)
    assert check.ok
    assert check.lhs == reverse_derivative(f)


def test_dagger_bridge_cube_order_two():
    f = parse_map("(x1^3)")
    check = check_dagger_bridge(f, 2)
    assert check.ok
    assert str(check.lhs) == "(6*x1*x2*x3)"


def test_dagger_bridge_linear_high_order_zero():
    f = parse_map("(2*x1, x1)")
    for order in (2, 3):
        check = check_dagger_bridge(f, order)
        assert check.ok
        assert check.lhs.is_zero()
    with pytest.raises(ValueError):
        check_dagger_bridge(f, 0)


def test_degree_bound_random():
    rng = random.Random(23)
    cfg = CorpusConfig()
    for _ in range(20):
        f = random_single_block_map(rng, cfg)
        order = max(f.max_degree(), 0) + 1
        assert reverse_tower(f, order).is_zero()
        assert forward_tower(f, order).is_zero()


def test_zero_dim_codomain_towers():
    f = PolyMap(ArityProfile((2,)), ())
    r = reverse_tower(f, 1)
    assert r.domain.blocks == (2, 0)
    assert r.is_zero()


def test_constant_map_towers():
    f = PolyMap(ArityProfile((1,)), (Polynomial.constant(1, 4),))
    assert reverse_tower(f, 1).is_zero()
    assert forward_tower(f, 1).is_zero()
