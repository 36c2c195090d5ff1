"""Partition-sum chain rules against the iterated-derivative oracle."""

import random

import pytest

from revderiv.corpus import CorpusConfig, random_composable_pair
from revderiv.faa_di_bruno import fdb_report, forward_fdb, reverse_fdb
from revderiv.maps import ArityProfile, PolyMap, compose, pair, select_blocks
from revderiv.poly import Polynomial
from revderiv.syntax import parse_map
from revderiv.towers import forward_tower, reverse_tower

SQ = parse_map("(x1^2)")


def test_forward_n0_is_chain_rule():
    f, g = SQ, SQ
    out = forward_fdb(f, g, 0)
    assert out == forward_tower(compose(g, f), 1)
    # D[g o f](a, b) built by hand: D[g](f(a), D[f](a, b))
    dom = ArityProfile((1, 1))
    base = compose(f, select_blocks(dom, [1]))
    rhs = compose(forward_tower(g, 1), pair([base, forward_tower(f, 1)]))
    assert out == rhs


def test_forward_n1_frozen_value():
    # f = g = squaring, so the composite is x^4 and the order-2 forward
    # derivative is 12*a0^2*a1*a2
    out = forward_fdb(SQ, SQ, 1)
    assert str(out) == "(12*x1^2*x2*x3)"
    assert out == forward_tower(compose(SQ, SQ), 2)


def test_reverse_n0_is_reverse_chain_rule_byte_identical():
    f = parse_map("(x1^2, x1)")
    g = parse_map("(x1*x2^2)", blocks=(2,))
    rep = fdb_report(f, g, 0, "reverse")
    assert rep.equal
    assert len(rep.summands) == 1
    # hand-built reverse chain rule: R[f](a, R[g](f(a), b))
    dom = ArityProfile((1, 1))
    base = compose(f, select_blocks(dom, [1]))
    inner = compose(reverse_tower(g, 1), pair([base, select_blocks(dom, [2])]))
    rhs = compose(reverse_tower(f, 1), pair([select_blocks(dom, [1]), inner]))
    assert rep.total == rhs
    assert str(rep.total) == str(rhs)


def test_reverse_n1_matches_displayed_two_summand_formula():
    f, g = SQ, SQ
    rep = fdb_report(f, g, 1, "reverse")
    assert rep.equal
    assert [str(s.partition) for s in rep.summands] == ["{1}|{2}", "{1,2}"]
    dom = ArityProfile((1, 1, 1))  # (a0, b, a2)
    a0 = select_blocks(dom, [1])
    b = select_blocks(dom, [2])
    a2 = select_blocks(dom, [3])
    base = compose(f, a0)
    # first summand: the singleton {2} feeds a forward factor of f into the
    # order-2 reverse derivative of g
    push = compose(forward_tower(f, 1), pair([a0, a2]))
    inner1 = compose(reverse_tower(g, 2), pair([base, b, push]))
    summand1 = compose(reverse_tower(f, 1), pair([a0, inner1]))
    # second summand: {1,2} drives the order-2 reverse derivative of f
    inner2 = compose(reverse_tower(g, 1), pair([base, b]))
    summand2 = compose(reverse_tower(f, 2), pair([a0, inner2, a2]))
    assert rep.summands[0].result == summand1
    assert rep.summands[1].result == summand2
    assert rep.total == summand1 + summand2
    assert str(rep.total) == "(12*x1^2*x2*x3)"


def test_summand_counts_follow_partition_counts():
    f = parse_map("(x1 + x1^2)")
    g = parse_map("(2*x1)")
    expected = {0: 1, 1: 2, 2: 5, 3: 15}
    for n, count in expected.items():
        for mode in ("forward", "reverse"):
            rep = fdb_report(f, g, n, mode)
            assert len(rep.summands) == count
            assert rep.equal


def test_identities_on_random_pairs():
    rng = random.Random(31)
    cfg = CorpusConfig()
    for _ in range(5):
        f, g = random_composable_pair(rng, cfg, max_dim=2, max_degree=2)
        for n in range(3):
            assert forward_fdb(f, g, n) == forward_tower(compose(g, f), n + 1)
            assert reverse_fdb(f, g, n) == reverse_tower(compose(g, f), n + 1)


def test_reverse_never_takes_forward_of_outer_map():
    rng = random.Random(32)
    cfg = CorpusConfig()
    f, g = random_composable_pair(rng, cfg, max_dim=2, max_degree=2)
    for n in range(4):
        rep = fdb_report(f, g, n, "reverse")
        for s in rep.summands:
            kinds_on_g = {kind for kind, which, _ in s.factors if which == "g"}
            assert kinds_on_g == {"reverse"}
            # the outer factor on f is reverse; inner f factors are forward
            assert s.factors[0][:2] == ("reverse", "f")


def test_degenerate_middle_dimension():
    # f : 1 -> 0 and g : 0 -> 1 make the composite constant
    f = PolyMap(ArityProfile((1,)), ())
    g = PolyMap(ArityProfile((0,)), (Polynomial.constant(0, 5),))
    for n in range(3):
        assert reverse_fdb(f, g, n).is_zero()
        rep = fdb_report(f, g, n, "reverse")
        assert rep.equal
        assert forward_fdb(f, g, n).is_zero()


def test_interface_mismatch_rejected():
    f = parse_map("(x1, x1)")  # 1 -> 2
    g = parse_map("(x1^2)")    # 1 -> 1
    with pytest.raises(ValueError):
        forward_fdb(f, g, 0)
    with pytest.raises(ValueError):
        fdb_report(f, g, 0, "reverse")
    with pytest.raises(ValueError):
        fdb_report(g, g, 0, "sideways")
    with pytest.raises(ValueError):
        reverse_fdb(g, g, -1)


def test_report_json_shape():
    rep = fdb_report(SQ, SQ, 1, "reverse")
    payload = rep.to_json()
    assert payload["mode"] == "reverse"
    assert payload["n"] == 1
    assert payload["equal"] is True
    assert payload["first_difference"] is None
    assert len(payload["summands"]) == 2
    first = payload["summands"][0]
    assert set(first) == {"partition", "block_sizes", "factors", "map"}
