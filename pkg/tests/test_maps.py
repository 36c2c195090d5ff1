"""Block-structured maps: products, composition, evaluation, reblocking."""

import random
from fractions import Fraction

import pytest

from revderiv.corpus import CorpusConfig, random_map, random_profile
from revderiv.maps import (
    ArityProfile,
    PolyMap,
    compose,
    embed_blocks,
    flatten,
    identity,
    pair,
    projection,
    reblock,
    select_blocks,
    zero_map,
)
from revderiv.poly import Polynomial


def test_profile_bookkeeping():
    prof = ArityProfile((2, 3))
    assert prof.total == 5
    assert prof.block_range(1) == range(0, 2)
    # block 2 of (2,3) covers flat coordinates 2..4
    assert prof.block_range(2) == range(2, 5)
    with pytest.raises(IndexError):
        prof.block_range(3)
    with pytest.raises(ValueError):
        ArityProfile(())
    with pytest.raises(ValueError):
        ArityProfile((1, -1))


def test_projection_selects_block():
    prof = ArityProfile((2, 3))
    p2 = projection(prof, 2)
    assert p2.codomain_dim == 3
    assert p2.evaluate([1, 2, 3, 4, 5]) == (3, 4, 5)


def test_pair_then_project_recovers_component():
    prof = ArityProfile((2,))
    f = PolyMap(prof, (Polynomial.variable(0, 2),))
    g = PolyMap(prof, (Polynomial.variable(1, 2), Polynomial.constant(2, 3)))
    tup = pair([f, g])
    assert tup.coords[:1] == f.coords
    assert tup.coords[1:] == g.coords


def test_map_add_zero_identity():
    prof = ArityProfile((2,))
    f = PolyMap(prof, (Polynomial.variable(0, 2) * Polynomial.variable(1, 2),))
    assert f + zero_map(prof, 1) == f


def test_compose_identity_and_projection_laws():
    prof = ArityProfile((3,))
    g = PolyMap(prof, (Polynomial.variable(0, 3) * Polynomial.variable(2, 3),))
    assert compose(g, identity(prof)) == g
    fs = [
        PolyMap(prof, (Polynomial.variable(i, 3),)) for i in range(3)
    ]
    tup = pair(fs)
    for j, f in enumerate(fs, start=1):
        assert compose(projection(ArityProfile((1, 1, 1)), j), tup) == f


def test_compose_substitution_example():
    # (x^2) o (x+1) -> x^2 + 2x + 1
    sq = PolyMap(ArityProfile((1,)), (Polynomial.from_dict(1, {(2,): Fraction(1)}),))
    shift = PolyMap(
        ArityProfile((1,)),
        (Polynomial.from_dict(1, {(1,): Fraction(1), (0,): Fraction(1)}),),
    )
    out = compose(sq, shift)
    assert str(out) == "(x1^2 + 2*x1 + 1)"


def test_eval_homomorphism_random():
    rng = random.Random(99)
    cfg = CorpusConfig()
    for _ in range(25):
        prof = random_profile(rng, cfg)
        mid = rng.randint(1, 3)
        f = random_map(rng, prof, mid, cfg.max_degree)
        g = random_map(rng, ArityProfile((mid,)), rng.randint(1, 3), cfg.max_degree)
        point = [Fraction(rng.randint(-3, 3), rng.randint(1, 2)) for _ in range(prof.total)]
        assert compose(g, f).evaluate(point) == g.evaluate(f.evaluate(point))


def test_eval_identity_and_zero():
    v = [Fraction(2), Fraction(-5)]
    assert identity(2).evaluate(v) == tuple(v)
    assert zero_map(ArityProfile((2,)), 3).evaluate(v) == (0, 0, 0)


def test_reblock_is_free():
    prof = ArityProfile((2, 3))
    f = PolyMap(prof, (Polynomial.variable(4, 5),))
    flat = reblock(f, ArityProfile((5,)))
    assert flat.coords == f.coords
    assert reblock(flat, prof) == f
    with pytest.raises(ValueError):
        reblock(f, ArityProfile((2, 2)))


def test_reblock_zero_dim_block_preserves_evaluation():
    f = PolyMap(ArityProfile((2,)), (Polynomial.variable(1, 2),))
    g = reblock(f, ArityProfile((1, 0, 1)))
    point = [Fraction(3), Fraction(7)]
    assert g.evaluate(point) == f.evaluate(point)
    assert flatten(g) == f


def test_zero_dim_codomain():
    f = zero_map(ArityProfile((2,)), 0)
    assert f.codomain_dim == 0
    assert f.evaluate([1, 2]) == ()
    assert str(f) == "()"


def test_embed_blocks_routing():
    src = ArityProfile((1, 2))
    target = ArityProfile((2, 1, 1))
    w = embed_blocks(src, target, {1: 2, 3: 1})
    assert w.evaluate([Fraction(5), Fraction(1), Fraction(2)]) == (1, 2, 0, 5)
    with pytest.raises(ValueError):
        embed_blocks(src, target, {1: 1})  # dimension clash


def test_select_blocks():
    src = ArityProfile((1, 2, 1))
    w = select_blocks(src, [3, 1])
    assert w.evaluate([1, 2, 3, 4]) == (4, 1)


def test_pair_requires_shared_domain():
    f = identity(2)
    g = identity(3)
    with pytest.raises(ValueError):
        pair([f, g])
    with pytest.raises(ValueError):
        pair([])


def test_compose_interface_mismatch():
    f = identity(2)
    g = identity(3)
    with pytest.raises(ValueError):
        compose(g, f)


def test_maps_are_immutable():
    f = identity(2)
    with pytest.raises(AttributeError):
        f.coords = ()
