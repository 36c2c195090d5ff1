"""Seeded random polynomial maps for the law suites.

Polynomial identities are checked symbolically, so small shapes suffice:
blocks of dimension up to 3, degree up to 3, and coefficients drawn from
{-3, ..., 3} plus 1/2.  Everything is driven by an explicit
``random.Random`` so a seed reproduces a run byte-for-byte.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .maps import ArityProfile, PolyMap
from .poly import Polynomial

COEFF_POOL = tuple(Fraction(k) for k in range(-3, 4)) + (Fraction(1, 2),)


@dataclass(frozen=True)
class CorpusConfig:
    max_dim: int = 3
    max_degree: int = 3
    max_order: int = 3
    max_blocks: int = 3
    max_terms: int = 4


def random_monomial(rng: random.Random, dim: int, max_degree: int) -> tuple[int, ...]:
    exps = [0] * dim
    if dim:
        for _ in range(rng.randint(0, max_degree)):
            exps[rng.randrange(dim)] += 1
    return tuple(exps)


def random_polynomial(rng: random.Random, dim: int, max_degree: int, max_terms: int = 4) -> Polynomial:
    coeffs: dict[tuple[int, ...], Fraction] = {}
    for _ in range(rng.randint(1, max_terms)):
        mono = random_monomial(rng, dim, max_degree)
        coeffs[mono] = coeffs.get(mono, Fraction(0)) + rng.choice(COEFF_POOL)
    return Polynomial.from_dict(dim, coeffs)


def random_map(rng: random.Random, profile: ArityProfile, codomain_dim: int,
               max_degree: int, max_terms: int = 4) -> PolyMap:
    dim = profile.total
    return PolyMap(
        profile,
        tuple(random_polynomial(rng, dim, max_degree, max_terms) for _ in range(codomain_dim)),
    )


def random_profile(rng: random.Random, cfg: CorpusConfig) -> ArityProfile:
    count = rng.randint(1, cfg.max_blocks)
    return ArityProfile(tuple(rng.randint(1, cfg.max_dim) for _ in range(count)))


def random_single_block_map(rng: random.Random, cfg: CorpusConfig,
                            dim: int | None = None, codomain_dim: int | None = None) -> PolyMap:
    if dim is None:
        dim = rng.randint(1, cfg.max_dim)
    if codomain_dim is None:
        codomain_dim = rng.randint(1, cfg.max_dim)
    return random_map(rng, ArityProfile((dim,)), codomain_dim, cfg.max_degree, cfg.max_terms)


def random_context_map(rng: random.Random, cfg: CorpusConfig,
                       codomain_dim: int | None = None) -> PolyMap:
    """A map with a three-block domain (C1, A, C2), every block nonzero."""
    profile = ArityProfile(tuple(rng.randint(1, cfg.max_dim) for _ in range(3)))
    if codomain_dim is None:
        codomain_dim = rng.randint(1, cfg.max_dim)
    return random_map(rng, profile, codomain_dim, cfg.max_degree, cfg.max_terms)


def random_dlinear_map(rng: random.Random, profile: ArityProfile, j: int,
                       codomain_dim: int, cfg: CorpusConfig) -> PolyMap:
    """A map linear in block j: each coordinate is a sum of block-j variables
    with coefficients polynomial in the other blocks."""
    dim = profile.total
    block = profile.block_range(j)
    others = [i for i in range(dim) if i not in block]
    coords = []
    for _ in range(codomain_dim):
        acc = Polynomial.zero(dim)
        for i in block:
            # coefficient polynomial over the other coordinates only
            coeffs: dict[tuple[int, ...], Fraction] = {}
            for _ in range(rng.randint(0, cfg.max_terms - 1)):
                exps = [0] * dim
                for _ in range(rng.randint(0, cfg.max_degree - 1)):
                    if others:
                        exps[rng.choice(others)] += 1
                mono = tuple(exps)
                coeffs[mono] = coeffs.get(mono, Fraction(0)) + rng.choice(COEFF_POOL)
            coef_poly = Polynomial.from_dict(dim, coeffs)
            acc = acc + coef_poly * Polynomial.variable(i, dim)
        coords.append(acc)
    return PolyMap(profile, tuple(coords))


def random_composable_pair(rng: random.Random, cfg: CorpusConfig,
                           max_dim: int | None = None,
                           max_degree: int | None = None) -> tuple[PolyMap, PolyMap]:
    """Single-block f : A -> B and g : B -> C that compose."""
    d = max_dim if max_dim is not None else cfg.max_dim
    deg = max_degree if max_degree is not None else cfg.max_degree
    a, b, c = (rng.randint(1, d) for _ in range(3))
    f = random_map(rng, ArityProfile((a,)), b, deg, cfg.max_terms)
    g = random_map(rng, ArityProfile((b,)), c, deg, cfg.max_terms)
    return f, g


def random_scalar(rng: random.Random) -> Fraction:
    return rng.choice(COEFF_POOL)
