"""Randomized symbolic verification of the derivative-combinator laws.

Every law is an exact equality of polynomial maps, so a "case" draws random
maps from the corpus, builds both sides with the public combinators, and
compares canonical forms; there are no tolerances anywhere.  Suites group
the laws the way the CLI exposes them.  A fixed seed reproduces every draw.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .combinators import (
    dagger,
    forward_derivative,
    forward_from_reverse,
    is_dlinear,
    is_klinear_in_block,
    partial_forward,
    partial_reverse,
    reverse_derivative,
)
from .corpus import (
    CorpusConfig,
    random_composable_pair,
    random_context_map,
    random_dlinear_map,
    random_map,
    random_profile,
    random_scalar,
    random_single_block_map,
)
from .faa_di_bruno import fdb_report
from .maps import (
    ArityProfile,
    PolyMap,
    compose,
    embed_blocks,
    flatten,
    identity,
    pair,
    precompose_blocks,
    projection,
    reblock,
    select_blocks,
    zero_map,
)
from .towers import (
    check_dagger_bridge,
    check_stable_rule,
    check_stable_rule_in_context,
    forward_tower,
    reverse_tower,
)

BELL = {1: 1, 2: 2, 3: 5, 4: 15, 5: 52}


@dataclass
class LawFailure:
    law: str
    maps: list[str]
    lhs: str
    rhs: str


@dataclass
class LawReport:
    suite: str
    seed: int
    cases: int
    failures: list[LawFailure]
    elapsed_ms: int
    laws: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "seed": self.seed,
            "cases": self.cases,
            "failures": [
                {"law": f.law, "maps": f.maps, "lhs": f.lhs, "rhs": f.rhs}
                for f in self.failures
            ],
            "elapsed_ms": self.elapsed_ms,
        }


def _cmp(law: str, inputs: Sequence[PolyMap], lhs: PolyMap, rhs: PolyMap) -> LawFailure | None:
    if lhs == rhs:
        return None
    return LawFailure(law, [str(m) for m in inputs], str(lhs), str(rhs))


def _flag(law: str, inputs: Sequence[PolyMap], ok: bool, lhs: str, rhs: str) -> LawFailure | None:
    if ok:
        return None
    return LawFailure(law, [str(m) for m in inputs], lhs, rhs)


# -- the seven axioms of the reverse combinator ------------------------------


def law_rd1(rng: random.Random, cfg: CorpusConfig) -> LawFailure | None:
    """Linearity of the combinator: deriving a linear combination."""
    dim = rng.randint(1, cfg.max_dim)
    cod = rng.randint(1, cfg.max_dim)
    f = random_single_block_map(rng, cfg, dim, cod)
    g = random_single_block_map(rng, cfg, dim, cod)
    s, t = random_scalar(rng), random_scalar(rng)
    lhs = reverse_derivative(f.scale(s) + g.scale(t))
    rhs = reverse_derivative(f).scale(s) + reverse_derivative(g).scale(t)
    return _cmp("rd1", [f, g], lhs, rhs)


def law_rd2(rng: random.Random, cfg: CorpusConfig) -> LawFailure | None:
    """The reverse derivative is linear in its covector block."""
    f = random_single_block_map(rng, cfg)
    r = reverse_derivative(f)
    return _flag("rd2", [f], is_klinear_in_block(r, 2), str(r), "k-linear in block 2")


def law_rd3(rng: random.Random, cfg: CorpusConfig) -> LawFailure | None:
    """Identities differentiate to the covector; projections to injections."""
    n = rng.randint(1, cfg.max_dim)
    rid = reverse_derivative(identity(n))
    expected = projection(ArityProfile((n, n)), 2)
    bad = _cmp("rd3", [identity(n)], rid, expected)
    if bad:
        return bad
    prof = random_profile(rng, cfg)
    j = rng.randint(1, prof.block_count)
    pj = projection(prof, j)
    r = reverse_derivative(flatten(pj))
    dj = prof.block_dim(j)
    src = ArityProfile((prof.total, dj))
    injection = embed_blocks(src, prof, {j: 2})
    return _cmp("rd3", [pj], r, injection)


def law_rd4(rng: random.Random, cfg: CorpusConfig) -> LawFailure | None:
    """Deriving a tuple sums the component derivatives at their covector slices."""
    dim = rng.randint(1, cfg.max_dim)
    k = rng.randint(1, 3)
    fs = [random_single_block_map(rng, cfg, dim, rng.randint(1, 2)) for _ in range(k)]
    tup = pair(fs)
    lhs = reverse_derivative(tup)
    fine = ArityProfile((dim,) + tuple(f.codomain_dim for f in fs))
    rhs_fine = zero_map(fine, dim)
    for idx, f in enumerate(fs):
        sel = select_blocks(fine, [1, idx + 2])
        rhs_fine = rhs_fine + compose(reverse_derivative(f), sel)
    rhs = reblock(rhs_fine, lhs.domain)
    return _cmp("rd4", fs, lhs, rhs)


def _reverse_chain_rhs(f: PolyMap, g: PolyMap) -> PolyMap:
    """The reverse chain rule right-hand side: pull the covector back through
    g at the pushed-forward base point, then through f."""
    n = f.domain.total
    dom = ArityProfile((n, g.codomain_dim))
    base = compose(f, select_blocks(dom, [1]))
    inner = compose(reverse_derivative(g), pair([base, select_blocks(dom, [2])]))
    return compose(reverse_derivative(f), pair([select_blocks(dom, [1]), inner]))


def law_rd5(rng: random.Random, cfg: CorpusConfig) -> LawFailure | None:
    f, g = random_composable_pair(rng, cfg)
    lhs = reverse_derivative(compose(g, f))
    return _cmp("rd5", [f, g], lhs, _reverse_chain_rhs(f, g))


def law_rd6(rng: random.Random, cfg: CorpusConfig) -> LawFailure | None:
    """Transposing the forward derivative in its vector block gives the
    reverse derivative."""
    f = random_single_block_map(rng, cfg)
    lhs = dagger(forward_derivative(f), 2)
    return _cmp("rd6", [f], lhs, reverse_derivative(f))


def law_rd7(rng: random.Random, cfg: CorpusConfig) -> LawFailure | None:
    """Mixed-partial symmetry, built entirely from reverse derivatives."""
    f = random_single_block_map(rng, cfg)
    n = f.domain.total
    r1 = reverse_derivative(f)                                   # (n, m) -> n
    h2raw = partial_reverse(r1, 2)                               # (n, m, n) -> m
    h2 = precompose_blocks(h2raw, ArityProfile((n, n)), {1: 1, 3: 2})
    h3 = partial_reverse(h2, 1)                                  # (n, n, m) -> n
    h4raw = partial_reverse(h3, 3)                               # (n, n, m, n) -> m
    src = ArityProfile((n, n, n))
    h4 = precompose_blocks(h4raw, src, {1: 1, 2: 2, 4: 3})
    swapped = precompose_blocks(h4, src, {1: 1, 2: 3, 3: 2})
    return _cmp("rd7", [f], h4, swapped)


def law_cd5_chain(rng: random.Random, cfg: CorpusConfig) -> LawFailure | None:
    """The induced forward derivative satisfies the forward chain rule."""
    f, g = random_composable_pair(rng, cfg)
    n = f.domain.total
    lhs = forward_derivative(compose(g, f))
    dom = ArityProfile((n, n))
    base = compose(f, select_blocks(dom, [1]))
    rhs = compose(forward_derivative(g), pair([base, forward_derivative(f)]))
    return _cmp("cd5-chain", [f, g], lhs, rhs)


def law_schwarz(rng: random.Random, cfg: CorpusConfig) -> LawFailure | None:
    """Order of the underlying coordinate partials never matters."""
    dim = rng.randint(1, cfg.max_dim)
    f = random_single_block_map(rng, cfg, dim, 1)
    p = f.coords[0]
    i, j = rng.randrange(dim), rng.randrange(dim)
    lhs, rhs = p.partial(i).partial(j), p.partial(j).partial(i)
    return _flag("schwarz", [f], lhs == rhs, str(lhs), str(rhs))


def law_partial_pairing(rng: random.Random, cfg: CorpusConfig) -> LawFailure | None:
    """The tuple of the per-block partial reverse derivatives is the total."""
    prof = random_profile(rng, cfg)
    f = random_map(rng, prof, rng.randint(1, cfg.max_dim), cfg.max_degree, cfg.max_terms)
    parts = [partial_reverse(f, j) for j in range(1, prof.block_count + 1)]
    total = reblock(reverse_derivative(flatten(f)), prof.concat(f.codomain_dim))
    return _cmp("partial-pairing", [f], pair(parts), total)


# -- the same axioms with context blocks on both sides -----------------------


def law_ctx_rd1(rng: random.Random, cfg: CorpusConfig) -> LawFailure | None:
    cod = rng.randint(1, cfg.max_dim)
    f = random_context_map(rng, cfg, cod)
    g = random_map(rng, f.domain, cod, cfg.max_degree, cfg.max_terms)
    s, t = random_scalar(rng), random_scalar(rng)
    lhs = partial_reverse(f.scale(s) + g.scale(t), 2)
    rhs = partial_reverse(f, 2).scale(s) + partial_reverse(g, 2).scale(t)
    return _cmp("ctx-rd1", [f, g], lhs, rhs)


def law_ctx_rd2(rng: random.Random, cfg: CorpusConfig) -> LawFailure | None:
    f = random_context_map(rng, cfg)
    r = partial_reverse(f, 2)
    return _flag("ctx-rd2", [f], is_klinear_in_block(r, 4), str(r), "k-linear in block 4")


def law_ctx_rd3(rng: random.Random, cfg: CorpusConfig) -> LawFailure | None:
    prof = random_profile(rng, cfg)
    nb = prof.block_count
    for j in range(1, nb + 1):
        pj = projection(prof, j)
        for i in range(1, nb + 1):
            r = partial_reverse(pj, i)
            dom = prof.concat(prof.block_dim(j))
            if i == j:
                expected = select_blocks(dom, [nb + 1])
            else:
                expected = zero_map(dom, prof.block_dim(i))
            bad = _cmp("ctx-rd3", [pj], r, expected)
            if bad:
                return bad
    return None


def law_ctx_rd4(rng: random.Random, cfg: CorpusConfig) -> LawFailure | None:
    f0 = random_context_map(rng, cfg, rng.randint(1, 2))
    k = rng.randint(1, 3)
    fs = [f0] + [
        random_map(rng, f0.domain, rng.randint(1, 2), cfg.max_degree, cfg.max_terms)
        for _ in range(k - 1)
    ]
    tup = pair(fs)
    lhs = partial_reverse(tup, 2)
    c1, a, c2 = f0.domain.blocks
    fine = ArityProfile((c1, a, c2) + tuple(f.codomain_dim for f in fs))
    rhs_fine = zero_map(fine, a)
    for idx, f in enumerate(fs):
        sel = select_blocks(fine, [1, 2, 3, idx + 4])
        rhs_fine = rhs_fine + compose(partial_reverse(f, 2), sel)
    rhs = reblock(rhs_fine, lhs.domain)
    return _cmp("ctx-rd4", fs, lhs, rhs)


def law_ctx_rd5(rng: random.Random, cfg: CorpusConfig) -> LawFailure | None:
    """Chain rule with the context threaded through both maps."""
    f = random_context_map(rng, cfg)
    c1, a, c2 = f.domain.blocks
    mid = f.codomain_dim
    e = rng.randint(1, cfg.max_dim)
    g = random_map(rng, ArityProfile((c1, mid, c2)), e, cfg.max_degree, cfg.max_terms)
    glue = pair([projection(f.domain, 1), f, projection(f.domain, 3)])
    lhs = partial_reverse(compose(g, glue), 2)
    dom = ArityProfile((c1, a, c2, e))
    fmid = compose(f, select_blocks(dom, [1, 2, 3]))
    inner = compose(
        partial_reverse(g, 2),
        pair([select_blocks(dom, [1]), fmid, select_blocks(dom, [3]), select_blocks(dom, [4])]),
    )
    rhs = compose(
        partial_reverse(f, 2),
        pair([select_blocks(dom, [1]), select_blocks(dom, [2]), select_blocks(dom, [3]), inner]),
    )
    return _cmp("ctx-rd5", [f, g], lhs, rhs)


def law_ctx_rd6(rng: random.Random, cfg: CorpusConfig) -> LawFailure | None:
    """Transposing the in-context derivative twice returns it."""
    f = random_context_map(rng, cfg)
    h = partial_reverse(f, 2)
    back = dagger(dagger(h, 4), 4)
    return _cmp("ctx-rd6", [f], back, h)


def law_ctx_rd7(rng: random.Random, cfg: CorpusConfig) -> LawFailure | None:
    f = random_context_map(rng, cfg)
    c1, a, c2 = f.domain.blocks
    m = f.codomain_dim
    l1 = partial_reverse(f, 2)                                   # (c1,a,c2,m) -> a
    l2raw = partial_reverse(l1, 4)                               # (c1,a,c2,m,a) -> m
    src2 = ArityProfile((c1, a, c2, a))
    l2 = precompose_blocks(l2raw, src2, {1: 1, 2: 2, 3: 3, 5: 4})
    l3 = partial_reverse(l2, 2)                                  # (c1,a,c2,a,m) -> a
    l4raw = partial_reverse(l3, 5)                               # (c1,a,c2,a,m,a) -> m
    src4 = ArityProfile((c1, a, c2, a, a))
    l4 = precompose_blocks(l4raw, src4, {1: 1, 2: 2, 3: 3, 4: 4, 6: 5})
    swapped = precompose_blocks(l4, src4, {1: 1, 2: 2, 3: 3, 4: 5, 5: 4})
    return _cmp("ctx-rd7", [f], l4, swapped)


def law_ctx_tuple(rng: random.Random, cfg: CorpusConfig) -> LawFailure | None:
    """Deriving (context, f, context) picks out f's covector slice."""
    f = random_context_map(rng, cfg)
    c1, a, c2 = f.domain.blocks
    m = f.codomain_dim
    glue = pair([projection(f.domain, 1), f, projection(f.domain, 3)])
    lhs = partial_reverse(glue, 2)
    fine = ArityProfile((c1, a, c2, c1, m, c2))
    rhs = reblock(
        compose(partial_reverse(f, 2), select_blocks(fine, [1, 2, 3, 5])),
        lhs.domain,
    )
    return _cmp("ctx-tuple", [f], lhs, rhs)


# -- transpose laws -----------------------------------------------------------


def law_transpose_of_forward(rng: random.Random, cfg: CorpusConfig) -> LawFailure | None:
    return law_rd6(rng, cfg)


def law_forward_from_reverse(rng: random.Random, cfg: CorpusConfig) -> LawFailure | None:
    f = random_single_block_map(rng, cfg)
    return _cmp("forward-from-reverse", [f], forward_from_reverse(f), forward_derivative(f))


def law_dagger_contravariance(rng: random.Random, cfg: CorpusConfig) -> LawFailure | None:
    c1 = rng.randint(1, cfg.max_dim)
    c2 = rng.randint(1, cfg.max_dim)
    a = rng.randint(1, cfg.max_dim)
    b = rng.randint(1, cfg.max_dim)
    e = rng.randint(1, cfg.max_dim)
    f = random_dlinear_map(rng, ArityProfile((c1, a, c2)), 2, b, cfg)
    g = random_dlinear_map(rng, ArityProfile((c1, b, c2)), 2, e, cfg)
    glue = pair([projection(f.domain, 1), f, projection(f.domain, 3)])
    lhs = dagger(compose(g, glue), 2)
    gd = dagger(g, 2)
    rhs = compose(dagger(f, 2), pair([projection(gd.domain, 1), gd, projection(gd.domain, 3)]))
    return _cmp("dagger-contravariance", [f, g], lhs, rhs)


def law_dagger_base_independence(rng: random.Random, cfg: CorpusConfig) -> LawFailure | None:
    """Re-deriving the reverse derivative in its covector block gives the
    forward derivative regardless of the covector base point."""
    f = random_single_block_map(rng, cfg)
    n, m = f.domain.total, f.codomain_dim
    lhs = partial_reverse(reverse_derivative(f), 2)              # (n, m, n) -> m
    rhs = compose(forward_derivative(f), select_blocks(ArityProfile((n, m, n)), [1, 3]))
    return _cmp("dagger-base-independence", [f], lhs, rhs)


def law_dagger_partial(rng: random.Random, cfg: CorpusConfig) -> LawFailure | None:
    """Transposing a partial forward derivative gives the partial reverse."""
    prof = random_profile(rng, cfg)
    f = random_map(rng, prof, rng.randint(1, cfg.max_dim), cfg.max_degree, cfg.max_terms)
    j = rng.randint(1, prof.block_count)
    lhs = dagger(partial_forward(f, j), prof.block_count + 1)
    return _cmp("dagger-partial", [f], lhs, partial_reverse(f, j))


def law_dagger_involution(rng: random.Random, cfg: CorpusConfig) -> LawFailure | None:
    prof = random_profile(rng, cfg)
    j = rng.randint(1, prof.block_count)
    f = random_dlinear_map(rng, prof, j, rng.randint(1, cfg.max_dim), cfg)
    return _cmp("dagger-involution", [f], dagger(dagger(f, j), j), f)


def law_dlinear_implies_klinear(rng: random.Random, cfg: CorpusConfig) -> LawFailure | None:
    prof = random_profile(rng, cfg)
    j = rng.randint(1, prof.block_count)
    f = random_dlinear_map(rng, prof, j, rng.randint(1, cfg.max_dim), cfg)
    ok = is_dlinear(f, j) and is_klinear_in_block(f, j)
    return _flag("dlinear-implies-klinear", [f], ok, str(f), f"k-linear in block {j}")


# -- higher-order laws --------------------------------------------------------


def law_stable(rng: random.Random, cfg: CorpusConfig) -> LawFailure | None:
    f = random_single_block_map(rng, cfg)
    check = check_stable_rule(f)
    return _flag("stable", [f], check.ok, str(check.lhs), str(check.rhs))


def law_stable_context(rng: random.Random, cfg: CorpusConfig) -> LawFailure | None:
    f = random_context_map(rng, cfg)
    check = check_stable_rule_in_context(f)
    return _flag("stable-context", [f], check.ok, str(check.lhs), str(check.rhs))


def law_second_reverse(rng: random.Random, cfg: CorpusConfig) -> LawFailure | None:
    """The swapped stable-rule left side is the order-2 reverse derivative."""
    f = random_single_block_map(rng, cfg)
    n, m = f.domain.total, f.codomain_dim
    raw = partial_reverse(forward_derivative(f), 1)              # (n, n, m) -> n
    lhs = precompose_blocks(raw, ArityProfile((n, m, n)), {1: 1, 2: 3, 3: 2})
    return _cmp("second-reverse", [f], lhs, reverse_tower(f, 2))


def law_tower_bridge(rng: random.Random, cfg: CorpusConfig) -> LawFailure | None:
    """Reverse-deriving the order-n forward tower in its base argument gives
    the order-(n+1) reverse tower once the covector is moved into place."""
    f = random_single_block_map(rng, cfg)
    a, m = f.domain.total, f.codomain_dim
    for n in range(1, cfg.max_order + 1):
        raw = partial_reverse(forward_tower(f, n), 1)            # (a,)*(n+1) + (m,) -> a
        src = ArityProfile((a, m) + (a,) * n)
        placement = {1: 1, n + 2: 2}
        placement.update({t: t + 1 for t in range(2, n + 2)})
        lhs = precompose_blocks(raw, src, placement)
        bad = _cmp("tower-bridge", [f], lhs, reverse_tower(f, n + 1))
        if bad:
            return bad
    return None


def law_dagger_bridge(rng: random.Random, cfg: CorpusConfig) -> LawFailure | None:
    f = random_single_block_map(rng, cfg)
    for order in range(1, cfg.max_order + 2):
        check = check_dagger_bridge(f, order)
        if not check.ok:
            return LawFailure("dagger-bridge", [str(f)], str(check.lhs), str(check.rhs))
    return None


def law_tower_symmetry(rng: random.Random, cfg: CorpusConfig) -> LawFailure | None:
    f = random_single_block_map(rng, cfg)
    for order in range(1, min(cfg.max_order, 3) + 1):
        t = forward_tower(f, order)
        src = t.domain
        nb = src.block_count
        for p in range(2, nb + 1):
            for q in range(p + 1, nb + 1):
                placement = {k: k for k in range(1, nb + 1)}
                placement[p], placement[q] = q, p
                swapped = precompose_blocks(t, src, placement)
                bad = _cmp("tower-symmetry", [f], swapped, t)
                if bad:
                    return bad
    return None


def law_tower_dlinear(rng: random.Random, cfg: CorpusConfig) -> LawFailure | None:
    f = random_single_block_map(rng, cfg)
    for order in range(1, min(cfg.max_order, 3) + 1):
        t = forward_tower(f, order)
        for j in range(2, t.domain.block_count + 1):
            if not is_dlinear(t, j):
                return LawFailure("tower-dlinear", [str(f)], str(t), f"D-linear in block {j}")
    return None


def law_tower_klinear_covector(rng: random.Random, cfg: CorpusConfig) -> LawFailure | None:
    f = random_single_block_map(rng, cfg)
    for order in range(1, cfg.max_order + 2):
        t = reverse_tower(f, order)
        if not is_klinear_in_block(t, 2):
            return LawFailure("tower-klinear-covector", [str(f)], str(t), "k-linear in block 2")
    return None


def law_degree_bound(rng: random.Random, cfg: CorpusConfig) -> LawFailure | None:
    """The reverse tower of order beyond the total degree vanishes."""
    f = random_single_block_map(rng, cfg)
    order = max(f.max_degree(), 0) + 1
    t = reverse_tower(f, order)
    return _flag("degree-bound", [f], t.is_zero(), str(t), "0")


# -- partition-sum chain rules -------------------------------------------------


def law_fdb_forward(rng: random.Random, cfg: CorpusConfig) -> LawFailure | None:
    f, g = random_composable_pair(rng, cfg)
    for n in range(cfg.max_order + 1):
        rep = fdb_report(f, g, n, "forward")
        if len(rep.summands) != BELL[n + 1]:
            return LawFailure(
                "fdb-forward-count", [str(f), str(g)],
                str(len(rep.summands)), str(BELL[n + 1]),
            )
        if not rep.equal:
            return LawFailure("fdb-forward", [str(f), str(g)], str(rep.total), str(rep.oracle))
    return None


def law_fdb_reverse(rng: random.Random, cfg: CorpusConfig) -> LawFailure | None:
    f, g = random_composable_pair(rng, cfg)
    for n in range(cfg.max_order + 1):
        rep = fdb_report(f, g, n, "reverse")
        if len(rep.summands) != BELL[n + 1]:
            return LawFailure(
                "fdb-reverse-count", [str(f), str(g)],
                str(len(rep.summands)), str(BELL[n + 1]),
            )
        if not rep.equal:
            return LawFailure("fdb-reverse", [str(f), str(g)], str(rep.total), str(rep.oracle))
    return None


def law_fdb_reverse_base(rng: random.Random, cfg: CorpusConfig) -> LawFailure | None:
    """Order offset 0 of the reverse partition sum is the chain rule verbatim."""
    f, g = random_composable_pair(rng, cfg)
    rep = fdb_report(f, g, 0, "reverse")
    rhs = _reverse_chain_rhs(f, g)
    if rep.total != rhs or str(rep.total) != str(rhs):
        return LawFailure("fdb-reverse-base", [str(f), str(g)], str(rep.total), str(rhs))
    return None


def law_fdb_reverse_structure(rng: random.Random, cfg: CorpusConfig) -> LawFailure | None:
    """The reverse sum never takes a forward derivative of the outer map."""
    f, g = random_composable_pair(rng, cfg)
    n = rng.randint(0, cfg.max_order)
    rep = fdb_report(f, g, n, "reverse")
    for s in rep.summands:
        for kind, which, _ in s.factors:
            if which == "g" and kind != "reverse":
                return LawFailure(
                    "fdb-reverse-structure", [str(f), str(g)],
                    f"{kind} factor on g in {s.partition}", "reverse factors only on g",
                )
    return None


SuiteLaw = tuple[str, Callable[[random.Random, CorpusConfig], LawFailure | None]]

LAWS: dict[str, list[SuiteLaw]] = {
    "rd-axioms": [
        ("rd1", law_rd1),
        ("rd2", law_rd2),
        ("rd3", law_rd3),
        ("rd4", law_rd4),
        ("rd5", law_rd5),
        ("rd6", law_rd6),
        ("rd7", law_rd7),
        ("partial-pairing", law_partial_pairing),
        ("cd5-chain", law_cd5_chain),
        ("schwarz", law_schwarz),
    ],
    "context": [
        ("ctx-rd1", law_ctx_rd1),
        ("ctx-rd2", law_ctx_rd2),
        ("ctx-rd3", law_ctx_rd3),
        ("ctx-rd4", law_ctx_rd4),
        ("ctx-rd5", law_ctx_rd5),
        ("ctx-rd6", law_ctx_rd6),
        ("ctx-rd7", law_ctx_rd7),
        ("ctx-tuple", law_ctx_tuple),
    ],
    "dagger": [
        ("transpose-of-forward", law_transpose_of_forward),
        ("forward-from-reverse", law_forward_from_reverse),
        ("dagger-contravariance", law_dagger_contravariance),
        ("dagger-base-independence", law_dagger_base_independence),
        ("dagger-partial", law_dagger_partial),
        ("dagger-involution", law_dagger_involution),
        ("dlinear-implies-klinear", law_dlinear_implies_klinear),
    ],
    "stable": [
        ("stable", law_stable),
        ("stable-context", law_stable_context),
        ("second-reverse", law_second_reverse),
        ("tower-bridge", law_tower_bridge),
        ("dagger-bridge", law_dagger_bridge),
        ("tower-symmetry", law_tower_symmetry),
        ("tower-dlinear", law_tower_dlinear),
        ("tower-klinear-covector", law_tower_klinear_covector),
        ("degree-bound", law_degree_bound),
    ],
    "fdb-forward": [
        ("fdb-forward", law_fdb_forward),
    ],
    "fdb-reverse": [
        ("fdb-reverse", law_fdb_reverse),
        ("fdb-reverse-base", law_fdb_reverse_base),
        ("fdb-reverse-structure", law_fdb_reverse_structure),
    ],
}

SUITE_NAMES = tuple(LAWS)


def run_suite(suite: str, seed: int = 42, cases: int = 100,
              config: CorpusConfig | None = None) -> LawReport:
    """Run every law of a suite ``cases`` times; exact comparisons only."""
    if suite not in LAWS:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITE_NAMES)}")
    cfg = config or CorpusConfig()
    start = time.perf_counter()
    failures: list[LawFailure] = []
    law_ids: list[str] = []
    for law_id, law in LAWS[suite]:
        law_ids.append(law_id)
        rng = random.Random(f"{seed}/{law_id}")
        for _ in range(cases):
            failure = law(rng, cfg)
            if failure is not None:
                failures.append(failure)
    elapsed_ms = int((time.perf_counter() - start) * 1000)
    return LawReport(suite, seed, cases, failures, elapsed_ms, law_ids)


def run_suites(names: Sequence[str], seed: int = 42, cases: int = 100,
               config: CorpusConfig | None = None) -> list[LawReport]:
    return [run_suite(name, seed, cases, config) for name in names]
