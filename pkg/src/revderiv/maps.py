"""Polynomial maps between products of finite-dimensional coordinate spaces.

A map's domain is a flat coordinate space carrying a block structure (an
:class:`ArityProfile`), so regrouping blocks never touches coordinates.  The
codomain is a plain dimension: block structure on outputs is recovered by
composing with projections when needed.  Block indices in this module are
1-based (the j-th factor of a product); flat coordinate indices are 0-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .poly import Polynomial
from .scalar import Scalar


@dataclass(frozen=True)
class ArityProfile:
    """Dimensions of the factors of a product domain.

    A block may be 0-dimensional (the terminal object).  Flat coordinate
    indices run over ``range(total)`` in block order.
    """

    blocks: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.blocks:
            raise ValueError("a profile needs at least one block")
        if any(d < 0 for d in self.blocks):
            raise ValueError(f"negative block dimension in {self.blocks}")

    @staticmethod
    def of(*blocks: int) -> "ArityProfile":
        return ArityProfile(tuple(blocks))

    @property
    def total(self) -> int:
        return sum(self.blocks)

    @property
    def block_count(self) -> int:
        return len(self.blocks)

    def check_block(self, j: int) -> None:
        if not 1 <= j <= len(self.blocks):
            raise IndexError(f"block index {j} out of range for {len(self.blocks)} blocks")

    def block_dim(self, j: int) -> int:
        self.check_block(j)
        return self.blocks[j - 1]

    def block_start(self, j: int) -> int:
        self.check_block(j)
        return sum(self.blocks[: j - 1])

    def block_range(self, j: int) -> range:
        start = self.block_start(j)
        return range(start, start + self.blocks[j - 1])

    def flat(self) -> "ArityProfile":
        return ArityProfile((self.total,))

    def concat(self, *dims: int) -> "ArityProfile":
        return ArityProfile(self.blocks + tuple(dims))

    def __str__(self) -> str:
        return "(" + ",".join(str(d) for d in self.blocks) + ")"


@dataclass(frozen=True)
class PolyMap:
    """A tuple of polynomials over a shared block-structured domain."""

    domain: ArityProfile
    coords: tuple[Polynomial, ...]

    def __post_init__(self) -> None:
        total = self.domain.total
        for p in self.coords:
            if p.dim != total:
                raise ValueError(
                    f"coordinate polynomial has {p.dim} inputs, domain has {total}"
                )

    @property
    def codomain_dim(self) -> int:
        return len(self.coords)

    def evaluate(self, point: Sequence[int | Scalar]) -> tuple[Scalar, ...]:
        if len(point) != self.domain.total:
            raise ValueError(
                f"point has {len(point)} coordinates, domain has {self.domain.total}"
            )
        return tuple(p.evaluate(point) for p in self.coords)

    def __add__(self, other: "PolyMap") -> "PolyMap":
        if self.domain != other.domain or self.codomain_dim != other.codomain_dim:
            raise ValueError("can only add maps with identical domain and codomain")
        return PolyMap(self.domain, tuple(p + q for p, q in zip(self.coords, other.coords)))

    def scale(self, value: int | Scalar) -> "PolyMap":
        return PolyMap(self.domain, tuple(p.scale(value) for p in self.coords))

    def is_zero(self) -> bool:
        return all(p.is_zero() for p in self.coords)

    def max_degree(self) -> int:
        return max((p.total_degree() for p in self.coords), default=-1)

    def __str__(self) -> str:
        return "(" + ", ".join(str(p) for p in self.coords) + ")"


# -- basic constructions ----------------------------------------------------


def identity(domain: ArityProfile | int) -> PolyMap:
    profile = ArityProfile((domain,)) if isinstance(domain, int) else domain
    n = profile.total
    return PolyMap(profile, tuple(Polynomial.variable(i, n) for i in range(n)))


def zero_map(domain: ArityProfile, codomain_dim: int) -> PolyMap:
    zero = Polynomial.zero(domain.total)
    return PolyMap(domain, (zero,) * codomain_dim)


def projection(domain: ArityProfile, j: int) -> PolyMap:
    """Select the j-th block (1-based) of the domain."""
    n = domain.total
    return PolyMap(domain, tuple(Polynomial.variable(i, n) for i in domain.block_range(j)))


def pair(maps: Sequence[PolyMap]) -> PolyMap:
    """Tuple maps with a shared domain into one map onto the concatenated codomain."""
    if not maps:
        raise ValueError("pairing needs at least one map")
    domain = maps[0].domain
    for f in maps[1:]:
        if f.domain != domain:
            raise ValueError("paired maps must share one domain profile")
    coords: list[Polynomial] = []
    for f in maps:
        coords.extend(f.coords)
    return PolyMap(domain, tuple(coords))


def compose(g: PolyMap, f: PolyMap) -> PolyMap:
    """g after f: substitute f's coordinates into g's inputs."""
    if g.domain.total != f.codomain_dim:
        raise ValueError(
            f"cannot compose: inner map has {f.codomain_dim} outputs, "
            f"outer map expects {g.domain.total}"
        )
    total = f.domain.total
    return PolyMap(
        f.domain,
        tuple(p.substitute(f.coords, dim=total) for p in g.coords),
    )


def reblock(f: PolyMap, profile: ArityProfile | Sequence[int]) -> PolyMap:
    """Reinterpret the block structure of the domain; coordinates are untouched."""
    new = profile if isinstance(profile, ArityProfile) else ArityProfile(tuple(profile))
    if new.total != f.domain.total:
        raise ValueError(
            f"new profile covers {new.total} coordinates, domain has {f.domain.total}"
        )
    return PolyMap(new, f.coords)


def flatten(f: PolyMap) -> PolyMap:
    return reblock(f, f.domain.flat())


def embed_blocks(src: ArityProfile, target: ArityProfile, placement: Mapping[int, int]) -> PolyMap:
    """Build the map src -> target that routes whole blocks.

    ``placement[t] = s`` copies source block ``s`` into target block ``t``;
    target blocks without an entry are filled with zeros.  Dimensions of
    routed blocks must agree.  Permutations, zero insertions, and block
    selections are all instances.
    """
    n = src.total
    coords: list[Polynomial] = []
    for t in range(1, target.block_count + 1):
        if t in placement:
            s = placement[t]
            if src.block_dim(s) != target.block_dim(t):
                raise ValueError(
                    f"block {s} of {src} has dimension {src.block_dim(s)}, "
                    f"target block {t} needs {target.block_dim(t)}"
                )
            coords.extend(Polynomial.variable(i, n) for i in src.block_range(s))
        else:
            coords.extend(Polynomial.zero(n) for _ in range(target.block_dim(t)))
    return PolyMap(src, tuple(coords))


def select_blocks(src: ArityProfile, picks: Sequence[int]) -> PolyMap:
    """The map src -> (picked blocks) listing the chosen blocks in order."""
    target = ArityProfile(tuple(src.block_dim(p) for p in picks))
    return embed_blocks(src, target, {t + 1: p for t, p in enumerate(picks)})


def precompose_blocks(f: PolyMap, src: ArityProfile, placement: Mapping[int, int]) -> PolyMap:
    """f with its block arguments rerouted: argument block t of f is taken
    from source block placement[t], or set to zero when absent."""
    return compose(f, embed_blocks(src, f.domain, placement))
