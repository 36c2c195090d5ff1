"""Sparse exact multivariate polynomials.

A polynomial lives in a fixed number of coordinates ``dim``.  A monomial is a
fixed-length tuple of nonnegative exponents, one entry per coordinate, so
equality is positional and padding a polynomial into a larger coordinate
space is explicit.  Terms are stored sorted in descending graded-lexicographic
order with no zero coefficients, which makes structural equality coincide
with mathematical equality and makes printing deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .scalar import Scalar

Monomial = tuple[int, ...]


def _grlex_key(mono: Monomial) -> tuple[int, Monomial]:
    return (sum(mono), mono)


def _canonical_terms(coeffs: Mapping[Monomial, Scalar]) -> tuple[tuple[Monomial, Scalar], ...]:
    items = [(m, c) for m, c in coeffs.items() if c != 0]
    items.sort(key=lambda item: _grlex_key(item[0]), reverse=True)
    return tuple(items)


@dataclass(frozen=True)
class Polynomial:
    """An exact polynomial in ``dim`` coordinates.

    ``terms`` is the canonical sorted tuple of (monomial, coefficient) pairs;
    use :meth:`from_dict` rather than the raw constructor.
    """

    dim: int
    terms: tuple[tuple[Monomial, Scalar], ...]

    # -- constructors -------------------------------------------------

    @staticmethod
    def from_dict(dim: int, coeffs: Mapping[Monomial, Scalar]) -> "Polynomial":
        for mono in coeffs:
            if len(mono) != dim:
                raise ValueError(f"monomial {mono} has {len(mono)} exponents, expected {dim}")
            if any(e < 0 for e in mono):
                raise ValueError(f"negative exponent in monomial {mono}")
        return Polynomial(dim, _canonical_terms(coeffs))

    @staticmethod
    def zero(dim: int) -> "Polynomial":
        return Polynomial(dim, ())

    @staticmethod
    def constant(dim: int, value: int | Scalar) -> "Polynomial":
        c = Fraction(value)
        if c == 0:
            return Polynomial.zero(dim)
        return Polynomial(dim, (((0,) * dim, c),))

    @staticmethod
    def variable(index: int, dim: int) -> "Polynomial":
        if not 0 <= index < dim:
            raise IndexError(f"coordinate index {index} out of range for dimension {dim}")
        mono = tuple(1 if i == index else 0 for i in range(dim))
        return Polynomial(dim, ((mono, Fraction(1)),))

    # -- queries ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        """Largest monomial degree; -1 for the zero polynomial."""
        return max((sum(m) for m, _ in self.terms), default=-1)

    def coefficient(self, mono: Monomial) -> Scalar:
        for m, c in self.terms:
            if m == mono:
                return c
        return Fraction(0)

    def as_dict(self) -> dict[Monomial, Scalar]:
        return dict(self.terms)

    # -- k-module and ring structure -----------------------------------

    def _require_same_dim(self, other: "Polynomial") -> None:
        if self.dim != other.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._require_same_dim(other)
        acc = dict(self.terms)
        for m, c in other.terms:
            s = acc.get(m, Fraction(0)) + c
            if s == 0:
                acc.pop(m, None)
            else:
                acc[m] = s
        return Polynomial(self.dim, _canonical_terms(acc))

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.dim, tuple((m, -c) for m, c in self.terms))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def scale(self, value: int | Scalar) -> "Polynomial":
        c = Fraction(value)
        if c == 0:
            return Polynomial.zero(self.dim)
        return Polynomial(self.dim, tuple((m, c * k) for m, k in self.terms))

    def __mul__(self, other: "Polynomial | int | Scalar") -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._require_same_dim(other)
        acc: dict[Monomial, Scalar] = {}
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                m = tuple(a + b for a, b in zip(m1, m2))
                s = acc.get(m, Fraction(0)) + c1 * c2
                if s == 0:
                    acc.pop(m, None)
                else:
                    acc[m] = s
        return Polynomial(self.dim, _canonical_terms(acc))

    def __rmul__(self, other: "int | Scalar") -> "Polynomial":
        return self.scale(other)

    def __pow__(self, exponent: int) -> "Polynomial":
        if exponent < 0:
            raise ValueError("negative power of a polynomial")
        result = Polynomial.constant(self.dim, 1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    # -- differentiation ------------------------------------------------

    def partial(self, index: int) -> "Polynomial":
        """Symbolic partial derivative in coordinate ``index`` (power rule)."""
        if not 0 <= index < self.dim:
            raise IndexError(f"coordinate index {index} out of range for dimension {self.dim}")
        acc: dict[Monomial, Scalar] = {}
        for m, c in self.terms:
            e = m[index]
            if e == 0:
                continue
            lowered = m[:index] + (e - 1,) + m[index + 1:]
            acc[lowered] = acc.get(lowered, Fraction(0)) + c * e
        return Polynomial(self.dim, _canonical_terms(acc))

    # -- evaluation and substitution -------------------------------------

    def evaluate(self, point: Sequence[int | Scalar]) -> Scalar:
        if len(point) != self.dim:
            raise ValueError(f"point has {len(point)} coordinates, expected {self.dim}")
        values = [Fraction(v) for v in point]
        total = Fraction(0)
        for m, c in self.terms:
            term = c
            for v, e in zip(values, m):
                if e:
                    term *= v ** e
            total += term
        return total

    def substitute(self, args: Sequence["Polynomial"], dim: int | None = None) -> "Polynomial":
        """Substitute ``args[i]`` for coordinate ``i``; all args share one space."""
        if len(args) != self.dim:
            raise ValueError(f"{len(args)} substitution arguments, expected {self.dim}")
        if args:
            dim = args[0].dim
            for p in args:
                if p.dim != dim:
                    raise ValueError("substitution arguments live in different spaces")
        elif dim is None:
            raise ValueError("substituting into a 0-coordinate polynomial needs an explicit dim")
        result = Polynomial.zero(dim)
        powers: dict[tuple[int, int], Polynomial] = {}

        def power(i: int, e: int) -> Polynomial:
            key = (i, e)
            if key not in powers:
                powers[key] = args[i] ** e
            return powers[key]

        for m, c in self.terms:
            term = Polynomial.constant(dim, c)
            for i, e in enumerate(m):
                if e:
                    term = term * power(i, e)
            result = result + term
        return result

    def pad(self, dim: int) -> "Polynomial":
        """Embed into a larger space by appending fresh trailing coordinates."""
        if dim < self.dim:
            raise ValueError(f"cannot pad from dimension {self.dim} down to {dim}")
        if dim == self.dim:
            return self
        extra = (0,) * (dim - self.dim)
        # appending zeros preserves graded-lex order, so terms stay canonical
        return Polynomial(dim, tuple((m + extra, c) for m, c in self.terms))

    # -- printing ---------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces: list[str] = []
        for k, (mono, coeff) in enumerate(self.terms):
            factors = "*".join(
                f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}"
                for i, e in enumerate(mono)
                if e > 0
            )
            mag = abs(coeff)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = factors
            else:
                body = f"{mag}*{factors}"
            if k == 0:
                pieces.append(body if coeff > 0 else f"-{body}")
            else:
                pieces.append(f" + {body}" if coeff > 0 else f" - {body}")
        return "".join(pieces)
