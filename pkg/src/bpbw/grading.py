"""Finitely generated abelian grading groups and bicharacters on them.

Groups are written additively: an element of ``Z^r x Z_{n_1} x ... x Z_{n_s}``
is a tuple of ``r + s`` integers with the torsion coordinates reduced.
A bicharacter is fixed by its values on pairs of generators and extended by

    chi(a, b) = prod_{i,j} M[i][j] ** (a_i * b_j)
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import ContextMismatch, ValidationReport
from .scalar import Scalar, ScalarContext, unit_pow

GroupElement = tuple  # tuple[int, ...]


@dataclass(frozen=True)
class GradedGroup:
    free_rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(self.torsion))
        if self.free_rank < 0:
            raise ValueError("free rank must be nonnegative")
        for n in self.torsion:
            if n < 2:
                raise ValueError(f"torsion orders must be >= 2, got {n}")

    @property
    def rank(self) -> int:
        """Number of generators, ``r + s``."""
        return self.free_rank + len(self.torsion)

    def orders(self) -> tuple[int | None, ...]:
        return (None,) * self.free_rank + self.torsion

    def element(self, exps) -> GroupElement:
        exps = tuple(int(e) for e in exps)
        if len(exps) != self.rank:
            raise ContextMismatch(f"expected {self.rank} coordinates, got {len(exps)}")
        r = self.free_rank
        return exps[:r] + tuple(e % n for e, n in zip(exps[r:], self.torsion))

    def zero(self) -> GroupElement:
        return (0,) * self.rank

    def add(self, a: GroupElement, b: GroupElement) -> GroupElement:
        if len(a) != self.rank or len(b) != self.rank:
            raise ContextMismatch("group elements of the wrong length")
        return self.element(x + y for x, y in zip(a, b))

    def neg(self, a: GroupElement) -> GroupElement:
        return self.element(-x for x in a)

    def sum(self, elements) -> GroupElement:
        total = self.zero()
        for g in elements:
            total = self.add(total, g)
        return total

    def random_element(self, rng: random.Random, spread: int = 3) -> GroupElement:
        return self.element(rng.randint(-spread, spread) for _ in range(self.rank))


class Bicharacter:
    """chi: G x G -> units, given by the generator matrix ``M[i][j] = chi(e_i, e_j)``."""

    def __init__(self, group: GradedGroup, matrix, ctx: ScalarContext):
        self.group = group
        self.ctx = ctx
        rows = [tuple(ctx.coerce(x) for x in row) for row in matrix]
        if len(rows) != group.rank or any(len(row) != group.rank for row in rows):
            raise ContextMismatch(f"chi matrix must be {group.rank}x{group.rank}")
        self.matrix = tuple(rows)
        self._cache: dict = {}

    @classmethod
    def trivial(cls, group: GradedGroup, ctx: ScalarContext | None = None) -> "Bicharacter":
        ctx = ctx or ScalarContext()
        one = ctx.one()
        return cls(group, [[one] * group.rank for _ in range(group.rank)], ctx)

    def __call__(self, a: GroupElement, b: GroupElement) -> Scalar:
        key = (a, b)
        val = self._cache.get(key)
        if val is None:
            if len(a) != self.group.rank or len(b) != self.group.rank:
                raise ContextMismatch("group element does not match the bicharacter's group")
            val = self.ctx.one()
            for i, ai in enumerate(a):
                if ai:
                    for j, bj in enumerate(b):
                        if bj:
                            val = val * unit_pow(self.matrix[i][j], ai * bj)
            self._cache[key] = val
        return val

    def braid(self, x, g: GroupElement, y, h: GroupElement):
        """The braiding on homogeneous ``x in V_g``, ``y in V_h``: ``(chi(g, h), (y, x))``."""
        return self(g, h), (y, x)

    def validate(self, samples: int = 50, seed: int = 0) -> ValidationReport:
        report = ValidationReport("bicharacter")
        orders = self.group.orders()
        for i, row in enumerate(self.matrix):
            for j, entry in enumerate(row):
                if not entry.is_unit():
                    report.add(f"chi[{i}][{j}] = {entry} is not a unit")
        if not report.ok:
            return report
        one = self.ctx.one()
        for i, n in enumerate(orders):
            if n is None:
                continue
            for j in range(self.group.rank):
                for a, b in sorted({(i, j), (j, i)}):
                    p = unit_pow(self.matrix[a][b], n)
                    if not (p - one).is_zero():
                        report.add(
                            f"torsion: generator {i} has order {n} but chi[{a}][{b}]^{n} = {p} != 1"
                        )
        if not report.ok:
            return report
        rng = random.Random(seed)
        G = self.group
        for _ in range(samples):
            a, b, c = (G.random_element(rng) for _ in range(3))
            if self(G.add(a, b), c) != self(a, c) * self(b, c):
                report.add(f"bilinearity fails in the first slot at {a}, {b}, {c}")
            if self(a, G.add(b, c)) != self(a, b) * self(a, c):
                report.add(f"bilinearity fails in the second slot at {a}, {b}, {c}")
        return report


def chi(a: GroupElement, b: GroupElement, M: Bicharacter) -> Scalar:
    return M(a, b)


def validate_bicharacter(M: Bicharacter) -> ValidationReport:
    return M.validate()
