"""Presentations of braided m-Lie algebras by structure constants.

A presentation fixes an ordered homogeneous basis (the letters), a graded
group with a bicharacter, and the bracket of every ordered pair of letters.
Letter order is declaration order and is what the PBW normal form uses.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import product

from .errors import DefinitionError, ValidationReport
from .grading import Bicharacter, GradedGroup, GroupElement
from .linear import LinearCombination
from .scalar import ZETA, Scalar, ScalarContext
from .words import format_terms

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


@dataclass(frozen=True)
class Letter:
    id: int
    name: str
    degree: GroupElement


class LieElement(LinearCombination):
    """Element of L: a linear combination of letter ids."""

    __slots__ = ()

    def _check_key(self, key):
        if not isinstance(key, int) or key < 0:
            raise TypeError(f"letter ids are nonnegative ints, got {key!r}")
        return key


class LiePresentation:
    """An ordered homogeneous basis with bracket table and bicharacter.

    ``brackets`` maps ``(i, j)`` to the bracket ``[letter_i letter_j]``, given as
    a :class:`LieElement` or a ``{letter_id: scalar}`` dict.  Missing pairs are
    allowed at construction time and reported by :meth:`validate`; everywhere
    else they behave as zero.
    """

    def __init__(self, group: GradedGroup, chi: Bicharacter, letters, brackets=None, name: str = ""):
        self.name = name
        self.group = group
        self.chi = chi
        self.ctx: ScalarContext = chi.ctx
        if chi.group != group:
            raise DefinitionError("bicharacter is defined over a different group")
        self.letters: tuple[Letter, ...] = tuple(
            Letter(i, nm, group.element(deg)) for i, (nm, deg) in enumerate(letters)
        )
        self._by_name: dict[str, int] = {}
        for let in self.letters:
            if let.name in self._by_name:
                raise DefinitionError(f"duplicate letter name {let.name!r}")
            self._by_name[let.name] = let.id
        self.brackets: dict[tuple[int, int], LieElement] = {}
        for (i, j), val in (brackets or {}).items():
            if not isinstance(val, LieElement):
                val = LieElement(self.ctx, val)
            for k in (i, j, *val.terms):
                if not 0 <= k < len(self.letters):
                    raise DefinitionError(f"bracket table refers to unknown letter id {k}")
            self.brackets[(i, j)] = val
        self._chi_table = None
        self._zero = LieElement.zero(self.ctx)

    # -- basic access --------------------------------------------------------

    @property
    def size(self) -> int:
        return len(self.letters)

    def __len__(self):
        return len(self.letters)

    def letter_id(self, name: str) -> int:
        try:
            return self._by_name[name]
        except KeyError:
            raise KeyError(f"unknown letter {name!r}") from None

    def has_letter(self, name: str) -> bool:
        return name in self._by_name

    def degree(self, i: int) -> GroupElement:
        return self.letters[i].degree

    def letter(self, name_or_id, coeff=1) -> LieElement:
        i = self.letter_id(name_or_id) if isinstance(name_or_id, str) else name_or_id
        return LieElement(self.ctx, {i: coeff})

    def bracket_letters(self, i: int, j: int) -> LieElement:
        return self.brackets.get((i, j), self._zero)

    @property
    def chi_table(self) -> tuple[tuple[Scalar, ...], ...]:
        """``chi(deg i, deg j)`` for all letter pairs; needs a valid bicharacter."""
        if self._chi_table is None:
            degs = [let.degree for let in self.letters]
            self._chi_table = tuple(tuple(self.chi(g, h) for h in degs) for g in degs)
        return self._chi_table

    def chi_letters(self, i: int, j: int) -> Scalar:
        return self.chi_table[i][j]

    def braid(self, i: int, j: int):
        """``C(x (x) y) = chi(deg x, deg y) y (x) x`` on letters."""
        return self.chi.braid(i, self.degree(i), j, self.degree(j))

    # -- operations ------------------------------------------------------------

    def bracket(self, x: LieElement, y: LieElement) -> LieElement:
        out = self._zero
        for i, a in x.terms.items():
            for j, b in y.terms.items():
                br = self.bracket_letters(i, j)
                if br:
                    out = out + br.scale(a * b)
        return out

    def antisymmetry_residual(self, i: int, j: int) -> LieElement:
        """``[ij] + chi(i, j) [ji]``; zero means braided antisymmetry holds for the pair."""
        return self.bracket_letters(i, j) + self.bracket_letters(j, i).scale(self.chi_letters(i, j))

    def jacobi_residual(self, a: int, b: int, c: int, strategy="leftmost", cache=None):
        """``[[ab]c] - [a[bc]] + chi(a,b) b*[ac] - chi(b,c) [ac]*b`` evaluated in U(L)."""
        from .straighten import lift, u_mul

        la, lb, lc = (self.letter(k) for k in (a, b, c))
        ac = self.bracket(la, lc)
        pure = self.bracket(self.bracket(la, lb), lc) - self.bracket(la, self.bracket(lb, lc))
        ub, uac = lift(lb, self), lift(ac, self)
        mixed = u_mul(ub, uac, self, strategy, cache).scale(self.chi_letters(a, b)) - u_mul(
            uac, ub, self, strategy, cache
        ).scale(self.chi_letters(b, c))
        return lift(pure, self) + mixed

    def validate(self) -> ValidationReport:
        report = ValidationReport(self.name or "presentation")
        report.extend(self.chi.validate())
        for let in self.letters:
            if not _IDENT.match(let.name):
                report.add(f"letter name {let.name!r} is not an identifier")
            if let.name in self.ctx.params:
                report.add(f"letter name {let.name!r} clashes with a parameter")
            if let.name == ZETA and self.ctx.zeta_order is not None:
                report.add(f"letter name {ZETA!r} clashes with the root of unity")
        m = self.size
        for i, j in product(range(m), repeat=2):
            if (i, j) not in self.brackets:
                report.add(f"bracket table is missing pair ({self.letters[i].name},{self.letters[j].name})")
                continue
            want = self.group.add(self.degree(i), self.degree(j))
            for k in self.brackets[(i, j)].terms:
                if self.degree(k) != want:
                    report.add(
                        f"grading: [{self.letters[i].name} {self.letters[j].name}] contains "
                        f"{self.letters[k].name} of degree {self.degree(k)}, expected {want}"
                    )
        return report

    # -- text ------------------------------------------------------------------

    def format_lie(self, x: LieElement) -> str:
        return format_terms((((k,), c) for k, c in reversed(x.items())), self)

    def __repr__(self):
        names = " < ".join(let.name for let in self.letters)
        return f"LiePresentation({self.name or '?'}: {names})"


def bracket(x: LieElement, y: LieElement, P: LiePresentation) -> LieElement:
    return P.bracket(x, y)


def validate_presentation(P: LiePresentation) -> ValidationReport:
    return P.validate()


def antisymmetry_residual(i: int, j: int, P: LiePresentation) -> LieElement:
    return P.antisymmetry_residual(i, j)


def jacobi_residual(a: int, b: int, c: int, P: LiePresentation, strategy="leftmost", cache=None):
    return P.jacobi_residual(a, b, c, strategy, cache)
