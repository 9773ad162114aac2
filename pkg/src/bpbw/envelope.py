"""The enveloping algebra U(L) = FP.

PBW enumeration and counting, the confluence report comparing the two
rewriting strategies, and the check that a bracket homomorphism ``L -> W^-``
extends multiplicatively to ``U(L) -> W``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import ContextMismatch, ValidationReport
from .scalar import Scalar, ScalarContext
from .straighten import RewriteCache, Strategy, u_mul
from .words import TensorElement, UElement, format_element, format_word, word_degree, word_key

__all__ = [
    "UElement", "pbw_basis", "hilbert_counts", "graded_dimensions", "check_confluence",
    "ConfluenceReport", "Divergence", "overlap_words", "AssocPresentation", "matrix_algebra",
    "matrix_vector", "HomMap",
    "theta_extend", "ThetaReport",
]


def _size(P) -> int:
    return P if isinstance(P, int) else P.size


def pbw_basis(P, d: int) -> list[tuple[int, ...]]:
    """Non-increasing words of length ``d``, in canonical order.

    ``P`` may be a presentation or just the number of letters.
    """
    m = _size(P)
    words = [tuple(reversed(c)) for c in itertools.combinations_with_replacement(range(m), d)]
    return sorted(words, key=word_key)


def hilbert_counts(P, d_max: int) -> list[int]:
    """Number of PBW words of each length ``0..d_max``.

    Counted by a recursion on the largest letter used, so it does not
    presuppose the binomial closed form.
    """
    m = _size(P)
    # ways[k]: non-increasing words of the current length with letters < k
    ways = [1] * (m + 1)
    counts = [1]
    for _ in range(d_max):
        new = [0] * (m + 1)
        for k in range(1, m + 1):
            # first letter is k-1, the rest use letters <= k-1
            new[k] = new[k - 1] + ways[k]
        ways = new
        counts.append(ways[m])
    return counts


def graded_dimensions(P, d_max: int) -> dict:
    """PBW words up to length ``d_max`` bucketed by degree.

    Buckets appear in order of first occurrence in the canonical enumeration.
    """
    out: dict = {}
    for d in range(d_max + 1):
        for w in pbw_basis(P, d):
            g = word_degree(w, P)
            out[g] = out.get(g, 0) + 1
    return out


# ---------------------------------------------------------------------------
# confluence


@dataclass(frozen=True)
class Divergence:
    word: tuple
    leftmost: UElement
    rightmost: UElement

    @property
    def difference(self) -> UElement:
        return self.leftmost - self.rightmost


@dataclass
class ConfluenceReport:
    checked: int = 0
    divergent: list[Divergence] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.divergent

    def words(self) -> list[tuple]:
        return [d.word for d in self.divergent]

    def lines(self, P) -> list[str]:
        if self.ok:
            return [f"OK ({self.checked} words checked)"]
        return [
            f"DIVERGENT {format_word(d.word, P)} :: "
            f"{format_element(d.leftmost, P)} != {format_element(d.rightmost, P)}"
            for d in self.divergent
        ]


def overlap_words(P) -> list[tuple]:
    """Words where two rewrites compete.

    ``a b c`` with both adjacent pairs ascending (the rewrites share ``b``) and
    ``a b t c d`` with two disjoint ascending pairs around any letter ``t``.
    """
    m = P.size
    words = [(a, b, c) for a, b, c in itertools.combinations(range(m), 3)]
    pairs = list(itertools.combinations(range(m), 2))
    words += [(a, b, t, c, d) for a, b in pairs for t in range(m) for c, d in pairs]
    return words


def check_confluence(P, max_len: int, targeted: bool = True,
                     caches: tuple[RewriteCache, RewriteCache] | None = None) -> ConfluenceReport:
    """Compare leftmost-first and rightmost-first normal forms.

    Every word of length ``<= max_len`` is checked, plus the overlap words of
    :func:`overlap_words` when ``targeted``.
    """
    left, right = caches or (RewriteCache(P, Strategy.LEFTMOST), RewriteCache(P, Strategy.RIGHTMOST))
    words = set()
    for d in range(max_len + 1):
        words.update(itertools.product(range(P.size), repeat=d))
    if targeted:
        words.update(overlap_words(P))
    report = ConfluenceReport(checked=len(words))
    for w in sorted(words, key=word_key):
        lf = UElement(P.ctx, left.normal_form(w), _canonical=True)
        rf = UElement(P.ctx, right.normal_form(w), _canonical=True)
        if lf != rf:
            report.divergent.append(Divergence(w, lf, rf))
    return report


# ---------------------------------------------------------------------------
# associative targets and the extension theta


class AssocPresentation:
    """A finite-dimensional associative algebra W by structure constants.

    ``table[(i, j)]`` is the product of basis elements ``i`` and ``j`` as a
    coordinate vector; ``unit`` is the coordinate vector of 1.
    """

    def __init__(self, ctx: ScalarContext, names, table, unit):
        self.ctx = ctx
        self.names = tuple(names)
        self.dim = len(self.names)
        self.table = {k: self.vector(v) for k, v in table.items()}
        self.unit = self.vector(unit)

    def vector(self, coords) -> tuple[Scalar, ...]:
        coords = tuple(self.ctx.coerce(c) for c in coords)
        if len(coords) != self.dim:
            raise ContextMismatch(f"expected {self.dim} coordinates, got {len(coords)}")
        return coords

    def zero(self):
        return (self.ctx.zero(),) * self.dim

    def basis(self, i: int):
        return tuple(self.ctx.one() if k == i else self.ctx.zero() for k in range(self.dim))

    def add(self, u, v):
        return tuple(a + b for a, b in zip(u, v))

    def sub(self, u, v):
        return tuple(a - b for a, b in zip(u, v))

    def scale(self, c, u):
        return tuple(c * a for a in u)

    def mul(self, u, v):
        out = list(self.zero())
        for i, a in enumerate(u):
            if a.is_zero():
                continue
            for j, b in enumerate(v):
                if b.is_zero():
                    continue
                prod = self.table.get((i, j))
                if prod is None:
                    continue
                ab = a * b
                for k, c in enumerate(prod):
                    if not c.is_zero():
                        out[k] = out[k] + ab * c
        return tuple(out)

    def is_zero(self, u) -> bool:
        return all(c.is_zero() for c in u)

    def validate(self) -> ValidationReport:
        report = ValidationReport("associative algebra")
        basis = [self.basis(i) for i in range(self.dim)]
        for i, e in enumerate(basis):
            if self.mul(self.unit, e) != e or self.mul(e, self.unit) != e:
                report.add(f"unit is not a two-sided identity on {self.names[i]}")
        for (i, a), (j, b), (k, c) in itertools.product(enumerate(basis), repeat=3):
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)):
                report.add(f"associativity fails on ({self.names[i]}, {self.names[j]}, {self.names[k]})")
        return report

    def format(self, u) -> str:
        parts = [f"({c})*{nm}" for c, nm in zip(u, self.names) if not c.is_zero()]
        return " + ".join(parts) if parts else "0"


def matrix_algebra(n: int, ctx: ScalarContext) -> AssocPresentation:
    """Full ``n x n`` matrices with basis ``E11, E12, ..., Enn`` (row-major)."""
    names = [f"E{i + 1}{j + 1}" for i in range(n) for j in range(n)]
    one, zero = ctx.one(), ctx.zero()

    def unit_vec(k):
        return [one if t == k else zero for t in range(n * n)]

    table = {}
    for i, j, k, l in itertools.product(range(n), repeat=4):
        table[(i * n + j, k * n + l)] = unit_vec(i * n + l) if j == k else [zero] * (n * n)
    unit = [one if t // n == t % n else zero for t in range(n * n)]
    return AssocPresentation(ctx, names, table, unit)


def matrix_vector(W: AssocPresentation, rows) -> tuple:
    """Coordinates of a square matrix given row by row, for :func:`matrix_algebra`."""
    return W.vector([x for row in rows for x in row])


class HomMap:
    """A linear map from L to W given on letters: ``images[letter_id]``."""

    def __init__(self, P, W: AssocPresentation, images):
        if P.ctx != W.ctx:
            raise ContextMismatch("L and W must share a scalar context")
        self.P = P
        self.W = W
        self.images = {}
        for key, v in dict(images).items():
            i = P.letter_id(key) if isinstance(key, str) else key
            self.images[i] = W.vector(v)
        for i in range(P.size):
            self.images.setdefault(i, W.zero())

    @classmethod
    def zero(cls, P, W):
        return cls(P, W, {})

    def __call__(self, x):
        """Image of a LieElement."""
        out = self.W.zero()
        for i, c in x.terms.items():
            out = self.W.add(out, self.W.scale(c, self.images[i]))
        return out

    def commutator_defect(self, i: int, j: int):
        """``psi([ij]) - (psi(i) psi(j) - chi(i, j) psi(j) psi(i))``."""
        W, P = self.W, self.P
        a, b = self.images[i], self.images[j]
        comm = W.sub(W.mul(a, b), W.scale(P.chi_letters(i, j), W.mul(b, a)))
        return W.sub(self(P.bracket_letters(i, j)), comm)

    def check(self) -> tuple[ValidationReport, list[str]]:
        """Bracket-homomorphism check.

        Pairs ``i < j`` are the ones the straightening rule consumes and must
        pass.  Other pairs are returned separately as notes.
        """
        report = ValidationReport("bracket homomorphism")
        notes = []
        P = self.P
        for i, j in itertools.product(range(P.size), repeat=2):
            defect = self.commutator_defect(i, j)
            if self.W.is_zero(defect):
                continue
            msg = (f"psi([{P.letters[i].name} {P.letters[j].name}]) differs from the braided "
                   f"commutator by {self.W.format(defect)}")
            if i < j:
                report.add(msg)
            else:
                notes.append(msg)
        return report, notes

    def theta_word(self, w):
        out = self.W.unit
        for i in w:
            out = self.W.mul(out, self.images[i])
        return out

    def theta(self, t):
        """``theta(b_1 ... b_n) = psi(b_1) ... psi(b_n)``, extended linearly."""
        out = self.W.zero()
        for w, c in t.terms.items():
            out = self.W.add(out, self.W.scale(c, self.theta_word(w)))
        return out


@dataclass
class ThetaReport:
    hom_issues: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    failures: list[tuple] = field(default_factory=list)
    checked: int = 0

    @property
    def ok(self) -> bool:
        return not self.hom_issues and not self.failures

    def lines(self, P) -> list[str]:
        out = [f"NOT-A-HOMOMORPHISM {msg}" for msg in self.hom_issues]
        for u, v in self.failures:
            out.append(f"THETA-FAILS {format_element(u, P)} * {format_element(v, P)}")
        if self.ok:
            out.append(f"OK ({self.checked} products checked)")
        return out


def _pbw_pairs(P, max_len: int):
    words = [w for d in range(max_len + 1) for w in pbw_basis(P, d)]
    for u, v in itertools.product(words, repeat=2):
        yield (UElement(P.ctx, {u: 1}), UElement(P.ctx, {v: 1}))


def theta_extend(P, W: AssocPresentation, psi: HomMap, samples=None, max_len: int = 3,
                 strategy=Strategy.LEFTMOST, cache: RewriteCache | None = None) -> ThetaReport:
    """Check ``theta(u * v) == theta(u) theta(v)`` on sample pairs.

    ``samples`` defaults to every pair of PBW words of length ``<= max_len``.
    If ``psi`` fails the bracket-homomorphism check nothing is extended.
    """
    report = ThetaReport()
    hom, report.notes = psi.check()
    report.hom_issues = list(hom.issues)
    if report.hom_issues:
        return report
    cache = cache or RewriteCache(P, strategy)
    if samples is None:
        samples = _pbw_pairs(P, max_len)
    for u, v in samples:
        if not isinstance(u, TensorElement):
            u = UElement(P.ctx, {tuple(u): 1})
        if not isinstance(v, TensorElement):
            v = UElement(P.ctx, {tuple(v): 1})
        report.checked += 1
        lhs = psi.theta(u_mul(u, v, P, strategy, cache))
        rhs = W.mul(psi.theta(u), psi.theta(v))
        if lhs != rhs:
            report.failures.append((u, v))
    return report
