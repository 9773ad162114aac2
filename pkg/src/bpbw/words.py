"""Words over the letter alphabet and the free algebra FB* = T(FB).

A word is a tuple of letter ids.  Letter ``i`` precedes letter ``j`` in the
basis order iff ``i < j``; the PBW words are the non-increasing ones.
"""
from __future__ import annotations

from typing import Iterable

from .errors import ParseError
from .linear import LinearCombination
from .scalar import Scalar, TokenStream, is_scalar_name, parse_factor

Word = tuple  # tuple[int, ...]

EMPTY: Word = ()


def index(w: Word) -> int:
    """Number of position pairs ``p < p'`` with ``w[p]`` before ``w[p']`` in the order."""
    return sum(1 for p in range(len(w)) for a in w[p + 1:] if w[p] < a)


def is_pbw(w: Word) -> bool:
    return all(a >= b for a, b in zip(w, w[1:]))


def word_key(w: Word):
    """Canonical order: shorter words first, then lexicographic on ids."""
    return (len(w), w)


def word_degree(w: Word, P):
    G = P.group
    return G.sum(P.degree(i) for i in w)


class TensorElement(LinearCombination):
    """Element of the free algebra: a linear combination of words.

    ``*`` between two elements is concatenation (the free product); ``*`` with a
    scalar scales.
    """

    __slots__ = ()

    def _check_key(self, key):
        return tuple(key)

    sort_key = staticmethod(word_key)

    @classmethod
    def word(cls, ctx, w: Iterable[int], coeff=1):
        return cls(ctx, {tuple(w): coeff})

    @classmethod
    def unit(cls, ctx):
        return cls(ctx, {EMPTY: 1})

    def __mul__(self, other):
        if isinstance(other, LinearCombination):
            return free_mul(self, other)
        return super().__mul__(other)

    def is_pbw_supported(self) -> bool:
        return all(is_pbw(w) for w in self.terms)

    def is_homogeneous(self, P) -> bool:
        return len({word_degree(w, P) for w in self.terms}) <= 1


class UElement(TensorElement):
    """Element of U(L): a linear combination of PBW (non-increasing) words."""

    __slots__ = ()

    def _check_key(self, key):
        key = tuple(key)
        if not is_pbw(key):
            raise ValueError(f"word {key} is not a PBW word")
        return key


def free_mul(u: LinearCombination, v: LinearCombination) -> TensorElement:
    u._same(v)
    out: dict = {}
    for w1, c1 in u.terms.items():
        for w2, c2 in v.terms.items():
            w = w1 + w2
            c = c1 * c2
            out[w] = out[w] + c if w in out else c
    return TensorElement(u.ctx, {w: c for w, c in out.items() if not c.is_zero()}, _canonical=True)


def free_add(u: TensorElement, v: TensorElement) -> TensorElement:
    return u + v


def scalar_scale(c, t: TensorElement) -> TensorElement:
    return t.scale(c)


def act(h, t: LinearCombination, P) -> LinearCombination:
    """Group action ``h . w = chi(h, deg w) w``, applied term by term."""
    chi = P.chi
    out = {}
    for w, c in t.terms.items():
        out[w] = c * chi(h, word_degree(w, P))
    return t._new(out)


# ---------------------------------------------------------------------------
# text


def format_word(w: Word, P) -> str:
    if not w:
        return "1"
    return ".".join(P.letters[i].name for i in w)


def format_terms(items: Iterable[tuple[Word, Scalar]], P) -> str:
    """Render ``(word, coefficient)`` pairs; multi-term coefficients are expanded."""
    parts: list[str] = []
    for w, c in items:
        ws = format_word(w, P)
        for neg, body in c.signed_terms():
            if not w:
                text = body
            elif body == "1":
                text = ws
            else:
                text = f"{body} {ws}"
            if not parts:
                parts.append(f"-{text}" if neg else text)
            else:
                parts.append(f" - {text}" if neg else f" + {text}")
    return "".join(parts) if parts else "0"


def format_element(t: LinearCombination, P) -> str:
    """Display form: highest terms first (longest words, then reverse lexicographic)."""
    return format_terms(reversed(t.items()), P)


def parse_element(text: str, P) -> TensorElement:
    """Parse a linear combination of words, e.g. ``"2*q^-1 f.e - h"``.

    Letters are separated by ``.`` or whitespace; a term's coefficient comes
    first and may be joined to the word by whitespace or ``*``.
    """
    ctx = P.ctx
    ts = TokenStream(text)
    total: dict = {}
    first = True
    while True:
        sign = 1
        if not first:
            if not ts.at_op("+", "-"):
                break
            sign = -1 if ts.next().value == "-" else 1
        if ts.at_op("+", "-"):
            if ts.next().value == "-":
                sign = -sign
        tok = ts.peek()
        coeff = None
        if tok.kind == "num" or (tok.kind == "id" and is_scalar_name(tok.value, ctx)):
            coeff = parse_factor(ts, ctx)
            while ts.at_op("*"):
                nxt = ts.peek(1)
                if nxt.kind == "id" and not is_scalar_name(nxt.value, ctx):
                    ts.next()
                    if not P.has_letter(nxt.value):
                        raise ParseError(f"unknown name {nxt.value!r}", nxt.pos, text)
                    break
                ts.next()
                coeff = coeff * parse_factor(ts, ctx)
        letters = []
        while True:
            tok = ts.peek()
            if tok.kind != "id":
                break
            if not P.has_letter(tok.value):
                if is_scalar_name(tok.value, ctx):
                    ts.fail("coefficient must precede the word")
                raise ParseError(f"unknown letter {tok.value!r}", tok.pos, text)
            ts.next()
            letters.append(P.letter_id(tok.value))
            if ts.at_op("."):
                ts.next()
                if ts.peek().kind != "id":
                    ts.fail("expected a letter after '.'")
        if coeff is None and not letters:
            ts.fail("expected a term")
        if coeff is None:
            coeff = ctx.one()
        w = tuple(letters)
        c = coeff * sign
        total[w] = total[w] + c if w in total else c
        first = False
    ts.expect_end()
    return TensorElement(ctx, total)
