"""The straightening map lambda: FB* -> FP and the product of U(L).

For a word ``w = u b c v`` with ``b`` before ``c`` in the basis order,

    lambda(u b c v) = chi(b, c) lambda(u c b v) + lambda(u [bc] v)

and words without such an adjacent pair are fixed.  The first branch keeps
the length and lowers the index by one, the second shortens the word, so the
recursion terminates.  Which pair is rewritten first is the strategy.
"""
from __future__ import annotations

from enum import Enum

from .errors import ContextMismatch
from .linear import LinearCombination
from .words import TensorElement, UElement, free_mul, index


class Strategy(str, Enum):
    LEFTMOST = "leftmost"
    RIGHTMOST = "rightmost"


def _redex(w, strategy: Strategy) -> int | None:
    positions = range(len(w) - 1)
    if strategy is Strategy.RIGHTMOST:
        positions = reversed(positions)
    for p in positions:
        if w[p] < w[p + 1]:
            return p
    return None


def _accumulate(out: dict, nf: dict, coeff) -> None:
    for w, c in nf.items():
        c = c * coeff
        if w in out:
            s = out[w] + c
            if s.is_zero():
                del out[w]
            else:
                out[w] = s
        elif not c.is_zero():
            out[w] = c


class RewriteCache:
    """Memoized normal forms of single words, for one presentation and strategy.

    Entries are plain ``{word: Scalar}`` dicts and are never mutated once
    stored, so a cache may be shared between threads: a lost race only
    recomputes the same deterministic value.
    """

    def __init__(self, P, strategy=Strategy.LEFTMOST):
        self.presentation = P
        self.strategy = Strategy(strategy)
        self._nf: dict = {}

    def __len__(self):
        return len(self._nf)

    def __contains__(self, w):
        return tuple(w) in self._nf

    def clear(self):
        self._nf.clear()

    def normal_form(self, w) -> dict:
        w = tuple(w)
        hit = self._nf.get(w)
        if hit is not None:
            return hit
        P = self.presentation
        p = _redex(w, self.strategy)
        if p is None:
            res = {w: P.ctx.one()}
        else:
            b, c = w[p], w[p + 1]
            u, v = w[:p], w[p + 2:]
            swapped = u + (c, b) + v
            assert index(swapped) == index(w) - 1, "termination measure did not decrease"
            res: dict = {}
            _accumulate(res, self.normal_form(swapped), P.chi_letters(b, c))
            for k, coeff in P.bracket_letters(b, c).terms.items():
                _accumulate(res, self.normal_form(u + (k,) + v), coeff)
        self._nf[w] = res
        return res


def _resolve_cache(P, strategy, cache: RewriteCache | None) -> RewriteCache:
    if cache is None:
        return RewriteCache(P, strategy)
    if cache.presentation is not P or cache.strategy is not Strategy(strategy):
        raise ContextMismatch("rewrite cache belongs to another presentation or strategy")
    return cache


def straighten(t: LinearCombination, P, strategy=Strategy.LEFTMOST, cache: RewriteCache | None = None) -> UElement:
    """Apply lambda linearly to ``t``; the result is supported on PBW words."""
    cache = _resolve_cache(P, strategy, cache)
    out: dict = {}
    for w, c in t.terms.items():
        _accumulate(out, cache.normal_form(w), c)
    return UElement(t.ctx, out, _canonical=True)


def u_mul(u: LinearCombination, v: LinearCombination, P, strategy=Strategy.LEFTMOST,
          cache: RewriteCache | None = None) -> UElement:
    """The product of U(L): ``u * v = lambda(uv)``."""
    return straighten(free_mul(u, v), P, strategy, cache)


def lift(x: LinearCombination, P) -> UElement:
    """View an element of L as a combination of length-one words."""
    return UElement(P.ctx, {(k,): c for k, c in x.terms.items()}, _canonical=True)


def factorization_check(u: TensorElement, v: TensorElement, P, strategy=Strategy.LEFTMOST,
                        cache: RewriteCache | None = None) -> bool:
    """Whether ``lambda(uv) == lambda(lambda(u) v) == lambda(u lambda(v))``."""
    cache = _resolve_cache(P, strategy, cache)
    whole = u_mul(u, v, P, strategy, cache)
    left = u_mul(straighten(u, P, strategy, cache), v, P, strategy, cache)
    right = u_mul(u, straighten(v, P, strategy, cache), P, strategy, cache)
    return whole == left == right
