"""Finite formal linear combinations with :class:`~bpbw.scalar.Scalar` coefficients."""
from __future__ import annotations

from fractions import Fraction

from .errors import ContextMismatch
from .scalar import Scalar, ScalarContext


class LinearCombination:
    """Immutable map ``key -> nonzero Scalar``.

    Subclasses fix what the keys are (letter ids, words) and their canonical
    order via :meth:`sort_key`.
    """

    __slots__ = ("ctx", "terms", "_hash")

    def __init__(self, ctx: ScalarContext, terms=None, _canonical: bool = False):
        self.ctx = ctx
        if _canonical:
            self.terms = terms
        else:
            self.terms = {}
            for key, c in (terms or {}).items():
                c = ctx.coerce(c)
                if not c.is_zero():
                    self.terms[self._check_key(key)] = c
        self._hash = None

    def _check_key(self, key):
        return key

    @staticmethod
    def sort_key(key):
        return key

    @classmethod
    def zero(cls, ctx: ScalarContext):
        return cls(ctx, {}, _canonical=True)

    @classmethod
    def basis(cls, ctx: ScalarContext, key, coeff=1):
        return cls(ctx, {key: coeff})

    def _new(self, terms):
        return type(self)(self.ctx, terms, _canonical=True)

    def _same(self, other):
        if not isinstance(other, LinearCombination):
            return False
        if other.ctx != self.ctx:
            raise ContextMismatch("linear combinations over different scalar contexts")
        return True

    def items(self):
        """Terms in canonical order."""
        return sorted(self.terms.items(), key=lambda kv: self.sort_key(kv[0]))

    def keys(self):
        return [k for k, _ in self.items()]

    def coeff(self, key) -> Scalar:
        return self.terms.get(key) or self.ctx.zero()

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other):
        if not self._same(other):
            return NotImplemented
        if not other.terms:
            return self
        out = dict(self.terms)
        for key, c in other.terms.items():
            s = out[key] + c if key in out else c
            if s.is_zero():
                del out[key]
            else:
                out[key] = s
        return self._new(out)

    def __neg__(self):
        return self._new({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if not self._same(other):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "LinearCombination":
        c = self.ctx.coerce(c)
        if c.is_zero():
            return self._new({})
        if c.is_one():
            return self
        out = {}
        for key, v in self.terms.items():
            p = v * c
            if not p.is_zero():
                out[key] = p
        return self._new(out)

    def __rmul__(self, c):
        if isinstance(c, (Scalar, int, Fraction)):
            return self.scale(c)
        return NotImplemented

    def __mul__(self, c):
        if isinstance(c, (Scalar, int, Fraction)):
            return self.scale(c)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, LinearCombination):
            return self.ctx == other.ctx and self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __repr__(self):
        body = ", ".join(f"{k!r}: {str(c)!r}" for k, c in self.items())
        return f"{type(self).__name__}({{{body}}})"
