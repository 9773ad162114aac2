"""Exact coefficients.

A :class:`Scalar` is an element of ``Q[z]/Phi_n(z)`` tensored with the Laurent
ring ``Q[q_1^{+-1}, ..., q_k^{+-1}]``.  Everything is kept in a canonical form
(rationals in lowest terms, no zero coefficients, ``z``-exponents below
``deg Phi_n``), so equality of canonical forms is exact zero-testing.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, NamedTuple

from .errors import ContextMismatch, NotAUnit, ParseError

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")

ZETA = "z"


# ---------------------------------------------------------------------------
# cyclotomic polynomials


def _poly_divexact(num: list[int], den: tuple[int, ...]) -> list[int]:
    """Divide integer polynomials (low degree first); ``den`` must be monic."""
    num = list(num)
    dd = len(den) - 1
    quot = [0] * (len(num) - dd)
    for k in range(len(num) - 1, dd - 1, -1):
        c = num[k]
        if c:
            quot[k - dd] = c
            for i, d in enumerate(den):
                num[k - dd + i] -= c * d
    if any(num[:dd]):
        raise ArithmeticError("inexact polynomial division")
    return quot


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Integer coefficients of the n-th cyclotomic polynomial, constant term first.

    Uses ``x^n - 1 = prod_{d | n} Phi_d(x)`` and exact division.

    >>> cyclotomic_poly(6)
    (1, -1, 1)
    """
    if n < 1:
        raise ValueError(f"cyclotomic order must be positive, got {n}")
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num = _poly_divexact(num, cyclotomic_poly(d))
    return tuple(num)


# ---------------------------------------------------------------------------
# context


@dataclass(frozen=True)
class ScalarContext:
    """Names of the formal parameters and the optional order of ``z``."""

    params: tuple[str, ...] = ()
    zeta_order: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "params", tuple(self.params))
        if len(set(self.params)) != len(self.params):
            raise ValueError(f"duplicate parameter names in {self.params}")
        for p in self.params:
            if not _IDENT.match(p):
                raise ValueError(f"parameter name {p!r} is not an identifier")
            if p == ZETA:
                raise ValueError(f"{ZETA!r} is reserved for the root of unity")
        if self.zeta_order is not None and self.zeta_order < 1:
            raise ValueError(f"zeta order must be positive, got {self.zeta_order}")

    @property
    def nparams(self) -> int:
        return len(self.params)

    @property
    def zeta_degree(self) -> int:
        """``deg Phi_n``, or 1 when no root of unity is declared."""
        if self.zeta_order is None:
            return 1
        return len(cyclotomic_poly(self.zeta_order)) - 1

    def _zero_exps(self) -> tuple[int, ...]:
        return (0,) * len(self.params)

    def zero(self) -> "Scalar":
        return Scalar(self, {})

    def one(self) -> "Scalar":
        return self.const(1)

    def const(self, value) -> "Scalar":
        return Scalar(self, {(0, self._zero_exps()): Fraction(value)})

    def param(self, name: str, exp: int = 1) -> "Scalar":
        try:
            idx = self.params.index(name)
        except ValueError:
            raise ValueError(f"unknown parameter {name!r}") from None
        exps = [0] * len(self.params)
        exps[idx] = exp
        return Scalar(self, {(0, tuple(exps)): Fraction(1)})

    def zeta(self, exp: int = 1) -> "Scalar":
        if self.zeta_order is None:
            raise ValueError("no root of unity declared in this context")
        return Scalar(self, {(exp, self._zero_exps()): Fraction(1)})

    def monomial(self, coeff, zeta_exp: int = 0, q_exps=None) -> "Scalar":
        q_exps = self._zero_exps() if q_exps is None else tuple(q_exps)
        return Scalar(self, {(zeta_exp, q_exps): Fraction(coeff)})

    def parse(self, text: str) -> "Scalar":
        return parse_scalar(text, self)

    def coerce(self, value) -> "Scalar":
        if isinstance(value, Scalar):
            if value.ctx != self:
                raise ContextMismatch("scalar belongs to a different context")
            return value
        if isinstance(value, (int, Fraction)):
            return self.const(value)
        if isinstance(value, str):
            return parse_scalar(value, self)
        raise TypeError(f"cannot interpret {value!r} as a scalar")


# ---------------------------------------------------------------------------
# scalars

Key = tuple  # (zeta_exp, q_exps)


def _normalize(ctx: ScalarContext, raw: dict) -> dict:
    n = ctx.zeta_order
    if n is None:
        out = {}
        for key, c in raw.items():
            if key[0] != 0:
                raise ValueError("z used but no zeta order declared")
            if c:
                out[key] = c
        return out
    phi = cyclotomic_poly(n)
    deg = len(phi) - 1
    by_q: dict[tuple, dict[int, Fraction]] = {}
    for (k, qe), c in raw.items():
        if c:
            poly = by_q.setdefault(qe, {})
            k %= n
            poly[k] = poly.get(k, 0) + c
    out = {}
    for qe, poly in by_q.items():
        # z^k = -sum_{i<deg} phi[i] z^(k-deg+i) for k >= deg
        for k in range(n - 1, deg - 1, -1):
            c = poly.pop(k, 0)
            if c:
                for i in range(deg):
                    if phi[i]:
                        j = k - deg + i
                        poly[j] = poly.get(j, 0) - c * phi[i]
        for k, c in poly.items():
            if c:
                out[(k, qe)] = Fraction(c)
    return out


class Scalar:
    """An immutable exact scalar; see the module docstring for the ring."""

    __slots__ = ("ctx", "terms", "_hash")

    def __init__(self, ctx: ScalarContext, terms: dict, _canonical: bool = False):
        self.ctx = ctx
        self.terms = terms if _canonical else _normalize(ctx, terms)
        self._hash = None

    # -- predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        if len(self.terms) != 1:
            return False
        (k, qe), c = next(iter(self.terms.items()))
        return c == 1 and k == 0 and not any(qe)

    def unit_parts(self) -> tuple[int, int, tuple[int, ...]] | None:
        """Return ``(sign, zeta_exp, q_exps)`` if this is ``+-z^k q^e``, else None.

        With a declared root of unity the canonical form of ``z^k`` may have
        several terms (``z^2 = -1 - z`` for order 3), so every power is tried.
        """
        if not self.terms:
            return None
        qes = {qe for (_, qe) in self.terms}
        if len(qes) != 1:
            return None
        qe = qes.pop()
        if len(self.terms) == 1:
            (k, _), c = next(iter(self.terms.items()))
            if abs(c) == 1:
                return (1 if c > 0 else -1), k, qe
        if self.ctx.zeta_order is None:
            return None
        for k in range(self.ctx.zeta_order):
            z = _normalize(self.ctx, {(k, qe): Fraction(1)})
            if z == self.terms:
                return 1, k, qe
            if {key: -c for key, c in z.items()} == self.terms:
                return -1, k, qe
        return None

    def is_unit(self) -> bool:
        return self.unit_parts() is not None

    def __bool__(self) -> bool:
        return bool(self.terms)

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> "Scalar":
        if isinstance(other, Scalar):
            if other.ctx is not self.ctx and other.ctx != self.ctx:
                raise ContextMismatch("scalars from different contexts")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ctx.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other.terms:
            return self
        if not self.terms:
            return other
        out = dict(self.terms)
        for key, c in other.terms.items():
            s = out.get(key, 0) + c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return Scalar(self.ctx, out, _canonical=True)

    __radd__ = __add__

    def __neg__(self):
        return Scalar(self.ctx, {k: -c for k, c in self.terms.items()}, _canonical=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.terms or not other.terms:
            return self.ctx.zero()
        if other.is_one():
            return self
        if self.is_one():
            return other
        out: dict = {}
        for (k1, q1), c1 in self.terms.items():
            for (k2, q2), c2 in other.terms.items():
                key = (k1 + k2, tuple(a + b for a, b in zip(q1, q2)))
                out[key] = out.get(key, 0) + c1 * c2
        if self.ctx.zeta_order is None:
            return Scalar(self.ctx, {k: c for k, c in out.items() if c}, _canonical=True)
        return Scalar(self.ctx, out)

    __rmul__ = __mul__

    def __pow__(self, m: int):
        return unit_pow(self, m)

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.ctx == other.ctx and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == self.ctx.const(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ctx, frozenset(self.terms.items())))
        return self._hash

    # -- numeric evaluation (for cross-checks only) -------------------------

    def evaluate(self, q_values=(), zeta_value=None) -> complex:
        total = 0j
        for (k, qe), c in self.terms.items():
            v = complex(c)
            if k:
                v *= zeta_value**k
            for x, e in zip(q_values, qe):
                v *= x**e
            total += v
        return total

    # -- text ---------------------------------------------------------------

    def sorted_terms(self) -> list[tuple[Key, Fraction]]:
        return sorted(self.terms.items(), key=lambda kv: (kv[0][0], kv[0][1]))

    def signed_terms(self) -> Iterator[tuple[bool, str]]:
        """Yield ``(negative, body)`` per term; ``body`` is ``"1"`` for ``+-1``."""
        for (k, qe), c in self.sorted_terms():
            factors = []
            if k:
                factors.append(ZETA if k == 1 else f"{ZETA}^{k}")
            for name, e in zip(self.ctx.params, qe):
                if e:
                    factors.append(name if e == 1 else f"{name}^{e}")
            mag = abs(c)
            if mag != 1 or not factors:
                factors.insert(0, str(mag))
            yield c < 0, "*".join(factors)

    def __str__(self):
        parts = []
        for neg, body in self.signed_terms():
            if not parts:
                parts.append(f"-{body}" if neg else body)
            else:
                parts.append(f" - {body}" if neg else f" + {body}")
        return "".join(parts) if parts else "0"

    def __repr__(self):
        return f"Scalar({str(self)!r})"


def ring_add(a: Scalar, b: Scalar) -> Scalar:
    return a + b


def ring_mul(a: Scalar, b: Scalar) -> Scalar:
    return a * b


def ring_neg(a: Scalar) -> Scalar:
    return -a


def is_zero(a: Scalar) -> bool:
    return a.is_zero()


def unit_pow(a: Scalar, m: int) -> Scalar:
    """``a**m``; negative ``m`` requires ``a`` to be a unit ``+-z^k q^e``."""
    parts = a.unit_parts()
    if parts is None:
        if m < 0:
            raise NotAUnit(f"{a} is not a unit; cannot raise to {m}")
        result, base = a.ctx.one(), a
        while m:
            if m & 1:
                result = result * base
            base = base * base
            m >>= 1
        return result
    sign, k, qe = parts
    coeff = Fraction(sign**(m % 2) if sign < 0 else 1)
    n = a.ctx.zeta_order
    zk = (k * m) % n if n else 0
    return Scalar(a.ctx, {(zk, tuple(e * m for e in qe)): coeff})


# ---------------------------------------------------------------------------
# parsing


class Token(NamedTuple):
    kind: str  # "num", "id", "op", "end"
    value: str
    pos: int


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S))")


def tokenize(text: str) -> list[Token]:
    out = []
    pos = 0
    while True:
        m = _TOKEN.match(text, pos)
        if not m:
            break
        if m.group(1):
            out.append(Token("num", m.group(1), m.start(1)))
        elif m.group(2):
            out.append(Token("id", m.group(2), m.start(2)))
        else:
            out.append(Token("op", m.group(3), m.start(3)))
        pos = m.end()
    out.append(Token("end", "", len(text)))
    return out


class TokenStream:
    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0

    def peek(self, offset: int = 0) -> Token:
        return self.tokens[min(self.i + offset, len(self.tokens) - 1)]

    def next(self) -> Token:
        tok = self.tokens[self.i]
        if tok.kind != "end":
            self.i += 1
        return tok

    def at_op(self, *ops: str) -> bool:
        tok = self.peek()
        return tok.kind == "op" and tok.value in ops

    def expect_op(self, op: str) -> Token:
        tok = self.next()
        if tok.kind != "op" or tok.value != op:
            self.fail(f"expected {op!r}", tok)
        return tok

    def fail(self, message: str, tok: Token | None = None):
        tok = tok or self.peek()
        found = "end of input" if tok.kind == "end" else repr(tok.value)
        raise ParseError(f"{message}, found {found}", tok.pos, self.text)

    def expect_end(self):
        if self.peek().kind != "end":
            self.fail("unexpected trailing input")


def is_scalar_name(name: str, ctx: ScalarContext) -> bool:
    return name in ctx.params or (name == ZETA and ctx.zeta_order is not None)


def _parse_int(ts: TokenStream) -> int:
    sign = 1
    if ts.at_op("-", "+"):
        sign = -1 if ts.next().value == "-" else 1
    tok = ts.next()
    if tok.kind != "num":
        ts.fail("expected integer", tok)
    return sign * int(tok.value)


def parse_factor(ts: TokenStream, ctx: ScalarContext) -> Scalar:
    tok = ts.next()
    if tok.kind == "num":
        num = int(tok.value)
        if ts.at_op("/"):
            ts.next()
            den_tok = ts.next()
            if den_tok.kind != "num":
                ts.fail("expected denominator", den_tok)
            den = int(den_tok.value)
            if den == 0:
                raise ParseError("zero denominator", den_tok.pos, ts.text)
            return ctx.const(Fraction(num, den))
        return ctx.const(num)
    if tok.kind == "id":
        exp = 1
        if ts.at_op("^"):
            ts.next()
            exp = _parse_int(ts)
        if tok.value in ctx.params:
            return ctx.param(tok.value, exp)
        if tok.value == ZETA:
            if ctx.zeta_order is None:
                raise ParseError("z used but no zeta order declared", tok.pos, ts.text)
            return ctx.zeta(exp)
        raise ParseError(f"unknown parameter {tok.value!r}", tok.pos, ts.text)
    ts.fail("expected a number or parameter", tok)


def parse_product(ts: TokenStream, ctx: ScalarContext) -> Scalar:
    value = parse_factor(ts, ctx)
    while ts.at_op("*"):
        ts.next()
        value = value * parse_factor(ts, ctx)
    return value


def parse_scalar(text: str, ctx: ScalarContext) -> Scalar:
    """Parse ``term (("+" | "-") term)*`` into a canonical :class:`Scalar`.

    >>> str(parse_scalar("-2*q^-1 + 1/3", ScalarContext(("q",))))
    '-2*q^-1 + 1/3'
    """
    ts = TokenStream(text)
    total = ctx.zero()
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
        total = total + parse_product(ts, ctx) * sign
        first = False
    ts.expect_end()
    return total
