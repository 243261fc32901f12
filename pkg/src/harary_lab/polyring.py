"""Sparse multivariate polynomials over the integers.

Exponent vectors are tuples with trailing zeros trimmed, so polynomials in
``x`` alone, in ``x, y, z`` and in more slots mix freely. Slots are named
``x, y, z, w, v, u`` for rendering.
"""

from __future__ import annotations

import json
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

__all__ = [
    "MPoly",
    "NotDivisible",
    "X",
    "Y",
    "Z",
    "var",
    "falling_factorial",
    "assemble_from_falling",
]

VAR_NAMES = ("x", "y", "z", "w", "v", "u")


class NotDivisible(ArithmeticError):
    """Exact division left a nonzero remainder."""


def _trim(exp: Iterable[int]) -> tuple[int, ...]:
    e = list(exp)
    while e and e[-1] == 0:
        e.pop()
    return tuple(e)


def _add_exp(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    if len(a) < len(b):
        a, b = b, a
    return tuple(a[i] + b[i] if i < len(b) else a[i] for i in range(len(a)))


def _grlex_key(exp: tuple[int, ...]):
    return (sum(exp), exp + (0,) * (len(VAR_NAMES) - len(exp)))


class MPoly:
    """Immutable polynomial; ``terms`` maps trimmed exponent tuples to nonzero ints."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, ...], int] | None = None):
        clean: dict[tuple[int, ...], int] = {}
        if terms:
            for exp, c in terms.items():
                if any(k < 0 for k in exp):
                    raise ValueError(f"negative exponent {exp}")
                if c:
                    key = _trim(exp)
                    clean[key] = clean.get(key, 0) + int(c)
                    if not clean[key]:
                        del clean[key]
        self.terms = clean
        self._hash = None

    # construction helpers
    @classmethod
    def const(cls, c: int) -> MPoly:
        return cls({(): c})

    @classmethod
    def monomial(cls, exp: Iterable[int], coeff: int = 1) -> MPoly:
        return cls({tuple(exp): coeff})

    @classmethod
    def from_univariate(cls, coeffs: Iterable[int]) -> MPoly:
        """``coeffs[i]`` is the coefficient of ``x^i``."""
        return cls({(i,): c for i, c in enumerate(coeffs)})

    # basic queries
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def nvars(self) -> int:
        return max((len(e) for e in self.terms), default=0)

    def degree(self, slot: int | None = None) -> int:
        if not self.terms:
            return -1
        if slot is None:
            return max(sum(e) for e in self.terms)
        return max((e[slot] if slot < len(e) else 0) for e in self.terms)

    def coeff(self, exp: Iterable[int]) -> int:
        return self.terms.get(_trim(exp), 0)

    def univariate_coeffs(self) -> list[int]:
        """Coefficient list in ``x``; raises if another slot occurs."""
        if self.nvars > 1:
            raise ValueError("polynomial is not univariate in x")
        d = self.degree(0)
        return [self.terms.get(_trim((i,)), 0) for i in range(d + 1)]

    def leading(self) -> tuple[tuple[int, ...], int]:
        """Lexicographically largest term."""
        width = self.nvars
        exp = max(self.terms, key=lambda e: e + (0,) * (width - len(e)))
        return exp, self.terms[exp]

    # arithmetic
    def _coerce(self, other) -> MPoly:
        if isinstance(other, MPoly):
            return other
        if isinstance(other, int):
            return MPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return MPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[tuple[int, ...], int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = _add_exp(e1, e2)
                out[e] = out.get(e, 0) + c1 * c2
        return MPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result, base = MPoly.const(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = MPoly.const(other)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def exact_div(self, q: MPoly) -> MPoly:
        """Quotient ``self / q``; raises :class:`NotDivisible` on a remainder.

        Greedy lex-leading-term division, which always terminates with zero
        remainder when ``q`` divides ``self`` over the integers.
        """
        if q.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        width = max(self.nvars, q.nvars)
        pad = lambda e: e + (0,) * (width - len(e))  # noqa: E731
        lq, cq = q.leading()
        lq = pad(lq)
        rem = dict(self.terms)
        quot: dict[tuple[int, ...], int] = {}
        while rem:
            le = max(rem, key=pad)
            lc = rem[le]
            diff = tuple(a - b for a, b in zip(pad(le), lq))
            if any(d < 0 for d in diff) or lc % cq:
                raise NotDivisible(f"{self} is not divisible by {q}")
            t_exp, t_c = _trim(diff), lc // cq
            quot[t_exp] = quot.get(t_exp, 0) + t_c
            for e, c in q.terms.items():
                k = _add_exp(e, t_exp)
                rem[k] = rem.get(k, 0) - c * t_c
                if not rem[k]:
                    del rem[k]
        return MPoly(quot)

    # evaluation and substitution
    def eval(self, point: Mapping[str, int | Fraction] | None = None, **kw) -> Fraction:
        """Exact value at a point given by variable name, e.g. ``p.eval(x=1)``."""
        values = dict(point or {}, **kw)
        total = Fraction(0)
        for e, c in self.terms.items():
            term = Fraction(c)
            for slot, k in enumerate(e):
                if k:
                    name = VAR_NAMES[slot]
                    if name not in values:
                        raise KeyError(f"variable {name} is not assigned")
                    term *= Fraction(values[name]) ** k
            total += term
        return total

    def subs(self, mapping: Mapping[str, MPoly | int]) -> MPoly:
        """Substitute polynomials for variables; unmapped variables stay."""
        images: list[MPoly] = []
        for slot in range(self.nvars):
            name = VAR_NAMES[slot]
            img = mapping.get(name)
            if img is None:
                images.append(var(name))
            else:
                images.append(img if isinstance(img, MPoly) else MPoly.const(img))
        powers: dict[tuple[int, int], MPoly] = {}

        def power(slot: int, k: int) -> MPoly:
            if (slot, k) not in powers:
                powers[(slot, k)] = images[slot] ** k
            return powers[(slot, k)]

        out = MPoly()
        for e, c in self.terms.items():
            term = MPoly.const(c)
            for slot, k in enumerate(e):
                if k:
                    term = term * power(slot, k)
            out = out + term
        return out

    # rendering
    def _terms_sorted(self):
        return sorted(self.terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)

    def __str__(self) -> str:
        return self.render()

    def render(self, ascending: bool = False) -> str:
        """Text form, descending graded-lex by default."""
        if not self.terms:
            return "0"
        parts = []
        terms = self._terms_sorted()
        if ascending:
            terms = terms[::-1]
        for e, c in terms:
            mono = "*".join(
                VAR_NAMES[i] + (f"^{k}" if k > 1 else "") for i, k in enumerate(e) if k
            )
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"MPoly({self})"

    def to_json(self, width: int = 3) -> list:
        """``[[coeff, [a, b, c]], ...]`` in descending graded-lex order."""
        width = max(width, self.nvars)
        return [[c, list(e) + [0] * (width - len(e))] for e, c in self._terms_sorted()]

    @classmethod
    def from_json(cls, data) -> MPoly:
        if isinstance(data, str):
            data = json.loads(data)
        return cls({tuple(e): c for c, e in data})


def var(name: str) -> MPoly:
    slot = VAR_NAMES.index(name)
    return MPoly.monomial((0,) * slot + (1,))


X, Y, Z = var("x"), var("y"), var("z")


@lru_cache(maxsize=None)
def falling_factorial(i: int) -> MPoly:
    """``x (x-1) ... (x-i+1)``."""
    if i < 0:
        raise ValueError("falling factorial of negative order")
    if i == 0:
        return MPoly.const(1)
    return falling_factorial(i - 1) * (X - (i - 1))


def assemble_from_falling(b: Iterable[int]) -> MPoly:
    """``sum_i b[i-1] * x_(i)`` for the coefficient list ``b_1..b_n``."""
    out = MPoly()
    for i, bi in enumerate(b, start=1):
        if bi:
            out = out + bi * falling_factorial(i)
    return out
