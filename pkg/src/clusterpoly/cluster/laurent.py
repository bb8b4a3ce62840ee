"""Sparse Laurent polynomials over the integers.

Coefficients are Python ints, so arithmetic never overflows.
"""

from __future__ import annotations

import heapq
from typing import Iterable, Mapping, Sequence

Exponent = tuple[int, ...]


class NotExactError(ArithmeticError):
    """Division that does not stay inside the Laurent ring."""


def _add_exp(e: Exponent, f: Exponent) -> Exponent:
    return tuple(x + y for x, y in zip(e, f))


def _sub_exp(e: Exponent, f: Exponent) -> Exponent:
    return tuple(x - y for x, y in zip(e, f))


class LaurentPolynomial:
    """Finite sum of ``c * u^e`` with integer ``c != 0`` and ``e`` in Z^nvars.

    The dict of terms is the normal form.  ``numerator`` and ``denominator``
    present it as ``R / u^d`` with ``d >= 0`` as small as possible.
    """

    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Exponent, int] | None = None):
        self.nvars = nvars
        clean: dict[Exponent, int] = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != nvars:
                raise ValueError(f"exponent {e} has length {len(e)}, expected {nvars}")
            if c:
                clean[e] = clean.get(e, 0) + int(c)
                if not clean[e]:
                    del clean[e]
        self._terms = clean
        self._hash = None

    # constructors

    @classmethod
    def _raw(cls, nvars: int, terms: dict[Exponent, int]) -> LaurentPolynomial:
        # trusted path: terms already clean
        obj = cls.__new__(cls)
        obj.nvars = nvars
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, nvars: int) -> LaurentPolynomial:
        return cls._raw(nvars, {})

    @classmethod
    def constant(cls, nvars: int, c: int) -> LaurentPolynomial:
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def monomial(cls, exponents: Sequence[int], c: int = 1) -> LaurentPolynomial:
        return cls(len(exponents), {tuple(exponents): c})

    @classmethod
    def variable(cls, nvars: int, i: int) -> LaurentPolynomial:
        """The coordinate variable ``u_i`` (1-based)."""
        if not 1 <= i <= nvars:
            raise ValueError(f"variable index {i} out of range 1..{nvars}")
        e = [0] * nvars
        e[i - 1] = 1
        return cls._raw(nvars, {tuple(e): 1})

    @classmethod
    def from_terms(cls, nvars: int, terms: Iterable[tuple[int, Sequence[int]]]) -> LaurentPolynomial:
        acc: dict[Exponent, int] = {}
        for c, e in terms:
            acc[tuple(e)] = acc.get(tuple(e), 0) + c
        return cls(nvars, acc)

    # views

    @property
    def terms(self) -> dict[Exponent, int]:
        return dict(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def min_exponents(self) -> Exponent:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return tuple(min(col) for col in zip(*self._terms))

    @property
    def denominator(self) -> Exponent:
        """Monomial denominator exponents, clamped at zero."""
        if not self._terms:
            return (0,) * self.nvars
        return tuple(max(0, -m) for m in self.min_exponents())

    @property
    def numerator(self) -> LaurentPolynomial:
        """Polynomial ``R`` with ``self == R / u^denominator``."""
        d = self.denominator
        return LaurentPolynomial._raw(self.nvars, {_add_exp(e, d): c for e, c in self._terms.items()})

    def is_polynomial(self) -> bool:
        return all(x >= 0 for e in self._terms for x in e)

    def divisible_by_variable(self, i: int) -> bool:
        """True if ``u_i`` divides the numerator."""
        return bool(self._terms) and min(e[i - 1] for e in self.numerator._terms) > 0

    # arithmetic

    def _check(self, other: LaurentPolynomial) -> None:
        if self.nvars != other.nvars:
            raise ValueError(f"mixing {self.nvars} and {other.nvars} variables")

    def _coerce(self, other) -> LaurentPolynomial:
        if isinstance(other, LaurentPolynomial):
            self._check(other)
            return other
        if isinstance(other, int):
            return LaurentPolynomial.constant(self.nvars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc = dict(self._terms)
        for e, c in other._terms.items():
            v = acc.get(e, 0) + c
            if v:
                acc[e] = v
            else:
                acc.pop(e, None)
        return LaurentPolynomial._raw(self.nvars, acc)

    __radd__ = __add__

    def __neg__(self) -> LaurentPolynomial:
        return LaurentPolynomial._raw(self.nvars, {e: -c for e, c in self._terms.items()})

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
        acc: dict[Exponent, int] = {}
        for e, c in self._terms.items():
            for f, d in other._terms.items():
                g = _add_exp(e, f)
                acc[g] = acc.get(g, 0) + c * d
        return LaurentPolynomial._raw(self.nvars, {e: c for e, c in acc.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LaurentPolynomial:
        if k < 0:
            if not self.is_monomial():
                raise NotExactError("negative power of a non-monomial")
            ((e, c),) = self._terms.items()
            if c not in (1, -1):
                raise NotExactError("negative power of a monomial with non-unit coefficient")
            return LaurentPolynomial.monomial([x * k for x in e], c ** -k)
        result = LaurentPolynomial.constant(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def shift(self, exponents: Sequence[int]) -> LaurentPolynomial:
        """Multiply by the monomial ``u^exponents``."""
        e0 = tuple(exponents)
        return LaurentPolynomial._raw(self.nvars, {_add_exp(e, e0): c for e, c in self._terms.items()})

    def exact_div(self, other: LaurentPolynomial) -> LaurentPolynomial:
        """``self / other``, raising :class:`NotExactError` unless it is Laurent."""
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero Laurent polynomial")
        if self.is_zero():
            return LaurentPolynomial.zero(self.nvars)
        p_off, q_off = self.min_exponents(), other.min_exponents()
        P = self.shift([-x for x in p_off])
        Q = other.shift([-x for x in q_off])
        quotient = _poly_exact_div(P._terms, Q._terms)
        return LaurentPolynomial._raw(self.nvars, quotient).shift(_sub_exp(p_off, q_off))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.exact_div(other)

    # comparison

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPolynomial.constant(self.nvars, other)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    # evaluation and substitution

    def evaluate(self, point: Sequence):
        """Value at ``point`` (use Fractions for exact rational evaluation)."""
        total = 0
        for e, c in self._terms.items():
            term = c
            for x, k in zip(point, e):
                term = term * x ** k
            total = total + term
        return total

    def substitute(self, images: Sequence[LaurentPolynomial]) -> LaurentPolynomial:
        """Replace ``u_i`` by ``images[i-1]``; negative powers go through exact division."""
        if len(images) != self.nvars:
            raise ValueError("need one image per variable")
        target = images[0].nvars if images else 0
        den = self.denominator
        powers: dict[tuple[int, int], LaurentPolynomial] = {}

        def power(i: int, k: int) -> LaurentPolynomial:
            if (i, k) not in powers:
                powers[(i, k)] = images[i] ** k
            return powers[(i, k)]

        top = LaurentPolynomial.zero(target)
        for e, c in self.numerator._terms.items():
            term = LaurentPolynomial.constant(target, c)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            top = top + term
        bottom = LaurentPolynomial.constant(target, 1)
        for i, k in enumerate(den):
            if k:
                bottom = bottom * power(i, k)
        return top.exact_div(bottom)

    # display

    def term_list(self) -> list[tuple[int, Exponent]]:
        """Terms as ``(coefficient, exponents)``, sorted by exponent."""
        return [(self._terms[e], e) for e in sorted(self._terms)]

    def _fmt_poly(self) -> str:
        parts = []
        for c, e in sorted(((c, e) for e, c in self._terms.items()), key=lambda ce: (sum(ce[1]), [-x for x in ce[1]])):
            mono = "*".join(f"u{i + 1}" + (f"^{k}" if k != 1 else "") for i, k in enumerate(e) if k)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ") if parts else "0"

    def __str__(self) -> str:
        num = self.numerator
        den = self.denominator
        top = num._fmt_poly()
        if not any(den):
            return top
        bottom = "*".join(f"u{i + 1}" + (f"^{k}" if k != 1 else "") for i, k in enumerate(den) if k)
        if len(num) > 1:
            top = f"({top})"
        return f"{top}/({bottom})" if sum(1 for k in den if k) > 1 else f"{top}/{bottom}"

    def __repr__(self) -> str:
        return f"LaurentPolynomial({self.nvars}, {self._terms!r})"


def _poly_exact_div(P: dict[Exponent, int], Q: dict[Exponent, int]) -> dict[Exponent, int]:
    # lex-leading-term division of polynomials with nonnegative exponents
    lead_q = max(Q)
    lead_c = Q[lead_q]
    rest_q = [(e, c) for e, c in Q.items()]
    remainder = dict(P)
    heap = [tuple(-x for x in e) for e in remainder]
    heapq.heapify(heap)
    quotient: dict[Exponent, int] = {}
    while remainder:
        while True:
            key = tuple(-x for x in heapq.heappop(heap))
            if key in remainder:
                break
        c = remainder[key]
        shift = _sub_exp(key, lead_q)
        if min(shift) < 0 or c % lead_c:
            raise NotExactError("division is not exact")
        factor = c // lead_c
        quotient[shift] = quotient.get(shift, 0) + factor
        for e, d in rest_q:
            g = _add_exp(e, shift)
            v = remainder.get(g, 0) - factor * d
            if v:
                if g not in remainder:
                    heapq.heappush(heap, tuple(-x for x in g))
                remainder[g] = v
            else:
                remainder.pop(g, None)
    return {e: c for e, c in quotient.items() if c}
