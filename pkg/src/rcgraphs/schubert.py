"""Exact sparse polynomials, divided differences, and Schubert polynomials.

Polynomials live in Z[x_1..x_n] with arbitrary-precision integer
coefficients, keyed by exponent vectors of fixed length n.  No floating
point anywhere.  Schubert polynomials are computed by three independent
routes, whose agreement is the point of the whole package:

- `schubert_divdiff`: the divided-difference recursion down from the
  staircase monomial;
- `schubert_bjs`: the positive formula, summing one monomial per reduced
  pipe dream (the caller supplies the dreams, e.g. from the oracle);
- `schubert_mitosis`: the same sum over the mitosis-generated set.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from .mitosis import rp_by_mitosis
from .permutations import (
    Perm,
    Word,
    compose,
    is_reduced_word,
    lex_first_reduced_word,
    long_permutation,
)
from .pipedream import PipeDream

Exponents = tuple[int, ...]


class Polynomial:
    """Sparse integer polynomial in n variables; immutable by convention."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[Exponents, int] | None = None):
        if n < 0:
            raise ValueError("need a nonnegative number of variables")
        clean: dict[Exponents, int] = {}
        for exp, coeff in (terms or {}).items():
            exp = tuple(exp)
            if len(exp) != n or any(e < 0 for e in exp):
                raise ValueError(f"bad exponent vector {exp} for n={n}")
            if coeff:
                clean[exp] = clean.get(exp, 0) + coeff
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @staticmethod
    def zero(n: int) -> "Polynomial":
        return Polynomial(n)

    @staticmethod
    def one(n: int) -> "Polynomial":
        return Polynomial(n, {(0,) * n: 1})

    @staticmethod
    def monomial(n: int, exp: Iterable[int], coeff: int = 1) -> "Polynomial":
        return Polynomial(n, {tuple(exp): coeff})

    @staticmethod
    def variable(n: int, i: int) -> "Polynomial":
        """The variable x_i, 1-based."""
        if not 1 <= i <= n:
            raise IndexError(f"variable index {i} out of range 1..{n}")
        return Polynomial(n, {tuple(1 if k == i - 1 else 0 for k in range(n)): 1})

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.n != self.n:
                raise ValueError(f"variable count mismatch: {self.n} vs {other.n}")
            return other
        if isinstance(other, int):
            return Polynomial(self.n, {(0,) * self.n: other})
        return NotImplemented

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self.terms)
        for exp, coeff in other.terms.items():
            terms[exp] = terms.get(exp, 0) + coeff
        return Polynomial(self.n, terms)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.n, {exp: -c for exp, c in self.terms.items()})

    def __sub__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        return -(self - other)

    def __mul__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms: dict[Exponents, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                terms[exp] = terms.get(exp, 0) + c1 * c2
        return Polynomial(self.n, terms)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        if not isinstance(k, int) or k < 0:
            raise ValueError("only nonnegative integer powers")
        result = Polynomial.one(self.n)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Polynomial)
            and self.n == other.n
            and self.terms == other.terms
        )

    __hash__ = None  # type: ignore[assignment]

    def __bool__(self) -> bool:
        return bool(self.terms)

    def swap_variables(self, i: int) -> "Polynomial":
        """The action of s_i: exchange x_i and x_{i+1} in every term."""
        if not 1 <= i <= self.n - 1:
            raise IndexError(f"generator index {i} out of range 1..{self.n - 1}")
        terms: dict[Exponents, int] = {}
        for exp, coeff in self.terms.items():
            lst = list(exp)
            lst[i - 1], lst[i] = lst[i], lst[i - 1]
            terms[tuple(lst)] = coeff
        return Polynomial(self.n, terms)

    def is_symmetric_in(self, i: int) -> bool:
        return self == self.swap_variables(i)

    def evaluate_ones(self) -> int:
        """The value at x_1 = ... = x_n = 1, i.e. the coefficient sum."""
        return sum(self.terms.values())

    def coefficient(self, exp: Iterable[int]) -> int:
        return self.terms.get(tuple(exp), 0)

    def sorted_terms(self) -> list[tuple[Exponents, int]]:
        """Terms in descending graded lexicographic order."""
        return sorted(
            self.terms.items(), key=lambda item: (sum(item[0]), item[0]), reverse=True
        )

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exp, coeff in self.sorted_terms():
            factors = []
            for k, e in enumerate(exp):
                if e == 1:
                    factors.append(f"x{k + 1}")
                elif e > 1:
                    factors.append(f"x{k + 1}^{e}")
            body = "*".join(factors)
            if not body:
                parts.append(str(coeff))
            elif coeff == 1:
                parts.append(body)
            elif coeff == -1:
                parts.append(f"-{body}")
            else:
                parts.append(f"{coeff}*{body}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"Polynomial({self.n}, {dict(self.sorted_terms())})"

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "terms": [
                {"exp": list(exp), "coeff": coeff} for exp, coeff in self.sorted_terms()
            ],
        }

    @staticmethod
    def from_json(data: dict) -> "Polynomial":
        return Polynomial(
            data["n"], {tuple(t["exp"]): t["coeff"] for t in data["terms"]}
        )


def monomial_of(dream: PipeDream) -> Polynomial:
    """x^D: one factor x_r per cross of D in row r.

    >>> from .pipedream import d0
    >>> str(monomial_of(d0(3)))
    'x1^2*x2'
    >>> str(monomial_of(PipeDream(2)))
    '1'
    """
    exp = [0] * dream.n
    for r, _ in dream.crosses:
        exp[r - 1] += 1
    return Polynomial.monomial(dream.n, exp)


def divided_difference(f: Polynomial, i: int) -> Polynomial:
    """(f - s_i f) / (x_i - x_{i+1}), computed exactly.

    The numerator is antisymmetric in x_i, x_{i+1}, so the synthetic
    division in x_i leaves no remainder; that is asserted, since a nonzero
    remainder could only mean an arithmetic bug.

    >>> n2 = Polynomial.variable(2, 1)
    >>> str(divided_difference(n2, 1))
    '1'
    """
    if not 1 <= i <= f.n - 1:
        raise IndexError(f"generator index {i} out of range 1..{f.n - 1}")
    g = f - f.swap_variables(i)
    if not g:
        return Polynomial.zero(f.n)

    # Synthetic division by (x_i - x_{i+1}): collect coefficients of powers
    # of x_i (polynomials in the other variables), run Horner top-down with
    # the divisor root x_{i+1}.
    by_degree: dict[int, dict[Exponents, int]] = {}
    for exp, coeff in g.terms.items():
        k = exp[i - 1]
        rest = exp[: i - 1] + (0,) + exp[i:]
        by_degree.setdefault(k, {})[rest] = coeff
    top = max(by_degree)
    x_next = Polynomial.variable(f.n, i + 1)
    quotient = Polynomial.zero(f.n)
    carry = Polynomial.zero(f.n)
    xi_power = {k: Polynomial.monomial(f.n, tuple(k if j == i - 1 else 0 for j in range(f.n))) for k in range(top)}
    for k in range(top, 0, -1):
        carry = carry + Polynomial(f.n, by_degree.get(k, {}))
        quotient = quotient + carry * xi_power[k - 1]
        carry = carry * x_next
    remainder = carry + Polynomial(f.n, by_degree.get(0, {}))
    assert not remainder, f"inexact division in divided_difference: {remainder}"
    return quotient


def staircase_monomial(n: int) -> Polynomial:
    """x_1^{n-1} x_2^{n-2} ... x_{n-1}: the Schubert polynomial of w_0."""
    return Polynomial.monomial(n, tuple(n - k for k in range(1, n + 1)))


_chain_cache: dict[tuple[int, Word], Polynomial] = {}


def _divdiff_along(n: int, word: Word) -> Polynomial:
    """Divided differences applied to the staircase monomial along a word
    prefix, cached (the lex-first words of all of S_n share prefixes)."""
    key = (n, word)
    cached = _chain_cache.get(key)
    if cached is None:
        if word:
            cached = divided_difference(_divdiff_along(n, word[:-1]), word[-1])
        else:
            cached = staircase_monomial(n)
        _chain_cache[key] = cached
    return cached


def schubert_divdiff(w: Perm, word: Word | None = None) -> Polynomial:
    """The Schubert polynomial of w by the divided-difference recursion.

    Any reduced word for w0*w gives the same answer; the lex-first one is
    used by default.

    >>> str(schubert_divdiff((3, 2, 1)))
    'x1^2*x2'
    >>> str(schubert_divdiff((1, 3, 2)))
    'x1 + x2'
    """
    n = len(w)
    v = compose(long_permutation(n), w)
    if word is None:
        word = lex_first_reduced_word(v)
    else:
        word = tuple(word)
        if not is_reduced_word(word, v):
            raise ValueError(f"{word} is not a reduced word for w0*w = {v}")
    return _divdiff_along(n, word)


def schubert_bjs(w: Perm, dreams: Iterable[PipeDream]) -> Polynomial:
    """Sum of x^D over the given reduced pipe dreams for w.

    >>> from .oracle import enumerate_rp
    >>> str(schubert_bjs((2, 3, 1), enumerate_rp((2, 3, 1))))
    'x1*x2'
    """
    n = len(w)
    total = Polynomial.zero(n)
    count = 0
    for dream in dreams:
        if dream.n != n:
            raise ValueError(f"dream on a {dream.n}-grid for a permutation of S_{n}")
        total = total + monomial_of(dream)
        count += 1
    assert total.evaluate_ones() == count  # coefficient sum counts the dreams
    return total


def schubert_mitosis(w: Perm, word: Word | None = None) -> Polynomial:
    """Sum of x^D over the mitosis-generated pipe dreams for w.

    >>> str(schubert_mitosis((3, 1, 2)))
    'x1^2'
    >>> str(schubert_mitosis((1, 2, 3)))
    '1'
    """
    return schubert_bjs(w, rp_by_mitosis(w, word=word))
