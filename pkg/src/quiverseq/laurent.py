"""Sparse multivariate Laurent polynomials over the integers.

A Laurent polynomial in variables x1..xn is stored as a map from exponent
vectors (tuples of signed integers, one slot per variable) to nonzero
integer coefficients:

    {(-1, 1, 0, 1): 1, (-1, 0, 2, 0): 1}   <->   x1^-1*x2*x4 + x1^-1*x3^2

Coefficients are plain Python ints, so there is no precision limit.  Values
are immutable once constructed; all arithmetic returns new objects.

Division is exact division in the Laurent ring: ``a.exact_divide(b)``
returns q with ``q*b == a`` when such a q exists and ``None`` otherwise.
This is decided by factoring the componentwise-minimal monomial out of both
operands and running ordinary polynomial long division under the graded
lexicographic order, demanding a zero remainder.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

ExponentVector = tuple[int, ...]


def _grlex(exps: ExponentVector) -> tuple[int, ExponentVector]:
    return (sum(exps), exps)


class LaurentPolynomial:
    __slots__ = ("num_vars", "terms")

    def __init__(self, num_vars: int, terms: Mapping[ExponentVector, int] | None = None):
        if num_vars < 0:
            raise ValueError("num_vars must be nonnegative")
        clean: dict[ExponentVector, int] = {}
        for exps, coeff in (terms or {}).items():
            if len(exps) != num_vars:
                raise ValueError(f"exponent vector {exps} has wrong length (want {num_vars})")
            if coeff != 0:
                clean[tuple(exps)] = coeff
        object.__setattr__(self, "num_vars", num_vars)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("LaurentPolynomial is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, num_vars: int) -> "LaurentPolynomial":
        return cls(num_vars)

    @classmethod
    def constant(cls, num_vars: int, value: int) -> "LaurentPolynomial":
        return cls(num_vars, {(0,) * num_vars: value})

    @classmethod
    def variable(cls, num_vars: int, index: int) -> "LaurentPolynomial":
        """The monomial x_{index+1} (0-based index into the variable list)."""
        exps = [0] * num_vars
        exps[index] = 1
        return cls(num_vars, {tuple(exps): 1})

    @classmethod
    def monomial(cls, num_vars: int, exps: Iterable[int], coeff: int = 1) -> "LaurentPolynomial":
        return cls(num_vars, {tuple(exps): coeff})

    # -- predicates --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self.num_vars == other.num_vars and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.num_vars, frozenset(self.terms.items())))

    # -- ring operations ---------------------------------------------------

    def _check_compatible(self, other: "LaurentPolynomial") -> None:
        if self.num_vars != other.num_vars:
            raise ValueError(
                f"variable-count mismatch: {self.num_vars} vs {other.num_vars}"
            )

    def __add__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        self._check_compatible(other)
        terms = dict(self.terms)
        for exps, coeff in other.terms.items():
            total = terms.get(exps, 0) + coeff
            if total:
                terms[exps] = total
            else:
                terms.pop(exps, None)
        return LaurentPolynomial(self.num_vars, terms)

    def __neg__(self) -> "LaurentPolynomial":
        return LaurentPolynomial(self.num_vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        return self + (-other)

    def __mul__(self, other) -> "LaurentPolynomial":
        if isinstance(other, int):
            return LaurentPolynomial(
                self.num_vars, {e: c * other for e, c in self.terms.items()}
            )
        self._check_compatible(other)
        terms: dict[ExponentVector, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                total = terms.get(key, 0) + c1 * c2
                if total:
                    terms[key] = total
                else:
                    del terms[key]
        return LaurentPolynomial(self.num_vars, terms)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "LaurentPolynomial":
        if exponent < 0:
            raise ValueError("negative powers are only defined for monomials; invert explicitly")
        result = LaurentPolynomial.constant(self.num_vars, 1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    # -- exact division ----------------------------------------------------

    def _min_exponents(self) -> ExponentVector:
        its = iter(self.terms)
        first = next(its)
        mins = list(first)
        for exps in its:
            for i, e in enumerate(exps):
                if e < mins[i]:
                    mins[i] = e
        return tuple(mins)

    def exact_divide(self, other: "LaurentPolynomial") -> "LaurentPolynomial | None":
        """Return q with q*other == self, or None if no Laurent quotient exists."""
        self._check_compatible(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return LaurentPolynomial.zero(self.num_vars)

        # Shift both operands to ordinary polynomials.  Componentwise minimal
        # exponents of a product add exactly (Z[x..] is a domain), so the
        # Laurent quotient exists iff the shifted polynomial division is exact.
        shift_a = self._min_exponents()
        shift_b = other._min_exponents()
        rem = {tuple(e - s for e, s in zip(exps, shift_a)): c for exps, c in self.terms.items()}
        div = {tuple(e - s for e, s in zip(exps, shift_b)): c for exps, c in other.terms.items()}

        lead_b = max(div, key=_grlex)
        coeff_b = div[lead_b]
        quotient: dict[ExponentVector, int] = {}
        while rem:
            lead_r = max(rem, key=_grlex)
            mono = tuple(a - b for a, b in zip(lead_r, lead_b))
            coeff_r = rem[lead_r]
            if any(e < 0 for e in mono) or coeff_r % coeff_b:
                return None
            c = coeff_r // coeff_b
            quotient[mono] = c
            for exps, coeff in div.items():
                key = tuple(a + b for a, b in zip(mono, exps))
                total = rem.get(key, 0) - c * coeff
                if total:
                    rem[key] = total
                else:
                    rem.pop(key, None)

        offset = tuple(a - b for a, b in zip(shift_a, shift_b))
        return LaurentPolynomial(
            self.num_vars,
            {tuple(e + o for e, o in zip(exps, offset)): c for exps, c in quotient.items()},
        )

    # -- evaluation and rendering ------------------------------------------

    def evaluate(self, values: Iterable[Fraction | int]) -> Fraction:
        """Evaluate at the given point; negative exponents require nonzero coordinates."""
        point = [Fraction(v) for v in values]
        if len(point) != self.num_vars:
            raise ValueError("wrong number of values")
        total = Fraction(0)
        for exps, coeff in self.terms.items():
            term = Fraction(coeff)
            for v, e in zip(point, exps):
                term *= v**e
            total += term
        return total

    def sorted_terms(self) -> list[tuple[ExponentVector, int]]:
        """Terms in decreasing graded-lexicographic order."""
        return sorted(self.terms.items(), key=lambda item: _grlex(item[0]), reverse=True)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        chunks: list[str] = []
        for exps, coeff in self.sorted_terms():
            factors = [
                f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}"
                for i, e in enumerate(exps)
                if e != 0
            ]
            if not factors:
                body = str(abs(coeff))
            elif abs(coeff) == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(abs(coeff))] + factors)
            if not chunks:
                chunks.append(body if coeff > 0 else f"-{body}")
            else:
                chunks.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(chunks)

    def __repr__(self) -> str:
        return f"LaurentPolynomial({self.num_vars}, {self.terms!r})"
