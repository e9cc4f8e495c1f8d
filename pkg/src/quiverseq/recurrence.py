"""Nonlinear recurrences attached to periodic quivers.

A period-1 quiver with N mutable vertices yields a single recurrence

    x_n x_{n+N} = (product over positive column-1 entries)
                + (product over negative column-1 entries),

read off the first matrix column; an empty product means 1.  Frozen rows
contribute monomial coefficients in the frozen parameters.  Period-2
quivers yield an alternating pair of such formulae, interpreted on the
doubled sequence z_1, z_2, ... with x_n = z_{2n-1}, y_n = z_{2n}.

Iteration is exact over rationals; the symbolic check keeps every cluster
variable as a Laurent polynomial in the initial variables and parameters,
each division performed exactly.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import ConstraintError, NotPeriodicError, ZeroTermError
from .laurent import LaurentPolynomial
from .periodicity import (
    detect_period,
    has_period,
    period1_from_weights,
    period2_four_node,
    period2_sigma_family,
)
from .quiver import ExchangeMatrix


@dataclass(frozen=True)
class Recurrence:
    """x_n x_{n+order} = const_pos * params^coeff_pos * x^pos + (negative side)."""

    order: int
    pos: tuple[int, ...]
    neg: tuple[int, ...]
    coeff_pos: tuple[int, ...] = ()
    coeff_neg: tuple[int, ...] = ()
    const_pos: int = 1
    const_neg: int = 1

    def __post_init__(self):
        if len(self.pos) != self.order - 1 or len(self.neg) != self.order - 1:
            raise ValueError("exponent vectors must cover offsets 1..order-1")
        if any(e < 0 for e in self.pos + self.neg + self.coeff_pos + self.coeff_neg):
            raise ValueError("exponents must be nonnegative")
        if any(p and q for p, q in zip(self.pos, self.neg)):
            raise ValueError("the two monomials must have disjoint support")
        if len(self.coeff_pos) != len(self.coeff_neg):
            raise ValueError("parameter exponent vectors must have equal length")

    @property
    def num_params(self) -> int:
        return len(self.coeff_pos)

    def _monomial_text(self, exps, coeff_exps, const, var: str) -> str:
        parts: list[str] = [] if const == 1 else [str(const)]
        for i, e in enumerate(coeff_exps, start=1):
            if e:
                parts.append(f"y{i}" + (f"^{e}" if e > 1 else ""))
        for off, e in enumerate(exps, start=1):
            if e:
                parts.append(f"{var}_{{n+{off}}}" + (f"^{e}" if e > 1 else ""))
        return " ".join(parts) if parts else "1"

    def render(self, var: str = "x") -> str:
        lhs = f"{var}_n {var}_{{n+{self.order}}}"
        t1 = self._monomial_text(self.pos, self.coeff_pos, self.const_pos, var)
        t2 = self._monomial_text(self.neg, self.coeff_neg, self.const_neg, var)
        return f"{lhs} = {t1} + {t2}"

    def sides(self) -> set:
        """The two monomials as an unordered pair (formulae ignore the order)."""
        return {
            (self.pos, self.coeff_pos, self.const_pos),
            (self.neg, self.coeff_neg, self.const_neg),
        }


@dataclass(frozen=True)
class RecurrencePair:
    """Alternating pair: f_odd fires at odd steps of the z-sequence, f_even at even."""

    order: int
    f_odd: Recurrence
    f_even: Recurrence

    def __post_init__(self):
        if self.f_odd.order != self.order or self.f_even.order != self.order:
            raise ValueError("both formulae must have the pair's order")

    @property
    def num_params(self) -> int:
        return self.f_odd.num_params

    def render(self) -> str:
        return (
            self.f_odd.render(var="z")
            + "  (n odd);  "
            + self.f_even.render(var="z")
            + "  (n even)"
        )


@dataclass(frozen=True)
class SequenceRun:
    recurrence: Recurrence | RecurrencePair
    terms: tuple[Fraction, ...]

    @property
    def order(self) -> int:
        return self.recurrence.order

    @property
    def integral_prefix(self) -> int:
        count = 0
        for t in self.terms:
            if t.denominator != 1:
                break
            count += 1
        return count

    def term(self, n: int) -> Fraction:
        """x_n with 1-based indexing."""
        return self.terms[n - 1]

    def __len__(self) -> int:
        return len(self.terms)


# ---------------------------------------------------------------------------
# synthesis from matrices
# ---------------------------------------------------------------------------


def _recurrence_from_column(B: ExchangeMatrix, col: int, offset_of_row) -> Recurrence:
    N = B.n
    pos = [0] * (N - 1)
    neg = [0] * (N - 1)
    cpos = [0] * B.m_frozen
    cneg = [0] * B.m_frozen
    column = B.column(col)
    for row in range(1, B.size + 1):
        v = column[row - 1]
        if v == 0 or row == col:
            continue
        if row <= N:
            off = offset_of_row(row)
            if v > 0:
                pos[off - 1] += v
            else:
                neg[off - 1] += -v
        else:
            if v > 0:
                cpos[row - N - 1] += v
            else:
                cneg[row - N - 1] += -v
    return Recurrence(
        N, tuple(pos), tuple(neg), tuple(cpos), tuple(cneg)
    )


def recurrence_from_period1(B: ExchangeMatrix) -> Recurrence:
    """Read the recurrence off column 1 of a period-1 matrix (frozen rows allowed)."""
    if not has_period(B.mutable_part(), 1):
        raise NotPeriodicError("matrix is not of mutation period 1")
    return _recurrence_from_column(B, 1, lambda row: row - 1)


def recurrence_from_period2(B: ExchangeMatrix) -> RecurrencePair:
    """The alternating pair of a strictly period-2 matrix.

    f_odd comes from column 1 of B(1); f_even from column 2 of B(2), whose
    vertex 1 holds the newest variable and therefore maps to offset N-1.
    """
    if B.m_frozen:
        raise ConstraintError("period-2 synthesis expects a fully mutable quiver")
    if detect_period(B, 2) != 2:
        raise NotPeriodicError("matrix is not strictly of mutation period 2")
    N = B.n
    f_odd = _recurrence_from_column(B, 1, lambda row: row - 1)
    f_even = _recurrence_from_column(
        B.mutate(1), 2, lambda row: N - 1 if row == 1 else row - 2
    )
    return RecurrencePair(N, f_odd, f_even)


def companion_pair(B: ExchangeMatrix) -> tuple[ExchangeMatrix, ExchangeMatrix]:
    """The alternative period-2 chain start (rho^-1 B(2) rho, rho B(1) rho^-1)."""
    B2 = B.mutate(1)
    return B2.conjugate_rho(-1), B.conjugate_rho(1)


def primitive_recurrence(N: int, k: int) -> Recurrence:
    """x_n x_{n+N} = x_{n+k} x_{n+N-k} + 1 (squared middle term when N = 2k).

    The formula is symmetric in k and N-k, so any 1 <= k <= N-1 is accepted.
    """
    if not 1 <= k <= N - 1:
        raise ConstraintError(f"need 1 <= k <= N-1, got k={k}, N={N}")
    pos = [0] * (N - 1)
    pos[k - 1] += 1
    pos[N - k - 1] += 1
    return Recurrence(N, tuple(pos), (0,) * (N - 1))


# ---------------------------------------------------------------------------
# exact iteration
# ---------------------------------------------------------------------------


def _template_for_step(rec: Recurrence | RecurrencePair, step: int) -> Recurrence:
    if isinstance(rec, RecurrencePair):
        return rec.f_odd if step % 2 == 1 else rec.f_even
    return rec


def iterate(
    rec: Recurrence | RecurrencePair,
    init,
    count: int,
    params=(),
) -> SequenceRun:
    """Run the recurrence exactly until ``count`` terms exist in total.

    ``init`` supplies x_1..x_N.  For a period-2 pair with an odd number of
    vertices, the first computed term doubles as the boundary value of the
    plane representation; nothing extra has to be supplied.
    """
    N = rec.order
    terms = [Fraction(v) for v in init]
    if len(terms) != N:
        raise ConstraintError(f"need exactly {N} initial values, got {len(terms)}")
    pvals = [Fraction(v) for v in params]
    if len(pvals) != rec.num_params:
        raise ConstraintError(
            f"need {rec.num_params} parameter values, got {len(pvals)}"
        )
    step = 0
    while len(terms) < count:
        step += 1
        t = _template_for_step(rec, step)
        window = terms[step - 1 : step - 1 + N]
        divisor = window[0]
        if divisor == 0:
            raise ZeroTermError(step, f"term x_{step} is zero; cannot divide")
        mono_pos = Fraction(t.const_pos)
        for y, e in zip(pvals, t.coeff_pos):
            mono_pos *= y**e
        for off, e in enumerate(t.pos, start=1):
            if e:
                mono_pos *= window[off] ** e
        mono_neg = Fraction(t.const_neg)
        for y, e in zip(pvals, t.coeff_neg):
            mono_neg *= y**e
        for off, e in enumerate(t.neg, start=1):
            if e:
                mono_neg *= window[off] ** e
        terms.append((mono_pos + mono_neg) / divisor)
    return SequenceRun(rec, tuple(terms))


# ---------------------------------------------------------------------------
# symbolic Laurent verification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LaurentCheckResult:
    """Cluster variables as Laurent polynomials; failed_at is the 1-based
    index of the first variable admitting no Laurent representation."""

    polynomials: tuple[LaurentPolynomial, ...]
    failed_at: int | None = None

    @property
    def ok(self) -> bool:
        return self.failed_at is None


def laurent_check(rec: Recurrence | RecurrencePair, steps: int) -> LaurentCheckResult:
    """Iterate symbolically for ``steps`` new variables.

    Variables x_1..x_N come first, then the parameters.  Each new variable
    is the exact Laurent quotient of the two-monomial numerator by the
    departing variable; a failed division certifies that this variable has
    no Laurent-polynomial representation.
    """
    if steps < 1:
        raise ConstraintError("steps must be >= 1")
    N = rec.order
    M = rec.num_params
    nv = N + M
    polys = [LaurentPolynomial.variable(nv, i) for i in range(N)]
    pvars = [LaurentPolynomial.variable(nv, N + i) for i in range(M)]
    window = list(polys)
    for step in range(1, steps + 1):
        t = _template_for_step(rec, step)
        mono_pos = LaurentPolynomial.constant(nv, t.const_pos)
        for y, e in zip(pvars, t.coeff_pos):
            mono_pos = mono_pos * y**e
        for off, e in enumerate(t.pos, start=1):
            if e:
                mono_pos = mono_pos * window[off] ** e
        mono_neg = LaurentPolynomial.constant(nv, t.const_neg)
        for y, e in zip(pvars, t.coeff_neg):
            mono_neg = mono_neg * y**e
        for off, e in enumerate(t.neg, start=1):
            if e:
                mono_neg = mono_neg * window[off] ** e
        quotient = (mono_pos + mono_neg).exact_divide(window[0])
        if quotient is None:
            return LaurentCheckResult(tuple(polys), failed_at=N + step)
        polys.append(quotient)
        window.pop(0)
        window.append(quotient)
    return LaurentCheckResult(tuple(polys))


# ---------------------------------------------------------------------------
# decoupling
# ---------------------------------------------------------------------------


def decoupling_check(N: int, k: int, terms: int) -> bool:
    """Does the (N, k) primitive run from ones interleave gcd(N, k) copies
    of the reduced (N/m, k/m) run?"""
    m = math.gcd(N, k)
    if m <= 1:
        raise ConstraintError("decoupling needs gcd(N, k) > 1")
    full = iterate(primitive_recurrence(N, k), [1] * N, terms)
    sub_len = (terms - 1) // m + 1
    Ns, ks = N // m, k // m
    sub = iterate(primitive_recurrence(Ns, ks), [1] * Ns, max(sub_len, Ns))
    return all(full.terms[n] == sub.terms[n // m] for n in range(terms))


# ---------------------------------------------------------------------------
# presets
# ---------------------------------------------------------------------------


def gale_robinson_matrix(N: int, r: int, s: int) -> ExchangeMatrix:
    """The quiver of x_n x_{n+N} = x_{n+r} x_{n+N-r} + x_{n+s} x_{n+N-s}."""
    if not 0 < r < s <= N // 2:
        raise ConstraintError("need 0 < r < s <= N/2")
    ws = [0] * (N - 1)
    ws[r - 1] += 1
    ws[N - r - 1] += 1
    ws[s - 1] -= 2 if N == 2 * s else 1
    if N != 2 * s:
        ws[N - s - 1] -= 1
    return period1_from_weights(ws)


def _three_cycle_double() -> ExchangeMatrix:
    return ExchangeMatrix.from_entries([[0, -2, 2], [2, 0, -2], [-2, 2, 0]])


_PRESET_BUILDERS = {
    "somos4": lambda: period1_from_weights((1, -2, 1)),
    "somos5": lambda: period1_from_weights((1, -1, -1, 1)),
    "dana_scott": lambda: period1_from_weights((1, -1, 1)),
    "dP1": lambda: period1_from_weights((1, -2, 1)),
    "dP2": lambda: period1_from_weights((1, -1, -1, 1)),
    "dP3": lambda: period2_sigma_family((1, -1, 1, -1, 0)),
    "hirzebruch0": lambda: period2_four_node(2, -2, 0)[0],
    "three_cycle_double": _three_cycle_double,
    "somos4_param": lambda: period1_from_weights((1, -2, 1)).with_frozen_rows(
        [[1, 1, -1, -1], [-1, 0, 0, 1]]
    ),
    "dana_scott_param": lambda: period1_from_weights((1, -1, 1)).with_frozen_rows(
        [[-1, 0, 0, 1]]
    ),
}

_GR_PATTERN = re.compile(r"^gale_robinson\(\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\)$")


def preset(name: str) -> ExchangeMatrix:
    """Look up a named quiver; gale_robinson(N,r,s) is parsed from the name."""
    builder = _PRESET_BUILDERS.get(name)
    if builder is not None:
        return builder()
    match = _GR_PATTERN.match(name)
    if match:
        return gale_robinson_matrix(*(int(g) for g in match.groups()))
    raise ConstraintError(f"unknown preset {name!r}")


def preset_names() -> list[str]:
    return list(_PRESET_BUILDERS) + ["gale_robinson(6,1,2)", "gale_robinson(6,2,3)"]
