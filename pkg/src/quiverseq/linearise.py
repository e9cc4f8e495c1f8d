"""First integrals and linearisation of the primitive recurrences.

Runs of x_n x_{n+N} = x_{n+k} x_{n+N-k} + 1 conserve the quantities
J_{n,k} = (x_n + x_{n+2k})/x_{n+k}, which repeat with period N-k and supply
first integrals.  The same runs satisfy a three-term linear relation

    x_n + x_{n+2k(N-k)} = S * x_{n+k(N-k)},

where S is a cyclically symmetric function of the J-values, computable by
alternating-parity sums over c_1..c_{N-k}.  With all-ones initial data the
k = 1 runs encode every positive solution of a Pell equation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    ConsistencyError,
    ConstraintError,
    PeriodicityViolationError,
    ZeroTermError,
)
from .laurent import LaurentPolynomial
from .recurrence import SequenceRun, iterate, primitive_recurrence


@dataclass(frozen=True)
class CValues:
    """J-values c_1..c_{N-k} of a run, extended periodically."""

    N: int
    k: int
    values: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.values) != self.N - self.k:
            raise ValueError("need exactly N-k values")

    def value(self, n: int) -> Fraction:
        return self.values[(n - 1) % (self.N - self.k)]


@dataclass(frozen=True)
class LinearisationCertificate:
    N: int
    k: int
    c: CValues
    S: Fraction
    window: tuple[int, int]
    copy_index: int = 0


@dataclass(frozen=True)
class PellWitness:
    N: int
    parity: str
    r: int
    D: int
    target: int
    seed: tuple[int, int]
    pairs: tuple[tuple[int, int], ...]


def primitive_run(N: int, k: int, count: int, init=None) -> SequenceRun:
    """Iterate the (N, k) primitive recurrence, from ones by default."""
    rec = primitive_recurrence(N, k)
    return iterate(rec, init if init is not None else [1] * N, count)


# ---------------------------------------------------------------------------
# J and K quantities
# ---------------------------------------------------------------------------


def j_value(run: SequenceRun, k: int, n: int) -> Fraction:
    """(x_n + x_{n+2k}) / x_{n+k}."""
    denom = run.term(n + k)
    if denom == 0:
        raise ZeroTermError(n + k, f"x_{n + k} is zero; J_{n} undefined")
    return (run.term(n) + run.term(n + 2 * k)) / denom


def j_values(run: SequenceRun, k: int) -> CValues:
    """Extract c_i = J_{i,k} and verify the period-(N-k) repetition on the run."""
    N = run.order
    if not 1 <= k <= N - 1:
        raise ConstraintError(f"need 1 <= k <= N-1, got k={k}")
    if len(run) < N + 2 * k:
        raise ConstraintError(f"run too short: need at least {N + 2 * k} terms")
    limit = len(run) - 2 * k
    js = [j_value(run, k, n) for n in range(1, limit + 1)]
    period = N - k
    for n in range(limit - period):
        if js[n] != js[n + period]:
            raise PeriodicityViolationError(
                f"J_{n + 1} = {js[n]} but J_{n + 1 + period} = {js[n + period]}; "
                "run is not governed by a primitive recurrence"
            )
    return CValues(N, k, tuple(js[:period]))


def first_integral_K(run: SequenceRun, k: int, p: int, n: int = 1) -> Fraction:
    """K_p at position n: the cyclic sum of length-p products of consecutive J's."""
    N = run.order
    if not 1 <= p <= N - k:
        raise ConstraintError(f"need 1 <= p <= N-k, got p={p}")
    top = n + (N - k - 1) + (p - 1)
    if top + 2 * k > len(run):
        raise ConstraintError("window too short for this K value")
    total = Fraction(0)
    for i in range(N - k):
        prod = Fraction(1)
        for t in range(p):
            prod *= j_value(run, k, n + i + t)
        total += prod
    return total


# ---------------------------------------------------------------------------
# alternating-parity sums (dynamic programming, generic over the value ring)
# ---------------------------------------------------------------------------


def _t_sums(values, n: int, k_max: int, start_odd: bool, zero, one):
    """t_k for k = 0..k_max over indices 1..n of strictly alternating parity,
    the first chosen index odd (start_odd) or even."""
    # state: per selection size, the sum of partial products expecting an
    # odd (0) or even (1) index next
    expect_odd = [zero] * (k_max + 1)
    expect_even = [zero] * (k_max + 1)
    if start_odd:
        expect_odd[0] = one
    else:
        expect_even[0] = one
    for i in range(1, n + 1):
        odd = i % 2 == 1
        source, target = (expect_odd, expect_even) if odd else (expect_even, expect_odd)
        v = values[i - 1]
        for size in range(min(i, k_max) - 1, -1, -1):
            contrib = source[size] * v
            target[size + 1] = target[size + 1] + contrib
    return [expect_odd[size] + expect_even[size] for size in range(k_max + 1)]


def t_odd(values, n: int, k: int, zero=Fraction(0), one=Fraction(1)):
    return _t_sums(values, n, k, True, zero, one)[k]


def t_even(values, n: int, k: int, zero=Fraction(0), one=Fraction(1)):
    return _t_sums(values, n, k, False, zero, one)[k]


def t_alt(values, n: int, k: int, zero=Fraction(0), one=Fraction(1)):
    """Alternating-parity sum with either starting parity; 2 when k = 0."""
    if k == 0:
        return one + one
    odd = _t_sums(values, n, k, True, zero, one)[k]
    even = _t_sums(values, n, k, False, zero, one)[k]
    return odd + even


def a_closed_form(values, n: int, zero=Fraction(0), one=Fraction(1)):
    """The explicit parity-sum expression for a_n (0 <= n <= len(values)+1)."""
    if n == 0:
        return zero
    if n % 2 == 0:
        r = n // 2
        sums = _t_sums(values, 2 * r - 1, 2 * r - 1, True, zero, one)
        total = zero
        for k in range(r):
            term = sums[2 * k + 1]
            total = total + (term if k % 2 == 0 else -term)
        return total if r % 2 == 0 else -total
    r = (n + 1) // 2
    sums = _t_sums(values, 2 * r - 2, 2 * r - 2, True, zero, one)
    total = zero
    for k in range(r):
        term = sums[2 * k]
        total = total + (term if k % 2 == 0 else -term)
    return total if (r - 1) % 2 == 0 else -total


def a_b_sequences(c: CValues) -> tuple[tuple[Fraction, ...], tuple[Fraction, ...]]:
    """The linearising a- and b-sequences for k = 1.

    Returns (a_0..a_{N-1}, b_{N-1}..b_{2N-2}).  The a's satisfy
    a_n = -a_{n-2} - c_{n-1} a_{n-1} from (0, 1); the b's mirror them from
    the top.  Both are recomputed through the parity-sum closed form, and a
    mismatch (or a_{N-1} != b_{N-1}) raises ConsistencyError.
    """
    if c.k != 1:
        raise ConstraintError("a/b sequences are defined for k = 1")
    N = c.N
    a = [Fraction(0), Fraction(1)]
    for n in range(2, N):
        a.append(-a[n - 2] - c.value(n - 1) * a[n - 1])
    b: dict[int, Fraction] = {2 * N - 2: Fraction(0), 2 * N - 3: Fraction(1)}
    for n in range(2 * N - 4, N - 2, -1):
        b[n] = -b[n + 2] - c.value(n + 1) * b[n + 1]

    for n in range(N):
        closed = a_closed_form(c.values, n)
        if closed != a[n]:
            raise ConsistencyError(
                f"a_{n}: closed form {closed} != recursion value {a[n]}"
            )
    flipped = tuple(c.value(2 * N - 2 - l) for l in range(1, N))
    for n in range(N):
        if a_closed_form(flipped, n) != b[2 * N - 2 - n]:
            raise ConsistencyError(f"b_{2 * N - 2 - n} disagrees with the flipped closed form")
    if a[N - 1] != b[N - 1]:
        raise ConsistencyError("a_{N-1} != b_{N-1}")
    return tuple(a), tuple(b[n] for n in range(N - 1, 2 * N - 1))


# ---------------------------------------------------------------------------
# the linear relation coefficient S
# ---------------------------------------------------------------------------


def _s_from_values(values, zero=Fraction(0), one=Fraction(1)):
    """S over c_1..c_{N-1} (the k = 1 formula), generic over the ring."""
    N = len(values) + 1
    total = zero
    if N % 2 == 0:
        r = N // 2
        for k in range(r):
            term = t_alt(values, 2 * r - 1, 2 * k + 1, zero, one)
            total = total + (term if k % 2 == 0 else -term)
        return total if (r - 1) % 2 == 0 else -total
    r = (N + 1) // 2
    for k in range(r):
        term = t_alt(values, 2 * r - 2, 2 * k, zero, one)
        total = total + (term if k % 2 == 0 else -term)
    return total if (r - 1) % 2 == 0 else -total


def _d_reorder(c: CValues) -> tuple:
    """Relabel the period-(N-k) values along the k-step subsequence."""
    N, k = c.N, c.k
    M = N - k + 1
    return tuple(c.value((j - 1) * k + 1) for j in range(1, M))


def s_coefficient(c: CValues) -> Fraction:
    """The coefficient S_{N,k} of the linear relation, from the J-values.

    For k > 1 (coprime with N) the values are reordered along the k-step
    subsequence and the k = 1 formula applies to the reordered list.
    """
    if math.gcd(c.N, c.k) != 1:
        raise ConstraintError("S is defined after reducing to gcd(N, k) = 1")
    if c.k == 1:
        return _s_from_values(c.values)
    return _s_from_values(_d_reorder(c))


def s_polynomial(N: int, k: int = 1) -> LaurentPolynomial:
    """S_{N,k} as a polynomial in the c-variables (variables c_1..c_{N-k})."""
    if math.gcd(N, k) != 1:
        raise ConstraintError("S is defined after reducing to gcd(N, k) = 1")
    nv = N - k
    cvars = [LaurentPolynomial.variable(nv, i) for i in range(nv)]
    zero = LaurentPolynomial.zero(nv)
    one = LaurentPolynomial.constant(nv, 1)
    if k == 1:
        return _s_from_values(cvars, zero, one)
    M = N - k + 1
    reordered = [cvars[((j - 1) * k) % (N - k)] for j in range(1, M)]
    return _s_from_values(reordered, zero, one)


def linear_relation_check(run: SequenceRun, k: int) -> list[LinearisationCertificate]:
    """Certify x_n + x_{n+2k(N-k)} = S x_{n+k(N-k)} on the whole run.

    When gcd(N, k) = g > 1 the run splits into g interleaved reduced runs and
    one certificate per copy is returned; otherwise the list has one entry.
    """
    N = run.order
    g = math.gcd(N, k)
    if g > 1:
        Ns, ks = N // g, k // g
        certificates = []
        for r in range(g):
            sub = SequenceRun(primitive_recurrence(Ns, ks), run.terms[r::g])
            (cert,) = linear_relation_check(sub, ks)
            certificates.append(
                LinearisationCertificate(
                    cert.N, cert.k, cert.c, cert.S, cert.window, copy_index=r
                )
            )
        return certificates

    c = j_values(run, k)
    S = s_coefficient(c)
    gap = k * (N - k)
    n_max = len(run) - 2 * gap
    if n_max < 1:
        raise ConstraintError(f"run too short: need at least {2 * gap + 1} terms")
    for n in range(1, n_max + 1):
        lhs = run.term(n) + run.term(n + 2 * gap)
        rhs = S * run.term(n + gap)
        if lhs != rhs:
            raise ConsistencyError(
                f"linear relation fails at n={n}: {lhs} != {rhs}"
            )
    return [LinearisationCertificate(N, k, c, S, (1, n_max))]


# ---------------------------------------------------------------------------
# Pell solutions
# ---------------------------------------------------------------------------


def pell_solutions(N: int, count: int) -> PellWitness:
    """Pell-equation solutions carried by the k = 1 primitive run from ones.

    Odd N = 2r-1: a_m = x_{(N-1)m+r}, b_m a consecutive difference, with
    a^2 - (r^2-1) b^2 = 1.  Even N = 2r: a_m a symmetric pair sum, with
    a^2 - ((2r+1)^2-4) b^2 = 4.  All admissible index choices are asserted
    to agree, and the identity is asserted for every stored pair.
    """
    if N < 2:
        raise ConstraintError("need N >= 2")
    if count < 1:
        raise ConstraintError("need count >= 1")
    length = (N - 1) * count + N + 1
    run = primitive_run(N, 1, length)
    if run.integral_prefix != len(run):
        raise ConsistencyError("ones-initialised primitive run must stay integral")
    x = [int(t) for t in run.terms]

    def seq(m: int) -> tuple[int, int]:
        base = (N - 1) * m
        diffs = {x[base + t] - x[base + t - 1] for t in range(1, N)}
        # x is 0-based here: x[i] = x_{i+1}
        if len(diffs) != 1:
            raise ConsistencyError(f"b_{m} depends on the difference position: {diffs}")
        b = diffs.pop()
        if N % 2 == 1:
            r = (N + 1) // 2
            a = x[base + r - 1]
        else:
            r = N // 2
            sums = {x[base + t - 1] + x[base + N - t] for t in range(1, r + 1)}
            if len(sums) != 1:
                raise ConsistencyError(f"a_{m} depends on the pairing position: {sums}")
            a = sums.pop()
        return a, b

    if N % 2 == 1:
        r = (N + 1) // 2
        D, target, parity = r * r - 1, 1, "odd"
    else:
        r = N // 2
        D, target, parity = (2 * r + 1) ** 2 - 4, 4, "even"

    pairs = []
    for m in range(count + 1):
        a, b = seq(m)
        if a * a - D * b * b != target:
            raise ConsistencyError(
                f"pair ({a}, {b}) fails a^2 - {D} b^2 = {target} at m={m}"
            )
        pairs.append((a, b))
    return PellWitness(N, parity, r, D, target, pairs[0], tuple(pairs[1:]))
