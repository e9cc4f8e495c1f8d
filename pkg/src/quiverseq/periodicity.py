"""Construction, detection and classification of mutation-periodic quivers.

A quiver has mutation period m when mutating successively at vertices
1, 2, ..., m turns it into its own rotation by m steps.  Period-m building
blocks ("primitives") arise as orbit sums of a single arrow under powers of
the skew-rotation tau; general period-1 quivers are primitive combinations
plus correction layers with epsilon coefficients, embedded symmetrically.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ConstraintError, NotPeriodOneError, NotSinkTypeError
from .quiver import ExchangeMatrix


def epsilon(x: int, y: int) -> int:
    """(x|y| - y|x|)/2: zero when x, y share a sign, else +-|xy| with x's sign."""
    return (x * abs(y) - y * abs(x)) // 2


# ---------------------------------------------------------------------------
# primitives
# ---------------------------------------------------------------------------


def single_arrow(N: int, k: int) -> ExchangeMatrix:
    """The matrix with one arrow N-k+1 -> 1 and no other entries."""
    rows = [[0] * N for _ in range(N)]
    rows[N - k][0] = 1
    rows[0][N - k] = -1
    return ExchangeMatrix(N, tuple(map(tuple, rows)))


def _orbit_length(N: int, k: int, m: int) -> int:
    if N % m:
        raise ConstraintError(f"period {m} primitives need m | N (got N={N}, m={m})")
    if 2 * k == N:
        if N % (2 * m):
            raise ConstraintError(
                f"k = N/2 primitives of period {m} need 2m | N (got N={N})"
            )
        return N // (2 * m)
    return N // m


def primitive(N: int, k: int, m: int = 1, j: int = 1) -> ExchangeMatrix:
    """The j-th period-m primitive with N vertices built from arrow length k.

    For m = 1 this is the tau-orbit sum of a single arrow (half orbit when
    N = 2k); for m > 1 only every m-th arrow of that orbit is kept and the
    copies j = 1..m are the tau-conjugates of the first.
    """
    if N < 2:
        raise ConstraintError("primitives need at least 2 vertices")
    if not 1 <= k <= N // 2:
        raise ConstraintError(f"k must satisfy 1 <= k <= N/2 (got k={k}, N={N})")
    if m < 1:
        raise ConstraintError("period must be >= 1")
    if not 1 <= j <= m:
        raise ConstraintError(f"copy index must satisfy 1 <= j <= m (got {j})")
    count = _orbit_length(N, k, m)
    arrow = single_arrow(N, k)
    total = ExchangeMatrix.zero(N)
    for i in range(count):
        total = total + arrow.conjugate_tau(m * i)
    return total.conjugate_tau(j - 1)


def primitive_ids(N: int, m: int):
    """All valid (k, j) pairs for period-m primitives on N vertices."""
    if N % m:
        return
    for k in range(1, N // 2 + 1):
        if 2 * k == N and N % (2 * m):
            continue
        for j in range(1, m + 1):
            yield (k, j)


# ---------------------------------------------------------------------------
# periodicity detection
# ---------------------------------------------------------------------------


def mutation_chain(B: ExchangeMatrix, m: int) -> list[ExchangeMatrix]:
    """B(1), ..., B(m+1) where B(i+1) = mutate(B(i), i), vertices cycling mod n."""
    chain = [B]
    for i in range(m):
        chain.append(chain[-1].mutate(i % B.n + 1))
    return chain


def has_period(B: ExchangeMatrix, m: int) -> bool:
    """Does mutating at 1..m reproduce the rotation of B by m steps?"""
    current = B
    for i in range(m):
        current = current.mutate(i % B.n + 1)
    return current == B.conjugate_rho(m)


def detect_period(B: ExchangeMatrix, max_m: int | None = None) -> int | None:
    """Smallest m <= max_m with the period-m property, or None.

    max_m defaults to twice the number of mutable vertices.  Frozen
    vertices are carried along (they stay fixed under the rotation).
    """
    if max_m is None:
        max_m = 2 * B.n
    current = B
    for m in range(1, max_m + 1):
        current = current.mutate((m - 1) % B.n + 1)
        if current == B.conjugate_rho(m):
            return m
    return None


# ---------------------------------------------------------------------------
# the general period-1 solution
# ---------------------------------------------------------------------------


def period1_from_weights(weights) -> ExchangeMatrix:
    """Build the unique period-1 matrix whose first column is (0, m_1, ..., m_{N-1}).

    The weights must form a palindrome (m_r = m_{N-r}); entries below the
    diagonal follow the recursion b_ij = b_{i-1,j-1} + epsilon(m_{j-1}, m_{i-1}).
    """
    ws = tuple(int(w) for w in weights)
    if not ws:
        raise ConstraintError("need at least one weight")
    if ws != ws[::-1]:
        raise ConstraintError(f"weights must be palindromic, got {ws}")
    N = len(ws) + 1
    b = [[0] * N for _ in range(N)]
    for i in range(1, N):
        b[i][0] = ws[i - 1]
        b[0][i] = -ws[i - 1]
    for j in range(1, N):
        for i in range(j + 1, N):
            val = b[i - 1][j - 1] + epsilon(ws[j - 1], ws[i - 1])
            b[i][j] = val
            b[j][i] = -val
    return ExchangeMatrix(N, tuple(map(tuple, b)))


def embed(inner: ExchangeMatrix, N: int, offset: int) -> ExchangeMatrix:
    """Place a smaller matrix symmetrically into an NxN zero matrix."""
    rows = [[0] * N for _ in range(N)]
    for i in range(inner.n):
        for j in range(inner.n):
            rows[offset + i][offset + j] = inner.b[i][j]
    return ExchangeMatrix(N, tuple(map(tuple, rows)))


def layers_to_matrix(N: int, layers: dict[int, tuple[int, ...]]) -> ExchangeMatrix:
    """Reassemble a matrix from primitive coefficients per embedding level."""
    total = ExchangeMatrix.zero(N)
    for level, coeffs in layers.items():
        size = N - 2 * level
        for idx, c in enumerate(coeffs, start=1):
            if c:
                total = total + embed(primitive(size, idx).scale(c), N, level)
    return total


def decompose_period1(B: ExchangeMatrix) -> dict[int, tuple[int, ...]]:
    """Express a period-1 matrix as primitive layers.

    Level 0 holds the coefficients m_1..m_r of the N-vertex primitives;
    level k >= 1 holds the epsilon coefficients of the primitives on N-2k
    vertices embedded in the middle.  Raises NotPeriodOneError when the
    reconstruction does not reproduce B exactly.
    """
    if B.m_frozen:
        raise ConstraintError("decomposition is defined for fully mutable quivers")
    N = B.n
    ws = tuple(B.b[i][0] for i in range(1, N))
    if ws != ws[::-1]:
        raise NotPeriodOneError(f"first column {ws} is not palindromic")
    r = N // 2
    layers = {0: tuple(ws[:r])}
    for level in range(1, r):
        layers[level] = tuple(
            epsilon(ws[level - 1], ws[t - 1]) for t in range(level + 1, r + 1)
        )
    if layers_to_matrix(N, layers) != B:
        raise NotPeriodOneError("matrix is not mutation-periodic of period 1")
    return layers


def layer_report(N: int, layers: dict[int, tuple[int, ...]]) -> str:
    """Human-readable layer summary, e.g. ``B4(1):1 B4(2):-2 | B2(1):2``."""
    parts = []
    for level in sorted(layers):
        size = N - 2 * level
        entries = [
            f"B{size}({idx}):{c}"
            for idx, c in enumerate(layers[level], start=1)
            if c != 0
        ]
        if entries:
            parts.append(" ".join(entries))
    return " | ".join(parts) if parts else "0"


# ---------------------------------------------------------------------------
# period-2 families
# ---------------------------------------------------------------------------


def period2_four_node(m1: int, m2: int, m3: int) -> tuple[ExchangeMatrix, ExchangeMatrix]:
    """The general 4-vertex period-2 pair; degenerates to period 1 when m1 = m3."""
    if not (m1 > 0 and m2 < 0 and m3 >= 0):
        raise ConstraintError("need m1 > 0, m2 < 0, m3 >= 0")
    B1 = ExchangeMatrix.from_entries(
        [
            [0, -m1, -m2, -m3],
            [m1, 0, m1 * m2 - m3, -m2],
            [m2, m3 - m1 * m2, 0, -m1],
            [m3, m2, m1, 0],
        ]
    )
    return B1, B1.mutate(1)


def period2_five_node(case: str, *params: int) -> tuple[ExchangeMatrix, ExchangeMatrix]:
    """The 5-vertex period-2 families.

    PP  (m1, m4): m1, m4 > 0 and m1 != m4.
    PNP (m1,): m1 > 0; the isolated solution with m2 = 1, m4 = -1.
    PNN (m1, m2): m1 > 0, m2 <= -2, with m4 = m1(m2+1) and
        m3 = m2 - m1*m4, which must come out negative.
    """
    if case == "PP":
        m1, m4 = params
        if not (m1 > 0 and m4 > 0):
            raise ConstraintError("PP needs m1, m4 > 0")
        if m1 == m4:
            raise ConstraintError("PP with m1 = m4 degenerates to period 1")
        B1 = ExchangeMatrix.from_entries(
            [
                [0, -m1, 1, 1, -m4],
                [m1, 0, -m1 - m4, 1 - m1, 1],
                [-1, m1 + m4, 0, -m1 - m4, 1],
                [-1, m1 - 1, m1 + m4, 0, -m1],
                [m4, -1, -1, m1, 0],
            ]
        )
    elif case == "PNP":
        (m1,) = params
        if m1 <= 0:
            raise ConstraintError("PNP needs m1 > 0")
        B1 = ExchangeMatrix.from_entries(
            [
                [0, -m1, -1, -m1 - 1, 1],
                [m1, 0, 1, -m1 - 1, -m1 - 1],
                [1, -1, 0, 1, -1],
                [m1 + 1, m1 + 1, -1, 0, -m1],
                [-1, m1 + 1, 1, m1, 0],
            ]
        )
    elif case == "PNN":
        m1, m2 = params
        if m1 <= 0 or m2 > -2:
            raise ConstraintError("PNN needs m1 > 0 and m2 <= -2")
        m4 = m1 * (m2 + 1)
        m3 = m2 - m1 * m4
        # The template is only a solution on the branch m3 < 0, which pins
        # m1 = 1 over the integers; larger m1 fail the period-2 equation.
        if m3 >= 0:
            raise ConstraintError(
                f"PNN with m1={m1}, m2={m2} gives m3={m3} >= 0; no solution on this branch"
            )
        B1 = ExchangeMatrix.from_entries(
            [
                [0, -m1, -m2, -m3, -m4],
                [m1, 0, -m1, m3 * (m1 - 1), -m3],
                [m2, m1, 0, -m1, -m2],
                [m3, -m3 * (m1 - 1), m1, 0, -m1],
                [m4, m3, m2, m1, 0],
            ]
        )
    else:
        raise ConstraintError(f"unknown 5-vertex case {case!r}")
    return B1, B1.mutate(1)


def pnn_exceptional_search(bound: int) -> list[tuple[int, int, int]]:
    """Scan the other PNN branch (m3 > 0) for integer solutions.

    The branch condition is (m2 - m1*m4)(m2 + m4) + m1(m2 + 1) - m4 = 0 with
    m1 > 0 and m2, m4 < 0.  No solutions are expected; the scan is bounded
    and makes no completeness claim.
    """
    hits = []
    for m1 in range(1, bound + 1):
        for m2 in range(-bound, 0):
            for m4 in range(-bound, 0):
                m3 = m2 - m1 * m4
                if m3 <= 0:
                    continue
                if m3 * (m2 + m4) + m1 * (m2 + 1) - m4 == 0:
                    hits.append((m1, m2, m4))
    return hits


def period2_sigma_family(weights) -> ExchangeMatrix:
    """Period-2 matrices from the swap involution on the first and last weight.

    ``weights`` is (m_1, m_2, ..., m_{N-2}, m_last) of length N-1 with the
    interior palindromic (m_r = m_{N-r} for 2 <= r <= N-2), m_1 and m_last
    nonnegative and distinct, m_r >= 0 for odd r with 3 <= r <= N-3, and
    m_2 = -1 when N is odd.  Entries follow the twisted recursion
    b_ij = swap(b_{i-1,j-1}) + epsilon(m_{j-1}, m_{i-1}), where swap
    recomputes an entry with m_1 and m_last exchanged.
    """
    ws = tuple(int(w) for w in weights)
    N = len(ws) + 1
    if N < 3:
        raise ConstraintError("need at least 3 vertices")
    for r in range(2, N - 1):
        if ws[r - 1] != ws[N - r - 1]:
            raise ConstraintError(f"interior weights must satisfy m_{r} = m_{N - r}")
    m1, mlast = ws[0], ws[-1]
    if m1 < 0 or mlast < 0:
        raise ConstraintError("m_1 and m_last must be nonnegative")
    if m1 == mlast:
        raise ConstraintError("m_1 = m_last gives period 1, not a strict period-2 quiver")
    for r in range(3, N - 2, 2):
        if ws[r - 1] < 0:
            raise ConstraintError(f"m_{r} must be nonnegative for odd {r}")
    if N % 2 and ws[1] != -1:
        raise ConstraintError("odd vertex counts require m_2 = -1")

    swapped = (mlast,) + ws[1:-1] + (m1,)
    vecs = (ws, swapped)
    cols: list[list[list[int]]] = [
        [[0] * N for _ in range(N)],
        [[0] * N for _ in range(N)],
    ]
    for p in range(2):
        for i in range(1, N):
            cols[p][i][0] = vecs[p][i - 1]
            cols[p][0][i] = -vecs[p][i - 1]
    for j in range(1, N):
        for i in range(j + 1, N):
            for p in range(2):
                val = cols[1 - p][i - 1][j - 1] + epsilon(vecs[p][j - 1], vecs[p][i - 1])
                cols[p][i][j] = val
                cols[p][j][i] = -val
    return ExchangeMatrix(N, tuple(map(tuple, cols[0])))


# ---------------------------------------------------------------------------
# sink-type decomposition and folding
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SinkTypeDecomposition:
    period: int
    coeffs: dict[tuple[int, int], int]
    strict: bool

    def nonzero(self) -> dict[tuple[int, int], int]:
        return {key: c for key, c in self.coeffs.items() if c}


def sink_basis(N: int, m: int) -> list[tuple[int, int, ExchangeMatrix]]:
    """The period-m primitive basis entering the sink-type classification.

    For even N with 2m not dividing N, the k = N/2 slot is covered by the
    period-(m/2) primitives instead.
    """
    if N % m:
        return []
    basis = []
    for k in range(1, (N + 1) // 2):
        for j in range(1, m + 1):
            basis.append((k, j, primitive(N, k, m, j)))
    if N % 2 == 0:
        r = N // 2
        if N % (2 * m) == 0:
            for j in range(1, m + 1):
                basis.append((r, j, primitive(N, r, m, j)))
        else:
            half = m // 2
            for j in range(1, half + 1):
                basis.append((r, j, primitive(N, r, half, j)))
    return basis


def _anchor(P: ExchangeMatrix) -> tuple[int, int, int]:
    for i, row in enumerate(P.b):
        for j, v in enumerate(row):
            if v:
                return i, j, v
    raise ValueError("zero basis matrix")


def sink_type_decompose(B: ExchangeMatrix, m: int) -> SinkTypeDecomposition:
    """Write B as a nonnegative combination of period-m primitives.

    Raises NotSinkTypeError on a negative coefficient, a residual that the
    primitives cannot account for, or a violated sink condition along the
    mutation chain.  ``strict`` is False when every k-group carries equal
    coefficients, in which case the quiver already has a smaller period.
    """
    if B.m_frozen:
        raise ConstraintError("sink-type decomposition needs a fully mutable quiver")
    if m < 1:
        raise ConstraintError("period must be >= 1")
    N = B.n
    basis = sink_basis(N, m)
    if not basis:
        if B.is_zero():
            return SinkTypeDecomposition(m, {}, strict=False)
        raise NotSinkTypeError(f"no period-{m} sink-type quivers on {N} vertices")

    coeffs: dict[tuple[int, int], int] = {}
    total = ExchangeMatrix.zero(N)
    for k, j, P in basis:
        i0, j0, v = _anchor(P)
        c = B.b[i0][j0] * v
        coeffs[(k, j)] = c
        if c < 0:
            raise NotSinkTypeError(f"negative coefficient {c} on primitive ({k},{j})")
        if c:
            total = total + P.scale(c)
    if total != B:
        raise NotSinkTypeError("residual left after subtracting all primitives")

    current = B
    for i in range(1, m + 1):
        if not current.is_sink(i):
            raise NotSinkTypeError(f"vertex {i} is not a sink at chain step {i}")
        current = current.mutate(i)

    groups: dict[int, list[int]] = {}
    for (k, j), c in coeffs.items():
        groups.setdefault(k, []).append(c)
    strict = any(
        len(values) == m and len(set(values)) > 1 for values in groups.values()
    )
    return SinkTypeDecomposition(m, coeffs, strict)


def fold_to_period1(B: ExchangeMatrix, m: int) -> ExchangeMatrix:
    """Sum the rotated periodic chain of a sink-type period-m quiver.

    The result B(1) + rho^{-1} B(2) + ... + rho^{-(m-1)} B(m) has period 1.
    """
    sink_type_decompose(B, m)
    total = ExchangeMatrix.zero(B.n)
    current = B
    for j in range(m):
        total = total + current.conjugate_rho(-j)
        current = current.mutate(j + 1)
    return total
