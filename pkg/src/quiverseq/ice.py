"""Period-1 ice quivers: frozen rows and parameterised recurrences.

A frozen vertex carries a never-mutated variable that enters exchange
relations as a monomial coefficient.  An ice quiver is period 1 when
mutation at vertex 1 (frozen block kept zero) equals the rotation fixing
the frozen vertices.  The admissible frozen rows over a period-1 mutable
block have a rigid shape: l repeated t times, zeros, then -l repeated t
times, and they exist only when the block's weights single out that t
(m_t = m_{N-t} = -1 with the rest nonnegative, or m_{N/2} = -2 for even N;
or the sign-mirrored versions).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ConstraintError, NotPeriodicError
from .periodicity import has_period
from .quiver import ExchangeMatrix
from .recurrence import Recurrence, recurrence_from_period1


@dataclass(frozen=True)
class IceRowSpec:
    t: int
    magnitude: int
    sign: int

    def __post_init__(self):
        if self.magnitude < 1 or self.sign not in (1, -1) or self.t < 1:
            raise ValueError("need t >= 1, magnitude >= 1, sign in {+1, -1}")

    def row(self, N: int) -> tuple[int, ...]:
        if self.t > N // 2:
            raise ValueError(f"t={self.t} too large for N={N}")
        v = self.sign * self.magnitude
        return (v,) * self.t + (0,) * (N - 2 * self.t) + (-v,) * self.t


@dataclass(frozen=True)
class IceCheckResult:
    valid: bool
    row: int | None = None
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.valid


def _row_shape(row) -> IceRowSpec | None:
    """Recognise (v..v, 0..0, -v..-v); None when the row has another shape."""
    N = len(row)
    v = row[0]
    if v == 0:
        return None
    t = 1
    while t < N and row[t] == v:
        t += 1
    if t > N // 2:
        return None
    expected = (v,) * t + (0,) * (N - 2 * t) + (-v,) * t
    if tuple(row) != expected:
        return None
    return IceRowSpec(t, abs(v), 1 if v > 0 else -1)


def _weights_admit(weights, t: int, sign: int) -> bool:
    """Do the period-1 weights allow a frozen row with leading block at t?"""
    N = len(weights) + 1
    marked = -sign  # required value at t and N-t, before the m_{N/2} special case
    others_ok = all(
        sign * weights[j - 1] >= 0
        for j in range(1, N)
        if j not in (t, N - t)
    )
    if not others_ok:
        return False
    if N % 2 == 0 and t == N // 2:
        return weights[t - 1] == 2 * marked
    return weights[t - 1] == marked and weights[N - t - 1] == marked


def ice_period1_check(B: ExchangeMatrix) -> IceCheckResult:
    """Decide the period-1 ice property by the defining equation.

    On failure the verdict reports which frozen row breaks the structural
    characterisation (or that the mutable block itself is not period 1).
    """
    if has_period(B, 1):
        return IceCheckResult(True)
    mutable = B.mutable_part()
    if not has_period(mutable, 1):
        return IceCheckResult(False, None, "mutable block is not of period 1")
    weights = [mutable.b[i][0] for i in range(1, mutable.n)]
    for idx, row in enumerate(B.frozen_rows(), start=1):
        if all(v == 0 for v in row):
            continue
        spec = _row_shape(row)
        if spec is None:
            return IceCheckResult(
                False, idx, "row is not of the form (l..l, 0..0, -l..-l)"
            )
        if not _weights_admit(weights, spec.t, spec.sign):
            need = "-1" if spec.sign > 0 else "+1"
            return IceCheckResult(
                False,
                idx,
                f"weights do not admit t={spec.t}: need m_{spec.t} = {need} "
                "(or the half-weight -2/+2 case) with the rest on the other sign",
            )
    return IceCheckResult(False, None, "defining equation fails")


def ice_rows_enumerate(weights, l_max: int) -> list[IceRowSpec]:
    """All admissible frozen-row shapes with magnitude at most l_max."""
    ws = tuple(int(w) for w in weights)
    if ws != ws[::-1]:
        raise ConstraintError("weights must be palindromic")
    if l_max < 1:
        raise ConstraintError("l_max must be >= 1")
    N = len(ws) + 1
    out = []
    for t in range(1, N // 2 + 1):
        for sign in (1, -1):
            if _weights_admit(ws, t, sign):
                out.extend(IceRowSpec(t, l, sign) for l in range(1, l_max + 1))
    return out


def attach_rows(B: ExchangeMatrix, specs) -> ExchangeMatrix:
    """Extend a mutable quiver with the given frozen-row shapes."""
    return B.with_frozen_rows([spec.row(B.n) for spec in specs])


def parameterized_recurrence(B: ExchangeMatrix) -> Recurrence:
    """The recurrence of a valid period-1 ice quiver, parameters included."""
    verdict = ice_period1_check(B)
    if not verdict.valid:
        where = f" (frozen row {verdict.row})" if verdict.row else ""
        raise NotPeriodicError(f"not a period-1 ice quiver{where}: {verdict.reason}")
    return recurrence_from_period1(B)
