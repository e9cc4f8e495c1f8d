"""Skew-symmetric exchange matrices and quiver mutation.

A quiver with n mutable and m_frozen frozen vertices is identified with its
(n+m)x(n+m) integer matrix B, where b[i][j] is the number of arrows i -> j
minus the number of arrows j -> i.  The frozen-frozen block is kept
identically zero, and mutation at a frozen vertex is not allowed.

Vertex arguments are 1-based (vertex 1..n mutable, n+1..n+m frozen); the
JSON serialisation stores the raw 0-indexed matrix.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

Matrix = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class ExchangeMatrix:
    n: int
    b: Matrix
    m_frozen: int = 0

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.b)
        object.__setattr__(self, "b", rows)
        size = self.n + self.m_frozen
        if self.n < 1 or self.m_frozen < 0:
            raise ValueError("need n >= 1 mutable vertices and m_frozen >= 0")
        if len(rows) != size or any(len(row) != size for row in rows):
            raise ValueError(f"matrix must be {size}x{size}")
        for i in range(size):
            for j in range(i, size):
                if rows[i][j] != -rows[j][i]:
                    raise ValueError(f"matrix is not skew-symmetric at ({i},{j})")
                if i >= self.n and j >= self.n and rows[i][j] != 0:
                    raise ValueError("frozen-frozen block must be zero")

    # -- basics -------------------------------------------------------------

    @property
    def size(self) -> int:
        return self.n + self.m_frozen

    @classmethod
    def zero(cls, n: int, m_frozen: int = 0) -> "ExchangeMatrix":
        size = n + m_frozen
        return cls(n, tuple((0,) * size for _ in range(size)), m_frozen)

    @classmethod
    def from_entries(cls, entries, m_frozen: int = 0) -> "ExchangeMatrix":
        rows = tuple(tuple(int(x) for x in row) for row in entries)
        return cls(len(rows) - m_frozen, rows, m_frozen)

    def column(self, j: int) -> tuple[int, ...]:
        """Column j (1-based) as a tuple."""
        return tuple(row[j - 1] for row in self.b)

    def mutable_part(self) -> "ExchangeMatrix":
        if self.m_frozen == 0:
            return self
        return ExchangeMatrix(self.n, tuple(row[: self.n] for row in self.b[: self.n]))

    def with_frozen_rows(self, rows) -> "ExchangeMatrix":
        """Attach frozen rows (each of length n); columns follow by skew-symmetry."""
        if self.m_frozen:
            raise ValueError("matrix already has frozen vertices")
        extra = [list(map(int, r)) for r in rows]
        if any(len(r) != self.n for r in extra):
            raise ValueError("each frozen row must have length n")
        m = len(extra)
        size = self.n + m
        full = [[0] * size for _ in range(size)]
        for i in range(self.n):
            for j in range(self.n):
                full[i][j] = self.b[i][j]
        for i, r in enumerate(extra):
            for j, v in enumerate(r):
                full[self.n + i][j] = v
                full[j][self.n + i] = -v
        return ExchangeMatrix(self.n, tuple(map(tuple, full)), m)

    def frozen_rows(self) -> list[tuple[int, ...]]:
        return [row[: self.n] for row in self.b[self.n :]]

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other: "ExchangeMatrix") -> "ExchangeMatrix":
        if (self.n, self.m_frozen) != (other.n, other.m_frozen):
            raise ValueError("shape mismatch")
        rows = tuple(
            tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(self.b, other.b)
        )
        return ExchangeMatrix(self.n, rows, self.m_frozen)

    def scale(self, c: int) -> "ExchangeMatrix":
        rows = tuple(tuple(c * x for x in row) for row in self.b)
        return ExchangeMatrix(self.n, rows, self.m_frozen)

    def opposite(self) -> "ExchangeMatrix":
        return self.scale(-1)

    def equivalent_up_to_opposite(self, other: "ExchangeMatrix") -> bool:
        """Exact equality or equality with all arrows reversed.

        Exchange relations cannot tell a quiver from its opposite, so this
        is the right notion when comparing recurrence sources; plain
        equality is used everywhere else.
        """
        return self == other or self == other.opposite()

    def is_zero(self) -> bool:
        return all(all(x == 0 for x in row) for row in self.b)

    # -- mutation ------------------------------------------------------------

    def _check_vertex(self, k: int) -> int:
        if not 1 <= k <= self.n:
            raise ValueError(
                f"vertex {k} is not mutable (mutable vertices are 1..{self.n})"
            )
        return k - 1

    def mutate(self, k: int) -> "ExchangeMatrix":
        """Fomin-Zelevinsky mutation at mutable vertex k (1-based)."""
        c = self._check_vertex(k)
        b = self.b
        size = self.size
        new = [[0] * size for _ in range(size)]
        for i in range(size):
            bic = b[i][c]
            for j in range(size):
                if i == c or j == c:
                    new[i][j] = -b[i][j]
                else:
                    bcj = b[c][j]
                    new[i][j] = b[i][j] + (abs(bic) * bcj + bic * abs(bcj)) // 2
        for i in range(self.n, size):
            for j in range(self.n, size):
                new[i][j] = 0
        return ExchangeMatrix(self.n, tuple(map(tuple, new)), self.m_frozen)

    def is_sink(self, k: int) -> bool:
        c = self._check_vertex(k)
        return all(row[c] >= 0 for row in self.b)

    def is_source(self, k: int) -> bool:
        c = self._check_vertex(k)
        return all(row[c] <= 0 for row in self.b)

    # -- permutation conjugations ---------------------------------------------

    def conjugate_rho(self, power: int = 1) -> "ExchangeMatrix":
        """Conjugate by the cyclic rotation of the mutable vertices.

        Frozen vertices stay fixed, so frozen rows shift only along their
        first n entries.
        """
        n = self.n

        def src(i: int) -> int:
            return (i - power) % n if i < n else i

        size = self.size
        rows = tuple(
            tuple(self.b[src(i)][src(j)] for j in range(size)) for i in range(size)
        )
        return ExchangeMatrix(n, rows, self.m_frozen)

    def conjugate_tau(self, power: int = 1) -> "ExchangeMatrix":
        """Conjugate by the skew-rotation (rotation with a sign flip at wraps)."""
        if self.m_frozen:
            raise ValueError("skew-rotation is only defined without frozen vertices")
        n = self.n

        def src(i: int) -> tuple[int, int]:
            q, r = divmod(i - power, n)
            return r, (1 if q % 2 == 0 else -1)

        out = []
        for i in range(n):
            si, sgn_i = src(i)
            out.append(
                tuple(sgn_i * sgn_j * self.b[si][sj] for sj, sgn_j in map(src, range(n)))
            )
        return ExchangeMatrix(n, tuple(out))

    def conjugate_iota(self) -> "ExchangeMatrix":
        """Conjugate by the order-reversing permutation of the vertices."""
        if self.m_frozen:
            raise ValueError("iota is only defined without frozen vertices")
        n = self.n
        rows = tuple(
            tuple(self.b[n - 1 - i][n - 1 - j] for j in range(n)) for i in range(n)
        )
        return ExchangeMatrix(n, rows)

    # -- serialisation ---------------------------------------------------------

    def to_json_dict(self) -> dict:
        return {"n": self.n, "frozen": self.m_frozen, "b": [list(row) for row in self.b]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "ExchangeMatrix":
        try:
            n = int(data["n"])
            frozen = int(data.get("frozen", 0))
            rows = tuple(tuple(int(x) for x in row) for row in data["b"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed quiver JSON: {exc}") from exc
        return cls(n, rows, frozen)

    def to_json(self, indent: int | None = None) -> str:
        return json.dumps(self.to_json_dict(), indent=indent)

    @classmethod
    def from_json(cls, text: str) -> "ExchangeMatrix":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ValueError(f"malformed quiver JSON: {exc}") from exc
        if not isinstance(data, dict):
            raise ValueError("malformed quiver JSON: expected an object")
        return cls.from_json_dict(data)

    def __str__(self) -> str:
        width = max(len(str(x)) for row in self.b for x in row)
        return "\n".join(" ".join(f"{x:>{width}}" for x in row) for row in self.b)
