"""Exact linear algebra over F2, Fp and Q.

Matrices are sparse ``{(row, col): value}`` maps. All elimination is
column-oriented: each column is reduced against previously accepted pivot
columns keyed by their lowest nonzero row. This gives ranks, membership
tests and deterministic particular solutions from one routine.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping, Sequence

from .errors import DimensionError, FieldError


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


@dataclass(frozen=True)
class Field:
    """Exact coefficient field: ``F2``, ``Fp`` for prime ``p``, or ``Q``."""

    kind: str
    p: int = 0

    def __post_init__(self):
        if self.kind not in ("F2", "Fp", "Q"):
            raise FieldError(f"unknown field kind {self.kind!r}")
        if self.kind == "F2" and self.p != 2:
            object.__setattr__(self, "p", 2)
        if self.kind == "Fp" and (self.p == 2 or not _is_prime(self.p)):
            raise FieldError(f"Fp needs an odd prime, got {self.p}")
        if self.kind == "Q" and self.p != 0:
            raise FieldError("Q has characteristic 0")

    @classmethod
    def parse(cls, name: str) -> "Field":
        """Parse ``f2``, ``f3``, ``fp:7``, ``f7``, ``q`` (case-insensitive)."""
        n = name.strip().lower()
        if n in ("q", "qq", "rational", "rationals"):
            return Q
        if n.startswith("fp:"):
            n = "f" + n[3:]
        if n.startswith("f") and n[1:].isdigit():
            p = int(n[1:])
            return F2 if p == 2 else cls("Fp", p)
        raise FieldError(f"cannot parse field {name!r}")

    @property
    def characteristic(self) -> int:
        return self.p

    def __str__(self) -> str:
        return "Q" if self.kind == "Q" else f"F{self.p}"

    # scalar arithmetic; Fp values are ints in [0, p), Q values Fractions
    def coerce(self, x):
        if self.kind == "Q":
            return Fraction(x)
        if isinstance(x, Fraction):
            return (x.numerator * pow(x.denominator, -1, self.p)) % self.p
        return int(x) % self.p

    @property
    def zero(self):
        return Fraction(0) if self.kind == "Q" else 0

    @property
    def one(self):
        return Fraction(1) if self.kind == "Q" else 1

    def add(self, a, b):
        return a + b if self.kind == "Q" else (a + b) % self.p

    def sub(self, a, b):
        return a - b if self.kind == "Q" else (a - b) % self.p

    def mul(self, a, b):
        return a * b if self.kind == "Q" else (a * b) % self.p

    def neg(self, a):
        return -a if self.kind == "Q" else (-a) % self.p

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(a) if self.kind == "Q" else pow(a, -1, self.p)


F2 = Field("F2", 2)
Q = Field("Q")


def Fp(p: int) -> Field:
    return F2 if p == 2 else Field("Fp", p)


@dataclass(frozen=True)
class SparseMatrix:
    rows: int
    cols: int
    entries: Mapping[tuple[int, int], object] = field(default_factory=dict)

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise DimensionError("negative matrix shape")
        for (r, c), v in self.entries.items():
            if not (0 <= r < self.rows and 0 <= c < self.cols):
                raise DimensionError(f"entry ({r}, {c}) outside {self.rows}x{self.cols}")
            if v == 0:
                raise DimensionError("stored zero entry")

    @classmethod
    def from_dense(cls, rows: Sequence[Sequence], F: Field | None = None) -> "SparseMatrix":
        n_rows = len(rows)
        n_cols = len(rows[0]) if rows else 0
        entries = {}
        for i, row in enumerate(rows):
            if len(row) != n_cols:
                raise DimensionError("ragged dense matrix")
            for j, v in enumerate(row):
                if F is not None:
                    v = F.coerce(v)
                if v != 0:
                    entries[(i, j)] = v
        return cls(n_rows, n_cols, entries)

    @classmethod
    def identity(cls, n: int) -> "SparseMatrix":
        return cls(n, n, {(i, i): 1 for i in range(n)})

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "SparseMatrix":
        return cls(rows, cols, {})

    def to_dense(self) -> list[list]:
        out = [[0] * self.cols for _ in range(self.rows)]
        for (r, c), v in self.entries.items():
            out[r][c] = v
        return out

    def transpose(self) -> "SparseMatrix":
        return SparseMatrix(self.cols, self.rows, {(c, r): v for (r, c), v in self.entries.items()})

    def columns(self, F: Field) -> list[dict[int, object]]:
        cols: list[dict[int, object]] = [{} for _ in range(self.cols)]
        for (r, c), v in self.entries.items():
            v = F.coerce(v)
            if v != 0:
                cols[c][r] = v
        return cols

    def matvec(self, x: Sequence, F: Field) -> list:
        if len(x) != self.cols:
            raise DimensionError(f"vector of length {len(x)} for {self.cols} columns")
        out = [F.zero] * self.rows
        for (r, c), v in self.entries.items():
            if x[c] != 0:
                out[r] = F.add(out[r], F.mul(F.coerce(v), F.coerce(x[c])))
        return out


class ColumnSpan:
    """Incrementally maintained column space over a field.

    Each accepted pivot column is normalised to have coefficient 1 at its
    pivot row (the smallest nonzero row index). With ``track=True`` every
    pivot column also records the combination of original columns that
    produced it, so :meth:`solve` can return preimages.
    """

    def __init__(self, F: Field, track: bool = False):
        self.F = F
        self.track = track
        self.pivots: dict[int, dict[int, object]] = {}
        self.combos: dict[int, dict[int, object]] = {}
        self._n = 0

    def __len__(self) -> int:
        return len(self.pivots)

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def _reduce(self, vec: dict, combo: dict | None):
        F = self.F
        vec = dict(vec)
        while vec:
            low = min(vec)
            piv = self.pivots.get(low)
            if piv is None:
                return vec, combo, low
            a = vec[low]
            for r, v in piv.items():
                nv = F.sub(vec.get(r, F.zero), F.mul(a, v))
                if nv == 0:
                    vec.pop(r, None)
                else:
                    vec[r] = nv
            if combo is not None:
                for c, v in self.combos[low].items():
                    nv = F.sub(combo.get(c, F.zero), F.mul(a, v))
                    if nv == 0:
                        combo.pop(c, None)
                    else:
                        combo[c] = nv
        return vec, combo, None

    def add(self, column: Mapping[int, object]) -> bool:
        """Append a column; return True iff it enlarged the span."""
        F = self.F
        col = {r: F.coerce(v) for r, v in column.items() if F.coerce(v) != 0}
        combo = {self._n: F.one} if self.track else None
        self._n += 1
        vec, combo, low = self._reduce(col, combo)
        if low is None:
            return False
        inv = F.inv(vec[low])
        self.pivots[low] = {r: F.mul(v, inv) for r, v in vec.items()}
        if combo is not None:
            self.combos[low] = {c: F.mul(v, inv) for c, v in combo.items()}
        return True

    def contains(self, vector: Mapping[int, object]) -> bool:
        F = self.F
        vec = {r: F.coerce(v) for r, v in vector.items() if F.coerce(v) != 0}
        rest, _, _ = self._reduce(vec, None)
        return not rest

    def solve(self, vector: Mapping[int, object]) -> dict[int, object] | None:
        """Coefficients over the added columns reproducing ``vector``, or None."""
        if not self.track:
            raise RuntimeError("ColumnSpan was built without tracking")
        F = self.F
        vec = {r: F.coerce(v) for r, v in vector.items() if F.coerce(v) != 0}
        x: dict[int, object] = {}
        while vec:
            low = min(vec)
            piv = self.pivots.get(low)
            if piv is None:
                return None
            a = vec[low]
            for r, v in piv.items():
                nv = F.sub(vec.get(r, F.zero), F.mul(a, v))
                if nv == 0:
                    vec.pop(r, None)
                else:
                    vec[r] = nv
            for c, v in self.combos[low].items():
                nv = F.add(x.get(c, F.zero), F.mul(a, v))
                if nv == 0:
                    x.pop(c, None)
                else:
                    x[c] = nv
        return x


def _rank_f2(M: SparseMatrix) -> int:
    # columns as Python-int bitsets; pivot keyed by lowest set bit
    cols = [0] * M.cols
    for (r, c), v in M.entries.items():
        if v % 2:
            cols[c] ^= 1 << r
    pivots: dict[int, int] = {}
    for col in cols:
        while col:
            low = (col & -col).bit_length() - 1
            p = pivots.get(low)
            if p is None:
                pivots[low] = col
                break
            col ^= p
    return len(pivots)


def _rank_rational(M: SparseMatrix) -> int:
    # fraction-free: integer columns scaled and divided by their content
    cols: list[dict[int, int]] = [{} for _ in range(M.cols)]
    for (r, c), v in M.entries.items():
        v = Fraction(v)
        cols[c][r] = v
    pivots: dict[int, dict[int, int]] = {}
    for col in cols:
        if not col:
            continue
        den = 1
        for v in col.values():
            den = den * v.denominator // gcd(den, v.denominator)
        vec = {r: int(v * den) for r, v in col.items()}
        while vec:
            low = min(vec)
            piv = pivots.get(low)
            if piv is None:
                g = 0
                for v in vec.values():
                    g = gcd(g, v)
                pivots[low] = {r: v // g for r, v in vec.items()}
                break
            a, b = piv[low], vec[low]
            new = {}
            for r in vec.keys() | piv.keys():
                nv = a * vec.get(r, 0) - b * piv.get(r, 0)
                if nv:
                    new[r] = nv
            g = 0
            for v in new.values():
                g = gcd(g, v)
            vec = {r: v // g for r, v in new.items()} if g > 1 else new
    return len(pivots)


def rank_generic(M: SparseMatrix, F: Field) -> int:
    """Rank by the field-generic column reduction (reference path)."""
    span = ColumnSpan(F)
    for col in M.columns(F):
        span.add(col)
    return span.rank


def rank(M: SparseMatrix, F: Field) -> int:
    if M.rows == 0 or M.cols == 0 or not M.entries:
        return 0
    if F.kind == "F2":
        return _rank_f2(M)
    if F.kind == "Q":
        return _rank_rational(M)
    return rank_generic(M, F)


def nullspace_dim(M: SparseMatrix, F: Field) -> int:
    return M.cols - rank(M, F)


def nullspace_basis(M: SparseMatrix, F: Field) -> list[dict[int, object]]:
    """A basis of ``{x : Mx = 0}`` as sparse column-coefficient maps."""
    span = ColumnSpan(F, track=True)
    basis = []
    for j, col in enumerate(M.columns(F)):
        # a dependent column j yields the kernel vector e_j - (its preimage)
        if span.contains(col):
            x = span.solve(col)
            vec = {c: F.neg(v) for c, v in x.items()}
            vec[j] = F.one
            basis.append(vec)
        span.add(col)
    return basis


def solve(M: SparseMatrix, b: Sequence, F: Field) -> list | None:
    """Some ``x`` with ``Mx = b`` or ``None``.

    The solution only uses columns that are independent of the columns
    before them; every other variable is zero.
    """
    if len(b) != M.rows:
        raise DimensionError(f"right-hand side of length {len(b)} for {M.rows} rows")
    span = ColumnSpan(F, track=True)
    for col in M.columns(F):
        span.add(col)
    x = span.solve({i: v for i, v in enumerate(b) if F.coerce(v) != 0})
    if x is None:
        return None
    out = [F.zero] * M.cols
    for c, v in x.items():
        out[c] = v
    return out
