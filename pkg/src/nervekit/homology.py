"""Chains, boundary operators, reduced Betti numbers and cycle filling.

Orientation convention: a simplex is stored with ascending vertices and
``∂[v0..vk] = Σ (-1)^i [v0..^vi..vk]``. Homology is always reduced: the
augmentation ``ε`` (sum of coefficients) plays the role of ``∂_0`` and the
empty complex has ``β̃_{-1} = 1``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Iterator, Mapping

from .complex import Simplex, SimplicialComplex
from .errors import ComplexError, DimensionError, NotACycleError, PreconditionError
from .linalg import ColumnSpan, Field, SparseMatrix, rank
from .pseudomanifold import is_pseudomanifold, ridge_incidence, ridges_of


def orient(vertices: Iterable[int]) -> tuple[Simplex | None, int]:
    """Sort an ordered vertex tuple; return ``(simplex, ±1)`` or ``(None, 0)``
    when a vertex repeats (degenerate image)."""
    vs = list(vertices)
    if len(set(vs)) != len(vs):
        return None, 0
    sign = 1
    # insertion sort, counting transpositions
    for i in range(1, len(vs)):
        j = i
        while j > 0 and vs[j - 1] > vs[j]:
            vs[j - 1], vs[j] = vs[j], vs[j - 1]
            sign = -sign
            j -= 1
    return tuple(vs), sign


class Chain:
    """A ``dim``-chain: canonical simplices mapped to nonzero field scalars.

    ``dim == -1`` chains live on the single key ``()`` and carry the value of
    the augmentation.
    """

    __slots__ = ("dim", "terms", "field")

    def __init__(self, dim: int, terms: Mapping[Simplex, object], field: Field):
        if dim < -1:
            raise DimensionError(f"chain dimension {dim} < -1")
        clean = {}
        for s, v in terms.items():
            s = tuple(s)
            if len(s) != dim + 1:
                raise DimensionError(f"simplex {s} in a {dim}-chain")
            v = field.coerce(v)
            if v != 0:
                clean[s] = v
        self.dim = dim
        self.terms = clean
        self.field = field

    @classmethod
    def zero(cls, dim: int, field: Field) -> "Chain":
        return cls(dim, {}, field)

    @classmethod
    def simplex(cls, vertices: Iterable[int], field: Field, coeff=1) -> "Chain":
        """The oriented simplex ``[v0, ..., vk]`` given in any vertex order."""
        vs = tuple(vertices)
        s, sign = orient(vs)
        if s is None:
            raise ComplexError(f"degenerate simplex {vs}")
        return cls(len(s) - 1, {s: field.mul(field.coerce(sign), field.coerce(coeff))}, field)

    # -- algebra -------------------------------------------------------------

    def _check(self, other: "Chain"):
        if self.dim != other.dim or self.field != other.field:
            raise DimensionError("chains of different dimension or field")

    def __add__(self, other: "Chain") -> "Chain":
        self._check(other)
        F = self.field
        out = dict(self.terms)
        for s, v in other.terms.items():
            out[s] = F.add(out.get(s, F.zero), v)
        return Chain(self.dim, out, F)

    def __neg__(self) -> "Chain":
        return Chain(self.dim, {s: self.field.neg(v) for s, v in self.terms.items()}, self.field)

    def __sub__(self, other: "Chain") -> "Chain":
        return self + (-other)

    def scale(self, a) -> "Chain":
        F = self.field
        a = F.coerce(a)
        return Chain(self.dim, {s: F.mul(a, v) for s, v in self.terms.items()}, F)

    __rmul__ = scale

    def __eq__(self, other) -> bool:
        if not isinstance(other, Chain):
            return NotImplemented
        return self.dim == other.dim and self.field == other.field and self.terms == other.terms

    def __repr__(self) -> str:
        body = " + ".join(f"{v}*{list(s)}" for s, v in self.items()) or "0"
        return f"Chain[{self.dim}, {self.field}]({body})"

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def items(self) -> list[tuple[Simplex, object]]:
        return sorted(self.terms.items())

    def coefficient(self, s: Iterable[int]):
        return self.terms.get(tuple(s), self.field.zero)

    @property
    def support(self) -> list[Simplex]:
        return sorted(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def augmentation(self):
        """Sum of coefficients; only meaningful for 0-chains."""
        F = self.field
        total = F.zero
        for v in self.terms.values():
            total = F.add(total, v)
        return total

    def boundary(self, augmented: bool = True) -> "Chain":
        return boundary(self, augmented)

    def supporting_complex(self) -> SimplicialComplex:
        if self.dim < 0:
            return SimplicialComplex.empty()
        return SimplicialComplex.from_facets(self.terms)

    def push_forward(self, vertex_map: Callable[[int], int] | Mapping[int, int]) -> "Chain":
        """Image under a simplicial map given on vertices; degenerate
        simplices vanish."""
        f = vertex_map.__getitem__ if isinstance(vertex_map, Mapping) else vertex_map
        F = self.field
        out: dict[Simplex, object] = {}
        for s, v in self.terms.items():
            t, sign = orient(f(x) for x in s)
            if t is None:
                continue
            out[t] = F.add(out.get(t, F.zero), F.mul(F.coerce(sign), v))
        return Chain(self.dim, out, F)

    def to_vector(self, basis: Mapping[Simplex, int]) -> dict[int, object]:
        try:
            return {basis[s]: v for s, v in self.terms.items()}
        except KeyError as exc:
            raise ComplexError(f"simplex {exc.args[0]} not in the ambient complex") from None


def boundary(c: Chain, augmented: bool = True) -> Chain:
    """``∂c``. A 0-chain maps to its augmentation (a (-1)-chain on ``()``),
    or to the zero (-1)-chain when ``augmented`` is False."""
    F = c.field
    if c.dim == -1:
        raise DimensionError("boundary of a (-1)-chain")
    if c.dim == 0:
        if not augmented:
            return Chain.zero(-1, F)
        return Chain(-1, {(): c.augmentation()}, F)
    out: dict[Simplex, object] = {}
    for s, v in c.terms.items():
        for i in range(len(s)):
            face = s[:i] + s[i + 1:]
            term = v if i % 2 == 0 else F.neg(v)
            out[face] = F.add(out.get(face, F.zero), term)
    return Chain(c.dim - 1, out, F)


@lru_cache(maxsize=4096)
def _boundary_entries(X: SimplicialComplex, i: int) -> SparseMatrix:
    """Integer (±1) matrix of the augmented ∂_i for any i >= 0."""
    cols = X.simplices_of_dim(i)
    if i == 0:
        return SparseMatrix(1, len(cols), {(0, j): 1 for j in range(len(cols))})
    rows = X.simplices_of_dim(i - 1)
    idx = X.index
    entries = {}
    for j, s in enumerate(cols):
        for k in range(len(s)):
            entries[(idx[s[:k] + s[k + 1:]], j)] = 1 if k % 2 == 0 else -1
    return SparseMatrix(len(rows), len(cols), entries)


def boundary_matrix(X: SimplicialComplex, i: int, F: Field, augmented: bool = False) -> SparseMatrix:
    """Matrix of ``∂_i : C_i → C_{i-1}`` in lexicographic simplex order.

    For ``i = 0`` this is the 1×n augmentation row when ``augmented`` is set
    and the 0×n matrix otherwise.
    """
    if not 0 <= i <= X.dim:
        raise DimensionError(f"boundary index {i} outside [0, {X.dim}]")
    if i == 0 and not augmented:
        return SparseMatrix(0, len(X.simplices_of_dim(0)))
    M = _boundary_entries(X, i)
    return SparseMatrix(M.rows, M.cols, {k: F.coerce(v) for k, v in M.entries.items()})


@dataclass(frozen=True)
class BettiVector:
    """Reduced Betti numbers. Indexing outside the stored range gives 0,
    which is the true value there."""

    values: tuple[int, ...]  # degrees -1, 0, ..., top

    def __getitem__(self, degree: int) -> int:
        i = degree + 1
        if 0 <= i < len(self.values):
            return self.values[i]
        return 0

    def as_dict(self) -> dict[int, int]:
        return {d - 1: v for d, v in enumerate(self.values)}

    @property
    def top(self) -> int:
        return len(self.values) - 2

    def degrees(self) -> range:
        return range(-1, self.top + 1)

    def euler(self) -> int:
        """Reduced Euler characteristic ``Σ (-1)^i β̃_i`` (degree -1 included)."""
        return sum((-1) ** d * self[d] for d in self.degrees())

    def is_acyclic(self) -> bool:
        return not any(self.values)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.as_dict().items())

    def _trimmed(self) -> tuple[int, ...]:
        v = self.values
        n = len(v)
        while n > 1 and v[n - 1] == 0:
            n -= 1
        return v[:n]

    def __eq__(self, other):
        # trailing zeros carry no information
        if not isinstance(other, BettiVector):
            return NotImplemented
        return self._trimmed() == other._trimmed()

    def __hash__(self):
        return hash(self._trimmed())


@lru_cache(maxsize=65536)
def reduced_betti(X: SimplicialComplex, F: Field) -> BettiVector:
    if X.is_empty:
        return BettiVector((1,))
    top = X.dim
    ranks = [rank(_boundary_entries(X, i), F) for i in range(top + 1)] + [0]
    vals = [0]
    for i in range(top + 1):
        n_i = len(X.simplices_of_dim(i))
        vals.append(n_i - ranks[i] - ranks[i + 1])
    return BettiVector(tuple(vals))


def betti(X: SimplicialComplex, degree: int, F: Field) -> int:
    return reduced_betti(X, F)[degree]


@lru_cache(maxsize=1024)
def _image_span(X: SimplicialComplex, d: int, F: Field) -> ColumnSpan:
    """Column span of ∂_{d+1}: the d-boundaries of X."""
    span = ColumnSpan(F, track=True)
    if d + 1 <= X.dim:
        for col in _boundary_entries(X, d + 1).columns(F):
            span.add(col)
    return span


def is_cycle(z: Chain) -> bool:
    return z.dim == -1 or boundary(z, augmented=True).is_zero()


def fill(X: SimplicialComplex, z: Chain, F: Field | None = None) -> Chain | None:
    """A chain ``c`` in ``X`` with ``∂c = z``, or None if ``z`` is not a boundary."""
    F = F or z.field
    if F != z.field:
        raise DimensionError("field mismatch between chain and request")
    d = z.dim
    if d == -1:
        # ∂_0 is the augmentation: a·() is a·ε(v) for any vertex v
        a = z.coefficient(())
        if a == 0:
            return Chain.zero(0, F)
        if X.is_empty:
            return None
        return Chain.simplex(X.vertices[:1], F, a)
    for s in z.terms:
        if s not in X.simplices:
            raise ComplexError(f"simplex {s} of the chain is not in the complex")
    if not is_cycle(z):
        raise NotACycleError("fill() needs a cycle (augmented at dimension 0)")
    if z.is_zero():
        return Chain.zero(d + 1, F)
    x = _image_span(X, d, F).solve(z.to_vector(X.index))
    if x is None:
        return None
    cols = X.simplices_of_dim(d + 1)
    c = Chain(d + 1, {cols[j]: v for j, v in x.items()}, F)
    assert boundary(c) == z
    return c


def is_boundary(X: SimplicialComplex, z: Chain) -> bool:
    return fill(X, z) is not None


def fundamental_class(M: SimplicialComplex, F: Field) -> Chain | None:
    """Unit-coefficient cycle on all facets of a pseudomanifold, if any.

    Signs are propagated across the dual graph: adjacent facets must induce
    opposite coefficients on their shared ridge. Over F2 the all-ones chain
    is returned directly. ``None`` means no such cycle exists (for example a
    non-orientable surface in odd characteristic).
    """
    report = is_pseudomanifold(M)
    if not report.is_pseudomanifold:
        raise PreconditionError(f"not a pseudomanifold: {report}")
    facets = M.facets
    if F.kind == "F2":
        z = Chain(report.dimension, {f: 1 for f in facets}, F)
        return z if is_cycle(z) else None
    inc = ridge_incidence(M)
    sign: dict[Simplex, int] = {facets[0]: 1}
    queue = deque([facets[0]])
    while queue:
        f = queue.popleft()
        for i, r in enumerate(ridges_of(f)):
            induced_f = sign[f] * (1 if i % 2 == 0 else -1)
            for g in inc[r]:
                if g == f:
                    continue
                j = ridges_of(g).index(r)
                # need sign[g] * (-1)^j == -induced_f
                want = -induced_f * (1 if j % 2 == 0 else -1)
                if g in sign:
                    if sign[g] != want:
                        return None
                else:
                    sign[g] = want
                    queue.append(g)
    z = Chain(report.dimension, {f: sign[f] for f in facets}, F)
    return z if is_cycle(z) else None
