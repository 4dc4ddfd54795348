"""Finite abstract simplicial complexes.

A complex is stored as its full, downward-closed family of simplices. A
simplex is a nonempty tuple of strictly ascending nonnegative integers; the
empty set is never a simplex. All iteration orders are deterministic:
simplices are listed by dimension, then lexicographically.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import ComplexError

Simplex = tuple[int, ...]


def canonical(vertices: Iterable[int]) -> Simplex:
    """Return the canonical (sorted, deduplicated) form of a vertex set."""
    s = tuple(sorted(set(vertices)))
    if not s:
        raise ComplexError("the empty set is not a simplex")
    for v in s:
        if not isinstance(v, int) or isinstance(v, bool) or v < 0:
            raise ComplexError(f"vertex ids must be nonnegative integers, got {v!r}")
    return s


def faces(simplex: Simplex) -> Iterator[Simplex]:
    """All nonempty faces of ``simplex`` (including itself)."""
    for r in range(1, len(simplex) + 1):
        yield from combinations(simplex, r)


def _closure(generators: Iterable[Simplex]) -> frozenset[Simplex]:
    out: set[Simplex] = set()
    # largest first, so whole subtrees are skipped once seen
    for s in sorted(set(generators), key=len, reverse=True):
        if s in out:
            continue
        for f in faces(s):
            out.add(f)
    return frozenset(out)


@dataclass(frozen=True, eq=True)
class SimplicialComplex:
    """Downward-closed set of simplices over integer vertex ids.

    Use :meth:`from_facets` to build one; the constructor trusts that
    ``simplices`` is already closed (pass ``check=True`` through
    :meth:`from_simplices` to validate).
    """

    simplices: frozenset = field(default_factory=frozenset)

    # -- construction -------------------------------------------------------

    @classmethod
    def from_facets(cls, facets: Iterable[Iterable[int]]) -> "SimplicialComplex":
        return cls(_closure(canonical(f) for f in facets))

    @classmethod
    def from_simplices(cls, simplices: Iterable[Iterable[int]], check: bool = True) -> "SimplicialComplex":
        simps = frozenset(canonical(s) for s in simplices)
        if check:
            for s in simps:
                if len(s) > 1:
                    for i in range(len(s)):
                        face = s[:i] + s[i + 1:]
                        if face not in simps:
                            raise ComplexError(f"not downward closed: {face} missing below {s}")
        return cls(simps)

    @classmethod
    def empty(cls) -> "SimplicialComplex":
        return cls(frozenset())

    @classmethod
    def full_simplex(cls, vertices: Iterable[int]) -> "SimplicialComplex":
        return cls.from_facets([tuple(vertices)])

    # -- basic queries ------------------------------------------------------

    def __contains__(self, simplex) -> bool:
        return tuple(simplex) in self.simplices

    def __len__(self) -> int:
        return len(self.simplices)

    def __iter__(self) -> Iterator[Simplex]:
        return iter(self.ordered)

    def __bool__(self) -> bool:
        return bool(self.simplices)

    def __le__(self, other: "SimplicialComplex") -> bool:
        return self.simplices <= other.simplices

    def __or__(self, other: "SimplicialComplex") -> "SimplicialComplex":
        return SimplicialComplex(self.simplices | other.simplices)

    def __and__(self, other: "SimplicialComplex") -> "SimplicialComplex":
        return SimplicialComplex(self.simplices & other.simplices)

    def __repr__(self) -> str:
        return f"SimplicialComplex(facets={[list(f) for f in self.facets]})"

    @property
    def is_empty(self) -> bool:
        return not self.simplices

    @cached_property
    def ordered(self) -> tuple[Simplex, ...]:
        return tuple(sorted(self.simplices, key=lambda s: (len(s), s)))

    @cached_property
    def by_dim(self) -> dict[int, tuple[Simplex, ...]]:
        out: dict[int, list[Simplex]] = {}
        for s in self.ordered:
            out.setdefault(len(s) - 1, []).append(s)
        return {d: tuple(v) for d, v in out.items()}

    def simplices_of_dim(self, d: int) -> tuple[Simplex, ...]:
        return self.by_dim.get(d, ())

    @cached_property
    def index(self) -> dict[Simplex, int]:
        """Position of each simplex within its dimension (lexicographic)."""
        return {s: i for simps in self.by_dim.values() for i, s in enumerate(simps)}

    @cached_property
    def dim(self) -> int:
        return max(self.by_dim, default=-1)

    @cached_property
    def vertices(self) -> tuple[int, ...]:
        return tuple(s[0] for s in self.simplices_of_dim(0))

    @cached_property
    def facets(self) -> tuple[Simplex, ...]:
        """Inclusion-maximal simplices, ordered lexicographically."""
        covered: set[Simplex] = set()
        for s in self.simplices:
            for i in range(len(s)):
                if len(s) > 1:
                    covered.add(s[:i] + s[i + 1:])
        return tuple(sorted(s for s in self.simplices if s not in covered))

    def f_vector(self) -> list[int]:
        return [len(self.simplices_of_dim(d)) for d in range(self.dim + 1)]

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * n for d, n in enumerate(self.f_vector()))

    def is_downward_closed(self) -> bool:
        return all(
            s[:i] + s[i + 1:] in self.simplices
            for s in self.simplices if len(s) > 1
            for i in range(len(s))
        )

    # -- constructions ------------------------------------------------------

    def skeleton(self, dim: int) -> "SimplicialComplex":
        if dim < -1:
            raise ComplexError(f"skeleton dimension must be >= -1, got {dim}")
        return SimplicialComplex(frozenset(s for s in self.simplices if len(s) <= dim + 1))

    def induced(self, vertex_set: Iterable[int]) -> "SimplicialComplex":
        """Subcomplex of simplices whose vertices all lie in ``vertex_set``."""
        u = set(vertex_set)
        return SimplicialComplex(frozenset(s for s in self.simplices if u.issuperset(s)))

    def link(self, v: int) -> "SimplicialComplex":
        if (v,) not in self.simplices:
            raise ComplexError(f"vertex {v} is not in the complex")
        out = set()
        for s in self.simplices:
            if v in s and len(s) > 1:
                out.add(tuple(x for x in s if x != v))
        return SimplicialComplex(frozenset(out))

    def star(self, v: int) -> "SimplicialComplex":
        """Closed star: all simplices containing ``v`` and their faces."""
        if (v,) not in self.simplices:
            raise ComplexError(f"vertex {v} is not in the complex")
        return SimplicialComplex(_closure(s for s in self.simplices if v in s))

    def cone(self, apex: int) -> "SimplicialComplex":
        if (apex,) in self.simplices:
            raise ComplexError(f"cone apex {apex} already a vertex")
        gens = [canonical(s + (apex,)) for s in self.simplices] + [(apex,)]
        return SimplicialComplex(frozenset(self.simplices) | frozenset(gens))

    def relabel(self, mapping) -> "SimplicialComplex":
        """Apply an injective vertex relabelling."""
        return SimplicialComplex(frozenset(tuple(sorted(mapping[v] for v in s)) for s in self.simplices))


def from_facets(facets: Iterable[Iterable[int]]) -> SimplicialComplex:
    return SimplicialComplex.from_facets(facets)


def skeleton(X: SimplicialComplex, dim: int) -> SimplicialComplex:
    return X.skeleton(dim)


def induced(X: SimplicialComplex, vertex_set: Iterable[int]) -> SimplicialComplex:
    return X.induced(vertex_set)


def union(*complexes: SimplicialComplex) -> SimplicialComplex:
    out: frozenset = frozenset()
    for c in complexes:
        out = out | c.simplices
    return SimplicialComplex(out)


def intersection(first: SimplicialComplex, *rest: SimplicialComplex) -> SimplicialComplex:
    out = first.simplices
    for c in rest:
        out = out & c.simplices
    return SimplicialComplex(out)


def link(X: SimplicialComplex, v: int) -> SimplicialComplex:
    return X.link(v)


@dataclass(frozen=True)
class Subdivision:
    """Barycentric subdivision ``sd X`` with its vertex-to-simplex map.

    Vertex ``i`` of :attr:`complex` stands for the simplex ``source[i]`` of
    :attr:`base`; ids follow the lexicographic order of the source simplices.
    """

    base: SimplicialComplex
    complex: SimplicialComplex
    source: tuple[Simplex, ...]

    @cached_property
    def id_of(self) -> dict[Simplex, int]:
        return {s: i for i, s in enumerate(self.source)}

    def chain_of(self, sd_simplex: Sequence[int]) -> tuple[Simplex, ...]:
        """Source simplices of an sd simplex, smallest first."""
        return tuple(sorted((self.source[i] for i in sd_simplex), key=len))

    def restrict(self, sub: SimplicialComplex) -> SimplicialComplex:
        """``sd sub`` as a subcomplex of ``sd base``."""
        if not sub <= self.base:
            raise ComplexError("restrict() needs a subcomplex of the base")
        return self.complex.induced(self.id_of[s] for s in sub.simplices)


def barycentric_subdivision(X: SimplicialComplex) -> Subdivision:
    if X.is_empty:
        raise ComplexError("barycentric subdivision of the empty complex")
    source = tuple(sorted(X.simplices))
    id_of = {s: i for i, s in enumerate(source)}
    # maximal chains ending at each simplex, built bottom-up by dimension
    chains: dict[Simplex, list[tuple[int, ...]]] = {}
    for s in X.ordered:
        if len(s) == 1:
            chains[s] = [(id_of[s],)]
            continue
        acc = []
        for i in range(len(s)):
            for c in chains[s[:i] + s[i + 1:]]:
                acc.append(c + (id_of[s],))
        chains[s] = acc
    top = [tuple(sorted(c)) for f in X.facets for c in chains[f]]
    return Subdivision(X, SimplicialComplex.from_facets(top), source)
