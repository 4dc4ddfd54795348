"""Pseudomanifold validation and the facet dual graph."""

from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass

from .complex import Simplex, SimplicialComplex
from .errors import ComplexError


def ridges_of(facet: Simplex) -> list[Simplex]:
    """Codimension-one faces; for a vertex this is ``[()]`` (the empty ridge)."""
    return [facet[:i] + facet[i + 1:] for i in range(len(facet))]


def ridge_incidence(X: SimplicialComplex) -> dict[Simplex, list[Simplex]]:
    inc: dict[Simplex, list[Simplex]] = defaultdict(list)
    for f in X.facets:
        for r in ridges_of(f):
            inc[r].append(f)
    return inc


def dual_components(facets, incidence) -> list[list[Simplex]]:
    """Connected components of the facet graph (adjacent = shared ridge)."""
    adj: dict[Simplex, set[Simplex]] = defaultdict(set)
    for fs in incidence.values():
        for a in fs:
            for b in fs:
                if a != b:
                    adj[a].add(b)
    seen: set[Simplex] = set()
    comps = []
    for f in sorted(facets):
        if f in seen:
            continue
        comp, queue = [], deque([f])
        seen.add(f)
        while queue:
            g = queue.popleft()
            comp.append(g)
            for h in sorted(adj[g]):
                if h not in seen:
                    seen.add(h)
                    queue.append(h)
        comps.append(sorted(comp))
    return comps


@dataclass(frozen=True)
class PseudomanifoldReport:
    pure: bool
    non_branching: bool
    strongly_connected: bool
    dimension: int

    @property
    def is_pseudomanifold(self) -> bool:
        return self.pure and self.non_branching and self.strongly_connected

    def __bool__(self) -> bool:
        return self.is_pseudomanifold


def is_pseudomanifold(M: SimplicialComplex) -> PseudomanifoldReport:
    if M.is_empty:
        raise ComplexError("pseudomanifold check on the empty complex")
    facets = M.facets
    d = M.dim
    pure = all(len(f) == d + 1 for f in facets)
    inc = ridge_incidence(M)
    # with impure input only ridges of top facets are judged
    top_ridges = {r for f in facets if len(f) == d + 1 for r in ridges_of(f)}
    non_branching = all(len(inc[r]) == 2 for r in top_ridges)
    strongly_connected = len(dual_components(facets, inc)) == 1
    return PseudomanifoldReport(pure, non_branching, strongly_connected, d)
