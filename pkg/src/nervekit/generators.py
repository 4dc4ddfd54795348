"""Deterministic fixtures and seeded random generators.

Every random generator takes an explicit integer seed and uses its own
``random.Random`` instance, so identical arguments give identical output.
"""

from __future__ import annotations

import random
from itertools import combinations
from typing import Iterable, Sequence

import networkx as nx

from .complex import SimplicialComplex
from .errors import ComplexError, PreconditionError
from .nerve import Cover
from .sperner import ColouredComplex


def full_simplex(n: int) -> SimplicialComplex:
    """``Δ_n`` on vertices ``0..n``."""
    return SimplicialComplex.full_simplex(range(n + 1))


def simplex_boundary(m: int) -> SimplicialComplex:
    """``∂Δ_m`` on vertices ``0..m``."""
    if m < 1:
        raise PreconditionError("simplex boundary needs m >= 1")
    return SimplicialComplex.from_facets(combinations(range(m + 1), m))


def circle(n: int = 3) -> SimplicialComplex:
    if n < 3:
        raise PreconditionError("a simplicial circle needs at least 3 vertices")
    return SimplicialComplex.from_facets((i, (i + 1) % n) for i in range(n))


def path(n: int) -> SimplicialComplex:
    """Path on vertices ``0..n-1``."""
    if n == 1:
        return SimplicialComplex.from_facets([(0,)])
    return SimplicialComplex.from_facets((i, i + 1) for i in range(n - 1))


def octahedron() -> SimplicialComplex:
    """Boundary of the cross-polytope; antipodal pairs (0,1), (2,3), (4,5)."""
    return SimplicialComplex.from_facets(
        (a, b, c) for a in (0, 1) for b in (2, 3) for c in (4, 5)
    )


def coloured_octahedron() -> ColouredComplex:
    return ColouredComplex.from_classes(octahedron(), [(0, 1), (2, 3), (4, 5)])


def torus7() -> SimplicialComplex:
    """Seven-vertex torus: triangles ``{i, i+1, i+3}`` and ``{i, i+2, i+3}`` mod 7."""
    tris = []
    for i in range(7):
        tris.append((i, (i + 1) % 7, (i + 3) % 7))
        tris.append((i, (i + 2) % 7, (i + 3) % 7))
    return SimplicialComplex.from_facets(tris)


def rp2_6() -> SimplicialComplex:
    """Six-vertex real projective plane (hemi-icosahedron)."""
    return SimplicialComplex.from_facets([
        (0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 1, 5),
        (1, 2, 4), (2, 3, 5), (1, 3, 4), (1, 3, 5), (2, 4, 5),
    ])


def grid_torus(rows: int, cols: int) -> SimplicialComplex:
    """Torus from a ``rows × cols`` grid, each square cut along one diagonal.

    Vertex ``(r, c)`` has id ``r * cols + c``.
    """
    if rows < 3 or cols < 3:
        raise PreconditionError("grid torus needs rows >= 3 and cols >= 3")

    def v(r, c):
        return (r % rows) * cols + (c % cols)

    tris = []
    for r in range(rows):
        for c in range(cols):
            tris.append((v(r, c), v(r + 1, c), v(r + 1, c + 1)))
            tris.append((v(r, c), v(r, c + 1), v(r + 1, c + 1)))
    return SimplicialComplex.from_facets(tris)


def banded_torus(rows: int = 3, cols: int = 3, band_assignment: Sequence[int] | None = None) -> ColouredComplex:
    """Grid torus coloured by row bands.

    ``band_assignment[r]`` is the colour of row ``r``; by default rows are
    split into three contiguous bands. Bands must be contiguous cyclically,
    so each colour class induces an annulus around the torus.
    """
    if band_assignment is None:
        band_assignment = [min(3 * r // rows, 2) for r in range(rows)]
    bands = list(band_assignment)
    if len(bands) != rows:
        raise PreconditionError("band assignment must give a colour for every row")
    if sorted(set(bands)) != [0, 1, 2]:
        raise PreconditionError("banded torus needs exactly three bands 0, 1, 2")
    changes = sum(1 for r in range(rows) if bands[r] != bands[(r + 1) % rows])
    if changes != 3:
        raise PreconditionError("bands must be contiguous around the cycle of rows")
    K = grid_torus(rows, cols)
    colour_of = {r * cols + c: bands[r] for r in range(rows) for c in range(cols)}
    return ColouredComplex(K, colour_of, 2)


def random_complex(n: int, d: int, p: float, seed: int) -> SimplicialComplex:
    """Full ``(d-1)``-skeleton on ``n`` vertices plus each ``d``-simplex with
    probability ``p``."""
    if not 1 <= d <= n - 1:
        raise PreconditionError(f"need 1 <= d <= n-1, got n={n}, d={d}")
    if not 0 <= p <= 1:
        raise PreconditionError("p must lie in [0, 1]")
    rng = random.Random(seed)
    gens = list(combinations(range(n), d))
    gens += [s for s in combinations(range(n), d + 1) if rng.random() < p]
    return SimplicialComplex.from_facets(gens)


def random_facet_complex(n: int, n_facets: int, max_dim: int, seed: int) -> SimplicialComplex:
    """Closure of ``n_facets`` random simplices of dimension ``1..max_dim``
    on ``n`` vertices; every vertex is kept as at least a point."""
    rng = random.Random(seed)
    gens: list[tuple[int, ...]] = [(v,) for v in range(n)]
    for _ in range(n_facets):
        k = rng.randint(1, min(max_dim, n - 1)) + 1
        gens.append(tuple(sorted(rng.sample(range(n), k))))
    return SimplicialComplex.from_facets(gens)


def random_cover(X: SimplicialComplex, parts: int, seed: int, overlap: float = 0.35) -> Cover:
    """Cover of ``X`` whose members are unions of closed facets.

    Each facet goes to one random member, then to each other member with
    probability ``overlap``; members that end up empty receive a random
    facet. ``parts = 1`` gives ``[X]``.
    """
    if parts < 1:
        raise PreconditionError("a cover needs at least one part")
    if X.is_empty:
        raise PreconditionError("cannot cover the empty complex")
    if parts == 1:
        return Cover(X, (X,))
    rng = random.Random(seed)
    facets = list(X.facets)
    groups: list[list] = [[] for _ in range(parts)]
    for f in facets:
        home = rng.randrange(parts)
        for j in range(parts):
            if j == home or rng.random() < overlap:
                groups[j].append(f)
    for g in groups:
        if not g:
            g.append(rng.choice(facets))
    return Cover(X, tuple(SimplicialComplex.from_facets(g) for g in groups))


def random_colouring(X: SimplicialComplex, m: int, seed: int, max_tries: int = 10_000) -> ColouredComplex:
    """Uniform colours ``0..m`` per vertex, re-rolled until no class is empty."""
    V = X.vertices
    if len(V) < m + 1:
        raise PreconditionError(f"{len(V)} vertices cannot fill {m + 1} colour classes")
    rng = random.Random(seed)
    for _ in range(max_tries):
        colour_of = {v: rng.randint(0, m) for v in V}
        if len(set(colour_of.values())) == m + 1:
            return ColouredComplex(X, colour_of, m)
    raise PreconditionError("could not draw a colouring with all classes nonempty")


def random_sphere(d: int, steps: int, seed: int) -> SimplicialComplex:
    """A ``d``-sphere obtained from ``∂Δ_{d+1}`` by random stellar
    subdivisions of facets and edges (stays a pseudomanifold)."""
    if d < 1:
        raise PreconditionError("random sphere needs d >= 1")
    rng = random.Random(seed)
    facets = {tuple(f) for f in combinations(range(d + 2), d + 1)}
    nxt = d + 2
    for _ in range(steps):
        if rng.random() < 0.5:
            f = rng.choice(sorted(facets))
            facets.remove(f)
            for i in range(len(f)):
                facets.add(tuple(sorted(f[:i] + f[i + 1:] + (nxt,))))
        else:
            f = rng.choice(sorted(facets))
            a, b = sorted(rng.sample(f, 2))
            star = [g for g in facets if a in g and b in g]
            for g in star:
                facets.remove(g)
                rest = tuple(x for x in g if x not in (a, b))
                facets.add(tuple(sorted(rest + (a, nxt))))
                facets.add(tuple(sorted(rest + (b, nxt))))
        nxt += 1
    return SimplicialComplex.from_facets(facets)


# -- graphs -------------------------------------------------------------------------------

def clique_complex(G: nx.Graph) -> SimplicialComplex:
    """All cliques of ``G`` as simplices. Vertices must be nonnegative ints."""
    if any(u == v for u, v in G.edges()):
        raise ComplexError("clique complex of a graph with loops")
    return SimplicialComplex.from_facets(tuple(c) for c in nx.find_cliques(G))


MAX_DOMINATION_VERTICES = 24


def total_domination_number(G: nx.Graph) -> int | None:
    """Smallest ``D`` with every vertex adjacent to some member of ``D``.

    A vertex is not its own neighbour. Returns ``None`` when some vertex is
    isolated (no totally dominating set exists).
    """
    nodes = sorted(G.nodes())
    if len(nodes) > MAX_DOMINATION_VERTICES:
        raise PreconditionError(f"exhaustive search capped at {MAX_DOMINATION_VERTICES} vertices")
    if not nodes:
        return 0
    pos = {v: i for i, v in enumerate(nodes)}
    # nbr[i]: bitmask of vertices that i dominates
    nbr = [0] * len(nodes)
    for u, v in G.edges():
        if u != v:
            nbr[pos[u]] |= 1 << pos[v]
            nbr[pos[v]] |= 1 << pos[u]
    if any(b == 0 for b in nbr):
        return None
    full = (1 << len(nodes)) - 1
    for size in range(1, len(nodes) + 1):
        for D in combinations(range(len(nodes)), size):
            acc = 0
            for i in D:
                acc |= nbr[i]
            if acc == full:
                return size
    return None


def dense_coloured_graph(n: int, p_missing: float, seed: int) -> tuple[nx.Graph, dict[int, int]]:
    """Random graph on ``0..n-1`` missing each edge with probability
    ``p_missing``, plus a three-colouring with every colour used."""
    rng = random.Random(seed)
    G = nx.Graph()
    G.add_nodes_from(range(n))
    G.add_edges_from(e for e in combinations(range(n), 2) if rng.random() >= p_missing)
    while True:
        colours = {v: rng.randint(0, 2) for v in range(n)}
        if len(set(colours.values())) == 3:
            return G, colours


def graph_example_hypotheses(G: nx.Graph, colours: dict[int, int]) -> bool:
    """Graph-side conditions: every colour present, removing the edges
    between any two colours keeps ``G`` connected, and the complement has
    total domination number at least 5."""
    if set(colours.values()) != {0, 1, 2}:
        return False
    for a, b in combinations(range(3), 2):
        H = G.copy()
        H.remove_edges_from([(u, v) for u, v in G.edges() if {colours[u], colours[v]} == {a, b}])
        if not nx.is_connected(H):
            return False
    gt = total_domination_number(nx.complement(G))
    return gt is None or gt >= 5


def find_graph_example(seed: int, n: int = 9, p_missing: float = 0.2, tries: int = 500):
    """First seeded instance satisfying :func:`graph_example_hypotheses`."""
    for t in range(tries):
        G, colours = dense_coloured_graph(n, p_missing, seed * 100_003 + t)
        if graph_example_hypotheses(G, colours):
            return G, colours, t
    raise PreconditionError("no graph example found within the try budget")


def random_partite_complex(class_sizes: Sequence[int], p: float, seed: int) -> ColouredComplex:
    """Random subcomplex of the join of the colour classes.

    Each rainbow simplex of the join is kept with probability ``p``; no
    edge is monochromatic, so every vertex is isolated on its colour.
    """
    if any(s < 1 for s in class_sizes):
        raise PreconditionError("colour classes must be nonempty")
    rng = random.Random(seed)
    classes, nxt = [], 0
    for s in class_sizes:
        classes.append(list(range(nxt, nxt + s)))
        nxt += s
    gens: list[tuple[int, ...]] = [(v,) for c in classes for v in c]
    for choice in _product(classes):
        if rng.random() < p:
            gens.append(tuple(sorted(choice)))
    return ColouredComplex.from_classes(SimplicialComplex.from_facets(gens), classes)


def _product(classes):
    if not classes:
        yield ()
        return
    for v in classes[0]:
        for rest in _product(classes[1:]):
            yield (v,) + rest


def cut_arc_cover() -> Cover:
    """Three arcs of a hexagon with the edge {5, 0} deleted from the host.

    The nerve is still a circle while the host is a path, so the union nerve
    theorem's conclusion fails at ``l = 1``; only the pairwise-union
    connectivity conditions are violated.
    """
    host = path(6)
    arcs = (
        SimplicialComplex.from_facets([(0, 1), (1, 2)]),
        SimplicialComplex.from_facets([(2, 3), (3, 4)]),
        SimplicialComplex.from_facets([(4, 5), (0,)]),
    )
    return Cover(host, arcs)


def circle_arc_cover(n: int = 6) -> Cover:
    """Three arcs covering an ``n``-gon, pairwise meeting, no common point."""
    if n < 6 or n % 3:
        raise PreconditionError("circle_arc_cover needs n >= 6 divisible by 3")
    X = circle(n)
    t = n // 3
    arcs = []
    for j in range(3):
        vs = [(j * t + i) % n for i in range(t + 1)]
        arcs.append(SimplicialComplex.from_facets(zip(vs, vs[1:])))
    return Cover(X, tuple(arcs))
