"""Constructive procedures: chain maps built over acyclic carriers, homology
killing by attaching simplices, the subdivision chain map, and the ``A_i``
subcomplexes of a coloured subdivision."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable

from .complex import Simplex, SimplicialComplex, Subdivision, barycentric_subdivision
from .errors import CarrierError, PreconditionError, TheoremViolation
from .homology import Chain, betti, boundary, fill, reduced_betti
from .linalg import ColumnSpan, Field, SparseMatrix, nullspace_basis, rank
from .nerve import Cover, nerve
from .sperner import ColouredComplex


@dataclass
class CarrierAssignment:
    """Assigns each domain simplex a subcomplex of ``target``.

    Must be monotone (faces get subcomplexes of the simplex's subcomplex);
    :func:`build_chain_map` checks this along the way.
    """

    domain: SimplicialComplex
    target: SimplicialComplex
    assign: Callable[[Simplex], SimplicialComplex]
    _cache: dict = field(default_factory=dict, repr=False)

    def __call__(self, simplex: Simplex) -> SimplicialComplex:
        hit = self._cache.get(simplex)
        if hit is None:
            hit = self.assign(simplex)
            if not hit <= self.target:
                raise CarrierError(f"carrier of {simplex} leaves the target", simplex)
            self._cache[simplex] = hit
        return hit


@dataclass
class ChainMap:
    """Degree-0 linear map given by images of canonically oriented simplices."""

    domain: SimplicialComplex
    target: SimplicialComplex
    field: Field
    images: dict[Simplex, Chain]

    def image(self, simplex) -> Chain:
        return self.images[tuple(simplex)]

    def apply(self, c: Chain) -> Chain:
        out = Chain.zero(c.dim, self.field)
        for s, v in c.terms.items():
            if s not in self.images:
                raise KeyError(f"chain map undefined on {s}")
            out = out + self.images[s].scale(v)
        return out

    def commutes(self) -> bool:
        """``∂f(σ) = f(∂σ)`` on every simplex, augmentation at dimension 0."""
        F = self.field
        for s, img in self.images.items():
            if len(s) == 1:
                if img.augmentation() != F.one:
                    return False
            elif boundary(img) != self.apply(boundary(Chain.simplex(s, F))):
                return False
        return True

    def is_augmentation_preserving(self) -> bool:
        return all(img.augmentation() == self.field.one
                   for s, img in self.images.items() if len(s) == 1)


def build_chain_map(carrier: CarrierAssignment, F: Field, up_to_dim: int) -> ChainMap:
    """Extend a chain map dimension by dimension inside the carrier.

    Vertices go to the least vertex of their carrier; a higher simplex
    ``σ`` goes to the deterministic filling of ``f(∂σ)`` inside
    ``carrier(σ)``. Needs ``β̃_{dim σ - 1}(carrier(σ)) = 0``.
    """
    dom = carrier.domain
    images: dict[Simplex, Chain] = {}
    for s in range(0, min(up_to_dim, dom.dim) + 1):
        for sigma in dom.simplices_of_dim(s):
            A = carrier(sigma)
            if betti(A, s - 1, F) != 0:
                raise CarrierError(
                    f"carrier of {sigma} has β̃_{s - 1} = {betti(A, s - 1, F)} over {F}", sigma)
            if s == 0:
                images[sigma] = Chain.simplex(A.vertices[:1], F)
                continue
            for i in range(len(sigma)):
                face = sigma[:i] + sigma[i + 1:]
                if not carrier(face) <= A:
                    raise CarrierError(f"carrier not monotone at {face} ⊂ {sigma}", sigma)
            target_boundary = Chain.zero(s - 1, F)
            for i in range(len(sigma)):
                img = images[sigma[:i] + sigma[i + 1:]]
                target_boundary = target_boundary + (img if i % 2 == 0 else -img)
            c = fill(A, target_boundary)
            if c is None:
                raise TheoremViolation("chain-map", f"acyclic carrier of {sigma} failed to fill")
            images[sigma] = c
    return ChainMap(dom.skeleton(min(up_to_dim, dom.dim)), carrier.target, F, images)


# -- killing homology ----------------------------------------------------------------

def kill_homology(K: SimplicialComplex, d: int, F: Field) -> SimplicialComplex:
    """Attach simplices of dimension ≤ d so that ``β̃_i = 0`` for ``i < d``
    while ``β̃_i`` is unchanged for ``i ≥ d``.

    Adds the full ``(d-1)``-skeleton on ``V(K)``, then scans the missing
    ``d``-simplices in lexicographic order and keeps one exactly when its
    boundary is not yet a boundary (equivalently, filling it fails).
    Postconditions are verified before returning.
    """
    if K.is_empty:
        raise PreconditionError("kill_homology needs a nonempty complex")
    if d < 1:
        raise PreconditionError(f"kill_homology needs d >= 1, got {d}")
    V = K.vertices
    simps = set(K.simplices)
    for r in range(1, d + 1):
        simps.update(combinations(V, r))
    row = {t: i for i, t in enumerate(combinations(V, d))}

    def column(s: Simplex) -> dict[int, int]:
        return {row[s[:i] + s[i + 1:]]: (1 if i % 2 == 0 else -1) for i in range(len(s))}

    span = ColumnSpan(F)
    for s in sorted(x for x in simps if len(x) == d + 1):
        span.add(column(s))
    for cand in combinations(V, d + 1):
        if cand in simps:
            continue
        if span.add(column(cand)):
            simps.add(cand)
    out = SimplicialComplex(frozenset(simps))
    before, after = reduced_betti(K, F), reduced_betti(out, F)
    top = max(K.dim, out.dim)
    for i in range(-1, top + 1):
        want = 0 if i <= d - 1 else before[i]
        if after[i] != want:
            raise TheoremViolation("killing", f"degree {i}: got {after[i]}, expected {want}",
                                   {"before": before, "after": after})
    return out


# -- subdivision chain map ---------------------------------------------------------

def sd_chain_map(X: SimplicialComplex, F: Field, sd: Subdivision | None = None) -> tuple[ChainMap, Subdivision]:
    """``σ ↦`` signed sum of the top simplices of ``sd σ``.

    Built as the cone from the barycentre of ``σ`` over the image of
    ``∂σ``, which fixes the induced orientations.
    """
    if X.is_empty:
        raise PreconditionError("sd chain map of the empty complex")
    sd = sd or barycentric_subdivision(X)
    ids = sd.id_of
    ordered: dict[Simplex, list[tuple[tuple[int, ...], int]]] = {}
    images: dict[Simplex, Chain] = {}
    for s in X.ordered:
        if len(s) == 1:
            terms = [((ids[s],), 1)]
        else:
            terms = []
            for i in range(len(s)):
                sg = 1 if i % 2 == 0 else -1
                terms.extend(((ids[s],) + t, sg * e) for t, e in ordered[s[:i] + s[i + 1:]])
        ordered[s] = terms
        acc = Chain.zero(len(s) - 1, F)
        for t, e in terms:
            acc = acc + Chain.simplex(t, F, e)
        images[s] = acc
    f = ChainMap(X, sd.complex, F, images)
    return f, sd


# -- A_i subcomplexes ----------------------------------------------------------------

def build_Ai(K: ColouredComplex, i: int, sd: Subdivision | None = None) -> SimplicialComplex:
    """Subcomplex of ``sd K`` induced by barycentres of simplices meeting
    colour class ``i``."""
    if not 0 <= i <= K.m:
        raise PreconditionError(f"colour {i} outside 0..{K.m}")
    if not K.classes[i]:
        raise PreconditionError(f"colour class {i} is empty")
    sd = sd or barycentric_subdivision(K.complex)
    cls = set(K.classes[i])
    keep = [j for j, src in enumerate(sd.source) if cls.intersection(src)]
    return sd.complex.induced(keep)


# -- nerve-side chain map ------------------------------------------------------------

def nerve_chain_map(cover: Cover, l: int, F: Field) -> tuple[ChainMap, Subdivision]:
    """Augmentation-preserving ``f♯ : C(N^l(Γ)) → C(sd X)`` with ``f♯(σ)``
    carried by ``sd ⋃σ``. Needs the union conditions up to dimension ``l``."""
    sd = barycentric_subdivision(cover.host)
    N = nerve(cover).skeleton(l)
    carrier = CarrierAssignment(N, sd.complex, lambda sigma: sd.restrict(cover.union(sigma)))
    return build_chain_map(carrier, F, l), sd


@dataclass(frozen=True)
class UnionNerveWitness:
    """Linear-algebra summary of ``φ : Z_l(N) → H̃_l(sd X)``."""

    cycles: int
    boundaries: int
    image_rank: int
    kernel_in_boundaries: bool

    @property
    def beta_nerve(self) -> int:
        return self.cycles - self.boundaries


def union_nerve_witness(cover: Cover, l: int, F: Field) -> UnionNerveWitness:
    """Build ``f♯`` and check that every cycle of the nerve sent to a
    boundary of ``sd X`` is itself a boundary of the nerve."""
    if l < 0:
        raise PreconditionError("union nerve witness needs l >= 0")
    f, sd = nerve_chain_map(cover, l, F)
    N = nerve(cover)
    dom = N.skeleton(l)
    if l > dom.dim:
        return UnionNerveWitness(0, 0, 0, True)
    from .homology import _boundary_entries

    Zbasis = nullspace_basis(_boundary_entries(dom, l), F)
    cols_l = dom.simplices_of_dim(l)
    cycles = [Chain(l, {cols_l[j]: v for j, v in vec.items()}, F) for vec in Zbasis]
    images = [f.apply(z) for z in cycles]
    T = sd.complex
    idx = T.index
    entries = {}
    for j, img in enumerate(images):
        for s, v in img.terms.items():
            entries[(idx[s], j)] = v
    nb = 0
    if l + 1 <= T.dim:
        Bsd = _boundary_entries(T, l + 1)
        nb = Bsd.cols
        for (r, c), v in Bsd.entries.items():
            entries[(r, len(images) + c)] = F.coerce(v)
    A = SparseMatrix(len(T.simplices_of_dim(l)), len(images) + nb, entries)
    B_rank = rank(_boundary_entries(T, l + 1), F) if nb else 0
    image_rank = rank(A, F) - B_rank
    kernel_ok = True
    for vec in nullspace_basis(A, F):
        z = Chain.zero(l, F)
        for j, v in vec.items():
            if j < len(cycles):
                z = z + cycles[j].scale(v)
        if not z.is_zero() and fill(N, z) is None:
            kernel_ok = False
            break
    boundaries = rank(_boundary_entries(N, l + 1), F) if l + 1 <= N.dim else 0
    return UnionNerveWitness(len(cycles), boundaries, image_rank, kernel_ok)
