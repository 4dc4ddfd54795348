"""Coloured complexes, rainbow and colourful simplices, and the Meshulam
family of checkers (plain, remixed, isolated-vertex, discrete colour
classes, polytopal).

Every ``check_*`` recomputes its conclusion; when all hypotheses pass and
the conclusion fails it raises :class:`~nervekit.errors.TheoremViolation`.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .complex import Simplex, SimplicialComplex
from .errors import ComplexError, PreconditionError, TheoremViolation
from .homology import Chain, betti, boundary, fill, fundamental_class
from .linalg import Field
from .pseudomanifold import (PseudomanifoldReport, dual_components, is_pseudomanifold,
                             ridge_incidence, ridges_of)
from .reports import HypothesisCheck, HypothesisReport

__all__ = [
    "ColouredComplex", "PseudomanifoldReport", "is_pseudomanifold",
    "sub_by_colours", "tilde_K", "rainbow_simplices", "colourful_simplices",
    "check_meshulam", "check_remixed", "check_isolated", "check_discrete",
    "polytopal_meshulam", "count_lemma_check",
]


@dataclass(frozen=True, eq=False)
class ColouredComplex:
    """A complex with every vertex assigned a colour in ``0..m``.

    Colour classes may be empty; checkers that need nonempty classes say so
    through their hypotheses.
    """

    complex: SimplicialComplex
    colour_of: Mapping[int, int]
    m: int

    def __post_init__(self):
        object.__setattr__(self, "colour_of", dict(sorted(self.colour_of.items())))
        if self.m < 0:
            raise ComplexError("m must be >= 0")
        for v in self.complex.vertices:
            if v not in self.colour_of:
                raise ComplexError(f"vertex {v} has no colour")
        for v, c in self.colour_of.items():
            if not 0 <= c <= self.m:
                raise ComplexError(f"colour {c} of vertex {v} outside 0..{self.m}")
            if (v,) not in self.complex:
                raise ComplexError(f"coloured vertex {v} is not in the complex")

    @classmethod
    def from_classes(cls, K: SimplicialComplex, classes: Sequence[Iterable[int]]) -> "ColouredComplex":
        colour_of = {}
        for i, vs in enumerate(classes):
            for v in vs:
                if v in colour_of:
                    raise ComplexError(f"vertex {v} in two colour classes")
                colour_of[v] = i
        return cls(K, colour_of, len(classes) - 1)

    @cached_property
    def classes(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in range(self.m + 1)]
        for v, c in self.colour_of.items():
            out[c].append(v)
        return tuple(tuple(sorted(c)) for c in out)

    @property
    def colours(self) -> range:
        return range(self.m + 1)

    def colour_set(self, simplex: Iterable[int]) -> frozenset[int]:
        return frozenset(self.colour_of[v] for v in simplex)

    def vertices_of(self, colours: Iterable[int]) -> set[int]:
        out: set[int] = set()
        for c in colours:
            out.update(self.classes[c])
        return out

    def nonempty_colour_sets(self) -> list[tuple[int, ...]]:
        """All nonempty ``S ⊆ {0..m}``, binary-counter order."""
        n = self.m + 1
        return [tuple(i for i in range(n) if mask >> i & 1) for mask in range(1, 1 << n)]


def sub_by_colours(K: ColouredComplex, S: Iterable[int]) -> SimplicialComplex:
    """``K_S``: the subcomplex induced by vertices with colours in ``S``."""
    S = set(S)
    if not S <= set(K.colours):
        raise PreconditionError(f"colours {sorted(S)} outside 0..{K.m}")
    return K.complex.induced(K.vertices_of(S))


def tilde_K(K: ColouredComplex, S: Iterable[int]) -> SimplicialComplex:
    """Simplices whose colour set does not contain all of ``S``."""
    S = frozenset(S)
    if not S:
        raise PreconditionError("tilde_K needs a nonempty colour set")
    if not S <= set(K.colours):
        raise PreconditionError(f"colours {sorted(S)} outside 0..{K.m}")
    return SimplicialComplex(frozenset(s for s in K.complex.simplices if not S <= K.colour_set(s)))


def colourful_simplices(K: ColouredComplex, dim: int) -> list[Simplex]:
    return [s for s in K.complex.simplices_of_dim(dim) if len(K.colour_set(s)) == len(s)]


def rainbow_simplices(K: ColouredComplex) -> list[Simplex]:
    """Simplices with exactly one vertex of every colour."""
    return colourful_simplices(K, K.m)


def _meshulam_report(K: ColouredComplex, F: Field) -> HypothesisReport:
    checks = []
    for S in K.nonempty_colour_sets():
        deg = len(S) - 2
        checks.append(HypothesisCheck(S, "K_S", deg, betti(sub_by_colours(K, S), deg, F)))
    return HypothesisReport("meshulam", tuple(checks))


@dataclass(frozen=True)
class SpernerResult:
    """Outcome of a rainbow-existence checker.

    ``hypotheses`` are the theorem's conditions in order; ``conclusion`` is
    the recomputed claim; ``rainbow`` lists witnessing simplices.
    """

    theorem: str
    hypotheses: tuple[HypothesisReport, ...]
    conclusion: bool
    rainbow: tuple[Simplex, ...] = ()
    details: dict = field(default_factory=dict)

    @property
    def hypotheses_pass(self) -> bool:
        return all(r.passed for r in self.hypotheses)

    @property
    def rainbow_count(self) -> int:
        return len(self.rainbow)


def _finish(result: SpernerResult, strict: bool) -> SpernerResult:
    if strict and result.hypotheses_pass and not result.conclusion:
        raise TheoremViolation(result.theorem, "hypotheses pass but conclusion fails", result)
    return result


def check_meshulam(K: ColouredComplex, F: Field, strict: bool = True) -> SpernerResult:
    """``β̃_{|S|-2}(K_S) = 0`` for all nonempty ``S`` ⇒ a rainbow simplex exists."""
    rep = _meshulam_report(K, F)
    rb = tuple(rainbow_simplices(K))
    return _finish(SpernerResult("meshulam", (rep,), bool(rb), rb), strict)


def remixed_reports(K: ColouredComplex, k: int, F: Field) -> tuple[HypothesisReport, ...]:
    m = K.m
    if not -1 <= k <= m - 1:
        raise PreconditionError(f"need -1 <= k <= m-1 = {m - 1}, got {k}")
    top = HypothesisReport("H_{m-1}(K)", (HypothesisCheck(tuple(K.colours), "K", m - 1, betti(K.complex, m - 1, F)),))
    inter, uni = [], []
    all_c = set(K.colours)
    for S in K.nonempty_colour_sets():
        size = len(S)
        if size <= k + 1:
            deg = k - size
            rest = tuple(sorted(all_c - set(S)))
            inter.append(HypothesisCheck(S, "K_{I-S}", deg, betti(sub_by_colours(K, rest), deg, F)))
        elif size <= m:
            deg = size - 2
            uni.append(HypothesisCheck(S, "tilde_K_S", deg, betti(tilde_K(K, S), deg, F)))
    return top, HypothesisReport("inter-s", tuple(inter)), HypothesisReport("union-s", tuple(uni))


def check_remixed(K: ColouredComplex, k: int, F: Field, strict: bool = True) -> SpernerResult:
    """Rainbow existence from ``β̃_{m-1}(K) = 0`` plus intersection-type
    conditions on small colour sets and union-type ones on large sets.
    ``k = -1`` uses only the ``tilde_K`` conditions."""
    reports = remixed_reports(K, k, F)
    rb = tuple(rainbow_simplices(K))
    return _finish(SpernerResult(f"remixed(k={k})", reports, bool(rb), rb), strict)


def is_isolated_on_colour(K: ColouredComplex, v: int) -> bool:
    c = K.colour_of[v]
    return not any(
        len(e) == 2 and v in e and K.colour_of[e[0] if e[1] == v else e[1]] == c
        for e in K.complex.simplices_of_dim(1)
    )


def check_isolated(K: ColouredComplex, v: int, F: Field, strict: bool = True) -> SpernerResult:
    """Meshulam hypotheses and ``v`` isolated on its colour ⇒ some rainbow
    simplex contains ``v``."""
    if (v,) not in K.complex:
        raise PreconditionError(f"vertex {v} not in the complex")
    if not is_isolated_on_colour(K, v):
        raise PreconditionError(f"vertex {v} has a neighbour of its own colour")
    rep = _meshulam_report(K, F)
    rb = tuple(s for s in rainbow_simplices(K) if v in s)
    return _finish(SpernerResult(f"isolated(v={v})", (rep,), bool(rb), rb, {"vertex": v}), strict)


def check_discrete(K: ColouredComplex, F: Field, strict: bool = True) -> SpernerResult:
    """Colour classes spanning no edge plus Meshulam hypotheses ⇒ every
    simplex lies in a rainbow simplex."""
    for e in K.complex.simplices_of_dim(1):
        if K.colour_of[e[0]] == K.colour_of[e[1]]:
            raise PreconditionError(f"edge {e} is monochromatic")
    rep = _meshulam_report(K, F)
    rb = tuple(rainbow_simplices(K))
    rb_sets = [set(r) for r in rb]
    stranded = tuple(s for s in K.complex.ordered if not any(r.issuperset(s) for r in rb_sets))
    res = SpernerResult("discrete", (rep,), not stranded, rb, {"stranded": stranded})
    return _finish(res, strict)


# -- counting lemma ------------------------------------------------------------

@dataclass(frozen=True)
class CountLemmaResult:
    n: int
    s: int
    support_size: int
    components: tuple[tuple[Simplex, ...], ...]
    active_components: tuple[int, ...]

    @property
    def bound(self) -> int:
        return self.n - self.s

    @property
    def bound_holds(self) -> bool:
        return self.support_size >= self.n - self.s


def count_lemma_check(c: Chain, F: Field | None = None, strict: bool = True) -> CountLemmaResult:
    """``|supp c| ≥ n - s`` when the supporting complex of ``∂c`` is an
    ``n``-vertex pseudomanifold and ``s = dim c``.

    Also reports the components of the support graph (adjacent simplices
    share a facet) and which components have nonzero boundary; exactly one
    should.
    """
    F = F or c.field
    if c.dim < 1:
        raise PreconditionError("counting lemma needs a chain of dimension >= 1")
    bd = boundary(c)
    if bd.is_zero():
        raise PreconditionError("∂c is zero; its supporting complex is empty")
    supp = bd.supporting_complex()
    report = is_pseudomanifold(supp)
    if not report.is_pseudomanifold:
        raise PreconditionError(f"supporting complex of ∂c is not a pseudomanifold: {report}")
    simplices = c.support
    inc: dict[Simplex, list[Simplex]] = defaultdict(list)
    for s in simplices:
        for r in ridges_of(s):
            inc[r].append(s)
    comps = dual_components(simplices, inc)
    active = []
    for i, comp in enumerate(comps):
        part = Chain(c.dim, {s: c.terms[s] for s in comp}, F)
        if not boundary(part).is_zero():
            active.append(i)
    res = CountLemmaResult(len(supp.vertices), c.dim, len(simplices),
                           tuple(tuple(x) for x in comps), tuple(active))
    if strict and (not res.bound_holds or len(active) != 1):
        raise TheoremViolation("count-lemma", f"|supp|={res.support_size}, n-s={res.bound}, "
                               f"active components={len(active)}", res)
    return res


# -- polytopal generalisation -----------------------------------------------------

@dataclass(frozen=True)
class PolytopalResult:
    m: int
    d: int
    hypotheses: tuple[HypothesisReport, ...]
    preconditions: tuple[str, ...]
    colourful_count: int | None = None
    support_size: int | None = None
    lambda_f_identity: bool | None = None
    support_preimages_colourful: bool | None = None
    chain_map: object = None
    fundamental: Chain | None = None
    filling: Chain | None = None
    projected: Chain | None = None

    @property
    def bound(self) -> int:
        return self.m - self.d

    @property
    def hypotheses_pass(self) -> bool:
        return not self.preconditions and all(r.passed for r in self.hypotheses)

    @property
    def conclusion(self) -> bool:
        return (self.colourful_count is not None and self.colourful_count >= self.bound
                and self.support_size is not None and self.support_size >= self.bound
                and bool(self.lambda_f_identity))


def colour_projection(K: ColouredComplex, c: Chain) -> Chain:
    """``λ♯``: push a chain of ``K`` to the simplex on colours."""
    return c.push_forward(K.colour_of)


def polytopal_meshulam(K: ColouredComplex, M: SimplicialComplex, F: Field, strict: bool = True) -> PolytopalResult:
    """Lower bound ``m - d`` on colourful ``(d+1)``-simplices of ``K`` for a
    ``d``-pseudomanifold ``M`` on the colour set.

    Two routes are computed: direct enumeration, and the constructive
    pipeline ``f♯`` (carried by ``σ ↦ K[⋃_{i∈σ} V_i]``) → fundamental class
    ``z`` → filling ``c'`` of ``f♯(z)`` → ``c = λ♯(c')`` → counting lemma.
    """
    from .constructive import CarrierAssignment, build_chain_map

    m = K.m
    pre: list[str] = []
    if M.is_empty:
        raise PreconditionError("M is empty")
    if set(M.vertices) != set(range(m + 1)):
        pre.append(f"vertex set of M is {list(M.vertices)}, expected 0..{m}")
    report = is_pseudomanifold(M)
    d = report.dimension
    if not report.is_pseudomanifold:
        pre.append(f"M is not a pseudomanifold: {report}")
    z = None
    if not pre:
        z = fundamental_class(M, F)
        if z is None:
            pre.append(f"M has no fundamental class over {F}")
    checks = []
    if not pre:
        for sigma in M.ordered:
            deg = len(sigma) - 2
            checks.append(HypothesisCheck(sigma, "K[V_sigma]", deg,
                                          betti(K.complex.induced(K.vertices_of(sigma)), deg, F)))
    hyp = HypothesisReport("carrier", tuple(checks))
    top = HypothesisReport("H_d(K)", (HypothesisCheck((), "K", d, betti(K.complex, d, F)),))
    res = PolytopalResult(m, d, (hyp, top), tuple(pre))
    if not res.hypotheses_pass:
        return res

    count = len(colourful_simplices(K, d + 1))
    carrier = CarrierAssignment(M, K.complex, lambda sigma: K.complex.induced(K.vertices_of(sigma)))
    f = build_chain_map(carrier, F, d)
    lam_f = all(colour_projection(K, f.image(s)) == Chain.simplex(s, F) for s in M.ordered)
    fz = f.apply(z)
    c_prime = fill(K.complex, fz)
    if c_prime is None:
        raise TheoremViolation("polytopal", "f♯(z) is not a boundary although β̃_d(K) = 0")
    c = colour_projection(K, c_prime)
    if boundary(c) != z:
        raise TheoremViolation("polytopal", "∂λ♯(c') differs from the fundamental class")
    count_res = count_lemma_check(c, F, strict=strict)
    colourful = set(colourful_simplices(K, d + 1))
    preimages = {s for s in c_prime.support if len(K.colour_set(s)) == len(s)}
    images = {tuple(sorted(K.colour_set(s))) for s in preimages}
    res = PolytopalResult(
        m, d, (hyp, top), (), count, count_res.support_size, lam_f,
        preimages <= colourful and set(c.support) <= images,
        f, z, c_prime, c,
    )
    if strict and not res.conclusion:
        raise TheoremViolation("polytopal", f"count={count}, support={count_res.support_size}, "
                               f"bound={res.bound}, λf=id: {lam_f}", res)
    return res
