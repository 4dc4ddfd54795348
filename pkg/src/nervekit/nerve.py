"""Covers, nerves, and checkers for the mixed nerve theorem and Helly-type
consequences.

A :class:`Cover` is an ordered collection of subcomplexes of a host; the
same subcomplex may appear more than once and each occurrence is a separate
nerve vertex. Subcollections are enumerated in binary-counter order over
member indices (mask 1, 2, 3, ...).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .complex import SimplicialComplex
from .errors import ComplexError, PreconditionError, TheoremViolation
from .homology import betti
from .linalg import Field
from .reports import HypothesisCheck, HypothesisReport

MAX_MEMBERS = 12


def _bits(mask: int) -> tuple[int, ...]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def _mask(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


@dataclass(frozen=True, eq=False)
class Cover:
    host: SimplicialComplex
    members: tuple[SimplicialComplex, ...]
    _inter: dict = field(default_factory=dict, repr=False, compare=False)
    _union: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(self.members))
        for i, m in enumerate(self.members):
            if not m <= self.host:
                raise ComplexError(f"cover member {i} is not a subcomplex of the host")

    @classmethod
    def of(cls, members: Sequence[SimplicialComplex], host: SimplicialComplex | None = None) -> "Cover":
        """Cover with ``host`` defaulting to the union of the members."""
        if host is None:
            acc: frozenset = frozenset()
            for m in members:
                acc = acc | m.simplices
            host = SimplicialComplex(acc)
        return cls(host, tuple(members))

    def __len__(self) -> int:
        return len(self.members)

    @cached_property
    def covers_host(self) -> bool:
        return self.union(range(len(self))) == self.host

    def _check_size(self, max_members: int):
        if len(self) > max_members:
            raise PreconditionError(
                f"{len(self)} members exceeds the enumeration cap {max_members}"
            )

    def intersection(self, indices: Iterable[int]) -> SimplicialComplex:
        mask = _mask(indices)
        if mask == 0:
            raise ValueError("intersection of an empty subcollection")
        hit = self._inter.get(mask)
        if hit is None:
            low = mask & -mask
            i = low.bit_length() - 1
            rest = mask ^ low
            if rest == 0:
                hit = self.members[i]
            else:
                hit = SimplicialComplex(self.intersection(_bits(rest)).simplices & self.members[i].simplices)
            self._inter[mask] = hit
        return hit

    def union(self, indices: Iterable[int]) -> SimplicialComplex:
        mask = _mask(indices)
        if mask == 0:
            return SimplicialComplex.empty()
        hit = self._union.get(mask)
        if hit is None:
            low = mask & -mask
            i = low.bit_length() - 1
            rest = mask ^ low
            if rest == 0:
                hit = self.members[i]
            else:
                hit = SimplicialComplex(self.union(_bits(rest)).simplices | self.members[i].simplices)
            self._union[mask] = hit
        return hit

    def subcollections(self) -> Iterator[tuple[int, ...]]:
        for mask in range(1, 1 << len(self)):
            yield _bits(mask)


def nerve(cover: Cover, max_members: int = MAX_MEMBERS) -> SimplicialComplex:
    """Complex on member indices; ``S`` is a simplex iff ``⋂_{i∈S}`` is nonempty."""
    cover._check_size(max_members)
    for i, m in enumerate(cover.members):
        if m.is_empty:
            raise ComplexError(f"cover member {i} is empty and cannot be a nerve vertex")
    simps = []
    alive = set()
    for mask in range(1, 1 << len(cover)):
        low = mask & -mask
        rest = mask ^ low
        if rest and rest not in alive:
            continue
        if not cover.intersection(_bits(mask)).is_empty:
            alive.add(mask)
            simps.append(_bits(mask))
    return SimplicialComplex(frozenset(simps))


def _require_covering(cover: Cover):
    if not cover.covers_host:
        raise PreconditionError("cover members do not cover the host")


def check_mixed_hypotheses(
    cover: Cover, k: int, l: int, F: Field, max_members: int = MAX_MEMBERS
) -> tuple[HypothesisReport, HypothesisReport]:
    """Reports for the intersection and union conditions.

    ``inter``: ``β̃_{k-|σ|}(⋂σ) = 0`` for nerve simplices of dimension ≤ k.
    ``union``: ``β̃_{|σ|-2}(⋃σ) = 0`` for nerve simplices with dimension in
    ``[k+1, l]``.
    """
    if not -1 <= k <= l < len(cover):
        raise PreconditionError(f"need -1 <= k <= l < |Γ|, got k={k}, l={l}, |Γ|={len(cover)}")
    _require_covering(cover)
    N = nerve(cover, max_members)
    inter, uni = [], []
    for sigma in sorted(N.simplices, key=_mask):
        size = len(sigma)
        if size - 1 <= k:
            deg = k - size
            inter.append(HypothesisCheck(sigma, "inter", deg, betti(cover.intersection(sigma), deg, F)))
        elif size - 1 <= l:
            deg = size - 2
            uni.append(HypothesisCheck(sigma, "union", deg, betti(cover.union(sigma), deg, F)))
    return HypothesisReport("inter", tuple(inter)), HypothesisReport("union", tuple(uni))


@dataclass(frozen=True)
class MixedConclusion:
    beta_nerve: int
    beta_host: int

    @property
    def holds(self) -> bool:
        return self.beta_nerve <= self.beta_host


def verify_mixed_conclusion(cover: Cover, l: int, F: Field, max_members: int = MAX_MEMBERS) -> MixedConclusion:
    """Compare ``β̃_l`` of the nerve and of the host. Never raises on failure."""
    _require_covering(cover)
    N = nerve(cover, max_members)
    return MixedConclusion(betti(N, l, F), betti(cover.host, l, F))


@dataclass(frozen=True)
class MixedNerveResult:
    k: int
    l: int
    inter: HypothesisReport
    union: HypothesisReport
    conclusion: MixedConclusion

    @property
    def hypotheses_pass(self) -> bool:
        return self.inter.passed and self.union.passed

    @property
    def holds(self) -> bool:
        return self.conclusion.holds

    def non_vacuous(self) -> bool:
        """Hypotheses pass and some condition goes beyond member nonemptiness."""
        checks = self.inter.checks + self.union.checks
        return self.hypotheses_pass and any(len(c.subset) >= 2 or c.degree >= 0 for c in checks)


def mixed_nerve_check(
    cover: Cover, k: int, l: int, F: Field, max_members: int = MAX_MEMBERS, strict: bool = True
) -> MixedNerveResult:
    """Hypotheses and conclusion together; with ``strict`` a passing
    hypothesis set with a failing conclusion raises :class:`TheoremViolation`."""
    inter, uni = check_mixed_hypotheses(cover, k, l, F, max_members)
    result = MixedNerveResult(k, l, inter, uni, verify_mixed_conclusion(cover, l, F, max_members))
    if strict and result.hypotheses_pass and not result.holds:
        raise TheoremViolation("mixed-nerve", f"β̃_{l}(N)={result.conclusion.beta_nerve} > "
                               f"β̃_{l}(X)={result.conclusion.beta_host}", result)
    return result


def union_nerve_check(cover: Cover, l: int, F: Field, **kw) -> MixedNerveResult:
    """Nerve theorem for unions: the ``k = -1`` case."""
    return mixed_nerve_check(cover, -1, l, F, **kw)


@dataclass(frozen=True)
class HellyResult:
    k: int
    inter: HypothesisReport
    union: HypothesisReport
    intersection_nonempty: bool

    @property
    def hypotheses_pass(self) -> bool:
        return self.inter.passed and self.union.passed


def helly_check(cover: Cover, k: int, F: Field, max_members: int = MAX_MEMBERS, strict: bool = True) -> HellyResult:
    """All nonempty subcollections ``Γ'``: ``β̃_{k-|Γ'|}(⋂Γ') = 0`` when
    ``|Γ'| ≤ k+1`` and ``β̃_{|Γ'|-2}(⋃Γ') = 0`` when ``|Γ'| ≥ k+2``; the
    conclusion is ``⋂Γ ≠ ∅``."""
    n = len(cover)
    if not -1 <= k <= n - 2:
        raise PreconditionError(f"need -1 <= k <= |Γ|-2, got k={k}, |Γ|={n}")
    cover._check_size(max_members)
    inter, uni = [], []
    for sub in cover.subcollections():
        size = len(sub)
        if size <= k + 1:
            deg = k - size
            inter.append(HypothesisCheck(sub, "inter", deg, betti(cover.intersection(sub), deg, F)))
        else:
            deg = size - 2
            uni.append(HypothesisCheck(sub, "union", deg, betti(cover.union(sub), deg, F)))
    result = HellyResult(
        k,
        HypothesisReport("inter-h", tuple(inter)),
        HypothesisReport("union-h", tuple(uni)),
        not cover.intersection(range(n)).is_empty,
    )
    if strict and result.hypotheses_pass and not result.intersection_nonempty:
        raise TheoremViolation("helly", "hypotheses pass but ⋂Γ is empty", result)
    return result


@dataclass(frozen=True)
class EmbeddedHellyResult:
    """Helly check split into the conditions checked on at most ``d+1``
    members and those implied by an embedding in R^d (homology in degree
    ≥ d vanishes there)."""

    mode: str
    d: int
    stated: HypothesisReport
    implied: HypothesisReport
    intersection_nonempty: bool

    @property
    def hypotheses_pass(self) -> bool:
        # a failing implied check means the complex does not embed in R^d
        return self.stated.passed and self.implied.passed


def helly_embedded(cover: Cover, d: int, F: Field, mode: str = "union", **kw) -> EmbeddedHellyResult:
    """Presets for complexes embedded in ``R^d``.

    ``mode="union"``: unions of at most ``d+1`` members (k = -1).
    ``mode="inter"``: intersections of at most ``d+1`` members (k = d),
    which needs ``|Γ| ≥ d+2``.
    """
    if d < 0:
        raise PreconditionError("embedding dimension must be >= 0")
    if mode == "union":
        k = -1
    elif mode == "inter":
        if len(cover) < d + 2:
            raise PreconditionError(f"intersection preset needs |Γ| >= d+2 = {d + 2}")
        k = d
    else:
        raise PreconditionError(f"unknown preset {mode!r}")
    res = helly_check(cover, k, F, **kw)
    checks = res.inter.checks + res.union.checks
    stated = tuple(c for c in checks if len(c.subset) <= d + 1)
    implied = tuple(c for c in checks if len(c.subset) > d + 1)
    return EmbeddedHellyResult(
        mode, d,
        HypothesisReport(f"stated-{mode}", stated),
        HypothesisReport("embedding-implied", implied),
        res.intersection_nonempty,
    )


@dataclass(frozen=True)
class AuxUnionResult:
    hypotheses: HypothesisReport
    conclusion_degree: int
    conclusion_observed: int

    @property
    def holds(self) -> bool:
        return self.conclusion_observed == 0


def aux_union_check(members: Sequence[SimplicialComplex], F: Field, strict: bool = True) -> AuxUnionResult:
    """If ``β̃_{|σ|-|τ|-1}(⋂τ) = 0`` for all nonempty ``τ ⊆ σ`` then
    ``β̃_{|σ|-2}(⋃σ) = 0``."""
    if not members:
        raise PreconditionError("needs a nonempty collection")
    cov = Cover.of(members)
    cov._check_size(MAX_MEMBERS)
    n = len(cov)
    checks = []
    for tau in cov.subcollections():
        deg = n - len(tau) - 1
        checks.append(HypothesisCheck(tau, "inter", deg, betti(cov.intersection(tau), deg, F)))
    rep = HypothesisReport("aux", tuple(checks))
    deg = n - 2
    res = AuxUnionResult(rep, deg, betti(cov.union(range(n)), deg, F))
    if strict and rep.passed and not res.holds:
        raise TheoremViolation("aux-union", f"β̃_{deg}(⋃σ) = {res.conclusion_observed}", res)
    return res
