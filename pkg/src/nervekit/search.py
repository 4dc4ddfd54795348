"""Seeded counterexample search over random instances.

Each runner samples instances deterministically from ``(seed, trial)``,
runs a checker without aborting on failure, and tallies hypothesis passes,
non-vacuous passes and any :class:`TheoremViolation`. A violation means a
bug (or a false theorem); the suites assert that none occur.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .complex import SimplicialComplex
from .constructive import build_Ai, kill_homology
from .complex import barycentric_subdivision
from .errors import PreconditionError, TheoremViolation
from .generators import (
    banded_torus, circle, cut_arc_cover, random_colouring, random_complex, random_cover,
    random_facet_complex, random_partite_complex, random_sphere, simplex_boundary,
)
from .homology import Chain, fundamental_class, reduced_betti
from .linalg import F2, Q, Field, Fp
from .nerve import Cover, aux_union_check, helly_check, mixed_nerve_check
from .sperner import (
    ColouredComplex, check_discrete, check_isolated, check_meshulam, check_remixed,
    count_lemma_check, is_isolated_on_colour, polytopal_meshulam, sub_by_colours,
)

DEFAULT_SEED = 20240917


def _sub_seed(seed: int, trial: int, salt: int = 0) -> int:
    return (seed * 1_000_003 + trial * 7_919 + salt) & 0xFFFFFFFFFFFFFFFF


@dataclass
class SearchStats:
    theorem: str
    trials: int = 0
    instances: int = 0
    passes: Counter = field(default_factory=Counter)
    nonvacuous: Counter = field(default_factory=Counter)
    violations: list = field(default_factory=list)
    witnesses: list = field(default_factory=list)

    def record(self, stratum: str, passed: bool, nonvacuous: bool = True):
        self.instances += 1
        if passed:
            self.passes[stratum] += 1
            if nonvacuous:
                self.nonvacuous[stratum] += 1

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "trials": self.trials,
            "instances": self.instances,
            "hypothesis_passes": dict(sorted(self.passes.items())),
            "nonvacuous_passes": dict(sorted(self.nonvacuous.items())),
            "violations": [str(v) for v in self.violations],
            "witnesses": self.witnesses,
        }


def random_host(seed: int, max_vertices: int = 9) -> SimplicialComplex:
    """Mixture of Linial–Meshulam-style and sparse random-facet complexes."""
    rng = random.Random(seed)
    n = rng.randint(4, max_vertices)
    if rng.random() < 0.5:
        d = rng.choice([1, 1, 2, 2, 2])
        p = rng.choice([0.05, 0.15, 0.3, 0.5]) if d == 2 else rng.choice([0.0, 0.2, 0.35])
        if d == 1:
            # sparse graph: spanning path plus random chords
            gens = [(i, i + 1) for i in range(n - 1)]
            gens += [(a, b) for a in range(n) for b in range(a + 2, n) if rng.random() < p]
            return SimplicialComplex.from_facets(gens)
        return random_complex(n, d, p, rng.getrandbits(32))
    return random_facet_complex(n, rng.randint(2, 2 * n), rng.choice([1, 2, 2, 3]), rng.getrandbits(32))


def _guard(stats: SearchStats, fn: Callable, *args, **kw):
    try:
        return fn(*args, **kw)
    except TheoremViolation as exc:
        stats.violations.append(exc)
        return None


# -- nerve theorems -----------------------------------------------------------------------

def search_mixed(trials: int, seed: int = DEFAULT_SEED, fields: Iterable[Field] = (F2, Q),
                 max_vertices: int = 9, max_parts: int = 5, k_filter: Callable[[int, int], bool] | None = None
                 ) -> SearchStats:
    stats = SearchStats("mixed")
    fields = tuple(fields)
    for t in range(trials):
        stats.trials += 1
        rng = random.Random(_sub_seed(seed, t))
        X = random_host(rng.getrandbits(32), max_vertices)
        cov = random_cover(X, rng.randint(2, max_parts), rng.getrandbits(32), overlap=rng.choice([0.2, 0.4, 0.6]))
        for F in fields:
            for l in range(len(cov)):
                for k in range(-1, l + 1):
                    if k_filter and not k_filter(k, l):
                        continue
                    res = _guard(stats, mixed_nerve_check, cov, k, l, F)
                    if res is None:
                        continue
                    stratum = "k=-1" if k == -1 else ("k=l" if k == l else "mixed")
                    stats.record(stratum, res.hypotheses_pass, res.non_vacuous())
    return stats


def search_helly(trials: int, seed: int = DEFAULT_SEED, fields: Iterable[Field] = (F2, Q),
                 max_vertices: int = 9, max_parts: int = 5) -> SearchStats:
    stats = SearchStats("helly")
    for t in range(trials):
        stats.trials += 1
        rng = random.Random(_sub_seed(seed, t, 1))
        X = random_host(rng.getrandbits(32), max_vertices)
        cov = random_cover(X, rng.randint(2, max_parts), rng.getrandbits(32), overlap=rng.choice([0.3, 0.5, 0.7]))
        for F in fields:
            for k in range(-1, len(cov) - 1):
                res = _guard(stats, helly_check, cov, k, F)
                if res is not None:
                    stats.record(f"k={k}", res.hypotheses_pass, True)
    return stats


def search_aux(trials: int, seed: int = DEFAULT_SEED, fields: Iterable[Field] = (F2, Q),
               max_vertices: int = 8) -> SearchStats:
    stats = SearchStats("aux-union")
    for t in range(trials):
        stats.trials += 1
        rng = random.Random(_sub_seed(seed, t, 2))
        X = random_host(rng.getrandbits(32), max_vertices)
        cov = random_cover(X, rng.randint(1, 4), rng.getrandbits(32), overlap=rng.choice([0.4, 0.6, 0.8]))
        for F in fields:
            res = _guard(stats, aux_union_check, cov.members, F)
            if res is not None:
                stats.record(f"|σ|={len(cov)}", res.hypotheses.passed, len(cov) >= 2)
    return stats


def search_killing(trials: int, seed: int = DEFAULT_SEED,
                   fields: Iterable[Field] = (F2, Fp(3), Q), max_vertices: int = 8,
                   degrees: Iterable[int] = (1, 2)) -> SearchStats:
    """Every complex is run for every ``d`` and field; postconditions are
    checked inside :func:`kill_homology`, idempotence here."""
    stats = SearchStats("killing")
    for t in range(trials):
        stats.trials += 1
        rng = random.Random(_sub_seed(seed, t, 3))
        K = random_host(rng.getrandbits(32), max_vertices)
        for d in degrees:
            for F in fields:
                out = _guard(stats, kill_homology, K, d, F)
                if out is None:
                    continue
                again = _guard(stats, kill_homology, out, d, F)
                if again is not None and again != out:
                    stats.violations.append(TheoremViolation("killing", "second pass changed the complex"))
                stats.record(f"d={d}", True, out != K)
    return stats


def search_lemma_ai(trials: int, seed: int = DEFAULT_SEED, fields: Iterable[Field] = (F2, Q),
                    max_vertices: int = 7) -> SearchStats:
    """``⋃_{i∈S} A_i`` and ``K_S`` have equal Betti numbers."""
    stats = SearchStats("A_i-homology")
    for t in range(trials):
        stats.trials += 1
        rng = random.Random(_sub_seed(seed, t, 4))
        K0 = random_host(rng.getrandbits(32), max_vertices)
        m = rng.randint(1, min(3, len(K0.vertices) - 1))
        K = random_colouring(K0, m, rng.getrandbits(32))
        sd = barycentric_subdivision(K.complex)
        A = [build_Ai(K, i, sd) for i in K.colours]
        for S in K.nonempty_colour_sets():
            U = SimplicialComplex(frozenset().union(*(A[i].simplices for i in S)))
            KS = sub_by_colours(K, S)
            for F in fields:
                ok = reduced_betti(U, F) == reduced_betti(KS, F)
                if not ok:
                    stats.violations.append(TheoremViolation("A_i-homology", f"S={S} over {F}"))
                stats.record(f"|S|={len(S)}", ok, True)
    return stats


# -- Sperner family -----------------------------------------------------------------------

def random_coloured(seed: int, max_vertices: int = 8, max_m: int = 3) -> ColouredComplex:
    rng = random.Random(seed)
    if rng.random() < 0.5:
        m = rng.randint(1, max_m)
        sizes = [1] * (m + 1)
        for _ in range(rng.randint(0, max_vertices - m - 1)):
            sizes[rng.randrange(m + 1)] += 1
        return random_partite_complex(sizes, rng.choice([0.4, 0.6, 0.8, 1.0]), rng.getrandbits(32))
    n = rng.randint(3, max_vertices)
    m = rng.randint(1, min(max_m, n - 1))
    if rng.random() < 0.6:
        K = random_complex(n, rng.choice([1, 2]), rng.choice([0.3, 0.6, 0.9]), rng.getrandbits(32))
    else:
        K = random_facet_complex(n, rng.randint(2, 2 * n), rng.choice([1, 2, 3]), rng.getrandbits(32))
    return random_colouring(K, m, rng.getrandbits(32))


def search_meshulam(trials: int, seed: int = DEFAULT_SEED, fields: Iterable[Field] = (F2, Q),
                    max_vertices: int = 8, max_m: int = 3) -> SearchStats:
    stats = SearchStats("meshulam-family")
    for t in range(trials):
        stats.trials += 1
        K = random_coloured(_sub_seed(seed, t, 5), max_vertices, max_m)
        for F in fields:
            res = _guard(stats, check_meshulam, K, F)
            if res is not None:
                stats.record("meshulam", res.hypotheses_pass)
            for k in range(-1, K.m):
                res = _guard(stats, check_remixed, K, k, F)
                if res is not None:
                    stats.record("remixed", res.hypotheses_pass)
            for v in K.complex.vertices:
                if is_isolated_on_colour(K, v):
                    res = _guard(stats, check_isolated, K, v, F)
                    if res is not None:
                        stats.record("isolated", res.hypotheses_pass)
            if all(K.colour_of[a] != K.colour_of[b] for a, b in K.complex.simplices_of_dim(1)):
                res = _guard(stats, check_discrete, K, F)
                if res is not None:
                    stats.record("discrete", res.hypotheses_pass)
    return stats


def polytopal_targets(m: int) -> list[SimplicialComplex]:
    """Pseudomanifolds with vertex set ``0..m`` used as ``M``."""
    out = [simplex_boundary(m)]
    if m >= 3:
        out.append(circle(m + 1))
    return out


def search_polytopal(trials: int, seed: int = DEFAULT_SEED, fields: Iterable[Field] = (F2, Q),
                     max_vertices: int = 8, max_m: int = 3) -> SearchStats:
    stats = SearchStats("polytopal")
    for t in range(trials):
        stats.trials += 1
        K = random_coloured(_sub_seed(seed, t, 6), max_vertices, max_m)
        for F in fields:
            for M in polytopal_targets(K.m):
                res = _guard(stats, polytopal_meshulam, K, M, F)
                if res is None:
                    continue
                if res.hypotheses_pass and not res.lambda_f_identity:
                    stats.violations.append(TheoremViolation("polytopal", "λ♯∘f♯ is not the identity"))
                stats.record(f"d={res.d}", res.hypotheses_pass)
    return stats


def cone_chain(z: Chain, apex: int) -> Chain:
    """``apex * z``; its boundary is ``z`` when ``dim z ≥ 1``."""
    out = Chain.zero(z.dim + 1, z.field)
    for s, v in z.terms.items():
        out = out + Chain.simplex((apex,) + s, z.field, v)
    return out


def search_count_lemma(trials: int, seed: int = DEFAULT_SEED, fields: Iterable[Field] = (F2, Q)) -> SearchStats:
    stats = SearchStats("count-lemma")
    fields = tuple(fields)
    for t in range(trials):
        stats.trials += 1
        rng = random.Random(_sub_seed(seed, t, 7))
        M = random_sphere(rng.choice([1, 2]), rng.randint(0, 8), rng.getrandbits(32))
        F = fields[t % len(fields)]
        z = fundamental_class(M, F)
        if z is None:
            stats.violations.append(TheoremViolation("count-lemma", "sphere without fundamental class"))
            continue
        c = cone_chain(z, max(M.vertices) + 1)
        res = _guard(stats, count_lemma_check, c, F)
        if res is not None:
            stats.record("cone", res.bound_holds)
    return stats


# -- sharpness witnesses --------------------------------------------------------------

def sharpness_witnesses(F: Field = F2) -> list[dict]:
    """The two fixed counterexamples showing hypotheses cannot be dropped."""
    out = []
    B = banded_torus(3, 3)
    res = check_remixed(B, -1, F, strict=False)
    top, _, uni = res.hypotheses
    out.append({
        "name": "banded-torus-3x3",
        "theorem": "remixed(k=-1)",
        "dropped": "H_{m-1}(K)=0",
        "beta_m_minus_1": top.checks[0].observed,
        "other_hypotheses_pass": uni.passed,
        "rainbow_count": res.rainbow_count,
        "witness": (not top.passed) and uni.passed and res.rainbow_count == 0,
    })
    cov = cut_arc_cover()
    r = mixed_nerve_check(cov, -1, 1, F, strict=False)
    failing = sorted({len(c.subset) for c in r.union.failures})
    out.append({
        "name": "cut-arc-cover",
        "theorem": "union-nerve(l=1)",
        "dropped": "|σ|=2 union connectivity",
        "failing_sizes": failing,
        "beta_nerve": r.conclusion.beta_nerve,
        "beta_host": r.conclusion.beta_host,
        "witness": failing == [2] and not r.holds,
    })
    return out


def search_sharpness(trials: int, seed: int = DEFAULT_SEED, F: Field = F2) -> SearchStats:
    """Fixed witnesses plus seeded banded tori with other band splits."""
    stats = SearchStats("sharpness")
    stats.witnesses.extend(sharpness_witnesses(F))
    for t in range(trials):
        stats.trials += 1
        rng = random.Random(_sub_seed(seed, t, 8))
        rows, cols = rng.randint(3, 6), rng.randint(3, 6)
        cuts = sorted(rng.sample(range(1, rows), 2))
        bands = [0 if r < cuts[0] else (1 if r < cuts[1] else 2) for r in range(rows)]
        B = banded_torus(rows, cols, bands)
        res = check_remixed(B, -1, F, strict=False)
        top, _, uni = res.hypotheses
        if not top.passed and uni.passed and res.rainbow_count == 0:
            stats.witnesses.append({"name": f"banded-torus-{rows}x{cols}", "bands": bands})
        stats.record("banded", uni.passed)
    return stats


RUNNERS: dict[str, Callable[..., SearchStats]] = {
    "mixed": search_mixed,
    "union": lambda trials, seed=DEFAULT_SEED, **kw: search_mixed(trials, seed, k_filter=lambda k, l: k == -1, **kw),
    "helly": search_helly,
    "aux": search_aux,
    "killing": search_killing,
    "ai": search_lemma_ai,
    "meshulam": search_meshulam,
    "polytopal": search_polytopal,
    "count": search_count_lemma,
    "sharpness": search_sharpness,
}
