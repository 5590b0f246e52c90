"""Checks of the smallest-eigenvalue bound theorems on concrete graphs,
constructive constants, and the built-in verification corpus.

Desk-scale honesty rules: the degree threshold C(lambda) behind the
sesqui-regular dichotomy is astronomically large (it is built from iterated
Ramsey numbers), so a graph failing both branch inequalities is never a
counterexample; it is reported as "violated" together with a warning that
the degree hypothesis cannot be met at this scale. Ramsey numbers are only
ever bounded by the classical binomial, never computed exactly.

Reference values kept for documentation: a Steiner graph with smallest
eigenvalue -lambda has c = lambda^2 and a Latin square graph has
c = lambda(lambda-1); the 3x3 rook graph in the corpus is a Latin square
graph with lambda = 2 and c = 2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations, permutations

from .graph6 import graph6_encode
from .graphs import (
    Graph,
    RegularityProfile,
    complement,
    complete_multipartite,
    cycle,
    disjoint_union,
    is_connected,
    k_tilde,
    petersen,
    regularity_profile,
    rook_3x3,
    star,
    triangular_5,
)
from .hoffman import (
    HoffmanGraph,
    catalog,
    induced_hoffman_embedding,
    lambda_min_hoffman,
)
from .quasiclique import QuasiCliqueSystem
from .spectral import MARGIN_GUARD, is_marginal, lambda_min, strictly_below

__all__ = [
    "VerificationReport",
    "NeumaierReport",
    "IsolatedVertexConeReport",
    "ForbiddenFamilyReport",
    "VertexQuasiCliqueDiagnostics",
    "Claim1Report",
    "t_prime",
    "m_prime",
    "lemma_isolated_vertex_check",
    "forbidden_family_check",
    "claim1_diagnostics",
    "claim2_check",
    "neumaier_check",
    "theorem5_check",
    "ramsey_upper",
    "c_lambda_estimate",
    "corpus_graphs",
    "corpus_run",
]


# ---------------------------------------------------------------------------
# report types


@dataclass(frozen=True)
class NeumaierReport:
    """Strongly-regular dichotomy: complete multipartite or c <= lambda^3(2 lambda - 3)."""

    subject: str
    lam: int
    is_complete_multipartite: bool
    c: int
    c_bound: int
    margin: int
    outcome: str  # "multipartite" | "c_bound" | "violated"

    def to_dict(self) -> dict:
        return {
            "subject": self.subject,
            "lambda": self.lam,
            "is_complete_multipartite": self.is_complete_multipartite,
            "c": self.c,
            "c_bound": self.c_bound,
            "margin": self.margin,
            "outcome": self.outcome,
        }


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of the sesqui-regular branch check on one graph.

    ``outcome`` is one of branch_i, branch_ii, both, inconclusive_small_k,
    violated. ``margins`` holds the slack of each branch inequality
    (bound minus observed value; nonnegative means satisfied).
    """

    subject: str
    lam: int
    profile: RegularityProfile | None
    outcome: str
    margins: dict[str, float] = field(default_factory=dict)
    warnings: tuple[str, ...] = ()
    neumaier: NeumaierReport | None = None

    def to_dict(self) -> dict:
        return {
            "subject": self.subject,
            "lambda": self.lam,
            "profile": self.profile.to_dict() if self.profile else None,
            "outcome": self.outcome,
            "margins": dict(self.margins),
            "warnings": list(self.warnings),
            "neumaier": self.neumaier.to_dict() if self.neumaier else None,
        }


# ---------------------------------------------------------------------------
# constructive constants


def t_prime(lam: int) -> int:
    """Least t with lambda_min of the t-leaf star strictly below -lam.

    Closed form lam^2 + 1; the star's smallest eigenvalue is -sqrt(t), and
    the defining sandwich is re-verified numerically on every call.
    """
    if not isinstance(lam, int) or lam < 1:
        raise ValueError(f"lambda must be a positive integer, got {lam!r}")
    t = lam * lam + 1
    below = lambda_min(star(t))
    at = lambda_min(star(t - 1)) if t >= 2 else None
    assert strictly_below(below, -lam), (lam, below)
    assert at is None or at >= -lam - MARGIN_GUARD, (lam, at)
    return t


def m_prime(lam: float, m_max: int = 10**4) -> int:
    """Least m with lambda_min(K~_{2m}) strictly below -lam.

    Computed two independent ways per candidate m: a full eigensolve of the
    (2m+1)-vertex graph and the smallest root of the 3x3 equitable quotient
    [[0, m, 0], [1, m-1, m], [0, m, m-1]] (which carries every eigenvalue
    other than -1). The two must agree to 1e-8.
    """
    if lam <= 0:
        raise ValueError(f"lambda must be positive, got {lam}")
    import numpy as np

    for m in range(1, m_max + 1):
        full = lambda_min(k_tilde(m))
        q = np.array([[0, m, 0], [1, m - 1, m], [0, m, m - 1]], dtype=float)
        roots = np.linalg.eigvals(q)
        assert np.max(np.abs(roots.imag)) < 1e-9
        quotient_min = float(np.min(roots.real))
        if abs(full - quotient_min) > 1e-8:
            raise AssertionError(
                f"eigensolver/quotient disagreement at m={m}: "
                f"{full} vs {quotient_min}"
            )
        if strictly_below(full, -lam):
            return m
    raise ValueError(f"no m <= {m_max} found; the scan guard is too small")


def ramsey_upper(s: int, t: int) -> int:
    """Classical binomial Ramsey bound binom(s+t-2, s-1), exact."""
    if s < 1 or t < 1:
        raise ValueError(f"Ramsey arguments must be positive, got ({s}, {t})")
    return math.comb(s + t - 2, s - 1)


def c_lambda_estimate(lam: int, n_prime: int) -> int:
    """Explicit upper bound for the degree threshold of the dichotomy.

    Composes R((lambda^2-lambda)(R(n', t')-1)+1, t') with t' = lambda^2+1,
    replacing each Ramsey number by its binomial upper bound.
    """
    if lam < 2:
        raise ValueError(f"lambda must be at least 2, got {lam}")
    if n_prime < 1:
        raise ValueError(f"n' must be positive, got {n_prime}")
    t = t_prime(lam)
    inner = (lam * lam - lam) * (ramsey_upper(n_prime, t) - 1) + 1
    return ramsey_upper(inner, t)


# ---------------------------------------------------------------------------
# exhaustive isolated-vertex cone check


@dataclass(frozen=True)
class IsolatedVertexConeReport:
    """Fat-cone eigenvalues over every 6-vertex graph with an isolated vertex.

    One entry (graph6, lambda_min, margin) per isomorphism class; margin is
    -lam - lambda_min > 0 when the strict bound holds. The extremal entry
    maximizes lambda_min; ``reference`` is the clique-plus-isolated-vertex
    graph the extremum is compared against (no a-priori claim is made that
    they coincide; ``extremal_is_reference`` records the observed outcome).
    """

    lam: int
    entries: tuple[tuple[str, float, float], ...]
    all_pass: bool
    extremal: tuple[str, float, float]
    reference: tuple[str, float, float]
    extremal_is_reference: bool


def lemma_isolated_vertex_check(lam: int, order_cap: int = 6) -> IsolatedVertexConeReport:
    """Check lambda_min(fat cone over H) < -lam for every graph H on
    lam^2 + 2 vertices having an isolated vertex.

    Only lam = 2 is supported (the enumeration is over isomorphism classes
    of 5-vertex graphs, each extended by an isolated vertex; larger lam is a
    combinatorial explosion). ``order_cap`` guards the enumeration size.
    """
    if lam != 2:
        raise ValueError(f"only lambda = 2 is enumerable at desk scale, got {lam}")
    order = lam * lam + 2
    if order > order_cap:
        raise ValueError(f"enumeration order {order} exceeds cap {order_cap}")

    reps = _five_vertex_representatives()
    entries = []
    for edges in reps:
        h = disjoint_union(Graph(5, edges), Graph(1))
        value = lambda_min_hoffman(catalog("q_of", h).hoffman)
        entries.append((graph6_encode(h), value, -lam - value))

    entries.sort(key=lambda e: e[0])
    extremal = max(entries, key=lambda e: e[1])

    clique_plus_isolated = disjoint_union(
        Graph(5, list(combinations(range(5), 2))), Graph(1)
    )
    ref_g6 = graph6_encode(clique_plus_isolated)
    reference = next(e for e in entries if e[0] == ref_g6)

    return IsolatedVertexConeReport(
        lam=lam,
        entries=tuple(entries),
        all_pass=all(strictly_below(v, -lam) for _, v, _ in entries),
        extremal=extremal,
        reference=reference,
        extremal_is_reference=abs(extremal[1] - reference[1]) < 1e-9,
    )


def _five_vertex_representatives() -> list[list[tuple[int, int]]]:
    """One labeled representative per isomorphism class of 5-vertex graphs."""
    pairs = list(combinations(range(5), 2))
    pair_index = {pq: i for i, pq in enumerate(pairs)}
    perm_tables = [
        [pair_index[tuple(sorted((perm[a], perm[b])))] for a, b in pairs]
        for perm in permutations(range(5))
    ]
    seen = set()
    reps = []
    for mask in range(1 << len(pairs)):
        canon = min(
            sum(((mask >> i) & 1) << table[i] for i in range(len(pairs)))
            for table in perm_tables
        )
        if canon not in seen:
            seen.add(canon)
            reps.append([pairs[i] for i in range(len(pairs)) if (canon >> i) & 1])
    return reps


# ---------------------------------------------------------------------------
# forbidden family and claim diagnostics


@dataclass(frozen=True)
class ForbiddenFamilyReport:
    """Search results for the three families forbidden in an associated
    Hoffman graph under the dichotomy's hypotheses."""

    lam: int
    found: tuple[tuple[str, tuple[int, ...] | None], ...]

    def any_found(self) -> bool:
        return any(w is not None for _, w in self.found)


def forbidden_family_check(g_assoc: HoffmanGraph, lam: int) -> ForbiddenFamilyReport:
    """Search g_assoc for induced label-preserving copies of the family
    {h_t(lam+1), h_t1(lam), c_n(lam^2-lam+1)}; report witnesses."""
    if lam < 2:
        raise ValueError(f"lambda must be at least 2, got {lam}")
    members = [
        ("h_t", lam + 1),
        ("h_t1", lam),
        ("c_n", lam * lam - lam + 1),
    ]
    results = []
    for name, param in members:
        pattern = catalog(name, param).hoffman
        witness = induced_hoffman_embedding(g_assoc, pattern)
        results.append((f"{name}({param})", witness))
    return ForbiddenFamilyReport(lam=lam, found=tuple(results))


@dataclass(frozen=True)
class VertexQuasiCliqueDiagnostics:
    vertex: int
    containing_classes: tuple[int, ...]
    max_neighbors_into_other: int | None
    max_non_neighbors_inside: int | None
    flags: tuple[str, ...]


@dataclass(frozen=True)
class Claim1Report:
    lam: int
    membership_bound: int
    neighbor_bound: int
    non_neighbor_bound: int
    per_vertex: tuple[VertexQuasiCliqueDiagnostics, ...]

    def any_flag(self) -> bool:
        return any(d.flags for d in self.per_vertex)


def claim1_diagnostics(g: Graph, qcs: QuasiCliqueSystem, lam: int) -> Claim1Report:
    """Per-vertex quasi-clique statistics against the three claim bounds:
    membership count <= lam; neighbors into a non-containing quasi-clique
    that is a clique <= lam^2 - lam; non-neighbors inside a containing
    quasi-clique <= lam^2. Exceedances are flagged, not raised: the bounds
    are only guaranteed under degree hypotheses no desk-scale graph meets.
    """
    quasi_sets = [frozenset(q) for q in qcs.quasi_cliques]
    is_clique = [_is_clique(g, q) for q in qcs.quasi_cliques]
    membership_bound = lam
    neighbor_bound = lam * lam - lam
    non_neighbor_bound = lam * lam

    diags = []
    for v in range(g.n):
        containing = tuple(i for i, q in enumerate(quasi_sets) if v in q)
        nbrs = g.neighbors(v)
        into_other = [
            len(nbrs & q)
            for i, q in enumerate(quasi_sets)
            if i not in containing and is_clique[i]
        ]
        inside = [
            sum(1 for y in quasi_sets[i] if y != v and y not in nbrs)
            for i in containing
        ]
        flags = []
        if len(containing) > membership_bound:
            flags.append(f"memberships {len(containing)} > {membership_bound}")
        if into_other and max(into_other) > neighbor_bound:
            flags.append(f"neighbors_into_other {max(into_other)} > {neighbor_bound}")
        if inside and max(inside) > non_neighbor_bound:
            flags.append(f"non_neighbors_inside {max(inside)} > {non_neighbor_bound}")
        diags.append(
            VertexQuasiCliqueDiagnostics(
                vertex=v,
                containing_classes=containing,
                max_neighbors_into_other=max(into_other) if into_other else None,
                max_non_neighbors_inside=max(inside) if inside else None,
                flags=tuple(flags),
            )
        )
    return Claim1Report(
        lam=lam,
        membership_bound=membership_bound,
        neighbor_bound=neighbor_bound,
        non_neighbor_bound=non_neighbor_bound,
        per_vertex=tuple(diags),
    )


def _is_clique(g: Graph, vertices) -> bool:
    vs = tuple(vertices)
    return all(g.adjacent(u, v) for i, u in enumerate(vs) for v in vs[i + 1 :])


def claim2_check(
    qcs: QuasiCliqueSystem, g: Graph
) -> list[tuple[bool, tuple[int, int] | None]]:
    """Per class: is the quasi-clique a clique of g? False entries carry a
    witnessing non-adjacent pair."""
    results: list[tuple[bool, tuple[int, int] | None]] = []
    for q in qcs.quasi_cliques:
        witness = None
        for i, u in enumerate(q):
            for v in q[i + 1 :]:
                if not g.adjacent(u, v):
                    witness = (u, v)
                    break
            if witness:
                break
        results.append((witness is None, witness))
    return results


# ---------------------------------------------------------------------------
# theorem checks


def _integer_lambda(g: Graph) -> int | None:
    """-lambda_min rounded when within 1e-7 of an integer, else None."""
    value = -lambda_min(g)
    nearest = round(value)
    return nearest if abs(value - nearest) < MARGIN_GUARD else None


def neumaier_check(g: Graph, subject: str = "graph") -> NeumaierReport:
    """Strongly-regular dichotomy: complete multipartite, or the
    non-adjacent-pair common-neighbor count c satisfies
    c <= lambda^3 (2 lambda - 3)."""
    if g.n == 0:
        raise ValueError("empty graph")
    profile = regularity_profile(g)
    if not (profile.is_strongly_regular and is_connected(g)):
        raise ValueError("not a connected strongly regular graph")
    lam = _integer_lambda(g)
    if lam is None or lam < 2:
        raise ValueError(
            "smallest eigenvalue is not within 1e-7 of an integer <= -2"
        )
    multipartite = _is_complete_multipartite(g)
    c = profile.coedge_c
    bound = lam**3 * (2 * lam - 3)
    outcome = (
        "multipartite" if multipartite else "c_bound" if c <= bound else "violated"
    )
    return NeumaierReport(
        subject=subject,
        lam=lam,
        is_complete_multipartite=multipartite,
        c=c,
        c_bound=bound,
        margin=bound - c,
        outcome=outcome,
    )


def _is_complete_multipartite(g: Graph) -> bool:
    """Structural test: the complement is a disjoint union of cliques."""
    comp = complement(g)
    seen: set[int] = set()
    for v in range(comp.n):
        if v in seen:
            continue
        component = {v}
        stack = [v]
        while stack:
            u = stack.pop()
            for w in comp.neighbors(u):
                if w not in component:
                    component.add(w)
                    stack.append(w)
        if not _is_clique(comp, component):
            return False
        seen |= component
    return True


def theorem5_check(
    g: Graph, lambda_override: int | None = None, subject: str = "graph"
) -> VerificationReport:
    """Branch check of the sesqui-regular dichotomy on one graph.

    Requires a sesqui-regular input: regular with a constant distance-2
    common-neighbor count c (graphs with no distance-2 pair at all are
    rejected with a distinct error). lambda defaults to the smallest integer
    >= -lambda_min and must be at least 2. Evaluates
    (i) c <= lambda^2 (lambda - 1) and (ii) v - k - 1 <= (lambda-1)^2/4 + 1.
    A failing disjunction is "violated" plus a warning that the degree
    hypothesis k >= C(lambda) is unverifiable at desk scale; an override
    below the spectral requirement gives "inconclusive_small_k".
    """
    if g.n == 0:
        raise ValueError("empty graph")
    profile = regularity_profile(g)
    if profile.vacuous_c:
        raise ValueError(
            "no distance-2 pair exists (vacuous c); the branch check does not apply"
        )
    if not profile.is_sesqui_regular:
        raise ValueError("not sesqui-regular: needs a regular graph with constant c")

    lmin = lambda_min(g)
    if lambda_override is not None:
        if not isinstance(lambda_override, int) or lambda_override < 2:
            raise ValueError(f"lambda must be an integer >= 2, got {lambda_override!r}")
        lam = lambda_override
    else:
        # any graph with a distance-2 pair has lambda_min <= -sqrt(2), so the
        # inferred value is automatically >= 2
        lam = math.ceil(-lmin - MARGIN_GUARD)

    warnings: list[str] = []
    if is_marginal(lmin, -lam):
        warnings.append(
            f"numerically marginal: lambda_min = {lmin:.12g} within guard of {-lam}"
        )

    c = profile.sesqui_c
    v, k = g.n, profile.k
    bound_i = lam * lam * (lam - 1)
    bound_ii = (lam - 1) ** 2 / 4 + 1
    margins = {
        "branch_i": float(bound_i - c),
        "branch_ii": bound_ii - (v - k - 1),
    }
    holds_i = c <= bound_i
    holds_ii = v - k - 1 <= bound_ii

    if lmin < -lam - MARGIN_GUARD:
        outcome = "inconclusive_small_k"
        warnings.append(
            f"hypothesis lambda_min >= -{lam} fails (lambda_min = {lmin:.6f}); "
            "the dichotomy is silent here"
        )
    elif holds_i and holds_ii:
        outcome = "both"
    elif holds_i:
        outcome = "branch_i"
    elif holds_ii:
        outcome = "branch_ii"
    else:
        outcome = "violated"
        warnings.append(
            "hypothesis k >= C(lambda) not met at desk scale; "
            "a failing disjunction is not a counterexample"
        )

    return VerificationReport(
        subject=subject,
        lam=lam,
        profile=profile,
        outcome=outcome,
        margins=margins,
        warnings=tuple(warnings),
    )


# ---------------------------------------------------------------------------
# built-in corpus


def corpus_graphs() -> list[tuple[str, Graph]]:
    """Named verification corpus: classical graphs plus clique expansions."""
    from .hoffman import expand

    subjects: list[tuple[str, Graph]] = [
        ("petersen", petersen()),
        ("triangular(5)", triangular_5()),
        ("cycle(5)", cycle(5)),
        ("cycle(8)", cycle(8)),
        ("complete_multipartite(3,3,3)", complete_multipartite([3, 3, 3])),
        ("complete_multipartite(2,2,2)", complete_multipartite([2, 2, 2])),
        ("rook(3,3)", rook_3x3()),
    ]
    for name, param in (("h_t", 1), ("h_t", 2), ("h_t", 3), ("c_n", 3), ("h_t1", 2)):
        entry = catalog(name, param)
        for p in (10, 30):
            subjects.append((f"expand({name}({param}),p={p})", expand(entry.hoffman, p)))
    return subjects


def corpus_run() -> list[VerificationReport]:
    """Run the strongly-regular and sesqui-regular checks over the corpus.

    One report per subject, in corpus order. Subjects failing a check's
    preconditions get outcome inconclusive_small_k with the reason recorded
    as a warning and lambda 0 (the corpus deliberately includes such graphs,
    e.g. the irregular clique expansions).
    """
    reports = []
    for subject, g in corpus_graphs():
        warnings: list[str] = []
        try:
            neumaier = neumaier_check(g, subject=subject)
        except ValueError as exc:
            neumaier = None
            warnings.append(f"neumaier: {exc}")
        try:
            report = theorem5_check(g, subject=subject)
            reports.append(
                VerificationReport(
                    subject=report.subject,
                    lam=report.lam,
                    profile=report.profile,
                    outcome=report.outcome,
                    margins=report.margins,
                    warnings=report.warnings + tuple(warnings),
                    neumaier=neumaier,
                )
            )
        except ValueError as exc:
            profile = regularity_profile(g) if g.n else None
            reports.append(
                VerificationReport(
                    subject=subject,
                    lam=0,
                    profile=profile,
                    outcome="inconclusive_small_k",
                    margins={},
                    warnings=tuple(warnings) + (f"theorem5: {exc}",),
                    neumaier=neumaier,
                )
            )
    return reports
