"""Executable checks for each classification result, over a generated group catalog.

Every verifier tests its statement as a biconditional over concrete groups and
reports counterexamples instead of failing silently; a counterexample can be
reproduced in isolation with the CLI ``analyze`` command.
"""

from __future__ import annotations

import os
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

from .arith import factorize, is_prime, prime_power, tau
from .errors import SkippedSizeCap, UnknownTheoremId, VertexCapExceeded
from .graphs import IntersectionGraph, build, zn_divisor_graph
from .groups import FiniteGroup, element_order, relabel
from .invariants import (
    DEFAULT_ISO_SIZE_CAP,
    DEFAULT_NODE_BUDGET,
    INFINITY,
    clique_cover_number,
    domination_number,
    girth,
    graph_isomorphic,
    has_triangle,
    independence_number,
    is_acyclic,
    is_bipartite,
    is_complete,
    is_regular,
    shape_checks,
)
from .planarity import is_planar
from .specs import GroupSpec, abelian_groups_of_order, in_planar_classification, is_cyclic_spec
from .subgroups import maximal_cyclic_subgroups, prime_order_subgroup_count


@dataclass
class VerificationResult:
    theorem_id: str
    domain: str
    groups_tested: int
    passed: bool
    counterexamples: list[tuple[str, str, str]] = field(default_factory=list)
    skipped: list[str] = field(default_factory=list)
    elapsed: float = 0.0
    notes: str = ""

    def to_dict(self) -> dict:
        return {
            "theorem_id": self.theorem_id,
            "domain": self.domain,
            "groups_tested": self.groups_tested,
            "passed": self.passed,
            "counterexamples": [
                {"group": g, "expected": e, "observed": o}
                for g, e, o in self.counterexamples
            ],
            "skipped": list(self.skipped),
            "elapsed_s": round(self.elapsed, 6),
            "notes": self.notes,
        }


@dataclass
class Catalog:
    specs: list[GroupSpec]
    max_order: int

    def __iter__(self):
        return iter(self.specs)

    def __len__(self):
        return len(self.specs)


def default_catalog(max_order: int) -> Catalog:
    """All abelian groups plus the dihedral/dicyclic/symmetric/alternating
    families up to the order bound, deduplicated by descriptor."""
    if max_order < 2:
        raise ValueError("max_order must be >= 2")
    specs: list[GroupSpec] = []
    factorials = {}
    k, f = 1, 1
    while f <= 2 * max_order:
        factorials[f] = k
        k += 1
        f *= k
    for n in range(2, max_order + 1):
        specs.extend(abelian_groups_of_order(n))
        if n % 2 == 0 and n >= 6:
            specs.append(GroupSpec("dihedral", (n // 2,)))
        if n % 4 == 0 and n >= 8:
            specs.append(GroupSpec("dicyclic", (n // 4,)))
        if n in factorials and factorials[n] >= 3:
            specs.append(GroupSpec("symmetric", (factorials[n],)))
        if 2 * n in factorials and factorials[2 * n] >= 4:
            specs.append(GroupSpec("alternating", (factorials[2 * n],)))
    seen = set()
    unique = []
    for s in specs:
        if s.descriptor not in seen:
            seen.add(s.descriptor)
            unique.append(s)
    return Catalog(unique, max_order)


def _worker_count() -> int:
    try:
        return max(1, int(os.environ.get("CYCGRAPH_THREADS", "1")))
    except ValueError:
        return 1


def _map_catalog(fn: Callable, items: list):
    """Apply fn over items, optionally fanning out; results in input order."""
    workers = _worker_count()
    if workers <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def _timed(result: VerificationResult, t0: float) -> VerificationResult:
    result.elapsed = time.perf_counter() - t0
    result.passed = not result.counterexamples
    return result


def _built_graphs(catalog: Catalog, result: VerificationResult, vertex_cap: int):
    """Realize + build each catalog group, recording cap hits as skips."""
    def one(spec):
        try:
            group = spec.realize()
            return spec, group, build(group, vertex_cap)
        except (VertexCapExceeded, SkippedSizeCap) as exc:
            return spec, None, str(exc)

    out = []
    for spec, group, ig in _map_catalog(one, list(catalog.specs)):
        if group is None:
            result.skipped.append(f"{spec.descriptor}: {ig}")
        else:
            out.append((spec, group, ig))
    return out


# --- individual theorem checks ------------------------------------------------

def verify_iso_invariance(
    group: FiniteGroup,
    trials: int,
    seed: int = 0,
    iso_size_cap: int = DEFAULT_ISO_SIZE_CAP,
) -> VerificationResult:
    """Random relabelings of a group must yield isomorphic intersection graphs."""
    t0 = time.perf_counter()
    res = VerificationResult(
        "thm13-iso-invariance",
        f"{group.descriptor}, {trials} seeded relabelings",
        groups_tested=trials,
        passed=True,
    )
    base = build(group)
    rng = random.Random(seed)
    n = group.order
    for t in range(trials):
        perm = list(range(n))
        rng.shuffle(perm)
        other = build(relabel(group, perm))
        try:
            ok = graph_isomorphic(base.graph, other.graph, iso_size_cap)
        except SkippedSizeCap as exc:
            res.skipped.append(f"{group.descriptor} trial {t}: {exc}")
            continue
        if not ok:
            res.counterexamples.append(
                (group.descriptor, "isomorphic graphs", f"trial {t} not isomorphic")
            )
    return _timed(res, t0)


def verify_iso_invariance_catalog(
    catalog: Catalog,
    trials: int = 20,
    groups: int = 10,
    seed: int = 0,
    iso_size_cap: int = DEFAULT_ISO_SIZE_CAP,
    vertex_cap: int = 5000,
) -> VerificationResult:
    t0 = time.perf_counter()
    res = VerificationResult(
        "thm13-iso-invariance",
        f"first {groups} catalog groups with 2..{iso_size_cap} vertices, "
        f"{trials} relabelings each (catalog max order {catalog.max_order})",
        groups_tested=0,
        passed=True,
    )
    picked = 0
    for spec in catalog:
        if picked >= groups:
            break
        group = spec.realize()
        ig = build(group, vertex_cap)
        if not (2 <= ig.n <= iso_size_cap):
            continue
        picked += 1
        res.groups_tested += 1
        sub = verify_iso_invariance(group, trials, seed + picked, iso_size_cap)
        res.counterexamples.extend(sub.counterexamples)
        res.skipped.extend(sub.skipped)
    return _timed(res, t0)


def verify_totally_disconnected(catalog: Catalog, vertex_cap: int = 5000) -> VerificationResult:
    """Edge-free graph <-> every non-identity element has prime order.

    Groups whose graph has fewer than 2 vertices are excluded (the forward
    direction silently assumes two subgroups exist); exclusions are counted.
    """
    t0 = time.perf_counter()
    res = VerificationResult(
        "thm14-totally-disconnected",
        f"default catalog, order <= {catalog.max_order}, graphs with >= 2 vertices",
        groups_tested=0,
        passed=True,
    )
    excluded = 0
    for spec, group, ig in _built_graphs(catalog, res, vertex_cap):
        if ig.n < 2:
            excluded += 1
            continue
        res.groups_tested += 1
        disconnected = ig.graph.edge_count() == 0
        all_prime = all(
            is_prime(element_order(group, g))
            for g in range(group.order)
            if g != group.identity
        )
        if disconnected != all_prime:
            res.counterexamples.append(
                (
                    spec.descriptor,
                    f"totally_disconnected == all_elements_prime_order ({all_prime})",
                    f"totally_disconnected={disconnected}",
                )
            )
    res.notes = f"excluded {excluded} groups with < 2 vertices"
    return _timed(res, t0)


def verify_complete(catalog: Catalog, vertex_cap: int = 5000) -> VerificationResult:
    """Complete graph <-> unique proper subgroup of prime order (nonempty graphs);
    plus the exact vertex-count formulas for cyclic p-power and quaternion groups."""
    t0 = time.perf_counter()
    res = VerificationResult(
        "thm15-complete",
        f"default catalog, order <= {catalog.max_order}, nonempty graphs",
        groups_tested=0,
        passed=True,
    )
    for spec, group, ig in _built_graphs(catalog, res, vertex_cap):
        if ig.n == 0:
            continue
        res.groups_tested += 1
        complete = is_complete(ig.graph)
        m = prime_order_subgroup_count(group)
        if complete != (m == 1):
            res.counterexamples.append(
                (spec.descriptor, f"complete <-> m==1 (m={m})", f"complete={complete}")
            )
        if spec.kind == "cyclic":
            pp = prime_power(spec.params[0])
            if pp is not None and pp[1] >= 2:
                alpha = pp[1]
                if not (complete and ig.n == alpha - 1):
                    res.counterexamples.append(
                        (spec.descriptor, f"complete K_{alpha - 1}",
                         f"complete={complete}, vertices={ig.n}")
                    )
        if spec.kind == "dicyclic":
            pp = prime_power(spec.params[0])
            if pp is not None and pp[0] == 2:
                alpha = pp[1] + 2
                want = 2 ** (alpha - 2) + alpha - 1
                if not (complete and ig.n == want):
                    res.counterexamples.append(
                        (spec.descriptor, f"complete K_{want}",
                         f"complete={complete}, vertices={ig.n}")
                    )
    return _timed(res, t0)


def verify_planarity_classification(max_order: int, vertex_cap: int = 5000) -> VerificationResult:
    """Planar graph <-> the group is one of the five listed abelian families,
    over every non-cyclic abelian group up to the order bound."""
    t0 = time.perf_counter()
    res = VerificationResult(
        "thm16-planarity",
        f"all non-cyclic abelian groups of order <= {max_order}",
        groups_tested=0,
        passed=True,
    )

    def one(spec):
        try:
            group = spec.realize()
            ig = build(group, vertex_cap)
            return spec, is_planar(ig.graph)
        except (VertexCapExceeded, SkippedSizeCap) as exc:
            return spec, str(exc)

    specs = [
        s
        for n in range(4, max_order + 1)
        for s in abelian_groups_of_order(n)
        if not is_cyclic_spec(s)
    ]
    for spec, planar in _map_catalog(one, specs):
        if isinstance(planar, str):
            res.skipped.append(f"{spec.descriptor}: {planar}")
            continue
        res.groups_tested += 1
        listed = in_planar_classification(spec)
        if planar != listed:
            res.counterexamples.append(
                (spec.descriptor, f"planar <-> in classification ({listed})", f"planar={planar}")
            )
    return _timed(res, t0)


def verify_star_path_cycle(catalog: Catalog, vertex_cap: int = 5000) -> VerificationResult:
    """Star and path graphs occur exactly for cyclic p^3; a cycle exactly for cyclic p^4."""
    t0 = time.perf_counter()
    res = VerificationResult(
        "thm345-star-path-cycle",
        f"default catalog, order <= {catalog.max_order}",
        groups_tested=0,
        passed=True,
    )
    for spec, group, ig in _built_graphs(catalog, res, vertex_cap):
        res.groups_tested += 1
        shapes = shape_checks(ig.graph)
        pp = prime_power(spec.params[0]) if spec.kind == "cyclic" else None
        is_p3 = pp is not None and pp[1] == 3
        is_p4 = pp is not None and pp[1] == 4
        for shape, expect in (("star", is_p3), ("path", is_p3), ("cycle", is_p4)):
            if shapes[shape] != expect:
                res.counterexamples.append(
                    (spec.descriptor, f"{shape}={expect}", f"{shape}={shapes[shape]}")
                )
    return _timed(res, t0)


def verify_girth(catalog: Catalog, vertex_cap: int = 5000) -> VerificationResult:
    """girth is always 3 or infinity."""
    t0 = time.perf_counter()
    res = VerificationResult(
        "cor-c1-girth",
        f"default catalog, order <= {catalog.max_order}",
        groups_tested=0,
        passed=True,
    )
    for spec, group, ig in _built_graphs(catalog, res, vertex_cap):
        res.groups_tested += 1
        gv = girth(ig.graph)
        if gv != 3 and gv != INFINITY:
            res.counterexamples.append((spec.descriptor, "girth in {3, inf}", f"girth={gv}"))
    return _timed(res, t0)


def _order_in_small_set(m: int) -> bool:
    """Order is p, p^2, or pq for primes p != q."""
    f = factorize(m) if m >= 2 else []
    if len(f) == 1:
        return f[0][1] <= 2
    if len(f) == 2:
        return f[0][1] == 1 and f[1][1] == 1
    return False


def subgroup_condition(group: FiniteGroup, ig: IntersectionGraph, reading: str) -> bool:
    """The subgroup-side condition of the acyclicity equivalence, under one
    quantifier reading ('some' or 'every' maximal proper cyclic subgroup has
    order p, p^2 or pq), plus the pairwise-trivial-intersection clause."""
    maximals = maximal_cyclic_subgroups(group)
    orders = [s.order for s in maximals]
    if reading == "some":
        clause_a = any(_order_in_small_set(m) for m in orders)
    elif reading == "every":
        clause_a = all(_order_in_small_set(m) for m in orders)
    else:
        raise ValueError(f"unknown reading {reading!r}")
    special = [
        v for v, s in enumerate(ig.vertices)
        if _order_in_small_set(s.order) and not is_prime(s.order)
    ]
    clause_b = all(
        not (ig.graph.adj[u] >> v & 1)
        for i, u in enumerate(special)
        for v in special[i + 1:]
    )
    return clause_a and clause_b


def verify_acyclic_equivalences(catalog: Catalog, vertex_cap: int = 5000) -> VerificationResult:
    """acyclic <-> bipartite <-> triangle-free on every catalog graph.

    The subgroup-side condition is reported under both quantifier readings
    (notes field) without being part of the pass criterion.
    """
    t0 = time.perf_counter()
    res = VerificationResult(
        "thm7-acyclic-equivalences",
        f"default catalog, order <= {catalog.max_order}",
        groups_tested=0,
        passed=True,
    )
    match = {"some": 0, "every": 0}
    mismatch_examples = {"some": [], "every": []}
    for spec, group, ig in _built_graphs(catalog, res, vertex_cap):
        res.groups_tested += 1
        acyclic = is_acyclic(ig.graph)
        bipartite = is_bipartite(ig.graph)
        tri_free = not has_triangle(ig.graph)
        if not (acyclic == bipartite == tri_free):
            res.counterexamples.append(
                (
                    spec.descriptor,
                    "acyclic == bipartite == triangle-free",
                    f"acyclic={acyclic}, bipartite={bipartite}, triangle_free={tri_free}",
                )
            )
        for reading in ("some", "every"):
            if subgroup_condition(group, ig, reading) == acyclic:
                match[reading] += 1
            elif len(mismatch_examples[reading]) < 5:
                mismatch_examples[reading].append(spec.descriptor)
    parts = []
    for reading in ("some", "every"):
        s = f"reading '{reading}' matches acyclicity on {match[reading]}/{res.groups_tested} groups"
        if mismatch_examples[reading]:
            s += f" (first mismatches: {', '.join(mismatch_examples[reading])})"
        parts.append(s)
    res.notes = "; ".join(parts)
    return _timed(res, t0)


def verify_alpha_theta(
    catalog: Catalog,
    vertex_cap: int = 5000,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> VerificationResult:
    """independence number = clique cover number = number of prime-order subgroups."""
    t0 = time.perf_counter()
    res = VerificationResult(
        "thm8-300-alpha-theta",
        f"default catalog, order <= {catalog.max_order}, within solver caps",
        groups_tested=0,
        passed=True,
    )
    for spec, group, ig in _built_graphs(catalog, res, vertex_cap):
        m = prime_order_subgroup_count(group)
        try:
            alpha = independence_number(ig.graph, node_budget)
            theta = clique_cover_number(ig.graph, node_budget)
        except SkippedSizeCap as exc:
            res.skipped.append(f"{spec.descriptor}: {exc}")
            continue
        res.groups_tested += 1
        if not (alpha == theta == m):
            res.counterexamples.append(
                (spec.descriptor, f"alpha == theta == m ({m})", f"alpha={alpha}, theta={theta}")
            )
    return _timed(res, t0)


def verify_regular_zn(max_n: int) -> VerificationResult:
    """Regular graph <-> n is p^alpha with alpha >= 2, over nonempty Z_n graphs.

    Uses the divisor-gcd representation of the Z_n graph (validated against
    the element-level build elsewhere in the suite).
    """
    t0 = time.perf_counter()
    res = VerificationResult(
        "t24-regular-zn",
        f"Z(n) for n <= {max_n} with nonempty graph",
        groups_tested=0,
        passed=True,
    )
    for n in range(2, max_n + 1):
        ds, g = zn_divisor_graph(n)
        if g.n == 0:
            continue
        res.groups_tested += 1
        regular = is_regular(g)
        pp = prime_power(n)
        expect = pp is not None and pp[1] >= 2
        if regular != expect:
            res.counterexamples.append(
                (f"Z({n})", f"regular <-> prime power ({expect})", f"regular={regular}")
            )
    return _timed(res, t0)


def zn_expected_degree(n: int, d: int) -> int:
    """Degree of the order-d vertex of the Z_n graph: tau(n) - 2 minus the
    count of divisors coprime to d (full-support divisors give tau(n) - 3)."""
    coprime = 1
    for p, a in factorize(n):
        if d % p != 0:
            coprime *= a + 1
    return tau(n) - 2 - coprime


def verify_degree_formula_zn(max_n: int) -> VerificationResult:
    t0 = time.perf_counter()
    res = VerificationResult(
        "t24-degree-formula-zn",
        f"Z(n) for n <= {max_n}, every vertex",
        groups_tested=0,
        passed=True,
    )
    for n in range(2, max_n + 1):
        ds, g = zn_divisor_graph(n)
        if g.n == 0:
            continue
        res.groups_tested += 1
        for i, d in enumerate(ds):
            want = zn_expected_degree(n, d)
            got = g.degree(i)
            if got != want:
                res.counterexamples.append(
                    (f"Z({n})", f"deg(order-{d} vertex) = {want}", f"deg={got}")
                )
    return _timed(res, t0)


def verify_domination_zn(max_n: int, node_budget: int = DEFAULT_NODE_BUDGET) -> VerificationResult:
    """Domination number of the Z_n graph: 1 when some exponent exceeds 1,
    2 when n is squarefree with >= 2 prime factors; primes are skipped."""
    t0 = time.perf_counter()
    res = VerificationResult(
        "t22-domination-zn",
        f"Z(n) for composite n <= {max_n}",
        groups_tested=0,
        passed=True,
    )
    for n in range(4, max_n + 1):
        fact = factorize(n)
        if len(fact) == 1 and fact[0][1] == 1:
            continue  # prime: empty graph
        ds, g = zn_divisor_graph(n)
        if g.n == 0:
            continue
        res.groups_tested += 1
        expect = 1 if any(a > 1 for _, a in fact) else 2
        try:
            gamma = domination_number(g, node_budget)
        except SkippedSizeCap as exc:
            res.skipped.append(f"Z({n}): {exc}")
            continue
        if gamma != expect:
            res.counterexamples.append((f"Z({n})", f"gamma={expect}", f"gamma={gamma}"))
    return _timed(res, t0)


# --- registry -------------------------------------------------------------------

THEOREM_IDS = (
    "thm13-iso-invariance",
    "thm14-totally-disconnected",
    "thm15-complete",
    "thm16-planarity",
    "thm345-star-path-cycle",
    "cor-c1-girth",
    "thm7-acyclic-equivalences",
    "thm8-300-alpha-theta",
    "t24-regular-zn",
    "t24-degree-formula-zn",
    "t22-domination-zn",
)


def run_verifiers(
    theorem_ids: list[str] | str = "all",
    max_order: int = 100,
    max_n: int = 2000,
    seed: int = 0,
    vertex_cap: int = 5000,
    node_budget: int = DEFAULT_NODE_BUDGET,
    iso_size_cap: int = DEFAULT_ISO_SIZE_CAP,
) -> list[VerificationResult]:
    if theorem_ids == "all":
        ids = list(THEOREM_IDS)
    else:
        ids = list(theorem_ids)
        for tid in ids:
            if tid not in THEOREM_IDS:
                raise UnknownTheoremId(tid)
    catalog = default_catalog(max_order)
    dispatch: dict[str, Callable[[], VerificationResult]] = {
        "thm13-iso-invariance": lambda: verify_iso_invariance_catalog(
            catalog, seed=seed, iso_size_cap=iso_size_cap, vertex_cap=vertex_cap
        ),
        "thm14-totally-disconnected": lambda: verify_totally_disconnected(catalog, vertex_cap),
        "thm15-complete": lambda: verify_complete(catalog, vertex_cap),
        "thm16-planarity": lambda: verify_planarity_classification(max_order, vertex_cap),
        "thm345-star-path-cycle": lambda: verify_star_path_cycle(catalog, vertex_cap),
        "cor-c1-girth": lambda: verify_girth(catalog, vertex_cap),
        "thm7-acyclic-equivalences": lambda: verify_acyclic_equivalences(catalog, vertex_cap),
        "thm8-300-alpha-theta": lambda: verify_alpha_theta(catalog, vertex_cap, node_budget),
        "t24-regular-zn": lambda: verify_regular_zn(max_n),
        "t24-degree-formula-zn": lambda: verify_degree_formula_zn(max_n),
        "t22-domination-zn": lambda: verify_domination_zn(max_n, node_budget),
    }
    return [dispatch[tid]() for tid in ids]
