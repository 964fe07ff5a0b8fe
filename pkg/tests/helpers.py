"""Shared fuzz generators and independent oracles for the test-suite.

The oracles here stay deliberately naive (nested loops over label pairs,
direct quantifier translation) so they exercise a different code path from
the library implementations they check.
"""

from roleblock import (
    ActorSet,
    FHyperStructure,
    MultiHypergraph,
    MultiNetwork,
    Partition,
    Relation,
)


def actors(n, prefix="v"):
    return ActorSet([f"{prefix}{i}" for i in range(n)])


def random_relation(rng, acts, density=0.25):
    n = len(acts)
    pairs = [(i, j) for i in range(n) for j in range(n) if rng.random() < density]
    return Relation.from_pairs(acts, pairs)


def random_network(rng, n=4, k=2, density=0.25):
    acts = actors(n)
    return MultiNetwork(
        acts, [(f"R{i}", random_relation(rng, acts, density)) for i in range(k)]
    )


def random_fhyper(rng, acts, max_edges=2, max_target=2):
    fams = []
    for _ in range(len(acts)):
        fam = []
        for _ in range(rng.randint(0, max_edges)):
            size = rng.randint(0, min(max_target, len(acts)))
            fam.append(rng.sample(range(len(acts)), size))
        fams.append(fam)
    return FHyperStructure(acts, fams)


def random_multihyper(rng, n=4, k=2, max_edges=2, max_target=2):
    acts = actors(n)
    return MultiHypergraph(
        acts, [(f"H{i}", random_fhyper(rng, acts, max_edges, max_target)) for i in range(k)]
    )


def random_partition(rng, acts):
    n = len(acts)
    if n == 0:
        return Partition(acts, ())
    width = rng.randint(1, n)
    return Partition(acts, [rng.randrange(width) for _ in range(n)])


# ── independent oracles ──────────────────────────────────────────────────────

def compose_oracle(r2, r1):
    """Triple loop over all (v, u, w); checks every intermediate directly."""
    n = len(r1.actors)
    pairs = []
    for v in range(n):
        for w in range(n):
            if any(r1.has(v, u) and r2.has(u, w) for u in range(n)):
                pairs.append((v, w))
    return Relation.from_pairs(r1.actors, pairs)


def tight_oracle(k, h):
    """Per-branch concatenation, written straight from the defining clause."""
    edges = []
    for a, v_set in h.edges():
        for b in v_set:
            for u_set in k.targets[b]:
                edges.append((a, u_set))
    return FHyperStructure.from_edges(h.actors, edges)


def loose_oracle(k, h):
    """Union-of-targets concatenation; one hyperedge per source hyperedge."""
    edges = []
    for a, v_set in h.edges():
        union = set()
        for b in v_set:
            for u_set in k.targets[b]:
                union.update(u_set)
        edges.append((a, tuple(sorted(union))))
    return FHyperStructure.from_edges(h.actors, edges)


def _match_both_ways(u_set, u2_set, e):
    forward = all(any(e.same_block(u, u2) for u2 in u2_set) for u in u_set)
    backward = all(any(e.same_block(u, u2) for u in u_set) for u2 in u2_set)
    return forward and backward


def pp_bisimulation_oracle(h, e):
    """Two-clause lifted condition, both directions, over all equivalent pairs.

    Clause one asks every target of a to be matched at a2; clause two asks the
    mirror.  The library's regularity check tests clause one only (the mirror
    follows from symmetry of the partition); this oracle checks both.
    """
    n = len(h.actors)
    for a in range(n):
        for a2 in range(n):
            if not e.same_block(a, a2):
                continue
            fam, fam2 = h.targets[a], h.targets[a2]
            clause_one = all(
                any(_match_both_ways(u_set, u2_set, e) for u2_set in fam2) for u_set in fam
            )
            clause_two = all(
                any(_match_both_ways(u_set, u2_set, e) for u_set in fam) for u2_set in fam2
            )
            if not (clause_one and clause_two):
                return False
    return True


def table_is_associative(s):
    cay = s.cayley
    m = len(cay)
    return all(
        cay[cay[i][j]][k] == cay[i][cay[j][k]]
        for i in range(m)
        for j in range(m)
        for k in range(m)
    )
