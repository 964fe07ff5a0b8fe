"""F-hypergraph structures, their two composition operations, and regularity.

An F-hypergraph assigns to each actor a family of target sets.  The canonical
form keeps, per actor, a sorted tuple of sorted index tuples (set-of-sets
semantics: duplicate targets collapse, multiplicity is never tracked).  An
empty target tuple ``()`` is a legal hyperedge target and is distinct from an
actor having no hyperedges at all.
"""

from .core import (
    MAX_ORACLE_ACTORS,
    Partition,
    Relation,
    _check_relation_name,
    enumerate_partitions,
    quotient_actor_set,
)
from .errors import ResourceLimitError, StructuralError


class FHyperStructure:
    """Per-actor families of target sets over one ActorSet, in canonical form."""

    __slots__ = ("actors", "targets")

    def __init__(self, actors, targets):
        targets = list(targets)
        if len(targets) != len(actors):
            raise StructuralError(f"expected {len(actors)} target families, got {len(targets)}")
        n = len(actors)
        canon = []
        for family in targets:
            sets = set()
            for t in family:
                t = tuple(sorted(set(t)))
                for j in t:
                    if not (0 <= j < n):
                        raise StructuralError(f"target index {j} out of range for {n} actors")
                sets.add(t)
            canon.append(tuple(sorted(sets)))
        self.actors = actors
        self.targets = tuple(canon)

    @classmethod
    def from_edges(cls, actors, edges):
        """Build from (source index, target index iterable) hyperedges."""
        fams = [[] for _ in range(len(actors))]
        for a, t in edges:
            if not (0 <= a < len(actors)):
                raise StructuralError(f"source index {a} out of range")
            fams[a].append(tuple(t))
        return cls(actors, fams)

    @classmethod
    def from_label_edges(cls, actors, edges):
        return cls.from_edges(
            actors,
            [(actors.resolve(src), [actors.resolve(x) for x in tgt]) for src, tgt in edges],
        )

    def edges(self):
        """Yield (source, target tuple) hyperedges in canonical order."""
        for a, family in enumerate(self.targets):
            for t in family:
                yield a, t

    def label_edges(self):
        labs = self.actors.labels
        return [(labs[a], tuple(labs[j] for j in t)) for a, t in self.edges()]

    @property
    def edge_count(self):
        return sum(len(family) for family in self.targets)

    @property
    def is_empty(self):
        return self.edge_count == 0

    @property
    def has_empty_target(self):
        return any(() in family for family in self.targets)

    def __eq__(self, other):
        return (
            isinstance(other, FHyperStructure)
            and self.actors == other.actors
            and self.targets == other.targets
        )

    def __hash__(self):
        return hash((self.actors.labels, self.targets))

    def __repr__(self):
        return f"FHyperStructure({self.label_edges()!r})"


class UndirectedHypergraph:
    """A plain hypergraph: a set of vertex subsets over one ActorSet."""

    __slots__ = ("actors", "hyperedges")

    def __init__(self, actors, hyperedges):
        n = len(actors)
        edges = set()
        for edge in hyperedges:
            edge = tuple(sorted(set(edge)))
            for j in edge:
                if not (0 <= j < n):
                    raise StructuralError(f"vertex index {j} out of range for {n} actors")
            edges.add(edge)
        self.actors = actors
        self.hyperedges = tuple(sorted(edges))

    @classmethod
    def from_label_edges(cls, actors, hyperedges):
        return cls(actors, [[actors.resolve(x) for x in edge] for edge in hyperedges])

    def label_hyperedges(self):
        labs = self.actors.labels
        return [[labs[j] for j in edge] for edge in self.hyperedges]

    def __eq__(self, other):
        return (
            isinstance(other, UndirectedHypergraph)
            and self.actors == other.actors
            and self.hyperedges == other.hyperedges
        )

    def __hash__(self):
        return hash((self.actors.labels, self.hyperedges))

    def __repr__(self):
        return f"UndirectedHypergraph({self.label_hyperedges()!r})"


class MultiHypergraph:
    """One actor roster carrying named F-hypergraph structures, in declaration order."""

    __slots__ = ("actors", "relations")

    def __init__(self, actors, relations):
        items = list(relations.items()) if isinstance(relations, dict) else list(relations)
        seen = set()
        rels = {}
        for name, h in items:
            _check_relation_name(name, seen)
            h.actors.require_same(actors)
            rels[name] = h
        self.actors = actors
        self.relations = rels

    @property
    def k(self):
        return len(self.relations)

    @property
    def names(self):
        return tuple(self.relations)

    def __eq__(self, other):
        return (
            isinstance(other, MultiHypergraph)
            and self.actors == other.actors
            and self.relations == other.relations
            and self.names == other.names
        )

    def __repr__(self):
        return f"MultiHypergraph({list(self.actors.labels)!r}, {list(self.relations)!r})"


# ── basic queries and conversions ────────────────────────────────────────────

def neighbourhood(h, actor):
    """The family of target sets of one actor, as sorted label tuples."""
    a = h.actors.resolve(actor) if isinstance(actor, str) else actor
    if not (0 <= a < len(h.actors)):
        raise StructuralError(f"actor index {a} out of range")
    labs = h.actors.labels
    return tuple(tuple(labs[j] for j in t) for t in h.targets[a])


def from_undirected(u):
    """Directed reading of a plain hypergraph.

    Every hyperedge W contributes, for each member a, the hyperedge
    (a, W minus {a}); a singleton hyperedge {a} therefore becomes (a, ()).
    """
    edges = []
    for edge in u.hyperedges:
        for a in edge:
            edges.append((a, tuple(x for x in edge if x != a)))
    return FHyperStructure.from_edges(u.actors, edges)


def is_graph_like(h):
    """True when every target is a singleton, i.e. the structure encodes a relation."""
    return all(all(len(t) == 1 for t in family) for family in h.targets)


def to_relation(h):
    """Collapse a singleton-target structure to the relation it encodes."""
    if not is_graph_like(h):
        raise StructuralError("structure has a non-singleton target; not graph-like")
    return Relation.from_pairs(h.actors, [(a, t[0]) for a, t in h.edges()])


def embed_relation(r):
    """The singleton-target structure encoding a relation: (a, {b}) per pair (a, b)."""
    return FHyperStructure.from_edges(r.actors, [(i, (j,)) for i, j in r.pairs()])


# ── the two compositions ─────────────────────────────────────────────────────

def tight_compose(k, h):
    """Branch-preserving composite.

    (a, U) is a hyperedge iff h has some (a, V) with a member b such that
    (b, U) is a hyperedge of k.  Each branch through V contributes its own
    target set.
    """
    k.actors.require_same(h.actors)
    fams = []
    for family in h.targets:
        out = set()
        for V in family:
            for b in V:
                out.update(k.targets[b])
        fams.append(out)
    return FHyperStructure(h.actors, fams)


def loose_compose(k, h, prune_empty=False):
    """Branch-merging composite.

    Each hyperedge (a, V) of h yields exactly one hyperedge (a, W) where W is
    the union of every k-target of every member of V.  W may be empty (when V
    is empty or no member of V has k-hyperedges); the literal mode keeps such
    hyperedges, ``prune_empty`` deletes them afterwards.
    """
    k.actors.require_same(h.actors)
    fams = []
    for family in h.targets:
        out = set()
        for V in family:
            w = set()
            for b in V:
                for U in k.targets[b]:
                    w.update(U)
            out.add(tuple(sorted(w)))
        if prune_empty:
            out.discard(())
        fams.append(out)
    return FHyperStructure(h.actors, fams)


def prune_empty_targets(h):
    """Drop every hyperedge whose target set is empty."""
    return FHyperStructure(
        h.actors, [[t for t in family if t] for family in h.targets]
    )


# ── blockmodels and regularity ───────────────────────────────────────────────

def blockmodel_hypergraph(h, e):
    """Quotient structure: ([a], X) is a hyperedge iff some (a', U) of h has
    [a'] = [a] and X = {[u] | u in U}."""
    h.actors.require_same(e.actors)
    q = quotient_actor_set(e)
    fams = [set() for _ in range(len(q))]
    for a, t in h.edges():
        fams[e.block_of[a]].add(tuple(sorted({e.block_of[j] for j in t})))
    return q, FHyperStructure(q, fams)


def blockmodel_multihypergraph(mh, e):
    """Simultaneous blockmodel of every structure in a multirelational hypergraph."""
    mh.actors.require_same(e.actors)
    q = quotient_actor_set(e)
    rels = []
    for name, h in mh.relations.items():
        fams = [set() for _ in range(len(q))]
        for a, t in h.edges():
            fams[e.block_of[a]].add(tuple(sorted({e.block_of[j] for j in t})))
        rels.append((name, FHyperStructure(q, fams)))
    return MultiHypergraph(q, rels)


def _targets_match(U, U2, e):
    # every member of U has an equivalent in U2 and vice versa
    return all(any(e.same_block(u, u2) for u2 in U2) for u in U) and all(
        any(e.same_block(u, u2) for u in U) for u2 in U2
    )


def is_regular_hyper(h, e):
    """Direct check of hypergraph regularity.

    For every equivalent pair (a, a') and every hyperedge (a, U) there must be
    a hyperedge (a', U') whose target matches U member-for-member up to e,
    in both directions.
    """
    h.actors.require_same(e.actors)
    for block in e.blocks():
        for a in block:
            for a2 in block:
                if a2 == a:
                    continue
                for U in h.targets[a]:
                    if not any(_targets_match(U, U2, e) for U2 in h.targets[a2]):
                        return False
    return True


def multihypergraph_passes(mh, e):
    return all(is_regular_hyper(h, e) for h in mh.relations.values())


def max_regular_hyper_partition(mh, seed=None):
    """Coarsest partition refining ``seed`` that is regular for every structure.

    Same splitting scheme as for graphs, with the signature of an actor being
    its family of block-level target sets per structure.
    """
    if seed is None:
        seed = Partition.universal(mh.actors)
    seed.actors.require_same(mh.actors)
    n = len(mh.actors)
    structures = list(mh.relations.values())

    block_of = list(seed.block_of)
    num_blocks = len(set(block_of))
    while True:
        assignment = {}
        new_block_of = []
        for i in range(n):
            sig = [block_of[i]]
            for h in structures:
                sig.append(frozenset(frozenset(block_of[j] for j in t) for t in h.targets[i]))
            key = tuple(sig)
            if key not in assignment:
                assignment[key] = len(assignment)
            new_block_of.append(assignment[key])
        if len(assignment) == num_blocks:
            return Partition(mh.actors, new_block_of)
        block_of = new_block_of
        num_blocks = len(assignment)


def coarsest_regular_hyper_bruteforce(mh):
    """Scan every partition and return the coarsest regular one (oracle)."""
    n = len(mh.actors)
    if n > MAX_ORACLE_ACTORS:
        raise ResourceLimitError(
            f"brute-force search is capped at {MAX_ORACLE_ACTORS} actors, got {n}", count=n
        )
    best = None
    for p in enumerate_partitions(mh.actors):
        if best is not None and p.num_blocks >= best.num_blocks:
            continue
        if multihypergraph_passes(mh, p):
            best = p
    return best
