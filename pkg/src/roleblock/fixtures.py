"""Small kinship-flavoured fixtures used by the tests, docs, and CLI examples."""

from .core import ActorSet, MultiNetwork, Partition, Relation
from .hypergraph import FHyperStructure, MultiHypergraph, UndirectedHypergraph


def family_three():
    """Three family members: a sister tie, a brother tie, and a shared parent.

    b is a's sister, a is b's brother, and d is the parent of both.
    """
    actors = ActorSet(["a", "b", "d"])
    return MultiNetwork(
        actors,
        [
            ("S", Relation.from_label_pairs(actors, [("a", "b")])),
            ("B", Relation.from_label_pairs(actors, [("b", "a")])),
            ("P", Relation.from_label_pairs(actors, [("a", "d"), ("b", "d")])),
        ],
    )


def family_three_merged():
    """The same family with the sister and brother ties merged into a sibling tie."""
    actors = ActorSet(["a", "b", "d"])
    return MultiNetwork(
        actors,
        [
            ("S", Relation.from_label_pairs(actors, [("a", "b"), ("b", "a")])),
            ("P", Relation.from_label_pairs(actors, [("a", "d"), ("b", "d")])),
        ],
    )


def generations_partition(actors):
    """The two generations of the three-member family: {a, b} and {d}."""
    return Partition.from_label_blocks(actors, [["a", "b"], ["d"]])


def single_parent_graph():
    """Two children pointing at one shared parent: edges b -> a and c -> a."""
    actors = ActorSet(["a", "b", "c"])
    return MultiNetwork(
        actors, [("R", Relation.from_label_pairs(actors, [("b", "a"), ("c", "a")]))]
    )


def mirrored_pair_graph():
    """Four actors with two crossing ties; merging the primed pairs is not regular.

    Edges b -> a and a' -> b'.  The quotient by {a, a'} | {b, b'} has edges in
    both directions between the two blocks, so its square is the diagonal while
    the square of the original relation is empty.
    """
    actors = ActorSet(["a", "a'", "b", "b'"])
    return MultiNetwork(
        actors, [("R", Relation.from_label_pairs(actors, [("b", "a"), ("a'", "b'")]))]
    )


def mirrored_pair_partition(actors):
    return Partition.from_label_blocks(actors, [["a", "a'"], ["b", "b'"]])


def _tree_actors():
    return ActorSet(["r", "a", "b", "a1", "a2", "b1", "b2"])


def parent_tree_hyper():
    """A three-generation family tree as a parents structure.

    Each hyperedge points from a person to the set of their parents: r's
    parents are {a, b}, a's parents are {a1, a2}, b's parents are {b1, b2}.
    """
    actors = _tree_actors()
    h = FHyperStructure.from_label_edges(
        actors,
        [("r", ["a", "b"]), ("a", ["a1", "a2"]), ("b", ["b1", "b2"])],
    )
    return MultiHypergraph(actors, [("H", h)])


def parent_grandparent_hyper():
    """The family tree's parents structure alongside its grandparents structure."""
    actors = _tree_actors()
    h1 = FHyperStructure.from_label_edges(
        actors,
        [("r", ["a", "b"]), ("a", ["a1", "a2"]), ("b", ["b1", "b2"])],
    )
    h2 = FHyperStructure.from_label_edges(actors, [("r", ["a1", "a2", "b1", "b2"])])
    return MultiHypergraph(actors, [("H1", h1), ("H2", h2)])


def tree_generations_partition(actors):
    """The three generations of the family tree."""
    return Partition.from_label_blocks(
        actors, [["r"], ["a", "b"], ["a1", "a2", "b1", "b2"]]
    )


def fanout_pair_hyper():
    """One root hyperedge feeding two overlapping target families.

    H1 sends r to {a, b}; H2 sends a to {a1, a2} and b to {a2, b1, b2}.  The
    two ways of composing H2 after H1 disagree: branchwise composition keeps
    two hyperedges at r, merging composition unions them into one.
    """
    actors = _tree_actors()
    h1 = FHyperStructure.from_label_edges(actors, [("r", ["a", "b"])])
    h2 = FHyperStructure.from_label_edges(
        actors, [("a", ["a1", "a2"]), ("b", ["a2", "b1", "b2"])]
    )
    return MultiHypergraph(actors, [("H1", h1), ("H2", h2)])


def coauthor_undirected():
    """Five authors and three papers: {a,c,d}, {a,b}, and {b,c,e}."""
    actors = ActorSet(["a", "b", "c", "d", "e"])
    return UndirectedHypergraph.from_label_edges(
        actors, [["a", "c", "d"], ["a", "b"], ["b", "c", "e"]]
    )
