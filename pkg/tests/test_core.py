import random

import pytest

from helpers import (
    actors,
    compose_oracle,
    random_network,
    random_partition,
    random_relation,
)
from roleblock import (
    ActorSet,
    MultiNetwork,
    Partition,
    Relation,
    ResourceLimitError,
    StructuralError,
    blockmodel_graph,
    blockmodel_network,
    coarsest_regular_bruteforce,
    compose_relations,
    empty_relation,
    enumerate_partitions,
    identity_relation,
    is_inward_regular,
    is_outward_regular,
    is_regular,
    max_regular_partition,
    network_passes,
)
from roleblock.fixtures import (
    family_three,
    mirrored_pair_graph,
    mirrored_pair_partition,
    single_parent_graph,
)


# ── construction and canonical forms ─────────────────────────────────────────

class TestActorSet:
    def test_duplicate_labels_rejected(self):
        with pytest.raises(StructuralError, match="duplicate"):
            ActorSet(["a", "b", "a"])

    def test_empty_label_rejected(self):
        with pytest.raises(StructuralError):
            ActorSet(["a", ""])

    def test_resolve_unknown(self):
        with pytest.raises(StructuralError, match="unknown actor 'z'"):
            ActorSet(["a"]).resolve("z")

    def test_empty_roster_allowed(self):
        assert len(ActorSet([])) == 0


class TestRelation:
    def test_equality_is_bitwise(self):
        acts = actors(3)
        r1 = Relation.from_pairs(acts, [(0, 1), (0, 1), (2, 0)])
        r2 = Relation.from_pairs(acts, [(2, 0), (0, 1)])
        assert r1 == r2
        assert hash(r1) == hash(r2)

    def test_index_out_of_range(self):
        with pytest.raises(StructuralError):
            Relation.from_pairs(actors(2), [(0, 2)])

    def test_pairs_row_major(self):
        acts = actors(3)
        r = Relation.from_pairs(acts, [(2, 0), (0, 2), (0, 1)])
        assert list(r.pairs()) == [(0, 1), (0, 2), (2, 0)]

    def test_transpose(self):
        acts = actors(3)
        r = Relation.from_pairs(acts, [(0, 1), (2, 1)])
        assert sorted(r.transpose().pairs()) == [(1, 0), (1, 2)]


class TestPartition:
    def test_first_occurrence_numbering(self):
        p = Partition(actors(4), [7, 3, 7, 0])
        assert p.block_of == (0, 1, 0, 2)
        for i, b in enumerate(p.block_of):
            assert b <= 1 + max(p.block_of[:i], default=-1)

    def test_blocks(self):
        p = Partition(actors(4), [0, 1, 0, 2])
        assert p.blocks() == ((0, 2), (1,), (3,))

    def test_from_label_blocks_validates(self):
        acts = actors(3)
        with pytest.raises(StructuralError, match="missing"):
            Partition.from_label_blocks(acts, [["v0", "v1"]])
        with pytest.raises(StructuralError, match="two blocks"):
            Partition.from_label_blocks(acts, [["v0", "v1"], ["v1", "v2"]])

    def test_refines(self):
        acts = actors(4)
        fine = Partition(acts, [0, 0, 1, 2])
        coarse = Partition(acts, [0, 0, 1, 1])
        assert fine.refines(coarse)
        assert not coarse.refines(fine)
        assert Partition.discrete(acts).refines(fine)
        assert fine.refines(Partition.universal(acts))


class TestMultiNetwork:
    def test_reserved_name(self):
        acts = actors(2)
        with pytest.raises(StructuralError, match="reserved"):
            MultiNetwork(acts, [("0", empty_relation(acts))])

    def test_mismatched_actor_sets(self):
        with pytest.raises(StructuralError):
            MultiNetwork(actors(2), [("R", empty_relation(actors(3)))])


# ── composition ──────────────────────────────────────────────────────────────

class TestCompose:
    def test_family_sister_squared_is_zero(self):
        net = family_three()
        s = net.relations["S"]
        assert compose_relations(s, s) == empty_relation(net.actors)

    def test_empty_absorbs(self):
        rng = random.Random(1)
        for _ in range(20):
            acts = actors(rng.randint(0, 5))
            r = random_relation(rng, acts, 0.4)
            zero = empty_relation(acts)
            assert compose_relations(r, zero) == zero
            assert compose_relations(zero, r) == zero

    def test_parent_after_sister(self):
        net = family_three()
        p, s = net.relations["P"], net.relations["S"]
        got = compose_relations(p, s)
        assert got == compose_oracle(p, s)
        assert got.label_pairs() == [("a", "d")]

    def test_matches_oracle_on_fuzz(self):
        rng = random.Random(2)
        for _ in range(100):
            acts = actors(rng.randint(0, 5))
            r1 = random_relation(rng, acts, 0.3)
            r2 = random_relation(rng, acts, 0.3)
            assert compose_relations(r2, r1) == compose_oracle(r2, r1)

    def test_mismatched_actor_sets(self):
        with pytest.raises(StructuralError):
            compose_relations(empty_relation(actors(2)), empty_relation(actors(3)))

    def test_associativity_on_fuzz(self):
        rng = random.Random(3)
        for _ in range(100):
            acts = actors(rng.randint(0, 6))
            r1, r2, r3 = (random_relation(rng, acts, 0.3) for _ in range(3))
            left = compose_relations(compose_relations(r3, r2), r1)
            right = compose_relations(r3, compose_relations(r2, r1))
            assert left == right


class TestIdentityAndEmpty:
    def test_identity_pairs(self):
        assert sorted(identity_relation(actors(3)).pairs()) == [(0, 0), (1, 1), (2, 2)]

    def test_identity_laws(self):
        rng = random.Random(4)
        for _ in range(30):
            acts = actors(rng.randint(0, 6))
            r = random_relation(rng, acts, 0.3)
            delta = identity_relation(acts)
            assert compose_relations(delta, r) == r
            assert compose_relations(r, delta) == r

    def test_empty_universe(self):
        acts = actors(0)
        assert identity_relation(acts) == empty_relation(acts)

    def test_blockmodel_of_empty_relation(self):
        acts = actors(4)
        e = Partition(acts, [0, 0, 1, 1])
        _, quotient = blockmodel_graph(empty_relation(acts), e)
        assert quotient.is_empty


# ── blockmodels ──────────────────────────────────────────────────────────────

class TestBlockmodel:
    def test_single_parent_two_generations(self):
        net = single_parent_graph()
        e = Partition.from_label_blocks(net.actors, [["a"], ["b", "c"]])
        q, rel = blockmodel_graph(net.relations["R"], e)
        assert q.labels == ("{a}", "{b,c}")
        assert rel.label_pairs() == [("{b,c}", "{a}")]

    def test_discrete_partition_is_isomorphic(self):
        rng = random.Random(5)
        for _ in range(20):
            acts = actors(rng.randint(1, 5))
            r = random_relation(rng, acts, 0.3)
            q, rel = blockmodel_graph(r, Partition.discrete(acts))
            assert q.labels == tuple("{%s}" % lab for lab in acts.labels)
            assert list(rel.pairs()) == list(r.pairs())

    def test_mirrored_pair_quotient(self):
        net = mirrored_pair_graph()
        e = mirrored_pair_partition(net.actors)
        _, rel = blockmodel_graph(net.relations["R"], e)
        assert sorted(rel.pairs()) == [(0, 1), (1, 0)]

    def test_simultaneous_blockmodel(self):
        net = family_three()
        e = Partition.universal(net.actors)
        quotient = blockmodel_network(net, e)
        assert quotient.names == net.names
        assert len(quotient.actors) == 1

    def test_blockmodel_equals_pushforward_along_quotient_map(self):
        from roleblock.reduction import pushforward_network, quotient_map

        rng = random.Random(12)
        for _ in range(20):
            net = random_network(rng, n=rng.randint(1, 5), k=2, density=0.3)
            e = random_partition(rng, net.actors)
            assert blockmodel_network(net, e) == pushforward_network(net, quotient_map(e))

    def test_colliding_quotient_labels_are_disambiguated(self):
        # a label containing a comma can make two blocks render identically
        acts = ActorSet(["a,b", "a", "b"])
        e = Partition.from_blocks(acts, [[0], [1, 2]])
        q, _ = blockmodel_graph(empty_relation(acts), e)
        assert q.labels == ("{a,b}", "{a,b}#2")


# ── regularity checks ────────────────────────────────────────────────────────

class TestRegularity:
    def test_single_parent_merging_child_with_parent_fails(self):
        net = single_parent_graph()
        r = net.relations["R"]
        e1 = Partition.from_label_blocks(net.actors, [["a", "b"], ["c"]])
        assert not is_outward_regular(r, e1)
        assert not is_inward_regular(r, e1)

    def test_single_parent_generations_is_regular(self):
        net = single_parent_graph()
        r = net.relations["R"]
        e2 = Partition.from_label_blocks(net.actors, [["a"], ["b", "c"]])
        assert is_outward_regular(r, e2)
        assert is_inward_regular(r, e2)
        assert is_regular(r, e2)

    def test_discrete_always_regular(self):
        rng = random.Random(6)
        for _ in range(30):
            acts = actors(rng.randint(0, 5))
            r = random_relation(rng, acts, 0.4)
            assert is_regular(r, Partition.discrete(acts))

    def test_single_parent_universal_not_regular(self):
        net = single_parent_graph()
        assert not is_regular(net.relations["R"], Partition.universal(net.actors))

    def test_empty_relation_always_regular(self):
        rng = random.Random(7)
        for _ in range(20):
            acts = actors(rng.randint(0, 5))
            assert is_regular(empty_relation(acts), random_partition(rng, acts))


# ── coarsest regular partition ───────────────────────────────────────────────

class TestMaxRegularPartition:
    def test_single_parent(self):
        net = single_parent_graph()
        got = max_regular_partition(net, mode="both")
        assert got.label_blocks() == [["a"], ["b", "c"]]

    def test_discrete_seed_stays_discrete(self):
        rng = random.Random(8)
        for _ in range(10):
            net = random_network(rng, n=rng.randint(1, 5))
            seed = Partition.discrete(net.actors)
            assert max_regular_partition(net, seed=seed) == seed

    def test_mirrored_pair(self):
        net = mirrored_pair_graph()
        got = max_regular_partition(net, mode="both")
        assert got.label_blocks() == [["a", "b'"], ["a'", "b"]]
        assert got == coarsest_regular_bruteforce(net, mode="both")

    def test_no_relations_returns_seed(self):
        acts = actors(4)
        net = MultiNetwork(acts, [])
        seed = Partition(acts, [0, 0, 1, 1])
        assert max_regular_partition(net, seed=seed) == seed

    def test_output_refines_seed_and_passes(self):
        rng = random.Random(9)
        for _ in range(60):
            net = random_network(rng, n=rng.randint(1, 5), k=rng.randint(1, 3), density=0.3)
            seed = random_partition(rng, net.actors)
            for mode in ("out", "in", "both"):
                got = max_regular_partition(net, mode=mode, seed=seed)
                assert got.refines(seed)
                assert network_passes(net, got, mode)

    def test_agrees_with_bruteforce(self):
        rng = random.Random(10)
        for _ in range(40):
            net = random_network(rng, n=rng.randint(0, 5), k=rng.randint(0, 3), density=0.3)
            for mode in ("out", "in", "both"):
                assert max_regular_partition(net, mode=mode) == coarsest_regular_bruteforce(
                    net, mode=mode
                )

    def test_bad_mode(self):
        with pytest.raises(StructuralError):
            max_regular_partition(family_three(), mode="sideways")


# ── enumeration and brute force ──────────────────────────────────────────────

class TestEnumeratePartitions:
    @pytest.mark.parametrize("n,count", [(0, 1), (1, 1), (2, 2), (3, 5), (4, 15), (5, 52)])
    def test_counts(self, n, count):
        assert sum(1 for _ in enumerate_partitions(actors(n))) == count

    def test_all_distinct_and_canonical(self):
        seen = set()
        for p in enumerate_partitions(actors(4)):
            assert p not in seen
            seen.add(p)
            for i, b in enumerate(p.block_of):
                assert b <= 1 + max(p.block_of[:i], default=-1)

    def test_first_is_universal_last_is_discrete(self):
        acts = actors(4)
        ps = list(enumerate_partitions(acts))
        assert ps[0] == Partition.universal(acts)
        assert ps[-1] == Partition.discrete(acts)

    def test_size_cap(self):
        with pytest.raises(ResourceLimitError):
            enumerate_partitions(actors(11))


class TestBruteforce:
    def test_single_parent(self):
        got = coarsest_regular_bruteforce(single_parent_graph(), mode="both")
        assert got.label_blocks() == [["a"], ["b", "c"]]

    def test_no_relations_gives_universal(self):
        acts = actors(4)
        net = MultiNetwork(acts, [])
        assert coarsest_regular_bruteforce(net) == Partition.universal(acts)

    def test_directed_path_forces_discrete(self):
        acts = ActorSet(["a", "b", "c"])
        net = MultiNetwork(
            acts, [("R", Relation.from_label_pairs(acts, [("a", "b"), ("b", "c")]))]
        )
        got = coarsest_regular_bruteforce(net, mode="both")
        assert got == Partition.discrete(acts)

    def test_size_cap(self):
        rng = random.Random(11)
        net = random_network(rng, n=9, k=1)
        with pytest.raises(ResourceLimitError):
            coarsest_regular_bruteforce(net)
