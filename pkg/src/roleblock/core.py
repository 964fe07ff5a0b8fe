"""Actors, binary relations, partitions, and regular-equivalence machinery.

Relations are stored as per-row target bitmasks, so equality and hashing are
bitwise and composition is a handful of integer ORs per actor.  Everything in
this module is an immutable value: operations return fresh objects and never
mutate their inputs.
"""

from .errors import ResourceLimitError, StructuralError

MODES = ("out", "in", "both")

MAX_ENUM_ACTORS = 10
MAX_ORACLE_ACTORS = 8


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _check_mode(mode):
    if mode not in MODES:
        raise StructuralError(f"mode must be one of {MODES}, got {mode!r}")


class ActorSet:
    """An ordered roster of distinct actor labels; indices follow roster order."""

    __slots__ = ("labels", "index")

    def __init__(self, labels):
        labels = tuple(labels)
        for lab in labels:
            if not isinstance(lab, str) or not lab:
                raise StructuralError(f"actor labels must be non-empty strings, got {lab!r}")
        if len(set(labels)) != len(labels):
            dupes = sorted({lab for lab in labels if labels.count(lab) > 1})
            raise StructuralError(f"duplicate actor labels: {', '.join(dupes)}")
        self.labels = labels
        self.index = {lab: i for i, lab in enumerate(labels)}

    def __len__(self):
        return len(self.labels)

    def __eq__(self, other):
        return isinstance(other, ActorSet) and self.labels == other.labels

    def __hash__(self):
        return hash(self.labels)

    def __repr__(self):
        return f"ActorSet({list(self.labels)!r})"

    def resolve(self, label):
        try:
            return self.index[label]
        except KeyError:
            raise StructuralError(f"unknown actor {label!r}") from None

    def require_same(self, other):
        if self != other:
            raise StructuralError("operands live on different actor sets")


class Relation:
    """A binary relation on an ActorSet; ``rows[i]`` has bit ``j`` set iff (i, j) holds."""

    __slots__ = ("actors", "rows")

    def __init__(self, actors, rows):
        rows = tuple(rows)
        n = len(actors)
        if len(rows) != n:
            raise StructuralError(f"expected {n} rows, got {len(rows)}")
        full = (1 << n) - 1
        for row in rows:
            if row & ~full:
                raise StructuralError("relation row refers to an actor index >= n")
        self.actors = actors
        self.rows = rows

    @classmethod
    def from_pairs(cls, actors, pairs):
        n = len(actors)
        rows = [0] * n
        for i, j in pairs:
            if not (0 <= i < n and 0 <= j < n):
                raise StructuralError(f"pair ({i}, {j}) out of range for {n} actors")
            rows[i] |= 1 << j
        return cls(actors, rows)

    @classmethod
    def from_label_pairs(cls, actors, pairs):
        return cls.from_pairs(actors, [(actors.resolve(a), actors.resolve(b)) for a, b in pairs])

    def pairs(self):
        """Yield index pairs in row-major order."""
        for i, row in enumerate(self.rows):
            for j in _bits(row):
                yield i, j

    def label_pairs(self):
        labs = self.actors.labels
        return [(labs[i], labs[j]) for i, j in self.pairs()]

    @property
    def is_empty(self):
        return not any(self.rows)

    def transpose(self):
        n = len(self.actors)
        rows = [0] * n
        for i, j in self.pairs():
            rows[j] |= 1 << i
        return Relation(self.actors, rows)

    def has(self, i, j):
        return bool(self.rows[i] >> j & 1)

    def __eq__(self, other):
        return (
            isinstance(other, Relation)
            and self.actors == other.actors
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.actors.labels, self.rows))

    def __repr__(self):
        return f"Relation({sorted(self.label_pairs())!r})"


class Partition:
    """A partition of an ActorSet with first-occurrence canonical block numbering."""

    __slots__ = ("actors", "block_of", "_masks")

    def __init__(self, actors, block_of):
        block_of = tuple(block_of)
        if len(block_of) != len(actors):
            raise StructuralError(f"expected {len(actors)} block assignments, got {len(block_of)}")
        remap = {}
        canon = []
        for b in block_of:
            if b not in remap:
                remap[b] = len(remap)
            canon.append(remap[b])
        self.actors = actors
        self.block_of = tuple(canon)
        masks = [0] * len(remap)
        for i, b in enumerate(self.block_of):
            masks[b] |= 1 << i
        self._masks = tuple(masks)

    @classmethod
    def universal(cls, actors):
        return cls(actors, [0] * len(actors))

    @classmethod
    def discrete(cls, actors):
        return cls(actors, range(len(actors)))

    @classmethod
    def from_blocks(cls, actors, blocks):
        """Build from index blocks; they must be disjoint and cover every actor."""
        block_of = [None] * len(actors)
        for b, block in enumerate(blocks):
            for i in block:
                if not (0 <= i < len(actors)):
                    raise StructuralError(f"actor index {i} out of range")
                if block_of[i] is not None:
                    raise StructuralError(f"actor {actors.labels[i]!r} occurs in two blocks")
                block_of[i] = b
        missing = [actors.labels[i] for i, b in enumerate(block_of) if b is None]
        if missing:
            raise StructuralError(f"actors missing from partition: {', '.join(missing)}")
        return cls(actors, block_of)

    @classmethod
    def from_label_blocks(cls, actors, blocks):
        return cls.from_blocks(actors, [[actors.resolve(lab) for lab in block] for block in blocks])

    @property
    def num_blocks(self):
        return len(self._masks)

    def blocks(self):
        return tuple(tuple(_bits(mask)) for mask in self._masks)

    def label_blocks(self):
        labs = self.actors.labels
        return [[labs[i] for i in block] for block in self.blocks()]

    def block_mask(self, b):
        return self._masks[b]

    def same_block(self, i, j):
        return self.block_of[i] == self.block_of[j]

    def refines(self, other):
        """True when every block of self sits inside a single block of other."""
        self.actors.require_same(other.actors)
        for mask in self._masks:
            first = (mask & -mask).bit_length() - 1
            if mask & ~other.block_mask(other.block_of[first]):
                return False
        return True

    def __eq__(self, other):
        return (
            isinstance(other, Partition)
            and self.actors == other.actors
            and self.block_of == other.block_of
        )

    def __hash__(self):
        return hash((self.actors.labels, self.block_of))

    def __repr__(self):
        return f"Partition({self.label_blocks()!r})"


class MultiNetwork:
    """One actor roster carrying named binary relations, in declaration order."""

    __slots__ = ("actors", "relations")

    def __init__(self, actors, relations):
        items = list(relations.items()) if isinstance(relations, dict) else list(relations)
        seen = set()
        rels = {}
        for name, rel in items:
            _check_relation_name(name, seen)
            rel.actors.require_same(actors)
            rels[name] = rel
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
            isinstance(other, MultiNetwork)
            and self.actors == other.actors
            and self.relations == other.relations
            and self.names == other.names
        )

    def __repr__(self):
        return f"MultiNetwork({list(self.actors.labels)!r}, {list(self.relations)!r})"


def _check_relation_name(name, seen):
    if not isinstance(name, str) or not name:
        raise StructuralError(f"relation names must be non-empty strings, got {name!r}")
    if name == "0":
        raise StructuralError("relation name '0' is reserved for the absorbing element")
    if name in seen:
        raise StructuralError(f"duplicate relation name {name!r}")
    seen.add(name)


# ── composition and the constant relations ──────────────────────────────────

def compose_relations(r2, r1):
    """Composite relation: (v, w) holds iff some u has (v, u) in r1 and (u, w) in r2.

    The argument order follows the word convention in which the left operand
    is applied last, so ``compose_relations(p, s)`` reads "p after s".
    """
    r2.actors.require_same(r1.actors)
    rows = []
    for mids in r1.rows:
        acc = 0
        for u in _bits(mids):
            acc |= r2.rows[u]
        rows.append(acc)
    return Relation(r1.actors, rows)


def identity_relation(actors):
    """The diagonal relation {(x, x)}; the unit for composition."""
    return Relation(actors, [1 << i for i in range(len(actors))])


def empty_relation(actors):
    """The all-zero relation; the absorbing element for composition."""
    return Relation(actors, [0] * len(actors))


# ── blockmodels ──────────────────────────────────────────────────────────────

def quotient_actor_set(e):
    """Actor set of a quotient: one actor per block, labelled {m1,m2,...}.

    Member labels are sorted lexicographically inside the braces; a "#k"
    suffix disambiguates in the unlikely event two blocks render identically.
    """
    labels = []
    used = {}
    for block in e.blocks():
        members = sorted(e.actors.labels[i] for i in block)
        lab = "{" + ",".join(members) + "}"
        if lab in used:
            used[lab] += 1
            lab = f"{lab}#{used[lab]}"
        else:
            used[lab] = 1
        labels.append(lab)
    return ActorSet(labels)


def blockmodel_graph(r, e):
    """Quotient of a relation by a partition.

    Block X relates to block Y iff some member of X relates to some member
    of Y.  Returns the quotient ActorSet together with the quotient relation.
    """
    r.actors.require_same(e.actors)
    q = quotient_actor_set(e)
    rows = [0] * len(q)
    for i, j in r.pairs():
        rows[e.block_of[i]] |= 1 << e.block_of[j]
    return q, Relation(q, rows)


def blockmodel_network(net, e):
    """Simultaneous blockmodel of every relation in a network."""
    net.actors.require_same(e.actors)
    q = quotient_actor_set(e)
    rels = []
    for name, rel in net.relations.items():
        rows = [0] * len(q)
        for i, j in rel.pairs():
            rows[e.block_of[i]] |= 1 << e.block_of[j]
        rels.append((name, Relation(q, rows)))
    return MultiNetwork(q, rels)


# ── regularity checks ────────────────────────────────────────────────────────

def is_outward_regular(r, e):
    """Direct check of outward regularity.

    For every equivalent pair (a, a') and every edge (a, b) there must be an
    edge (a', b') with b and b' equivalent.
    """
    r.actors.require_same(e.actors)
    for block in e.blocks():
        for a in block:
            for a2 in block:
                if a2 == a:
                    continue
                for b in _bits(r.rows[a]):
                    if not (r.rows[a2] & e.block_mask(e.block_of[b])):
                        return False
    return True


def is_inward_regular(r, e):
    """Mirror of the outward check with every edge reversed."""
    return is_outward_regular(r.transpose(), e)


def is_regular(r, e):
    return is_outward_regular(r, e) and is_inward_regular(r, e)


def network_passes(net, e, mode="both"):
    """True when e passes the selected check against every relation of net."""
    _check_mode(mode)
    for rel in net.relations.values():
        if mode in ("out", "both") and not is_outward_regular(rel, e):
            return False
        if mode in ("in", "both") and not is_inward_regular(rel, e):
            return False
    return True


# ── coarsest regular partition: refinement and brute force ──────────────────

def max_regular_partition(net, mode="both", seed=None):
    """Coarsest partition refining ``seed`` that is regular for every relation.

    Iterated block splitting: in each round two actors stay together only if
    their block-level neighbour signatures agree for every relation, in the
    direction(s) selected by ``mode``.  The fixpoint is the unique coarsest
    regular refinement of the seed, independent of processing order.
    """
    _check_mode(mode)
    if seed is None:
        seed = Partition.universal(net.actors)
    seed.actors.require_same(net.actors)
    n = len(net.actors)
    out_rows = [rel.rows for rel in net.relations.values()]
    in_rows = [rel.transpose().rows for rel in net.relations.values()]

    block_of = list(seed.block_of)
    num_blocks = len(set(block_of))
    while True:
        assignment = {}
        new_block_of = []
        for i in range(n):
            sig = [block_of[i]]
            for rows in out_rows if mode in ("out", "both") else ():
                sig.append(frozenset(block_of[j] for j in _bits(rows[i])))
            for rows in in_rows if mode in ("in", "both") else ():
                sig.append(frozenset(block_of[j] for j in _bits(rows[i])))
            key = tuple(sig)
            if key not in assignment:
                assignment[key] = len(assignment)
            new_block_of.append(assignment[key])
        if len(assignment) == num_blocks:
            return Partition(net.actors, new_block_of)
        block_of = new_block_of
        num_blocks = len(assignment)


def enumerate_partitions(actors):
    """Yield every partition of the actors once, in restricted-growth order."""
    n = len(actors)
    if n > MAX_ENUM_ACTORS:
        raise ResourceLimitError(
            f"partition enumeration is capped at {MAX_ENUM_ACTORS} actors, got {n}", count=n
        )

    def gen():
        if n == 0:
            yield Partition(actors, ())
            return
        a = [0] * n
        m = [0] * n  # m[i] = max(a[0..i])
        while True:
            yield Partition(actors, a)
            i = n - 1
            while i > 0 and a[i] == m[i - 1] + 1:
                i -= 1
            if i == 0:
                return
            a[i] += 1
            m[i] = max(m[i - 1], a[i])
            for j in range(i + 1, n):
                a[j] = 0
                m[j] = m[i]

    return gen()


def coarsest_regular_bruteforce(net, mode="both"):
    """Scan every partition and return the coarsest one passing the check.

    Ties in block count are broken by enumeration order; the discrete
    partition always passes, so a result always exists.
    """
    _check_mode(mode)
    n = len(net.actors)
    if n > MAX_ORACLE_ACTORS:
        raise ResourceLimitError(
            f"brute-force search is capped at {MAX_ORACLE_ACTORS} actors, got {n}", count=n
        )
    best = None
    for p in enumerate_partitions(net.actors):
        if best is not None and p.num_blocks >= best.num_blocks:
            continue
        if network_passes(net, p, mode):
            best = p
    return best
