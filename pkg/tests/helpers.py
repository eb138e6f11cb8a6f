"""Independent reference implementations used to check library results.

Everything here recomputes answers from first principles (pair-set
closures, exhaustive partition searches, closed-form weights) without
touching the production code paths it validates.
"""

from itertools import combinations, product


def closure_pairs(n, pairs):
    """Reflexive-transitive closure as a plain set of pairs (Warshall)."""
    rel = {(i, i) for i in range(1, n + 1)}
    rel.update(tuple(p) for p in pairs)
    changed = True
    while changed:
        changed = False
        for (a, b) in list(rel):
            for (c, d) in list(rel):
                if b == c and (a, d) not in rel:
                    rel.add((a, d))
                    changed = True
    return rel


def longest_chain_heights(n, strict_pairs):
    """Heights by longest strict chain ending at each element."""
    below = {i: {a for (a, b) in strict_pairs if b == i} for i in range(1, n + 1)}
    heights = {}

    def height(i):
        if i not in heights:
            heights[i] = 1 + max((height(j) for j in below[i]), default=0)
        return heights[i]

    return tuple(height(i) for i in range(1, n + 1))


def hamming_distance(x, y):
    return sum(a != b for a, b in zip(x, y))


def top_disagreement_index(x, y):
    return max((i + 1 for i in range(len(x)) if x[i] != y[i]), default=0)


def hierarchical_weight(type_vector, x):
    """Closed-form weight for a naturally labelled hierarchical poset:
    Hamming weight on the top occupied level plus the sizes of all lower
    levels."""
    levels = []
    start = 0
    for size in type_vector:
        levels.append(range(start, start + size))
        start += size
    occupied = [
        lvl for lvl, members in enumerate(levels) if any(x[i] for i in members)
    ]
    if not occupied:
        return 0
    top = max(occupied)
    return sum(1 for i in levels[top] if x[i]) + sum(type_vector[:top])


def set_partitions(items):
    """Every partition of ``items`` into nonempty blocks."""
    items = list(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for r in range(len(rest) + 1):
        for extra in combinations(rest, r):
            block = frozenset((first,) + extra)
            remaining = [e for e in rest if e not in block]
            for tail in set_partitions(remaining):
                yield [block] + tail


def _word_support_masks(code):
    masks = []
    for word in code.codewords():
        mask = 0
        for i, v in enumerate(word):
            if v:
                mask |= 1 << i
        masks.append(mask)
    return masks


def block_dimensions(code):
    """Dimension of the subcode supported inside every subset of the support,
    keyed by coordinate bitmask, computed by counting codewords."""
    masks = _word_support_masks(code)
    supp_mask = 0
    for j in code.support():
        supp_mask |= 1 << (j - 1)
    dims = {}
    sub = supp_mask
    while True:
        count = sum(1 for m in masks if m & ~sub == 0)
        dim = 0
        while code.q**dim < count:
            dim += 1
        assert code.q**dim == count, "subcode size is not a power of q"
        dims[sub] = dim
        if sub == 0:
            break
        sub = (sub - 1) & supp_mask
    return dims


def subcode_dimension(code, block):
    """Dimension of the codewords supported inside ``block``, by counting."""
    mask = 0
    for j in block:
        mask |= 1 << (j - 1)
    masks = _word_support_masks(code)
    count = sum(1 for m in masks if m & ~mask == 0)
    dim = 0
    while code.q**dim < count:
        dim += 1
    assert code.q**dim == count, "subcode size is not a power of q"
    return dim


def brute_force_finest_partition(code):
    """The unique valid support partition with the most blocks, where a
    partition is valid when the blockwise subcodes sum to the code."""
    supp = sorted(code.support())
    dims = block_dimensions(code)

    def mask_of(block):
        mask = 0
        for j in block:
            mask |= 1 << (j - 1)
        return mask

    valid = []
    for blocks in set_partitions(supp):
        if sum(dims[mask_of(b)] for b in blocks) == code.k:
            valid.append(set(blocks))
    best_size = max(len(blocks) for blocks in valid)
    best = [blocks for blocks in valid if len(blocks) == best_size]
    assert len(best) == 1, "finest decomposition is not unique"
    return best[0]


def grouping_minimum(code):
    """Minimum table size over all groupings of the finest components."""
    from posetcodes.decomposition import maximal_decomposition

    comps = maximal_decomposition(code).components
    deficiencies = [len(c.support()) - c.k for c in comps]
    best = None
    for blocks in set_partitions(range(len(comps))):
        total = sum(code.q ** sum(deficiencies[i] for i in block) for block in blocks)
        if best is None or total < best:
            best = total
    return best


def refinement_reachable(start, include_whole_part_aggregates=False):
    """Everything reachable from a pointed partition by one-step moves."""
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for current in frontier:
            for succ in current.one_step_successors(include_whole_part_aggregates):
                if succ not in seen:
                    seen.add(succ)
                    nxt.append(succ)
        frontier = nxt
    return seen


def all_binary_vectors(n):
    return list(product(range(2), repeat=n))
