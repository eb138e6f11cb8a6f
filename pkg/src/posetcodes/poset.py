"""Partial orders on [n] = {1, ..., n}.

The relation is stored densely as per-element bitmasks of the up-sets
(reflexive-transitive closure), which keeps closure, ideal and
automorphism computations simple at the small n this package targets.
Elements are 1-based throughout the public API.

A poset is immutable after construction; derived data (heights, levels,
automorphisms) is computed lazily and cached.
"""

from dataclasses import dataclass
from itertools import combinations

from .errors import ResourceLimitError, ValidationError

MAX_GROUND_SET = 16
MAX_ISO_SEARCH = 10


@dataclass(frozen=True)
class LevelStructure:
    """Heights h(i), the levels H_1..H_h and the type vector (|H_1|,...,|H_h|)."""

    heights: tuple
    levels: tuple
    type_vector: tuple


class Poset:
    __slots__ = ("n", "_up", "_down", "_hash", "_levels", "_autos")

    def __init__(self, n: int, up_masks):
        """Internal constructor; use :meth:`from_covers` or a family builder."""
        self.n = n
        self._up = tuple(up_masks)
        down = [0] * n
        for i in range(n):
            bits = self._up[i]
            while bits:
                j = (bits & -bits).bit_length() - 1
                bits &= bits - 1
                down[j] |= 1 << i
        self._down = tuple(down)
        self._hash = hash((n, self._up))
        self._levels = None
        self._autos = None

    # -- construction -------------------------------------------------

    @classmethod
    def from_covers(cls, n: int, covers) -> "Poset":
        """Poset generated by the given relations (not necessarily covers).

        The reflexive-transitive closure is taken; inputs whose closure
        violates antisymmetry are rejected as cyclic.
        """
        if not isinstance(n, int) or n < 1:
            raise ValidationError(f"ground-set size must be a positive integer, got {n!r}")
        if n > MAX_GROUND_SET:
            raise ResourceLimitError(f"ground-set size {n} exceeds supported maximum {MAX_GROUND_SET}")
        up = [1 << i for i in range(n)]
        for pair in covers:
            a, b = pair
            if not (1 <= a <= n and 1 <= b <= n):
                raise ValidationError(f"relation {pair!r} out of range for [{n}]")
            if a == b:
                raise ValidationError(f"relation {pair!r} relates an element to itself")
            up[a - 1] |= 1 << (b - 1)
        changed = True
        while changed:
            changed = False
            for i in range(n):
                acc = up[i]
                bits = acc
                while bits:
                    j = (bits & -bits).bit_length() - 1
                    bits &= bits - 1
                    acc |= up[j]
                if acc != up[i]:
                    up[i] = acc
                    changed = True
        for i in range(n):
            bits = up[i] & ~(1 << i)
            while bits:
                j = (bits & -bits).bit_length() - 1
                bits &= bits - 1
                if up[j] >> i & 1:
                    raise ValidationError(
                        f"not a partial order: elements {i + 1} and {j + 1} lie on a cycle"
                    )
        return cls(n, up)

    @classmethod
    def antichain(cls, n: int) -> "Poset":
        return cls.from_covers(n, [])

    @classmethod
    def chain(cls, n: int) -> "Poset":
        return cls.from_covers(n, [(i, i + 1) for i in range(1, n)])

    @classmethod
    def hierarchical(cls, type_vector) -> "Poset":
        """Hierarchical poset with naturally labelled consecutive level blocks."""
        tv = tuple(type_vector)
        if not tv or any(not isinstance(m, int) or m < 1 for m in tv):
            raise ValidationError(f"type vector must be nonempty with positive entries, got {tv!r}")
        n = sum(tv)
        block = []
        for idx, size in enumerate(tv):
            block.extend([idx] * size)
        pairs = [
            (a + 1, b + 1)
            for a in range(n)
            for b in range(n)
            if block[a] < block[b]
        ]
        return cls.from_covers(n, pairs)

    # -- basic queries ------------------------------------------------

    def leq(self, i: int, j: int) -> bool:
        self._check_element(i)
        self._check_element(j)
        return bool(self._up[i - 1] >> (j - 1) & 1)

    def strictly_less(self, i: int, j: int) -> bool:
        return i != j and self.leq(i, j)

    def strict_pairs(self) -> frozenset:
        return frozenset(
            (i + 1, j + 1)
            for i in range(self.n)
            for j in range(self.n)
            if i != j and self._up[i] >> j & 1
        )

    def ideal(self, elements) -> frozenset:
        """Smallest ideal containing the given subset of [n]."""
        mask = 0
        for i in elements:
            self._check_element(i)
            mask |= self._down[i - 1]
        return _mask_to_set(mask)

    def ideal_mask(self, mask: int) -> int:
        """Bitmask variant of :meth:`ideal` (bit k stands for element k+1)."""
        out = 0
        bits = mask
        while bits:
            j = (bits & -bits).bit_length() - 1
            bits &= bits - 1
            out |= self._down[j]
        return out

    def _check_element(self, i) -> None:
        if not isinstance(i, int) or not 1 <= i <= self.n:
            raise ValidationError(f"element {i!r} not in [{self.n}]")

    # -- heights and levels -------------------------------------------

    def heights(self) -> tuple:
        return self.level_structure().heights

    def levels(self) -> tuple:
        return self.level_structure().levels

    def type_vector(self) -> tuple:
        return self.level_structure().type_vector

    def height(self) -> int:
        return len(self.level_structure().levels)

    def level_structure(self) -> LevelStructure:
        if self._levels is None:
            n = self.n
            order = sorted(range(n), key=lambda i: bin(self._down[i]).count("1"))
            h = [1] * n
            for i in order:
                below = self._down[i] & ~(1 << i)
                bits = below
                while bits:
                    j = (bits & -bits).bit_length() - 1
                    bits &= bits - 1
                    if h[j] + 1 > h[i]:
                        h[i] = h[j] + 1
            top = max(h)
            levels = tuple(
                frozenset(i + 1 for i in range(n) if h[i] == lvl) for lvl in range(1, top + 1)
            )
            self._levels = LevelStructure(tuple(h), levels, tuple(len(lv) for lv in levels))
        return self._levels

    # -- comparisons between posets -----------------------------------

    def is_finer_than(self, other: "Poset") -> bool:
        """True when every relation of this poset also holds in ``other``."""
        if not isinstance(other, Poset) or self.n != other.n:
            raise ValidationError("posets must share the same ground set")
        return all(self._up[i] & ~other._up[i] == 0 for i in range(self.n))

    # -- hierarchy ----------------------------------------------------

    def hierarchy_flags(self) -> tuple:
        """Per-level flags: level i is flagged when each of its elements
        dominates every element of all lower levels.  Level 1 is flagged
        vacuously."""
        ls = self.level_structure()
        flags = [True]
        lower = 0
        for lvl in range(1, len(ls.levels)):
            for i in ls.levels[lvl - 1]:
                lower |= 1 << (i - 1)
            ok = all(self._down[a - 1] & lower == lower for a in ls.levels[lvl])
            flags.append(ok)
        return tuple(flags)

    def hierarchical_levels(self) -> frozenset:
        return frozenset(i + 1 for i, flag in enumerate(self.hierarchy_flags()) if flag)

    def is_hierarchical(self) -> bool:
        return all(self.hierarchy_flags())

    # -- automorphisms and isomorphisms -------------------------------

    def automorphisms(self) -> list:
        """All order automorphisms, as tuples ``sigma`` with ``sigma[i-1] = sigma(i)``,
        sorted lexicographically.  Bounded to n <= 10."""
        if self._autos is None:
            self._autos = sorted(_order_isomorphisms(self, self, find_all=True))
        return list(self._autos)

    def isomorphism_to(self, other: "Poset"):
        """A witnessing bijection onto ``other`` preserving order both ways, or None."""
        if not isinstance(other, Poset) or self.n != other.n:
            return None
        found = _order_isomorphisms(self, other, find_all=False)
        return found[0] if found else None

    # -- restriction ---------------------------------------------------

    def restrict(self, coords) -> "Poset":
        """Induced subposet on the given coordinates, relabelled 1..|S| in
        ascending coordinate order."""
        sub = sorted(set(coords))
        for i in sub:
            self._check_element(i)
        if not sub:
            raise ValidationError("cannot restrict to an empty coordinate set")
        pairs = [
            (a + 1, b + 1)
            for a, i in enumerate(sub)
            for b, j in enumerate(sub)
            if i != j and self._up[i - 1] >> (j - 1) & 1
        ]
        return Poset.from_covers(len(sub), pairs)

    # -- Hasse diagram and serialization --------------------------------

    def covers(self) -> list:
        """Cover relations (a, b): a < b with nothing strictly between."""
        out = []
        for i in range(self.n):
            strict_up = self._up[i] & ~(1 << i)
            bits = strict_up
            while bits:
                j = (bits & -bits).bit_length() - 1
                bits &= bits - 1
                between = strict_up & self._down[j] & ~(1 << j)
                if between == 0:
                    out.append((i + 1, j + 1))
        return sorted(out)

    def to_json_dict(self) -> dict:
        return {"n": self.n, "covers": [list(c) for c in self.covers()]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "Poset":
        try:
            n = data["n"]
            covers = [tuple(pair) for pair in data.get("covers", [])]
        except (KeyError, TypeError) as exc:
            raise ValidationError(f"malformed poset document: {data!r}") from exc
        return cls.from_covers(n, covers)

    def to_dot(self) -> str:
        """Hasse diagram in DOT format, drawn upward by height."""
        lines = ["digraph poset {", "  rankdir=BT;"]
        for level in self.levels():
            members = " ".join(f'"{i}";' for i in sorted(level))
            lines.append(f"  {{ rank=same; {members} }}")
        for a, b in self.covers():
            lines.append(f'  "{a}" -> "{b}";')
        lines.append("}")
        return "\n".join(lines)

    # -- dunder -------------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, Poset) and self.n == other.n and self._up == other._up

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Poset(n={self.n}, covers={self.covers()})"


def _mask_to_set(mask: int) -> frozenset:
    out = []
    while mask:
        j = (mask & -mask).bit_length() - 1
        mask &= mask - 1
        out.append(j + 1)
    return frozenset(out)


def _order_isomorphisms(p: Poset, q: Poset, find_all: bool) -> list:
    if p.n > MAX_ISO_SEARCH:
        raise ResourceLimitError(
            f"isomorphism search supports n <= {MAX_ISO_SEARCH}, got {p.n}"
        )
    n = p.n
    hp = p.heights()
    hq = q.heights()
    if sorted(hp) != sorted(hq):
        return []

    def signature(poset, heights, i):
        return (
            heights[i],
            bin(poset._up[i]).count("1"),
            bin(poset._down[i]).count("1"),
        )

    sig_q = {}
    for j in range(n):
        sig_q.setdefault(signature(q, hq, j), []).append(j)
    candidates = []
    for i in range(n):
        cands = sig_q.get(signature(p, hp, i), [])
        if not cands:
            return []
        candidates.append(cands)

    order = sorted(range(n), key=lambda i: (len(candidates[i]), i))
    image = [-1] * n
    used = [False] * n
    found = []

    def consistent(i, m, placed):
        for k in placed:
            mk = image[k]
            if (p._up[i] >> k & 1) != (q._up[m] >> mk & 1):
                return False
            if (p._up[k] >> i & 1) != (q._up[mk] >> m & 1):
                return False
        return True

    def dfs(pos):
        if pos == n:
            found.append(tuple(image[i] + 1 for i in range(n)))
            return not find_all
        i = order[pos]
        placed = order[:pos]
        for m in candidates[i]:
            if used[m]:
                continue
            if not consistent(i, m, placed):
                continue
            image[i] = m
            used[m] = True
            if dfs(pos + 1):
                return True
            image[i] = -1
            used[m] = False
        return False

    dfs(0)
    return found


# -- catalog helpers -------------------------------------------------


def make_family(kind: str, n: int | None = None, type_vector=None) -> Poset:
    """Standard families by name: antichain, chain, hierarchical(type_vector)."""
    if kind == "antichain":
        if n is None:
            raise ValidationError("antichain family needs n")
        return Poset.antichain(n)
    if kind == "chain":
        if n is None:
            raise ValidationError("chain family needs n")
        return Poset.chain(n)
    if kind == "hierarchical":
        if type_vector is None:
            raise ValidationError("hierarchical family needs a type vector")
        return Poset.hierarchical(type_vector)
    raise ValidationError(f"unknown poset family {kind!r}")


def all_posets(n: int):
    """Every labeled poset on [n], by filtering strict-relation subsets.

    Exponential in n*(n-1); intended for n <= 4.
    """
    if n > 4:
        raise ResourceLimitError("full poset catalog supported only for n <= 4")
    pairs = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]
    for chosen in range(1 << len(pairs)):
        rel = set()
        bits = chosen
        while bits:
            k = (bits & -bits).bit_length() - 1
            bits &= bits - 1
            rel.add(pairs[k])
        if any((b, a) in rel for a, b in rel):
            continue
        if any(
            (a, d) not in rel
            for a, b in rel
            for c, d in rel
            if b == c and a != d
        ):
            continue
        yield Poset.from_covers(n, rel)


def hierarchical_posets(n: int):
    """Every hierarchical poset on [n], one per ordered set partition of [n]."""
    elements = tuple(range(1, n + 1))

    def ordered_partitions(rest):
        if not rest:
            yield []
            return
        for r in range(1, len(rest) + 1):
            for block in combinations(rest, r):
                chosen = frozenset(block)
                remaining = tuple(e for e in rest if e not in chosen)
                for tail in ordered_partitions(remaining):
                    yield [chosen] + tail

    for blocks in ordered_partitions(elements):
        pairs = [
            (a, b)
            for lo in range(len(blocks))
            for hi in range(lo + 1, len(blocks))
            for a in blocks[lo]
            for b in blocks[hi]
        ]
        yield Poset.from_covers(n, pairs)
