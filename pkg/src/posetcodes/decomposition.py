"""Direct-sum decompositions of a code into components with disjoint supports.

The finest such decomposition is computed from the co-occurrence graph of
the canonical generator rows: every generator row lies wholly inside one
component, so the connected components of that graph realize the finest
splitting.  Coarser decompositions are groupings of the finest one.
"""

from .code import LinearCode
from .errors import ValidationError
from .partition import PointedPartition


class Decomposition:
    """A code together with disjoint-support components summing to it.

    ``j0`` is the coordinate set off the support of the code; the full
    coordinate subspace there plays the role of the zeroth component and
    is represented implicitly by the set itself.
    """

    __slots__ = ("code", "components", "j0")

    def __init__(self, code: LinearCode, components):
        comps = tuple(sorted(components, key=lambda c: min(c.support())))
        if not comps:
            raise ValidationError("a decomposition needs at least one component")
        seen = set()
        total_dim = 0
        for comp in comps:
            if comp.q != code.q or comp.n != code.n:
                raise ValidationError("components must live in the same ambient space")
            supp = comp.support()
            if supp & seen:
                raise ValidationError("component supports must be pairwise disjoint")
            seen |= supp
            total_dim += comp.k
            for row in comp.generators:
                if not code.contains(row):
                    raise ValidationError("component is not a subspace of the code")
        if total_dim != code.k or seen != code.support():
            raise ValidationError("components do not sum to the code")
        self.code = code
        self.components = comps
        self.j0 = frozenset(range(1, code.n + 1)) - code.support()

    @property
    def r(self) -> int:
        return len(self.components)

    def partition(self) -> PointedPartition:
        return PointedPartition(
            self.code.n, self.j0, [c.support() for c in self.components]
        )

    def profile(self) -> tuple:
        """Pairs (support size, dimension); the j0 pair first, the rest sorted."""
        head = (len(self.j0), len(self.j0))
        rest = sorted(
            ((len(c.support()), c.k) for c in self.components),
        )
        return (head, *rest)

    def complexity(self) -> int:
        """Syndrome look-up table size: sum of q^(n_i - k_i) over components."""
        q = self.code.q
        return sum(q ** (len(c.support()) - c.k) for c in self.components)

    def to_json_dict(self) -> dict:
        return {
            "code": self.code.to_json_dict(),
            "j0": sorted(self.j0),
            "components": [
                {
                    "support": sorted(c.support()),
                    "generators": [list(row) for row in c.generators],
                }
                for c in self.components
            ],
            "profile": [list(p) for p in self.profile()],
            "complexity": self.complexity(),
        }

    def __eq__(self, other):
        return (
            isinstance(other, Decomposition)
            and self.code == other.code
            and self.components == other.components
        )

    def __hash__(self):
        return hash((self.code, self.components))

    def __repr__(self):
        supports = [sorted(c.support()) for c in self.components]
        return f"Decomposition(code={self.code!r}, supports={supports})"


def profile_of(dec: Decomposition) -> tuple:
    return dec.profile()


def complexity_of(dec: Decomposition) -> int:
    return dec.complexity()


def trivial_decomposition(code: LinearCode) -> Decomposition:
    return Decomposition(code, [code])


def maximal_decomposition(code: LinearCode) -> Decomposition:
    """The unique finest decomposition, via generator-row co-occurrence."""
    supp = sorted(code.support())
    parent = {j: j for j in supp}

    def find(j):
        while parent[j] != j:
            parent[j] = parent[parent[j]]
            j = parent[j]
        return j

    for row in code.generators:
        coords = [j + 1 for j in range(code.n) if row[j]]
        root = find(coords[0])
        for j in coords[1:]:
            parent[find(j)] = root
    groups = {}
    for row in code.generators:
        anchor = find(next(j + 1 for j in range(code.n) if row[j]))
        groups.setdefault(anchor, []).append(row)
    components = [
        LinearCode.from_generators(code.q, code.n, rows) for rows in groups.values()
    ]
    return Decomposition(code, components)


def min_grouping_complexity(code: LinearCode) -> int:
    """Minimum complexity over every decomposition of the code.

    All decompositions arise by grouping the finest components; splitting a
    group never helps once its deficiency is zero, and merging two groups of
    positive deficiency never helps, so the minimum keeps every positive
    deficiency separate and absorbs the rest.
    """
    q = code.q
    deficiencies = [
        len(c.support()) - c.k for c in maximal_decomposition(code).components
    ]
    positive = [d for d in deficiencies if d > 0]
    if not positive:
        return 1
    return sum(q ** d for d in positive)


def cheapest_grouping(code: LinearCode) -> Decomposition:
    """A decomposition achieving :func:`min_grouping_complexity`.

    Zero-deficiency components are merged into the first positive-deficiency
    component (or all together when none is positive), which realizes the
    minimum with a deterministic shape.
    """
    finest = maximal_decomposition(code)
    positive = [c for c in finest.components if len(c.support()) - c.k > 0]
    zero = [c for c in finest.components if len(c.support()) - c.k == 0]
    if not positive:
        groups = [list(finest.components)]
    elif zero:
        groups = [[positive[0], *zero]] + [[c] for c in positive[1:]]
    else:
        groups = [[c] for c in positive]
    merged = []
    for group in groups:
        rows = [row for comp in group for row in comp.generators]
        merged.append(LinearCode.from_generators(code.q, code.n, rows))
    return Decomposition(code, merged)
