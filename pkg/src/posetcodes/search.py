"""Orbit search over the isometry group: primary decompositions, profile
uniqueness, hierarchical neighbours and the complexity sandwich bounds.

The minimal complexity of a code relative to a poset is the minimum, over
the isometry orbit of the code, of the per-code grouping minimum; the
orbit is enumerated deterministically so reported witnesses are
reproducible.
"""

from dataclasses import dataclass, field as dataclass_field
from functools import lru_cache

from .code import LinearCode, enumerate_codes
from .decomposition import (
    Decomposition,
    cheapest_grouping,
    maximal_decomposition,
    min_grouping_complexity,
)
from .errors import ResourceLimitError, ValidationError
from .isometry import PIsometry, enumerate_isometries, group_size
from .poset import Poset, hierarchical_posets

DEFAULT_GROUP_BUDGET = 10**7
DEFAULT_ORBIT_BUDGET = 10**5


@dataclass(frozen=True)
class PDecomposition:
    """A decomposition of an orbit code, carrying the isometry that reaches it."""

    witness: PIsometry
    dec: Decomposition
    complexity: int
    proven_minimal: bool = True

    def to_json_dict(self) -> dict:
        return {
            "witness": self.witness.to_json_dict(),
            "decomposition": self.dec.to_json_dict(),
            "profile": [list(p) for p in self.dec.profile()],
            "complexity": self.complexity,
            "proven_minimal": self.proven_minimal,
        }


@dataclass(frozen=True)
class BoundsReport:
    """Minimal complexities for the hierarchical neighbours and, when
    affordable, the poset itself."""

    upper_poset: Poset
    lower_poset: Poset
    o_upper: int
    o_lower: int
    o_p: int | None = None

    @property
    def sandwich_ok(self) -> bool:
        if self.o_p is None:
            return self.o_upper <= self.o_lower
        return self.o_upper <= self.o_p <= self.o_lower

    def to_json_dict(self) -> dict:
        return {
            "upper_poset": self.upper_poset.to_json_dict(),
            "lower_poset": self.lower_poset.to_json_dict(),
            "o_upper": self.o_upper,
            "o_p": self.o_p,
            "o_lower": self.o_lower,
            "sandwich_ok": self.sandwich_ok,
        }


@dataclass
class ProfileUniquenessReport:
    ok: bool
    profile: tuple | None
    candidates: int
    orbit_size: int
    conflicts: list = dataclass_field(default_factory=list)

    def to_json_dict(self) -> dict:
        return {
            "ok": self.ok,
            "profile": [list(p) for p in self.profile] if self.profile else None,
            "candidates": self.candidates,
            "orbit_size": self.orbit_size,
            "conflicts": [
                {"profile": [list(p) for p in prof], "code": code.to_json_dict()}
                for prof, code in self.conflicts
            ],
        }


def orbit_codes(
    code: LinearCode,
    poset: Poset,
    group_budget: int = DEFAULT_GROUP_BUDGET,
    orbit_budget: int = DEFAULT_ORBIT_BUDGET,
) -> dict:
    """Distinct orbit codes mapped to the first isometry reaching each."""
    if poset.n != code.n:
        raise ValidationError(f"poset size {poset.n} != code length {code.n}")
    seen = {}
    for iso in enumerate_isometries(poset, code.q, budget=group_budget):
        image = iso.apply_code(code)
        if image not in seen:
            if len(seen) >= orbit_budget:
                raise ResourceLimitError(
                    f"orbit exceeds budget of {orbit_budget} codes"
                )
            seen[image] = iso
    return seen


def primary_decomposition(
    code: LinearCode,
    poset: Poset,
    group_budget: int = DEFAULT_GROUP_BUDGET,
    orbit_budget: int = DEFAULT_ORBIT_BUDGET,
) -> PDecomposition:
    """A decomposition of minimal complexity over the whole orbit.

    Ties are broken by the lexicographically smallest canonical generator
    matrix and then by the earliest isometry in the enumeration stream.
    """
    if poset.n != code.n:
        raise ValidationError(f"poset size {poset.n} != code length {code.n}")
    best = None  # (complexity, generator matrix, witness)
    seen = set()
    for iso in enumerate_isometries(poset, code.q, budget=group_budget):
        image = iso.apply_code(code)
        if image in seen:
            continue
        if len(seen) >= orbit_budget:
            partial = None
            if best is not None:
                _, _, witness, img = best
                partial = PDecomposition(
                    witness, cheapest_grouping(img), best[0], proven_minimal=False
                )
            raise ResourceLimitError(
                f"orbit exceeds budget of {orbit_budget} codes", partial_result=partial
            )
        seen.add(image)
        value = min_grouping_complexity(image)
        key = (value, image.generators)
        if best is None or key < (best[0], best[1]):
            best = (value, image.generators, iso, image)
    value, _, witness, image = best
    return PDecomposition(witness, cheapest_grouping(image), value)


def minimal_complexity(
    code: LinearCode,
    poset: Poset,
    group_budget: int = DEFAULT_GROUP_BUDGET,
    orbit_budget: int = DEFAULT_ORBIT_BUDGET,
) -> int:
    return primary_decomposition(code, poset, group_budget, orbit_budget).complexity


# -- irreducibility and profile uniqueness ---------------------------


def _delta_generator_matrices(poset: Poset, q: int) -> list:
    """Generators of the triangular part: diagonal scalings and elementary
    additions along strict relations."""
    n = poset.n
    gens = []
    for scale in range(2, q):
        for i in range(n):
            rows = [
                [1 if a == b else 0 for b in range(n)] for a in range(n)
            ]
            rows[i][i] = scale
            gens.append(tuple(tuple(r) for r in rows))
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i != j and poset.leq(i, j):
                for coeff in range(1, q):
                    rows = [
                        [1 if a == b else 0 for b in range(n)] for a in range(n)
                    ]
                    rows[i - 1][j - 1] = coeff
                    gens.append(tuple(tuple(r) for r in rows))
    return gens


@lru_cache(maxsize=None)
def is_p_irreducible(code: LinearCode, poset: Poset, orbit_budget: int = DEFAULT_ORBIT_BUDGET) -> bool:
    """True when no orbit code splits into several components or occupies a
    smaller support.

    The permutation part of the group never changes support size or the
    component count, so scanning the orbit under the triangular part alone
    decides the question.
    """
    n = poset.n
    full = frozenset(range(1, n + 1))
    if code.support() != full:
        raise ValidationError("irreducibility expects a code with full support")
    identity_sigma = tuple(range(1, n + 1))
    gens = [
        PIsometry(poset, code.q, identity_sigma, rows)
        for rows in _delta_generator_matrices(poset, code.q)
    ]
    visited = {code}
    frontier = [code]
    while frontier:
        nxt = []
        for current in frontier:
            if len(current.support()) < n:
                return False
            if maximal_decomposition(current).r > 1:
                return False
            for gen in gens:
                image = gen.apply_code(current)
                if image not in visited:
                    if len(visited) >= orbit_budget:
                        raise ResourceLimitError(
                            f"irreducibility orbit exceeds budget {orbit_budget}"
                        )
                    visited.add(image)
                    nxt.append(image)
        frontier = nxt
    return True


def maximal_p_decompositions(
    code: LinearCode,
    poset: Poset,
    group_budget: int = DEFAULT_GROUP_BUDGET,
    orbit_budget: int = DEFAULT_ORBIT_BUDGET,
) -> list:
    """Finest decompositions of orbit codes whose components are all
    irreducible for the induced subposet on their support."""
    out = []
    for image in orbit_codes(code, poset, group_budget, orbit_budget):
        dec = maximal_decomposition(image)
        good = True
        for comp in dec.components:
            coords = sorted(comp.support())
            local_poset = poset.restrict(coords)
            local_code = comp.restrict(coords)
            if not is_p_irreducible(local_code, local_poset):
                good = False
                break
        if good:
            out.append(dec)
    return out


def verify_profile_uniqueness(
    code: LinearCode,
    poset: Poset,
    group_budget: int = DEFAULT_GROUP_BUDGET,
    orbit_budget: int = DEFAULT_ORBIT_BUDGET,
) -> ProfileUniquenessReport:
    """Scan the orbit and check that every maximal decomposition carries the
    same canonical profile."""
    orbit = orbit_codes(code, poset, group_budget, orbit_budget)
    candidates = maximal_p_decompositions(code, poset, group_budget, orbit_budget)
    profiles = {}
    for dec in candidates:
        profiles.setdefault(dec.profile(), dec.code)
    if len(profiles) == 1 and candidates:
        return ProfileUniquenessReport(
            ok=True,
            profile=next(iter(profiles)),
            candidates=len(candidates),
            orbit_size=len(orbit),
        )
    return ProfileUniquenessReport(
        ok=False,
        profile=None,
        candidates=len(candidates),
        orbit_size=len(orbit),
        conflicts=sorted(profiles.items(), key=lambda item: item[0]),
    )


# -- permutation stripping --------------------------------------------


def strip_permutation(pd: PDecomposition) -> PDecomposition:
    """Conjugate a decomposition so its witness has no permutation part.

    Applying the inverse permutation to every piece keeps the complexity
    and leaves a witness in the triangular part, which is a valid witness
    for every coarser poset as well.
    """
    poset = pd.witness.poset
    q = pd.witness.q
    n = poset.n
    identity_sigma = tuple(range(1, n + 1))
    if pd.witness.sigma == identity_sigma:
        return pd
    inverse_sigma = [0] * n
    for i, s in enumerate(pd.witness.sigma, start=1):
        inverse_sigma[s - 1] = i
    eye = tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))
    unpermute = PIsometry(poset, q, tuple(inverse_sigma), eye)
    new_code = unpermute.apply_code(pd.dec.code)
    new_components = [unpermute.apply_code(c) for c in pd.dec.components]
    new_dec = Decomposition(new_code, new_components)
    new_witness = PIsometry(poset, q, identity_sigma, pd.witness.matrix_rows)
    if new_dec.complexity() != pd.complexity:
        raise AssertionError("permutation stripping changed the complexity")
    return PDecomposition(new_witness, new_dec, pd.complexity, pd.proven_minimal)


# -- hierarchical neighbours ------------------------------------------


def upper_neighbour(poset: Poset) -> Poset:
    """Hierarchical poset on the same levels: below iff strictly lower level."""
    heights = poset.heights()
    n = poset.n
    pairs = [
        (a, b)
        for a in range(1, n + 1)
        for b in range(1, n + 1)
        if heights[a - 1] < heights[b - 1]
    ]
    return Poset.from_covers(n, pairs)


def lower_neighbour(poset: Poset) -> Poset:
    """Hierarchical poset on level blocks delimited by the fully
    hierarchical levels; below iff strictly lower block."""
    heights = poset.heights()
    flags = poset.hierarchy_flags()
    block_of_level = []
    block = -1
    for flag in flags:
        if flag:
            block += 1
        block_of_level.append(block)
    n = poset.n
    pairs = [
        (a, b)
        for a in range(1, n + 1)
        for b in range(1, n + 1)
        if block_of_level[heights[a - 1] - 1] < block_of_level[heights[b - 1] - 1]
    ]
    return Poset.from_covers(n, pairs)


def hierarchy_bounds(
    code: LinearCode,
    poset: Poset,
    group_budget: int = DEFAULT_GROUP_BUDGET,
    orbit_budget: int = DEFAULT_ORBIT_BUDGET,
) -> BoundsReport:
    """Minimal complexities for the hierarchical neighbours, sandwiching the
    poset's own value when its orbit fits the budget."""
    upper = upper_neighbour(poset)
    lower = lower_neighbour(poset)
    o_upper = minimal_complexity(code, upper, group_budget, orbit_budget)
    o_lower = minimal_complexity(code, lower, group_budget, orbit_budget)
    try:
        o_p = minimal_complexity(code, poset, group_budget, orbit_budget)
    except ResourceLimitError:
        o_p = None
    return BoundsReport(upper, lower, o_upper, o_lower, o_p)


# -- order comparisons -------------------------------------------------


def monotonicity_check(
    code: LinearCode,
    finer: Poset,
    coarser: Poset,
    group_budget: int = DEFAULT_GROUP_BUDGET,
    orbit_budget: int = DEFAULT_ORBIT_BUDGET,
) -> bool:
    """Minimal complexity may only drop when the poset gains relations."""
    if not finer.is_finer_than(coarser):
        raise ValidationError("first poset must be finer than the second")
    o_coarse = minimal_complexity(code, coarser, group_budget, orbit_budget)
    o_fine = minimal_complexity(code, finer, group_budget, orbit_budget)
    return o_coarse <= o_fine


def witness_refinement(
    finer: Poset,
    coarser: Poset,
    q: int = 2,
    group_budget: int = DEFAULT_GROUP_BUDGET,
    orbit_budget: int = DEFAULT_ORBIT_BUDGET,
):
    """First code (by dimension, then canonical generator matrix) whose
    primary decomposition strictly improves when the order grows.

    Returns None when the bounded enumeration finds nothing; absence is not
    a disproof.
    """
    if not finer.is_finer_than(coarser) or finer == coarser:
        raise ValidationError("expected strictly comparable posets (finer < coarser)")
    n = finer.n
    for k in range(1, n + 1):
        for code in enumerate_codes(q, n, k):
            pd_fine = primary_decomposition(code, finer, group_budget, orbit_budget)
            pd_coarse = primary_decomposition(code, coarser, group_budget, orbit_budget)
            if pd_coarse.complexity < pd_fine.complexity:
                return code
            part_coarse = pd_coarse.dec.partition()
            part_fine = pd_fine.dec.partition()
            if part_coarse != part_fine and part_coarse.is_refinement_of(part_fine):
                return code
    return None
