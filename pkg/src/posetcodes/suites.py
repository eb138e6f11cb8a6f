"""Exhaustive and sampled verification suites behind the ``verify`` command.

Every suite is deterministic given its seed and reports the instance
counts it actually checked; a failing suite carries a counterexample
dump.  These drive the same library entry points users call, with the
leg work (reference values, reachability scans) recomputed independently
inside the suite.
"""

import random
import time
from dataclasses import dataclass, field as dataclass_field
from itertools import product

from .code import LinearCode
from .errors import ValidationError
from .metric import weight_table
from .partition import all_pointed_partitions
from .poset import Poset, all_posets, hierarchical_posets
from .search import (
    hierarchy_bounds,
    lower_neighbour,
    minimal_complexity,
    primary_decomposition,
    upper_neighbour,
    verify_profile_uniqueness,
    witness_refinement,
)

N_POSET_COVERS = ((1, 3), (1, 4), (2, 4))


@dataclass
class SuiteReport:
    name: str
    ok: bool
    checked: int
    seed: int | None = None
    elapsed: float = 0.0
    details: list = dataclass_field(default_factory=list)
    counterexample: dict | None = None

    def to_json_dict(self) -> dict:
        return {
            "suite": self.name,
            "ok": self.ok,
            "checked": self.checked,
            "seed": self.seed,
            "elapsed_seconds": round(self.elapsed, 3),
            "details": self.details,
            "counterexample": self.counterexample,
        }


def random_poset(rng: random.Random, n: int) -> Poset:
    """A poset from a random relation set; cyclic draws are retried."""
    while True:
        count = rng.randint(0, 2 * n)
        pairs = []
        for _ in range(count):
            a = rng.randint(1, n)
            b = rng.randint(1, n)
            if a != b:
                pairs.append((a, b))
        try:
            return Poset.from_covers(n, pairs)
        except ValidationError:
            continue


def random_code(rng: random.Random, q: int, n: int) -> LinearCode:
    while True:
        rows = [
            tuple(rng.randrange(q) for _ in range(n))
            for _ in range(rng.randint(1, n))
        ]
        try:
            return LinearCode.from_generators(q, n, rows)
        except ValidationError:
            continue


def random_coarsening(rng: random.Random, poset: Poset, extra: int = 3) -> Poset:
    """A poset above the given one in the refinement order."""
    pairs = list(poset.strict_pairs())
    for _ in range(extra):
        a = rng.randint(1, poset.n)
        b = rng.randint(1, poset.n)
        if a == b or poset.leq(b, a):
            continue
        try:
            candidate = Poset.from_covers(poset.n, pairs + [(a, b)])
        except ValidationError:
            continue
        pairs = list(candidate.strict_pairs())
    return Poset.from_covers(poset.n, pairs)


def distinct_random_posets(rng: random.Random, n: int, count: int) -> list:
    out = []
    seen = set()
    while len(out) < count:
        poset = random_poset(rng, n)
        if poset not in seen:
            seen.add(poset)
            out.append(poset)
    return out


# -- metric -----------------------------------------------------------


def metric_suite(n: int = 4, q: int = 2, posets: int = 50, seed: int = 1) -> SuiteReport:
    """Metric axioms over random posets, plus the closed forms of the two
    extreme families (Hamming for the antichain, top index for the chain)."""
    start = time.monotonic()
    rng = random.Random(seed)
    report = SuiteReport("metric", ok=True, checked=0, seed=seed)
    catalog = distinct_random_posets(rng, n, posets)
    catalog.extend([Poset.antichain(n), Poset.chain(n)])
    size = q**n
    vectors = list(product(range(q), repeat=n))

    def diff_mask(a, b):
        mask = 0
        for idx in range(n):
            if a[idx] != b[idx]:
                mask |= 1 << idx
        return mask

    for poset in catalog:
        wt = weight_table(poset)
        for x in vectors:
            for y in vectors:
                d = wt[diff_mask(x, y)]
                if (d == 0) != (x == y) or d != wt[diff_mask(y, x)] or d < 0:
                    report.ok = False
                    report.counterexample = {
                        "poset": poset.to_json_dict(),
                        "x": list(x),
                        "y": list(y),
                    }
                    break
            if not report.ok:
                break
        if not report.ok:
            break
        if q == 2 and size <= 64:
            triples = (
                (a, b, c)
                for a in range(size)
                for b in range(size)
                for c in range(size)
            )
            for a, b, c in triples:
                if wt[a ^ b] > wt[a ^ c] + wt[c ^ b]:
                    report.ok = False
                    report.counterexample = {
                        "poset": poset.to_json_dict(),
                        "masks": [a, b, c],
                    }
                    break
        else:
            for _ in range(2000):
                x, y, z = (rng.choice(vectors) for _ in range(3))
                if wt[diff_mask(x, y)] > wt[diff_mask(x, z)] + wt[diff_mask(z, y)]:
                    report.ok = False
                    report.counterexample = {
                        "poset": poset.to_json_dict(),
                        "x": list(x),
                        "y": list(y),
                        "z": list(z),
                    }
                    break
        if not report.ok:
            break
        report.checked += 1

    if report.ok:
        wt = weight_table(Poset.antichain(n))
        hamming_ok = all(
            wt[diff_mask(x, y)] == sum(a != b for a, b in zip(x, y))
            for x in vectors
            for y in vectors
        )
        wt = weight_table(Poset.chain(n))
        chain_ok = all(
            wt[diff_mask(x, y)]
            == max((i + 1 for i in range(n) if x[i] != y[i]), default=0)
            for x in vectors
            for y in vectors
        )
        if not hamming_ok or not chain_ok:
            report.ok = False
            report.counterexample = {"closed_form": "extreme family mismatch"}
        report.details.append("antichain matches Hamming; chain matches top index")
    report.elapsed = time.monotonic() - start
    return report


# -- partitions ---------------------------------------------------------


def partition_suite(max_n: int = 4) -> SuiteReport:
    """Closed-form refinement test against reachability over one-step moves,
    for every pointed partition pair on each ground set up to ``max_n``."""
    start = time.monotonic()
    report = SuiteReport("partition", ok=True, checked=0)
    for n in range(1, max_n + 1):
        universe = list(all_pointed_partitions(n))
        reachable = {}
        for part in universe:
            seen = {part}
            frontier = [part]
            while frontier:
                nxt = []
                for current in frontier:
                    for succ in current.one_step_successors():
                        if succ not in seen:
                            seen.add(succ)
                            nxt.append(succ)
                frontier = nxt
            reachable[part] = seen
        for coarse in universe:
            for fine in universe:
                closed = fine.is_refinement_of(coarse)
                walked = fine in reachable[coarse]
                report.checked += 1
                if closed != walked:
                    report.ok = False
                    report.counterexample = {
                        "fine": fine.to_json_dict(),
                        "coarse": coarse.to_json_dict(),
                        "closed_form": closed,
                        "reachable": walked,
                    }
                    report.elapsed = time.monotonic() - start
                    return report
    report.details.append(f"all pointed-partition pairs up to n={max_n}")
    report.elapsed = time.monotonic() - start
    return report


# -- decompositions and search -----------------------------------------


def profile_suite(n: int = 4, q: int = 2, samples: int = 50, seed: int = 1) -> SuiteReport:
    """Profile uniqueness across maximal decompositions over random instances."""
    start = time.monotonic()
    rng = random.Random(seed)
    report = SuiteReport("profile", ok=True, checked=0, seed=seed)
    for _ in range(samples):
        poset = random_poset(rng, n)
        code = random_code(rng, q, n)
        result = verify_profile_uniqueness(code, poset)
        report.checked += 1
        if not result.ok:
            report.ok = False
            report.counterexample = {
                "poset": poset.to_json_dict(),
                "code": code.to_json_dict(),
                "report": result.to_json_dict(),
            }
            break
    report.elapsed = time.monotonic() - start
    return report


def monotonicity_suite(n: int = 4, q: int = 2, samples: int = 100, seed: int = 1) -> SuiteReport:
    """Minimal complexity never grows when the order gains relations."""
    start = time.monotonic()
    rng = random.Random(seed)
    report = SuiteReport("monotone", ok=True, checked=0, seed=seed)
    for _ in range(samples):
        finer = random_poset(rng, n)
        coarser = random_coarsening(rng, finer)
        code = random_code(rng, q, n)
        o_fine = minimal_complexity(code, finer)
        o_coarse = minimal_complexity(code, coarser)
        report.checked += 1
        if o_coarse > o_fine:
            report.ok = False
            report.counterexample = {
                "finer": finer.to_json_dict(),
                "coarser": coarser.to_json_dict(),
                "code": code.to_json_dict(),
                "o_fine": o_fine,
                "o_coarse": o_coarse,
            }
            break
    report.elapsed = time.monotonic() - start
    return report


def bounds_suite(n: int = 4, q: int = 2, samples: int = 50, seed: int = 1) -> SuiteReport:
    """Sandwich between the hierarchical neighbours, pinned on the worked
    length-4 instance and then sampled."""
    start = time.monotonic()
    rng = random.Random(seed)
    report = SuiteReport("bounds", ok=True, checked=0, seed=seed)

    n_poset = Poset.from_covers(4, N_POSET_COVERS)
    repetition = LinearCode.from_generators(2, 4, [(1, 1, 1, 1)])
    pinned = hierarchy_bounds(repetition, n_poset)
    report.checked += 1
    if (pinned.o_upper, pinned.o_p, pinned.o_lower) != (2, 2, 8):
        report.ok = False
        report.counterexample = {
            "instance": "repetition code on the N-shaped order",
            "got": [pinned.o_upper, pinned.o_p, pinned.o_lower],
            "expected": [2, 2, 8],
        }
        report.elapsed = time.monotonic() - start
        return report

    for _ in range(samples):
        poset = random_poset(rng, n)
        code = random_code(rng, q, n)
        bounds = hierarchy_bounds(code, poset)
        report.checked += 1
        if not bounds.sandwich_ok or bounds.o_p is None:
            report.ok = False
            report.counterexample = {
                "poset": poset.to_json_dict(),
                "code": code.to_json_dict(),
                "bounds": bounds.to_json_dict(),
            }
            break
    report.elapsed = time.monotonic() - start
    return report


def neighbour_suite(n: int = 4) -> SuiteReport:
    """Extremality of the hierarchical neighbours over the full catalogs:
    the lower neighbour is the maximum hierarchical poset below, and no
    hierarchical poset sits strictly between a poset and its upper
    neighbour."""
    start = time.monotonic()
    report = SuiteReport("neighbours", ok=True, checked=0)
    catalog = list(hierarchical_posets(n))
    for poset in all_posets(n):
        upper = upper_neighbour(poset)
        lower = lower_neighbour(poset)
        good = (
            lower.is_hierarchical()
            and upper.is_hierarchical()
            and lower.is_finer_than(poset)
            and poset.is_finer_than(upper)
        )
        if good:
            for h in catalog:
                if h.is_finer_than(poset) and not h.is_finer_than(lower):
                    good = False
                    break
                if (
                    poset.is_finer_than(h)
                    and h.is_finer_than(upper)
                    and h != upper
                ):
                    good = False
                    break
        report.checked += 1
        if not good:
            report.ok = False
            report.counterexample = {
                "poset": poset.to_json_dict(),
                "upper": upper.to_json_dict(),
                "lower": lower.to_json_dict(),
            }
            break
    report.details.append(f"{report.checked} posets against {len(catalog)} hierarchical posets")
    report.elapsed = time.monotonic() - start
    return report


def refinement_witness_suite(finer: Poset, coarser: Poset, q: int = 2) -> SuiteReport:
    """Search for a code whose primary decomposition strictly improves when
    moving from the finer poset to the coarser."""
    start = time.monotonic()
    report = SuiteReport("refinement-witness", ok=True, checked=0)
    code = witness_refinement(finer, coarser, q=q)
    if code is None:
        report.ok = False
        report.details.append("no witness within the enumeration budget")
    else:
        pd_fine = primary_decomposition(code, finer)
        pd_coarse = primary_decomposition(code, coarser)
        report.checked = 1
        report.details.append(
            f"witness generators {list(code.generators)}; "
            f"complexities {pd_fine.complexity} vs {pd_coarse.complexity}"
        )
        report.counterexample = None
    report.elapsed = time.monotonic() - start
    return report


SUITES = {
    "metric": metric_suite,
    "partition": partition_suite,
    "profile": profile_suite,
    "monotone": monotonicity_suite,
    "bounds": bounds_suite,
    "neighbours": neighbour_suite,
    "refinement-witness": refinement_witness_suite,
}
