"""Irreducible and coirreducible elements, and their behaviour under pruning.

An element is irreducible when it is maximal or its strict upper set is a
filter (up-closed and down-directed; the empty set counts as a filter).
Coirreducible is the same notion in the opposite poset. In a conditionally
complete poset, irreducibility is equivalent to never being a proper meet:
x = meet(a, b) forces x in {a, b}. Pruning a finite conditionally complete
poset leaves both classes of elements unchanged.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import NotConditionallyComplete
from .poset import Poset
from .pruning import prune


@dataclass(frozen=True)
class IrreducibilityProfile:
    """Irreducibility flags for a single element."""

    element: str
    irreducible: bool
    coirreducible: bool

    @property
    def doubly(self) -> bool:
        return self.irreducible and self.coirreducible


def is_irreducible(p: Poset, x: str) -> bool:
    """True iff x is maximal or its strict upper set is a filter."""
    if not p._above[p._i(x)]:
        return True
    return p.is_filtered_upset(p.strict_upset(x))


def is_coirreducible(p: Poset, x: str) -> bool:
    """True iff x is irreducible in the opposite poset."""
    return is_irreducible(p.opposite(), x)


def profiles(p: Poset) -> dict[str, IrreducibilityProfile]:
    """Profile every element; the opposite poset is built only once."""
    op = p.opposite()
    return {x: IrreducibilityProfile(x, is_irreducible(p, x),
                                     is_irreducible(op, x))
            for x in p.labels}


def irreducibles(p: Poset) -> tuple[str, ...]:
    return tuple(x for x in p.labels if is_irreducible(p, x))


def coirreducibles(p: Poset) -> tuple[str, ...]:
    op = p.opposite()
    return tuple(x for x in p.labels if is_irreducible(op, x))


def doubly_irreducibles(p: Poset) -> frozenset[str]:
    """Elements that are both irreducible and coirreducible."""
    prof = profiles(p)
    return frozenset(x for x, entry in prof.items() if entry.doubly)


@lru_cache(maxsize=None)
def _proper_meets(p: Poset) -> frozenset[str]:
    """Elements expressible as meet(a, b) with the element outside {a, b}."""
    out: set[str] = set()
    n = len(p)
    for a in range(n):
        beq_a = p._below[a] | 1 << a
        for b in range(a + 1, n):
            lower = beq_a & (p._below[b] | 1 << b)
            if not lower:
                continue
            m = p._unique_maximal(lower)
            if m is not None and m != a and m != b:
                out.add(p._labels[m])
    return frozenset(out)


def is_irreducible_via_meet(p: Poset, x: str) -> bool:
    """Meet-based irreducibility test, valid in conditionally complete posets.

    True iff x = meet(a, b) implies x in {a, b} for all pairs. Raises
    NotConditionallyComplete when the hypothesis fails, since the
    equivalence with :func:`is_irreducible` is only guaranteed there.
    """
    p._i(x)
    if not p.is_conditionally_complete():
        raise NotConditionallyComplete(
            "the meet characterization needs a conditionally complete poset")
    return x not in _proper_meets(p)


@dataclass
class PreservationReport:
    """Irreducibility before and after one pruning pass."""

    original: Poset
    pruned: Poset
    original_profiles: dict[str, IrreducibilityProfile]
    pruned_profiles: dict[str, IrreducibilityProfile]
    hypothesis_met: bool
    preserved: bool


def preservation_report(p: Poset, mode: str = "fast",
                        allow_incomplete: bool = False) -> PreservationReport:
    """Compare irreducibility in p and in its pruning.

    For finite conditionally complete posets the irreducible and
    coirreducible elements are the same before and after pruning. When the
    poset is not conditionally complete, NotConditionallyComplete is
    raised unless ``allow_incomplete`` is set, in which case the report is
    still computed for exploration with ``hypothesis_met`` False.
    """
    met = p.is_conditionally_complete()
    if not met and not allow_incomplete:
        raise NotConditionallyComplete(
            "preservation is only asserted for conditionally complete posets")
    pruned = prune(p, mode).pruned
    before = profiles(p)
    after = profiles(pruned)
    preserved = all(
        before[x].irreducible == after[x].irreducible
        and before[x].coirreducible == after[x].coirreducible
        for x in p.labels)
    return PreservationReport(
        original=p,
        pruned=pruned,
        original_profiles=before,
        pruned_profiles=after,
        hypothesis_met=met,
        preserved=preserved,
    )
