"""Veins: convex chains contained in every maximal chain they meet.

A chain C is irreducible when every maximal chain meeting C contains C;
a vein is an irreducible convex chain. Two-element veins coincide with
bridge edges of the cover digraph (cover pairs (x, y) where y is the only
upper cover of x and x the only lower cover of y), and longer veins are
exactly the saturated runs of consecutive bridge edges. That gives a fast
enumeration; the definition-level oracle is kept alongside, and both are
exposed through a ``mode`` switch so they can be played against each other.
"""

from __future__ import annotations

from collections.abc import Iterable
from functools import lru_cache

from .connectivity import SetFamily
from .errors import EmptySet, TooLarge
from .poset import Poset, _bits

_MODES = ("fast", "oracle")


def _check_mode(mode: str) -> None:
    if mode not in _MODES:
        raise ValueError(f"mode must be one of {_MODES}, got {mode!r}")


@lru_cache(maxsize=None)
def _maximal_chain_masks(p: Poset) -> tuple[int, ...]:
    return tuple(p._mask(chain) for chain in p.maximal_chains())


def is_irreducible_chain(p: Poset, subset: Iterable[str]) -> bool:
    """True iff every maximal chain meeting the chain contains it.

    The subset must be a nonempty chain (NotAChain / EmptySet otherwise).
    """
    cm = p._mask(p.as_chain(subset))
    for m in _maximal_chain_masks(p):
        if cm & m and cm & ~m:
            return False
    return True


def check_covering_characterization(p: Poset, subset: Iterable[str],
                                    max_maximal_chains: int = 16) -> bool:
    """Family form of chain irreducibility, checked exhaustively.

    Runs through every nonempty family of maximal chains in which each
    member meets the given chain, and demands that some member contain
    the chain. Agrees with :func:`is_irreducible_chain`; kept as a slow
    cross-check. TooLarge is raised when the poset has more maximal
    chains than ``max_maximal_chains``.
    """
    cm = p._mask(p.as_chain(subset))
    masks = _maximal_chain_masks(p)
    if len(masks) > max_maximal_chains:
        raise TooLarge(
            f"{len(masks)} maximal chains exceed the exhaustive bound "
            f"{max_maximal_chains}")
    skip = 0       # families with a member disjoint from the chain
    containing = 0  # members that contain the chain outright
    for i, m in enumerate(masks):
        if not cm & m:
            skip |= 1 << i
        elif not cm & ~m:
            containing |= 1 << i
    for family in range(1, 1 << len(masks)):
        if family & skip:
            continue
        if not family & containing:
            return False
    return True


def is_vein(p: Poset, subset: Iterable[str]) -> bool:
    """True iff the nonempty subset is a convex irreducible chain."""
    members = set(subset)
    if not members:
        raise EmptySet("a vein is a nonempty chain")
    for x in members:
        p._i(x)
    if not p.is_chain(members):
        return False
    if not p.is_convex(members):
        return False
    return is_irreducible_chain(p, members)


# ----------------------------------------------------------------------
# bridge edges and the fast enumeration


@lru_cache(maxsize=None)
def _bridge_pairs_ix(p: Poset) -> frozenset[tuple[int, int]]:
    out = set()
    for i in range(len(p)):
        up = p._ucov[i]
        if up and not up & (up - 1):  # exactly one upper cover
            j = up.bit_length() - 1
            down = p._dcov[j]
            if not down & (down - 1):  # exactly one lower cover
                out.add((i, j))
    return frozenset(out)


def bridge_edges(p: Poset) -> frozenset[tuple[str, str]]:
    """Cover pairs (x, y) where y is the unique upper cover of x and x the
    unique lower cover of y. These are exactly the two-element veins."""
    return frozenset((p._labels[i], p._labels[j])
                     for i, j in _bridge_pairs_ix(p))


@lru_cache(maxsize=None)
def _bridge_paths_ix(p: Poset) -> tuple[tuple[int, ...], ...]:
    """Maximal runs of consecutive bridge edges, as index tuples."""
    nxt = dict(_bridge_pairs_ix(p))
    starts = set(nxt) - set(nxt.values())
    paths = []
    for start in sorted(starts):
        path = [start]
        while path[-1] in nxt:
            path.append(nxt[path[-1]])
        paths.append(tuple(path))
    return tuple(paths)


def strict_veins(p: Poset, mode: str = "fast") -> list[tuple[str, ...]]:
    """All veins with at least two elements, ascending, sorted.

    ``fast`` reads them off the bridge-edge paths; ``oracle`` filters every
    saturated cover path through the convexity and irreducibility
    definitions. The two must agree on every finite poset.
    """
    _check_mode(mode)
    if mode == "fast":
        out = []
        for path in _bridge_paths_ix(p):
            for lo in range(len(path)):
                for hi in range(lo + 2, len(path) + 1):
                    out.append(tuple(p._labels[k] for k in path[lo:hi]))
        return sorted(out)
    veins = []
    for seq in _saturated_paths_ix(p):
        labels = tuple(p._labels[k] for k in seq)
        if p.is_convex(labels) and is_irreducible_chain(p, labels):
            veins.append(labels)
    return sorted(veins)


def _saturated_paths_ix(p: Poset) -> list[tuple[int, ...]]:
    """Every cover path with at least two vertices."""
    out: list[tuple[int, ...]] = []
    acc: list[int] = []

    def walk(i: int) -> None:
        for j in _bits(p._ucov[i]):
            acc.append(j)
            out.append(tuple(acc))
            walk(j)
            acc.pop()

    for start in range(len(p)):
        acc = [start]
        walk(start)
    return out


def maximal_veins(p: Poset) -> list[tuple[str, ...]]:
    """The inclusion-maximal veins; they partition the ground set.

    Maximal bridge-edge runs, plus a singleton for every element that lies
    on no bridge edge.
    """
    paths = _bridge_paths_ix(p)
    on_path = 0
    out = []
    for path in paths:
        for k in path:
            on_path |= 1 << k
        out.append(tuple(p._labels[k] for k in path))
    for i in range(len(p)):
        if not on_path >> i & 1:
            out.append((p._labels[i],))
    return sorted(out)


# ----------------------------------------------------------------------
# families, for the connectivity facts


def vein_family(p: Poset, mode: str = "fast") -> SetFamily:
    """Every vein of the poset: all singletons plus the strict veins."""
    members: list[tuple[str, ...]] = [(x,) for x in p.labels]
    members.extend(strict_veins(p, mode))
    return SetFamily(p.labels, members)


def all_chains(p: Poset, max_elements: int = 16) -> list[tuple[str, ...]]:
    """Every nonempty chain, ascending, sorted; exhaustive by design."""
    if len(p) > max_elements:
        raise TooLarge(
            f"{len(p)} elements exceed the chain-enumeration bound "
            f"{max_elements}")
    out: list[tuple[int, ...]] = []
    acc: list[int] = []

    def extend(i: int) -> None:
        acc.append(i)
        out.append(tuple(acc))
        for j in _bits(p._above[i]):
            extend(j)
        acc.pop()

    for start in range(len(p)):
        extend(start)
    return sorted(tuple(p._labels[k] for k in seq) for seq in out)


def irreducible_chain_family(p: Poset, max_elements: int = 16) -> SetFamily:
    """Every irreducible chain of the poset, as a set family."""
    members = [c for c in all_chains(p, max_elements)
               if is_irreducible_chain(p, c)]
    return SetFamily(p.labels, members)


def maximal_irreducible_chains(p: Poset, max_elements: int = 16) -> list[tuple[str, ...]]:
    """The inclusion-maximal irreducible chains, sorted."""
    family = irreducible_chain_family(p, max_elements)
    sets = family.members
    out = []
    for m in sets:
        if not any(m < other for other in sets):
            out.append(tuple(sorted(m, key=lambda lab: p._below[p._i(lab)].bit_count())))
    return sorted(out)
