"""Finite partially ordered sets on string labels.

A poset is stored as its cover digraph together with full strict-order
reachability. Both live as bitmasks over the sorted label list, so
comparability, interval, and bound queries come down to word operations.
Elements are identified by their labels and nothing else.

Instances are immutable after construction and hashable; every query is
read-only, so a poset can be shared freely between threads.
"""

from __future__ import annotations

from collections.abc import Iterable

from .errors import (
    CycleDetected,
    DuplicateLabel,
    EmptySet,
    NotAChain,
    NotComparable,
    UnknownLabel,
)


def _bits(mask: int):
    """Indices of the set bits of mask, lowest first."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Poset:
    """An immutable finite poset.

    The constructor trusts its arguments: ``labels`` must be sorted and
    ``above[i]`` must be the bitmask of elements strictly greater than
    element i under an irreflexive, transitive, antisymmetric relation.
    Use :meth:`from_relations` to build a poset from raw relation pairs
    with full validation.
    """

    __slots__ = ("_labels", "_index", "_above", "_below", "_ucov", "_dcov",
                 "_hash", "_chains", "_cond")

    def __init__(self, labels: tuple[str, ...], above: tuple[int, ...]):
        n = len(labels)
        self._labels = tuple(labels)
        self._index = {lab: i for i, lab in enumerate(self._labels)}
        self._above = tuple(above)
        below = [0] * n
        ucov = []
        for i in range(n):
            redundant = 0
            for j in _bits(above[i]):
                below[j] |= 1 << i
                redundant |= above[j]
            # covers of i: strictly above i but not above anything above i
            ucov.append(above[i] & ~redundant)
        self._below = tuple(below)
        self._ucov = tuple(ucov)
        dcov = [0] * n
        for i in range(n):
            for j in _bits(ucov[i]):
                dcov[j] |= 1 << i
        self._dcov = tuple(dcov)
        self._hash = None
        self._chains = None
        self._cond = None

    # ------------------------------------------------------------------
    # construction

    @classmethod
    def from_relations(cls, labels: Iterable[str],
                       pairs: Iterable[tuple[str, str]]) -> Poset:
        """Poset whose strict order is the transitive closure of ``pairs``.

        The pairs may be covers or any strict relations; the cover digraph
        is recomputed as the transitive reduction. Raises DuplicateLabel,
        UnknownLabel, or CycleDetected (with a witness cycle).
        """
        ordered = list(labels)
        seen: set[str] = set()
        for lab in ordered:
            if lab in seen:
                raise DuplicateLabel(f"duplicate label {lab!r}")
            seen.add(lab)
        sorted_labels = tuple(sorted(ordered))
        index = {lab: i for i, lab in enumerate(sorted_labels)}
        adj = [0] * len(sorted_labels)
        for a, b in pairs:
            ia = index.get(a)
            ib = index.get(b)
            if ia is None:
                raise UnknownLabel(f"unknown label {a!r}")
            if ib is None:
                raise UnknownLabel(f"unknown label {b!r}")
            if ia == ib:
                raise CycleDetected((a, a))
            adj[ia] |= 1 << ib
        return cls(sorted_labels, cls._close(sorted_labels, adj))

    @staticmethod
    def _close(labels: tuple[str, ...], adj: list[int]) -> tuple[int, ...]:
        """Transitive closure of an adjacency mask list, rejecting cycles."""
        n = len(labels)
        color = [0] * n  # 0 new, 1 on the DFS path, 2 finished
        post: list[int] = []
        for root in range(n):
            if color[root]:
                continue
            color[root] = 1
            path = [root]
            iters = [_bits(adj[root])]
            while iters:
                try:
                    j = next(iters[-1])
                except StopIteration:
                    done = path.pop()
                    iters.pop()
                    color[done] = 2
                    post.append(done)
                    continue
                if color[j] == 1:
                    at = path.index(j)
                    cycle = [labels[k] for k in path[at:]] + [labels[j]]
                    raise CycleDetected(tuple(cycle))
                if color[j] == 0:
                    color[j] = 1
                    path.append(j)
                    iters.append(_bits(adj[j]))
        above = [0] * n
        for i in post:  # descendants are finished before their ancestors
            acc = 0
            for j in _bits(adj[i]):
                acc |= (1 << j) | above[j]
            above[i] = acc
        return tuple(above)

    # ------------------------------------------------------------------
    # basic views

    @property
    def labels(self) -> tuple[str, ...]:
        """All element labels in sorted order."""
        return self._labels

    @property
    def elements(self) -> frozenset[str]:
        return frozenset(self._labels)

    @property
    def covers(self) -> tuple[tuple[str, str], ...]:
        """Cover pairs (x, y) with x covered by y, sorted lexicographically."""
        out = [(self._labels[i], self._labels[j])
               for i in range(len(self._labels))
               for j in _bits(self._ucov[i])]
        return tuple(sorted(out))

    def relations(self) -> tuple[tuple[str, str], ...]:
        """All strict pairs (x, y) with x < y, sorted lexicographically."""
        out = [(self._labels[i], self._labels[j])
               for i in range(len(self._labels))
               for j in _bits(self._above[i])]
        return tuple(sorted(out))

    def __len__(self) -> int:
        return len(self._labels)

    def __iter__(self):
        return iter(self._labels)

    def __contains__(self, label) -> bool:
        return label in self._index

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poset):
            return NotImplemented
        return self._labels == other._labels and self._above == other._above

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._labels, self._above))
        return self._hash

    def __repr__(self) -> str:
        n = len(self._labels)
        m = sum(c.bit_count() for c in self._ucov)
        return f"<Poset {n} elements, {m} covers>"

    # ------------------------------------------------------------------
    # index helpers (package internal)

    def _i(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownLabel(f"unknown label {label!r}") from None

    def _mask(self, labels: Iterable[str]) -> int:
        acc = 0
        for lab in labels:
            acc |= 1 << self._i(lab)
        return acc

    def _labels_of(self, mask: int) -> tuple[str, ...]:
        return tuple(self._labels[i] for i in _bits(mask))

    # ------------------------------------------------------------------
    # order queries

    def leq(self, x: str, y: str) -> bool:
        """True iff x <= y."""
        ix, iy = self._i(x), self._i(y)
        return ix == iy or bool(self._above[ix] >> iy & 1)

    def lt(self, x: str, y: str) -> bool:
        """True iff x < y strictly."""
        return bool(self._above[self._i(x)] >> self._i(y) & 1)

    def comparable(self, x: str, y: str) -> bool:
        return self.leq(x, y) or self.leq(y, x)

    def upper_covers(self, x: str) -> tuple[str, ...]:
        return self._labels_of(self._ucov[self._i(x)])

    def lower_covers(self, x: str) -> tuple[str, ...]:
        return self._labels_of(self._dcov[self._i(x)])

    def minimal_elements(self) -> tuple[str, ...]:
        return tuple(lab for i, lab in enumerate(self._labels)
                     if not self._below[i])

    def maximal_elements(self) -> tuple[str, ...]:
        return tuple(lab for i, lab in enumerate(self._labels)
                     if not self._above[i])

    def strict_upset(self, x: str) -> frozenset[str]:
        """All elements strictly greater than x."""
        return frozenset(self._labels_of(self._above[self._i(x)]))

    def strict_downset(self, x: str) -> frozenset[str]:
        """All elements strictly less than x."""
        return frozenset(self._labels_of(self._below[self._i(x)]))

    def interval(self, x: str, y: str) -> frozenset[str]:
        """The interval [x, y] = {z : x <= z <= y}; empty unless x <= y."""
        ix, iy = self._i(x), self._i(y)
        return frozenset(self._labels_of(self._interval_mask(ix, iy)))

    def _interval_mask(self, ix: int, iy: int) -> int:
        return ((self._above[ix] | 1 << ix) & (self._below[iy] | 1 << iy))

    # ------------------------------------------------------------------
    # chains and convexity

    def as_chain(self, subset: Iterable[str]) -> tuple[str, ...]:
        """The elements of ``subset`` sorted ascending, if they form a chain.

        Raises EmptySet for the empty set, UnknownLabel for foreign labels,
        and NotAChain when two members are incomparable.
        """
        idxs = sorted({self._i(x) for x in subset})
        if not idxs:
            raise EmptySet("a chain must contain at least one element")
        # x < y forces strictly fewer elements below x, so this sort is
        # ascending whenever the set really is a chain
        idxs.sort(key=lambda i: self._below[i].bit_count())
        for a, b in zip(idxs, idxs[1:]):
            if not self._above[a] >> b & 1:
                raise NotAChain(
                    f"{self._labels[a]!r} and {self._labels[b]!r} "
                    "are incomparable")
        return tuple(self._labels[i] for i in idxs)

    def is_chain(self, subset: Iterable[str]) -> bool:
        """True iff the nonempty subset is totally ordered."""
        try:
            self.as_chain(subset)
        except NotAChain:
            return False
        return True

    def is_convex(self, subset: Iterable[str]) -> bool:
        """True iff the nonempty subset is order convex.

        Convex means: x, y in the set and x <= z <= y imply z is in it.
        """
        idxs = {self._i(x) for x in subset}
        if not idxs:
            raise EmptySet("convexity is defined for nonempty subsets")
        smask = 0
        for i in idxs:
            smask |= 1 << i
        for i in idxs:
            for j in _bits(self._above[i] & smask):
                if self._above[i] & self._below[j] & ~smask:
                    return False
        return True

    def maximal_chains(self) -> list[tuple[str, ...]]:
        """All maximal chains, each ascending, in lexicographic order.

        Maximal chains of a finite poset are exactly the saturated cover
        paths from a minimal to a maximal element.
        """
        if self._chains is None:
            out: list[tuple[str, ...]] = []
            acc: list[int] = []

            def walk(i: int) -> None:
                acc.append(i)
                up = self._ucov[i]
                if not up:
                    out.append(tuple(self._labels[k] for k in acc))
                else:
                    for j in _bits(up):
                        walk(j)
                acc.pop()

            for i in range(len(self._labels)):
                if not self._below[i]:
                    walk(i)
            self._chains = out
        return list(self._chains)

    def maximal_chains_in_interval(self, x: str, y: str) -> list[tuple[str, ...]]:
        """All maximal chains of [x, y], ascending, lexicographic order.

        Intervals are convex, so these are the cover paths from x to y in
        the ambient cover digraph; each is saturated in the whole poset.
        Raises NotComparable unless x <= y.
        """
        ix, iy = self._i(x), self._i(y)
        if ix != iy and not self._above[ix] >> iy & 1:
            raise NotComparable(f"{x!r} <= {y!r} does not hold")
        if ix == iy:
            return [(self._labels[ix],)]
        mask = self._interval_mask(ix, iy)
        out: list[tuple[str, ...]] = []
        acc: list[int] = []

        def walk(i: int) -> None:
            acc.append(i)
            if i == iy:
                out.append(tuple(self._labels[k] for k in acc))
            else:
                for j in _bits(self._ucov[i] & mask):
                    walk(j)
            acc.pop()

        walk(ix)
        return out

    # ------------------------------------------------------------------
    # derived posets

    def induced_subposet(self, subset: Iterable[str]) -> Poset:
        """The poset induced on a nonempty subset, order restricted."""
        idxs = sorted({self._i(x) for x in subset})
        if not idxs:
            raise EmptySet("an induced subposet needs at least one element")
        smask = 0
        for i in idxs:
            smask |= 1 << i
        pos = {old: new for new, old in enumerate(idxs)}
        above = []
        for old in idxs:
            acc = 0
            for j in _bits(self._above[old] & smask):
                acc |= 1 << pos[j]
            above.append(acc)
        return Poset(tuple(self._labels[i] for i in idxs), tuple(above))

    def opposite(self) -> Poset:
        """The dual poset: same elements, order reversed."""
        return Poset(self._labels, self._below)

    # ------------------------------------------------------------------
    # bounds

    def _unique_maximal(self, mask: int) -> int | None:
        """Index of the maximum of the set ``mask``, or None.

        In a finite poset a set has a maximum iff it has exactly one
        maximal element.
        """
        found = None
        for i in _bits(mask):
            if not self._above[i] & mask:
                if found is not None:
                    return None
                found = i
        return found

    def _unique_minimal(self, mask: int) -> int | None:
        found = None
        for i in _bits(mask):
            if not self._below[i] & mask:
                if found is not None:
                    return None
                found = i
        return found

    def meet(self, a: str, b: str) -> str | None:
        """Greatest lower bound of a and b, or None when it does not exist."""
        ia, ib = self._i(a), self._i(b)
        lower = ((self._below[ia] | 1 << ia) & (self._below[ib] | 1 << ib))
        top = self._unique_maximal(lower)
        return None if top is None else self._labels[top]

    def join(self, a: str, b: str) -> str | None:
        """Least upper bound of a and b, or None when it does not exist."""
        ia, ib = self._i(a), self._i(b)
        upper = ((self._above[ia] | 1 << ia) & (self._above[ib] | 1 << ib))
        bot = self._unique_minimal(upper)
        return None if bot is None else self._labels[bot]

    def is_conditionally_complete(self) -> bool:
        """True iff bounded pairs have meets and joins.

        Every pair with a common lower bound must have a meet, and every
        pair with a common upper bound must have a join.
        """
        if self._cond is None:
            self._cond = self._check_conditionally_complete()
        return self._cond

    def _check_conditionally_complete(self) -> bool:
        n = len(self._labels)
        for a in range(n):
            beq_a = self._below[a] | 1 << a
            aeq_a = self._above[a] | 1 << a
            for b in range(a + 1, n):
                lower = beq_a & (self._below[b] | 1 << b)
                if lower and self._unique_maximal(lower) is None:
                    return False
                upper = aeq_a & (self._above[b] | 1 << b)
                if upper and self._unique_minimal(upper) is None:
                    return False
        return True

    def is_filtered_upset(self, subset: Iterable[str]) -> bool:
        """True iff ``subset`` is up-closed and down-directed (a filter).

        Down-directed means any two members have a lower bound inside the
        subset. The empty set counts as a filter.
        """
        idxs = sorted({self._i(x) for x in subset})
        smask = 0
        for i in idxs:
            smask |= 1 << i
        for i in idxs:
            if self._above[i] & ~smask:
                return False
        for pos, a in enumerate(idxs):
            beq_a = self._below[a] | 1 << a
            for b in idxs[pos + 1:]:
                if not beq_a & (self._below[b] | 1 << b) & smask:
                    return False
        return True

    # ------------------------------------------------------------------
    # layout support

    def heights(self) -> dict[str, int]:
        """Longest-path height of every element above the minimal level."""
        n = len(self._labels)
        h = [0] * n
        for i in sorted(range(n), key=lambda k: self._below[k].bit_count()):
            for j in _bits(self._dcov[i]):
                if h[j] + 1 > h[i]:
                    h[i] = h[j] + 1
        return {self._labels[i]: h[i] for i in range(n)}
