"""Brauer diagrams on 2n strands.

A diagram is a perfect matching on 2n top and 2n bottom nodes.  Nodes
are encoded as integers: top position i (1-based, left to right) is i,
bottom position i is 2n + i.  The mirror automorphism reflects each row
in the central vertical axis (position i -> 2n + 1 - i); the flip swaps
the two rows.  The type C algebra lives on the mirror-fixed diagrams,
but asymmetric diagrams are valid values here (the ambient monoid).
"""

from __future__ import annotations

from .errors import AsymmetricDiagramError, RankMismatchError, ResourceLimitError
from .limits import enumeration_bound


class BrauerDiagram:
    """Immutable perfect matching on the 4n nodes of a 2n-strand diagram.

    Canonical form: each pair stored smaller node first, pairs sorted
    lexicographically.  Equality and hashing use the canonical form.
    """

    __slots__ = ("n", "pairs", "_match")

    def __init__(self, n: int, pairs):
        if n < 0:
            raise ValueError("rank must be nonnegative")
        norm = tuple(sorted(tuple(sorted(p)) for p in pairs))
        nodes = [x for p in norm for x in p]
        if sorted(nodes) != list(range(1, 4 * n + 1)):
            raise ValueError("pairs must partition the 4n nodes")
        match = {}
        for a, b in norm:
            match[a] = b
            match[b] = a
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "pairs", norm)
        object.__setattr__(self, "_match", match)

    def __setattr__(self, name, value):
        raise AttributeError("BrauerDiagram values are immutable")

    @classmethod
    def identity(cls, n: int) -> "BrauerDiagram":
        return cls(n, [(i, 2 * n + i) for i in range(1, 2 * n + 1)])

    def partner(self, node: int) -> int:
        return self._match[node]

    def __eq__(self, other):
        return (
            isinstance(other, BrauerDiagram)
            and self.n == other.n
            and self.pairs == other.pairs
        )

    def __hash__(self):
        return hash((self.n, self.pairs))

    def __lt__(self, other):
        return (self.n, self.pairs) < (other.n, other.pairs)

    def __repr__(self):
        return f"BrauerDiagram(n={self.n}, pairs={list(self.pairs)})"

    def _node_name(self, x: int) -> str:
        w = 2 * self.n
        return f"T{x}" if x <= w else f"B{x - w}"

    def to_json(self):
        return {
            "n": self.n,
            "pairs": [[self._node_name(a), self._node_name(b)] for a, b in self.pairs],
        }

    @classmethod
    def from_json(cls, data) -> "BrauerDiagram":
        n = data["n"]
        w = 2 * n

        def node(name):
            idx = int(name[1:])
            return idx if name[0] == "T" else w + idx

        return cls(n, [(node(a), node(b)) for a, b in data["pairs"]])

    def top_arcs(self):
        """Top-row arcs as position pairs in 1..2n."""
        w = 2 * self.n
        return [(a, b) for a, b in self.pairs if b <= w]

    def bottom_arcs(self):
        """Bottom-row arcs as position pairs in 1..2n."""
        w = 2 * self.n
        return [(a - w, b - w) for a, b in self.pairs if a > w]

    def through_pairs(self):
        """Through strands as (top position, bottom position)."""
        w = 2 * self.n
        return [(a, b - w) for a, b in self.pairs if a <= w < b]


def arc_count(d: BrauerDiagram) -> int:
    """Number of top-row arcs (always equal to the bottom-row count)."""
    return len(d.top_arcs())


def mirror(d: BrauerDiagram) -> BrauerDiagram:
    """Reflect in the central vertical axis: position i -> 2n + 1 - i per row."""
    w = 2 * d.n

    def m(x):
        return w + 1 - x if x <= w else w + (2 * w + 1 - x)

    return BrauerDiagram(d.n, [(m(a), m(b)) for a, b in d.pairs])


def flip(d: BrauerDiagram) -> BrauerDiagram:
    """Reflect in the horizontal axis: swap the top and bottom rows."""
    w = 2 * d.n

    def f(x):
        return x + w if x <= w else x - w

    return BrauerDiagram(d.n, [(f(a), f(b)) for a, b in d.pairs])


def is_symmetric(d: BrauerDiagram) -> bool:
    """True iff the diagram is fixed by the mirror automorphism."""
    return mirror(d) == d


def compose(d1: BrauerDiagram, d2: BrauerDiagram):
    """Stack d1 above d2 and trace strands.

    Returns (diagram, loop_count): the result keeps d1's top row and
    d2's bottom row; loop_count is the number of closed cycles confined
    to the identified middle rows.
    """
    if d1.n != d2.n:
        raise RankMismatchError(f"cannot compose ranks {d1.n} and {d2.n}")
    n = d1.n
    w = 2 * n
    m1 = d1._match
    m2 = d2._match
    seen_mid = set()

    # Result nodes reuse the 1..4n encoding.  Middle position p glues
    # d1's bottom node w + p to d2's top node p.
    def trace(layer, node):
        while True:
            if layer == 1:
                nxt = m1[node]
                if nxt <= w:
                    return nxt  # ends at d1's top
                seen_mid.add(nxt - w)
                layer, node = 2, nxt - w
            else:
                nxt = m2[node]
                if nxt > w:
                    return w + (nxt - w)  # ends at d2's bottom
                seen_mid.add(nxt)
                layer, node = 1, w + nxt

    pairs = []
    paired = set()
    for s in range(1, w + 1):
        if s in paired:
            continue
        e = trace(1, s)
        paired.update((s, e))
        pairs.append((s, e))
    for i in range(1, w + 1):
        s = w + i
        if s in paired:
            continue
        e = trace(2, w + i)
        paired.update((s, e))
        pairs.append((s, e))

    loops = 0
    for p in range(1, w + 1):
        if p in seen_mid:
            continue
        loops += 1
        q = p
        while True:
            seen_mid.add(q)
            r = m2[q]
            seen_mid.add(r)
            q = m1[w + r] - w
            if q == p:
                break
    return BrauerDiagram(n, pairs), loops


def require_symmetric(d: BrauerDiagram) -> BrauerDiagram:
    if not is_symmetric(d):
        raise AsymmetricDiagramError("diagram is not mirror-symmetric")
    return d


def enumerate_symmetric_diagrams(n: int, bound=None):
    """All mirror-fixed diagrams on 2n strands, canonically ordered.

    Generation pairs mirror orbits together so only symmetric matchings
    are ever built; the result is sorted into canonical lexicographic
    order.  Raises ResourceLimitError above the configured bound.
    """
    if n < 1:
        raise ValueError("rank must be at least 1")
    limit = enumeration_bound(bound)
    if n > limit:
        raise ResourceLimitError(
            f"symmetric-diagram enumeration capped at rank {limit} (asked for {n})"
        )
    w = 2 * n
    total = 4 * n

    def mirror_node(x):
        return w + 1 - x if x <= w else w + (2 * w + 1 - x)

    out = []
    used = [False] * (total + 1)
    chosen = []

    def rec():
        x = next((i for i in range(1, total + 1) if not used[i]), None)
        if x is None:
            out.append(BrauerDiagram(n, list(chosen)))
            return
        mx = mirror_node(x)
        for y in range(1, total + 1):
            if y == x or used[y]:
                continue
            my = mirror_node(y)
            if y == mx:
                used[x] = used[y] = True
                chosen.append((x, y))
                rec()
                chosen.pop()
                used[x] = used[y] = False
            else:
                if used[mx] or used[my] or my == x:
                    continue
                used[x] = used[y] = used[mx] = used[my] = True
                chosen.append((x, y))
                chosen.append((mx, my))
                rec()
                chosen.pop()
                chosen.pop()
                used[x] = used[y] = used[mx] = used[my] = False

    rec()
    dedup = sorted(set(out))
    return dedup
