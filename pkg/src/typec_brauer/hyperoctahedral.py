"""Signed permutations and their diagram realization.

The hyperoctahedral group H_m is realized two ways: as signed
permutations of 1..m, and as the mirror-symmetric arc-free diagrams on
2m strands.  A diagram's strand pairs are indexed by the right half:
position m + p and its mirror m + 1 - p together carry pair index p.

Products follow diagram stacking: ``u.compose(v)`` is the element whose
diagram is u's placed above v's, i.e. (u * v)(p) = sign(u(p)) v(|u(p)|).
With this convention the diagram realization is a group isomorphism.
"""

from __future__ import annotations

from .diagrams import BrauerDiagram, arc_count, require_symmetric
from .errors import ResourceLimitError, SizeMismatchError
from .limits import enumeration_bound


class SignedPermutation:
    """Element of H_m: images w(1..m) with w(p) in {+-1, ..., +-m}."""

    __slots__ = ("m", "images")

    def __init__(self, images):
        images = tuple(int(x) for x in images)
        m = len(images)
        if sorted(abs(x) for x in images) != list(range(1, m + 1)):
            raise ValueError(f"{images} is not a signed permutation")
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "images", images)

    def __setattr__(self, name, value):
        raise AttributeError("SignedPermutation values are immutable")

    @classmethod
    def identity(cls, m: int) -> "SignedPermutation":
        return cls(range(1, m + 1))

    def __call__(self, p: int) -> int:
        return self.images[p - 1]

    def is_identity(self) -> bool:
        return self.images == tuple(range(1, self.m + 1))

    def compose(self, other: "SignedPermutation") -> "SignedPermutation":
        """Stack self's diagram above other's: apply self first."""
        if self.m != other.m:
            raise SizeMismatchError(f"sizes {self.m} and {other.m} differ")
        out = []
        for p in range(1, self.m + 1):
            a = self.images[p - 1]
            b = other.images[abs(a) - 1]
            out.append(b if a > 0 else -b)
        return SignedPermutation(out)

    def __mul__(self, other):
        return self.compose(other)

    def inverse(self) -> "SignedPermutation":
        out = [0] * self.m
        for p in range(1, self.m + 1):
            a = self.images[p - 1]
            out[abs(a) - 1] = p if a > 0 else -p
        return SignedPermutation(out)

    def __eq__(self, other):
        return (
            isinstance(other, SignedPermutation)
            and self.m == other.m
            and self.images == other.images
        )

    def __hash__(self):
        return hash(self.images)

    def __lt__(self, other):
        return self.images < other.images

    def __repr__(self):
        return f"SignedPermutation({list(self.images)})"

    def to_json(self):
        return {"m": self.m, "images": list(self.images)}

    @classmethod
    def from_json(cls, data) -> "SignedPermutation":
        w = cls(data["images"])
        if w.m != data["m"]:
            raise ValueError("inconsistent signed-permutation encoding")
        return w


def group_compose(u: SignedPermutation, v: SignedPermutation) -> SignedPermutation:
    """Product in diagram-stacking order: u's diagram above v's."""
    return u.compose(v)


def label_map(w: SignedPermutation):
    """Expand to the mirror-equivariant map on 2m strand labels.

    Returns L with L[a] = b (1-based) meaning top label a joins bottom
    label b; pair index p occupies labels m + p and m + 1 - p.
    """
    m = w.m
    L = [0] * (2 * m + 1)
    for p in range(1, m + 1):
        q = w.images[p - 1]
        if q > 0:
            L[m + p] = m + q
            L[m + 1 - p] = m + 1 - q
        else:
            q = -q
            L[m + p] = m + 1 - q
            L[m + 1 - p] = m + q
    return L


def signed_from_label_map(L, m: int) -> SignedPermutation:
    """Read a signed permutation off a mirror-equivariant label map."""
    out = []
    for p in range(1, m + 1):
        b = L[m + p]
        out.append(b - m if b > m else -(m + 1 - b))
    return SignedPermutation(out)


def to_symmetric_perm(w: SignedPermutation) -> BrauerDiagram:
    """The arc-free mirror-symmetric diagram of w, on 2m strands."""
    m = w.m
    L = label_map(w)
    return BrauerDiagram(m, [(a, 2 * m + L[a]) for a in range(1, 2 * m + 1)])


def from_through_strands(d: BrauerDiagram) -> SignedPermutation:
    """Signed permutation carried by the through strands of a symmetric diagram.

    Through positions are sorted ascending on each row and labelled
    1..t; the induced label map is read off via the right-half pair
    convention.  Inverse of to_symmetric_perm on arc-free diagrams.
    """
    require_symmetric(d)
    throughs = d.through_pairs()
    top_positions = sorted(a for a, _ in throughs)
    bottom_positions = sorted(b for _, b in throughs)
    top_label = {pos: i + 1 for i, pos in enumerate(top_positions)}
    bottom_label = {pos: i + 1 for i, pos in enumerate(bottom_positions)}
    t = len(throughs)
    m = t // 2
    L = [0] * (t + 1)
    for a, b in throughs:
        L[top_label[a]] = bottom_label[b]
    return signed_from_label_map(L, m)


def enumerate_group(m: int, bound=None):
    """All 2^m m! elements of H_m in lexicographic order of image tuples."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    limit = enumeration_bound(bound)
    if m > limit:
        raise ResourceLimitError(
            f"group enumeration capped at m = {limit} (asked for {m})"
        )
    out = []

    def rec(prefix, remaining):
        if not remaining:
            out.append(SignedPermutation(prefix))
            return
        for x in remaining:
            for signed in (-x, x):
                rec(prefix + [signed], [y for y in remaining if y != x])

    rec([], list(range(1, m + 1)))
    out.sort()
    return out
