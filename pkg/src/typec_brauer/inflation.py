"""Dangles, the layer decomposition, and the inflation product.

Cutting the through strands of a symmetric diagram leaves a symmetric
dangle on each row plus a signed permutation: the map ``psi``.  The
bilinear form ``phi`` multiplies two dangles by overlaying them on one
row; it is zero exactly when the overlay creates new arcs (the product
falls into a deeper layer), and otherwise yields a loop count together
with the signed permutation traced by the surviving stubs.

Layers are indexed by arc count a = 0..n with layer group H_{n-a}: the
k arcs of the nested idempotent leave 2(n-k) through strands, which is
what the diagram model forces for the layer group.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from .algebra import idempotent_f, multiply, nested_arc_diagram
from .diagrams import (
    BrauerDiagram,
    arc_count,
    compose,
    enumerate_symmetric_diagrams,
    require_symmetric,
)
from .errors import (
    IndexRangeError,
    MalformedTripleError,
    RankMismatchError,
    ShapeMismatchError,
)
from .hyperoctahedral import (
    SignedPermutation,
    from_through_strands,
    label_map,
    signed_from_label_map,
)
from .scalars import FieldSpec, Laurent


class SymmetricDangle:
    """Mirror-stable partial matching on one row of 2n nodes.

    Arcs are disjoint pairs whose set is invariant under the mirror
    i -> 2n + 1 - i; the remaining nodes are singletons (stubs).
    """

    __slots__ = ("n", "arcs")

    def __init__(self, n: int, arcs):
        norm = tuple(sorted(tuple(sorted(p)) for p in arcs))
        seen = set()
        for a, b in norm:
            if not (1 <= a < b <= 2 * n):
                raise ValueError(f"arc ({a},{b}) out of range for 2n = {2 * n}")
            if a in seen or b in seen:
                raise ValueError("arcs are not disjoint")
            seen.update((a, b))
        mirrored = {tuple(sorted((2 * n + 1 - a, 2 * n + 1 - b))) for a, b in norm}
        if mirrored != set(norm):
            raise ValueError("arc set is not mirror-stable")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "arcs", norm)

    def __setattr__(self, name, value):
        raise AttributeError("SymmetricDangle values are immutable")

    @property
    def arc_total(self) -> int:
        return len(self.arcs)

    def singletons(self):
        covered = {x for p in self.arcs for x in p}
        return tuple(i for i in range(1, 2 * self.n + 1) if i not in covered)

    def __eq__(self, other):
        return (
            isinstance(other, SymmetricDangle)
            and self.n == other.n
            and self.arcs == other.arcs
        )

    def __hash__(self):
        return hash((self.n, self.arcs))

    def __lt__(self, other):
        return self.arcs < other.arcs

    def __repr__(self):
        return f"SymmetricDangle(n={self.n}, arcs={list(self.arcs)})"

    def to_json(self):
        return {"n": self.n, "arcs": [list(p) for p in self.arcs]}

    @classmethod
    def from_json(cls, data) -> "SymmetricDangle":
        return cls(data["n"], data["arcs"])


def nested_dangle(n: int, k: int) -> SymmetricDangle:
    """The k nested central arcs {n+1-i, n+i}, i = 1..k."""
    return SymmetricDangle(n, [(n + 1 - i, n + i) for i in range(1, k + 1)])


def enumerate_dangles(n: int, a: int):
    """All symmetric dangles on 1..2n with a arcs, canonically ordered."""
    if not 0 <= a <= n:
        raise IndexRangeError(f"arc count {a} out of range 0..{n}")
    total = 2 * n

    def mir(x):
        return total + 1 - x

    out = []
    used = [False] * (total + 1)
    chosen = []

    def rec(arcs_left):
        if arcs_left == 0:
            out.append(SymmetricDangle(n, list(chosen)))
            return
        x = next((i for i in range(1, total + 1) if not used[i]), None)
        if x is None:
            return
        # x becomes a stub (with its mirror), or an arc endpoint.
        mx = mir(x)
        used[x] = used[mx] = True
        rec(arcs_left)
        used[x] = used[mx] = False
        for y in range(1, total + 1):
            if y == x or used[y]:
                continue
            my = mir(y)
            if y == mx:
                used[x] = used[y] = True
                chosen.append((x, y))
                rec(arcs_left - 1)
                chosen.pop()
                used[x] = used[y] = False
            else:
                if used[mx] or used[my] or my == x or arcs_left < 2:
                    continue
                used[x] = used[y] = used[mx] = used[my] = True
                chosen.append((x, y))
                chosen.append((mx, my))
                rec(arcs_left - 2)
                chosen.pop()
                chosen.pop()
                used[x] = used[y] = used[mx] = used[my] = False

    rec(a)
    return sorted(set(out))


@dataclass(frozen=True)
class InflationTriple:
    """Layer datum of a symmetric diagram: (top dangle, bottom dangle, perm)."""

    top: SymmetricDangle
    bottom: SymmetricDangle
    perm: SignedPermutation
    layer: int

    def __post_init__(self):
        if self.top.n != self.bottom.n:
            raise MalformedTripleError("dangle ranks differ")
        if self.top.arc_total != self.bottom.arc_total:
            raise MalformedTripleError("dangle arc counts differ")
        if self.layer != self.top.arc_total:
            raise MalformedTripleError("layer does not match arc count")
        if self.perm.m != self.top.n - self.layer:
            raise MalformedTripleError("permutation size does not match stub count")

    @property
    def n(self) -> int:
        return self.top.n

    def to_json(self):
        return {
            "top": self.top.to_json(),
            "bottom": self.bottom.to_json(),
            "perm": self.perm.to_json(),
            "layer": self.layer,
        }


@dataclass(frozen=True)
class GroupAlgebraScalar:
    """Value of the dangle form: zero, or delta^m times a group element."""

    is_zero: bool
    delta_power: int
    element: SignedPermutation | None

    @classmethod
    def zero(cls) -> "GroupAlgebraScalar":
        return cls(True, 0, None)

    @classmethod
    def of(cls, delta_power: int, element: SignedPermutation):
        return cls(False, delta_power, element)

    def to_json(self):
        if self.is_zero:
            return {"zero": True}
        return {"delta_power": self.delta_power, "element": self.element.to_json()}


def psi(d: BrauerDiagram) -> InflationTriple:
    """Cut the through strands: dangle per row plus the strand permutation."""
    require_symmetric(d)
    n = d.n
    top = SymmetricDangle(n, d.top_arcs())
    bottom = SymmetricDangle(n, d.bottom_arcs())
    return InflationTriple(top, bottom, from_through_strands(d), arc_count(d))


def psi_inverse(t: InflationTriple) -> BrauerDiagram:
    """The unique symmetric diagram with the given arcs and strand permutation."""
    n = t.n
    w = 2 * n
    pairs = [(a, b) for a, b in t.top.arcs]
    pairs += [(w + a, w + b) for a, b in t.bottom.arcs]
    top_stubs = t.top.singletons()
    bottom_stubs = t.bottom.singletons()
    L = label_map(t.perm)
    for label, pos in enumerate(top_stubs, start=1):
        pairs.append((pos, w + bottom_stubs[L[label] - 1]))
    d = BrauerDiagram(n, pairs)
    require_symmetric(d)
    return d


def phi(f: SymmetricDangle, g: SymmetricDangle) -> GroupAlgebraScalar:
    """Overlay f (hanging down) onto g (hanging up) on one shared row.

    Zero when some stub path returns to its own side (the product gains
    arcs); otherwise the closed-loop count together with the signed
    permutation mapping f's stubs to g's stubs.
    """
    if f.n != g.n:
        raise ShapeMismatchError("dangle ranks differ")
    if f.arc_total != g.arc_total:
        raise ShapeMismatchError("dangle arc counts differ")
    f_arc = {}
    for a, b in f.arcs:
        f_arc[a] = b
        f_arc[b] = a
    g_arc = {}
    for a, b in g.arcs:
        g_arc[a] = b
        g_arc[b] = a
    f_stubs = f.singletons()
    g_stubs = g.singletons()
    g_label = {pos: i + 1 for i, pos in enumerate(g_stubs)}
    visited = set()
    t = len(f_stubs)
    L = [0] * (t + 1)
    for label, start in enumerate(f_stubs, start=1):
        pos = start
        visited.add(pos)
        while True:
            if pos not in g_arc:
                L[label] = g_label[pos]
                break
            pos = g_arc[pos]
            visited.add(pos)
            if pos not in f_arc:
                return GroupAlgebraScalar.zero()  # path ends back on f's side
            pos = f_arc[pos]
            visited.add(pos)
    loops = 0
    for a, _ in f.arcs:
        if a in visited:
            continue
        loops += 1
        pos = a
        while True:
            visited.add(pos)
            pos = f_arc[pos]
            visited.add(pos)
            pos = g_arc[pos]
            if pos == a:
                break
    return GroupAlgebraScalar.of(loops, signed_from_label_map(L, t // 2))


@dataclass(frozen=True)
class InflationProduct:
    """Product of two layer data, tracked against the layer filtration."""

    layer: int
    coefficient: Laurent
    triple: InflationTriple
    dropped: bool
    zero_in_layer: bool


def inflation_multiply(
    x: InflationTriple,
    y: InflationTriple,
    x_coeff: Laurent | None = None,
    y_coeff: Laurent | None = None,
) -> InflationProduct:
    """Multiply layer data.

    Same layer: the inflation formula, x.perm * phi(x.bottom, y.top) *
    y.perm, with the phi loop count contributing the scalar; a zero of
    phi means the product dropped to a deeper layer and is zero in the
    cell quotient.  Different layers: computed through diagrams, with
    the drop below the larger input layer flagged.
    """
    if x.n != y.n:
        raise RankMismatchError("triples have different rank")
    cx = x_coeff if x_coeff is not None else Laurent.one()
    cy = y_coeff if y_coeff is not None else Laurent.one()
    scale = cx * cy
    if x.layer == y.layer:
        form = phi(x.bottom, y.top)
        if not form.is_zero:
            perm = x.perm.compose(form.element).compose(y.perm)
            triple = InflationTriple(x.top, y.bottom, perm, x.layer)
            return InflationProduct(
                x.layer, scale * Laurent.delta(form.delta_power), triple,
                dropped=False, zero_in_layer=False,
            )
    d, loops = compose(psi_inverse(x), psi_inverse(y))
    triple = psi(d)
    dropped = triple.layer > max(x.layer, y.layer)
    return InflationProduct(
        triple.layer, scale * Laurent.delta(loops), triple,
        dropped=dropped, zero_in_layer=dropped,
    )


@dataclass(frozen=True)
class StratificationReport:
    """Outcome of the three layer-structure conditions."""

    n: int
    condition1: bool
    condition2: object  # bool, or "unavailable" when delta = 0
    condition3: bool
    layers: tuple

    def all_pass(self) -> bool:
        return self.condition1 and self.condition2 is True and self.condition3

    def to_json(self):
        return {
            "condition1": self.condition1,
            "condition2": self.condition2,
            "condition3": self.condition3,
            "layers": [
                {"a": a, "dangles": v, "group_order": h} for a, v, h in self.layers
            ],
        }


def check_stratification(n: int, spec: FieldSpec) -> StratificationReport:
    """Check the layer decomposition and the idempotent conditions.

    Condition 1: the layer dimensions |V|^2 |H_{n-a}| sum to the number
    of symmetric diagrams.  Condition 2: each nested-arc idempotent is
    the image of (nested dangle, nested dangle, identity) and squares to
    itself; unavailable when delta = 0.  Condition 3: absorption
    f_a f_b = f_max(a,b), checked generically (it is a Laurent
    identity, meaningful for every nonzero specialization).
    """
    if n < 1:
        raise IndexRangeError("rank must be at least 1")
    layers = []
    total = 0
    for a in range(n + 1):
        v = len(enumerate_dangles(n, a))
        m = n - a
        order = 2**m * factorial(m)
        layers.append((a, v, order))
        total += v * v * order
    condition1 = total == len(enumerate_symmetric_diagrams(n))

    if spec.delta_is_zero:
        condition2 = "unavailable"
    else:
        condition2 = True
        for k in range(n + 1):
            f_k = idempotent_f(k, n)
            diagram = nested_arc_diagram(k, n)
            t = psi(diagram)
            expected = InflationTriple(
                nested_dangle(n, k), nested_dangle(n, k),
                SignedPermutation.identity(n - k), k,
            )
            if t != expected or multiply(f_k, f_k) != f_k:
                condition2 = False

    condition3 = True
    for a in range(n + 1):
        for b in range(n + 1):
            prod = multiply(idempotent_f(a, n), idempotent_f(b, n))
            if prod != idempotent_f(max(a, b), n):
                condition3 = False
    return StratificationReport(n, condition1, condition2, condition3, tuple(layers))
