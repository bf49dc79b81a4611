"""The algebra spanned by mirror-symmetric diagrams.

Elements are finite formal sums of symmetric diagrams with Laurent
coefficients; the product is diagram stacking with one loop-parameter
factor per closed loop.  Also here: the defining generators, the layer
idempotents built from nested arcs, the arc-count filtration, and the
relation verification suite.

The relation list is treated as a set of recorded observations, not as
axioms: every family is evaluated against the diagram product and the
outcome reported, because the printed list is not internally consistent
for adjacent indices.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagrams import (
    BrauerDiagram,
    arc_count,
    compose,
    flip,
    is_symmetric,
    require_symmetric,
)
from .errors import IndexRangeError, RankMismatchError
from .scalars import Laurent


class AlgebraElement:
    """Formal sum of symmetric diagrams over the Laurent ring.

    No zero coefficients are stored; all diagrams share one rank and
    must be mirror-symmetric.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=()):
        items = terms.items() if isinstance(terms, dict) else terms
        acc: dict[BrauerDiagram, Laurent] = {}
        for diagram, coeff in items:
            if diagram.n != n:
                raise RankMismatchError("term rank differs from element rank")
            require_symmetric(diagram)
            if diagram in acc:
                acc[diagram] = acc[diagram] + coeff
            else:
                acc[diagram] = coeff
        clean = {d: c for d, c in acc.items() if not c.is_zero()}
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("AlgebraElement values are immutable")

    @classmethod
    def zero(cls, n: int) -> "AlgebraElement":
        return cls(n)

    @classmethod
    def one(cls, n: int) -> "AlgebraElement":
        return cls(n, [(BrauerDiagram.identity(n), Laurent.one())])

    @classmethod
    def from_diagram(cls, d: BrauerDiagram, coeff: Laurent | None = None):
        return cls(d.n, [(d, coeff if coeff is not None else Laurent.one())])

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda item: item[0].pairs)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return (
            isinstance(other, AlgebraElement)
            and self.n == other.n
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.n, tuple(self.sorted_terms())))

    def __add__(self, other):
        if self.n != other.n:
            raise RankMismatchError("cannot add elements of different rank")
        acc = dict(self.terms)
        for d, c in other.terms.items():
            acc[d] = acc[d] + c if d in acc else c
        return AlgebraElement(self.n, acc)

    def __neg__(self):
        return AlgebraElement(self.n, [(d, -c) for d, c in self.terms.items()])

    def __sub__(self, other):
        return self + (-other)

    def scale(self, coeff: Laurent) -> "AlgebraElement":
        return AlgebraElement(self.n, [(d, c * coeff) for d, c in self.terms.items()])

    def __mul__(self, other):
        return multiply(self, other)

    def __repr__(self):
        if not self.terms:
            return f"AlgebraElement(n={self.n}, 0)"
        bits = [f"({c})*{list(d.pairs)}" for d, c in self.sorted_terms()]
        return f"AlgebraElement(n={self.n}, " + " + ".join(bits) + ")"

    def to_json(self):
        return {
            "n": self.n,
            "terms": [
                {"coeff": c.to_json(), "diagram": d.to_json()}
                for d, c in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json(cls, data) -> "AlgebraElement":
        return cls(
            data["n"],
            [
                (BrauerDiagram.from_json(t["diagram"]), Laurent.from_json(t["coeff"]))
                for t in data["terms"]
            ],
        )


def multiply(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    """Bilinear extension of stacking with one delta factor per loop."""
    if x.n != y.n:
        raise RankMismatchError("cannot multiply elements of different rank")
    acc: dict[BrauerDiagram, Laurent] = {}
    for d1, c1 in x.terms.items():
        for d2, c2 in y.terms.items():
            d, loops = compose(d1, d2)
            coeff = c1 * c2 * Laurent.delta(loops)
            acc[d] = acc[d] + coeff if d in acc else coeff
    return AlgebraElement(x.n, acc)


def involution(x: AlgebraElement) -> AlgebraElement:
    """Reflect every diagram in the horizontal axis; coefficients unchanged."""
    return AlgebraElement(x.n, [(flip(d), c) for d, c in x.terms.items()])


def _identity_match(n: int):
    # top position -> bottom position
    return {i: i for i in range(1, 2 * n + 1)}


def _diagram_from_top_map(n: int, top_to_bottom: dict, arcs_top=(), arcs_bottom=()):
    w = 2 * n
    pairs = [(a, w + b) for a, b in top_to_bottom.items()]
    pairs += [(a, b) for a, b in arcs_top]
    pairs += [(w + a, w + b) for a, b in arcs_bottom]
    return BrauerDiagram(n, pairs)


def generator_diagram(kind: str, index: int, n: int) -> BrauerDiagram:
    """Diagram of a defining generator.

    R1 is the single central crossing; E1 the single central arc; for
    j >= 2 the R and E generators carry a crossing or arc at positions
    (n+1-j, n+2-j) together with its mirror image at (n+j-1, n+j).
    """
    if not 1 <= index <= n:
        raise IndexRangeError(f"index {index} out of range 1..{n}")
    verticals = _identity_match(n)
    if kind == "R":
        if index == 1:
            blocks = [n]
        else:
            blocks = [n + 1 - index, n + index - 1]
        for p in blocks:
            verticals[p] = p + 1
            verticals[p + 1] = p
        return _diagram_from_top_map(n, verticals)
    if kind == "E":
        if index == 1:
            blocks = [n]
        else:
            blocks = [n + 1 - index, n + index - 1]
        arcs = []
        for p in blocks:
            del verticals[p]
            del verticals[p + 1]
            arcs.append((p, p + 1))
        return _diagram_from_top_map(n, verticals, arcs, arcs)
    raise IndexRangeError(f"unknown generator kind {kind!r}")


def generator(kind: str, index: int, n: int) -> AlgebraElement:
    return AlgebraElement.from_diagram(generator_diagram(kind, index, n))


def nested_arc_diagram(k: int, n: int) -> BrauerDiagram:
    """Diagram with the k nested central arcs {n+1-i, n+i} on both rows."""
    if not 0 <= k <= n:
        raise IndexRangeError(f"arc count {k} out of range 0..{n}")
    verticals = _identity_match(n)
    arcs = []
    for i in range(1, k + 1):
        a, b = n + 1 - i, n + i
        del verticals[a]
        del verticals[b]
        arcs.append((a, b))
    return _diagram_from_top_map(n, verticals, arcs, arcs)


def idempotent_f(k: int, n: int) -> AlgebraElement:
    """The layer idempotent: delta^(-k) times the k-nested-arc diagram."""
    return AlgebraElement.from_diagram(nested_arc_diagram(k, n), Laurent.delta(-k))


def layer_of(d: BrauerDiagram) -> int:
    """Arc count of a symmetric diagram; d lies in the ideal of layer <= this."""
    require_symmetric(d)
    return arc_count(d)


def evaluate_word(word: str, n: int) -> AlgebraElement:
    """Evaluate whitespace-separated tokens r<i>, e<i>, f<k>, 1 left to right."""
    out = AlgebraElement.one(n)
    for token in word.split():
        if token == "1":
            factor = AlgebraElement.one(n)
        elif token[0] in "re" and token[1:].isdigit():
            factor = generator(token[0].upper(), int(token[1:]), n)
        elif token[0] == "f" and token[1:].isdigit():
            factor = idempotent_f(int(token[1:]), n)
        else:
            raise ValueError(f"unknown word token {token!r}")
        out = multiply(out, factor)
    return out


# -- relation verification ----------------------------------------------------


@dataclass(frozen=True)
class RelationInstance:
    """Outcome of one relation at one index instantiation."""

    relation: str
    indices: tuple
    holds: bool
    difference: AlgebraElement


def _word(n, *tokens):
    out = AlgebraElement.one(n)
    for kind, idx in tokens:
        out = multiply(out, generator(kind, idx, n))
    return out


def _relation_families(n: int):
    """(identifier, instantiations, lhs tokens, rhs tokens, rhs scalar)."""
    R, E = "R", "E"
    d = Laurent.delta
    one = Laurent.one()
    fams = []
    if n >= 2:
        fams.append(("r2 r1 r2 r1 = r1 r2 r1 r2", [()],
                     lambda: ([(R, 2), (R, 1), (R, 2), (R, 1)],
                              [(R, 1), (R, 2), (R, 1), (R, 2)], one)))
    fams.append(("ri^2 = 1", [(i,) for i in range(1, n + 1)],
                 lambda i: ([(R, i), (R, i)], [], one)))
    fams.append(("ri r(i+1) ri = r(i+1) ri r(i+1), i != 1",
                 [(i,) for i in range(2, n)],
                 lambda i: ([(R, i), (R, i + 1), (R, i)],
                            [(R, i + 1), (R, i), (R, i + 1)], one)))
    fams.append(("ri r(i+1) = r(i+1) ri", [(i,) for i in range(1, n)],
                 lambda i: ([(R, i), (R, i + 1)], [(R, i + 1), (R, i)], one)))
    fams.append(("ei^2 = delta^2 ei, i != 1", [(i,) for i in range(2, n + 1)],
                 lambda i: ([(E, i), (E, i)], [(E, i)], d(2))))
    fams.append(("e1^2 = delta e1", [()],
                 lambda: ([(E, 1), (E, 1)], [(E, 1)], d(1))))
    fams.append(("ei e(i+1) = e(i+1) ei", [(i,) for i in range(1, n)],
                 lambda i: ([(E, i), (E, i + 1)], [(E, i + 1), (E, i)], one)))
    fams.append(("ri ei = ei", [(i,) for i in range(1, n + 1)],
                 lambda i: ([(R, i), (E, i)], [(E, i)], one)))
    fams.append(("ei ri = ei", [(i,) for i in range(1, n + 1)],
                 lambda i: ([(E, i), (R, i)], [(E, i)], one)))
    nearby = [(i, j) for i in range(3, n + 1)
              for j in (i - 1, i + 1) if 1 <= j <= n]
    fams.append(("ei rj = rj ei, j = i+-1, i > 2", nearby,
                 lambda i, j: ([(E, i), (R, j)], [(R, j), (E, i)], one)))
    fams.append(("rj ri ej = ei ej, j = i+-1, i > 2", nearby,
                 lambda i, j: ([(R, j), (R, i), (E, j)], [(E, i), (E, j)], one)))
    fams.append(("ri ej ri = rj ei rj, i,j > 1",
                 [(i, j) for i in range(2, n + 1) for j in range(2, n + 1) if i != j],
                 lambda i, j: ([(R, i), (E, j), (R, i)], [(R, j), (E, i), (R, j)], one)))
    if n >= 2:
        fams.append(("r2 r1 e2 = r1 e2", [()],
                     lambda: ([(R, 2), (R, 1), (E, 2)], [(R, 1), (E, 2)], one)))
        fams.append(("r2 e1 r2 e1 = e1 e2 e1", [()],
                     lambda: ([(R, 2), (E, 1), (R, 2), (E, 1)],
                              [(E, 1), (E, 2), (E, 1)], one)))
        fams.append(("r2 r1 r2 e1 = e1 r2 r1 r2", [()],
                     lambda: ([(R, 2), (R, 1), (R, 2), (E, 1)],
                              [(E, 1), (R, 2), (R, 1), (R, 2)], one)))
        fams.append(("e2 r1 e2 = delta e2", [()],
                     lambda: ([(E, 2), (R, 1), (E, 2)], [(E, 2)], d(1))))
        fams.append(("e2 e1 e2 = delta e2", [()],
                     lambda: ([(E, 2), (E, 1), (E, 2)], [(E, 2)], d(1))))
        fams.append(("e2 r1 r2 = e2 r1", [()],
                     lambda: ([(E, 2), (R, 1), (R, 2)], [(E, 2), (R, 1)], one)))
        fams.append(("e2 e1 r2 = e2 e1", [()],
                     lambda: ([(E, 2), (E, 1), (R, 2)], [(E, 2), (E, 1)], one)))
    return fams


def verify_relations(n: int) -> list[RelationInstance]:
    """Evaluate every relation family at every valid index instantiation.

    Both sides are computed by the diagram product and the difference
    recorded; nothing is assumed.  The report order is fixed: families
    in listing order, instantiations in ascending index order.
    """
    if n < 2:
        raise IndexRangeError("relation suite needs n >= 2")
    report = []
    for name, instances, build in _relation_families(n):
        for idx in sorted(instances):
            lhs_tokens, rhs_tokens, rhs_scalar = build(*idx)
            lhs = _word(n, *lhs_tokens)
            rhs = _word(n, *rhs_tokens).scale(rhs_scalar)
            diff = lhs - rhs
            report.append(RelationInstance(name, tuple(idx), diff.is_zero(), diff))
    return report


def relation_report_json(report) -> list:
    return [
        {"relation": r.relation, "indices": list(r.indices), "holds": r.holds}
        for r in report
    ]
