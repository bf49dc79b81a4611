import random
from math import factorial

import pytest

from typec_brauer.algebra import generator_diagram, layer_of
from typec_brauer.diagrams import (
    BrauerDiagram,
    compose,
    enumerate_symmetric_diagrams,
    flip,
)
from typec_brauer.errors import (
    IndexRangeError,
    MalformedTripleError,
    ShapeMismatchError,
)
from typec_brauer.hyperoctahedral import SignedPermutation
from typec_brauer.inflation import (
    InflationTriple,
    SymmetricDangle,
    check_stratification,
    enumerate_dangles,
    inflation_multiply,
    nested_dangle,
    phi,
    psi,
    psi_inverse,
)
from typec_brauer.scalars import FieldSpec, Laurent

from oracles import brute_dangles


def test_dangle_validation():
    with pytest.raises(ValueError):
        SymmetricDangle(2, [(1, 2)])  # mirror image (3,4) missing
    with pytest.raises(ValueError):
        SymmetricDangle(2, [(1, 4), (1, 2)])  # not disjoint
    d = SymmetricDangle(2, [(2, 3)])
    assert d.singletons() == (1, 4)


def test_enumerate_dangles_counts():
    assert [d.arcs for d in enumerate_dangles(1, 1)] == [((1, 2),)]
    assert len(enumerate_dangles(2, 1)) == 2
    assert len(enumerate_dangles(2, 2)) == 3
    with pytest.raises(IndexRangeError):
        enumerate_dangles(2, 3)


def test_enumerate_dangles_against_brute_force():
    for n in (1, 2, 3):
        for a in range(n + 1):
            found = enumerate_dangles(n, a)
            assert found == sorted(found)
            assert {d.arcs for d in found} == brute_dangles(n, a)


def test_psi_examples():
    t = psi(generator_diagram("E", 1, 1))
    assert t.top.arcs == ((1, 2),) and t.bottom.arcs == ((1, 2),)
    assert t.perm.m == 0 and t.layer == 1

    t = psi(BrauerDiagram.identity(2))
    assert t.top.arcs == () and t.bottom.arcs == ()
    assert t.perm == SignedPermutation.identity(2) and t.layer == 0

    t = psi(generator_diagram("R", 1, 1))
    assert t.top.arcs == () and t.perm == SignedPermutation([-1]) and t.layer == 0


def test_psi_roundtrip_exhaustive():
    for n in (1, 2, 3):
        for d in enumerate_symmetric_diagrams(n):
            assert psi_inverse(psi(d)) == d


def test_psi_inverse_examples():
    arc = SymmetricDangle(1, [(1, 2)])
    triple = InflationTriple(arc, arc, SignedPermutation.identity(0), 1)
    assert psi_inverse(triple) == generator_diagram("E", 1, 1)
    empty = SymmetricDangle(2, [])
    triple = InflationTriple(empty, empty, SignedPermutation.identity(2), 0)
    assert psi_inverse(triple) == BrauerDiagram.identity(2)


def test_malformed_triples():
    arc = SymmetricDangle(2, [(1, 4)])
    empty = SymmetricDangle(2, [])
    with pytest.raises(MalformedTripleError):
        InflationTriple(arc, empty, SignedPermutation.identity(1), 1)
    with pytest.raises(MalformedTripleError):
        InflationTriple(arc, arc, SignedPermutation.identity(2), 1)


def test_psi_is_layer_bijection():
    for n in (1, 2, 3):
        by_layer = {}
        for d in enumerate_symmetric_diagrams(n):
            by_layer.setdefault(layer_of(d), set()).add(psi(d))
        for a, triples in by_layer.items():
            m = n - a
            v = len(enumerate_dangles(n, a))
            assert len(triples) == v * v * 2**m * factorial(m)


def test_phi_examples():
    arc1 = SymmetricDangle(1, [(1, 2)])
    out = phi(arc1, arc1)
    assert not out.is_zero and out.delta_power == 1 and out.element.m == 0

    inner = SymmetricDangle(2, [(2, 3)])
    outer = SymmetricDangle(2, [(1, 4)])
    assert phi(inner, outer).is_zero

    out = phi(outer, outer)
    assert not out.is_zero and out.delta_power == 1
    assert out.element == SignedPermutation.identity(1)

    with pytest.raises(ShapeMismatchError):
        phi(arc1, outer)


def test_phi_matches_representative_products():
    # phi computed by overlay must agree with the product of the
    # representative diagrams psi_inverse(f,f,id) psi_inverse(g,g,id).
    for n in (1, 2, 3):
        for a in range(n + 1):
            ident = SignedPermutation.identity(n - a)
            dangles = enumerate_dangles(n, a)
            for f in dangles:
                for g in dangles:
                    df = psi_inverse(InflationTriple(f, f, ident, a))
                    dg = psi_inverse(InflationTriple(g, g, ident, a))
                    prod, loops = compose(df, dg)
                    form = phi(f, g)
                    if layer_of(prod) > a:
                        assert form.is_zero
                    else:
                        assert not form.is_zero
                        assert form.delta_power == loops
                        assert form.element == psi(prod).perm


def test_phi_respects_involution():
    for n in (1, 2, 3):
        for a in range(n + 1):
            dangles = enumerate_dangles(n, a)
            for f in dangles:
                for g in dangles:
                    fg, gf = phi(f, g), phi(g, f)
                    assert fg.is_zero == gf.is_zero
                    if not fg.is_zero:
                        assert fg.delta_power == gf.delta_power
                        assert fg.element.inverse() == gf.element


def test_involution_correspondence():
    for n in (1, 2, 3):
        for d in enumerate_symmetric_diagrams(n):
            t, tf = psi(d), psi(flip(d))
            assert tf.top == t.bottom
            assert tf.bottom == t.top
            assert tf.perm == t.perm.inverse()


def test_inflation_multiply_within_layer():
    e1 = psi(generator_diagram("E", 1, 1))
    out = inflation_multiply(e1, e1)
    assert not out.zero_in_layer
    assert out.coefficient == Laurent.delta(1)
    assert out.triple == e1

    for n in (1, 2):
        for d1 in enumerate_symmetric_diagrams(n):
            for d2 in enumerate_symmetric_diagrams(n):
                t1, t2 = psi(d1), psi(d2)
                if t1.layer != t2.layer:
                    continue
                prod, loops = compose(d1, d2)
                out = inflation_multiply(t1, t2)
                if layer_of(prod) > t1.layer:
                    assert out.zero_in_layer and out.dropped
                else:
                    assert not out.zero_in_layer
                    assert out.triple == psi(prod)
                    assert out.coefficient == Laurent.delta(loops)


def test_inflation_multiply_layer_drop_found_by_scan():
    # Arc-free diagrams form a group, so layer-0 products can never gain
    # arcs; the earliest drops live in layer 1 and the exhaustive scan
    # must find them there.
    n = 2
    by_layer = {}
    for d in enumerate_symmetric_diagrams(n):
        by_layer.setdefault(layer_of(d), []).append(d)
    assert all(
        layer_of(compose(d1, d2)[0]) == 0
        for d1 in by_layer[0]
        for d2 in by_layer[0]
    )
    dropped = [
        inflation_multiply(psi(d1), psi(d2))
        for d1 in by_layer[1]
        for d2 in by_layer[1]
        if layer_of(compose(d1, d2)[0]) > 1
    ]
    assert dropped
    assert all(out.dropped and out.zero_in_layer for out in dropped)


def test_inflation_multiply_across_layers():
    n = 2
    diagrams = enumerate_symmetric_diagrams(n)
    rng = random.Random(13)
    for _ in range(100):
        d1, d2 = rng.choice(diagrams), rng.choice(diagrams)
        t1, t2 = psi(d1), psi(d2)
        if t1.layer == t2.layer:
            continue
        prod, loops = compose(d1, d2)
        out = inflation_multiply(t1, t2)
        assert out.triple == psi(prod)
        assert out.layer == layer_of(prod)
        assert out.coefficient == Laurent.delta(loops)
        assert out.dropped == (out.layer > max(t1.layer, t2.layer))


def test_stratification_generic():
    for n in (1, 2):
        report = check_stratification(n, FieldSpec.generic())
        assert report.condition1 and report.condition2 is True and report.condition3
    report = check_stratification(1, FieldSpec.generic())
    dims = [v * v * h for _, v, h in report.layers]
    assert dims == [2, 1]


def test_stratification_delta_zero():
    report = check_stratification(2, FieldSpec.rational(0))
    assert report.condition2 == "unavailable"
    assert report.condition1 and report.condition3


def test_nested_dangle():
    assert nested_dangle(3, 2).arcs == ((2, 5), (3, 4))
