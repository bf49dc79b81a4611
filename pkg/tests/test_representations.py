import random
from fractions import Fraction
from math import factorial

import pytest

from typec_brauer import linalg
from typec_brauer.algebra import (
    evaluate_word,
    generator,
    involution,
    multiply,
    verify_relations,
)
from typec_brauer.diagrams import enumerate_symmetric_diagrams
from typec_brauer.errors import (
    CharacteristicTwoError,
    LabelMismatchError,
    ResourceLimitError,
)
from typec_brauer.hyperoctahedral import enumerate_group, group_compose
from typec_brauer.inflation import enumerate_dangles
from typec_brauer.representations import (
    Bipartition,
    CellModule,
    bipartitions_of,
    cell_module,
    cells_of,
    decomposition_matrix,
    gram_matrix,
    gram_report,
    group_decomposition,
    h_cell_dimension,
    h_cell_module,
    hyperoctahedral_generators,
    partitions_of,
    qh_verdict,
    specht_dimension,
    specht_module,
)
from typec_brauer.scalars import FieldSpec, GenericField, RationalField

QQ = RationalField(0)
GEN = FieldSpec.generic()


def test_specht_dimensions():
    for m in range(1, 6):
        assert specht_dimension((m,)) == 1
        assert sum(specht_dimension(p) ** 2 for p in partitions_of(m)) == factorial(m)
    assert specht_dimension((2, 1)) == 2


def test_specht_module_with_resource_bound():
    # polytabloids of (2,1): e_1 = {12|3} - {23|1}, e_2 = {13|2} - {23|1},
    # so the tabloid form gives norms 2 and overlap 1
    module = specht_module((2, 1))
    assert module.dim == 2
    assert module.gram == [[Fraction(2), Fraction(1)], [Fraction(1), Fraction(2)]]
    with pytest.raises(ResourceLimitError):
        specht_module((8, 8))


def test_wreath_dimensions():
    # dims 1,1,2,1,1 over the bipartitions of 2
    dims = sorted(h_cell_dimension(b) for b in bipartitions_of(2))
    assert dims == [1, 1, 1, 1, 2]
    for m in range(5):
        total = sum(h_cell_dimension(b) ** 2 for b in bipartitions_of(m))
        assert total == 2**m * factorial(m)


def test_h_cell_generator_relations():
    for m in (1, 2, 3):
        gens = hyperoctahedral_generators(m)
        for b in bipartitions_of(m):
            module = h_cell_module(b, GEN)
            assert module.dim == h_cell_dimension(b)
            ident = linalg.identity(module.dim, QQ)
            mats = [module.act_star(g) for g in gens]
            for mat in mats:
                assert linalg.mat_mul(mat, mat, QQ) == ident
            if m >= 2:
                tw = linalg.mat_mul(mats[0], mats[1], QQ)
                tw2 = linalg.mat_mul(tw, tw, QQ)
                assert linalg.mat_mul(tw2, tw2, QQ) == ident
            for i in range(1, len(mats) - 1):
                a, b_ = mats[i], mats[i + 1]
                aba = linalg.mat_mul(linalg.mat_mul(a, b_, QQ), a, QQ)
                bab = linalg.mat_mul(linalg.mat_mul(b_, a, QQ), b_, QQ)
                assert aba == bab


def test_h_cell_action_is_homomorphism():
    for m in (1, 2):
        elements = enumerate_group(m)
        for b in bipartitions_of(m):
            module = h_cell_module(b, GEN)
            for u in elements:
                for v in elements:
                    lhs = module.act_star(group_compose(u, v))
                    rhs = linalg.mat_mul(module.act_star(u), module.act_star(v), QQ)
                    assert lhs == rhs
    rng = random.Random(5)
    elements = enumerate_group(3)
    for b in bipartitions_of(3):
        module = h_cell_module(b, GEN)
        for _ in range(20):
            u, v = rng.choice(elements), rng.choice(elements)
            lhs = module.act_star(group_compose(u, v))
            rhs = linalg.mat_mul(module.act_star(u), module.act_star(v), QQ)
            assert lhs == rhs


def test_h_cell_form_invariance():
    for m in (1, 2):
        for b in bipartitions_of(m):
            module = h_cell_module(b, GEN)
            for w in enumerate_group(m):
                mat = module.act_star(w)
                mt = [[mat[j][i] for j in range(module.dim)] for i in range(module.dim)]
                assert linalg.mat_mul(mt, linalg.mat_mul(module.gram, mat, QQ), QQ) == module.gram


def test_characteristic_two_flagged():
    with pytest.raises(CharacteristicTwoError):
        h_cell_module(Bipartition((1,), ()), FieldSpec.prime(2, 1))
    with pytest.raises(CharacteristicTwoError):
        cell_module(Bipartition((1,), ()), 0, 1, FieldSpec.prime(2, 1))
    # m = 0 layers stay available
    h_cell_module(Bipartition((), ()), FieldSpec.prime(2, 1))


def test_cell_module_dimensions():
    assert cell_module(Bipartition((1,), ()), 0, 1, GEN).dim == 1
    assert cell_module(Bipartition((), ()), 1, 1, GEN).dim == 1
    for n in (1, 2, 3):
        total = 0
        for a in range(n + 1):
            v = len(enumerate_dangles(n, a))
            total += v * v * sum(h_cell_dimension(b) ** 2 for b in bipartitions_of(n - a))
        assert total == len(enumerate_symmetric_diagrams(n))


def test_cell_module_label_mismatch():
    with pytest.raises(LabelMismatchError):
        cell_module(Bipartition((2,), ()), 1, 2, GEN)


def test_cell_action_respects_held_relations():
    n = 2
    report = verify_relations(n)
    for a, b in cells_of(n):
        module = CellModule(b, a, n, GEN)
        for inst in report:
            if inst.holds:
                mat = module.action_laurent(inst.difference)
                assert all(x.is_zero() for row in mat for x in row)


def test_cell_action_is_algebra_map():
    field = GenericField()
    module = cell_module(Bipartition((1,), ()), 1, 2, GEN)
    words = ["e1", "r1", "e2 r1", "r2 e1 r2", "f1"]
    for wx in words:
        for wy in words:
            x, y = evaluate_word(wx, 2), evaluate_word(wy, 2)
            lhs = module.action_laurent(multiply(x, y))
            ax = [[field.from_laurent(t) for t in row] for row in module.action_laurent(x)]
            ay = [[field.from_laurent(t) for t in row] for row in module.action_laurent(y)]
            assert [[field.from_laurent(t) for t in row] for row in lhs] == linalg.mat_mul(ax, ay, field)


def test_gram_contravariance():
    # <g x, y> = <x, i(g) y> as matrices: act(g)^T G == G act(flip g)
    field = GenericField()
    n = 2
    for a, b in cells_of(n):
        module = CellModule(b, a, n, GEN)
        gram = [[field.from_laurent(x) for x in row] for row in module.gram_laurent()]
        gt = [[gram[j][i] for j in range(module.dim)] for i in range(module.dim)]
        assert gt == gram  # symmetry
        for kind in ("R", "E"):
            for i in range(1, n + 1):
                g = generator(kind, i, n)
                act = [[field.from_laurent(x) for x in row]
                       for row in module.action_laurent(g)]
                act_inv = [[field.from_laurent(x) for x in row]
                           for row in module.action_laurent(involution(g))]
                at = [[act[j][i2] for j in range(module.dim)] for i2 in range(module.dim)]
                assert linalg.mat_mul(at, gram, field) == linalg.mat_mul(gram, act_inv, field)


def test_generic_gram_nondegenerate():
    for n in (1, 2):
        for cell in gram_report(n, GEN)["cells"]:
            assert cell["gram_rank"] == cell["dim"]


def test_full_arc_gram_vanishes_at_delta_zero():
    for n in (1, 2, 3):
        module = cell_module(Bipartition((), ()), n, n, FieldSpec.rational(0))
        mat, rank = gram_matrix(module)
        assert rank == 0
        assert all(x == 0 for row in mat for x in row)


def test_gram_rank_invariant_under_reordering():
    module = cell_module(Bipartition((), ()), 2, 2, GEN)
    field = GenericField()
    mat, rank = gram_matrix(module)
    order = [2, 0, 1]
    shuffled = [[mat[i][j] for j in order] for i in order]
    assert linalg.rank(shuffled, field) == rank


def test_qh_verdict_table():
    assert qh_verdict(2, FieldSpec.rational(1)).quasi_hereditary
    assert qh_verdict(2, GEN).quasi_hereditary
    assert not qh_verdict(2, FieldSpec.rational(0)).quasi_hereditary
    assert not qh_verdict(2, FieldSpec.prime(2, 1)).quasi_hereditary
    assert qh_verdict(2, FieldSpec.prime(5, 1)).quasi_hereditary


def test_qh_divergence_documented():
    verdict = qh_verdict(1, FieldSpec.prime(2, 1))
    assert not verdict.quasi_hereditary and verdict.paper_criterion
    assert verdict.divergence
    assert any("disagree" in r for r in verdict.reasons)
    agree = qh_verdict(2, FieldSpec.prime(5, 1))
    assert not agree.divergence and agree.reasons == ()


def test_decomposition_semisimple_is_identity():
    report = decomposition_matrix(1, GEN)
    size = len(report.cells)
    assert list(report.simples) == list(range(size))
    assert all(
        report.matrix[i][j] == (1 if i == j else 0)
        for i in range(size)
        for j in range(size)
    )


def test_decomposition_n1_p3():
    report = decomposition_matrix(1, FieldSpec.prime(3, 1))
    assert all(
        report.matrix[i][j] == (1 if i == j else 0)
        for i in range(len(report.cells))
        for j in range(len(report.simples))
    )
    h1 = next(g for g in report.layer_groups if g.m == 1)
    assert [list(r) for r in h1.matrix] == [[1, 0], [0, 1]]


def test_decomposition_diagonal_blocks_match_layer_groups():
    for n in (1, 2):
        for p in (3, 5):
            report = decomposition_matrix(n, FieldSpec.prime(p, 1))
            groups = {g.m: g for g in report.layer_groups}
            col_of = {cell_idx: k for k, cell_idx in enumerate(report.simples)}
            for i, (a_i, b_i, _, _) in enumerate(report.cells):
                for j, (a_j, b_j, _, _) in enumerate(report.cells):
                    if a_i != a_j or j not in col_of:
                        continue
                    group = groups[n - a_i]
                    gi = group.labels.index(b_i)
                    gj = group.labels.index(b_j)
                    assert report.matrix[i][col_of[j]] == group.matrix[gi][gj]


def test_decomposition_cross_layer_entries_at_delta_one():
    # ground truth: at delta = 1 the full-arc cell of rank 2 has radical
    # of dimension 2 whose factors are the trivial and the sign-flip
    # one-dimensional simples of layer 0.
    report = decomposition_matrix(2, FieldSpec.prime(3, 1))
    cells = [(a, b.to_json()) for a, b, _, _ in report.cells]
    row0 = list(report.matrix[0])
    assert cells[0] == (2, [[], []])
    idx_trivial = cells.index((0, [[2], []]))
    idx_sign = cells.index((0, [[], [2]]))
    expected = [0] * len(report.simples)
    expected[list(report.simples).index(0)] = 1
    expected[list(report.simples).index(idx_trivial)] = 1
    expected[list(report.simples).index(idx_sign)] = 1
    assert row0 == expected


def test_decomposition_rejects_bad_inputs():
    with pytest.raises(ResourceLimitError):
        decomposition_matrix(3, FieldSpec.prime(3, 1))
    with pytest.raises(LabelMismatchError):
        decomposition_matrix(1, FieldSpec.rational(0))


def test_group_decomposition_semisimple():
    for m in (0, 1, 2):
        out = group_decomposition(m, FieldSpec.prime(5, 1))
        size = len(out.labels)
        assert all(
            out.matrix[i][j] == (1 if i == j else 0)
            for i in range(size)
            for j in range(size)
        )
