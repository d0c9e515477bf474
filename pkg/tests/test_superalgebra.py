from fractions import Fraction

import pytest

from superverma.rootdata import CaseId, build_algebra_data, wsum
from superverma.superalgebra import (
    BracketTable,
    ClosureFailure,
    build_structure_constants,
    check_jacobi,
    check_reference_scaling,
    dump_table,
)

SMALLEST = ["B-I:m=1,n=1", "B-II:m=1,n=1", "D-I:m=1,n=2", "D-II:m=1,n=2", "F31", "G3"]


def make(text: str) -> BracketTable:
    return build_structure_constants(build_algebra_data(CaseId.parse(text)))


def test_defining_relations_on_simples():
    for text in SMALLEST:
        table = make(text)
        alg = table.alg
        for a, pa in enumerate(alg.simple_pos_index):
            for b, pb in enumerate(alg.simple_pos_index):
                val = table.bracket(table.e_id(pa), table.f_id(pb))
                if a == b:
                    assert val == {table.h_id(a): Fraction(1)}
                else:
                    assert val == {}


def test_cartan_action_example():
    table = make("B-II:m=1,n=1")
    two_d1 = table.alg.root_index(table.alg.root_named("2d1").weight)
    d1_simple = next(
        j for j, s in enumerate(table.alg.simple_system) if s.name == "d1"
    )
    val = table.bracket(table.h_id(d1_simple), table.e_id(two_d1))
    assert val == {table.e_id(two_d1): Fraction(4)}


def test_jacobi_exhaustive_smallest():
    for text in SMALLEST:
        report = check_jacobi(make(text))
        assert report.ok, (text, report.first_violation)
        assert report.first_violation is None
        assert report.triples_checked > 0


def test_jacobi_fault_injection():
    table = make("B-I:m=1,n=1")
    alg = table.alg
    x = table.e_gen("d1-e1")
    y = table.e_gen("e1")
    # flip the pair and its transpose consistently so antisymmetry still
    # holds and the sweep must catch it at a triple
    flipped = dict(table.entries)
    flipped[(x, y)] = {k: -v for k, v in table.entries[(x, y)].items()}
    flipped[(y, x)] = {k: -v for k, v in table.entries[(y, x)].items()}
    broken = BracketTable(alg, table.basis, flipped, table.cartan_duals)
    report = check_jacobi(broken)
    assert not report.ok
    assert "Jacobi fails" in report.first_violation
    assert "," in report.first_violation


def test_antisymmetry_fault_detected():
    table = make("B-I:m=1,n=1")
    x = table.f_gen("d1")
    y = table.e_gen("d1")
    flipped = dict(table.entries)
    flipped[(x, y)] = {k: 7 * v for k, v in table.entries[(x, y)].items()}
    broken = BracketTable(table.alg, table.basis, flipped, table.cartan_duals)
    report = check_jacobi(broken)
    assert not report.ok
    assert "antisymmetry" in report.first_violation


def test_weight_grading():
    for text in ("B-II:m=2,n=1", "G3"):
        table = make(text)
        alg = table.alg
        for (x, y), val in table.entries.items():
            total = wsum(table.basis[x].weight, table.basis[y].weight)
            for bid in val:
                assert table.basis[bid].weight == total


def test_ef_pairs_are_cartan_with_proportional_dual():
    for text in SMALLEST:
        table = make(text)
        alg = table.alg
        for i, r in enumerate(alg.pos_roots):
            val = table.bracket(table.e_id(i), table.f_id(i))
            assert val, r.name
            dual = table.h_value_dual(val)
            ratios = set()
            for x, y in zip(dual, r.weight):
                if y:
                    ratios.add(x / y)
                else:
                    assert x == 0
            assert len(ratios) == 1 and 0 not in ratios, (text, r.name, dual)


def test_odd_squares():
    table = make("B-I:m=1,n=1")
    fd = table.f_gen("d1")
    val = table.bracket(fd, fd)
    assert set(val) == {table.f_gen("2d1")}
    assert val[table.f_gen("2d1")] != 0
    iso = table.f_gen("d1-e1")
    assert table.bracket(iso, iso) == {}
    table = make("G3")
    fd = table.f_gen("D")
    val = table.bracket(fd, fd)
    assert set(val) == {table.f_gen("2D")}


def test_table_is_complete():
    table = make("D-II:m=1,n=2")
    dim = table.dim
    assert len(table.entries) == dim * dim
    report = check_jacobi(table)
    assert report.pairs_checked == dim * dim


def test_reference_scaling():
    for text in ("B-II:m=1,n=1", "B-II:m=2,n=2", "B-II:m=1,n=3"):
        report = check_reference_scaling(make(text))
        assert report.ok, (text, report.detail)
        assert len(report.scales) == 8
        assert all(c != 0 for c in report.scales.values())


def test_reference_scaling_rejects_other_families():
    with pytest.raises(ValueError):
        check_reference_scaling(make("B-I:m=1,n=1"))


def test_reference_scaling_detects_damage():
    table = make("B-II:m=1,n=1")
    x = table.f_gen("e1-d1")
    y = table.f_gen("d1")
    entries = dict(table.entries)
    entries[(x, y)] = {k: 3 * v for k, v in entries[(x, y)].items()}
    entries[(y, x)] = {k: 3 * v for k, v in entries[(y, x)].items()}
    broken = BracketTable(table.alg, table.basis, entries, table.cartan_duals)
    report = check_reference_scaling(broken)
    assert not report.ok
    assert report.detail


def test_dump_table_deterministic():
    a = dump_table(make("B-I:m=1,n=1"))
    b = dump_table(make("B-I:m=1,n=1"))
    assert a == b
    assert a.count("\n") > 20
    assert "[f_{d1}, e_{d1}] = " in a
