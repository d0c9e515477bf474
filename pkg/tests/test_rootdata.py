import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from superverma.rootdata import (
    EVEN,
    ODD_ISO,
    ODD_NONISO,
    AlgebraData,
    CaseId,
    InvalidParams,
    IsotropicCoroot,
    bilinear_form,
    build_algebra_data,
    coroot_pairing,
    f31_sign_weight,
    f31_signs_of,
    format_weight,
    parse_weight,
    reflect,
    wdiff,
    wneg,
    wprime_orbit,
    wsum,
    wzero,
)

SMALLEST = ["B-I:m=1,n=1", "B-II:m=1,n=1", "D-I:m=1,n=2", "D-II:m=1,n=2", "F31", "G3"]


def build(text: str) -> AlgebraData:
    return build_algebra_data(CaseId.parse(text))


def frac_weight(*xs) -> tuple:
    return tuple(Fraction(x) for x in xs)


def test_b1_small_counts_and_rho():
    alg = build("B-I:m=2,n=1")
    assert len(alg.pos_even) == 5
    assert len(alg.pos_odd) == 6
    assert alg.rho == frac_weight("1/2", "-1/2", "1/2")


def test_root_counts_formulas():
    for m in (1, 2, 3):
        for n in (1, 2, 3):
            for family in ("B-I", "B-II"):
                alg = build(f"{family}:m={m},n={n}")
                assert len(alg.pos_even) == m * m + n * n
                assert len(alg.pos_odd) == m * (2 * n + 1)
            if n >= 2:
                for family in ("D-I", "D-II"):
                    alg = build(f"{family}:m={m},n={n}")
                    assert len(alg.pos_even) == m * m + n * n - n
                    assert len(alg.pos_odd) == 2 * m * n
    assert (len(build("F31").pos_even), len(build("F31").pos_odd)) == (10, 8)
    assert (len(build("G3").pos_even), len(build("G3").pos_odd)) == (7, 7)


def test_exceptional_rho_frozen():
    assert build("F31").rho == frac_weight("-3/2", "5/2", "3/2", "1/2")
    assert build("G3").rho == frac_weight("-5/2", 2, 3)


def test_gamma_per_family():
    expected = {
        "B-I:m=2,n=2": ("d2", ODD_NONISO),
        "B-II:m=2,n=2": ("e2", EVEN),
        "D-I:m=2,n=2": ("2d2", EVEN),
        "D-II:m=2,n=2": ("e1+e2", EVEN),
        "F31": ("D", EVEN),
        "G3": ("D", ODD_NONISO),
    }
    for text, (name, parity) in expected.items():
        alg = build(text)
        assert alg.gamma.name == name
        assert alg.gamma.parity == parity
        assert alg.coroot_pairing(alg.gamma.weight, alg.gamma) == 2


def test_rho_coroot_pairings():
    alg = build("B-I:m=2,n=1")
    assert alg.coroot_pairing(alg.rho, "d1-d2") == 1
    # gamma = d2 here and <rho, h_gamma> = 1 - 2n
    assert alg.coroot_pairing(alg.rho, alg.gamma) == -1
    for m, n in ((1, 2), (2, 3)):
        alg = build(f"D-I:m={m},n={n}")
        assert alg.coroot_pairing(alg.rho, alg.gamma) == 1 - n
    for text in SMALLEST:
        alg = build(text)
        for s in alg.simple_system:
            if s.parity == ODD_ISO:
                assert alg.form(alg.rho, s.weight) == 0
            else:
                assert alg.coroot_pairing(alg.rho, s.weight) == 1


def test_parity_classification():
    alg = build("B-I:m=2,n=2")
    assert alg.root_named("d1").parity == ODD_NONISO
    assert alg.root_named("d1-e2").parity == ODD_ISO
    assert alg.root_named("d1+e1").parity == ODD_ISO
    assert alg.root_named("2d1").parity == EVEN
    alg = build("D-I:m=2,n=2")
    assert all(r.parity == ODD_ISO for r in alg.pos_odd)
    alg = build("F31")
    assert all(r.parity == ODD_ISO for r in alg.pos_odd)
    alg = build("G3")
    assert alg.root_named("D").parity == ODD_NONISO
    assert alg.root_named("D+e1").parity == ODD_ISO
    assert alg.root_named("D+e3").parity == ODD_ISO


def test_g3_names_frozen():
    alg = build("G3")
    assert [r.name for r in alg.pos_roots] == [
        "e2-e1", "e2", "e1", "e1+e2", "e1+2e2", "2e1+e2", "2D",
        "D+e3", "D-e1", "D-e2", "D", "D+e2", "D+e1", "D-e3",
    ]


def test_f31_odd_names_are_sign_tuples():
    alg = build("F31")
    names = {r.name for r in alg.pos_odd}
    assert names == {"+---", "+--+", "+-+-", "+-++", "++--", "++-+", "+++-", "++++"}
    for r in alg.pos_odd:
        assert f31_sign_weight(r.name) == r.weight
        assert f31_signs_of(r.weight) == r.name
    assert f31_sign_weight("+−−+") == f31_sign_weight("+--+")
    assert f31_signs_of(alg.root_named("e1").weight) is None


def test_orbit_examples():
    alg = build("D-I:m=3,n=2")
    assert [r.name for r in wprime_orbit("2d3", alg)] == ["2d3", "2d2", "2d1"]
    assert [r.name for r in wprime_orbit("d1+d2", alg)] == ["d2+d3", "d1+d3", "d1+d2"]
    alg = build("B-I:m=3,n=1")
    assert [r.name for r in wprime_orbit("d3", alg)] == ["d3", "d2", "d1"]
    alg = build("B-II:m=1,n=3")
    assert [r.name for r in wprime_orbit("e3", alg)] == ["e3", "e2", "e1"]
    alg = build("D-II:m=1,n=3")
    assert [r.name for r in wprime_orbit("e2+e3", alg)] == ["e2+e3", "e1+e3", "e1+e2"]
    assert [r.name for r in wprime_orbit("D", build("F31"))] == ["D"]
    assert [r.name for r in wprime_orbit("D", build("G3"))] == ["D"]


def test_orbit_of_isotropic_root():
    alg = build("B-I:m=2,n=1")
    names = {r.name for r in wprime_orbit("d2-e1", alg)}
    assert names == {"d1-e1", "d1+e1", "d2-e1", "d2+e1"}


def test_reflection_examples():
    alg = build("D-II:m=1,n=2")
    eps1 = alg.root_named("e1").weight if "e1" in [r.name for r in alg.pos_roots] else None
    lam = parse_weight("0,1,0", 3)
    assert alg.reflect(lam, "e1+e2") == parse_weight("0,0,-1", 3)
    alg = build("B-I:m=1,n=1")
    assert alg.reflect(alg.root_named("d1").weight, "d1") == wneg(alg.root_named("d1").weight)


def test_reflection_involution_sampled():
    rng = random.Random(7)
    for text in SMALLEST:
        alg = build(text)
        mirrors = [r for r in alg.pos_roots if alg.norm(r.weight) != 0]
        for _ in range(150):
            lam = tuple(Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(alg.rank))
            beta = rng.choice(mirrors)
            image = alg.reflect(lam, beta)
            assert alg.reflect(image, beta) == lam
            assert alg.form(image, image) == alg.form(lam, lam)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.fractions(min_value=-20, max_value=20, max_denominator=6), min_size=4, max_size=4))
def test_reflection_involution_f31(coords):
    alg = build("F31")
    lam = tuple(coords)
    for beta in alg.pos_roots:
        if alg.norm(beta.weight) == 0:
            continue
        assert alg.reflect(alg.reflect(lam, beta), beta) == lam


def test_form_symmetry_sampled():
    rng = random.Random(11)
    for text in SMALLEST:
        alg = build(text)
        for _ in range(50):
            a = tuple(Fraction(rng.randint(-5, 5)) for _ in range(alg.rank))
            b = tuple(Fraction(rng.randint(-5, 5)) for _ in range(alg.rank))
            assert bilinear_form(a, b, alg) == bilinear_form(b, a, alg)
            assert bilinear_form(wsum(a, b), a, alg) == alg.form(a, a) + alg.form(b, a)


def test_isotropic_coroot_raises():
    alg = build("B-I:m=1,n=1")
    iso = alg.root_named("d1-e1")
    with pytest.raises(IsotropicCoroot):
        coroot_pairing(alg.rho, iso, alg)
    with pytest.raises(IsotropicCoroot):
        reflect(alg.rho, iso.weight, alg)


def test_invalid_params():
    with pytest.raises(InvalidParams):
        CaseId("D-I", 2, 1)
    with pytest.raises(InvalidParams):
        CaseId("B-I", 0, 1)
    with pytest.raises(InvalidParams):
        CaseId("F31", 2, 1)
    with pytest.raises(InvalidParams):
        CaseId("E8")
    with pytest.raises(InvalidParams):
        CaseId.parse("B-I:m=x,n=1")
    alg = build("B-I:m=1,n=1")
    with pytest.raises(InvalidParams):
        alg.root_named("d7")
    with pytest.raises(InvalidParams):
        alg.root_index(parse_weight("5,5", 2))


def test_case_text_roundtrip():
    for text in ["B-I:m=2,n=1", "B-II:m=3,n=2", "D-I:m=1,n=3", "D-II:m=2,n=2", "F31", "G3"]:
        case = CaseId.parse(text)
        assert case.text == text
        assert CaseId.parse(case.text) == case


def test_weight_serialization_roundtrip():
    w = frac_weight("1/2", -3, "7/3")
    assert parse_weight(format_weight(w), 3) == w
    with pytest.raises(InvalidParams):
        parse_weight("1,2", 3)


def test_decompositions_consistent():
    for text in SMALLEST + ["B-II:m=2,n=3", "D-II:m=2,n=3"]:
        alg = build(text)
        for pos, r in enumerate(alg.pos_roots):
            if alg.heights[pos] == 1:
                assert alg.decomp[pos] is None
                assert pos in alg.simple_pos_index
            else:
                k, rest = alg.decomp[pos]
                assert wsum(alg.simple_system[k].weight, alg.pos_roots[rest].weight) == r.weight
                assert alg.heights[rest] == alg.heights[pos] - 1


def test_dimension_counts():
    # superdimension check: dim g = 2 * #(positive roots) + rank of the Cartan
    assert build("F31").dim == 40
    assert build("G3").dim == 31
    assert build("B-I:m=1,n=1").dim == 2 * 5 + 2
