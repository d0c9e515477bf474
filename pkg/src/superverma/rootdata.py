"""Root systems, bilinear forms, and Weyl vectors for six simple-system
presentations of basic Lie superalgebras.

Families:

    B-I    osp type, gamma = delta_m (odd nonisotropic), m, n >= 1
    B-II   osp type, gamma = eps_n (even), m, n >= 1
    D-I    osp type, gamma = 2*delta_m (even), m >= 1, n >= 2
    D-II   osp type, gamma = eps_{n-1} + eps_n (even), m >= 1, n >= 2
    F31    F(3|1), gamma = delta (even)
    G3     G(3), gamma = delta (odd nonisotropic)

Weights are tuples of Fraction over a fixed coordinate basis per case:
(d1..dm, e1..en) for the osp families, (D, e1, e2, e3) for F31, and
(D, e1, e2) for G3, where e3 := -e1-e2 is eliminated at the coordinate
level.  All arithmetic is exact.

The bilinear form is normalized so that (d_i, d_j) = +delta_ij and
(e_k, e_l) = -delta_kl in the osp families; forms for F31 and G3 are
fixed by requiring (rho, alpha) = 0 for the isotropic simple root.
Coroot pairings are ratios, so any consistent global scale gives the
same module theory.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

Weight = Tuple[Fraction, ...]
Matrix = Tuple[Tuple[Fraction, ...], ...]

EVEN = "even"
ODD_ISO = "odd-isotropic"
ODD_NONISO = "odd-nonisotropic"

FAMILIES = ("B-I", "B-II", "D-I", "D-II", "F31", "G3")
OSP_FAMILIES = ("B-I", "B-II", "D-I", "D-II")


class InvalidParams(ValueError):
    """Case parameters or weights outside the valid range."""


class IsotropicCoroot(ValueError):
    """Coroot pairing or reflection requested for an isotropic root."""


class ParityViolation(ValueError):
    """An integer parameter has the wrong parity for the requested case."""


# ---------------------------------------------------------------------------
# weight arithmetic


def wsum(a: Weight, b: Weight) -> Weight:
    return tuple(x + y for x, y in zip(a, b))


def wdiff(a: Weight, b: Weight) -> Weight:
    return tuple(x - y for x, y in zip(a, b))


def wneg(a: Weight) -> Weight:
    return tuple(-x for x in a)


def wscale(c, a: Weight) -> Weight:
    c = Fraction(c)
    return tuple(c * x for x in a)


def wzero(dim: int) -> Weight:
    return (Fraction(0),) * dim


def parse_weight(text: str, dim: int) -> Weight:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != dim:
        raise InvalidParams(f"expected {dim} coordinates, got {len(parts)}")
    return tuple(Fraction(p) for p in parts)


def format_weight(w: Weight) -> str:
    return ",".join(str(x) for x in w)


def solve_square(rows: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]) -> List[Fraction]:
    """Solve A x = b over Fraction by Gaussian elimination.

    Raises ValueError when A is singular.
    """
    n = len(rhs)
    aug = [list(rows[i]) + [rhs[i]] for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise ValueError("singular matrix")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[col])]
    return [aug[i][n] for i in range(n)]


# ---------------------------------------------------------------------------
# case identifiers


@dataclass(frozen=True)
class CaseId:
    family: str
    m: int = 0
    n: int = 0

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise InvalidParams(f"unknown family {self.family!r}")
        if self.family in OSP_FAMILIES:
            nmin = 2 if self.family in ("D-I", "D-II") else 1
            if self.m < 1 or self.n < nmin:
                raise InvalidParams(
                    f"{self.family} requires m >= 1 and n >= {nmin}, got m={self.m}, n={self.n}"
                )
        elif self.m or self.n:
            raise InvalidParams(f"{self.family} takes no m, n parameters")

    @property
    def text(self) -> str:
        if self.family in OSP_FAMILIES:
            return f"{self.family}:m={self.m},n={self.n}"
        return self.family

    @staticmethod
    def parse(text: str) -> "CaseId":
        text = text.strip()
        if ":" not in text:
            return CaseId(text)
        family, _, params = text.partition(":")
        match = re.fullmatch(r"m=(\d+),n=(\d+)", params)
        if not match:
            raise InvalidParams(f"cannot parse case text {text!r}")
        return CaseId(family, int(match.group(1)), int(match.group(2)))


@dataclass(frozen=True)
class RootDatum:
    weight: Weight
    parity: str
    name: str
    positive: bool = True

    @property
    def odd(self) -> bool:
        return self.parity != EVEN

    @property
    def isotropic(self) -> bool:
        return self.parity == ODD_ISO


RootSpec = Union[RootDatum, Weight, str]


# ---------------------------------------------------------------------------
# name rendering

_SUPERSCRIPTS = {}


def render_weight_name(coord_names: Sequence[str], w: Weight) -> str:
    """Render a weight as a signed combination of coordinate names.

    Positive terms come first (in coordinate order), then negative terms.
    Half-integral weights are rendered as "(...)/2".
    """
    den = 1
    for x in w:
        if x.denominator not in (1, den):
            den = x.denominator if den == 1 else den * x.denominator
    scaled = [x * den for x in w]
    terms = [(c, name) for c, name in zip(scaled, coord_names) if c != 0]
    ordered = [t for t in terms if t[0] > 0] + [t for t in terms if t[0] < 0]
    if not ordered:
        return "0"
    out = ""
    for coeff, name in ordered:
        sign = "+" if coeff > 0 else "-"
        mag = abs(coeff)
        body = name if mag == 1 else f"{mag}{name}"
        if out or sign == "-":
            out += sign
        out += body
    if den != 1:
        out = f"({out})/{den}"
    return out


F31_SIGN_CHARS = {"+": Fraction(1, 2), "-": Fraction(-1, 2)}


def f31_sign_weight(signs: str) -> Weight:
    """Weight of an F31 odd root given as a four character sign tuple.

    The tuple lists the signs of (D, e1, e2, e3) in (D +- e1 +- e2 +- e3)/2,
    e.g. "+--+" is (D - e1 - e2 + e3)/2.  An ASCII hyphen or a unicode minus
    both denote a minus sign.
    """
    signs = signs.replace("−", "-")
    if len(signs) != 4 or any(ch not in F31_SIGN_CHARS for ch in signs):
        raise InvalidParams(f"bad sign tuple {signs!r}")
    return tuple(F31_SIGN_CHARS[ch] for ch in signs)


def f31_signs_of(w: Weight) -> Optional[str]:
    """Inverse of f31_sign_weight; None when w is not a sign-tuple weight."""
    if len(w) != 4 or any(abs(x) != Fraction(1, 2) for x in w):
        return None
    return "".join("+" if x > 0 else "-" for x in w)


# ---------------------------------------------------------------------------
# algebra data


@dataclass(frozen=True, eq=False)
class AlgebraData:
    case: CaseId
    coord_names: Tuple[str, ...]
    form_matrix: Matrix
    simple_system: Tuple[RootDatum, ...]
    pos_even: Tuple[RootDatum, ...]
    pos_odd: Tuple[RootDatum, ...]
    pos_roots: Tuple[RootDatum, ...]
    rho: Weight
    gamma: RootDatum
    heights: Tuple[int, ...]
    decomp: Tuple[Optional[Tuple[int, int]], ...]
    simple_pos_index: Tuple[int, ...]
    index: Dict[Weight, int]

    @property
    def dim(self) -> int:
        return 2 * len(self.pos_roots) + len(self.simple_system)

    @property
    def rank(self) -> int:
        return len(self.coord_names)

    def as_weight(self, root: RootSpec) -> Weight:
        if isinstance(root, RootDatum):
            return root.weight
        if isinstance(root, str):
            return self.root_named(root).weight
        return root

    def form(self, a: Weight, b: Weight) -> Fraction:
        total = Fraction(0)
        for i, x in enumerate(a):
            if x:
                row = self.form_matrix[i]
                total += x * sum(row[j] * y for j, y in enumerate(b) if y)
        return total

    def norm(self, a: Weight) -> Fraction:
        return self.form(a, a)

    def is_root(self, w: Weight) -> bool:
        return w in self.index or wneg(w) in self.index

    def root_index(self, w: Weight) -> int:
        try:
            return self.index[w]
        except KeyError:
            raise InvalidParams(f"{w} is not a positive root") from None

    def root_at(self, w: Weight) -> RootDatum:
        return self.pos_roots[self.root_index(w)]

    def root_named(self, name: str) -> RootDatum:
        for r in self.pos_roots:
            if r.name == name:
                return r
        raise InvalidParams(f"no positive root named {name!r}")

    def coroot_pairing(self, lam: Weight, beta: RootSpec) -> Fraction:
        b = self.as_weight(beta)
        nn = self.norm(b)
        if nn == 0:
            raise IsotropicCoroot(f"root {b} is isotropic")
        return 2 * self.form(lam, b) / nn

    def coroot_dual(self, beta: RootSpec) -> Weight:
        """Weight nu with <mu, h_beta> = (mu, nu) for all mu."""
        b = self.as_weight(beta)
        nn = self.norm(b)
        if nn == 0:
            raise IsotropicCoroot(f"root {b} is isotropic")
        return wscale(Fraction(2) / nn, b)

    def reflect(self, lam: Weight, beta: RootSpec) -> Weight:
        b = self.as_weight(beta)
        return wdiff(lam, wscale(self.coroot_pairing(lam, b), b))

    def name_of(self, w: Weight) -> str:
        if w in self.index:
            return self.pos_roots[self.index[w]].name
        return render_weight_name(self.coord_names, w)


def bilinear_form(a: Weight, b: Weight, alg: AlgebraData) -> Fraction:
    return alg.form(a, b)


def coroot_pairing(lam: Weight, beta: RootSpec, alg: AlgebraData) -> Fraction:
    return alg.coroot_pairing(lam, beta)


def reflect(lam: Weight, beta: RootSpec, alg: AlgebraData) -> Weight:
    return alg.reflect(lam, beta)


def wprime_orbit(beta: RootSpec, alg: AlgebraData) -> Tuple[RootDatum, ...]:
    """Orbit of a positive root under reflections in nonisotropic simple roots.

    Returns the positive representatives, sorted by weight.
    """
    start = alg.as_weight(beta)
    alg.root_index(start)
    mirrors = [s.weight for s in alg.simple_system if s.parity != ODD_ISO]
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for w in frontier:
            for s in mirrors:
                image = alg.reflect(w, s)
                if image not in seen:
                    seen.add(image)
                    nxt.append(image)
        frontier = nxt
    reps = {w if w in alg.index else wneg(w) for w in seen}
    for w in reps:
        assert w in alg.index, "orbit left the root system"
    return tuple(alg.pos_roots[alg.index[w]] for w in sorted(reps))


# ---------------------------------------------------------------------------
# construction


def _unit(dim: int, i: int) -> Weight:
    return tuple(Fraction(1 if j == i else 0) for j in range(dim))


def _diag_form(entries: Sequence[int]) -> Matrix:
    dim = len(entries)
    return tuple(
        tuple(Fraction(entries[i] if i == j else 0) for j in range(dim)) for i in range(dim)
    )


def _assemble(
    case: CaseId,
    coord_names: Sequence[str],
    form_matrix: Matrix,
    simple_weights: Sequence[Weight],
    even_weights: Sequence[Weight],
    odd_weights: Sequence[Weight],
    rho_closed: Weight,
    gamma_weight: Weight,
    names: Optional[Dict[Weight, str]] = None,
) -> AlgebraData:
    coord_names = tuple(coord_names)
    names = names or {}

    def name_for(w: Weight) -> str:
        return names.get(w, render_weight_name(coord_names, w))

    assert len(set(even_weights)) == len(even_weights)
    assert len(set(odd_weights)) == len(odd_weights)
    assert not set(even_weights) & set(odd_weights)

    dummy = AlgebraData(
        case, coord_names, form_matrix, (), (), (), (), rho_closed,
        RootDatum(gamma_weight, EVEN, "", True), (), (), (), {},
    )

    def classify(w: Weight, odd: bool) -> str:
        if not odd:
            assert dummy.norm(w) != 0, f"even root {w} must be nonisotropic"
            return EVEN
        return ODD_ISO if dummy.norm(w) == 0 else ODD_NONISO

    even = sorted(even_weights)
    odd = sorted(odd_weights)
    pos_roots = tuple(
        [RootDatum(w, classify(w, False), name_for(w)) for w in even]
        + [RootDatum(w, classify(w, True), name_for(w)) for w in odd]
    )
    index = {r.weight: i for i, r in enumerate(pos_roots)}

    simple_system = tuple(pos_roots[index[w]] for w in simple_weights)
    simple_pos_index = tuple(index[w] for w in simple_weights)

    # heights and decompositions over the simple basis
    dim = len(coord_names)
    assert len(simple_weights) == dim, "simple roots must form a coordinate basis"
    basis_cols = [[simple_weights[j][i] for j in range(dim)] for i in range(dim)]
    heights: List[int] = []
    for r in pos_roots:
        coeffs = solve_square(basis_cols, list(r.weight))
        assert all(c.denominator == 1 and c >= 0 for c in coeffs), (
            f"{r.name} is not a nonnegative integer combination of simple roots"
        )
        heights.append(int(sum(coeffs)))
    decomp: List[Optional[Tuple[int, int]]] = []
    for pos, r in enumerate(pos_roots):
        if heights[pos] == 1:
            decomp.append(None)
            continue
        found = None
        for k, s in enumerate(simple_system):
            rest = wdiff(r.weight, s.weight)
            if rest in index:
                found = (k, index[rest])
                break
        assert found is not None, f"no simple-root decomposition for {r.name}"
        assert heights[found[1]] == heights[pos] - 1
        decomp.append(found)

    # Weyl vector invariants: the closed form must match the half-sum, pair
    # to 1 with every nonisotropic simple coroot, and be orthogonal to every
    # isotropic simple root.
    half_sum = wzero(dim)
    for r in pos_roots:
        contrib = wscale(Fraction(1, 2), r.weight)
        half_sum = wsum(half_sum, contrib) if not r.odd else wdiff(half_sum, contrib)
    assert half_sum == rho_closed, f"rho mismatch: {half_sum} vs {rho_closed}"
    for s in simple_system:
        if s.parity == ODD_ISO:
            assert dummy.form(rho_closed, s.weight) == 0, f"(rho, {s.name}) != 0"
        else:
            assert dummy.coroot_pairing(rho_closed, s.weight) == 1, f"<rho, h_{s.name}> != 1"

    gamma = pos_roots[index[gamma_weight]]
    assert dummy.norm(gamma_weight) != 0, "gamma must be nonisotropic"

    return AlgebraData(
        case=case,
        coord_names=coord_names,
        form_matrix=form_matrix,
        simple_system=simple_system,
        pos_even=pos_roots[: len(even)],
        pos_odd=pos_roots[len(even):],
        pos_roots=pos_roots,
        rho=rho_closed,
        gamma=gamma,
        heights=tuple(heights),
        decomp=tuple(decomp),
        simple_pos_index=simple_pos_index,
        index=index,
    )


def _osp_scaffold(case: CaseId):
    m, n = case.m, case.n
    dim = m + n
    coord_names = tuple(f"d{i + 1}" for i in range(m)) + tuple(f"e{j + 1}" for j in range(n))
    form = _diag_form([1] * m + [-1] * n)
    delta = [_unit(dim, i) for i in range(m)]
    eps = [_unit(dim, m + j) for j in range(n)]
    return coord_names, form, delta, eps


def _build_b1(case: CaseId) -> AlgebraData:
    m, n = case.m, case.n
    coord_names, form, delta, eps = _osp_scaffold(case)
    even = (
        [wdiff(delta[i], delta[j]) for i in range(m) for j in range(i + 1, m)]
        + [wsum(delta[i], delta[j]) for i in range(m) for j in range(i + 1, m)]
        + [wscale(2, delta[p]) for p in range(m)]
        + [wdiff(eps[k], eps[l]) for k in range(n) for l in range(k + 1, n)]
        + [wsum(eps[k], eps[l]) for k in range(n) for l in range(k + 1, n)]
        + [eps[q] for q in range(n)]
    )
    odd = (
        [delta[p] for p in range(m)]
        + [wdiff(delta[p], eps[q]) for p in range(m) for q in range(n)]
        + [wsum(delta[p], eps[q]) for p in range(m) for q in range(n)]
    )
    simples = (
        [wdiff(delta[i], delta[i + 1]) for i in range(m - 1)]
        + [wdiff(delta[m - 1], eps[0])]
        + [wdiff(eps[j], eps[j + 1]) for j in range(n - 1)]
        + [eps[n - 1]]
    )
    rho = tuple(
        [Fraction(2 * (m - n - i) + 1, 2) for i in range(1, m + 1)]
        + [Fraction(2 * (n - j) + 1, 2) for j in range(1, n + 1)]
    )
    return _assemble(case, coord_names, form, simples, even, odd, rho, delta[m - 1])


def _build_b2(case: CaseId) -> AlgebraData:
    m, n = case.m, case.n
    coord_names, form, delta, eps = _osp_scaffold(case)
    even = (
        [wdiff(delta[i], delta[j]) for i in range(m) for j in range(i + 1, m)]
        + [wsum(delta[i], delta[j]) for i in range(m) for j in range(i + 1, m)]
        + [wscale(2, delta[p]) for p in range(m)]
        + [wdiff(eps[k], eps[l]) for k in range(n) for l in range(k + 1, n)]
        + [wsum(eps[k], eps[l]) for k in range(n) for l in range(k + 1, n)]
        + [eps[q] for q in range(n)]
    )
    odd = (
        [delta[p] for p in range(m)]
        + [wdiff(eps[q], delta[p]) for p in range(m) for q in range(n)]
        + [wsum(eps[q], delta[p]) for p in range(m) for q in range(n)]
    )
    simples = (
        [wdiff(eps[j], eps[j + 1]) for j in range(n - 1)]
        + [wdiff(eps[n - 1], delta[0])]
        + [wdiff(delta[i], delta[i + 1]) for i in range(m - 1)]
        + [delta[m - 1]]
    )
    rho = tuple(
        [Fraction(2 * (m - i) + 1, 2) for i in range(1, m + 1)]
        + [Fraction(2 * (n - m - j) + 1, 2) for j in range(1, n + 1)]
    )
    return _assemble(case, coord_names, form, simples, even, odd, rho, eps[n - 1])


def _build_d1(case: CaseId) -> AlgebraData:
    m, n = case.m, case.n
    coord_names, form, delta, eps = _osp_scaffold(case)
    even = (
        [wdiff(delta[i], delta[j]) for i in range(m) for j in range(i + 1, m)]
        + [wsum(delta[i], delta[j]) for i in range(m) for j in range(i + 1, m)]
        + [wscale(2, delta[p]) for p in range(m)]
        + [wdiff(eps[k], eps[l]) for k in range(n) for l in range(k + 1, n)]
        + [wsum(eps[k], eps[l]) for k in range(n) for l in range(k + 1, n)]
    )
    odd = [wdiff(delta[p], eps[q]) for p in range(m) for q in range(n)] + [
        wsum(delta[p], eps[q]) for p in range(m) for q in range(n)
    ]
    simples = (
        [wdiff(delta[i], delta[i + 1]) for i in range(m - 1)]
        + [wdiff(delta[m - 1], eps[0])]
        + [wdiff(eps[j], eps[j + 1]) for j in range(n - 1)]
        + [wsum(eps[n - 2], eps[n - 1])]
    )
    rho = tuple(
        [Fraction(m - n - i + 1) for i in range(1, m + 1)]
        + [Fraction(n - j) for j in range(1, n + 1)]
    )
    return _assemble(case, coord_names, form, simples, even, odd, rho, wscale(2, delta[m - 1]))


def _build_d2(case: CaseId) -> AlgebraData:
    m, n = case.m, case.n
    coord_names, form, delta, eps = _osp_scaffold(case)
    even = (
        [wdiff(delta[i], delta[j]) for i in range(m) for j in range(i + 1, m)]
        + [wsum(delta[i], delta[j]) for i in range(m) for j in range(i + 1, m)]
        + [wscale(2, delta[p]) for p in range(m)]
        + [wdiff(eps[k], eps[l]) for k in range(n) for l in range(k + 1, n)]
        + [wsum(eps[k], eps[l]) for k in range(n) for l in range(k + 1, n)]
    )
    odd = [wdiff(eps[q], delta[p]) for p in range(m) for q in range(n)] + [
        wsum(eps[q], delta[p]) for p in range(m) for q in range(n)
    ]
    simples = (
        [wdiff(eps[j], eps[j + 1]) for j in range(n - 1)]
        + [wdiff(eps[n - 1], delta[0])]
        + [wdiff(delta[i], delta[i + 1]) for i in range(m - 1)]
        + [wscale(2, delta[m - 1])]
    )
    rho = tuple(
        [Fraction(m - i + 1) for i in range(1, m + 1)]
        + [Fraction(n - m - j) for j in range(1, n + 1)]
    )
    return _assemble(
        case, coord_names, form, simples, even, odd, rho, wsum(eps[n - 2], eps[n - 1])
    )


def _build_f31(case: CaseId) -> AlgebraData:
    coord_names = ("D", "e1", "e2", "e3")
    form = _diag_form([-3, 1, 1, 1])
    delta = _unit(4, 0)
    eps = [_unit(4, j) for j in (1, 2, 3)]
    even = (
        [delta]
        + [eps[i] for i in range(3)]
        + [wdiff(eps[i], eps[j]) for i in range(3) for j in range(i + 1, 3)]
        + [wsum(eps[i], eps[j]) for i in range(3) for j in range(i + 1, 3)]
    )
    odd = []
    names: Dict[Weight, str] = {}
    for s1 in "+-":
        for s2 in "+-":
            for s3 in "+-":
                signs = "+" + s1 + s2 + s3
                w = f31_sign_weight(signs)
                odd.append(w)
                names[w] = signs
    simples = [wdiff(eps[0], eps[1]), wdiff(eps[1], eps[2]), eps[2], f31_sign_weight("+---")]
    rho = (Fraction(-3, 2), Fraction(5, 2), Fraction(3, 2), Fraction(1, 2))
    return _assemble(case, coord_names, form, simples, even, odd, rho, delta, names)


def _build_g3(case: CaseId) -> AlgebraData:
    coord_names = ("D", "e1", "e2")
    form = tuple(
        tuple(Fraction(x) for x in row)
        for row in [[-2, 0, 0], [0, 2, -1], [0, -1, 2]]
    )
    delta = _unit(3, 0)
    e1 = _unit(3, 1)
    e2 = _unit(3, 2)
    e3 = wneg(wsum(e1, e2))
    even = [
        wscale(2, delta),
        e1,
        e2,
        wsum(e1, e2),
        wdiff(e2, e1),
        wsum(wscale(2, e1), e2),
        wsum(e1, wscale(2, e2)),
    ]
    odd = [
        delta,
        wdiff(delta, e1),
        wsum(delta, e1),
        wdiff(delta, e2),
        wsum(delta, e2),
        wdiff(delta, e3),
        wsum(delta, e3),
    ]
    names = {
        wdiff(delta, e3): "D-e3",
        wsum(delta, e3): "D+e3",
    }
    simples = [wdiff(e2, e1), e1, wsum(delta, e3)]
    rho = (Fraction(-5, 2), Fraction(2), Fraction(3))
    return _assemble(case, coord_names, form, simples, even, odd, rho, delta, names)


_BUILDERS = {
    "B-I": _build_b1,
    "B-II": _build_b2,
    "D-I": _build_d1,
    "D-II": _build_d2,
    "F31": _build_f31,
    "G3": _build_g3,
}


def build_algebra_data(case: CaseId) -> AlgebraData:
    alg = _BUILDERS[case.family](case)
    _check_counts(alg)
    return alg


def _check_counts(alg: AlgebraData) -> None:
    m, n = alg.case.m, alg.case.n
    family = alg.case.family
    expected = {
        "B-I": (m * m + n * n, m * (2 * n + 1)),
        "B-II": (m * m + n * n, m * (2 * n + 1)),
        "D-I": (m * m + n * n - n, 2 * m * n),
        "D-II": (m * m + n * n - n, 2 * m * n),
        "F31": (10, 8),
        "G3": (7, 7),
    }[family]
    assert (len(alg.pos_even), len(alg.pos_odd)) == expected, "positive root counts are off"
