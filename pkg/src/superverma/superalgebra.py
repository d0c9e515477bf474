"""Supercommutator tables generated from a simple-root presentation.

The basis has one lowering generator f_sigma per positive root, one Cartan
generator h_i per simple root alpha_i, and one raising generator e_sigma
per positive root.  The defining choices are

    [e_i, f_j] = delta_ij h_i            on simple generators,
    e_sigma := [e_k, e_tau],  f_sigma := [f_k, f_tau]

for each non-simple positive root sigma, where sigma = alpha_k + tau is
the stored decomposition.  Every other bracket is forced by the super
Jacobi identity.  The builder fills the table level by level in the root
height so that each step only reads entries that are already known; a
gap in that schedule raises ClosureFailure instead of recursing blindly.

Bracket values are dicts mapping basis ids to Fraction coefficients, so
a value can be a root-vector multiple or a Cartan combination.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Dict, List, Optional, Tuple

from .rootdata import (
    AlgebraData,
    RootDatum,
    RootSpec,
    Weight,
    wdiff,
    wneg,
    wsum,
    wzero,
)

Value = Dict[int, Fraction]


class ClosureFailure(RuntimeError):
    """The Jacobi closure could not determine or verify a bracket."""


@dataclass(frozen=True)
class BasisElement:
    bid: int
    kind: str  # "f", "h", or "e"
    index: int  # positive-root index for e/f, simple index for h
    weight: Weight
    odd: bool
    name: str


def _scaled(val: Value, c: Fraction) -> Value:
    if not c:
        return {}
    return {k: c * v for k, v in val.items()}


def _merge(into: Dict[int, Fraction], val: Value, c: Fraction = Fraction(1)) -> None:
    for k, v in val.items():
        new = into.get(k, Fraction(0)) + c * v
        if new:
            into[k] = new
        else:
            into.pop(k, None)


@dataclass(eq=False)
class BracketTable:
    alg: AlgebraData
    basis: Tuple[BasisElement, ...]
    entries: Dict[Tuple[int, int], Value]
    cartan_duals: Tuple[Weight, ...]

    @property
    def n_pos(self) -> int:
        return len(self.alg.pos_roots)

    @property
    def n_cartan(self) -> int:
        return len(self.alg.simple_system)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def f_id(self, pos_index: int) -> int:
        return pos_index

    def h_id(self, simple_index: int) -> int:
        return self.n_pos + simple_index

    def e_id(self, pos_index: int) -> int:
        return self.n_pos + self.n_cartan + pos_index

    def f_gen(self, root: RootSpec) -> int:
        return self.f_id(self.alg.root_index(self.alg.as_weight(root)))

    def e_gen(self, root: RootSpec) -> int:
        return self.e_id(self.alg.root_index(self.alg.as_weight(root)))

    def bracket(self, x: int, y: int) -> Value:
        return self.entries[(x, y)]

    def cartan_pairing(self, simple_index: int, w: Weight) -> Fraction:
        return self.alg.form(w, self.cartan_duals[simple_index])

    def h_value_pairing(self, val: Value, w: Weight) -> Fraction:
        """Pairing <w, h> for a Cartan-valued bracket result."""
        total = Fraction(0)
        for bid, c in val.items():
            el = self.basis[bid]
            if el.kind != "h":
                raise ClosureFailure(f"{el.name} is not a Cartan generator")
            total += c * self.cartan_pairing(el.index, w)
        return total

    def h_value_dual(self, val: Value) -> Weight:
        """Weight nu with <w, h> = (w, nu) for a Cartan-valued result."""
        out = wzero(self.alg.rank)
        for bid, c in val.items():
            el = self.basis[bid]
            if el.kind != "h":
                raise ClosureFailure(f"{el.name} is not a Cartan generator")
            out = wsum(out, tuple(c * x for x in self.cartan_duals[el.index]))
        return out

    def render_value(self, val: Value) -> str:
        if not val:
            return "0"
        parts = []
        for bid in sorted(val):
            c = val[bid]
            name = self.basis[bid].name
            if c == 1:
                term = name
            elif c == -1:
                term = f"-{name}"
            else:
                term = f"{c}*{name}"
            parts.append(term)
        out = parts[0]
        for term in parts[1:]:
            out += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
        return out


def build_structure_constants(alg: AlgebraData) -> BracketTable:
    P = len(alg.pos_roots)
    R = len(alg.simple_system)
    basis: List[BasisElement] = []
    for i, r in enumerate(alg.pos_roots):
        basis.append(BasisElement(i, "f", i, wneg(r.weight), r.odd, f"f_{{{r.name}}}"))
    for j, s in enumerate(alg.simple_system):
        basis.append(BasisElement(P + j, "h", j, wzero(alg.rank), False, f"h_{{{s.name}}}"))
    for i, r in enumerate(alg.pos_roots):
        basis.append(BasisElement(P + R + i, "e", i, r.weight, r.odd, f"e_{{{r.name}}}"))
    duals = tuple(
        s.weight if s.isotropic else alg.coroot_dual(s.weight) for s in alg.simple_system
    )

    def f_id(i):
        return i

    def h_id(j):
        return P + j

    def e_id(i):
        return P + R + i

    entries: Dict[Tuple[int, int], Value] = {}
    odd = [el.odd for el in basis]

    def ksign(x: int, y: int) -> int:
        return -1 if odd[x] and odd[y] else 1

    def set_entry(x: int, y: int, val: Value) -> None:
        val = {k: v for k, v in val.items() if v}
        entries[(x, y)] = val
        if x != y:
            entries[(y, x)] = _scaled(val, Fraction(-ksign(x, y)))
        else:
            assert not val or ksign(x, y) == -1, "even square bracket must vanish"

    def get(x: int, y: int) -> Value:
        try:
            return entries[(x, y)]
        except KeyError:
            raise ClosureFailure(
                f"bracket [{basis[x].name}, {basis[y].name}] needed before it was built"
            ) from None

    def apply_left(x: int, val: Value) -> Value:
        out: Dict[int, Fraction] = {}
        for z, c in val.items():
            _merge(out, get(x, z), c)
        return out

    def apply_right(val: Value, y: int) -> Value:
        out: Dict[int, Fraction] = {}
        for z, c in val.items():
            _merge(out, get(z, y), c)
        return out

    pairing = [
        [alg.form(r.weight, duals[j]) for j in range(R)] for r in alg.pos_roots
    ]
    spi = alg.simple_pos_index

    # level 1: Cartan action, simple mixed pairs, and the defining ladder
    for a in range(R):
        for b in range(R):
            set_entry(h_id(a), h_id(b), {})
    for s in range(P):
        for j in range(R):
            c = pairing[s][j]
            set_entry(h_id(j), e_id(s), {e_id(s): c} if c else {})
            set_entry(h_id(j), f_id(s), {f_id(s): -c} if c else {})
    for a in range(R):
        for b in range(R):
            val: Value = {h_id(a): Fraction(1)} if a == b else {}
            set_entry(e_id(spi[a]), f_id(spi[b]), val)
    for s in range(P):
        if alg.decomp[s] is not None:
            k, t = alg.decomp[s]
            set_entry(e_id(spi[k]), e_id(t), {e_id(s): Fraction(1)})
            set_entry(f_id(spi[k]), f_id(t), {f_id(s): Fraction(1)})
    for mu in range(P):
        for nu in range(mu, P):
            if wsum(alg.pos_roots[mu].weight, alg.pos_roots[nu].weight) in alg.index:
                continue
            if (e_id(mu), e_id(nu)) not in entries:
                set_entry(e_id(mu), e_id(nu), {})
            if (f_id(mu), f_id(nu)) not in entries:
                set_entry(f_id(mu), f_id(nu), {})

    # levels 2..max: mixed brackets against simple generators, then the
    # remaining same-sign pairs at that height
    by_height: Dict[int, List[int]] = {}
    for s in range(P):
        by_height.setdefault(alg.heights[s], []).append(s)

    def single_e(val: Value) -> Optional[Tuple[int, Fraction]]:
        if not val:
            return None
        assert len(val) == 1, "root-graded bracket has one component"
        ((bid, c),) = val.items()
        assert basis[bid].kind == "e"
        return bid, c

    for h in sorted(by_height):
        if h == 1:
            continue
        level = by_height[h]
        for s in level:
            k, t = alg.decomp[s]
            ok = odd[e_id(spi[k])]
            for j in range(R):
                sj = odd[f_id(spi[j])]
                sign_jk = -1 if sj and ok else 1
                # [f_j, e_s] with e_s = [e_k, e_t]
                val: Dict[int, Fraction] = {}
                if j == k:
                    c = (1 if ok else -1) * pairing[t][k]
                    if c:
                        val[e_id(t)] = Fraction(c)
                _merge(val, apply_left(e_id(spi[k]), get(f_id(spi[j]), e_id(t))), Fraction(sign_jk))
                set_entry(f_id(spi[j]), e_id(s), val)
                # [e_j, f_s] with f_s = [f_k, f_t]
                val = {}
                if j == k:
                    c = -pairing[t][k]
                    if c:
                        val[f_id(t)] = Fraction(c)
                _merge(val, apply_left(f_id(spi[k]), get(e_id(spi[j]), f_id(t))), Fraction(sign_jk))
                set_entry(e_id(spi[j]), f_id(s), val)
        for s in level:
            sigma = alg.pos_roots[s].weight
            probe_e = probe_f = None
            for j in range(R):
                if probe_e is None and entries[(f_id(spi[j]), e_id(s))]:
                    probe_e = j
                if probe_f is None and entries[(e_id(spi[j]), f_id(s))]:
                    probe_f = j
            if probe_e is None or probe_f is None:
                raise ClosureFailure(f"no simple generator detects {alg.pos_roots[s].name}")
            pe_id, pe_c = single_e(entries[(f_id(spi[probe_e]), e_id(s))])
            pf_val = entries[(e_id(spi[probe_f]), f_id(s))]
            ((pf_id, pf_c),) = pf_val.items()
            for mu in range(P):
                rest = wdiff(sigma, alg.pos_roots[mu].weight)
                nu = alg.index.get(rest)
                if nu is None:
                    continue
                smu = -1 if odd[f_id(spi[probe_e])] and odd[e_id(mu)] else 1
                if (e_id(mu), e_id(nu)) not in entries:
                    rhs: Dict[int, Fraction] = {}
                    _merge(rhs, apply_right(get(f_id(spi[probe_e]), e_id(mu)), e_id(nu)))
                    _merge(rhs, apply_left(e_id(mu), get(f_id(spi[probe_e]), e_id(nu))), Fraction(smu))
                    assert set(rhs) <= {pe_id}, "probe identity left the target line"
                    x = rhs.get(pe_id, Fraction(0)) / pe_c
                    set_entry(e_id(mu), e_id(nu), {e_id(s): x} if x else {})
                smu = -1 if odd[e_id(spi[probe_f])] and odd[f_id(mu)] else 1
                if (f_id(mu), f_id(nu)) not in entries:
                    rhs = {}
                    _merge(rhs, apply_right(get(e_id(spi[probe_f]), f_id(mu)), f_id(nu)))
                    _merge(rhs, apply_left(f_id(mu), get(e_id(spi[probe_f]), f_id(nu))), Fraction(smu))
                    assert set(rhs) <= {pf_id}, "probe identity left the target line"
                    x = rhs.get(pf_id, Fraction(0)) / pf_c
                    set_entry(f_id(mu), f_id(nu), {f_id(s): x} if x else {})

    # general mixed brackets [e_a, f_b], recursing on total height
    def bracket_ids(x: int, y: int) -> Value:
        if (x, y) in entries:
            return entries[(x, y)]
        ex, ey = basis[x], basis[y]
        if ex.kind == "e" and ey.kind == "f":
            ensure_mixed(ex.index, ey.index)
        elif ex.kind == "f" and ey.kind == "e":
            ensure_mixed(ey.index, ex.index)
        else:
            raise ClosureFailure(f"unexpected gap at [{ex.name}, {ey.name}]")
        return entries[(x, y)]

    def combine_left(x: int, val: Value) -> Value:
        out: Dict[int, Fraction] = {}
        for z, c in val.items():
            _merge(out, bracket_ids(x, z), c)
        return out

    def combine_right(val: Value, y: int) -> Value:
        out: Dict[int, Fraction] = {}
        for z, c in val.items():
            _merge(out, bracket_ids(z, y), c)
        return out

    def ensure_mixed(a: int, b: int) -> None:
        key = (e_id(a), f_id(b))
        if key in entries:
            return
        wa = alg.pos_roots[a].weight
        wb = alg.pos_roots[b].weight
        diff = wdiff(wa, wb)
        if a != b and diff not in alg.index and wneg(diff) not in alg.index:
            set_entry(*key, {})
            return
        if alg.heights[b] >= 2:
            k, t = alg.decomp[b]
            sign = -1 if odd[e_id(a)] and odd[f_id(spi[k])] else 1
            out: Dict[int, Fraction] = {}
            _merge(out, combine_right(bracket_ids(e_id(a), f_id(spi[k])), f_id(t)))
            _merge(out, combine_left(f_id(spi[k]), bracket_ids(e_id(a), f_id(t))), Fraction(sign))
        else:
            assert alg.heights[a] >= 2, "simple pairs are set in level 1"
            l, p = alg.decomp[a]
            sign = -1 if odd[e_id(spi[l])] and odd[e_id(p)] else 1
            out = {}
            _merge(out, combine_left(e_id(spi[l]), bracket_ids(e_id(p), f_id(b))))
            _merge(out, combine_left(e_id(p), bracket_ids(e_id(spi[l]), f_id(b))), Fraction(-sign))
        set_entry(*key, out)

    for a in range(P):
        for b in range(P):
            ensure_mixed(a, b)

    # anything still missing is zero by the root grading
    dim = 2 * P + R
    for x in range(dim):
        for y in range(dim):
            if (x, y) in entries:
                continue
            total = wsum(basis[x].weight, basis[y].weight)
            if any(total) and total not in alg.index and wneg(total) not in alg.index:
                set_entry(x, y, {})
            else:
                raise ClosureFailure(
                    f"no value derived for [{basis[x].name}, {basis[y].name}]"
                )

    return BracketTable(alg=alg, basis=tuple(basis), entries=entries, cartan_duals=duals)


# ---------------------------------------------------------------------------
# consistency checks


@dataclass(frozen=True)
class JacobiReport:
    ok: bool
    pairs_checked: int
    triples_checked: int
    first_violation: Optional[str] = None


def check_jacobi(table: BracketTable) -> JacobiReport:
    """Exhaustive super antisymmetry and Jacobi sweep over the whole basis."""
    basis = table.basis
    entries = table.entries
    dim = len(basis)

    def ksign(x, y):
        return -1 if basis[x].odd and basis[y].odd else 1

    pairs = 0
    for x in range(dim):
        for y in range(dim):
            pairs += 1
            lhs = entries[(x, y)]
            rhs = _scaled(entries[(y, x)], Fraction(-ksign(x, y)))
            if lhs != rhs:
                return JacobiReport(
                    False, pairs, 0,
                    f"antisymmetry fails for [{basis[x].name}, {basis[y].name}]",
                )

    def adj(x: int, val: Value) -> Value:
        out: Dict[int, Fraction] = {}
        for z, c in val.items():
            _merge(out, entries[(x, z)], c)
        return out

    triples = 0
    for x, y, z in combinations_with_replacement(range(dim), 3):
        triples += 1
        acc: Dict[int, Fraction] = {}
        _merge(acc, adj(x, entries[(y, z)]), Fraction(ksign(x, z)))
        _merge(acc, adj(y, entries[(z, x)]), Fraction(ksign(y, x)))
        _merge(acc, adj(z, entries[(x, y)]), Fraction(ksign(z, y)))
        if acc:
            return JacobiReport(
                False, pairs, triples,
                f"Jacobi fails for ({basis[x].name}, {basis[y].name}, {basis[z].name})",
            )
    return JacobiReport(True, pairs, triples, None)


@dataclass(frozen=True)
class ScalingReport:
    ok: bool
    scales: Dict[str, Fraction]
    detail: str = ""


def check_reference_scaling(table: BracketTable) -> ScalingReport:
    """Match the generated B-II constants against the reference relation list.

    The reference normalization for the rank-2 slice spanned by d_m, e_n and
    e_n +- d_m fixes nine brackets.  A diagonal rescaling of the six root
    vectors (two scales are free gauges) must carry our table onto that list;
    the function solves for the scales from a spanning subset and then checks
    every relation, including the Cartan-valued ones.
    """
    alg = table.alg
    if alg.case.family != "B-II":
        raise ValueError("reference relation list applies to B-II presentations")
    m, n = alg.case.m, alg.case.n
    dm = alg.pos_roots[alg.root_index(tuple(Fraction(1 if i == m - 1 else 0) for i in range(m + n)))]
    en = alg.pos_roots[alg.root_index(tuple(Fraction(1 if i == m + n - 1 else 0) for i in range(m + n)))]
    emd = alg.root_at(wdiff(en.weight, dm.weight))
    epd = alg.root_at(wsum(en.weight, dm.weight))

    e = {r.name: table.e_gen(r) for r in (dm, en, emd, epd)}
    f = {r.name: table.f_gen(r) for r in (dm, en, emd, epd)}
    # (x, y, rhs) with rhs either (gen id, coefficient) or ("h", dual weight);
    # the reference Cartan values (h_{d_m} + h_{e_n})/2 and h_{d_m}/2 have
    # dual weights d_m - e_n and d_m under this form normalization
    relations = [
        (e[epd.name], f[en.name], (e[dm.name], Fraction(-1))),
        (e[emd.name], f[en.name], (f[dm.name], Fraction(-1))),
        (e[dm.name], f[en.name], (f[emd.name], Fraction(1))),
        (f[dm.name], f[en.name], (f[epd.name], Fraction(1))),
        (e[emd.name], f[emd.name], ("h", wdiff(dm.weight, en.weight))),
        (e[emd.name], e[dm.name], (e[en.name], Fraction(-1))),
        (e[dm.name], f[dm.name], ("h", dm.weight)),
        (e[dm.name], f[epd.name], (f[en.name], Fraction(-1))),
        (f[emd.name], f[dm.name], (f[en.name], Fraction(1))),
    ]
    scales: Dict[int, Fraction] = {e[dm.name]: Fraction(1), f[en.name]: Fraction(1)}
    changed = True
    while changed:
        changed = False
        for x, y, rhs in relations:
            val = table.bracket(x, y)
            if rhs[0] == "h":
                # c_x * c_y * dual(val) = rhs dual; solves one unknown factor
                unknown = [g for g in (x, y) if g not in scales]
                if len(unknown) != 1:
                    continue
                dual = table.h_value_dual(val)
                coord = next((i for i, c in enumerate(rhs[1]) if c), None)
                if coord is None or dual[coord] == 0:
                    return ScalingReport(False, {}, _relation_mismatch(table, x, y, val))
                known = scales[y] if unknown[0] == x else scales[x]
                scales[unknown[0]] = rhs[1][coord] / (dual[coord] * known)
                changed = True
                continue
            target, coeff = rhs
            if set(val) != {target}:
                return ScalingReport(False, {}, _relation_mismatch(table, x, y, val))
            slots = [g for g in (x, y, target) if g not in scales]
            if len(slots) != 1:
                continue
            q = val[target]
            if slots[0] == target:
                scales[target] = scales[x] * scales[y] * q / coeff
            elif slots[0] == x:
                scales[x] = coeff * scales[target] / (scales[y] * q)
            else:
                scales[y] = coeff * scales[target] / (scales[x] * q)
            changed = True
    missing = [gid for gid in list(e.values()) + list(f.values()) if gid not in scales]
    if missing:
        names = ", ".join(table.basis[g].name for g in missing)
        return ScalingReport(False, {}, f"scales underdetermined for {names}")
    for x, y, rhs in relations:
        val = table.bracket(x, y)
        factor = scales[x] * scales[y]
        if rhs[0] == "h":
            dual = table.h_value_dual(val)
            if tuple(factor * c for c in dual) != rhs[1]:
                return ScalingReport(False, {}, _relation_mismatch(table, x, y, val))
        else:
            target, coeff = rhs
            if set(val) != {target} or factor * val[target] != coeff * scales[target]:
                return ScalingReport(False, {}, _relation_mismatch(table, x, y, val))
    named = {table.basis[g].name: c for g, c in scales.items()}
    return ScalingReport(True, named, "")


def _relation_mismatch(table: BracketTable, x: int, y: int, val: Value) -> str:
    return (
        f"[{table.basis[x].name}, {table.basis[y].name}] = "
        f"{table.render_value(val)} cannot be rescaled onto the reference list"
    )


def dump_table(table: BracketTable) -> str:
    """Deterministic text dump of all nonzero brackets, one per line."""
    lines = [f"# {table.alg.case.text}: dim {table.dim}, {table.n_pos} positive roots"]
    for x in range(table.dim):
        for y in range(table.dim):
            val = table.entries[(x, y)]
            if val:
                lines.append(
                    f"[{table.basis[x].name}, {table.basis[y].name}] = {table.render_value(val)}"
                )
    return "\n".join(lines) + "\n"
