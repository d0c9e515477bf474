"""Exact PBW straightening in the universal enveloping algebra.

Elements are dicts mapping normal-form monomials to Fraction coefficients.
A monomial is a tuple of (basis id, exponent) pairs, strictly ascending in
the engine's generator order; odd generators never carry an exponent above
one because their squares rewrite through the bracket.  The order always
places lowering generators first, then Cartan generators, then raising
generators.  The arrangement inside the lowering block is configurable:
witness bases and orbit propagation both need a chosen generator in the
rightmost slot, and right division is only defined against that slot.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .rootdata import Weight, wsum, wzero
from .superalgebra import BracketTable

Monomial = Tuple[Tuple[int, int], ...]
UEAElement = Dict[Monomial, Fraction]
GenSpec = Union[int, str, tuple]


class NotDivisible(ArithmeticError):
    """Right division requested with an exponent some monomial lacks."""


class WrongOrder(ValueError):
    """The operation needs a different generator in the rightmost slot."""


class Inhomogeneous(ValueError):
    """A single weight was requested for an element that has none."""


def el_zero() -> UEAElement:
    return {}


def el_one() -> UEAElement:
    return {(): Fraction(1)}


def el_scale(x: UEAElement, c) -> UEAElement:
    c = Fraction(c)
    if not c:
        return {}
    return {m: c * v for m, v in x.items()}


def el_add(x: UEAElement, y: UEAElement) -> UEAElement:
    out = dict(x)
    _add_into(out, y)
    return out


def el_sub(x: UEAElement, y: UEAElement) -> UEAElement:
    out = dict(x)
    _add_into(out, y, Fraction(-1))
    return out


def _add_into(dst: Dict[Monomial, Fraction], src: UEAElement, c: Fraction = Fraction(1)) -> None:
    for m, v in src.items():
        new = dst.get(m, Fraction(0)) + c * v
        if new:
            dst[m] = new
        else:
            dst.pop(m, None)


@dataclass(eq=False)
class PBWOrder:
    sequence: Tuple[int, ...]
    rank: Dict[int, int]
    n_neg: int

    @property
    def rightmost_negative(self) -> int:
        return self.sequence[self.n_neg - 1]

    @property
    def key(self) -> Tuple[int, ...]:
        return self.sequence


def _resolve_f(table: BracketTable, spec: GenSpec) -> int:
    if isinstance(spec, int):
        if not 0 <= spec < table.n_pos:
            raise WrongOrder(f"{spec} is not a lowering generator id")
        return spec
    return table.f_gen(spec)


def make_order(
    table: BracketTable,
    tail: Sequence[GenSpec] = (),
    negative_sequence: Optional[Sequence[GenSpec]] = None,
) -> PBWOrder:
    """Build a generator order.

    By default the lowering generators are sorted by root height and then
    by enumeration index.  `tail` moves the listed generators to the end of
    the lowering block, in the given order.  `negative_sequence` instead
    prescribes the whole lowering block explicitly.
    """
    alg = table.alg
    P = table.n_pos
    if negative_sequence is not None:
        negs = [_resolve_f(table, s) for s in negative_sequence]
        if sorted(negs) != list(range(P)):
            raise WrongOrder("negative_sequence must list every lowering generator once")
        if tail:
            raise WrongOrder("tail and negative_sequence are mutually exclusive")
    else:
        tail_ids = [_resolve_f(table, s) for s in tail]
        if len(set(tail_ids)) != len(tail_ids):
            raise WrongOrder("tail entries must be distinct")
        negs = [i for i in sorted(range(P), key=lambda i: (alg.heights[i], i)) if i not in tail_ids]
        negs.extend(tail_ids)
    seq = negs + [table.h_id(j) for j in range(table.n_cartan)]
    seq += [
        table.e_id(i)
        for i in sorted(range(P), key=lambda i: (alg.heights[i], i))
    ]
    rank = {bid: pos for pos, bid in enumerate(seq)}
    return PBWOrder(sequence=tuple(seq), rank=rank, n_neg=P)


@dataclass(eq=False)
class PBWEngine:
    table: BracketTable
    order: PBWOrder
    _cache: Dict[Tuple[Monomial, int], UEAElement] = field(default_factory=dict)

    def gen(self, spec: GenSpec, exp: int = 1) -> UEAElement:
        bid = spec if isinstance(spec, int) else self.table.f_gen(spec)
        if exp < 0:
            raise ValueError("negative exponent")
        if exp == 0:
            return el_one()
        if self.table.basis[bid].odd and exp > 1:
            out = el_one()
            for _ in range(exp):
                out = self._el_times_gen(out, bid)
            return out
        return {((bid, exp),): Fraction(1)}

    def word(self, factors: Sequence[Tuple[int, int]]) -> UEAElement:
        """Product of generator powers taken left to right."""
        out = el_one()
        for bid, exp in factors:
            for _ in range(exp):
                out = self._el_times_gen(out, bid)
        return out

    def multiply(self, a: UEAElement, b: UEAElement) -> UEAElement:
        out: Dict[Monomial, Fraction] = {}
        for mono, coef in b.items():
            cur = a
            for bid, exp in mono:
                for _ in range(exp):
                    cur = self._el_times_gen(cur, bid)
            _add_into(out, cur, coef)
        return out

    def import_element(self, x: UEAElement) -> UEAElement:
        """Re-straighten an element produced under another generator order."""
        out: Dict[Monomial, Fraction] = {}
        for mono, coef in x.items():
            _add_into(out, self.word(mono), coef)
        return out

    def _el_times_gen(self, el: UEAElement, g: int) -> UEAElement:
        out: Dict[Monomial, Fraction] = {}
        for mono, coef in el.items():
            _add_into(out, self.mono_times_gen(mono, g), coef)
        return out

    def mono_times_gen(self, m: Monomial, g: int) -> UEAElement:
        key = (m, g)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        table = self.table
        rank = self.order.rank
        if not m:
            res: UEAElement = {((g, 1),): Fraction(1)}
        else:
            x, a = m[-1]
            if rank[x] < rank[g]:
                res = {m + ((g, 1),): Fraction(1)}
            elif x == g:
                if not table.basis[g].odd:
                    res = {m[:-1] + ((g, a + 1),): Fraction(1)}
                else:
                    # odd square: x*x = [x, x] / 2
                    assert a == 1, "odd generators are exponent one in normal form"
                    head = m[:-1]
                    res = {}
                    for z, c in table.bracket(g, g).items():
                        _add_into(res, self.mono_times_gen(head, z), c / 2)
            else:
                base = m[:-1] + ((x, a - 1),) if a > 1 else m[:-1]
                sign = Fraction(-1 if table.basis[x].odd and table.basis[g].odd else 1)
                res = {}
                _add_into(res, self._el_times_gen(self.mono_times_gen(base, g), x), sign)
                for z, c in table.bracket(x, g).items():
                    _add_into(res, self.mono_times_gen(base, z), c)
        self._cache[key] = res
        return res

    def right_divide(self, x: UEAElement, g: GenSpec, p: int) -> UEAElement:
        """Divide by g^p on the right; every monomial must carry g^p."""
        bid = _resolve_f(self.table, g)
        if bid != self.order.rightmost_negative:
            raise WrongOrder(
                f"{self.table.basis[bid].name} is not the rightmost lowering generator"
            )
        if self.table.basis[bid].odd:
            raise WrongOrder("right division needs an even generator")
        if p < 0:
            raise ValueError("negative power")
        if p == 0:
            return dict(x)
        out: Dict[Monomial, Fraction] = {}
        for mono, coef in x.items():
            if not mono or mono[-1][0] != bid or mono[-1][1] < p:
                raise NotDivisible(
                    f"monomial {self.render_monomial(mono)} lacks "
                    f"{self.table.basis[bid].name}^{p}"
                )
            e = mono[-1][1] - p
            out[mono[:-1] + ((bid, e),) if e else mono[:-1]] = coef
        back = self.multiply(out, self.gen(bid, p))
        assert back == x, "right division failed to verify"
        return out

    def monomial_weight(self, m: Monomial) -> Weight:
        out = wzero(self.table.alg.rank)
        for bid, exp in m:
            w = self.table.basis[bid].weight
            out = wsum(out, tuple(exp * c for c in w))
        return out

    def element_weight(self, x: UEAElement) -> Weight:
        if not x:
            raise Inhomogeneous("the zero element has no weight")
        weights = {self.monomial_weight(m) for m in x}
        if len(weights) > 1:
            raise Inhomogeneous(f"mixed weights {sorted(weights)}")
        return weights.pop()

    def render_monomial(self, m: Monomial) -> str:
        if not m:
            return "1"
        parts = []
        for bid, exp in m:
            name = self.table.basis[bid].name
            parts.append(name if exp == 1 else f"{name}^{exp}")
        return " ".join(parts)

    def render(self, x: UEAElement, suffix: str = "") -> str:
        if not x:
            return "0"
        keyed = sorted(x, key=lambda m: tuple((self.order.rank[g], e) for g, e in m))
        parts = []
        for m in keyed:
            c = x[m]
            body = self.render_monomial(m)
            if suffix:
                body = f"{body} {suffix}" if m else suffix
            if c == 1:
                parts.append(body)
            elif c == -1:
                parts.append(f"-{body}")
            else:
                parts.append(f"{c} {body}")
        out = parts[0]
        for term in parts[1:]:
            out += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
        return out
