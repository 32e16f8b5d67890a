"""Inductive computation of t-weighted characters and their labeled graphs.

A fundamental character is grown downward from its top monomial, one
root-monomial drop at a time.  At each depth the coefficient of a monomial
that fails dominance in some direction is forced by the rank-one block
structure in that direction; all forcing directions must agree.  Standard
characters are twisted products of fundamentals taken in an order that keeps
every spectral-parameter ratio below q^2.
"""

from __future__ import annotations

from typing import Dict, Iterable, List, NamedTuple, Tuple

from .errors import (
    InconsistentCharacterError,
    LDominantEncounteredError,
    NoAdmissibleOrderError,
    NotComparableError,
)
from .laurent import ONE, IntLaurent
from .rootdata import DynkinDiagram
from .yalgebra import (
    Character,
    DrinfeldData,
    Monomial,
    Spectral,
    a_monomial,
    drop_degree,
    e_expansion,
    pairing_d,
    v_profile,
)


class FundamentalSpec(NamedTuple):
    """One linear Drinfeld factor: top monomial Y(node, spectral)."""

    node: int
    spectral: Spectral

    @property
    def top(self) -> Monomial:
        return Monomial.y(self.node, self.spectral)


def fundamental_character(
    d: DynkinDiagram, f: FundamentalSpec, max_rounds: int = 100000
) -> Character:
    """Character of a single-factor module, determined by its axioms.

    Raises InconsistentCharacterError if two directions force different
    coefficients, and LDominantEncounteredError if a dominant monomial other
    than the top appears, since induction then underdetermines the result.
    """
    top = f.top
    final: Dict[Monomial, IntLaurent] = {top: ONE}
    # pending[i] accumulates every emitted rank-one block in direction i
    pending: List[Dict[Monomial, IntLaurent]] = [dict() for _ in range(d.rank + 1)]
    levels: Dict[int, List[Monomial]] = {0: [top]}

    def emit(i: int, head: Monomial, c: IntLaurent) -> None:
        dest = pending[i]
        for m, cc in e_expansion(d, head, i)._t.items():
            nv = dest.get(m, IntLaurent.zero()) + c * cc
            if nv:
                dest[m] = nv
            else:
                dest.pop(m, None)

    def flush_level(deg: int) -> None:
        for m in sorted(levels.get(deg, ()), key=Monomial.sort_key):
            a = final[m]
            for i in d.nodes:
                r = a - pending[i].get(m, IntLaurent.zero())
                if not r:
                    continue
                if not m.is_i_dominant(i):
                    raise InconsistentCharacterError(
                        f"residual {r} at non-{i}-dominant {m}"
                    )
                emit(i, m, r)

    flush_level(0)
    deg = 0
    for _ in range(max_rounds):
        deg += 1
        candidates = set()
        exhausted = True
        for i in d.nodes:
            for m in pending[i]:
                dd = drop_degree(d, m, top)
                if dd == deg:
                    candidates.add(m)
                if dd >= deg:
                    exhausted = False
        if exhausted:
            return Character(d, final)
        for m in sorted(candidates, key=Monomial.sort_key):
            forcing = [i for i in d.nodes if not m.is_i_dominant(i)]
            predicted = {
                i: pending[i].get(m, IntLaurent.zero()) for i in d.nodes
            }
            if not forcing:
                if any(predicted[i] for i in d.nodes):
                    raise LDominantEncounteredError(
                        f"dominant monomial {m} appeared below the top; "
                        "the inductive method does not apply"
                    )
                continue
            a = predicted[forcing[0]]
            if any(predicted[i] != a for i in forcing[1:]):
                raise InconsistentCharacterError(
                    f"directions disagree at {m}: "
                    + ", ".join(f"{i}:{predicted[i]}" for i in forcing)
                )
            if a:
                final[m] = a
                levels.setdefault(deg, []).append(m)
        flush_level(deg)
    raise InconsistentCharacterError("closure did not terminate")


def check_zcondition(p1: DrinfeldData, p2: DrinfeldData) -> bool:
    """No root of p1 exceeds a root of p2 by q^n with n >= 2."""
    for _, a in p1.roots:
        for _, b in p2.roots:
            if a.base == b.base and a.qexp - b.qexp >= 2:
                return False
    return True


def order_factors(fs: Iterable[FundamentalSpec]) -> List[FundamentalSpec]:
    """Stable sort by (base, qexp); every ordered prefix pair is then admissible."""
    ordered = sorted(fs, key=lambda f: (f.spectral.base, f.spectral.qexp, f.node))
    for k in range(1, len(ordered)):
        prefix = DrinfeldData([(f.node, f.spectral) for f in ordered[:k]])
        nxt = DrinfeldData([(ordered[k].node, ordered[k].spectral)])
        if not check_zcondition(prefix, nxt):  # pragma: no cover - defensive
            raise NoAdmissibleOrderError("sorted order failed the spectral-gap check")
    return ordered


def twisted_product(
    chi1: Character, mp1: Monomial, chi2: Character, mp2: Monomial, d: DynkinDiagram
) -> Character:
    """Combine two characters with the t^(2d) twist on each pair of terms."""
    v1s = {m: v_profile(d, m, mp1) for m in chi1.support()}
    v2s = {m: v_profile(d, m, mp2) for m in chi2.support()}
    for tag, vs, mp in (("left", v1s, mp1), ("right", v2s, mp2)):
        bad = [m for m, v in vs.items() if v is None]
        if bad:
            raise NotComparableError(f"{tag} term {bad[0]} is not below {mp}")
    terms: Dict[Monomial, IntLaurent] = {}
    for m1, c1 in chi1.items():
        v1 = v1s[m1]
        for m2, c2 in chi2.items():
            tw = 0
            for (i, a), v in v1.items():
                tw += v * m2.u(i, a.shift(-1))
            for (i, a), v in v2s[m2].items():
                tw += mp1.u(i, a.shift(1)) * v
            key = m1 * m2
            add = (c1 * c2).shifted(2 * tw)
            prev = terms.get(key)
            terms[key] = add if prev is None else prev + add
    return Character(d, terms)


def standard_character(d: DynkinDiagram, p: DrinfeldData) -> Character:
    """Left-fold of twisted products over the admissibly ordered factors."""
    factors = order_factors(FundamentalSpec(node, a) for node, a in p.roots)
    if not factors:
        return Character.unit(d)
    cache: Dict[FundamentalSpec, Character] = {}

    def fund(f: FundamentalSpec) -> Character:
        if f not in cache:
            cache[f] = fundamental_character(d, f)
        return cache[f]

    chi = fund(factors[0])
    mp = factors[0].top
    for f in factors[1:]:
        chi = twisted_product(chi, mp, fund(f), f.top, d)
        mp = mp * f.top
    return chi


def rescaled_tilde(d: DynkinDiagram, chi: Character, mp: Monomial) -> Character:
    """Shift each coefficient by t^(-d(m,mp;m,mp)); a post-hoc renormalization."""
    terms = {}
    for m, c in chi.items():
        terms[m] = c.shifted(-pairing_d(d, m, mp, m, mp))
    return Character(chi.diagram, terms)


class GammaGraph:
    """Support of a character with one colored edge per root-monomial drop."""

    __slots__ = ("diagram", "vertices", "edges")

    def __init__(self, diagram: DynkinDiagram, vertices, edges):
        self.diagram = diagram
        self.vertices = dict(vertices)
        self.edges = frozenset(edges)

    def sorted_edges(self) -> List[Tuple[Monomial, Monomial, int, Spectral]]:
        return sorted(
            self.edges,
            key=lambda e: (e[0].sort_key(), e[2], e[3].base, e[3].qexp),
        )

    def edge_labels(self) -> List[Tuple[int, Spectral]]:
        return sorted(((i, a) for (_, _, i, a) in self.edges),
                      key=lambda la: (la[0], la[1].base, la[1].qexp))

    def to_dot(self) -> str:
        lines = ["digraph character {"]
        names = {}
        for k, m in enumerate(sorted(self.vertices, key=Monomial.sort_key)):
            names[m] = f"v{k}"
            coeff = self.vertices[m]
            label = str(m) if coeff == ONE else f"({coeff}) {m}"
            lines.append(f'  v{k} [label="{label}"];')
        for m1, m2, i, a in self.sorted_edges():
            lines.append(f'  {names[m1]} -> {names[m2]} [label="{i},{a}"];')
        lines.append("}")
        return "\n".join(lines)


def gamma_graph(chi: Character) -> GammaGraph:
    """All-pairs edge detection over the character's support."""
    d = chi.diagram
    support = set(chi._t)
    qexps: Dict[str, set] = {}
    for m in support:
        for (_, a), _ in m.items():
            qexps.setdefault(a.base, set()).add(a.qexp)
    edges = []
    for m1 in support:
        for base, ks in qexps.items():
            if not ks:
                continue
            for s in range(min(ks) - 1, max(ks) + 2):
                a = Spectral(base, s)
                for i in d.nodes:
                    m2 = m1 * a_monomial(d, i, a).inv()
                    if m2 in support:
                        edges.append((m1, m2, i, a))
    return GammaGraph(d, {m: chi.coeff(m) for m in support}, edges)
