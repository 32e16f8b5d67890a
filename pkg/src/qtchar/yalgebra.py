"""Sparse monomial and character algebra over the variables Y(i, a q^k).

Monomials are finitely supported exponent maps keyed by (node, spectral
parameter).  A spectral parameter is an opaque base symbol times an integer
power of q; parameters with different bases are never commensurable.
Characters map monomials to integer Laurent polynomials in t.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, NamedTuple, Optional, Tuple

from .errors import (
    MixedBaseError,
    NotComparableError,
    NotDecomposableError,
    NotIDominantError,
    NotLDominantError,
)
from .laurent import ONE, IntLaurent, t_binomial
from .rootdata import DynkinDiagram, Weight


class Spectral(NamedTuple):
    """A spectral parameter base*q^qexp with an opaque base symbol."""

    base: str
    qexp: int

    def shift(self, k: int) -> "Spectral":
        return Spectral(self.base, self.qexp + k)

    def __str__(self) -> str:
        if self.qexp == 0:
            return self.base
        if self.qexp == 1:
            return f"{self.base}q"
        return f"{self.base}q^{self.qexp}"


def spectral(base: str = "a", qexp: int = 0) -> Spectral:
    return Spectral(base, qexp)


def _var_key(item):
    (node, a), exp = item
    return (a.base, a.qexp, node)


class Monomial:
    """Product of Y(i, a)^e factors; the empty product is the unit.

    Immutable, hashable, with a canonical variable order (base, qexp, node)
    used for deterministic iteration and serialization.
    """

    __slots__ = ("_e", "_key", "_hash")

    def __init__(self, exps: Dict[Tuple[int, Spectral], int] | None = None):
        e = {k: v for k, v in (exps or {}).items() if v != 0}
        self._e = e
        self._key = tuple(sorted(e.items(), key=_var_key))
        self._hash = hash(self._key)

    @staticmethod
    def one() -> "Monomial":
        return _UNIT

    @staticmethod
    def y(node: int, a: Spectral, exp: int = 1) -> "Monomial":
        return Monomial({(node, a): exp})

    @staticmethod
    def from_factors(factors: Iterable[Tuple[int, Spectral, int]]) -> "Monomial":
        e: Dict[Tuple[int, Spectral], int] = {}
        for node, a, exp in factors:
            k = (node, a)
            e[k] = e.get(k, 0) + exp
        return Monomial(e)

    def items(self) -> Tuple[Tuple[Tuple[int, Spectral], int], ...]:
        return self._key

    def u(self, node: int, a: Spectral) -> int:
        """Exponent of Y(node, a), zero when absent."""
        return self._e.get((node, a), 0)

    def is_unit(self) -> bool:
        return not self._e

    def __mul__(self, other: "Monomial") -> "Monomial":
        if not self._e:
            return other
        if not other._e:
            return self
        e = dict(self._e)
        for k, v in other._e.items():
            e[k] = e.get(k, 0) + v
        return Monomial(e)

    def inv(self) -> "Monomial":
        return Monomial({k: -v for k, v in self._e.items()})

    def __pow__(self, k: int) -> "Monomial":
        return Monomial({key: v * k for key, v in self._e.items()})

    def is_i_dominant(self, i: int) -> bool:
        return all(v >= 0 for (node, _), v in self._e.items() if node == i)

    def is_l_dominant(self) -> bool:
        return all(v >= 0 for v in self._e.values())

    def bases(self) -> List[str]:
        return sorted({a.base for (_, a) in self._e})

    def single_base(self) -> Optional[str]:
        """The unique base of the support, None for the unit monomial."""
        bs = self.bases()
        if len(bs) > 1:
            raise MixedBaseError(f"monomial mixes bases {bs}")
        return bs[0] if bs else None

    def weight(self) -> Weight:
        c: Dict[int, int] = {}
        for (node, _), v in self._e.items():
            c[node] = c.get(node, 0) + v
        return Weight(c)

    def sort_key(self):
        return tuple((a.base, a.qexp, node, v) for (node, a), v in self._key)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Monomial):
            return NotImplemented
        return self._key == other._key

    def __hash__(self) -> int:
        return self._hash

    def __str__(self) -> str:
        if not self._key:
            return "1"
        parts = []
        for (node, a), v in self._key:
            s = f"Y({node},{a})"
            if v != 1:
                s += f"^{v}"
            parts.append(s)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"<{self}>"


_UNIT = Monomial()


def u_exponent(m: Monomial, i: int, a: Spectral) -> int:
    return m.u(i, a)


def is_i_dominant(m: Monomial, i: int) -> bool:
    return m.is_i_dominant(i)


def is_l_dominant(m: Monomial) -> bool:
    return m.is_l_dominant()


def a_monomial(d: DynkinDiagram, i: int, a: Spectral) -> Monomial:
    """The root monomial: Y(i,aq) Y(i,aq^-1) times Y(j,a)^-1 over neighbors j."""
    d._check_node(i)
    e = {(i, a.shift(1)): 1, (i, a.shift(-1)): 1}
    for j in d.neighbors(i):
        e[(j, a)] = -1
    return Monomial(e)


# ---------------------------------------------------------------------------
# The order on monomials and the root-monomial exponent family


def v_profile(
    d: DynkinDiagram, m: Monomial, mp: Monomial
) -> Optional[Dict[Tuple[int, Spectral], int]]:
    """Nonnegative exponents v with m = mp * prod A(i,a)^-v, or None.

    Solved per base by the forward recurrence in ascending q-exponent, then
    certified by rebuilding the ratio; the certificate makes the routine
    self-checking, so any scan-order mistake would surface as None.
    """
    delta: Dict[str, Dict[Tuple[int, int], int]] = {}
    ratio = m * mp.inv()
    if ratio.is_unit():
        return {}
    for (node, a), exp in ratio.items():
        delta.setdefault(a.base, {})[(node, a.qexp)] = exp

    v: Dict[Tuple[int, Spectral], int] = {}
    for base, dl in delta.items():
        qexps = [s for (_, s) in dl]
        smin, smax = min(qexps), max(qexps)
        vb: Dict[Tuple[int, int], int] = {}
        for s in range(smin, smax + 1):
            for i in d.nodes:
                val = -dl.get((i, s), 0) - vb.get((i, s - 1), 0)
                val += sum(vb.get((j, s), 0) for j in d.neighbors(i))
                if val < 0:
                    return None
                if val:
                    vb[(i, s + 1)] = val
        # certificate: the candidate family must reproduce the ratio exactly
        rebuilt: Dict[Tuple[int, int], int] = {}
        for (i, s), val in vb.items():
            rebuilt[(i, s + 1)] = rebuilt.get((i, s + 1), 0) - val
            rebuilt[(i, s - 1)] = rebuilt.get((i, s - 1), 0) - val
            for j in d.neighbors(i):
                rebuilt[(j, s)] = rebuilt.get((j, s), 0) + val
        rebuilt = {k: c for k, c in rebuilt.items() if c}
        if rebuilt != dl:
            return None
        for (i, s), val in vb.items():
            v[(i, Spectral(base, s))] = val
    return v


def leq(d: DynkinDiagram, m: Monomial, mp: Monomial) -> bool:
    """Whether m is mp divided by a product of root monomials."""
    return v_profile(d, m, mp) is not None


@lru_cache(maxsize=None)
def _height_weights(d: DynkinDiagram) -> Tuple[Tuple[int, ...], int]:
    """Integer weights W with C @ W = scale * (1,...,1), C the Cartan matrix.

    Any monomial drop m -> m * A(i,a)^-1 lowers sum(u * W) by exactly scale,
    giving a cheap strictly monotone height for the monomial order.
    """
    n = d.rank
    rows = [
        [Fraction(d.cartan_entry(i, j)) for j in d.nodes] + [Fraction(1)]
        for i in d.nodes
    ]
    for col in range(n):
        piv = next(r for r in range(col, n) if rows[r][col] != 0)
        rows[col], rows[piv] = rows[piv], rows[col]
        pv = rows[col][col]
        rows[col] = [x / pv for x in rows[col]]
        for r in range(n):
            if r != col and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[col])]
    sol = [rows[i][n] for i in range(n)]
    scale = 1
    for f in sol:
        scale = scale * f.denominator // _gcd(scale, f.denominator)
    weights = tuple(int(f * scale) for f in sol)
    return weights, scale


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _height(d: DynkinDiagram, m: Monomial) -> int:
    w, _ = _height_weights(d)
    return sum(v * w[node - 1] for (node, _), v in m.items())


def drop_degree(d: DynkinDiagram, m: Monomial, mp: Monomial) -> int:
    """Total number of root-monomial factors separating m from mp.

    Only meaningful when m <= mp; equals sum(v_profile(m, mp)).
    """
    w, scale = _height_weights(d)
    gap = _height(d, mp) - _height(d, m)
    q, r = divmod(gap, scale)
    if r:
        raise NotComparableError("monomials differ outside the root lattice")
    return q


# ---------------------------------------------------------------------------
# Characters


class Character:
    """Finitely supported map from monomials to Laurent coefficients."""

    __slots__ = ("diagram", "_t")

    def __init__(self, diagram: DynkinDiagram, terms: Dict[Monomial, IntLaurent] | None = None):
        self.diagram = diagram
        self._t = {m: c for m, c in (terms or {}).items() if c}

    @staticmethod
    def unit(d: DynkinDiagram) -> "Character":
        return Character(d, {Monomial.one(): ONE})

    @staticmethod
    def of_monomial(d: DynkinDiagram, m: Monomial, c: IntLaurent = ONE) -> "Character":
        return Character(d, {m: c})

    def coeff(self, m: Monomial) -> IntLaurent:
        return self._t.get(m, IntLaurent.zero())

    def support(self) -> List[Monomial]:
        return sorted(self._t, key=Monomial.sort_key)

    def items(self) -> List[Tuple[Monomial, IntLaurent]]:
        return [(m, self._t[m]) for m in self.support()]

    def __len__(self) -> int:
        return len(self._t)

    def __contains__(self, m: Monomial) -> bool:
        return m in self._t

    def __eq__(self, other) -> bool:
        if not isinstance(other, Character):
            return NotImplemented
        return self._t == other._t

    def __add__(self, other: "Character") -> "Character":
        t = dict(self._t)
        for m, c in other._t.items():
            t[m] = t.get(m, IntLaurent.zero()) + c
        return Character(self.diagram, t)

    def __sub__(self, other: "Character") -> "Character":
        t = dict(self._t)
        for m, c in other._t.items():
            t[m] = t.get(m, IntLaurent.zero()) - c
        return Character(self.diagram, t)

    def scaled(self, c: IntLaurent) -> "Character":
        return Character(self.diagram, {m: v * c for m, v in self._t.items()})

    def times_monomial(self, m0: Monomial) -> "Character":
        return Character(self.diagram, {m0 * m: c for m, c in self._t.items()})

    def added_term(self, m: Monomial, c: IntLaurent) -> "Character":
        t = dict(self._t)
        t[m] = t.get(m, IntLaurent.zero()) + c
        return Character(self.diagram, t)

    def __str__(self) -> str:
        if not self._t:
            return "0"
        return " + ".join(f"({c}) {m}" for m, c in self.items())

    __repr__ = __str__


def specialize_t(chi: Character, t0: int) -> Dict[Monomial, int]:
    """Evaluate every coefficient at the integer t0, dropping zeros."""
    out = {}
    for m, c in chi.items():
        v = c.eval_at(t0)
        if v:
            out[m] = v
    return out


def forget_spectral(chi: Character) -> Dict[Tuple[Tuple[int, int], ...], IntLaurent]:
    """Collapse Y(i, a) -> y(i); keys are sorted (node, exponent) tuples."""
    out: Dict[Tuple[Tuple[int, int], ...], IntLaurent] = {}
    for m, c in chi.items():
        e: Dict[int, int] = {}
        for (node, _), v in m.items():
            e[node] = e.get(node, 0) + v
        key = tuple(sorted((i, v) for i, v in e.items() if v))
        out[key] = out.get(key, IntLaurent.zero()) + c
    return {k: v for k, v in out.items() if v}


# ---------------------------------------------------------------------------
# Rank-one expansion blocks and their greedy inversion


def e_expansion(d: DynkinDiagram, m: Monomial, i: int) -> Character:
    """Expand an i-dominant monomial into its rank-one character block.

    For each spectral parameter a with u = u(i,a) > 0 the block carries the
    factor sum_r t^(r(u-r)) [u,r]_t A(i,aq)^-r; the leading term is m itself
    with coefficient 1 and every other term is strictly lower.
    """
    if not m.is_i_dominant(i):
        raise NotIDominantError(f"{m} is not {i}-dominant")
    chi = Character.of_monomial(d, m)
    for (node, a), u in m.items():
        if node != i or u <= 0:
            continue
        am = a_monomial(d, i, a.shift(1)).inv()
        factor: Dict[Monomial, IntLaurent] = {}
        step = Monomial.one()
        for r in range(u + 1):
            factor[step] = t_binomial(u, r).shifted(r * (u - r))
            step = step * am
        terms: Dict[Monomial, IntLaurent] = {}
        for m1, c1 in chi._t.items():
            for m2, c2 in factor.items():
                key = m1 * m2
                prev = terms.get(key)
                terms[key] = c1 * c2 if prev is None else prev + c1 * c2
        chi = Character(d, terms)
    return chi


def e_decompose(
    d: DynkinDiagram, chi: Character, i: int, max_blocks: int = 100000
) -> List[Tuple[Monomial, IntLaurent]]:
    """Write chi as a combination of rank-one blocks in direction i.

    Repeatedly takes a monomial of maximal height (hence maximal for the
    order), requires it to be i-dominant, and strips its block.  Raises
    NotDecomposableError when a maximal remaining monomial is not i-dominant.
    """
    rem = dict(chi._t)
    blocks: List[Tuple[Monomial, IntLaurent]] = []
    while rem:
        if len(blocks) > max_blocks:
            raise NotDecomposableError("block extraction did not terminate")
        top = max(rem, key=lambda m: (_height(d, m), m.sort_key()))
        if not top.is_i_dominant(i):
            raise NotDecomposableError(f"maximal monomial {top} is not {i}-dominant")
        c = rem[top]
        blocks.append((top, c))
        for m, cc in e_expansion(d, top, i)._t.items():
            nv = rem.get(m, IntLaurent.zero()) - c * cc
            if nv:
                rem[m] = nv
            else:
                rem.pop(m, None)
    return blocks


def pairing_d(
    d: DynkinDiagram, m1: Monomial, mp1: Monomial, m2: Monomial, mp2: Monomial
) -> int:
    """The twist exponent pairing two ordered character terms.

    Sums v(m1,mp1) at (i,aq) against u(m2) at (i,a), plus u(mp1) at (i,aq)
    against v(m2,mp2) at (i,a).  Both arguments must lie below their tops.
    """
    v1 = v_profile(d, m1, mp1)
    if v1 is None:
        raise NotComparableError(f"{m1} is not below {mp1}")
    v2 = v_profile(d, m2, mp2)
    if v2 is None:
        raise NotComparableError(f"{m2} is not below {mp2}")
    total = 0
    for (i, a), v in v1.items():
        total += v * m2.u(i, a.shift(-1))
    for (i, a), v in v2.items():
        total += mp1.u(i, a.shift(1)) * v
    return total


# ---------------------------------------------------------------------------
# Dominant monomials as root data of polynomial tuples


class DrinfeldData:
    """Multiset of (node, spectral) roots, one per linear factor."""

    __slots__ = ("roots",)

    def __init__(self, roots: Iterable[Tuple[int, Spectral]] = ()):
        self.roots = tuple(sorted(roots, key=lambda r: (r[1].base, r[1].qexp, r[0])))

    def __eq__(self, other) -> bool:
        if not isinstance(other, DrinfeldData):
            return NotImplemented
        return self.roots == other.roots

    def __hash__(self) -> int:
        return hash(self.roots)

    def __len__(self) -> int:
        return len(self.roots)

    def __repr__(self) -> str:
        return f"DrinfeldData({list(self.roots)!r})"


def monomial_from_rational_tuple(num: DrinfeldData, den: DrinfeldData) -> Monomial:
    """Product of Y(i,a) over numerator roots and Y(i,b)^-1 over denominator roots."""
    e: Dict[Tuple[int, Spectral], int] = {}
    for node, a in num.roots:
        e[(node, a)] = e.get((node, a), 0) + 1
    for node, b in den.roots:
        e[(node, b)] = e.get((node, b), 0) - 1
    return Monomial(e)


def drinfeld_from_monomial(m: Monomial) -> DrinfeldData:
    """Inverse of the root dictionary on dominant monomials."""
    if not m.is_l_dominant():
        raise NotLDominantError(f"{m} has a negative exponent")
    roots = []
    for (node, a), v in m.items():
        roots.extend([(node, a)] * v)
    return DrinfeldData(roots)


def is_right_negative(m: Monomial, base: str | None = None) -> bool:
    """Whether every variable at the maximal q-exponent has a negative power.

    The unit monomial is not right negative by convention.
    """
    if m.is_unit():
        return False
    b = m.single_base()
    if base is not None and b != base:
        raise MixedBaseError(f"monomial is supported on base {b!r}, not {base!r}")
    smax = max(a.qexp for (_, a), _ in m.items())
    return all(v < 0 for (_, a), v in m.items() if a.qexp == smax)


# ---------------------------------------------------------------------------
# JSON serialization (schema shared with the command-line tool)


def character_to_json(chi: Character) -> list:
    out = []
    for m, c in chi.items():
        mono = [
            {"node": node, "base": a.base, "qexp": a.qexp, "exp": v}
            for (node, a), v in m.items()
        ]
        coeff = [{"texp": e, "c": v} for e, v in c.items()]
        out.append({"monomial": mono, "coeff": coeff})
    return out


def character_from_json(d: DynkinDiagram, data: list) -> Character:
    terms: Dict[Monomial, IntLaurent] = {}
    for entry in data:
        m = Monomial.from_factors(
            (v["node"], Spectral(v["base"], v["qexp"]), v["exp"]) for v in entry["monomial"]
        )
        c = IntLaurent({p["texp"]: p["c"] for p in entry["coeff"]})
        terms[m] = terms.get(m, IntLaurent.zero()) + c
    return Character(d, terms)
