"""Type A closed formulas: box chain, column tableaux, and tableaux sums.

A column of length N centered at a occupies the spectral string
a q^(N-1), a q^(N-3), ..., a q^(1-N) (row p sits at a q^(N+1-2p)) and maps
each row to a letter in 1..n+1; lookups off the support return 0.  The
character of a product module is the sum over column-increasing tableaux of
t^(2d(T)) m_T with d summed over ordered column pairs.
"""

from __future__ import annotations

from itertools import combinations, product
from typing import Dict, Iterable, Iterator, List, Optional, Tuple

from .engine import FundamentalSpec, order_factors
from .errors import OutOfRangeError
from .laurent import IntLaurent, ONE
from .rootdata import DynkinDiagram
from .yalgebra import (
    Character,
    DrinfeldData,
    Monomial,
    Spectral,
    pairing_d,
    v_profile,
)


class AColumn:
    """Strict or general column: letters i_1..i_N at center a."""

    __slots__ = ("entries", "center")

    def __init__(self, entries: Iterable[int], center: Spectral):
        self.entries = tuple(entries)
        self.center = center
        if not self.entries:
            raise OutOfRangeError("column needs at least one row")

    @property
    def length(self) -> int:
        return len(self.entries)

    def support(self) -> List[Spectral]:
        N = self.length
        return [self.center.shift(N + 1 - 2 * p) for p in range(1, N + 1)]

    def value_at(self, b: Spectral) -> int:
        """Entry in the row at spectral parameter b, 0 off the support."""
        if b.base != self.center.base:
            return 0
        twice_p = self.length + 1 - (b.qexp - self.center.qexp)
        if twice_p % 2 or not (1 <= twice_p // 2 <= self.length):
            return 0
        return self.entries[twice_p // 2 - 1]

    def __eq__(self, other) -> bool:
        if not isinstance(other, AColumn):
            return NotImplemented
        return (self.entries, self.center) == (other.entries, other.center)

    def __hash__(self) -> int:
        return hash((self.entries, self.center))

    def __repr__(self) -> str:
        body = ",".join(str(e) for e in self.entries)
        return f"[{body}]_{self.center}"


Tableau = Tuple[AColumn, ...]


def box_monomial(n: int, i: int, a: Spectral) -> Monomial:
    """Letter i at spectral a: Y(i-1, aq^i)^-1 Y(i, aq^(i-1)), ends truncated."""
    if not (1 <= i <= n + 1):
        raise OutOfRangeError(f"letter {i} outside 1..{n + 1}")
    e: Dict[Tuple[int, Spectral], int] = {}
    if i <= n:
        e[(i, a.shift(i - 1))] = 1
    if i >= 2:
        e[(i - 1, a.shift(i))] = -1
    return Monomial(e)


def column_monomial(n: int, col: AColumn) -> Monomial:
    out = Monomial.one()
    N = col.length
    for p, letter in enumerate(col.entries, start=1):
        out = out * box_monomial(n, letter, col.center.shift(N + 1 - 2 * p))
    return out


def tableau_monomial(n: int, t: Tableau) -> Monomial:
    out = Monomial.one()
    for col in t:
        out = out * column_monomial(n, col)
    return out


def tableau_monomial_by_counts(n: int, t: Tableau) -> Monomial:
    """Same monomial from row counts: exponent of Y(i,a) counts letter i at
    a q^(1-i) minus letter i+1 at a q^(-1-i)."""
    counts: Dict[Tuple[int, Spectral], int] = {}
    for col in t:
        for b in col.support():
            key = (col.value_at(b), b)
            counts[key] = counts.get(key, 0) + 1
    e: Dict[Tuple[int, Spectral], int] = {}
    for (letter, b), c in counts.items():
        if letter <= n:
            key = (letter, b.shift(letter - 1))
            e[key] = e.get(key, 0) + c
        if letter >= 2:
            key = (letter - 1, b.shift(letter))
            e[key] = e.get(key, 0) - c
    return Monomial(e)


def enumerate_fundamental_columns(n: int, N: int, a: Spectral) -> List[AColumn]:
    """All strictly increasing columns of length N over 1..n+1."""
    if not (1 <= N <= n):
        raise OutOfRangeError(f"column length {N} outside 1..{n}")
    return [AColumn(c, a) for c in combinations(range(1, n + 2), N)]


def fundamental_char_tableaux(d: DynkinDiagram, N: int, a: Spectral) -> Character:
    """Sum of column monomials over the strict columns, all coefficients 1."""
    if d.kind != "A":
        raise OutOfRangeError("type A tableaux need a type A diagram")
    terms: Dict[Monomial, IntLaurent] = {}
    for col in enumerate_fundamental_columns(d.rank, N, a):
        m = column_monomial(d.rank, col)
        terms[m] = terms.get(m, IntLaurent.zero()) + ONE
    return Character(d, terms)


def s_offset(ca: AColumn, cb: AColumn) -> Optional[int]:
    """Half the q-gap between column tops, None when not commensurable."""
    if ca.center.base != cb.center.base:
        return None
    diff = (ca.center.qexp + ca.length) - (cb.center.qexp + cb.length)
    if diff % 2:
        return None
    return diff // 2


def d_columns(ca: AColumn, cb: AColumn) -> int:
    """Closed pair statistic.

    Counts rows where cb's letter is pinched strictly between ca's letters in
    consecutive rows, with boundary corrections one row below ca's bottom.
    Zero whenever the supports live in different q^2-classes.
    """
    s = s_offset(ca, cb)
    if s is None:
        return 0
    total = 0
    for b in cb.support():
        jb = cb.value_at(b)
        if ca.value_at(b.shift(2)) < jb < ca.value_at(b):
            total += 1
    below = cb.value_at(ca.center.shift(-1 - ca.length))
    if ca.length < below <= ca.entries[-1]:
        total -= 1
    if s >= 1 and ca.length < below:
        total += 1
    return total


def d_columns_via_pairing(d: DynkinDiagram, ca: AColumn, cb: AColumn) -> int:
    """The same statistic through the generic twist pairing."""
    n = d.rank
    ma, mb = column_monomial(n, ca), column_monomial(n, cb)
    pa = Monomial.y(ca.length, ca.center) if ca.length <= n else Monomial.one()
    pb = Monomial.y(cb.length, cb.center) if cb.length <= n else Monomial.one()
    return pairing_d(d, ma, pa, mb, pb)


def shape_of(p: DrinfeldData) -> List[FundamentalSpec]:
    return order_factors(FundamentalSpec(node, a) for node, a in p.roots)


def enumerate_tableaux(n: int, shape: List[FundamentalSpec]) -> Iterator[Tableau]:
    """Column-increasing tableaux of the given shape, streamed."""
    pools = [enumerate_fundamental_columns(n, f.node, f.spectral) for f in shape]
    return (tuple(cols) for cols in product(*pools))


def standard_char_tableaux(d: DynkinDiagram, p: DrinfeldData) -> Character:
    """Tableaux sum for a product module: sum of t^(2d(T)) m_T."""
    if d.kind != "A":
        raise OutOfRangeError("type A tableaux need a type A diagram")
    n = d.rank
    shape = shape_of(p)
    pools = []
    for f in shape:
        cols = []
        for col in enumerate_fundamental_columns(n, f.node, f.spectral):
            m = column_monomial(n, col)
            cols.append((col, m, v_profile(d, m, f.top)))
        pools.append((f, cols))
    terms: Dict[Monomial, IntLaurent] = {}
    for choice in product(*(cols for _, cols in pools)):
        mono = Monomial.one()
        twist = 0
        for beta in range(len(choice)):
            _, mb, vb = choice[beta]
            mono = mono * mb
            for alpha in range(beta):
                fa = pools[alpha][0]
                _, ma, va = choice[alpha]
                for (i, a), v in va.items():
                    twist += v * mb.u(i, a.shift(-1))
                for (i, a), v in vb.items():
                    twist += fa.top.u(i, a.shift(1)) * v
        add = IntLaurent.term(1, 2 * twist)
        prev = terms.get(mono)
        terms[mono] = add if prev is None else prev + add
    return Character(d, terms)


# ---------------------------------------------------------------------------
# Equivalence, padding, and dominant column forms


def _row_counts(t: Tableau) -> Dict[Tuple[Spectral, int], int]:
    counts: Dict[Tuple[Spectral, int], int] = {}
    for col in t:
        for b in col.support():
            key = (b, col.value_at(b))
            counts[key] = counts.get(key, 0) + 1
    return counts


def is_equivalent(ta: Tableau, tb: Tableau) -> bool:
    """Same letter multiset in every row."""
    return _row_counts(ta) == _row_counts(tb)


def full_column(n: int, bottom_center: Spectral) -> AColumn:
    return AColumn(range(1, n + 2), bottom_center)


def pad_to_equivalent(
    n: int, ta: Tableau, tb: Tableau
) -> Optional[Tuple[Tableau, Tableau]]:
    """Pad with full columns 1..n+1 until the tableaux are equivalent.

    Succeeds exactly when the two monomials agree: the letter-i count at
    a q^(2n+2-2i) must then be independent of i, and that common defect says
    how many full columns to add on each side.
    """
    ca, cb = _row_counts(ta), _row_counts(tb)

    def diff(i: int, b: Spectral) -> int:
        return ca.get((b, i), 0) - cb.get((b, i), 0)

    anchors = set()
    for b, i in set(ca) | set(cb):
        anchors.add(b.shift(2 * i - 2 * n - 2))
    pads_a: List[AColumn] = []
    pads_b: List[AColumn] = []
    for anchor in anchors:
        vals = {diff(i, anchor.shift(2 * n + 2 - 2 * i)) for i in range(1, n + 2)}
        if len(vals) != 1:
            return None
        defect = vals.pop()
        col = full_column(n, anchor.shift(n))
        if defect > 0:
            pads_b.extend([col] * defect)
        elif defect < 0:
            pads_a.extend([col] * (-defect))
    ta2 = ta + tuple(pads_a)
    tb2 = tb + tuple(pads_b)
    if not is_equivalent(ta2, tb2):
        return None
    return ta2, tb2


def ldominant_column_form(n: int, t: Tableau) -> Optional[Tableau]:
    """An equivalent-after-padding tableau whose columns are initial segments.

    Present exactly when the tableau monomial is dominant: each variable
    Y(N,a) with positive exponent contributes columns 1..N centered at a.
    """
    m = tableau_monomial(n, t)
    if not m.is_l_dominant():
        return None
    cols = []
    for (node, a), v in m.items():
        cols.extend([AColumn(range(1, node + 1), a)] * v)
    target = tuple(cols)
    padded = pad_to_equivalent(n, t, target)
    if padded is None:
        return None
    return padded[1]


def render_text(t: Tableau) -> str:
    """Rows aligned by spectral parameter, highest q-power on top."""
    rows: Dict[Tuple[str, int], List[str]] = {}
    supports = [col.support() for col in t]
    all_b = sorted({b for sup in supports for b in sup}, key=lambda b: (b.base, -b.qexp))
    for b in all_b:
        cells = []
        for col in t:
            v = col.value_at(b)
            cells.append(f"{v:>2}" if v else "  ")
        rows[(b.base, b.qexp)] = cells
    lines = []
    for (base, qexp), cells in rows.items():
        label = str(Spectral(base, qexp))
        lines.append(" ".join(cells) + f"   {label}")
    return "\n".join(lines)


def tableau_to_json(t: Tableau) -> list:
    return [
        {"entries": list(col.entries), "base": col.center.base, "qexp": col.center.qexp}
        for col in t
    ]
