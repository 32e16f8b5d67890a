"""Type D closed formulas: barred alphabet, vector and spin columns.

Letters are 1 < 2 < ... < n-1 < {n, nbar} < barred(n-1) < ... < barred(1),
with n and nbar incomparable.  Vector columns (length at most n-2) allow
weakly separated consecutive entries: strictly increasing where comparable,
with n/nbar free to alternate.  Spin columns take one letter from each pair
{i, ibar}, sorted, under a parity rule on the position of the n-class entry.
Both kinds place row p at center q^(N+1-2p) and multiply per-row box
monomials; spin rows use half-size boxes.
"""

from __future__ import annotations

from itertools import product
from typing import Dict, Iterable, List, Optional, Tuple, Union

from .engine import FundamentalSpec, order_factors
from .errors import OutOfRangeError, QtcharError
from .laurent import IntLaurent, ONE
from .rootdata import DynkinDiagram
from .yalgebra import (
    Character,
    DrinfeldData,
    Monomial,
    Spectral,
    v_profile,
)


class Letter:
    """A letter i or ibar of the rank-n alphabet."""

    __slots__ = ("value", "barred")

    def __init__(self, value: int, barred: bool = False):
        self.value = value
        self.barred = barred

    def __eq__(self, other) -> bool:
        if not isinstance(other, Letter):
            return NotImplemented
        return (self.value, self.barred) == (other.value, other.barred)

    def __hash__(self) -> int:
        return hash((self.value, self.barred))

    def __str__(self) -> str:
        return f"{self.value}̄" if self.barred else str(self.value)

    __repr__ = __str__


def letter(value: int, barred: bool = False) -> Letter:
    return Letter(value, barred)


def bar(value: int) -> Letter:
    return Letter(value, True)


def alphabet(n: int) -> List[Letter]:
    return [Letter(i) for i in range(1, n + 1)] + [bar(i) for i in range(n, 0, -1)]


def _rank(n: int, x: Letter) -> int:
    """Position along the chain; n and nbar share a rank but stay incomparable."""
    return x.value if not x.barred else 2 * n - x.value


def prec(n: int, x: Letter, y: Letter) -> bool:
    """Strict comparability order; false for the incomparable pair {n, nbar}."""
    if x.value == n and y.value == n and x.barred != y.barred:
        return False
    return _rank(n, x) < _rank(n, y)


def preceq(n: int, x: Letter, y: Letter) -> bool:
    return x == y or prec(n, x, y)


def admissible_step(n: int, x: Letter, y: Letter) -> bool:
    """Valid consecutive pair in a vector column: not (x over-or-equal y)."""
    return not (x == y or prec(n, y, x))


class DColumn:
    """Vector column: letters at center a, rows spaced by q^2."""

    __slots__ = ("entries", "center")

    def __init__(self, entries: Iterable[Letter], center: Spectral):
        self.entries = tuple(entries)
        self.center = center
        if not self.entries:
            raise OutOfRangeError("column needs at least one row")

    @property
    def length(self) -> int:
        return len(self.entries)

    def entry(self, p: int) -> Optional[Letter]:
        """Row p entry (1-based); None outside the column."""
        if 1 <= p <= len(self.entries):
            return self.entries[p - 1]
        return None

    def __eq__(self, other) -> bool:
        if not isinstance(other, DColumn):
            return NotImplemented
        return (self.entries, self.center) == (other.entries, other.center)

    def __hash__(self) -> int:
        return hash((self.entries, self.center, False))

    def __repr__(self) -> str:
        return "[" + ",".join(map(str, self.entries)) + f"]_{self.center}"


class SpinColumn:
    """Half-width column of length n with chirality '+' or '-'."""

    __slots__ = ("entries", "center", "chirality")

    def __init__(self, entries: Iterable[Letter], center: Spectral, chirality: str):
        self.entries = tuple(entries)
        self.center = center
        if chirality not in ("+", "-"):
            raise OutOfRangeError("chirality must be '+' or '-'")
        self.chirality = chirality

    @property
    def length(self) -> int:
        return len(self.entries)

    def entry(self, p: int) -> Optional[Letter]:
        if 1 <= p <= len(self.entries):
            return self.entries[p - 1]
        return None

    def __eq__(self, other) -> bool:
        if not isinstance(other, SpinColumn):
            return NotImplemented
        return (self.entries, self.center, self.chirality) == (
            other.entries,
            other.center,
            other.chirality,
        )

    def __hash__(self) -> int:
        return hash((self.entries, self.center, self.chirality))

    def __repr__(self) -> str:
        body = ",".join(map(str, self.entries))
        return f"sp{self.chirality}[{body}]_{self.center}"


Column = Union[DColumn, SpinColumn]
DTableau = Tuple[Column, ...]


def box_monomial(n: int, x: Letter, a: Spectral) -> Monomial:
    """Full-size box for the vector alphabet."""
    if not (1 <= x.value <= n):
        raise OutOfRangeError(f"letter {x} outside rank {n}")
    i = x.value
    if not x.barred:
        if i <= n - 2:
            e = {(i, a.shift(i - 1)): 1}
            if i >= 2:
                e[(i - 1, a.shift(i))] = -1
            return Monomial(e)
        if i == n - 1:
            return Monomial(
                {
                    (n - 2, a.shift(n - 1)): -1,
                    (n - 1, a.shift(n - 2)): 1,
                    (n, a.shift(n - 2)): 1,
                }
            )
        return Monomial({(n - 1, a.shift(n)): -1, (n, a.shift(n - 2)): 1})
    if i == n:
        return Monomial({(n - 1, a.shift(n - 2)): 1, (n, a.shift(n)): -1})
    if i == n - 1:
        return Monomial(
            {
                (n - 2, a.shift(n - 1)): 1,
                (n - 1, a.shift(n)): -1,
                (n, a.shift(n)): -1,
            }
        )
    e = {(i, a.shift(2 * n - 1 - i)): -1}
    if i >= 2:
        e[(i - 1, a.shift(2 * n - 2 - i))] = 1
    return Monomial(e)


def half_box_monomial(n: int, x: Letter, a: Spectral) -> Monomial:
    """Half-size box for spin columns."""
    if not (1 <= x.value <= n):
        raise OutOfRangeError(f"letter {x} outside rank {n}")
    i = x.value
    if not x.barred:
        if i <= n - 2:
            e = {(i, a.shift(i - 2)): 1}
            if i >= 2:
                e[(i - 1, a.shift(i - 1))] = -1
            return Monomial(e)
        if i == n - 1:
            return Monomial({(n - 2, a.shift(n - 2)): -1})
        return Monomial({(n, a.shift(n - 1)): 1})
    if i == n:
        return Monomial({(n - 1, a.shift(n - 1)): 1})
    if i == n - 1:
        return Monomial({(n - 1, a.shift(n + 1)): -1, (n, a.shift(n + 1)): -1})
    return Monomial.one()


def column_monomial(n: int, col: Column) -> Monomial:
    box = half_box_monomial if isinstance(col, SpinColumn) else box_monomial
    out = Monomial.one()
    N = col.length
    for p, x in enumerate(col.entries, start=1):
        out = out * box(n, x, col.center.shift(N + 1 - 2 * p))
    return out


def column_top(n: int, col: Column) -> Monomial:
    """The dominant monomial heading the column's fundamental character."""
    if isinstance(col, SpinColumn):
        node = n if col.chirality == "+" else n - 1
        return Monomial.y(node, col.center)
    return Monomial.y(col.length, col.center)


def enumerate_fundamental_columns(n: int, N: int, a: Spectral) -> List[DColumn]:
    """All admissible vector columns of length N at center a."""
    if not (1 <= N <= n - 2):
        raise OutOfRangeError(f"vector column length {N} outside 1..{n - 2}")
    letters = alphabet(n)
    cols: List[DColumn] = []

    def extend(prefix: List[Letter]):
        if len(prefix) == N:
            cols.append(DColumn(prefix, a))
            return
        for x in letters:
            if not prefix or admissible_step(n, prefix[-1], x):
                extend(prefix + [x])

    extend([])
    return cols


def l_degree(n: int, col: Column) -> int:
    """Rows opening an (i, ibar) pair at vertical distance n-1-i, i <= n-2.

    Spin columns never contain such a pair, so their degree is zero.
    """
    if isinstance(col, SpinColumn):
        return 0
    count = 0
    for p, x in enumerate(col.entries, start=1):
        if x.barred or x.value > n - 2:
            continue
        partner = col.entry(p + n - 1 - x.value)
        if partner is not None and partner == bar(x.value):
            count += 1
    return count


def fundamental_char_tableaux(d: DynkinDiagram, N: int, a: Spectral) -> Character:
    """Vector fundamental: sum of t^(2 l(T)) m_T over admissible columns."""
    if d.kind != "D":
        raise OutOfRangeError("type D tableaux need a type D diagram")
    n = d.rank
    terms: Dict[Monomial, IntLaurent] = {}
    for col in enumerate_fundamental_columns(n, N, a):
        m = column_monomial(n, col)
        add = IntLaurent.term(1, 2 * l_degree(n, col))
        prev = terms.get(m)
        terms[m] = add if prev is None else prev + add
    return Character(d, terms)


def enumerate_spin(n: int, a: Spectral, chirality: str) -> List[SpinColumn]:
    """The 2^(n-1) spin columns: one letter per {i, ibar} class, sorted,
    with the n-class entry's height parity fixed by the chirality."""
    if n < 4:
        raise OutOfRangeError("spin columns need rank >= 4")
    if chirality not in ("+", "-"):
        raise OutOfRangeError("chirality must be '+' or '-'")
    cols = []
    for signs in product((False, True), repeat=n - 1):
        unbarred = [i for i in range(1, n) if not signs[i - 1]]
        barred = [i for i in range(1, n) if signs[i - 1]]
        pos = len(unbarred) + 1
        even = (n - pos) % 2 == 0
        n_barred = (chirality == "+") != even
        entries = (
            [Letter(i) for i in unbarred]
            + [Letter(n, n_barred)]
            + [bar(i) for i in sorted(barred, reverse=True)]
        )
        cols.append(SpinColumn(entries, a, chirality))
    return cols


def spin_char(d: DynkinDiagram, a: Spectral, chirality: str) -> Character:
    """Spin fundamental: plain sum of the spin column monomials."""
    if d.kind != "D":
        raise OutOfRangeError("type D tableaux need a type D diagram")
    n = d.rank
    terms: Dict[Monomial, IntLaurent] = {}
    for col in enumerate_spin(n, a, chirality):
        m = column_monomial(n, col)
        terms[m] = terms.get(m, IntLaurent.zero()) + ONE
    return Character(d, terms)


def spin_flip(n: int, col: SpinColumn, p: int) -> Optional[SpinColumn]:
    """Replace (i at row p, barred(i+1)) by (i+1, ibar), or (n-1, n) by
    (nbar, barred(n-1)); None when the pattern is absent."""
    x = col.entry(p)
    if x is None or x.barred:
        return None
    entries = list(col.entries)
    if x.value <= n - 1:
        target = bar(x.value + 1)
        if x.value == n - 1 and col.entry(p + 1) == Letter(n):
            entries[p - 1] = bar(n)
            entries[p] = bar(n - 1)
            return SpinColumn(entries, col.center, col.chirality)
        if target in entries:
            j = entries.index(target)
            entries[p - 1] = Letter(x.value + 1)
            entries[j] = bar(x.value)
            return SpinColumn(entries, col.center, col.chirality)
    return None


# ---------------------------------------------------------------------------
# Closed exponent and drop formulas (cross-checks of the generic machinery)


def _ind(flag: bool) -> int:
    return 1 if flag else 0


def closed_u(n: int, col: DColumn, i: int, s: int) -> int:
    """Closed exponent of Y(i, aq^s) for a vector column.

    Row solvers: s = N - 2p + i = N - 2p' - 2 + 2n - i for i < n, and
    s = N - 2p + n - 1 = N - 2p' + n + 1 for i = n; undefined rows
    contribute nothing.
    """
    N = col.length

    def at(p: Optional[int]) -> Optional[Letter]:
        return None if p is None else col.entry(p)

    def solve(total: int) -> Optional[int]:
        if (total - s) % 2:
            return None
        return (total - s) // 2

    if i == n:
        p = solve(N + n - 1)
        pp = solve(N + n + 1)
        return (
            _ind(at(p) == Letter(n - 1))
            + _ind(at(p) == Letter(n))
            - _ind(at(pp) == bar(n))
            - _ind(at(pp) == bar(n - 1))
        )
    p = solve(N + i)
    pp = solve(N - 2 + 2 * n - i)
    out = 0
    if p is not None:
        out += _ind(at(p) == Letter(i)) - _ind(at(p + 1) == Letter(i + 1))
    if pp is not None:
        out += _ind(at(pp) == bar(i + 1)) - _ind(at(pp + 1) == bar(i))
    return out


def closed_v(n: int, col: DColumn, i: int, s: int) -> int:
    """Closed drop multiplicity v at (i, aq^(s+1)) for a vector column
    against its dominant head Y(N, a)."""
    N = col.length

    def at(p: Optional[int]) -> Optional[Letter]:
        return None if p is None else col.entry(p)

    def solve(total: int) -> Optional[int]:
        if (total - s) % 2:
            return None
        return (total - s) // 2

    if i <= n - 2:
        p = solve(N + i)
        pp = solve(N - 2 + 2 * n - i)
        out = 0
        x = at(p)
        if p is not None and x is not None and p <= i and prec(n, Letter(i), x):
            out += 1
        y = at(pp)
        if y is not None and preceq(n, bar(i), y):
            out += 1
        return out
    if i == n - 1:
        p = solve(N + n - 1)
        x = at(p)
        return _ind(x is not None and preceq(n, Letter(n), x))
    p = solve(N + n - 1)
    x = at(p)
    return _ind(x is not None and preceq(n, bar(n), x))


def closed_u_spin(n: int, col: SpinColumn, i: int, s: int) -> int:
    """Closed exponent of Y(i, aq^s) for a spin column.

    Unbarred rows follow s = n - 1 + i - 2p; the node n-1 and n lines sit at
    s = 2n - 2p with the negative contribution one row lower, coming from
    the barred(n-1) half box which carries both variables.
    """

    def at(p: Optional[int]) -> Optional[Letter]:
        return None if p is None else col.entry(p)

    def solve(total: int) -> Optional[int]:
        if (total - s) % 2:
            return None
        return (total - s) // 2

    if i <= n - 2:
        p = solve(n - 1 + i)
        if p is None:
            return 0
        return _ind(at(p) == Letter(i)) - _ind(at(p + 1) == Letter(i + 1))
    p = solve(2 * n)
    if p is None:
        return 0
    head = Letter(n, True) if i == n - 1 else Letter(n)
    return _ind(at(p) == head) - _ind(at(p + 1) == bar(n - 1))


def spin_drop_family(n: int, col: SpinColumn) -> Dict[Tuple[int, Spectral], int]:
    """Root-monomial multiplicities separating a spin column from its head.

    Constructed by unwinding flips: while a barred class remains reachable,
    reverse one flip and record the forward move's closed position, which is
    A(i, aq^(n-2p+i)) for a flip opened at row p on node i <= n-1 and
    A(n, aq^(2n-1-2p)) for the fork flip.  The record is independent of the
    unwinding order because the exponent family is unique.
    """
    a = col.center
    entries = list(col.entries)
    family: Dict[Tuple[int, Spectral], int] = {}

    def add(node: int, qshift: int) -> None:
        key = (node, a.shift(qshift))
        family[key] = family.get(key, 0) + 1

    for _ in range(n * n + 1):
        barred = [x.value for x in entries if x.barred and x.value <= n - 1]
        nclass = next(x for x in entries if x.value == n)
        if not barred and not (nclass.barred and bar(n - 1) in entries):
            return family
        j = max(barred, default=n - 1)
        if j <= n - 2:
            p = entries.index(Letter(j + 1)) + 1
            entries[p - 1] = Letter(j)
            entries[entries.index(bar(j))] = bar(j + 1)
            add(j, n - 2 * p + j)
        elif not nclass.barred:
            p = entries.index(Letter(n)) + 1
            entries[p - 1] = Letter(n - 1)
            entries[entries.index(bar(n - 1))] = bar(n)
            add(n - 1, 2 * n - 1 - 2 * p)
        else:
            p = entries.index(bar(n)) + 1
            entries[p - 1] = Letter(n - 1)
            entries[p] = Letter(n)
            add(n, 2 * n - 1 - 2 * p)
    raise QtcharError("spin unwinding did not terminate")  # pragma: no cover


def closed_v_spin(n: int, col: SpinColumn, i: int, s: int) -> int:
    """Closed drop multiplicity v at (i, aq^s) for a spin column."""
    return spin_drop_family(n, col).get((i, col.center.shift(s)), 0)


# ---------------------------------------------------------------------------
# Product modules


def _column_pool(d: DynkinDiagram, f: FundamentalSpec):
    """Columns realizing one fundamental factor, with monomial and drops."""
    n = d.rank
    if f.node <= n - 2:
        cols: List[Column] = list(enumerate_fundamental_columns(n, f.node, f.spectral))
    elif f.node in (n - 1, n):
        chir = "+" if f.node == n else "-"
        cols = list(enumerate_spin(n, f.spectral, chir))
    else:
        raise OutOfRangeError(f"node {f.node} outside rank {n}")
    out = []
    for col in cols:
        m = column_monomial(n, col)
        out.append((col, m, v_profile(d, m, f.top), l_degree(n, col)))
    return out


def d_tableau(d: DynkinDiagram, t: DTableau, p: DrinfeldData) -> int:
    """Sum of pairwise twist exponents over ordered column pairs of t.

    The columns must realize the ordered factors of p in order.
    """
    n = d.rank
    shape = order_factors(FundamentalSpec(node, a) for node, a in p.roots)
    if len(shape) != len(t):
        raise QtcharError("tableau width differs from the factor count")
    data = []
    for f, col in zip(shape, t):
        m = column_monomial(n, col)
        vp = v_profile(d, m, f.top)
        if vp is None:
            raise QtcharError(f"column {col} does not realize factor {f}")
        data.append((f, m, vp))
    total = 0
    for beta in range(len(data)):
        fb, mb, vb = data[beta]
        for alpha in range(beta):
            fa, ma, va = data[alpha]
            for (i, a), v in va.items():
                total += v * mb.u(i, a.shift(-1))
            for (i, a), v in vb.items():
                total += fa.top.u(i, a.shift(1)) * v
    return total


def standard_char_tableaux(d: DynkinDiagram, p: DrinfeldData) -> Character:
    """Tableaux sum for a product module: sum of t^(2d(T)+2l(T)) m_T."""
    if d.kind != "D":
        raise OutOfRangeError("type D tableaux need a type D diagram")
    shape = order_factors(FundamentalSpec(node, a) for node, a in p.roots)
    pools = [(f, _column_pool(d, f)) for f in shape]
    terms: Dict[Monomial, IntLaurent] = {}
    for choice in product(*(pool for _, pool in pools)):
        mono = Monomial.one()
        expo = 0
        for beta in range(len(choice)):
            _, mb, vb, lb = choice[beta]
            mono = mono * mb
            expo += lb
            for alpha in range(beta):
                fa = pools[alpha][0]
                _, ma, va, _ = choice[alpha]
                for (i, a), v in va.items():
                    expo += v * mb.u(i, a.shift(-1))
                for (i, a), v in vb.items():
                    expo += fa.top.u(i, a.shift(1)) * v
        add = IntLaurent.term(1, 2 * expo)
        prev = terms.get(mono)
        terms[mono] = add if prev is None else prev + add
    return Character(d, terms)


# ---------------------------------------------------------------------------
# Restriction to the finite-type subalgebra


def restricted_character(n: int, N: int) -> Dict[Tuple[Tuple[int, int], ...], int]:
    """Spectral-free character of the classical module with highest weight N.

    Keeps the columns avoiding a barred-n immediately above an n and
    collapses Y(i, a) to y(i) at t = 1.
    """
    if not (1 <= N <= n - 2):
        raise OutOfRangeError(f"vector column length {N} outside 1..{n - 2}")
    out: Dict[Tuple[Tuple[int, int], ...], int] = {}
    for col in enumerate_fundamental_columns(n, N, Spectral("a", 0)):
        if any(
            col.entries[p] == bar(n) and col.entries[p + 1] == Letter(n)
            for p in range(N - 1)
        ):
            continue
        e: Dict[int, int] = {}
        for (node, _), v in column_monomial(n, col).items():
            e[node] = e.get(node, 0) + v
        key = tuple(sorted((i, v) for i, v in e.items() if v))
        out[key] = out.get(key, 0) + 1
    return out


# ---------------------------------------------------------------------------
# Equality of tableau monomials via pair padding


def _row_counts(t: Iterable[DColumn]) -> Dict[Tuple[Spectral, Letter], int]:
    counts: Dict[Tuple[Spectral, Letter], int] = {}
    for col in t:
        N = col.length
        for pnum, x in enumerate(col.entries, start=1):
            key = (col.center.shift(N + 1 - 2 * pnum), x)
            counts[key] = counts.get(key, 0) + 1
    return counts


def is_equivalent(ta: Iterable[DColumn], tb: Iterable[DColumn]) -> bool:
    return _row_counts(ta) == _row_counts(tb)


def pad_pairs_equivalence(
    n: int, ta: Tuple[DColumn, ...], tb: Tuple[DColumn, ...]
) -> Optional[Tuple[Tuple[DColumn, ...], Tuple[DColumn, ...]]]:
    """Pad with column pairs (1..i at c, ibar..1bar at c q^(2-2n)) until the
    tableaux are equivalent; succeeds exactly when the monomials agree.

    Works outward from the largest class: the defect of class i at its
    anchor row determines how many pairs to add, matching the letter counts
    of both the unbarred and the barred member.
    """
    if ta and any(isinstance(c, SpinColumn) for c in ta):
        raise QtcharError("pair padding applies to vector columns only")
    if tb and any(isinstance(c, SpinColumn) for c in tb):
        raise QtcharError("pair padding applies to vector columns only")

    def pair_columns(i: int, c: Spectral) -> Tuple[DColumn, DColumn]:
        up = DColumn([Letter(v) for v in range(1, i + 1)], c)
        down = DColumn([bar(v) for v in range(i, 0, -1)], c.shift(2 - 2 * n))
        return up, down

    # Strip classes from n down: after pairs with larger top letter are
    # accounted for, letter i can only come from the pair topped by i, whose
    # unbarred member places it at row c q^(1-i).  The defect there fixes the
    # pair count; the leftover difference must vanish for equal monomials.
    diff = _row_counts(ta)
    for key, cnt in _row_counts(tb).items():
        diff[key] = diff.get(key, 0) - cnt
        if not diff[key]:
            del diff[key]
    pads_a: List[DColumn] = []
    pads_b: List[DColumn] = []
    for i in range(n, 0, -1):
        hits = [(b, v) for (b, x), v in diff.items() if x == Letter(i)]
        for b, defect in hits:
            up, down = pair_columns(i, b.shift(i - 1))
            if defect > 0:
                pads_b.extend([up, down] * defect)
            else:
                pads_a.extend([up, down] * (-defect))
            for col in (up, down):
                N = col.length
                for pnum, x in enumerate(col.entries, start=1):
                    key = (col.center.shift(N + 1 - 2 * pnum), x)
                    diff[key] = diff.get(key, 0) - defect
                    if not diff[key]:
                        del diff[key]
    if diff:
        return None
    ta2 = tuple(ta) + tuple(pads_a)
    tb2 = tuple(tb) + tuple(pads_b)
    if not is_equivalent(ta2, tb2):
        return None
    return ta2, tb2


def render_text(t: DTableau) -> str:
    """Rows aligned by spectral parameter; spin columns render half width."""
    rows: Dict[Tuple[str, int], str] = {}
    placed = []
    for col in t:
        N = col.length
        cells = {}
        for pnum, x in enumerate(col.entries, start=1):
            b = col.center.shift(N + 1 - 2 * pnum)
            cells[(b.base, b.qexp)] = str(x)
        placed.append((cells, isinstance(col, SpinColumn)))
    keys = sorted({k for cells, _ in placed for k in cells}, key=lambda k: (k[0], -k[1]))
    lines = []
    for key in keys:
        row = []
        for cells, spin in placed:
            v = cells.get(key, "")
            row.append(f"{v:>1}!" if spin and v else f"{v:>2} ")
        lines.append("".join(row) + f"  {Spectral(*key)}")
    return "\n".join(lines)


def column_to_json(col: Column) -> dict:
    out = {
        "entries": [{"value": x.value, "bar": x.barred} for x in col.entries],
        "base": col.center.base,
        "qexp": col.center.qexp,
    }
    if isinstance(col, SpinColumn):
        out["spin"] = col.chirality
    return out
