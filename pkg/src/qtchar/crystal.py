"""Crystal structure on single-base monomials.

The statistics eps/phi read partial sums of the exponents along the
q-exponent line for one node; the operators multiply by a root monomial at a
position read off those statistics.  On the parity-restricted set (node-i
exponents vanish at q-degrees congruent to the node's 2-coloring) the
operators satisfy the crystal axioms, and the closure of a dominant monomial
under the lowering operators realizes the highest-weight crystal.

A sign variant with the two inverses exchanged (under which the lowering
operator would raise the weight) is kept behind ``literal=True`` so the two
orientations can be compared; the weight-lowering one is the default.
"""

from __future__ import annotations

import os
from typing import Dict, FrozenSet, List, Optional, Tuple

from .errors import CapExceededError, NotInParitySetError, NotLDominantError, QtcharError
from .rootdata import DynkinDiagram, Weight, bipartite_coloring, simple_root
from .yalgebra import Monomial, Spectral, a_monomial

DEFAULT_VERTEX_CAP = 10**6


def _node_line(m: Monomial, i: int) -> List[Tuple[int, int]]:
    """Sorted (qexp, exponent) pairs for node i; demands a single base."""
    m.single_base()
    return sorted((a.qexp, v) for (node, a), v in m.items() if node == i)


def eps_n(m: Monomial, i: int, n: int) -> int:
    """Negated sum of node-i exponents at q-degrees >= n."""
    return -sum(v for k, v in _node_line(m, i) if k >= n)


def phi_n(m: Monomial, i: int, n: int) -> int:
    """Sum of node-i exponents at q-degrees <= n."""
    return sum(v for k, v in _node_line(m, i) if k <= n)


def eps(m: Monomial, i: int) -> int:
    line = _node_line(m, i)
    best, run = 0, 0
    for _, v in reversed(line):
        run -= v
        best = max(best, run)
    return best


def phi(m: Monomial, i: int) -> int:
    line = _node_line(m, i)
    best, run = 0, 0
    for _, v in line:
        run += v
        best = max(best, run)
    return best


def p_index(m: Monomial, i: int) -> Optional[int]:
    """Largest n where the eps partial sum peaks; None when eps is zero."""
    e = eps(m, i)
    if e == 0:
        return None
    return max(k for k, _ in _node_line(m, i) if eps_n(m, i, k) == e)


def q_index(m: Monomial, i: int) -> Optional[int]:
    """Smallest n where the phi partial sum peaks; None when phi is zero."""
    f = phi(m, i)
    if f == 0:
        return None
    return min(k for k, _ in _node_line(m, i) if phi_n(m, i, k) == f)


def weight(m: Monomial) -> Weight:
    return m.weight()


def kashiwara_e(
    d: DynkinDiagram, m: Monomial, i: int, literal: bool = False
) -> Optional[Monomial]:
    """Raising operator: multiply by A(i, q^(p-1)); None when eps is zero."""
    p = p_index(m, i)
    if p is None:
        return None
    step = a_monomial(d, i, Spectral(m.single_base(), p - 1))
    return m * (step.inv() if literal else step)


def kashiwara_f(
    d: DynkinDiagram, m: Monomial, i: int, literal: bool = False
) -> Optional[Monomial]:
    """Lowering operator: divide by A(i, q^(q+1)); None when phi is zero."""
    qn = q_index(m, i)
    if qn is None:
        return None
    step = a_monomial(d, i, Spectral(m.single_base(), qn + 1))
    return m * (step if literal else step.inv())


def in_parity_set(d: DynkinDiagram, m: Monomial, coloring: Dict[int, int]) -> bool:
    """Node-i exponents must vanish at q-degrees congruent to the node color."""
    return all(
        a.qexp % 2 != coloring[node] % 2 for (node, a), _ in m.items()
    )


def fit_coloring(d: DynkinDiagram, m: Monomial) -> Dict[int, int]:
    """A two-coloring making m parity-admissible; prefers color 0 at node 1.

    Connected diagrams admit exactly two colorings, so at most the flip of
    the normalized one can work.
    """
    base = bipartite_coloring(d)
    for coloring in (base, {i: 1 - c for i, c in base.items()}):
        if in_parity_set(d, m, coloring):
            return coloring
    raise NotInParitySetError(f"{m} fits neither two-coloring")


class CrystalGraph:
    """Closure of a highest monomial under the lowering operators."""

    __slots__ = ("diagram", "coloring", "highest", "vertices", "edges")

    def __init__(self, diagram, coloring, highest, vertices, edges):
        self.diagram = diagram
        self.coloring = dict(coloring)
        self.highest = highest
        self.vertices: FrozenSet[Monomial] = frozenset(vertices)
        self.edges: FrozenSet[Tuple[Monomial, Monomial, int]] = frozenset(edges)

    def sorted_vertices(self) -> List[Monomial]:
        return sorted(self.vertices, key=Monomial.sort_key)

    def sorted_edges(self) -> List[Tuple[Monomial, Monomial, int]]:
        return sorted(self.edges, key=lambda e: (e[0].sort_key(), e[2]))

    def canonical_hash(self) -> Tuple:
        """Shape of the colored graph, invariant under relabeling monomials.

        Vertices are numbered by breadth-first traversal from the highest
        vertex, exploring lowering edges in color order; the resulting edge
        list is a complete isomorphism invariant because each color is a
        partial function on vertices.
        """
        order = {self.highest: 0}
        queue = [self.highest]
        out: Dict[Monomial, Dict[int, Monomial]] = {}
        for src, dst, i in self.edges:
            out.setdefault(src, {})[i] = dst
        shape = []
        while queue:
            v = queue.pop(0)
            for i in sorted(out.get(v, {})):
                w = out[v][i]
                if w not in order:
                    order[w] = len(order)
                    queue.append(w)
                shape.append((order[v], i, order[w]))
        return (len(self.vertices), tuple(sorted(shape)))

    def to_dot(self) -> str:
        lines = ["digraph crystal {"]
        names = {}
        for k, m in enumerate(self.sorted_vertices()):
            names[m] = f"v{k}"
            lines.append(f'  v{k} [label="{m}"];')
        for m1, m2, i in self.sorted_edges():
            lines.append(f'  {names[m1]} -> {names[m2]} [label="{i}"];')
        lines.append("}")
        return "\n".join(lines)


def generate_crystal(
    d: DynkinDiagram,
    m0: Monomial,
    coloring: Dict[int, int] | None = None,
    cap: int | None = None,
) -> CrystalGraph:
    """Close a dominant parity-admissible monomial under lowering operators."""
    if not m0.is_l_dominant():
        raise NotLDominantError(f"{m0} is not dominant")
    if coloring is None:
        coloring = fit_coloring(d, m0)
    elif not in_parity_set(d, m0, coloring):
        raise NotInParitySetError(f"{m0} violates the given coloring")
    if cap is None:
        cap = int(os.environ.get("QCHAR_MAX_VERTICES", DEFAULT_VERTEX_CAP))
    seen = {m0}
    queue = [m0]
    edges = []
    while queue:
        m = queue.pop()
        for i in d.nodes:
            m2 = kashiwara_f(d, m, i)
            if m2 is None:
                continue
            edges.append((m, m2, i))
            if m2 not in seen:
                if len(seen) >= cap:
                    raise CapExceededError(f"crystal exceeded {cap} vertices")
                seen.add(m2)
                queue.append(m2)
    return CrystalGraph(d, coloring, m0, seen, edges)


def verify_crystal_axioms(g: CrystalGraph) -> List[str]:
    """Check the defining identities on every vertex; returns violations."""
    d = g.diagram
    problems = []
    edge_set = g.edges
    for m in g.sorted_vertices():
        wt = weight(m)
        for i in d.nodes:
            if phi(m, i) - eps(m, i) != wt.coeff(i):
                problems.append(f"phi-eps mismatch at {m}, direction {i}")
            m2 = kashiwara_f(d, m, i)
            if m2 is None:
                continue
            if (m, m2, i) not in edge_set and m2 in g.vertices:
                problems.append(f"missing edge {m} -{i}-> {m2}")
            if kashiwara_e(d, m2, i) != m:
                problems.append(f"raise(lower) != id at {m}, direction {i}")
            if weight(m2) != wt - simple_root(d, i):
                problems.append(f"weight step wrong at {m}, direction {i}")
            if eps(m2, i) != eps(m, i) + 1:
                problems.append(f"eps step wrong at {m}, direction {i}")
            if phi(m2, i) != phi(m, i) - 1:
                problems.append(f"phi step wrong at {m}, direction {i}")
    for m, m2, i in g.sorted_edges():
        if kashiwara_f(d, m, i) != m2:
            problems.append(f"edge {m} -{i}-> {m2} is not a lowering step")
    return problems


def layer_from_orientation(
    d: DynkinDiagram, oriented: List[Tuple[int, int]]
) -> Dict[int, int]:
    """Node layers with a unit drop along each oriented edge, minimum zero.

    Every orientation of a tree admits such a labeling; it is found by
    propagation and verified on each edge, so cyclic inputs that admit none
    are rejected.
    """
    arrows = {(i, j) for i, j in oriented}
    if {(min(e), max(e)) for e in arrows} != set(d.edges):
        raise QtcharError("orientation must cover exactly the diagram edges")
    level = {1: 0}
    stack = [1]
    while stack:
        i = stack.pop()
        for j in d.neighbors(i):
            step = 1 if (j, i) in arrows else -1
            if j not in level:
                level[j] = level[i] + step
                stack.append(j)
    for i, j in arrows:
        if level[i] - level[j] != 1:
            raise QtcharError("orientation admits no unit-drop labeling")
    low = min(level.values())
    return {i: v - low for i, v in level.items()}
