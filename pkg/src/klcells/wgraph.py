"""W-graphs of cells and the tau_s action on the truncated cell module.

Vertices are the cell elements up to a length cutoff, carrying their left
descent sets I_x; an undirected edge {x,y} stores mu(x,y) when it is nonzero
and the descent sets are incomparable.  On the module spanned by the
vertices, tau_s acts by -1 on vertices with s in I_x and by

    tau_s x = q x + q^(1/2) sum_{y: s in I_y} mu(x,y) y

otherwise.  A vertex is `interior` when all of its mu-partners among cell
elements up to depth+1 already lie in the truncation; relation checks are
restricted to columns whose support stays interior, so truncation never
produces false failures.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .coxeter import CoxeterSystem, Element, sort_key
from .laurent import LaurentPoly
from . import cells as _cells


@dataclass(frozen=True)
class WGraphVertex:
    id: int
    element: Element
    descents: frozenset[int]
    interior: bool


@dataclass
class WGraph:
    sys: CoxeterSystem
    label: _cells.CellLabel
    depth: int
    vertices: list[WGraphVertex]
    edges: dict[tuple[int, int], int]  # (id_a < id_b) -> mu
    index: dict[Element, int] = field(default_factory=dict)

    def __post_init__(self):
        if not self.index:
            self.index = {v.element: v.id for v in self.vertices}

    def neighbors(self, vid: int) -> list[tuple[int, int]]:
        out = []
        for (a, b), m in self.edges.items():
            if a == vid:
                out.append((b, m))
            elif b == vid:
                out.append((a, m))
        return sorted(out)


def _lines_ending_at(sys: CoxeterSystem, g: int, depth: int) -> list[Element]:
    """All lines whose unique word ends with g, length <= depth (the type-(i)
    cell of g), grown by prepending non-commuting letters."""
    if depth < 1:
        return []
    out: list[Element] = [(g,)]
    frontier: list[Element] = [(g,)]
    for _ in range(depth - 1):
        nxt = []
        for u in frontier:
            for s in range(sys.n):
                if s != u[0] and not sys.commutes(s, u[0]):
                    nxt.append((s,) + u)
        out.extend(nxt)
        frontier = nxt
    return out


def _cell_elements(sys: CoxeterSystem, label: _cells.CellLabel, depth: int) -> list[Element]:
    if label.kind == _cells.UNIT:
        return [()]
    if label.kind == _cells.TYPE_I:
        return sorted(_lines_ending_at(sys, label.generator, depth), key=sort_key)
    out = [x for x in sys.ball(depth) if _cells.classify_left(sys, x) == label]
    return sorted(out, key=sort_key)


def build_wgraph(sys: CoxeterSystem, table, label: _cells.CellLabel, depth: int) -> WGraph:
    """W-graph of the given cell truncated at the given length."""
    if sys.kind != "polygon" or sys.n < 5:
        raise ValueError("W-graphs are implemented for P_n with n >= 5")
    if label.kind == _cells.TYPE_I and not (
        label.generator is not None and 0 <= label.generator < sys.n
    ):
        raise ValueError(f"unsupported label {label}")
    if label.kind == _cells.TYPE_II:
        if label.d is None or sys.invert(label.d) != label.d:
            raise ValueError(f"unsupported label {label}")

    elements = _cell_elements(sys, label, depth)
    extended = _cell_elements(sys, label, depth + 1)
    in_graph = set(elements)

    def mu_of(a: Element, b: Element) -> int:
        return table.mu(a, b)

    partners: dict[Element, list[Element]] = {x: [] for x in elements}
    for i, x in enumerate(extended):
        for y in extended[i + 1 :]:
            if (len(y) - len(x)) % 2 == 0:
                continue
            if mu_of(x, y) == 0:
                continue
            if x in partners:
                partners[x].append(y)
            if y in partners:
                partners[y].append(x)

    vertices = []
    for i, x in enumerate(elements):
        interior = all(p in in_graph for p in partners[x])
        vertices.append(
            WGraphVertex(i, x, sys.left_descents(x), interior)
        )
    index = {v.element: v.id for v in vertices}

    edges: dict[tuple[int, int], int] = {}
    for v in vertices:
        for p in partners[v.element]:
            j = index.get(p)
            if j is None or j <= v.id:
                continue
            if v.descents == sys.left_descents(p):
                continue  # equal descent sets carry no edge
            edges[(v.id, j)] = mu_of(v.element, p)
    return WGraph(sys, label, depth, vertices, edges, index)


@dataclass
class TauMatrix:
    generator: int
    size: int
    columns: list[dict[int, LaurentPoly]]  # columns[j][i] = entry (i,j)

    def entry(self, i: int, j: int) -> LaurentPoly:
        return self.columns[j].get(i, LaurentPoly.zero())


_Q = LaurentPoly({2: 1})
_V = LaurentPoly({1: 1})
_MINUS_ONE = LaurentPoly({0: -1})


def tau_action(graph: WGraph, s: int) -> TauMatrix:
    """Matrix of tau_s on the truncated cell module."""
    cols: list[dict[int, LaurentPoly]] = []
    for v in graph.vertices:
        col: dict[int, LaurentPoly] = {}
        if s in v.descents:
            col[v.id] = _MINUS_ONE
        else:
            col[v.id] = _Q
            for j, m in graph.neighbors(v.id):
                if s in graph.vertices[j].descents:
                    col[j] = _V * m
        cols.append(col)
    return TauMatrix(s, len(graph.vertices), cols)


def _apply(tau: TauMatrix, vec: dict[int, LaurentPoly]) -> dict[int, LaurentPoly]:
    out: dict[int, LaurentPoly] = {}
    for j, c in vec.items():
        for i, m in tau.columns[j].items():
            cur = out.get(i)
            s = m * c if cur is None else cur + m * c
            if s:
                out[i] = s
            else:
                out.pop(i, None)
    return out


@dataclass
class RelationReport:
    passed: bool
    checked_columns: int
    violations: list[dict] = field(default_factory=list)


def check_relations(graph: WGraph, edge_override: dict | None = None) -> RelationReport:
    """Verify the quadratic relation (tau_s - q)(tau_s + 1) = 0 on interior
    columns and tau_s tau_t = tau_t tau_s for commuting pairs on columns whose
    mu-support is itself interior (so every entry used is complete).

    `edge_override` replaces selected edge weights; used as a negative
    control in tests."""
    g = graph
    if edge_override:
        g = WGraph(
            graph.sys,
            graph.label,
            graph.depth,
            graph.vertices,
            {e: edge_override.get(e, m) for e, m in graph.edges.items()},
            graph.index,
        )
    sys = g.sys
    taus = {s: tau_action(g, s) for s in range(sys.n)}
    interior_ids = {v.id for v in g.vertices if v.interior}
    closed_ids = {
        v.id
        for v in g.vertices
        if v.interior
        and all(j in interior_ids for j, _ in g.neighbors(v.id))
    }
    violations = []
    checked = 0
    q_minus_1 = LaurentPoly({2: 1, 0: -1})
    for s, tau in taus.items():
        for vid in sorted(interior_ids):
            checked += 1
            vec = {vid: LaurentPoly.one()}
            one_step = _apply(tau, vec)
            two_step = _apply(tau, one_step)
            rhs = {i: c * q_minus_1 for i, c in one_step.items()}
            for i, c in vec.items():
                cur = rhs.get(i)
                sc = c * _Q if cur is None else cur + c * _Q
                if sc:
                    rhs[i] = sc
                else:
                    rhs.pop(i, None)
            if two_step != rhs:
                violations.append({"relation": "quadratic", "s": s, "vertex": vid})
    for s, t in sorted(sys.commuting):
        ts, tt = taus[s], taus[t]
        for vid in sorted(closed_ids):
            checked += 1
            vec = {vid: LaurentPoly.one()}
            st = _apply(ts, _apply(tt, vec))
            tst = _apply(tt, _apply(ts, vec))
            if st != tst:
                violations.append(
                    {"relation": "commutation", "s": s, "t": t, "vertex": vid}
                )
    return RelationReport(not violations, checked, violations)


def is_tree(graph: WGraph) -> bool:
    return cycle_census(graph) == 0 and _components(graph) <= 1


def cycle_census(graph: WGraph) -> int:
    """Independent cycle count |E| - |V| + #components."""
    return len(graph.edges) - len(graph.vertices) + _components(graph)


def _components(graph: WGraph) -> int:
    parent = list(range(len(graph.vertices)))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for a, b in graph.edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    return len({find(i) for i in range(len(graph.vertices))})


def export(graph: WGraph, fmt: str) -> bytes:
    """Serialize deterministically as DOT or JSON (1-based labels)."""
    if not graph.vertices:
        raise ValueError("cannot export an empty W-graph")
    if fmt == "json":
        payload = {
            "cell": graph.label.to_json(),
            "depth": graph.depth,
            "vertices": [
                {
                    "id": v.id,
                    "word": [s + 1 for s in v.element],
                    "descents": sorted(s + 1 for s in v.descents),
                    "interior": v.interior,
                }
                for v in graph.vertices
            ],
            "edges": [
                {"a": a, "b": b, "mu": m}
                for (a, b), m in sorted(graph.edges.items())
            ],
        }
        return (json.dumps(payload, indent=2) + "\n").encode()
    if fmt == "dot":
        lines = ["graph wgraph {"]
        for v in graph.vertices:
            label = "{" + ",".join(str(s + 1) for s in sorted(v.descents)) + "}"
            style = "" if v.interior else ", style=dashed"
            lines.append(f'  n{v.id} [label="{label}"{style}];')
        for (a, b), m in sorted(graph.edges.items()):
            attr = "" if m == 1 else f' [label="{m}"]'
            lines.append(f"  n{a} -- n{b}{attr};")
        lines.append("}")
        return ("\n".join(lines) + "\n").encode()
    raise ValueError(f"unknown export format {fmt!r}")


def relabel_cyclic(graph: WGraph, table, shift: int = 1) -> WGraph:
    """The image of a type-(i) W-graph under the cyclic generator rotation
    i -> i + shift (mod n); used to exhibit equivalences between the cells."""
    sys = graph.sys
    n = sys.n
    label = graph.label
    if label.kind != _cells.TYPE_I:
        raise ValueError("cyclic relabeling is exposed for type-(i) graphs")
    g2 = (label.generator + shift) % n
    return build_wgraph(sys, table, _cells.type_i(g2), graph.depth)


def graphs_match_under_rotation(a: WGraph, b: WGraph, shift: int) -> bool:
    """Edge-for-edge comparison of a and b after rotating a's vertex words."""
    n = a.sys.n
    mapping = {}
    for v in a.vertices:
        rotated = tuple((s + shift) % n for s in v.element)
        j = b.index.get(rotated)
        if j is None:
            return False
        mapping[v.id] = j
    if len(mapping) != len(b.vertices):
        return False
    remapped = {
        tuple(sorted((mapping[x], mapping[y]))): m for (x, y), m in a.edges.items()
    }
    return remapped == b.edges
