"""Left/right/two-sided cell classification for the polygon groups P_n.

The non-unit left cells of P_n (n >= 5) come in two families: one cell per
generator g, containing exactly the lines that end at g, and one cell per
distinguished involution d = u^-1 t t' u (t t' a commuting pair, u a segment
or empty), containing the elements whose precell representative rewrites to
the word t t' u by the two word moves

    A:  t1 t2 t3 x -> t2 t3 x    (t1t2 and t2t3 commuting, t1 != t3)
    B:  s1 s2 u t1 t2 x -> t1 t2 x   (both pairs commuting, u a segment or empty)

`classify_left` strips the leading segment (precell representative), runs the
moves to exhaustion on the decomposition word, and labels the cell by the
resulting involution.  `verify_partition` cross-checks the predicted
partition against actual Kazhdan-Lusztig data on a ball: descent-set
constancy, mu-chain witnesses, and strongly connected components of the
one-step left-order digraph.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .coxeter import CoxeterSystem, Element, IDENTITY, POLYGON, sort_key
from .wordgeom import (
    Segment,
    decompose,
    is_line,
    leading_segment,
    precell_rep,
    segment_at_word,
)

UNIT = "unit"
TYPE_I = "typeI"
TYPE_II = "typeII"

TWO_SIDED_UNIT = "unit"
TWO_SIDED_ONE_DIM = "one-dim"
TWO_SIDED_TWO_DIM = "two-dim"


@dataclass(frozen=True)
class CellLabel:
    kind: str
    generator: int | None = None  # TypeI
    d: Element | None = None      # TypeII: the distinguished involution

    def __str__(self) -> str:
        if self.kind == UNIT:
            return "unit"
        if self.kind == TYPE_I:
            return f"typeI g={self.generator + 1}"
        return f"typeII d=[{','.join(str(s + 1) for s in self.d)}]"

    def to_json(self) -> dict:
        if self.kind == UNIT:
            return {"cell": "unit"}
        if self.kind == TYPE_I:
            return {"cell": "typeI", "g": self.generator + 1}
        return {"cell": "typeII", "d": [s + 1 for s in self.d]}


def unit_label() -> CellLabel:
    return CellLabel(UNIT)


def type_i(g: int) -> CellLabel:
    return CellLabel(TYPE_I, generator=g)


def type_ii(d: Element) -> CellLabel:
    return CellLabel(TYPE_II, d=d)


@dataclass(frozen=True)
class MoveTrace:
    steps: tuple[tuple[str, tuple, tuple], ...]  # (tag, before, after)


class ClassificationError(RuntimeError):
    """The move rewriting reached a word outside the expected final shape."""


def move_a(sys: CoxeterSystem, w) -> tuple | None:
    """Strip t1 from a reduced word t1 t2 t3 x when t1t2 and t2t3 commute."""
    w = tuple(w)
    if len(w) < 3:
        return None
    t1, t2, t3 = w[0], w[1], w[2]
    if t1 != t3 and sys.commutes(t1, t2) and sys.commutes(t2, t3):
        return w[1:]
    return None


def move_b(sys: CoxeterSystem, w) -> tuple | None:
    """Strip s1 s2 u from a reduced word s1 s2 u t1 t2 x (u a segment of the
    word or empty, both leading pairs commuting)."""
    w = tuple(w)
    if len(w) < 4:
        return None
    if not sys.commutes(w[0], w[1]):
        return None
    for k in range(0, len(w) - 3):
        if k > 0 and not segment_at_word(sys, w, 2, 2 + k):
            continue
        if sys.commutes(w[2 + k], w[3 + k]):
            return w[2 + k :]
    return None


def _run_moves(sys: CoxeterSystem, word: tuple) -> tuple[tuple, MoveTrace]:
    steps = []
    while True:
        nxt = move_a(sys, word)
        if nxt is not None:
            steps.append(("A", word, nxt))
            word = nxt
            continue
        nxt = move_b(sys, word)
        if nxt is not None:
            steps.append(("B", word, nxt))
            word = nxt
            continue
        break
    return word, MoveTrace(tuple(steps))


def _require_polygon(sys: CoxeterSystem) -> None:
    if sys.kind != POLYGON or sys.n < 5:
        raise ValueError("cell classification is implemented for P_n with n >= 5")


def classify_left_with_trace(sys: CoxeterSystem, x: Element) -> tuple[CellLabel, MoveTrace]:
    _require_polygon(sys)
    if not x:
        return unit_label(), MoveTrace(())
    if is_line(sys, x):
        return type_i(x[-1]), MoveTrace(())
    rep = precell_rep(sys, x).rep
    word = decompose(sys, rep).word()
    final, trace = _run_moves(sys, word)
    if len(final) < 2 or not sys.commutes(final[0], final[1]):
        raise ClassificationError(f"moves ended on unexpected word {final}")
    if len(final) > 2 and not segment_at_word(sys, final, 2, len(final)):
        raise ClassificationError(f"final word {final} has no trailing segment")
    pair = tuple(sorted(final[:2]))
    u = final[2:]
    d = sys.reduce(u[::-1] + pair + u)
    return type_ii(d), trace


def classify_left(sys: CoxeterSystem, x: Element) -> CellLabel:
    return classify_left_with_trace(sys, x)[0]


def classify_right(sys: CoxeterSystem, x: Element) -> CellLabel:
    """Right cells are left cells of inverses."""
    return classify_left(sys, sys.invert(x))


def classify_two_sided(sys: CoxeterSystem, x: Element) -> str:
    kind = classify_left(sys, x).kind
    if kind == UNIT:
        return TWO_SIDED_UNIT
    if kind == TYPE_I:
        return TWO_SIDED_ONE_DIM
    return TWO_SIDED_TWO_DIM


def le_left_step(table, y: Element, w: Element) -> bool:
    """One-step generator of the left preorder: mu(y,w) != 0 and
    L(y) not contained in L(w)."""
    if y == w:
        return False
    sys = table.sys
    if table.mu(y, w) == 0:
        return False
    return not (sys.left_descents(y) <= sys.left_descents(w))


@dataclass(frozen=True)
class MoveBInstance:
    """A move-B pattern s1 s2 u t1 t2 x; words are generator tuples."""

    s1: int
    s2: int
    u: tuple
    t1: int
    t2: int
    x: tuple

    def word(self) -> tuple:
        return (self.s1, self.s2) + tuple(self.u) + (self.t1, self.t2) + tuple(self.x)

    def w_star(self) -> tuple:
        u = tuple(self.u)
        return (
            (self.t1,)
            + u[::-1]
            + (self.s1, self.s2)
            + u
            + (self.t1, self.t2)
            + tuple(self.x)
        )

    def w0(self) -> tuple:
        return (self.t1, self.t2) + tuple(self.x)


def mu_witness_move_b(table, inst: MoveBInstance, cap: int | None = None) -> int:
    """mu(w0, w*) for the supplementary element w* = t1 u^-1 s1 s2 u t1 t2 x
    attached to a move-B instance, computed directly from the KL polynomial."""
    sys = table.sys
    if not sys.commutes(inst.s1, inst.s2) or not sys.commutes(inst.t1, inst.t2):
        raise ValueError("instance pairs must commute")
    word = inst.word()
    if len(sys.reduce(word)) != len(word):
        raise ValueError("instance word is not reduced")
    if inst.u and not segment_at_word(sys, word, 2, 2 + len(inst.u)):
        raise ValueError("u is not a segment of the instance word")
    wstar = sys.reduce(inst.w_star())
    if len(wstar) != len(inst.w_star()):
        raise ValueError("w* is not reduced for this instance")
    if cap is not None and len(wstar) > cap:
        raise ValueError(f"w* length {len(wstar)} exceeds cap {cap}")
    return table.mu(sys.reduce(inst.w0()), wstar)


# -- verification suite ----------------------------------------------------


def _tarjan_scc(adj: dict) -> list[set]:
    """Iterative Tarjan over a dict-of-iterables adjacency."""
    index: dict = {}
    low: dict = {}
    on_stack: set = set()
    stack: list = []
    sccs: list[set] = []
    counter = 0
    for root in adj:
        if root in index:
            continue
        work = [(root, iter(adj.get(root, ())))]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(adj.get(w, ()))))
                    advanced = True
                    break
                if w in on_stack:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                comp = set()
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.add(w)
                    if w == v:
                        break
                sccs.append(comp)
    return sccs


@dataclass
class PartitionReport:
    radius: int
    passed: bool
    element_count: int
    type_i_labels: int
    type_ii_labels: int
    two_sided_classes: int
    mu_edges: int
    failures: list[dict] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "radius": self.radius,
            "passed": self.passed,
            "elements": self.element_count,
            "typeI_labels": self.type_i_labels,
            "typeII_labels": self.type_ii_labels,
            "two_sided_classes": self.two_sided_classes,
            "mu_edges": self.mu_edges,
            "failures": self.failures,
        }


def verify_partition(sys: CoxeterSystem, table, radius: int) -> PartitionReport:
    """Run the five partition checks over the radius ball:

    (a) classification is total;
    (b) R is constant on each predicted left cell;
    (c) every strongly connected component of the one-step left-order
        digraph lies inside a single predicted cell;
    (d) the explicit precell chains step down through mu != 0 links with
        disjoint left descent sets;
    (e) the expected label counts for this radius appear.
    """
    _require_polygon(sys)
    ball = sys.ball(radius)
    failures: list[dict] = []

    # (a) total classification
    labels: dict[Element, CellLabel] = {}
    for x in ball:
        try:
            labels[x] = classify_left(sys, x)
        except ClassificationError as exc:
            failures.append({"check": "total", "element": x, "error": str(exc)})
    by_label: dict[CellLabel, list[Element]] = {}
    for x, lab in labels.items():
        by_label.setdefault(lab, []).append(x)

    # (b) R constant per predicted cell
    for lab, members in by_label.items():
        rsets = {sys.right_descents(x) for x in members}
        if len(rsets) > 1:
            failures.append(
                {
                    "check": "descents",
                    "label": str(lab),
                    "witness": sorted(members, key=sort_key)[:4],
                }
            )

    # (c) SCCs of the le_left_step digraph refine the predicted partition
    in_ball = set(ball)
    adj: dict[Element, list[Element]] = {x: [] for x in ball}
    edge_count = 0
    for w in ball:
        lw = len(w)
        for y in table.lower_cone(w):
            if y == w or y not in in_ball:
                continue
            if (lw - len(y)) % 2 == 0:
                continue
            if table.mu(y, w) == 0:
                continue
            edge_count += 1
            if not (sys.left_descents(y) <= sys.left_descents(w)):
                adj[y].append(w)
            if not (sys.left_descents(w) <= sys.left_descents(y)):
                adj[w].append(y)
    for comp in _tarjan_scc(adj):
        comp_labels = {labels[x] for x in comp if x in labels}
        if len(comp_labels) > 1:
            failures.append(
                {
                    "check": "scc",
                    "labels": sorted(str(l) for l in comp_labels),
                    "witness": sorted(comp, key=sort_key)[:4],
                }
            )

    # (d) precell chains: x_i = t_{i+1}..t_k w_L with mu != 0 and
    # disjoint left descents at every link
    for x in ball:
        prefix = leading_segment(sys, x)
        if not prefix:
            continue
        rep = precell_rep(sys, x).rep
        cur = x
        for i in range(len(prefix)):
            nxt = sys.multiply((prefix[i],), cur)
            if len(nxt) != len(cur) - 1:
                failures.append({"check": "chain", "element": x, "step": i})
                break
            if table.mu(nxt, cur) == 0 or (
                sys.left_descents(nxt) & sys.left_descents(cur)
            ):
                failures.append({"check": "chain", "element": x, "step": i})
                break
            cur = nxt
        else:
            if cur != rep:
                failures.append(
                    {"check": "chain", "element": x, "got": cur, "want": rep}
                )

    # (e) expected census for this radius
    type_i_labels = {lab for lab in by_label if lab.kind == TYPE_I}
    type_ii_labels = {lab for lab in by_label if lab.kind == TYPE_II}
    two_sided = {classify_two_sided(sys, x) for x in labels}
    want_type_i = sys.n if radius >= 1 else 0
    want_two_sided = 1 if radius == 0 else (2 if radius == 1 else 3)
    if len(type_i_labels) != want_type_i:
        failures.append(
            {"check": "census", "typeI": len(type_i_labels), "want": want_type_i}
        )
    if len(two_sided) != want_two_sided:
        failures.append(
            {"check": "census", "two_sided": len(two_sided), "want": want_two_sided}
        )

    return PartitionReport(
        radius=radius,
        passed=not failures,
        element_count=len(ball),
        type_i_labels=len(type_i_labels),
        type_ii_labels=len(type_ii_labels),
        two_sided_classes=len(two_sided),
        mu_edges=edge_count,
        failures=failures,
    )
