"""Right-angled Coxeter systems and exact word arithmetic.

A system is a set of involutive generators 0..n-1 together with a symmetric
irreflexive commutation relation: m(s,t) = 2 for commuting pairs and infinity
otherwise.  Words rewrite by the two elementary M-operations ss -> 1 and
st -> ts (commuting pair); every element has a unique reduced word that is
lexicographically least in its commutation class, which we use as the
canonical form.  Generators are 0-based internally and displayed 1-based.
"""

from __future__ import annotations

from itertools import combinations

Word = tuple[int, ...]
Element = tuple[int, ...]  # canonical: reduced and lex-least

POLYGON = "polygon"
GENERAL = "general"

IDENTITY: Element = ()


class ResourceLimitError(RuntimeError):
    """An enumeration exceeded its configured cap."""


def sort_key(x: Element) -> tuple[int, Element]:
    """ShortLex key: by length, then lexicographically."""
    return (len(x), x)


class CoxeterSystem:
    """A right-angled Coxeter system with cached word arithmetic."""

    def __init__(self, n: int, commuting_pairs, kind: str = GENERAL):
        if n < 1:
            raise ValueError(f"need at least one generator, got n={n}")
        pairs = set()
        for a, b in commuting_pairs:
            if not (0 <= a < n and 0 <= b < n):
                raise ValueError(f"generator pair ({a},{b}) out of range for n={n}")
            if a == b:
                raise ValueError(f"reflexive commuting pair ({a},{a})")
            pairs.add((min(a, b), max(a, b)))
        self.n = n
        self.kind = kind
        self.commuting = frozenset(pairs)
        self._comm_mask = [0] * n
        for a, b in pairs:
            self._comm_mask[a] |= 1 << b
            self._comm_mask[b] |= 1 << a
        self._all_mask = (1 << n) - 1
        self._append: dict[tuple[Element, int], Element] = {}
        self._desc_left: dict[Element, frozenset[int]] = {}
        self._desc_right: dict[Element, frozenset[int]] = {}
        self._inv: dict[Element, Element] = {}

    def __repr__(self) -> str:
        return f"CoxeterSystem(n={self.n}, kind={self.kind!r})"

    def commutes(self, a: int, b: int) -> bool:
        return a != b and (self._comm_mask[a] >> b) & 1 == 1

    def check_word(self, word) -> Word:
        w = tuple(word)
        for s in w:
            if not (0 <= s < self.n):
                raise ValueError(f"letter {s} out of range for n={self.n}")
        return w

    # -- normal form ------------------------------------------------------

    def _cancel(self, letters) -> list[int]:
        # One left-to-right pass keeping a reduced prefix: an appended letter
        # cancels the nearest equal letter it can commute back to.
        out: list[int] = []
        for s in letters:
            j = len(out) - 1
            hit = -1
            while j >= 0:
                t = out[j]
                if t == s:
                    hit = j
                    break
                if not self.commutes(s, t):
                    break
                j -= 1
            if hit >= 0:
                out.pop(hit)
            else:
                out.append(s)
        return out

    def _lex_min(self, letters) -> Element:
        # Greedy heap linearisation: repeatedly emit the least letter that
        # commutes with everything before it.
        rem = list(letters)
        out: list[int] = []
        while rem:
            best = -1
            best_i = 0
            ok = self._all_mask
            for i, c in enumerate(rem):
                if (ok >> c) & 1 and (best < 0 or c < best):
                    best, best_i = c, i
                ok &= self._comm_mask[c]
                if not ok:
                    break
            out.append(rem.pop(best_i))
        return tuple(out)

    def reduce(self, word) -> Element:
        """Canonical form of an arbitrary word: reduced, then lex-least."""
        return self._lex_min(self._cancel(self.check_word(word)))

    def append_right(self, x: Element, s: int) -> Element:
        """Canonical form of x*s (cached)."""
        key = (x, s)
        got = self._append.get(key)
        if got is None:
            got = self._append[key] = self._lex_min(self._cancel(x + (s,)))
        return got

    def multiply(self, x: Element, y: Element) -> Element:
        out = x
        for s in y:
            out = self.append_right(out, s)
        return out

    def invert(self, x: Element) -> Element:
        got = self._inv.get(x)
        if got is None:
            # the reverse of a reduced word is reduced
            got = self._inv[x] = self._lex_min(x[::-1])
        return got

    def length(self, x: Element) -> int:
        return len(x)

    # -- descent sets ------------------------------------------------------

    def left_descents(self, x: Element) -> frozenset[int]:
        got = self._desc_left.get(x)
        if got is None:
            out = 0
            ok = self._all_mask
            for c in x:
                if (ok >> c) & 1:
                    out |= 1 << c
                ok &= self._comm_mask[c]
                if not ok:
                    break
            got = self._desc_left[x] = frozenset(
                s for s in range(self.n) if (out >> s) & 1
            )
        return got

    def right_descents(self, x: Element) -> frozenset[int]:
        got = self._desc_right.get(x)
        if got is None:
            out = 0
            ok = self._all_mask
            for c in reversed(x):
                if (ok >> c) & 1:
                    out |= 1 << c
                ok &= self._comm_mask[c]
                if not ok:
                    break
            got = self._desc_right[x] = frozenset(
                s for s in range(self.n) if (out >> s) & 1
            )
        return got

    # -- enumeration -------------------------------------------------------

    def ball(self, radius: int, max_size: int | None = None) -> list[Element]:
        """All elements of length <= radius, sorted by (length, ShortLex)."""
        if radius < 0:
            raise ValueError("radius must be non-negative")
        out: list[Element] = [IDENTITY]
        seen: set[Element] = {IDENTITY}
        frontier: list[Element] = [IDENTITY]
        for _ in range(radius):
            nxt: list[Element] = []
            for x in frontier:
                for s in range(self.n):
                    y = self.append_right(x, s)
                    if len(y) == len(x) + 1 and y not in seen:
                        seen.add(y)
                        nxt.append(y)
                        if max_size is not None and len(seen) > max_size:
                            raise ResourceLimitError(
                                f"ball size cap {max_size} exceeded; "
                                f"{len(seen) - 1} elements enumerated so far"
                            )
            nxt.sort()
            out.extend(nxt)
            frontier = nxt
        return out

    def parent_edge(self, x: Element) -> tuple[Element, int] | None:
        """BFS-tree parent of a non-identity element: (x*s, s) with s the
        last canonical letter.  Used by the tessellation as edge labels."""
        if not x:
            return None
        s = x[-1]
        return (self.append_right(x, s), s)

    def reduced_words(self, x: Element, cap: int = 12) -> set[Word]:
        """All reduced words of x (closure under commutation moves)."""
        if len(x) > cap:
            raise ResourceLimitError(
                f"reduced_words cap {cap} exceeded for length {len(x)}"
            )
        words = {x}
        stack = [x]
        while stack:
            w = stack.pop()
            for i in range(len(w) - 1):
                if self.commutes(w[i], w[i + 1]):
                    w2 = w[:i] + (w[i + 1], w[i]) + w[i + 2 :]
                    if w2 not in words:
                        words.add(w2)
                        stack.append(w2)
        return words

    # -- spherical subgroups -------------------------------------------------

    def max_clique_size(self) -> int:
        """Largest pairwise-commuting generator set; the finite parabolics
        are exactly the commuting cliques (each isomorphic to Z_2^k)."""
        best = 1 if self.n else 0
        order = sorted(range(self.n), key=lambda s: -bin(self._comm_mask[s]).count("1"))

        def grow(size: int, allowed: int, start: int) -> None:
            nonlocal best
            if size > best:
                best = size
            for i in range(start, self.n):
                s = order[i]
                if (allowed >> s) & 1:
                    grow(size + 1, allowed & self._comm_mask[s], i + 1)

        grow(0, self._all_mask, 0)
        return best


def make_polygon_group(n: int) -> CoxeterSystem:
    """The group P_n: n generators whose commuting pairs form an n-cycle."""
    if n < 3:
        raise ValueError(f"polygon group needs n >= 3, got {n}")
    pairs = [(i, (i + 1) % n) for i in range(n)]
    return CoxeterSystem(n, pairs, kind=POLYGON)


def make_right_angled(n: int, commuting_pairs) -> CoxeterSystem:
    """A general right-angled system from an explicit commutation relation."""
    return CoxeterSystem(n, commuting_pairs, kind=GENERAL)


def brute_equivalent_words(sys: CoxeterSystem, word: Word, max_steps: int = 200000) -> set[Word]:
    """Closure of a word under single M-operations, including non-reduced
    words.  Exponential; only for oracle use in tests."""
    word = sys.check_word(word)
    seen = {word}
    stack = [word]
    while stack:
        w = stack.pop()
        for i in range(len(w) - 1):
            a, b = w[i], w[i + 1]
            if a == b:
                w2 = w[:i] + w[i + 2 :]
                if w2 not in seen:
                    seen.add(w2)
                    stack.append(w2)
            elif sys.commutes(a, b):
                w2 = w[:i] + (b, a) + w[i + 2 :]
                if w2 not in seen:
                    seen.add(w2)
                    stack.append(w2)
        if len(seen) > max_steps:
            raise ResourceLimitError("brute-force word closure exploded")
    return seen


def dodecahedron_pairs() -> list[tuple[int, int]]:
    """Face-adjacency pairs of the regular dodecahedron (12 faces, each
    adjacent to 5 others): the commutation graph of the right-angled
    dodecahedral reflection group in hyperbolic 3-space."""
    # faces: 0 top, 1-5 upper ring, 6-10 lower ring, 11 bottom
    pairs = []
    for i in range(5):
        up = 1 + i
        lo = 6 + i
        pairs.append((0, up))
        pairs.append((up, 1 + (i + 1) % 5))
        pairs.append((lo, 6 + (i + 1) % 5))
        pairs.append((up, lo))
        pairs.append((up, 6 + (i + 1) % 5))
        pairs.append((11, lo))
    assert len(set(tuple(sorted(p)) for p in pairs)) == 30
    return pairs


def all_commuting_cliques(sys: CoxeterSystem) -> list[tuple[int, ...]]:
    """Every pairwise-commuting generator subset (oracle helper)."""
    out = [()]
    for k in range(1, sys.n + 1):
        found = False
        for combo in combinations(range(sys.n), k):
            if all(sys.commutes(a, b) for a, b in combinations(combo, 2)):
                out.append(combo)
                found = True
        if not found:
            break
    return out
