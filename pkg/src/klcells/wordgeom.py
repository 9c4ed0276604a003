"""Lines, segments, block decomposition and left precells.

A *line* is an element with a unique reduced word (consecutive letters never
commute).  A *segment* is a line subword that is rigidly attached to its
context; the predicate implemented here is the descent-count criterion
(#R of the prefix != 1 and #L of the suffix != 1, minimal with respect to
right-anchored sub-occurrences), which reproduces the intended block
structure: every element factors as

    u_0 . B_1 . u_1 . B_2 ... B_k . u_k

with the u_i segments (possibly absent) and the B_i commuting blocks of
size >= 2.  A slower all-reduced-expressions checker is kept alongside as a
comparison oracle; `segment_reading_mismatches` reports where the two
readings differ instead of silently picking one.

Left precells: two elements are equivalent when they share reduced
expressions w'·w_L with w' trivial or a segment (or both are lines with the
same final letter).  Each class has a unique shortest representative, found
by stripping the leading segment.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coxeter import CoxeterSystem, Element, IDENTITY, Word


@dataclass(frozen=True)
class Segment:
    word: Word


@dataclass(frozen=True)
class CommutingBlock:
    word: Word


Part = Segment | CommutingBlock


@dataclass(frozen=True)
class BlockDecomposition:
    parts: tuple[Part, ...]

    def word(self) -> Word:
        out: list[int] = []
        for p in self.parts:
            out.extend(p.word)
        return tuple(out)

    def to_json(self) -> list[dict]:
        return [
            {
                "kind": "segment" if isinstance(p, Segment) else "block",
                "word": [s + 1 for s in p.word],
            }
            for p in self.parts
        ]


@dataclass(frozen=True)
class Precell:
    rep: Element
    dimension: int


def is_line(sys: CoxeterSystem, x: Element) -> bool:
    """True iff x has a unique reduced word: no two consecutive canonical
    letters commute."""
    return all(not sys.commutes(x[i], x[i + 1]) for i in range(len(x) - 1))


def is_line_word(sys: CoxeterSystem, word: Word) -> bool:
    return all(not sys.commutes(word[i], word[i + 1]) for i in range(len(word) - 1))


def segment_at_word(sys: CoxeterSystem, word: Word, i: int, j: int) -> bool:
    """Segment criterion for the occurrence word[i:j) inside a reduced word.

    Requires a non-empty line subword whose flanking elements satisfy
    #R(prefix) != 1 and #L(suffix) != 1, and minimality: no right-anchored
    sub-occurrence (i < i' <= j) may satisfy the same descent conditions.
    """
    if not (0 <= i <= j <= len(word)):
        raise ValueError(f"invalid subword range [{i},{j}) for length {len(word)}")
    if i == j:
        raise ValueError("segment occurrence must be non-empty")
    u = word[i:j]
    if not is_line_word(sys, u):
        return False
    suffix = sys.reduce(word[j:])
    if len(sys.left_descents(suffix)) == 1:
        return False
    if len(sys.right_descents(sys.reduce(word[:i]))) == 1:
        return False
    # right-anchored minimality: the suffix conditions already hold, so a
    # sub-occurrence carries the property iff its prefix has #R != 1
    for i2 in range(i + 1, j + 1):
        if len(sys.right_descents(sys.reduce(word[:i2]))) != 1:
            return False
    return True


def is_segment_at(sys: CoxeterSystem, x: Element, i: int, j: int) -> bool:
    """Segment criterion on the canonical word of x."""
    return segment_at_word(sys, x, i, j)


def segment_by_definition(
    sys: CoxeterSystem, word: Word, i: int, j: int, cap: int = 12
) -> bool:
    """Literal reading: a maximal line subword such that every reduced
    expression of the element splits as prefix.u.suffix with the same
    flanking elements.  Comparison oracle only; exponential."""
    if not (0 <= i < j <= len(word)):
        raise ValueError("invalid subword range")
    u = word[i:j]
    if not is_line_word(sys, u):
        return False

    def splits_identically(i1: int, j1: int) -> bool:
        u1 = word[i1:j1]
        pre = sys.reduce(word[:i1])
        suf = sys.reduce(word[j1:])
        k = len(u1)
        for r in sys.reduced_words(sys.reduce(word), cap=cap):
            if not any(
                r[p : p + k] == u1
                and sys.reduce(r[:p]) == pre
                and sys.reduce(r[p + k :]) == suf
                for p in range(len(r) - k + 1)
            ):
                return False
        return True

    if not splits_identically(i, j):
        return False
    for i2 in range(0, i + 1):
        for j2 in range(j, len(word) + 1):
            if (i2, j2) == (i, j):
                continue
            if is_line_word(sys, word[i2:j2]) and splits_identically(i2, j2):
                return False  # contained in a larger identically-splitting line
    return True


def segment_reading_mismatches(
    sys: CoxeterSystem, max_len: int, cap: int = 12
) -> list[dict]:
    """Compare the criterion against the literal definition on all canonical
    subword occurrences of elements with length <= max_len; returns one
    record per disagreement."""
    out = []
    for x in sys.ball(max_len):
        for i in range(len(x)):
            for j in range(i + 1, len(x) + 1):
                a = segment_at_word(sys, x, i, j)
                b = segment_by_definition(sys, x, i, j, cap=cap)
                if a != b:
                    out.append(
                        {"word": x, "range": (i, j), "criterion": a, "definition": b}
                    )
    return out


def decompose(sys: CoxeterSystem, x: Element) -> BlockDecomposition:
    """Alternating segment/block decomposition, built right to left.

    Trailing segment letters are those forced as the unique right descent;
    a block is the full (pairwise commuting) right descent set once there is
    more than one.  The concatenated parts form a reduced word for x (not in
    general the canonical one) and round-trip through `reduce`.
    """
    parts: list[Part] = []
    y = x
    while y:
        if is_line(sys, y):
            parts.insert(0, Segment(y))
            break
        seg: list[int] = []
        while True:
            rd = sys.right_descents(y)
            if len(rd) != 1:
                break
            (t,) = rd
            if seg and sys.commutes(t, seg[0]):
                raise AssertionError("forced trailing letters must form a line")
            seg.insert(0, t)
            y = sys.append_right(y, t)
        if seg:
            parts.insert(0, Segment(tuple(seg)))
        if not y:
            raise AssertionError("non-line element consumed entirely as a segment")
        block = sorted(sys.right_descents(y))
        for a in block:
            for b in block:
                if a < b and not sys.commutes(a, b):
                    raise AssertionError("right descent set is not a commuting set")
        for t in reversed(block):
            y = sys.append_right(y, t)
        parts.insert(0, CommutingBlock(tuple(block)))
    return BlockDecomposition(tuple(parts))


def precell_rep(sys: CoxeterSystem, x: Element) -> Precell:
    """Canonical representative of the left precell of x: e for the unit,
    the final letter for a line, otherwise x with its leading segment
    stripped."""
    if not x:
        return Precell(IDENTITY, 0)
    if is_line(sys, x):
        rep: Element = (x[-1],)
        return Precell(rep, 1)
    dec = decompose(sys, x)
    if isinstance(dec.parts[0], Segment):
        k = len(dec.parts[0].word)
        rep = sys.reduce(dec.word()[k:])
    else:
        rep = x
    return Precell(rep, len(sys.left_descents(rep)))


def leading_segment(sys: CoxeterSystem, x: Element) -> Word:
    """The stripped prefix: what `precell_rep` removes from x ((), the whole
    line but its last letter, or the leading Segment part)."""
    if not x:
        return ()
    if is_line(sys, x):
        return x[:-1]
    dec = decompose(sys, x)
    if isinstance(dec.parts[0], Segment):
        return dec.parts[0].word
    return ()


def same_precell(sys: CoxeterSystem, x: Element, y: Element) -> bool:
    return precell_rep(sys, x).rep == precell_rep(sys, y).rep
