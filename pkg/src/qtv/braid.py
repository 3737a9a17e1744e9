"""Braid words, closed-braid links and their diagram combinatorics.

Conventions used throughout:
  * strands of an n-braid occupy positions 0..n-1, bottom to top reading order;
  * letter +i (1 <= i <= n-1) is the generator sigma_i crossing positions
    i-1 and i, with the strand at position i-1 passing over;
  * letter -i is its inverse (position i-1 passes under);
  * the closure joins top position p to bottom position p.

A "strand" is identified with its bottom position.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction


class BraidError(ValueError):
    pass


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...]

    def __post_init__(self):
        if self.strands < 1:
            raise BraidError("strand count must be >= 1")
        object.__setattr__(self, "letters", tuple(self.letters))
        for x in self.letters:
            if x == 0 or abs(x) >= self.strands:
                raise BraidError(f"letter {x} invalid for {self.strands} strands")

    @property
    def crossing_count(self) -> int:
        return len(self.letters)

    def permutation(self) -> tuple[int, ...]:
        """perm[p] = top position reached by the strand starting at bottom p."""
        pos_of = list(range(self.strands))  # strand -> current position
        at = list(range(self.strands))      # position -> strand
        for x in self.letters:
            i = abs(x) - 1
            s, t = at[i], at[i + 1]
            at[i], at[i + 1] = t, s
            pos_of[s], pos_of[t] = i + 1, i
        return tuple(pos_of)

    def crossings(self):
        """Yield (index, position i, sign, over_strand, under_strand) per letter."""
        at = list(range(self.strands))
        for idx, x in enumerate(self.letters):
            i = abs(x) - 1
            sign = 1 if x > 0 else -1
            left, right = at[i], at[i + 1]
            over, under = (left, right) if sign > 0 else (right, left)
            yield idx, i, sign, over, under
            at[i], at[i + 1] = at[i + 1], at[i]

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(-x for x in reversed(self.letters)))

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if other.strands != self.strands:
            raise BraidError("strand count mismatch")
        return BraidWord(self.strands, self.letters + other.letters)

    def canonical_text(self) -> str:
        body = " ".join(str(x) for x in self.letters) if self.letters else "e"
        return f"{self.strands}|{body}"


def parse_braid(text: str, strands: int | None = None) -> BraidWord:
    """Parse whitespace-separated letters; 'n|...' prefix or explicit n overrides."""
    text = text.strip()
    if "|" in text:
        head, text = text.split("|", 1)
        strands = int(head)
    parts = text.split()
    if parts == ["e"]:
        parts = []
    letters = tuple(int(p) for p in parts)
    if any(x == 0 for x in letters):
        raise BraidError("letter 0 is not a braid generator")
    inferred = (max(abs(x) for x in letters) + 1) if letters else 1
    n = strands if strands is not None else inferred
    if n < inferred:
        raise BraidError(f"{n} strands too few for letters {letters}")
    return BraidWord(n, letters)


@dataclass(frozen=True)
class ClosedBraidLink:
    braid: BraidWord
    components: tuple[tuple[int, ...], ...]      # strands per component
    component_of_strand: tuple[int, ...]
    writhe_per_component: tuple[int, ...]
    linking_matrix: tuple[tuple[int, ...], ...]  # diagonal holds self-writhe

    @property
    def component_count(self) -> int:
        return len(self.components)

    def linking(self, i: int, j: int) -> int:
        return self.linking_matrix[i][j]

    def total_writhe(self) -> int:
        return sum(1 if x > 0 else -1 for x in self.braid.letters)


def closure(braid: BraidWord) -> ClosedBraidLink:
    """Close the braid and compute components, writhes and the linking matrix."""
    perm = braid.permutation()
    seen = [False] * braid.strands
    components = []
    for s in range(braid.strands):
        if not seen[s]:
            cyc = []
            t = s
            while not seen[t]:
                seen[t] = True
                cyc.append(t)
                t = perm[t]
            components.append(tuple(sorted(cyc)))
    components.sort(key=lambda c: c[0])
    comp_of = [0] * braid.strands
    for ci, comp in enumerate(components):
        for s in comp:
            comp_of[s] = ci
    m = len(components)
    half = [[0] * m for _ in range(m)]
    writhe = [0] * m
    for _idx, _i, sign, over, under in braid.crossings():
        a, b = comp_of[over], comp_of[under]
        if a == b:
            writhe[a] += sign
        else:
            half[a][b] += sign
            half[b][a] += sign
    lk = [[0] * m for _ in range(m)]
    for a in range(m):
        lk[a][a] = writhe[a]
        for b in range(m):
            if a != b:
                if half[a][b] % 2:
                    raise BraidError("odd crossing sum between distinct components")
                lk[a][b] = half[a][b] // 2
    return ClosedBraidLink(
        braid=braid,
        components=tuple(components),
        component_of_strand=tuple(comp_of),
        writhe_per_component=tuple(writhe),
        linking_matrix=tuple(tuple(row) for row in lk),
    )


def is_homogeneous(braid: BraidWord) -> bool:
    """True iff each generator index occurs with a single sign."""
    sign_of = {}
    for x in braid.letters:
        i = abs(x)
        s = 1 if x > 0 else -1
        if sign_of.setdefault(i, s) != s:
            return False
    return True


@dataclass(frozen=True)
class FiberData:
    chi: int
    boundary: int
    genus: Fraction
    fibered: bool  # True only for homogeneous presentations (Stallings)


def fiber_data(link: ClosedBraidLink) -> FiberData:
    """Euler characteristic and genus of the Seifert surface of the closed braid.

    chi = strands - crossings.  The surface is a fiber of the complement
    exactly when the braid is homogeneous; otherwise the numbers still
    describe the Seifert-algorithm surface and `fibered` is False.
    """
    b = link.braid
    chi = b.strands - b.crossing_count
    boundary = link.component_count
    genus = Fraction(2 - chi - boundary, 2)
    if genus.denominator != 1 or genus < 0:
        raise BraidError(f"inconsistent surface data: chi={chi}, boundary={boundary}")
    return FiberData(chi=chi, boundary=boundary, genus=genus, fibered=is_homogeneous(b))


# The orientation-consistent (Seifert) smoothing of a braid crossing, read as
# an unoriented Kauffman resolution: for a positive generator it is the
# A-smoothing, for a negative one the B-smoothing.  Single lookup so the
# convention can be flipped globally if a different figure reading is wanted.
SEIFERT_RESOLUTION_LABEL = {1: "A", -1: "B"}


@dataclass(frozen=True)
class StateGraphEdge:
    position: int          # index in the braid word
    circles: tuple[int, int]
    sign: int
    label: str


@dataclass(frozen=True)
class StateGraph:
    circle_count: int
    edges: tuple[StateGraphEdge, ...]


def state_graph(braid: BraidWord) -> StateGraph:
    """Seifert circles of the closure plus one labeled edge per crossing.

    For a closed braid the Seifert circles are the strand-position lines,
    so circle i is position i and the crossing sigma_j joins circles j-1, j.
    """
    edges = []
    for idx, x in enumerate(braid.letters):
        i = abs(x) - 1
        sign = 1 if x > 0 else -1
        edges.append(
            StateGraphEdge(
                position=idx,
                circles=(i, i + 1),
                sign=sign,
                label=SEIFERT_RESOLUTION_LABEL[sign],
            )
        )
    return StateGraph(circle_count=braid.strands, edges=tuple(edges))


# -- Markov moves ------------------------------------------------------------


def conjugate(braid: BraidWord, word: tuple[int, ...]) -> BraidWord:
    """gamma * braid * gamma^{-1}; the closure is unchanged."""
    gamma = BraidWord(braid.strands, tuple(word))
    return gamma * braid * gamma.inverse()


def stabilize(braid: BraidWord, sign: int = 1) -> BraidWord:
    """Add a strand and one crossing sigma_n^{+-1}; the closure is unchanged."""
    if sign not in (1, -1):
        raise BraidError("sign must be +1 or -1")
    n = braid.strands
    return BraidWord(n + 1, braid.letters + (sign * n,))


def destabilize(braid: BraidWord) -> BraidWord:
    """Remove the last strand when it meets exactly one crossing sigma_{n-1}."""
    n = braid.strands
    if n < 2:
        raise BraidError("nothing to destabilize")
    hits = [k for k, x in enumerate(braid.letters) if abs(x) == n - 1]
    if len(hits) != 1:
        raise BraidError("last strand must meet exactly one crossing")
    k = hits[0]
    # closure(u s v) ~ closure(v u s) -> destabilizes to closure(v u)
    rest = braid.letters[k + 1:] + braid.letters[:k]
    return BraidWord(n - 1, rest)


def delete_components(link: ClosedBraidLink, remove: set[int]) -> BraidWord:
    """Braid of the sublink obtained by deleting the given components.

    Crossings between two surviving strands keep their sign; their new column
    is the rank of the left strand among surviving strands at that instant.
    """
    braid = link.braid
    keep_strand = [link.component_of_strand[s] not in remove for s in range(braid.strands)]
    survivors = sum(keep_strand)
    if survivors == 0:
        raise BraidError("cannot delete every component")
    at = list(range(braid.strands))
    letters = []
    for x in braid.letters:
        i = abs(x) - 1
        s, t = at[i], at[i + 1]
        if keep_strand[s] and keep_strand[t]:
            rank = sum(1 for p in range(i) if keep_strand[at[p]])
            letters.append((rank + 1) * (1 if x > 0 else -1))
        at[i], at[i + 1] = t, s
    return BraidWord(survivors, tuple(letters))


def brute_force_components(braid: BraidWord) -> int:
    """Independent component count by naive strand tracing (test oracle)."""
    n = braid.strands
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    # trace each strand step by step through the word
    for start in range(n):
        pos = start
        for x in braid.letters:
            i = abs(x) - 1
            if pos == i:
                pos = i + 1
            elif pos == i + 1:
                pos = i
        ra, rb = find(start), find(pos)
        if ra != rb:
            parent[ra] = rb
    return len({find(s) for s in range(n)})
