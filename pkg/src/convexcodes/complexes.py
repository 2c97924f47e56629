"""Codes and simplicial complexes on at most 64 labeled vertices.

A face is a plain Python int used as a bit mask: bit ``i - 1`` set means
vertex ``i`` is a member, with labels running 1..n and n <= 64.  Keeping
faces one machine word wide is what makes the exponential searches in the
rest of the package feasible, so every structure here stores masks, never
vertex tuples.

Two degenerate complexes are distinct values and both occur naturally:

* the void complex has no faces at all (``facets == ()``), and
* the complex whose only face is the empty face (``facets == (0,)``).

A :class:`Code` is a set of faces called words.  Whether the empty word
belongs to a code is remembered, but it is immaterial to every verdict
computed downstream, which is why most operations quietly skip it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import EmptyInput, LabelOutOfRange, NotAFace, VertexInUse

MAX_VERTICES = 64

Face = int


def face_of(members: Iterable[int]) -> Face:
    """Build a face mask from an iterable of vertex labels (1-based)."""
    mask = 0
    for v in members:
        if not 1 <= v <= MAX_VERTICES:
            raise LabelOutOfRange(f"vertex label {v} outside 1..{MAX_VERTICES}")
        mask |= 1 << (v - 1)
    return mask


def face_members(mask: Face) -> tuple[int, ...]:
    """Vertex labels of a face, ascending."""
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def face_size(mask: Face) -> int:
    return mask.bit_count()


def face_label(mask: Face, n: int = 0) -> str:
    """Render a face for humans: compact digits when labels stay below 10."""
    if mask == 0:
        return "{}"
    mem = face_members(mask)
    if mem[-1] <= 9 and n <= 9:
        return "".join(str(v) for v in mem)
    return "{" + ",".join(str(v) for v in mem) + "}"


def _face_sort_key(mask: Face) -> tuple[int, int]:
    # Deterministic face order used everywhere: size, then mask value.
    return (mask.bit_count(), mask)


def _check_ambient(n: int) -> None:
    if not 1 <= n <= MAX_VERTICES:
        raise LabelOutOfRange(f"ambient vertex count {n} outside 1..{MAX_VERTICES}")


def _check_face(mask: Face, n: int) -> None:
    if mask < 0 or mask >> n:
        raise LabelOutOfRange(
            f"face {bin(mask)} uses labels outside 1..{n}"
        )


@dataclass(frozen=True)
class Code:
    """A combinatorial code: a set of word masks on vertices 1..ambient_n.

    ``words`` may contain 0, the empty word.  Word sets are kept as a
    frozenset; use :meth:`sorted_words` when a deterministic order matters.
    """

    ambient_n: int
    words: frozenset[Face]

    def __post_init__(self):
        _check_ambient(self.ambient_n)
        for w in self.words:
            _check_face(w, self.ambient_n)

    @classmethod
    def from_words(cls, n: int, words: Iterable[Iterable[int]]) -> "Code":
        return cls(n, frozenset(face_of(w) for w in words))

    @classmethod
    def from_masks(cls, n: int, masks: Iterable[Face]) -> "Code":
        return cls(n, frozenset(masks))

    @property
    def has_empty_word(self) -> bool:
        return 0 in self.words

    def nonempty_words(self) -> frozenset[Face]:
        return self.words - {0}

    def sorted_words(self) -> tuple[Face, ...]:
        return tuple(sorted(self.words, key=_face_sort_key))

    def __contains__(self, mask: Face) -> bool:
        return mask in self.words

    def __len__(self) -> int:
        return len(self.words)


@dataclass(frozen=True)
class SimplicialComplex:
    """An abstract simplicial complex stored by its facets.

    ``facets`` is the antichain of maximal faces, sorted by mask value.
    The void complex has no facets; the empty-face-only complex has the
    single facet 0.  Any face of a nonvoid complex is a subset of some
    facet, which is the membership test used throughout.
    """

    ambient_n: int
    facets: tuple[Face, ...]

    def __post_init__(self):
        _check_ambient(self.ambient_n)
        for f in self.facets:
            _check_face(f, self.ambient_n)

    @classmethod
    def from_facets(cls, n: int, candidates: Iterable[Face]) -> "SimplicialComplex":
        """Normalize an arbitrary family of faces into its maximal antichain."""
        cand = set(candidates)
        maximal = tuple(
            sorted(f for f in cand if not any(f != g and f & ~g == 0 for g in cand))
        )
        return cls(n, maximal)

    @classmethod
    def from_vertex_lists(cls, n: int, lists: Iterable[Iterable[int]]) -> "SimplicialComplex":
        return cls.from_facets(n, (face_of(l) for l in lists))

    @classmethod
    def void(cls, n: int) -> "SimplicialComplex":
        return cls(n, ())

    @property
    def is_void(self) -> bool:
        return not self.facets

    def dimension(self) -> int:
        """Largest facet size minus one; -1 for the void and empty-face complexes."""
        if not self.facets:
            return -1
        return max(f.bit_count() for f in self.facets) - 1

    def __contains__(self, mask: Face) -> bool:
        return any(mask & ~f == 0 for f in self.facets)

    def faces(self) -> Iterator[Face]:
        """All faces, the empty face included, in (size, mask) order."""
        seen: set[Face] = set()
        for f in self.facets:
            sub = f
            while True:
                seen.add(sub)
                if sub == 0:
                    break
                sub = (sub - 1) & f
        return iter(sorted(seen, key=_face_sort_key))

    def faces_of_dim(self, k: int) -> list[Face]:
        """The k-faces sorted by mask value; k = -1 names the empty face."""
        return sorted(f for f in self.faces() if f.bit_count() == k + 1)

    def num_faces(self) -> int:
        return sum(1 for _ in self.faces())

    def f_vector(self) -> tuple[int, ...]:
        """Counts of faces per dimension 0..dim; the empty face is not counted."""
        counts = [0] * (self.dimension() + 1)
        for f in self.faces():
            if f:
                counts[f.bit_count() - 1] += 1
        return tuple(counts)

    def vertices(self) -> tuple[int, ...]:
        mask = 0
        for f in self.facets:
            mask |= f
        return face_members(mask)

    def canonical_key(self) -> bytes:
        """Deterministic byte key identifying this complex exactly.

        Ambient size plus the sorted facet masks; two complexes collide only
        if they are equal, which makes the key safe for memo tables.
        """
        out = bytearray([self.ambient_n])
        for f in self.facets:
            out += f.to_bytes(8, "little")
        return bytes(out)


def closure(code: Code) -> SimplicialComplex:
    """Smallest simplicial complex containing every word of the code.

    Its facets are exactly the maximal words.  A code with no words gives
    the void complex; a code whose only word is the empty word gives the
    empty-face-only complex.
    """
    return SimplicialComplex.from_facets(code.ambient_n, code.words)


def maximal_codewords(code: Code) -> frozenset[Face]:
    words = code.words
    return frozenset(
        w for w in words if not any(w != u and w & ~u == 0 for u in words)
    )


def link(cx: SimplicialComplex, sigma: Face) -> SimplicialComplex:
    """Faces disjoint from sigma whose union with sigma stays in the complex.

    The facets of the link are the facets containing sigma with sigma
    removed; the ambient vertex count is unchanged.
    """
    if sigma not in cx:
        raise NotAFace(f"{face_label(sigma)} is not a face of the complex")
    return SimplicialComplex(
        cx.ambient_n,
        tuple(sorted(f & ~sigma for f in cx.facets if sigma & ~f == 0)),
    )


def restriction(cx: SimplicialComplex, sigma: Face) -> SimplicialComplex:
    """The subcomplex of faces contained in sigma (sigma need not be a face)."""
    if cx.is_void:
        return cx
    return SimplicialComplex.from_facets(
        cx.ambient_n, (f & sigma for f in cx.facets)
    )


def cone(cx: SimplicialComplex, apex: int) -> SimplicialComplex:
    """Join with a fresh apex vertex: every face gains an apex twin.

    The apex may be any label not appearing in the complex; the ambient
    range grows if the label lies above it.  The cone over the void
    complex is the single point at the apex, and the link of the apex
    recovers the original complex (for nonvoid input).
    """
    if not 1 <= apex <= MAX_VERTICES:
        raise LabelOutOfRange(f"apex label {apex} outside 1..{MAX_VERTICES}")
    bit = 1 << (apex - 1)
    if any(f & bit for f in cx.facets):
        raise VertexInUse(f"apex label {apex} already appears in the complex")
    n = max(cx.ambient_n, apex)
    if cx.is_void:
        return SimplicialComplex(n, (bit,))
    return SimplicialComplex(n, tuple(sorted(f | bit for f in cx.facets)))


def order_complex(faces: Iterable[Face]) -> SimplicialComplex:
    """Nerve of the inclusion order on a finite set of nonempty faces.

    The input faces become vertices 1..m, numbered by (size, mask); a set
    of vertices spans a face exactly when the corresponding input faces
    form a chain under inclusion.  The facets of the result are the
    maximal chains, found by walking cover relations of the induced order.
    """
    elems = sorted(set(faces), key=_face_sort_key)
    if not elems:
        raise EmptyInput("order_complex needs at least one face")
    if elems[0] == 0:
        raise EmptyInput("order_complex input faces must be nonempty")
    m = len(elems)
    if m > MAX_VERTICES:
        raise LabelOutOfRange(f"{m} input faces exceed the {MAX_VERTICES}-vertex limit")

    below = [
        [j for j in range(m) if j != i and elems[j] & ~elems[i] == 0]
        for i in range(m)
    ]
    covers: list[list[int]] = [[] for _ in range(m)]
    for i in range(m):
        for j in range(m):
            if i == j or elems[i] & ~elems[j]:
                continue
            # j covers i when nothing fits strictly between them
            if not any(k != i and elems[i] & ~elems[k] == 0 for k in below[j]):
                covers[i].append(j)

    minimal = [i for i in range(m) if not below[i]]
    chains: list[Face] = []

    def grow(i: int, mask: Face) -> None:
        mask |= 1 << i
        if not covers[i]:
            chains.append(mask)
            return
        for j in covers[i]:
            grow(j, mask)

    for i in minimal:
        grow(i, 0)
    return SimplicialComplex.from_facets(m, chains)


def is_k_sparse(code: Code, k: int) -> bool:
    """True when every word has at most k members (the empty word always passes)."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return all(w.bit_count() <= k for w in code.words)


def all_subfaces(mask: Face) -> Iterator[Face]:
    """Every subset of a mask, the empty one included, unordered."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def simplex_faces(members: Iterable[int]) -> list[Face]:
    """All nonempty faces spanned by the given vertex labels."""
    mem = tuple(members)
    out = []
    for r in range(1, len(mem) + 1):
        for combo in itertools.combinations(mem, r):
            out.append(face_of(combo))
    return out
