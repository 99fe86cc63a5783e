"""Simplicial complexes on a small ground set, stored as facet bitmasks.

Vertices are labelled 1..n and a face is an integer whose bit i-1 is set
iff vertex i belongs to the face.  The complex {∅} (the nonvoid complex
with no vertices) is stored as the single facet 0.  The void complex is
not representable.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, NamedTuple

MAX_VERTICES = 64


def vertex_mask(vertices: Iterable[int], n: int) -> int:
    """Pack 1-based vertex labels into a bitmask, checking the range."""
    m = 0
    for v in vertices:
        if not 1 <= v <= n:
            raise ValueError(f"vertex {v} out of range [1, {n}]")
        m |= 1 << (v - 1)
    return m


def mask_vertices(mask: int) -> tuple[int, ...]:
    """Unpack a bitmask into a sorted tuple of 1-based vertex labels."""
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def face_key(mask: int) -> tuple[int, tuple[int, ...]]:
    """Graded-lexicographic sort key on faces (cardinality, then labels)."""
    return (mask.bit_count(), mask_vertices(mask))


def _maximal(masks: Iterable[int]) -> frozenset[int]:
    """Inclusion-maximal elements of a set of bitmasks."""
    uniq = sorted(set(masks), key=lambda m: -m.bit_count())
    kept: list[int] = []
    for m in uniq:
        if not any(m & ~k == 0 for k in kept):
            kept.append(m)
    return frozenset(kept)


class FreeFacePair(NamedTuple):
    free_face: int
    facet: int

    @property
    def added_vertex(self) -> int:
        return mask_vertices(self.facet & ~self.free_face)[0]


class CoreResult(NamedTuple):
    complex: "SimplicialComplex"
    vertex_map: tuple[int, ...]  # new label i+1 -> original label vertex_map[i]


@dataclass(frozen=True)
class SimplicialComplex:
    """A nonvoid simplicial complex given by its facets (an antichain)."""

    n: int
    facets: frozenset[int]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise ValueError(f"ground set size {self.n} outside [0, {MAX_VERTICES}]")
        full = (1 << self.n) - 1
        if not self.facets:
            raise ValueError("void complex is not representable; use facets={0}")
        for f in self.facets:
            if f & ~full:
                raise ValueError("facet uses vertices outside the ground set")
        if self.facets != _maximal(self.facets):
            raise ValueError("facets must form an antichain")

    def faces(self) -> set[int]:
        """All faces, as bitmasks (always contains 0, the empty face)."""
        seen: set[int] = set()
        for f in self.facets:
            s = f
            while True:
                seen.add(s)
                if s == 0:
                    break
                s = (s - 1) & f
        return seen

    def sorted_facets(self) -> list[int]:
        return sorted(self.facets, key=face_key)

    def facet_vertex_lists(self) -> list[tuple[int, ...]]:
        return [mask_vertices(f) for f in self.sorted_facets()]

    def __repr__(self):
        facets = ",".join("{%s}" % ",".join(map(str, vs)) for vs in self.facet_vertex_lists())
        return f"SimplicialComplex(n={self.n}, facets=[{facets}])"


def build_complex(facet_list: Iterable[Iterable[int]], n: int) -> SimplicialComplex:
    """Build a complex from vertex lists; an empty list yields {∅}."""
    if not 1 <= n <= MAX_VERTICES:
        raise ValueError(f"n={n} outside [1, {MAX_VERTICES}]")
    masks = [vertex_mask(f, n) for f in facet_list]
    if not masks:
        masks = [0]
    return SimplicialComplex(n, _maximal(masks))


def from_masks(masks: Iterable[int], n: int) -> SimplicialComplex:
    """Build a complex from face bitmasks, keeping only maximal ones."""
    masks = list(masks)
    if not masks:
        masks = [0]
    return SimplicialComplex(n, _maximal(masks))


def full_simplex(n: int) -> SimplicialComplex:
    return SimplicialComplex(n, frozenset({(1 << n) - 1 if n else 0}))


def is_face(cx: SimplicialComplex, face: int) -> bool:
    return any(face & ~f == 0 for f in cx.facets)


def dimension(cx: SimplicialComplex) -> int:
    return max(f.bit_count() for f in cx.facets) - 1


def facets_containing(cx: SimplicialComplex, face: int) -> list[int]:
    """All facets containing the given face (which must be a face)."""
    conts = [f for f in cx.facets if face & ~f == 0]
    if not conts:
        raise ValueError(f"{mask_vertices(face)} is not a face")
    return sorted(conts, key=face_key)


def free_faces(cx: SimplicialComplex) -> list[FreeFacePair]:
    """All pairs (F, G) with G the unique facet over F and |G| = |F|+1.

    The empty face is excluded: removing it would not preserve the
    homotopy type, and any complex where it qualifies is a cone.
    """
    pairs = []
    for face in cx.faces():
        if face == 0:
            continue
        conts = [f for f in cx.facets if face & ~f == 0]
        if len(conts) == 1 and conts[0].bit_count() == face.bit_count() + 1:
            pairs.append(FreeFacePair(face, conts[0]))
    pairs.sort(key=lambda p: face_key(p.free_face))
    return pairs


def is_free_face_pair(cx: SimplicialComplex, pair: FreeFacePair) -> bool:
    extra = pair.facet & ~pair.free_face
    if pair.free_face == 0 or extra.bit_count() != 1 or pair.free_face & ~pair.facet:
        return False
    if pair.facet not in cx.facets or not is_face(cx, pair.free_face):
        return False
    conts = [f for f in cx.facets if pair.free_face & ~f == 0]
    return conts == [pair.facet]


def elementary_collapse(cx: SimplicialComplex, pair: FreeFacePair) -> SimplicialComplex:
    """Remove a free face and its facet; preserves the homotopy type."""
    if not is_free_face_pair(cx, pair):
        raise ValueError(f"{pair} is not a free-face pair of the complex")
    remaining = cx.faces() - {pair.free_face, pair.facet}
    return from_masks(remaining, cx.n)


def collapse_greedy(cx: SimplicialComplex) -> tuple[SimplicialComplex, list[FreeFacePair]]:
    """Collapse repeatedly, always using the graded-lex smallest pair."""
    seq: list[FreeFacePair] = []
    while True:
        pairs = free_faces(cx)
        if not pairs:
            return cx, seq
        cx = elementary_collapse(cx, pairs[0])
        seq.append(pairs[0])


def cone_vertices(cx: SimplicialComplex) -> int:
    """Bitmask of vertices belonging to every facet."""
    m = (1 << cx.n) - 1
    for f in cx.facets:
        m &= f
    return m


def support_vertices(cx: SimplicialComplex) -> int:
    """Bitmask of vertices dividing some minimal generator of the ideal."""
    return ((1 << cx.n) - 1) & ~cone_vertices(cx)


def _compress(mask: int, keep: int) -> int:
    """Restrict a bitmask to the bits of `keep`, renumbering contiguously."""
    out = 0
    pos = 0
    while keep:
        low = keep & -keep
        if mask & low:
            out |= 1 << pos
        pos += 1
        keep &= keep - 1
    return out


def core(cx: SimplicialComplex) -> CoreResult:
    """Restrict to the non-cone vertices; Δ = core(Δ) * 2^{cone vertices}."""
    keep = support_vertices(cx)
    vmap = mask_vertices(keep)
    facets = _maximal(_compress(f, keep) for f in cx.facets)
    return CoreResult(SimplicialComplex(len(vmap), facets), vmap)


def join_with_simplex(cx: SimplicialComplex, extra: int) -> SimplicialComplex:
    """Join with the full simplex on extra vertices 1..extra beyond n."""
    n = cx.n + extra
    add = ((1 << n) - 1) & ~((1 << cx.n) - 1)
    return SimplicialComplex(n, frozenset(f | add for f in cx.facets))


def link(cx: SimplicialComplex, face: int) -> SimplicialComplex:
    """Faces disjoint from `face` whose union with it stays a face."""
    conts = facets_containing(cx, face)
    return SimplicialComplex(cx.n, frozenset(f & ~face for f in conts))


def deletion(cx: SimplicialComplex, v: int) -> SimplicialComplex:
    """Faces avoiding vertex v."""
    if not 1 <= v <= cx.n:
        raise ValueError(f"vertex {v} out of range [1, {cx.n}]")
    bit = 1 << (v - 1)
    return from_masks((f & ~bit for f in cx.facets), cx.n)


def contrastar(cx: SimplicialComplex, face: int) -> SimplicialComplex:
    """cost(F): the subcomplex of faces not containing F (F a nonempty face)."""
    if face == 0:
        raise ValueError("contrastar of the empty face is the void complex")
    if not is_face(cx, face):
        raise ValueError(f"{mask_vertices(face)} is not a face")
    cands = [f for f in cx.facets if face & ~f]
    for g in cx.facets:
        if face & ~g == 0:
            rest = face
            while rest:
                low = rest & -rest
                cands.append(g & ~low)
                rest &= rest - 1
    return from_masks(cands, cx.n)


def is_subcomplex(sub: SimplicialComplex, cx: SimplicialComplex) -> bool:
    return sub.n == cx.n and all(is_face(cx, f) for f in sub.facets)


def minimal_nonfaces(cx: SimplicialComplex) -> list[int]:
    """Inclusion-minimal non-faces, in graded-lex order."""
    found: list[int] = []
    for k in range(1, cx.n + 1):
        for combo in combinations(range(1, cx.n + 1), k):
            m = vertex_mask(combo, cx.n)
            if any(nf & ~m == 0 for nf in found):
                continue
            if not is_face(cx, m):
                found.append(m)
    return found


def is_pure(cx: SimplicialComplex) -> bool:
    sizes = {f.bit_count() for f in cx.facets}
    return len(sizes) == 1
