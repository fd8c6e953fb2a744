"""Finite simplicial complexes on an indexed ground set.

Faces are stored as Python integers used as bitmasks: bit ``i`` set means
element ``i`` of the ground set belongs to the face.  Python integers are
unbounded, so the same code path serves ground sets of any size (including
more than 64 elements).  A complex is stored by its facets, kept as an
inclusion antichain in a canonical order, so structural equality of two
complexes is plain tuple equality.

Only complexes with at least one face are representable; the smallest one is
``{∅}`` (a single empty facet, dimension -1).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import InputError, ResourceLimitError

Face = int

DEFAULT_EXHAUSTIVE_LIMIT = 24
DEFAULT_MAX_FACES = 2_000_000


# -- bitmask helpers ---------------------------------------------------------

def to_mask(members: Iterable[int]) -> Face:
    mask = 0
    for i in members:
        if i < 0:
            raise InputError(f"negative ground-set index {i}")
        mask |= 1 << i
    return mask


def to_members(mask: Face) -> tuple[int, ...]:
    """Sorted indices of the set bits of ``mask``."""
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def popcount(mask: Face) -> int:
    return bin(mask).count("1")


def _bits(mask: Face) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _canonical_key(mask: Face) -> tuple[int, tuple[int, ...]]:
    return popcount(mask), to_members(mask)


def canonical_order(masks: Iterable[Face]) -> tuple[Face, ...]:
    """Sort faces by size, then lexicographically by members."""
    return tuple(sorted(set(masks), key=_canonical_key))


def maximal_elements(masks: Iterable[Face]) -> tuple[Face, ...]:
    """Inclusion-maximal members of a family, in canonical order."""
    # index[v] holds the positions of kept sets containing v; a candidate is
    # covered iff the AND over its elements is nonzero
    kept: list[Face] = []
    index: dict[int, int] = {}
    for m in sorted(set(masks), key=popcount, reverse=True):
        acc = (1 << len(kept)) - 1
        for v in _bits(m):
            acc &= index.get(v, 0)
            if not acc:
                break
        if acc:
            continue
        bit = 1 << len(kept)
        for v in _bits(m):
            index[v] = index.get(v, 0) | bit
        kept.append(m)
    return canonical_order(kept)


def minimal_elements(masks: Iterable[Face]) -> tuple[Face, ...]:
    """Inclusion-minimal members of a family, in canonical order."""
    kept: list[Face] = []
    for m in sorted(set(masks), key=popcount):
        if not any(k & ~m == 0 for k in kept):
            kept.append(m)
    return canonical_order(kept)


# -- the complex -------------------------------------------------------------

@dataclass(frozen=True)
class SimplicialComplex:
    """A simplicial complex on the ground set ``{0, ..., size-1}``.

    Build instances with :func:`make_complex` or :meth:`from_masks`; the
    constructor expects ``facets`` already maximalized and canonically sorted.
    """

    size: int
    facets: tuple[Face, ...]
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.size < 0:
            raise InputError(f"ground-set size must be nonnegative, got {self.size}")
        if not self.facets:
            raise InputError("the void complex is not representable; use {∅}")
        if self.labels is not None and len(self.labels) != self.size:
            raise InputError("labels must name every ground-set element")

    @classmethod
    def from_masks(cls, size: int, masks: Iterable[Face],
                   labels: Sequence[str] | None = None) -> "SimplicialComplex":
        masks = list(masks)
        full = (1 << size) - 1
        for m in masks:
            if m < 0 or m & ~full:
                raise InputError(
                    f"face {to_members(m) if m >= 0 else m} is outside the ground set of size {size}")
        if not masks:
            masks = [0]
        return cls(size, maximal_elements(masks),
                   tuple(labels) if labels is not None else None)

    @property
    def ground_mask(self) -> Face:
        return (1 << self.size) - 1

    @property
    def dimension(self) -> int:
        return max(popcount(f) for f in self.facets) - 1

    @property
    def facet_sets(self) -> list[tuple[int, ...]]:
        return [to_members(f) for f in self.facets]

    @property
    def _vertex_index(self) -> list[int]:
        """Per ground element, the bitset of facet positions containing it."""
        try:
            return self.__dict__["_index"]
        except KeyError:
            index = [0] * self.size
            for pos, f in enumerate(self.facets):
                for v in _bits(f):
                    index[v] |= 1 << pos
            object.__setattr__(self, "_index", index)
            return index

    def __contains__(self, face: Face) -> bool:
        if face & ~self.ground_mask:
            return False
        index = self._vertex_index
        acc = (1 << len(self.facets)) - 1
        for v in _bits(face):
            acc &= index[v]
            if not acc:
                return False
        return True

    def is_full_simplex(self) -> bool:
        return self.facets == (self.ground_mask,)

    def __repr__(self) -> str:
        return f"SimplicialComplex(size={self.size}, facets={self.facet_sets})"


def make_complex(size: int, generators: Iterable[Iterable[int]],
                 labels: Sequence[str] | None = None) -> SimplicialComplex:
    """Complex on ``size`` elements generated by the given faces.

    >>> make_complex(4, [{0, 1}, {0}, {2, 3}]).facet_sets
    [(0, 1), (2, 3)]
    """
    masks = []
    for g in generators:
        g = tuple(g)
        for i in g:
            if not 0 <= i < size:
                raise InputError(f"generator {sorted(g)} is outside the ground set of size {size}")
        masks.append(to_mask(g))
    return SimplicialComplex.from_masks(size, masks, labels)


def full_simplex(size: int) -> SimplicialComplex:
    return SimplicialComplex.from_masks(size, [(1 << size) - 1])


def boundary_of_simplex(size: int) -> SimplicialComplex:
    """Boundary of the simplex on ``size`` vertices (``{∅}`` when size is 1 or 0)."""
    full = (1 << size) - 1
    return SimplicialComplex.from_masks(size, [full ^ (1 << i) for i in range(size)] or [0])


def contains_face(K: SimplicialComplex, face: Face | Iterable[int]) -> bool:
    mask = face if isinstance(face, int) else to_mask(face)
    if mask & ~K.ground_mask:
        raise InputError(f"face {to_members(mask)} is outside the ground set of size {K.size}")
    return mask in K


def is_subcomplex(K: SimplicialComplex, L: SimplicialComplex) -> bool:
    """True iff every face of ``K`` is a face of ``L`` (same ground set)."""
    return K.size == L.size and all(f in L for f in K.facets)


def join(K: SimplicialComplex, L: SimplicialComplex) -> SimplicialComplex:
    """Join with ``L``'s ground set placed after ``K``'s."""
    shift = K.size
    facets = [s | (t << shift) for s in K.facets for t in L.facets]
    labels = None
    if K.labels is not None and L.labels is not None:
        labels = K.labels + L.labels
    # products of two antichains on disjoint grounds are again an antichain
    return SimplicialComplex(K.size + L.size, canonical_order(facets), labels)


def join_all(complexes: Iterable[SimplicialComplex]) -> SimplicialComplex:
    out = SimplicialComplex.from_masks(0, [0])
    for K in complexes:
        out = join(out, K)
    return out


def union(K: SimplicialComplex, L: SimplicialComplex) -> SimplicialComplex:
    if K.size != L.size:
        raise InputError(f"cannot unite complexes on ground sets of size {K.size} and {L.size}")
    return SimplicialComplex.from_masks(K.size, K.facets + L.facets, K.labels)


def skeleton(K: SimplicialComplex, j: int) -> SimplicialComplex:
    """All faces of dimension at most ``j``."""
    if j < -1:
        raise InputError(f"skeleton dimension must be >= -1, got {j}")
    width = j + 1
    gens: set[Face] = set()
    for f in K.facets:
        members = to_members(f)
        if len(members) <= width:
            gens.add(f)
        else:
            gens.update(to_mask(c) for c in combinations(members, width))
    return SimplicialComplex.from_masks(K.size, gens, K.labels)


def iter_faces_by_size(K: SimplicialComplex,
                       max_faces: int | None = DEFAULT_MAX_FACES) -> Iterator[list[Face]]:
    """Yield the nonempty faces level by level (size 1, size 2, ...).

    Each face of size ``s+1`` is generated exactly once, from the face obtained
    by removing its largest element.
    """
    level = [1 << i for i in range(K.size) if (1 << i) in K]
    seen = len(level)
    while level:
        yield level
        nxt = []
        for f in level:
            top = f.bit_length()
            for v in range(top, K.size):
                g = f | (1 << v)
                if g in K:
                    nxt.append(g)
        seen += len(nxt)
        if max_faces is not None and seen > max_faces:
            raise ResourceLimitError(f"complex has more than {max_faces} faces")
        level = nxt


def f_vector(K: SimplicialComplex) -> tuple[int, ...]:
    """Face numbers ``(f_0, ..., f_dim)``; empty for ``{∅}``."""
    return tuple(len(level) for level in iter_faces_by_size(K))


def euler_characteristic(K: SimplicialComplex) -> int:
    return sum((-1) ** i * f for i, f in enumerate(f_vector(K)))


# -- minimal non-faces -------------------------------------------------------

def minimal_non_faces(K: SimplicialComplex, method: str = "auto",
                      limit: int = DEFAULT_EXHAUSTIVE_LIMIT,
                      max_faces: int | None = DEFAULT_MAX_FACES) -> tuple[Face, ...]:
    """Inclusion-minimal subsets of the ground set that are not faces of ``K``.

    ``method`` is ``"exhaustive"`` (level-wise scan over all faces, refused
    when the ground set exceeds ``limit`` or the face count exceeds
    ``max_faces``), ``"transversal"`` (minimal hitting sets of the facet
    complements) or ``"auto"``.  The two methods share no code and serve as
    cross-checks of each other.  ``"auto"`` takes the transversal route above
    ``limit``; below it, picks whichever of the two has the smaller rough
    cost estimate (faces scanned versus pairwise facet work).
    """
    if method == "auto":
        face_estimate = sum(1 << popcount(f) for f in K.facets)
        cheap_scan = face_estimate <= 16 * len(K.facets) ** 2
        method = "exhaustive" if K.size <= limit and cheap_scan else "transversal"
    if method == "exhaustive":
        if K.size > limit:
            raise ResourceLimitError(
                f"ground set of size {K.size} exceeds the exhaustive limit {limit}")
        return _nonfaces_exhaustive(K, max_faces)
    if method == "transversal":
        return _nonfaces_transversal(K)
    raise InputError(f"unknown minimal non-face method {method!r}")


def _nonfaces_exhaustive(K: SimplicialComplex, max_faces: int | None) -> tuple[Face, ...]:
    found = [1 << i for i in range(K.size) if (1 << i) not in K]
    seen = 0
    level = {1 << i for i in range(K.size) if (1 << i) in K}
    while level:
        seen += len(level)
        if max_faces is not None and seen > max_faces:
            raise ResourceLimitError(f"complex has more than {max_faces} faces")
        nxt = set()
        for f in level:
            for v in range(f.bit_length(), K.size):
                g = f | (1 << v)
                if not all(g ^ (1 << u) in level for u in _bits(f)):
                    continue
                if g in K:
                    nxt.add(g)
                else:
                    found.append(g)
        level = nxt
    return canonical_order(found)


def _nonfaces_transversal(K: SimplicialComplex) -> tuple[Face, ...]:
    # a set is a non-face iff it meets the complement of every facet
    edges = sorted({K.ground_mask & ~f for f in K.facets}, key=popcount)
    transversals: list[Face] = [0]
    for edge in edges:
        grown = set()
        for t in transversals:
            if t & edge:
                grown.add(t)
            else:
                grown.update(t | (1 << v) for v in _bits(edge))
        transversals = list(minimal_elements(grown))
    return canonical_order(transversals)
