"""Combinatorial types of polygons, simplices, their products and wedge products.

Every face of a type is represented by its facet-incidence set: the bitmask
of facet indices that contain it.  Faces are ordered by reverse inclusion of
these sets, the empty face has incidence ``[m]`` and the polytope itself has
incidence ``∅``.

Facet labeling conventions:

* polygon ``m``: facet ``i`` is the edge between vertices ``i`` and ``i+1``,
  so the vertices are the cyclic pairs ``{i, i+1 mod m}``;
* simplex ``n``: facets ``0..n-1``; the face with vertex set ``S`` has
  incidence ``[n] \\ S``;
* product: factor ``i`` owns a contiguous block of facet indices, in order;
* wedge ``(r, n)``: facet ``(i, j)`` (polygon position ``i``, simplex facet
  ``j``) has index ``i*n + j``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable, Iterator, Sequence, Union

from .errors import InputError, ResourceLimitError
from .simplicial import (
    Face,
    SimplicialComplex,
    canonical_order,
    join_all,
    popcount,
    to_mask,
    union,
)


@dataclass(frozen=True)
class PolygonType:
    m: int

    def __post_init__(self) -> None:
        if not isinstance(self.m, int) or self.m < 3:
            raise InputError(f"a polygon needs at least 3 edges, got {self.m}")

    @property
    def dim(self) -> int:
        return 2

    @property
    def num_facets(self) -> int:
        return self.m

    def spec(self) -> str:
        return f"polygon:{self.m}"


@dataclass(frozen=True)
class SimplexType:
    """The simplex with ``n`` facets (dimension ``n-1``)."""

    n: int

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 2:
            raise InputError(f"a simplex needs at least 2 facets, got {self.n}")

    @property
    def dim(self) -> int:
        return self.n - 1

    @property
    def num_facets(self) -> int:
        return self.n

    def spec(self) -> str:
        return f"simplex:{self.n}"


@dataclass(frozen=True)
class ProductType:
    factors: tuple["CombinatorialType", ...]

    def __post_init__(self) -> None:
        if not self.factors:
            raise InputError("a product needs at least one factor")
        object.__setattr__(self, "factors", tuple(self.factors))

    @property
    def dim(self) -> int:
        return sum(f.dim for f in self.factors)

    @property
    def num_facets(self) -> int:
        return sum(f.num_facets for f in self.factors)

    @property
    def offsets(self) -> tuple[int, ...]:
        out, acc = [], 0
        for f in self.factors:
            out.append(acc)
            acc += f.num_facets
        return tuple(out)

    def spec(self) -> str:
        return "product:(" + ",".join(f.spec() for f in self.factors) + ")"


@dataclass(frozen=True)
class WedgeProductType:
    """Wedge product of an ``r``-gon with the simplex on ``n`` facets."""

    r: int
    n: int

    def __post_init__(self) -> None:
        if not isinstance(self.r, int) or self.r < 3:
            raise InputError(f"wedge product needs a polygon with r >= 3, got {self.r}")
        if not isinstance(self.n, int) or self.n < 2:
            raise InputError(f"wedge product needs a simplex with n >= 2 facets, got {self.n}")

    @property
    def dim(self) -> int:
        return self.r * (self.n - 1) + 2

    @property
    def num_facets(self) -> int:
        return self.r * self.n

    def spec(self) -> str:
        return f"wedge:{self.r},{self.n}"

    def facet_index(self, i: int, j: int) -> int:
        return i * self.n + j

    def incidence(self, tup: Sequence[int]) -> Face:
        """Incidence mask of a tuple ``(H_1, ..., H_r)`` of masks over ``[n]``."""
        mask = 0
        for i, h in enumerate(tup):
            mask |= h << (i * self.n)
        return mask

    def tuple_of(self, incidence: Face) -> tuple[int, ...]:
        full = (1 << self.n) - 1
        return tuple((incidence >> (i * self.n)) & full for i in range(self.r))

    @property
    def _polygon(self) -> PolygonType:
        return PolygonType(self.r)


CombinatorialType = Union[PolygonType, SimplexType, ProductType, WedgeProductType]


@dataclass(frozen=True)
class FaceType:
    """A composition distributing a face dimension over product factors."""

    parts: tuple[int, ...]

    @property
    def k(self) -> int:
        return sum(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


# -- face enumeration --------------------------------------------------------

def _check_k(P: CombinatorialType, k: int, low: int = -1, high: int | None = None) -> None:
    high = P.dim if high is None else high
    if not isinstance(k, int) or not low <= k <= high:
        raise InputError(f"face dimension {k} outside [{low}, {high}] for {P.spec()}")


def faces_of_dim(P: CombinatorialType, k: int) -> tuple[Face, ...]:
    """All ``k``-faces of ``P`` as facet-incidence masks, canonically sorted."""
    _check_k(P, k)
    return canonical_order(_faces(P, k))


def _faces(P: CombinatorialType, k: int) -> Iterator[Face]:
    m = P.num_facets
    if k == -1:
        yield (1 << m) - 1
        return
    if k == P.dim:
        yield 0
        return
    if isinstance(P, PolygonType):
        if k == 0:
            for i in range(m):
                yield (1 << i) | (1 << ((i + 1) % m))
        else:
            for i in range(m):
                yield 1 << i
    elif isinstance(P, SimplexType):
        for c in combinations(range(P.n), P.n - k - 1):
            yield to_mask(c)
    elif isinstance(P, ProductType):
        for lam in face_types(P, k):
            yield from _product_faces(P, lam)
    elif isinstance(P, WedgeProductType):
        yield from _wedge_faces(P, k)
    else:
        raise InputError(f"unsupported combinatorial type {P!r}")


def _product_faces(P: ProductType, lam: FaceType) -> Iterator[Face]:
    pools = [faces_of_dim(f, d) for f, d in zip(P.factors, lam)]
    offs = P.offsets
    for choice in product(*pools):
        mask = 0
        for off, f in zip(offs, choice):
            mask |= f << off
        yield mask


def _simplex_faces_by_codim(n: int) -> dict[int, list[int]]:
    """Proper subsets of ``[n]`` grouped by the dimension of the face they cut out."""
    out: dict[int, list[int]] = {}
    for size in range(n):
        out[n - 1 - size] = [to_mask(c) for c in combinations(range(n), size)]
    return out


def _wedge_faces(W: WedgeProductType, k: int) -> Iterator[Face]:
    # a face is (H_1..H_r) with {i : H_i = [n]} = I(G) for a face G of the
    # r-gon; its dimension is dim G + sum of dim F_i over H_i != [n]
    full = (1 << W.n) - 1
    by_dim = _simplex_faces_by_codim(W.n)
    for g_dim in (0, 1, 2):
        budget = k - g_dim
        if budget < 0:
            continue
        for g in faces_of_dim(W._polygon, g_dim):
            free = [i for i in range(W.r) if not g >> i & 1]
            for dims in _bounded_compositions(budget, len(free), W.n - 1):
                tup = [full if g >> i & 1 else 0 for i in range(W.r)]
                for choice in product(*(by_dim[d] for d in dims)):
                    for i, h in zip(free, choice):
                        tup[i] = h
                    yield W.incidence(tup)


def _bounded_compositions(total: int, parts: int, cap: int) -> Iterator[tuple[int, ...]]:
    """Compositions of ``total`` into ``parts`` parts each in ``[0, cap]``, lexicographic."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(min(cap, total) + 1):
        if total - first > cap * (parts - 1):
            continue
        for rest in _bounded_compositions(total - first, parts - 1, cap):
            yield (first,) + rest


def wedge_face_dim(W: WedgeProductType, tup: Sequence[int]) -> int:
    """Dimension of an admissible tuple; raises on non-admissible tuples."""
    full = (1 << W.n) - 1
    if len(tup) != W.r or any(h < 0 or h & ~full for h in tup):
        raise InputError(f"not a tuple of subsets of [{W.n}]: {tup}")
    saturated = to_mask(i for i, h in enumerate(tup) if h == full)
    g_dims = {0: 2, 1: 1, W.r: -1}
    count = popcount(saturated)
    if count in g_dims:
        g_dim = g_dims[count]
    elif count == 2 and saturated in faces_of_dim(W._polygon, 0):
        g_dim = 0
    else:
        raise InputError(f"tuple {tup} is not a face of {W.spec()}")
    if g_dim == -1:
        return -1
    return g_dim + sum(W.n - 1 - popcount(h) for h in tup if h != full)


def wedge_face_lattice(W: WedgeProductType, max_facets: int = 12) -> dict[int, tuple[Face, ...]]:
    """Full face lattice by brute force over all tuples of subsets.

    Independent of :func:`faces_of_dim`; intended as a cross-check for small
    wedge products.
    """
    if W.num_facets > max_facets:
        raise ResourceLimitError(
            f"full wedge lattice limited to {max_facets} facets, {W.spec()} has {W.num_facets}")
    out: dict[int, list[Face]] = {}
    for tup in product(range(1 << W.n), repeat=W.r):
        try:
            d = wedge_face_dim(W, tup)
        except InputError:
            continue
        out.setdefault(d, []).append(W.incidence(tup))
    return {d: canonical_order(v) for d, v in sorted(out.items())}


# -- coskeleton and cotype complexes ----------------------------------------

def complex_from_incidences(m: int, incidences: Iterable[Face]) -> SimplicialComplex:
    """Complex on ``[m]`` generated by the complements of the incidence sets."""
    full = (1 << m) - 1
    return SimplicialComplex.from_masks(m, [full & ~i for i in incidences])


def coskeleton(P: CombinatorialType, k: int) -> SimplicialComplex:
    """Complex on the facets generated by complements of incidences of ``k``-faces."""
    return complex_from_incidences(P.num_facets, faces_of_dim(P, k))


def face_types(P: ProductType, k: int) -> tuple[FaceType, ...]:
    """Compositions of ``k`` bounded by the factor dimensions, lexicographic."""
    if not isinstance(P, ProductType):
        raise InputError("face types are defined for products only")
    _check_k(P, k, low=0, high=P.dim)
    return tuple(FaceType(parts) for parts in _face_type_parts(k, [f.dim for f in P.factors]))


def _face_type_parts(total: int, caps: list[int]) -> Iterator[tuple[int, ...]]:
    if not caps:
        if total == 0:
            yield ()
        return
    for first in range(min(caps[0], total) + 1):
        if total - first > sum(caps[1:]):
            continue
        for rest in _face_type_parts(total - first, caps[1:]):
            yield (first,) + rest


def cotype_complex(P: ProductType, lam: FaceType | Sequence[int]) -> SimplicialComplex:
    """Join of the factors' coskeleta at the dimensions given by ``lam``."""
    parts = tuple(lam)
    if len(parts) != len(P.factors) or any(
            not 0 <= x <= f.dim for x, f in zip(parts, P.factors)):
        raise InputError(f"{parts} is not a face type of {P.spec()}")
    return join_all(coskeleton(f, x) for f, x in zip(P.factors, parts))


def coskeleton_product(P: ProductType, k: int) -> SimplicialComplex:
    """Union of all cotype complexes of dimension ``k``."""
    types = face_types(P, k)
    out = cotype_complex(P, types[0])
    for lam in types[1:]:
        out = union(out, cotype_complex(P, lam))
    return out


# -- wedge special faces and the equivelar surface ---------------------------

def wedge_special_faces(W: WedgeProductType, k: int) -> tuple[Face, ...]:
    """Incidences of the special faces coming from ``k``-faces of the product of simplices.

    These are the tuples with no ``H_i = [n]``; the wedge face has dimension ``k + 2``.
    """
    if not isinstance(k, int) or not 0 <= k <= W.r * (W.n - 1):
        raise InputError(f"special-face index {k} outside [0, {W.r * (W.n - 1)}]")
    by_dim = _simplex_faces_by_codim(W.n)
    out = []
    for dims in _bounded_compositions(k, W.r, W.n - 1):
        for choice in product(*(by_dim[d] for d in dims)):
            out.append(W.incidence(choice))
    return canonical_order(out)


def wedge_surface_polygons(W: WedgeProductType) -> list[tuple[int, ...]]:
    """Choices ``(j_1, ..., j_r)`` whose ``r``-gon lies on the equivelar surface."""
    return [js for js in product(range(W.n), repeat=W.r) if sum(js) % W.n in (0, 1)]


def wedge_surface(W: WedgeProductType) -> SimplicialComplex:
    """Complex generated by the complements of the surface's ``r``-gons.

    The ``r``-gon ``([n]\\j_1, ..., [n]\\j_r)`` contributes the generator
    ``{(i, j_i)}``.
    """
    gens = [to_mask(W.facet_index(i, j) for i, j in enumerate(js))
            for js in wedge_surface_polygons(W)]
    return SimplicialComplex.from_masks(W.num_facets, gens)
