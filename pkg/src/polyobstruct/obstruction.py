"""Embeddability bounds for coskeleton complexes and projection obstructions.

A projection of a ``d``-polytope with ``m`` facets to ``R^e`` that retains
the ``k``-skeleton forces the ``k``-th coskeleton complex into a sphere of
dimension ``m - d - 2 + e``.  Any lower bound ``L`` on its embeddability
dimension therefore rules out every ``e < L + d - m + 2``.  The helpers here
produce such lower bounds three ways (closed formulas, an exact knapsack
program over face types, brute force Sarkaria indices of cotype complexes)
and turn them into certificates.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Sequence

from .errors import ConsistencyError, InputError
from .kneser import (
    DEFAULT_COLORING_BUDGET,
    sarkaria_details,
    sind_polygon_coskeleton,
    sind_simplex_coskeleton,
)
from .polytopes import (
    CombinatorialType,
    FaceType,
    PolygonType,
    ProductType,
    SimplexType,
    coskeleton,
    cotype_complex,
    face_types,
)

SOURCES = ("closed_form", "ilp", "brute_force")


@dataclass(frozen=True)
class BoundResult:
    edim_lower: int
    edim_upper: int | None = None
    sind: int | None = None
    source: str = "closed_form"

    def __post_init__(self) -> None:
        if self.source not in SOURCES:
            raise InputError(f"unknown bound source {self.source!r}")
        if self.edim_upper is not None and self.edim_lower > self.edim_upper:
            raise ConsistencyError(
                f"lower bound {self.edim_lower} exceeds upper bound {self.edim_upper}")


@dataclass(frozen=True)
class ObstructionCertificate:
    """Outcome of an obstruction query.

    When ``available`` is false no bound applies and ``obstructed`` is false.
    Otherwise ``obstructed`` is exactly ``e < threshold_e`` with
    ``threshold_e = bound.edim_lower + d - m + 2``.
    """

    d: int
    m: int
    k: int
    e: int
    threshold_e: int | None
    bound: BoundResult | None
    face_type: tuple[int, ...] | None = None
    theorem: str = ""
    note: str = ""
    available: bool = True

    @property
    def obstructed(self) -> bool:
        return self.available and self.e < self.threshold_e

    def recheck(self) -> bool:
        """Re-derive the verdict from the stored fields alone."""
        if not self.available:
            return False
        threshold = self.bound.edim_lower + self.d - self.m + 2
        if threshold != self.threshold_e:
            raise ConsistencyError("certificate threshold does not match its bound")
        return self.e < threshold

    def to_dict(self) -> dict:
        out = asdict(self)
        out["obstructed"] = self.obstructed
        return out


def _unavailable(d: int, m: int, k: int, e: int, theorem: str, note: str) -> ObstructionCertificate:
    return ObstructionCertificate(d, m, k, e, None, None, theorem=theorem, note=note,
                                  available=False)


# -- knapsack program over face types ----------------------------------------

@dataclass(frozen=True)
class KnapsackInstance:
    """``max Σ s_i μ_i`` s.t. ``Σ w_i μ_i = k``, ``Σ μ_i = r``, ``0 <= μ_i <= cap_i``."""

    coefficients: tuple[int, ...]
    weights: tuple[int, ...]
    caps: tuple[int, ...]
    k: int
    r: int
    labels: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self) -> None:
        n = len(self.coefficients)
        if len(self.weights) != n or len(self.caps) != n:
            raise InputError("knapsack coefficients, weights and caps must have equal length")
        if any(w < 0 for w in self.weights) or any(c < 0 for c in self.caps):
            raise InputError("knapsack weights and caps must be nonnegative")


@dataclass(frozen=True)
class KnapsackResult:
    feasible: bool
    value: int | None = None
    mu: tuple[int, ...] | None = None


def knapsack_bound(instance: KnapsackInstance) -> KnapsackResult:
    """Exact optimum by enumeration; ties go to the lexicographically least ``μ``."""
    s, w, caps = instance.coefficients, instance.weights, instance.caps
    n = len(s)
    best: list = [None, None]
    mu = [0] * n

    def rec(i: int, rem_r: int, rem_k: int, value: int) -> None:
        if i == n:
            if rem_r == 0 and rem_k == 0 and (best[0] is None or value > best[0]):
                best[0], best[1] = value, tuple(mu)
            return
        for x in range(min(caps[i], rem_r) + 1):
            if w[i] * x > rem_k:
                break
            mu[i] = x
            rec(i + 1, rem_r - x, rem_k - w[i] * x, value + s[i] * x)
        mu[i] = 0

    rec(0, instance.r, instance.k, 0)
    if best[0] is None:
        return KnapsackResult(False)
    return KnapsackResult(True, best[0], best[1])


def polygon_knapsack(r_e: int, r_o: int, k: int) -> KnapsackInstance:
    """Face-type program for a product of ``r_e`` even and ``r_o`` odd polygons.

    Coefficients are the Sarkaria index of each factor coskeleton minus
    ``m_i - 1``, so the bound is ``m - 1 + s*``.
    """
    r = r_e + r_o
    return KnapsackInstance(
        coefficients=(-2, -1, -1, 0),
        weights=(0, 0, 1, 2),
        caps=(r_e, r_o, r, r),
        k=k, r=r,
        labels=("even_vertex", "odd_vertex", "edge", "polygon"),
    )


def simplex_knapsack(n: int, r: int, k: int) -> KnapsackInstance:
    """Face-type program for the ``r``-fold product of simplices on ``n`` facets."""
    return KnapsackInstance(
        coefficients=tuple(sind_simplex_coskeleton(n, i) for i in range(n)),
        weights=tuple(range(n)),
        caps=(r,) * n,
        k=k, r=r,
        labels=tuple(f"dim_{i}" for i in range(n)),
    )


# -- closed-form bounds ------------------------------------------------------

def _ceil_half(x: int) -> int:
    return -(-x // 2)


def _check_polygons(m: int, r_e: int, r_o: int) -> int:
    if min(r_e, r_o) < 0 or r_e + r_o < 1:
        raise InputError(f"need r_e, r_o >= 0 and at least one polygon, got {r_e}, {r_o}")
    if m < 4 * r_e + 3 * r_o or (m - r_o) % 2:
        raise InputError(
            f"{m} facets cannot be split into {r_e} even and {r_o} odd polygons")
    return r_e + r_o


def edim_lower_polygon_products(m: int, r_e: int, r_o: int, k: int) -> int:
    r = _check_polygons(m, r_e, r_o)
    if not 0 <= k <= 2 * r:
        raise InputError(f"need 0 <= k <= {2 * r}, got {k}")
    return m - 1 - r + k // 2 + min(0, _ceil_half(k) - r_e)


def polygon_mu_star(r_e: int, r_o: int, k: int) -> int:
    """Closed-form optimum of the minimisation form of the polygon program."""
    r = r_e + r_o
    return r - k // 2 + max(0, r_e - _ceil_half(k))


def edim_upper_polygon_products(m: int, r_e: int, r_o: int, k: int) -> int:
    r = _check_polygons(m, r_e, r_o)
    if not 0 <= k < 2 * r:
        raise InputError(f"need 0 <= k < {2 * r}, got {k}")
    if k == 0:
        return m - r - r_e - 1
    if k == 1:
        return m - r - 1
    return m - 2


def _check_simplices(n: int, r: int, k: int) -> None:
    if n < 2 or r < 1:
        raise InputError(f"need n >= 2 and r >= 1, got n={n}, r={r}")
    if not 0 <= k < r * (n - 1):
        raise InputError(f"need 0 <= k < {r * (n - 1)}, got {k}")


def _simplex_case(n: int, r: int, k: int) -> tuple[int, int]:
    """Which of the three regimes ``k`` falls in, and the ``α`` of the last one."""
    if k <= r * ((n - 3) // 2):
        return 1, 0
    if k <= r * ((n - 2) // 2):
        return 2, 0
    return 3, (k - r * ((n - 2) // 2)) // ((n + 1) // 2)


def edim_lower_simplex_products(n: int, r: int, k: int) -> int:
    _check_simplices(n, r, k)
    case, alpha = _simplex_case(n, r, k)
    if case == 1:
        return 2 * r + 2 * k - 1
    if case == 2:
        # nonempty only for even n
        return r * n // 2 + k - 1
    return r * (n - 1) + alpha - 1


def edim_upper_simplex_products(n: int, r: int, k: int) -> int:
    _check_simplices(n, r, k)
    return min(2 * k + 2 * r - 1, r * n - 1)


# -- brute force and factor-wise bounds --------------------------------------

def factor_sind_closed_form(P: CombinatorialType, k: int) -> int:
    if isinstance(P, PolygonType):
        return sind_polygon_coskeleton(P.m, k)
    if isinstance(P, SimplexType):
        return sind_simplex_coskeleton(P.n, k)
    raise InputError(f"no closed-form Sarkaria index for {P.spec()}")


def as_product(P: CombinatorialType) -> ProductType:
    return P if isinstance(P, ProductType) else ProductType((P,))


def linear_index_lower(P: CombinatorialType, k: int) -> tuple[int, FaceType]:
    """Best cotype bound from closed-form factor indices, with its face type."""
    P = as_product(P)
    best = None
    for lam in face_types(P, k):
        value = sum(factor_sind_closed_form(f, x) for f, x in zip(P.factors, lam))
        value += len(P.factors) - 1
        if best is None or value > best[0]:
            best = (value, lam)
    return best


@dataclass(frozen=True)
class BruteForceBound:
    sind: int
    face_type: FaceType
    num_nonfaces: int
    chromatic_number: int


def brute_force_lower(P: CombinatorialType, k: int,
                      budget: int | None = DEFAULT_COLORING_BUDGET) -> BruteForceBound:
    """Largest Sarkaria index of a cotype complex, each computed from scratch.

    For a non-product the single coskeleton complex is used.
    """
    P = as_product(P)
    best = None
    for lam in face_types(P, k):
        sind, nf, chi = sarkaria_details(cotype_complex(P, lam), budget)
        if best is None or sind > best.sind:
            best = BruteForceBound(sind, lam, len(nf), chi)
    return best


def brute_force_coskeleton_sind(P: CombinatorialType, k: int,
                                budget: int | None = DEFAULT_COLORING_BUDGET) -> int:
    return sarkaria_details(coskeleton(P, k), budget)[0]


# -- verdicts ----------------------------------------------------------------

def obstruction_verdict(d: int, m: int, k: int, e: int, bound: BoundResult,
                        face_type: Sequence[int] | None = None, theorem: str = "",
                        note: str = "") -> ObstructionCertificate:
    """Certificate for ``e < bound.edim_lower + d - m + 2``."""
    if bound is None or bound.edim_lower is None:
        raise InputError("a lower bound on the embeddability dimension is required")
    if not 0 <= d < m:
        raise InputError(f"need 0 <= d < m, got d={d}, m={m}")
    if not 0 <= k < d:
        raise InputError(f"need 0 <= k < d={d}, got k={k}")
    threshold = bound.edim_lower + d - m + 2
    return ObstructionCertificate(d, m, k, e, threshold, bound,
                                  tuple(face_type) if face_type is not None else None,
                                  theorem=theorem, note=note)


def _agree(theorem_threshold: int, cert: ObstructionCertificate) -> ObstructionCertificate:
    if theorem_threshold != cert.threshold_e:
        raise ConsistencyError(
            f"{cert.theorem}: theorem threshold {theorem_threshold} differs from "
            f"the generic bound {cert.threshold_e}")
    return cert


def obstruct_polygon_products(r_e: int, r_o: int, k: int, e: int) -> ObstructionCertificate:
    r = r_e + r_o
    if min(r_e, r_o) < 0 or r < 1:
        raise InputError(f"need at least one polygon, got r_e={r_e}, r_o={r_o}")
    if not 0 <= k < 2 * r:
        raise InputError(f"need 0 <= k < {2 * r}, got {k}")
    # the facet count cancels; any admissible m gives the same threshold
    m = 4 * r_e + 3 * r_o
    lower = edim_lower_polygon_products(m, r_e, r_o, k)
    bound = BoundResult(lower, edim_upper_polygon_products(m, r_e, r_o, k), source="closed_form")
    cert = obstruction_verdict(
        2 * r, m, k, e, bound, theorem="product of polygons",
        note="threshold independent of polygon sizes; m shown for the smallest admissible sizes")
    theorem = r + 1 + k // 2 + min(0, _ceil_half(k) - r_e)
    return _agree(theorem, cert)


def neighborly_polygons_condition(r_e: int, r_o: int, e: int) -> bool:
    """The published two-branch criterion for neighborly projections."""
    r = r_e + r_o
    if r_e < e // 4:
        return -(-(3 * e - 2) // 4) < r
    return e // 2 < r_o


def obstruct_neighborly_polygons(r_e: int, r_o: int, e: int) -> ObstructionCertificate:
    """Obstruction to a projection to ``R^e`` retaining the ``(⌊e/2⌋-1)``-skeleton.

    The verdict comes from the polygon-product bound at ``k = ⌊e/2⌋ - 1``; for
    even ``e`` it is checked against the two-branch criterion.  For odd ``e``
    that criterion claims more than the bound supports and is not used.
    """
    if e < 1 or min(r_e, r_o) < 0 or r_e + r_o < 1:
        raise InputError(f"need e >= 1 and at least one polygon, got e={e}, r_e={r_e}, r_o={r_o}")
    k = e // 2 - 1
    r = r_e + r_o
    if k < 0 or k >= 2 * r:
        return _unavailable(2 * r, 4 * r_e + 3 * r_o, k, e, "neighborly polygons",
                            f"skeleton dimension {k} outside [0, {2 * r})")
    cert = obstruct_polygon_products(r_e, r_o, k, e)
    cert = ObstructionCertificate(**{**cert.__dict__, "theorem": "neighborly polygons"})
    if e % 2 == 0 and neighborly_polygons_condition(r_e, r_o, e) != cert.obstructed:
        raise ConsistencyError(f"neighborly criterion disagrees with the bound at e={e}")
    return cert


def van_kampen_flores(k: int, e: int) -> bool:
    if k < 0:
        raise InputError(f"need k >= 0, got {k}")
    return e <= 2 * k + 1


def simplex_products_threshold(n: int, r: int, k: int) -> int:
    _check_simplices(n, r, k)
    case, alpha = _simplex_case(n, r, k)
    if case == 1:
        return r + 2 * k + 1
    if case == 2:
        return r * (n - 2) // 2 + k + 1
    return r * (n - 2) + alpha + 1


def obstruct_simplex_products(n: int, r: int, k: int, e: int) -> ObstructionCertificate:
    _check_simplices(n, r, k)
    bound = BoundResult(edim_lower_simplex_products(n, r, k),
                        edim_upper_simplex_products(n, r, k), source="closed_form")
    cert = obstruction_verdict(r * (n - 1), r * n, k, e, bound, theorem="product of simplices")
    return _agree(simplex_products_threshold(n, r, k), cert)


# -- wedge products of a polygon and a simplex --------------------------------

def _wedge_dims(r: int, n: int) -> tuple[int, int]:
    return r * (n - 1) + 2, r * n


def _check_wedge(r: int, n: int) -> None:
    if r < 3 or n < 2:
        raise InputError(f"wedge product needs r >= 3 and n >= 2, got r={r}, n={n}")


def wedge_special_threshold(r: int, n: int, k: int) -> int:
    """Piecewise threshold for special ``k``-faces, ``2 <= k < r(n-1)+2``."""
    j = k - 2
    case, alpha = _simplex_case(n, r, j)
    if case == 1:
        return r + 2 * k - 1
    if case == 2:
        return r * (n - 2) // 2 + k + 1
    return r * (n - 2) + alpha + 3


def obstruct_wedge_special_faces(r: int, n: int, k: int, e: int) -> ObstructionCertificate:
    _check_wedge(r, n)
    d, m = _wedge_dims(r, n)
    if not 2 <= k < r * (n - 1) + 2:
        raise InputError(f"special faces need 2 <= k < {r * (n - 1) + 2}, got {k}")
    if r == 3:
        return _unavailable(d, m, k, e, "wedge special faces",
                            "no obstruction available for r = 3")
    bound = BoundResult(edim_lower_simplex_products(n, r, k - 2), source="closed_form")
    cert = obstruction_verdict(
        d, m, k, e, bound, theorem="wedge special faces",
        note=f"coskeleton {k - 2} of the {r}-fold product of simplices on {n} facets embeds")
    return _agree(wedge_special_threshold(r, n, k), cert)


def obstruct_wedge_skeleton(r: int, n: int, k: int, e: int) -> ObstructionCertificate:
    _check_wedge(r, n)
    d, m = _wedge_dims(r, n)
    if not 0 <= k < d:
        raise InputError(f"need 0 <= k < {d}, got {k}")
    if k >= 2:
        cert = obstruct_wedge_special_faces(r, n, k, e)
        return ObstructionCertificate(**{**cert.__dict__, "theorem": "wedge skeleton"})
    if r == 3:
        return _unavailable(d, m, k, e, "wedge skeleton", "no obstruction available for r = 3")
    # vertices ([n],[n],H_3..H_r) resp. edges ([n],H_2..H_r) carry coskeleton 0
    # of a product of r-2 resp. r-1 simplices
    factors = r - 2 if k == 0 else r - 1
    bound = BoundResult(edim_lower_simplex_products(n, factors, 0), source="closed_form")
    cert = obstruction_verdict(
        d, m, k, e, bound, theorem="wedge skeleton",
        note=f"coskeleton 0 of the {factors}-fold product of simplices on {n} facets embeds")
    if n >= 3:
        return _agree(r - 1 if k == 0 else r + 1, cert)
    return cert


def obstruct_wedge_surface(r: int, n: int, e: int) -> ObstructionCertificate:
    _check_wedge(r, n)
    d, m = _wedge_dims(r, n)
    if n == 2:
        return _unavailable(d, m, 2, e, "wedge surface",
                            "no obstruction available for n = 2 (these surfaces are realizable)")
    if r == 3:
        return _unavailable(d, m, 2, e, "wedge surface", "no obstruction available for r = 3")
    bound = BoundResult(edim_lower_simplex_products(n, r - 1, 0), source="closed_form")
    cert = obstruction_verdict(
        d, m, 2, e, bound, theorem="wedge surface",
        note=(f"the surface's polygons contain coskeleton 0 of the {r - 1}-fold product of "
              f"simplices on {n} facets (lower bound {2 * r - 3}); a retaining projection "
              f"would embed it in dimension r + e - 4 = {r + e - 4}"))
    return _agree(r + 1, cert)
