"""Self-verification suite.

Every invariant the engine relies on is replayed over a fixed parameter grid.
Failures are collected (never raised) with the full inputs that produced them,
so ``polyobstruct verify`` doubles as a reproducibility check on any install.
"""

from __future__ import annotations

import random
import sys
import time
from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement, product
from math import comb
from typing import Callable, TextIO

from .errors import ConsistencyError, InputError, PolyObstructError
from .kneser import (
    chromatic_number_exact,
    kneser_graph,
    lovasz_kneser_chi,
    sarkaria_details,
    sarkaria_index,
    sind_polygon_coskeleton,
    sind_simplex_coskeleton,
)
from .obstruction import (
    brute_force_lower,
    edim_lower_polygon_products,
    edim_lower_simplex_products,
    edim_upper_polygon_products,
    edim_upper_simplex_products,
    knapsack_bound,
    linear_index_lower,
    obstruct_neighborly_polygons,
    obstruct_polygon_products,
    obstruct_simplex_products,
    obstruct_wedge_skeleton,
    obstruct_wedge_special_faces,
    obstruct_wedge_surface,
    obstruction_verdict,
    BoundResult,
    polygon_knapsack,
    polygon_mu_star,
    simplex_knapsack,
    van_kampen_flores,
)
from .polytopes import (
    PolygonType,
    ProductType,
    SimplexType,
    WedgeProductType,
    coskeleton,
    coskeleton_product,
    cotype_complex,
    face_types,
    faces_of_dim,
    wedge_face_dim,
    wedge_face_lattice,
    wedge_special_faces,
    wedge_surface,
    wedge_surface_polygons,
)
from .reports import Query, Report, run_query
from .simplicial import (
    SimplicialComplex,
    euler_characteristic,
    f_vector,
    is_subcomplex,
    join,
    minimal_non_faces,
    popcount,
    skeleton,
    to_members,
    union,
)
from .spec_language import parse_spec, render

SCOPES = ("simplicial_core", "polytope_types", "kneser_coloring",
          "obstruction_engine", "cli_reports")
MAX_DUMPED = 5


@dataclass
class CheckResult:
    scope: str
    name: str
    cases: int = 0
    failures: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures


@dataclass
class Summary:
    results: list[CheckResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    @property
    def failed(self) -> list[CheckResult]:
        return [r for r in self.results if not r.ok]


class _Recorder:
    def __init__(self, result: CheckResult):
        self.result = result

    def case(self, passed: bool, **inputs) -> None:
        self.result.cases += 1
        if not passed:
            self.result.failures.append(inputs)


_CHECKS: dict[str, list[tuple[str, Callable[[_Recorder], None]]]] = {s: [] for s in SCOPES}


def _check(scope: str, name: str):
    def register(fn):
        _CHECKS[scope].append((name, fn))
        return fn
    return register


# -- shared helpers ------------------------------------------------------------

def random_complex(rng: random.Random, size: int, max_facets: int = 5) -> SimplicialComplex:
    if size == 0:
        return SimplicialComplex.from_masks(0, [0])
    gens = [rng.getrandbits(size) for _ in range(rng.randint(1, max_facets))]
    return SimplicialComplex.from_masks(size, gens)


def _is_antichain(K: SimplicialComplex) -> bool:
    return all(not (a & ~b == 0) for a, b in product(K.facets, repeat=2) if a != b)


def _shift(faces, offset: int) -> set[int]:
    return {f << offset for f in faces}


def _faces_brute(K: SimplicialComplex) -> list[int]:
    return [s for s in range(1 << K.size) if s in K]


def _polygon_products():
    for r in range(1, 4):
        for sizes in combinations_with_replacement(range(3, 7), r):
            yield ProductType(tuple(PolygonType(m) for m in sizes))


def _split(P: ProductType) -> tuple[int, int]:
    r_e = sum(f.m % 2 == 0 for f in P.factors)
    return r_e, len(P.factors) - r_e


# -- simplicial_core -----------------------------------------------------------

@_check("simplicial_core", "facet antichain after every operation")
def _antichain(rec: _Recorder) -> None:
    rng = random.Random(11)
    for _ in range(150):
        K = random_complex(rng, rng.randint(0, 7))
        L = random_complex(rng, rng.randint(0, 5))
        M = random_complex(rng, K.size)
        for label, X in (("K", K), ("join", join(K, L)), ("union", union(K, M)),
                         ("skeleton", skeleton(K, rng.randint(-1, 3)))):
            rec.case(_is_antichain(X), op=label, K=K.facet_sets, L=L.facet_sets, M=M.facet_sets)


@_check("simplicial_core", "minimal non-faces: not faces, every facet-removal a face")
def _nonface_minimality(rec: _Recorder) -> None:
    rng = random.Random(12)
    for _ in range(150):
        K = random_complex(rng, rng.randint(1, 9))
        nf = minimal_non_faces(K)
        ok = all(f not in K and all(f ^ (1 << v) in K for v in to_members(f)) for f in nf)
        brute = {s for s in range(1 << K.size)
                 if s not in K and all(s ^ (1 << v) in K for v in to_members(s))}
        rec.case(ok and set(nf) == brute, K=K.facet_sets, nonfaces=[to_members(f) for f in nf])


@_check("simplicial_core", "exhaustive and transversal methods agree")
def _method_agreement(rec: _Recorder) -> None:
    rng = random.Random(13)
    for _ in range(150):
        K = random_complex(rng, rng.randint(1, 12), max_facets=8)
        a = minimal_non_faces(K, method="exhaustive")
        b = minimal_non_faces(K, method="transversal")
        rec.case(a == b, K=K.facet_sets)


@_check("simplicial_core", "join/non-face law")
def _join_nonfaces(rec: _Recorder) -> None:
    rng = random.Random(14)
    for _ in range(150):
        K = random_complex(rng, rng.randint(1, 7))
        L = random_complex(rng, rng.randint(1, 7))
        expected = set(minimal_non_faces(K)) | _shift(minimal_non_faces(L), K.size)
        rec.case(set(minimal_non_faces(join(K, L))) == expected,
                 K=K.facet_sets, L=L.facet_sets)


@_check("simplicial_core", "f-vector convolution under join")
def _fvector_join(rec: _Recorder) -> None:
    rng = random.Random(15)
    for _ in range(150):
        K = random_complex(rng, rng.randint(0, 7))
        L = random_complex(rng, rng.randint(0, 7))
        fk = (1,) + f_vector(K)  # index a+1 counts faces of dimension a
        fl = (1,) + f_vector(L)
        conv = [0] * (len(fk) + len(fl) - 1)
        for a, x in enumerate(fk):
            for b, y in enumerate(fl):
                conv[a + b] += x * y
        rec.case(tuple(conv[1:]) == f_vector(join(K, L)), K=K.facet_sets, L=L.facet_sets)


@_check("simplicial_core", "f-vector matches brute-force face count")
def _fvector_brute(rec: _Recorder) -> None:
    rng = random.Random(16)
    for _ in range(100):
        K = random_complex(rng, rng.randint(0, 9))
        counts: dict[int, int] = {}
        for s in _faces_brute(K):
            if s:
                counts[popcount(s)] = counts.get(popcount(s), 0) + 1
        expected = tuple(counts[i] for i in range(1, max(counts, default=0) + 1))
        rec.case(f_vector(K) == expected, K=K.facet_sets)


@_check("simplicial_core", "skeleta are nested")
def _skeleton_nested(rec: _Recorder) -> None:
    rng = random.Random(17)
    for _ in range(100):
        K = random_complex(rng, rng.randint(1, 8))
        for j in range(0, K.dimension + 1):
            rec.case(is_subcomplex(skeleton(K, j - 1), skeleton(K, j)), K=K.facet_sets, j=j)
        rec.case(skeleton(K, K.dimension) == K, K=K.facet_sets, j=K.dimension)


@_check("simplicial_core", "Mobius fingerprint of the pentagon coskeleton")
def _mobius(rec: _Recorder) -> None:
    K = coskeleton(PolygonType(5), 0)
    nf = minimal_non_faces(K)
    rec.case(f_vector(K) == (5, 10, 5) and euler_characteristic(K) == 0
             and len(nf) == 5 and all(popcount(f) == 3 for f in nf),
             f_vector=f_vector(K), nonfaces=[to_members(f) for f in nf])


# -- polytope_types --------------------------------------------------------------

def _tower_grid():
    for m in range(3, 10):
        yield PolygonType(m)
    for n in range(2, 8):
        yield SimplexType(n)
    yield ProductType((PolygonType(5), PolygonType(5)))
    yield ProductType((SimplexType(3), SimplexType(3)))
    yield ProductType((SimplexType(2), SimplexType(3)))
    yield ProductType((PolygonType(4), SimplexType(3), SimplexType(2)))
    yield WedgeProductType(4, 2)
    yield WedgeProductType(4, 3)


@_check("polytope_types", "coskeleta increase with k")
def _tower(rec: _Recorder) -> None:
    for P in _tower_grid():
        for k in range(0, P.dim + 1):
            rec.case(is_subcomplex(coskeleton(P, k - 1), coskeleton(P, k)), polytope=P.spec(), k=k)
        rec.case(coskeleton(P, -1).facets == (0,), polytope=P.spec(), k=-1)


def _products_up_to(max_facets: int):
    factors = [PolygonType(m) for m in range(3, 7)] + [SimplexType(n) for n in range(2, 6)]
    for r in (2, 3):
        for combo in combinations_with_replacement(range(len(factors)), r):
            P = ProductType(tuple(factors[i] for i in combo))
            if P.num_facets <= max_facets:
                yield P


@_check("polytope_types", "product law: union of cotype complexes")
def _product_law(rec: _Recorder) -> None:
    for P in _products_up_to(20):
        for k in range(0, P.dim + 1):
            rec.case(coskeleton_product(P, k) == coskeleton(P, k), polytope=P.spec(), k=k)


@_check("polytope_types", "simplex coskeleta are the (k+1)-subsets")
def _simplex_identification(rec: _Recorder) -> None:
    for n in range(2, 9):
        for k in range(0, n):
            K = coskeleton(SimplexType(n), k)
            rec.case(len(K.facets) == comb(n, k + 1) and all(popcount(f) == k + 1 for f in K.facets),
                     n=n, k=k)


@_check("polytope_types", "adjacent-dimension incidences are reverse-ordered")
def _lattice_sanity(rec: _Recorder) -> None:
    for P in _tower_grid():
        if P.num_facets > 12:
            continue
        for k in range(0, P.dim):
            lower, upper = faces_of_dim(P, k), faces_of_dim(P, k + 1)
            covered = all(any(u & ~f == 0 and u != f for u in upper) for f in lower)
            no_reverse = not any(f & ~u == 0 for f in lower for u in upper)
            rec.case(covered and no_reverse, polytope=P.spec(), k=k)


WEDGE_GRID = ((3, 2), (4, 2), (4, 3), (5, 3))


@_check("polytope_types", "wedge vertex and surface counts")
def _wedge_counts(rec: _Recorder) -> None:
    for r, n in WEDGE_GRID:
        W = WedgeProductType(r, n)
        rec.case(len(faces_of_dim(W, 0)) == r * n ** (r - 2), r=r, n=n, what="vertices",
                 got=len(faces_of_dim(W, 0)))
        rec.case(len(wedge_surface_polygons(W)) == 2 * n ** (r - 1), r=r, n=n, what="surface",
                 got=len(wedge_surface_polygons(W)))


@_check("polytope_types", "wedge dimensions recomputed from tuples")
def _wedge_dims(rec: _Recorder) -> None:
    for r, n in WEDGE_GRID:
        W = WedgeProductType(r, n)
        rec.case(wedge_face_dim(W, (0,) * r) == W.dim == r * (n - 1) + 2, r=r, n=n, face="top")
        for k in range(0, W.dim + 1):
            for f in faces_of_dim(W, k):
                rec.case(wedge_face_dim(W, W.tuple_of(f)) == k, r=r, n=n, k=k, face=to_members(f))


@_check("polytope_types", "wedge faces match the brute-force lattice")
def _wedge_lattice(rec: _Recorder) -> None:
    for r, n in ((3, 2), (4, 2), (3, 3), (4, 3), (6, 2)):
        W = WedgeProductType(r, n)
        lattice = wedge_face_lattice(W)
        for k in range(-1, W.dim + 1):
            rec.case(set(faces_of_dim(W, k)) == set(lattice.get(k, ())), r=r, n=n, k=k)


@_check("polytope_types", "special-face complex is the product coskeleton")
def _wedge_special(rec: _Recorder) -> None:
    for r, n in WEDGE_GRID:
        W = WedgeProductType(r, n)
        P = ProductType((SimplexType(n),) * r)
        for j in range(0, min(r * (n - 1), 3)):
            full = (1 << W.num_facets) - 1
            got = SimplicialComplex.from_masks(
                W.num_facets, [full & ~f for f in wedge_special_faces(W, j)])
            rec.case(got == coskeleton(P, j), r=r, n=n, j=j)


# -- kneser_coloring -------------------------------------------------------------

@_check("kneser_coloring", "Lovasz formula for complete Kneser graphs")
def _lovasz(rec: _Recorder) -> None:
    for n in range(1, 9):
        for ell in range(1, n + 1):
            sets = [sum(1 << i for i in c) for c in combinations(range(n), ell)]
            G = kneser_graph(sets)
            chi, col = chromatic_number_exact(G)
            rec.case(chi == lovasz_kneser_chi(n, ell) and col.is_proper(G) and col.num_colors == chi,
                     n=n, ell=ell, chi=chi)


@_check("kneser_coloring", "closed-form Sarkaria indices of polygons and simplices")
def _closed_form_sind(rec: _Recorder) -> None:
    for m in range(3, 10):
        for k in range(0, 3):
            got = sarkaria_index(coskeleton(PolygonType(m), k))
            rec.case(got == sind_polygon_coskeleton(m, k), m=m, k=k, got=got)
    for n in range(2, 8):
        for k in range(0, n):
            got = sarkaria_index(coskeleton(SimplexType(n), k))
            rec.case(got == sind_simplex_coskeleton(n, k), n=n, k=k, got=got)


@_check("kneser_coloring", "join additivity")
def _join_additivity(rec: _Recorder) -> None:
    rng = random.Random(21)
    for _ in range(100):
        K = random_complex(rng, rng.randint(1, 8))
        L = random_complex(rng, rng.randint(1, 16 - K.size if K.size < 16 else 1))
        a, b = sarkaria_index(K), sarkaria_index(L)
        rec.case(sarkaria_index(join(K, L)) == a + b + 1, K=K.facet_sets, L=L.facet_sets)


@_check("kneser_coloring", "cotype linearity")
def _cotype_linearity(rec: _Recorder) -> None:
    rng = random.Random(22)
    pool = [PolygonType(m) for m in range(3, 8)] + [SimplexType(n) for n in range(2, 6)]
    for _ in range(100):
        while True:
            P = ProductType(tuple(rng.choice(pool) for _ in range(rng.randint(2, 3))))
            if P.num_facets <= 16:
                break
        lam = [rng.randint(0, f.dim) for f in P.factors]
        expected = sum(sarkaria_index(coskeleton(f, x)) for f, x in zip(P.factors, lam))
        expected += len(P.factors) - 1
        rec.case(sarkaria_index(cotype_complex(P, lam)) == expected, polytope=P.spec(), cotype=lam)


@_check("kneser_coloring", "Sarkaria index at most twice the dimension plus one")
def _dimension_cap(rec: _Recorder) -> None:
    rng = random.Random(23)
    for _ in range(150):
        K = random_complex(rng, rng.randint(1, 10))
        rec.case(sarkaria_index(K) <= 2 * K.dimension + 1, K=K.facet_sets)


@_check("kneser_coloring", "coloring witnesses are proper and tight")
def _witness(rec: _Recorder) -> None:
    rng = random.Random(24)
    for _ in range(150):
        K = random_complex(rng, rng.randint(1, 10))
        G = kneser_graph(minimal_non_faces(K))
        chi, col = chromatic_number_exact(G)
        rec.case(col.is_proper(G) and col.num_colors == chi
                 and len(set(col.assignment)) == chi, K=K.facet_sets)


# -- obstruction_engine ----------------------------------------------------------

@_check("obstruction_engine", "knapsack optimum matches the simplex closed form")
def _ilp_simplex(rec: _Recorder) -> None:
    for n in range(2, 7):
        for r in range(1, 5):
            for k in range(0, r * (n - 1)):
                res = knapsack_bound(simplex_knapsack(n, r, k))
                rec.case(res.feasible and res.value + r - 1 == edim_lower_simplex_products(n, r, k),
                         n=n, r=r, k=k, ilp=res.value)


@_check("obstruction_engine", "knapsack optimum matches the polygon closed form")
def _ilp_polygon(rec: _Recorder) -> None:
    for r_e in range(0, 5):
        for r_o in range(0, 5):
            r = r_e + r_o
            if r == 0:
                continue
            for k in range(0, 2 * r + 1):
                res = knapsack_bound(polygon_knapsack(r_e, r_o, k))
                mu = polygon_mu_star(r_e, r_o, k)
                for m in {4 * r_e + 3 * r_o, 6 * r_e + 7 * r_o}:
                    rec.case(res.feasible and -res.value == mu
                             and edim_lower_polygon_products(m, r_e, r_o, k) == m - 1 - mu,
                             r_e=r_e, r_o=r_o, k=k, m=m, ilp=res.value, mu_star=mu)


@_check("obstruction_engine", "three-path agreement on polygon products")
def _three_path_polygons(rec: _Recorder) -> None:
    for P in _polygon_products():
        r_e, r_o = _split(P)
        for k in range(0, P.dim + 1):
            closed = edim_lower_polygon_products(P.num_facets, r_e, r_o, k)
            ilp = P.num_facets - 1 + knapsack_bound(polygon_knapsack(r_e, r_o, k)).value
            linear = linear_index_lower(P, k)[0]
            brute = brute_force_lower(P, k).sind
            rec.case(closed == ilp == linear == brute, polytope=P.spec(), k=k,
                     closed=closed, ilp=ilp, linear=linear, brute=brute)


@_check("obstruction_engine", "three-path agreement on simplex products")
def _three_path_simplices(rec: _Recorder) -> None:
    for n in range(2, 6):
        for r in range(1, 4):
            P = ProductType((SimplexType(n),) * r)
            for k in range(0, r * (n - 1)):
                closed = edim_lower_simplex_products(n, r, k)
                ilp = knapsack_bound(simplex_knapsack(n, r, k)).value + r - 1
                brute = brute_force_lower(P, k).sind
                rec.case(closed == ilp == brute, n=n, r=r, k=k, closed=closed, ilp=ilp, brute=brute)


@_check("obstruction_engine", "lower bound never exceeds upper bound")
def _lower_upper(rec: _Recorder) -> None:
    for n in range(2, 8):
        for r in range(1, 6):
            for k in range(0, r * (n - 1)):
                lo, hi = edim_lower_simplex_products(n, r, k), edim_upper_simplex_products(n, r, k)
                rec.case(lo <= hi, family="simplices", n=n, r=r, k=k, lower=lo, upper=hi)
    for r_e in range(0, 5):
        for r_o in range(0, 5):
            r = r_e + r_o
            if r == 0:
                continue
            m = 4 * r_e + 3 * r_o
            for k in range(0, 2 * r):
                lo = edim_lower_polygon_products(m, r_e, r_o, k)
                hi = edim_upper_polygon_products(m, r_e, r_o, k)
                rec.case(lo <= hi, family="polygons", r_e=r_e, r_o=r_o, k=k, lower=lo, upper=hi)


def _verdict_families():
    """(name, params, k range, verdict function of (k, e))."""
    for n in range(2, 7):
        for r in range(1, 5):
            yield ("simplices", (n, r), range(0, r * (n - 1)),
                   lambda k, e, n=n, r=r: obstruct_simplex_products(n, r, k, e))
    for r_e in range(0, 4):
        for r_o in range(0, 4):
            if r_e + r_o:
                yield ("polygons", (r_e, r_o), range(0, 2 * (r_e + r_o)),
                       lambda k, e, a=r_e, b=r_o: obstruct_polygon_products(a, b, k, e))
    for r in range(4, 7):
        for n in range(2, 5):
            yield ("wedge skeleton", (r, n), range(0, r * (n - 1) + 2),
                   lambda k, e, r=r, n=n: obstruct_wedge_skeleton(r, n, k, e))


@_check("obstruction_engine", "verdicts are monotone in e and k")
def _monotone(rec: _Recorder) -> None:
    for name, params, ks, verdict in _verdict_families():
        table = {(k, e): verdict(k, e).obstructed for k in ks for e in range(0, 40)}
        for (k, e), obstructed in table.items():
            if not obstructed:
                continue
            if e > 0:
                rec.case(table[(k, e - 1)], family=name, params=params, k=k, e=e, direction="e-1")
            if (k + 1, e) in table:
                rec.case(table[(k + 1, e)], family=name, params=params, k=k, e=e, direction="k+1")


@_check("obstruction_engine", "certificates recheck from their own fields")
def _recheck(rec: _Recorder) -> None:
    for name, params, ks, verdict in _verdict_families():
        for k in ks:
            for e in range(0, 30, 3):
                cert = verdict(k, e)
                rec.case(cert.recheck() == cert.obstructed, family=name, params=params, k=k, e=e)
    for r in range(3, 7):
        for n in range(2, 5):
            for e in range(0, 10):
                cert = obstruct_wedge_surface(r, n, e)
                rec.case(cert.recheck() == cert.obstructed, family="wedge surface", r=r, n=n, e=e)
    for r_e in range(0, 4):
        for r_o in range(0, 4):
            if r_e + r_o == 0:
                continue
            for e in range(1, 16):
                try:
                    cert = obstruct_neighborly_polygons(r_e, r_o, e)
                except ConsistencyError as exc:
                    rec.case(False, family="neighborly", r_e=r_e, r_o=r_o, e=e, error=str(exc))
                    continue
                rec.case(cert.recheck() == cert.obstructed, family="neighborly",
                         r_e=r_e, r_o=r_o, e=e)


def _headline_checks() -> list[tuple[str, bool]]:
    out = []
    # two odd polygons, vertices kept, into the plane
    out.append(("two odd polygons k=0 e=2", obstruct_polygon_products(0, 2, 0, 2).obstructed))
    for r in range(1, 7):
        out.append((f"{r} odd polygons k=0 e={r}", obstruct_polygon_products(0, r, 0, r).obstructed))
    out.append(("triangle x triangle k=0 e=2", obstruct_simplex_products(3, 2, 0, 2).obstructed))
    out.append(("triangle x triangle k=0 e=3 free",
                not obstruct_simplex_products(3, 2, 0, 3).obstructed))
    P = ProductType((SimplexType(2), SimplexType(3)))
    sind = sarkaria_index(cotype_complex(P, (1, 0)))
    cert = obstruction_verdict(P.dim, P.num_facets, 1, 2,
                               BoundResult(sind, sind=sind, source="brute_force"))
    out.append(("Desargues cotype (1,0) Sind=3 and e=2 obstructed", sind == 3 and cert.obstructed))
    for k in range(0, 4):
        n = 2 * k + 3
        for e in range(0, 2 * k + 4):
            out.append((f"simplex on {n} facets k={k} e={e} matches Van Kampen-Flores",
                        obstruct_simplex_products(n, 1, k, e).obstructed == van_kampen_flores(k, e)))
    for r in range(4, 7):
        for n in (3, 4):
            out.append((f"wedge {r},{n} surface e<=r obstructed",
                        all(obstruct_wedge_surface(r, n, e).obstructed for e in range(0, r + 1))))
            out.append((f"wedge {r},{n} surface e=r+1 free",
                        not obstruct_wedge_surface(r, n, r + 1).obstructed))
    for r in range(3, 7):
        cert = obstruct_wedge_surface(r, 2, 4)
        out.append((f"wedge {r},2 surface e=4 unavailable", not cert.available and not cert.obstructed))
    return out


@_check("obstruction_engine", "headline verdicts")
def _headlines(rec: _Recorder) -> None:
    for label, ok in _headline_checks():
        rec.case(ok, case=label)


# -- cli_reports -----------------------------------------------------------------

SPEC_GRID = (
    "polygon:3", "polygon:17", "simplex:2", "simplex:9", "wedge:4,3", "wedge:3,2",
    "product:(polygon:5,polygon:5)", "product:(simplex:3,product:(polygon:4,simplex:2))",
    "product:(wedge:4,2,simplex:3)",
)


@_check("cli_reports", "spec text round-trips")
def _round_trip(rec: _Recorder) -> None:
    for text in SPEC_GRID:
        P = parse_spec(text)
        rec.case(parse_spec(render(P)) == P and render(parse_spec(render(P))) == render(P), spec=text)
    for bad in ("polygon:2", "simplex:1", "wedge:2,3", "polygon:", "cube:3", "product:()",
                "polygon:5 x", "product:(polygon:5"):
        try:
            parse_spec(bad)
            rec.case(False, spec=bad, expected="rejection")
        except InputError:
            rec.case(True, spec=bad)


REPORT_QUERIES = (
    Query("product:(polygon:5,polygon:5)", "skeleton:0", 2),
    Query("wedge:4,3", "surface", 4),
    Query("simplex:5", "skeleton:1", 3),
    Query("product:(simplex:3,simplex:3)", "skeleton:0", 3),
    Query("wedge:4,2", "surface", 4),
    Query("product:(polygon:4,polygon:5,polygon:6)", "neighborly", 4),
    Query("product:(polygon:4,simplex:3)", "skeleton:1", 2),
)


@_check("cli_reports", "reports are deterministic, consistent and round-trip")
def _reports(rec: _Recorder) -> None:
    for q in REPORT_QUERIES:
        a, b = run_query(q), run_query(q)
        text = a.to_json()
        rec.case(text == b.to_json() and Report.from_json(text) == a
                 and Report.from_json(text).to_json() == text and a.consistent,
                 query=q.__dict__)


@_check("cli_reports", "documented query outcomes")
def _query_examples(rec: _Recorder) -> None:
    r = run_query(REPORT_QUERIES[0])
    rec.case(r.obstructed and r.threshold_e == 3 and len(r.agreement) >= 3 and r.consistent,
             query="two pentagons skeleton:0 e=2", threshold=r.threshold_e)
    r = run_query(REPORT_QUERIES[1])
    rec.case(r.obstructed and r.threshold_e == 5 and r.consistent,
             query="wedge:4,3 surface e=4", threshold=r.threshold_e)
    r = run_query(REPORT_QUERIES[2])
    rec.case(r.obstructed and r.agreement.get("van_kampen_flores") is True,
             query="simplex:5 skeleton:1 e=3")
    r = run_query(REPORT_QUERIES[4])
    rec.case(not r.available and not r.obstructed, query="wedge:4,2 surface e=4")


# -- driver ----------------------------------------------------------------------

def _format_failure(inputs: dict) -> str:
    return ", ".join(f"{k}={v!r}" for k, v in inputs.items())


def verify_suite(scope: str = "all", stream: TextIO | None = None) -> Summary:
    """Run the checks of one module scope (or ``all``) and print a summary.

    Returns a :class:`Summary`; failures are results, never exceptions,
    except that an unknown scope raises :class:`InputError`.
    """
    if scope != "all" and scope not in SCOPES:
        raise InputError(f"unknown scope {scope!r}; expected one of {SCOPES + ('all',)}")
    out = stream if stream is not None else sys.stdout
    summary = Summary()
    for sc in (SCOPES if scope == "all" else (scope,)):
        for name, fn in _CHECKS[sc]:
            result = CheckResult(sc, name)
            start = time.perf_counter()
            try:
                fn(_Recorder(result))
            except PolyObstructError as exc:
                result.failures.append({"error": f"{type(exc).__name__}: {exc}"})
            result.seconds = time.perf_counter() - start
            summary.results.append(result)
            status = "PASS" if result.ok else "FAIL"
            print(f"{status}  {sc:<19} {name}  ({result.cases} cases, {result.seconds:.2f}s)",
                  file=out)
            for inputs in result.failures[:MAX_DUMPED]:
                print(f"      counterexample: {_format_failure(inputs)}", file=out)
            if len(result.failures) > MAX_DUMPED:
                print(f"      ... {len(result.failures) - MAX_DUMPED} more", file=out)
    total = sum(r.cases for r in summary.results)
    print(f"{len(summary.results) - len(summary.failed)}/{len(summary.results)} checks passed"
          f" over {total} cases", file=out)
    return summary
