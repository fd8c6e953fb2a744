"""Queries, the multi-path pipeline behind them, and canonical reports."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from itertools import combinations, product

from . import __version__
from .errors import InputError, ResourceLimitError
from .kneser import DEFAULT_COLORING_BUDGET
from .obstruction import (
    BoundResult,
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
    polygon_knapsack,
    simplex_knapsack,
    van_kampen_flores,
)
from .polytopes import (
    CombinatorialType,
    PolygonType,
    ProductType,
    SimplexType,
    WedgeProductType,
    wedge_surface,
)
from .simplicial import SimplicialComplex, is_subcomplex
from .spec_language import parse_spec, render

SCHEMA_VERSION = "polyobstruct.report/1"
MODES = ("closed_form", "ilp", "brute_force")


@dataclass(frozen=True)
class Query:
    polytope_spec: str
    target: str
    e: int
    mode: str = "all"

    def modes(self) -> tuple[str, ...]:
        if self.mode == "all":
            return MODES
        if self.mode not in MODES:
            raise InputError(f"unknown mode {self.mode!r}; expected one of {MODES + ('all',)}")
        return (self.mode,)


@dataclass
class Report:
    query: dict
    polytope: str
    d: int
    m: int
    k: int | None
    available: bool
    obstructed: bool
    threshold_e: int | None
    bounds: dict = field(default_factory=dict)
    certificate: dict = field(default_factory=dict)
    agreement: dict = field(default_factory=dict)
    errors: dict = field(default_factory=dict)
    engine_version: str = __version__
    schema_version: str = SCHEMA_VERSION

    @property
    def consistent(self) -> bool:
        return all(self.agreement.values())

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)

    @classmethod
    def from_json(cls, text: str) -> "Report":
        return cls(**json.loads(text))

    def to_table(self) -> str:
        lines = [
            f"polytope     {self.polytope}  (d={self.d}, m={self.m})",
            f"target       {self.query['target']}  k={self.k}  e={self.query['e']}",
        ]
        if not self.available:
            lines.append(f"verdict      no obstruction available: {self.certificate.get('note', '')}")
            return "\n".join(lines)
        lines.append(f"verdict      {'OBSTRUCTED' if self.obstructed else 'not obstructed'}"
                     f"  (obstructed iff e < {self.threshold_e})")
        lines.append(f"{'mode':<13}{'sind':>6}{'lower':>7}{'upper':>7}{'thresh':>8}")
        for mode in MODES:
            b = self.bounds.get(mode)
            if b is None:
                continue
            fmt = lambda x: "-" if x is None else str(x)  # noqa: E731
            lines.append(f"{mode:<13}{fmt(b.get('sind')):>6}{fmt(b['edim_lower']):>7}"
                         f"{fmt(b.get('edim_upper')):>7}{fmt(b['threshold_e']):>8}")
        for mode, msg in sorted(self.errors.items()):
            lines.append(f"{mode:<13}error: {msg}")
        for name, ok in sorted(self.agreement.items()):
            lines.append(f"agree        {name}: {'yes' if ok else 'NO'}")
        if self.certificate.get("note"):
            lines.append(f"note         {self.certificate['note']}")
        return "\n".join(lines)


# -- target and polytope classification --------------------------------------

def flatten(P: CombinatorialType) -> CombinatorialType:
    if not isinstance(P, ProductType):
        return P
    out = []
    for f in P.factors:
        f = flatten(f)
        out.extend(f.factors if isinstance(f, ProductType) else (f,))
    return ProductType(tuple(out)) if len(out) > 1 else out[0]


def _factors(P: CombinatorialType) -> tuple:
    return P.factors if isinstance(P, ProductType) else (P,)


def classify(P: CombinatorialType) -> str:
    if isinstance(P, WedgeProductType):
        return "wedge"
    fs = _factors(P)
    if all(isinstance(f, PolygonType) for f in fs):
        return "polygons"
    if all(isinstance(f, SimplexType) for f in fs) and len({f.n for f in fs}) == 1:
        return "simplices"
    if all(isinstance(f, (PolygonType, SimplexType)) for f in fs):
        return "mixed"
    return "other"


def parse_target(target: str) -> tuple[str, int | None]:
    name, _, arg = target.partition(":")
    if name in ("skeleton", "special"):
        try:
            return name, int(arg)
        except ValueError:
            raise InputError(f"target {target!r} needs an integer, e.g. {name}:0") from None
    if name in ("surface", "neighborly") and not arg:
        return name, None
    raise InputError(f"unknown target {target!r}; expected skeleton:K, special:K, surface or neighborly")


@dataclass(frozen=True)
class _Plan:
    """The complex whose embeddability bound decides the query."""

    d: int
    m: int
    k: int
    kind: str                 # polygons | simplices | mixed | other
    poly: CombinatorialType   # the product whose coskeleton is bounded
    j: int                    # its coskeleton dimension
    theorem: object           # zero-argument callable returning a certificate


def _plan(P: CombinatorialType, target: str, e: int) -> _Plan:
    name, arg = parse_target(target)
    kind = classify(P)
    d, m = P.dim, P.num_facets
    if kind == "wedge":
        r, n = P.r, P.n
        if name == "neighborly":
            raise InputError("target neighborly applies to products of polygons")
        if name == "surface":
            sub, j, k = r - 1, 0, 2
            theorem = lambda: obstruct_wedge_surface(r, n, e)  # noqa: E731
        elif name == "special":
            sub, j, k = r, arg - 2, arg
            theorem = lambda: obstruct_wedge_special_faces(r, n, arg, e)  # noqa: E731
        else:
            k = arg
            sub, j = {0: (r - 2, 0), 1: (r - 1, 0)}.get(k, (r, k - 2))
            theorem = lambda: obstruct_wedge_skeleton(r, n, k, e)  # noqa: E731
        return _Plan(d, m, k, "simplices", ProductType((SimplexType(n),) * max(sub, 1)), j, theorem)
    if name in ("surface", "special"):
        raise InputError(f"target {name} applies to wedge products only")
    fs = _factors(P)
    if name == "neighborly":
        if kind != "polygons":
            raise InputError("target neighborly applies to products of polygons")
        k = e // 2 - 1
        r_e = sum(f.m % 2 == 0 for f in fs)
        theorem = lambda: obstruct_neighborly_polygons(r_e, len(fs) - r_e, e)  # noqa: E731
    else:
        k = arg
        theorem = None
        if kind == "polygons":
            r_e = sum(f.m % 2 == 0 for f in fs)
            theorem = lambda: obstruct_polygon_products(r_e, len(fs) - r_e, k, e)  # noqa: E731
        elif kind == "simplices":
            theorem = lambda: obstruct_simplex_products(fs[0].n, len(fs), k, e)  # noqa: E731
    if not 0 <= k < d:
        if name == "neighborly":
            return _Plan(d, m, k, kind, P, k, theorem)
        raise InputError(f"skeleton dimension must satisfy 0 <= k < {d}, got {k}")
    return _Plan(d, m, k, kind, P, k, theorem)


# -- the three paths -----------------------------------------------------------

def _closed_form(plan: _Plan) -> tuple[BoundResult, dict]:
    fs = _factors(plan.poly)
    m_sub = plan.poly.num_facets
    if plan.kind == "polygons":
        r_e = sum(f.m % 2 == 0 for f in fs)
        r_o = len(fs) - r_e
        lower = edim_lower_polygon_products(m_sub, r_e, r_o, plan.j)
        upper = edim_upper_polygon_products(m_sub, r_e, r_o, plan.j) if plan.j < 2 * len(fs) else None
        return BoundResult(lower, upper, source="closed_form"), {}
    if plan.kind == "simplices":
        n, r = fs[0].n, len(fs)
        lower = edim_lower_simplex_products(n, r, plan.j)
        upper = edim_upper_simplex_products(n, r, plan.j) if plan.poly.dim == plan.d else None
        return BoundResult(lower, upper, source="closed_form"), {}
    if plan.kind == "mixed":
        lower, lam = linear_index_lower(plan.poly, plan.j)
        return BoundResult(lower, sind=lower, source="closed_form"), {"face_type": list(lam.parts)}
    raise InputError(f"no closed form for {render(plan.poly)}")


def _ilp(plan: _Plan) -> tuple[BoundResult, dict]:
    fs = _factors(plan.poly)
    if plan.kind == "polygons":
        r_e = sum(f.m % 2 == 0 for f in fs)
        res = knapsack_bound(polygon_knapsack(r_e, len(fs) - r_e, plan.j))
        lower = plan.poly.num_facets - 1 + res.value
    elif plan.kind == "simplices":
        res = knapsack_bound(simplex_knapsack(fs[0].n, len(fs), plan.j))
        lower = res.value + len(fs) - 1
    else:
        raise InputError(f"the knapsack program needs identical simplices or polygons, got {render(plan.poly)}")
    return BoundResult(lower, source="ilp"), {"ilp_mu": list(res.mu)}


def _brute_force(plan: _Plan, budget: int | None) -> tuple[BoundResult, dict]:
    bf = brute_force_lower(plan.poly, plan.j, budget)
    return BoundResult(bf.sind, sind=bf.sind, source="brute_force"), {
        "face_type": list(bf.face_type.parts),
        "minimal_non_faces": bf.num_nonfaces,
        "chromatic_number": bf.chromatic_number,
    }


def _surface_embedding_check(W: WedgeProductType) -> bool:
    """The edges ([n], [n]\\j_2, ...) carry a product coskeleton inside the surface complex."""
    n = W.n
    edge_gens = [sum(1 << W.facet_index(i, j) for i, j in enumerate(js, start=1))
                 for js in product(range(n), repeat=W.r - 1)]
    sub = SimplicialComplex.from_masks(W.num_facets, edge_gens)
    return is_subcomplex(sub, wedge_surface(W))


def run_query(q: Query, budget: int | None = DEFAULT_COLORING_BUDGET) -> Report:
    """Run every requested path and assemble a report.

    Resource-limit failures of a path are recorded in ``errors`` and the
    remaining paths still run.  Theorem/pipeline mismatches raise
    :class:`ConsistencyError`.
    """
    modes = q.modes()
    P = flatten(parse_spec(q.polytope_spec))
    plan = _plan(P, q.target, q.e)
    query = {"polytope_spec": q.polytope_spec, "target": q.target, "e": q.e, "mode": q.mode}
    report = Report(query=query, polytope=render(P), d=plan.d, m=plan.m, k=plan.k,
                    available=True, obstructed=False, threshold_e=None)

    theorem_cert = plan.theorem() if plan.theorem is not None else None
    if theorem_cert is not None and not theorem_cert.available:
        report.available = False
        report.certificate = {"theorem": theorem_cert.theorem, "note": theorem_cert.note}
        return report

    runners = {"closed_form": _closed_form, "ilp": _ilp,
               "brute_force": lambda p: _brute_force(p, budget)}
    details: dict = {}
    for mode in modes:
        if mode == "ilp" and plan.kind not in ("polygons", "simplices"):
            report.errors[mode] = "not applicable to this polytope"
            continue
        if mode == "closed_form" and plan.kind == "other":
            report.errors[mode] = "not applicable to this polytope"
            continue
        try:
            bound, extra = runners[mode](plan)
        except ResourceLimitError as exc:
            report.errors[mode] = f"resource limit: {exc}"
            continue
        cert = obstruction_verdict(plan.d, plan.m, plan.k, q.e, bound)
        report.bounds[mode] = {
            "sind": bound.sind, "edim_lower": bound.edim_lower, "edim_upper": bound.edim_upper,
            "threshold_e": cert.threshold_e, "obstructed": cert.obstructed, **extra,
        }
        details.update(extra)

    ran = [m for m in MODES if m in report.bounds]
    for a, b in combinations(ran, 2):
        report.agreement[f"{a}={b}"] = (
            report.bounds[a]["edim_lower"] == report.bounds[b]["edim_lower"]
            and report.bounds[a]["threshold_e"] == report.bounds[b]["threshold_e"])
    if theorem_cert is not None and ran:
        report.agreement["theorem"] = all(
            report.bounds[m]["threshold_e"] == theorem_cert.threshold_e for m in ran)
    if isinstance(P, SimplexType) and 0 <= plan.k <= (plan.d - 2) // 2 and ran:
        report.agreement["van_kampen_flores"] = (
            van_kampen_flores(plan.k, q.e) == report.bounds[ran[0]]["obstructed"])
    if isinstance(P, WedgeProductType) and parse_target(q.target)[0] == "surface":
        report.agreement["surface_embedding"] = _surface_embedding_check(P)

    primary = ran[0] if ran else None
    if primary is not None:
        report.threshold_e = report.bounds[primary]["threshold_e"]
        report.obstructed = report.bounds[primary]["obstructed"]
    elif theorem_cert is not None:
        report.threshold_e = theorem_cert.threshold_e
        report.obstructed = theorem_cert.obstructed
    report.certificate = {
        "theorem": theorem_cert.theorem if theorem_cert else "",
        "note": theorem_cert.note if theorem_cert else "",
        "face_type": details.get("face_type"),
        "minimal_non_faces": details.get("minimal_non_faces"),
        "chromatic_number": details.get("chromatic_number"),
        "ilp_mu": details.get("ilp_mu"),
    }
    return report


def sweep(spec: str, target_kind: str, e_range: range, k_range: range | None,
          mode: str = "closed_form", budget: int | None = DEFAULT_COLORING_BUDGET) -> list[dict]:
    """Verdict grid over ``k`` and ``e``; one row per query."""
    rows = []
    ks = list(k_range) if k_range is not None else [None]
    for k in ks:
        target = target_kind if k is None else f"{target_kind}:{k}"
        for e in e_range:
            rep = run_query(Query(spec, target, e, mode), budget)
            rows.append({"k": rep.k, "e": e, "available": rep.available,
                         "obstructed": rep.obstructed, "threshold_e": rep.threshold_e,
                         "consistent": rep.consistent})
    return rows

