"""Per-graph invariant bundle: lazily computed facts and the serialisable report."""

from __future__ import annotations

import json
import time
from dataclasses import asdict, dataclass, field, fields
from functools import cached_property
from typing import Any, Optional

from . import bits
from .betti import AlgebraInvariants, induced_matching_bound, reg_pd_depth_dim, two_collage_bound
from .covers import CoverCatalog, cover_ideal, minimal_covers
from .errors import CrossCheckError, DegenerateInputError, ResourceCapError
from .graph import Graph, free_vertices, has_dominated_edge, is_chordal, is_complete_multipartite
from .io import to_graph6
from .vnum import VWitness, cover_v_number, edge_v_number

SCHEMA = "vnumber.report/1"
BETTI_MAX_N = 24
VNUM_MAX_N = 28


class Facts:
    """Lazily computed invariants of one graph; each quantity is computed at most once."""

    def __init__(self, g: Graph, field: str = "gf2", *, force: bool = False, jobs: int = 1):
        self.g = g
        self.field = field
        self.force = force
        self.jobs = jobs
        self.timings: dict[str, float] = {}

    def _timed(self, key, fn, *args, **kwargs):
        t0 = time.perf_counter()
        out = fn(*args, **kwargs)
        self.timings[key] = self.timings.get(key, 0.0) + time.perf_counter() - t0
        return out

    def _cap_vnum(self):
        if self.g.n > VNUM_MAX_N and not self.force:
            raise ResourceCapError(f"v-number search refused for n={self.g.n} > {VNUM_MAX_N} (use --force)")

    def _cap_betti(self):
        if self.g.n > BETTI_MAX_N and not self.force:
            raise ResourceCapError(f"Betti computation refused for n={self.g.n} > {BETTI_MAX_N} (use --force)")

    @property
    def has_edges(self) -> bool:
        return self.g.m > 0

    @cached_property
    def catalog(self) -> CoverCatalog:
        return self._timed("covers", minimal_covers, self.g)

    @property
    def alpha0(self) -> int:
        return self.catalog.alpha0

    @property
    def bight(self) -> int:
        return self.catalog.bight

    @cached_property
    def cover_v(self) -> tuple[int, VWitness]:
        self._cap_vnum()
        return self._timed("v_cover", cover_v_number, self.g)

    @cached_property
    def edge_v(self) -> tuple[int, VWitness]:
        self._cap_vnum()
        return self._timed("v_edge", edge_v_number, self.g)

    @cached_property
    def algebra(self) -> AlgebraInvariants:
        self._cap_betti()
        return self._timed("betti", reg_pd_depth_dim, self.g, self.field, jobs=self.jobs)

    @cached_property
    def multipartite(self) -> tuple[bool, Optional[list[int]]]:
        return is_complete_multipartite(self.g)

    @cached_property
    def dominated_edge(self) -> Optional[tuple[int, int]]:
        return has_dominated_edge(self.g)

    @cached_property
    def chordal(self) -> bool:
        return is_chordal(self.g)

    @cached_property
    def im_bound(self) -> int:
        return self._timed("bounds", induced_matching_bound, cover_ideal(self.g))

    @cached_property
    def collage_bound(self) -> int:
        return self._timed("bounds", two_collage_bound, cover_ideal(self.g))


def _witness_json(w: VWitness) -> dict[str, list[int]]:
    return {"set": [v + 1 for v in bits.members(w.witness)], "prime": [v + 1 for v in bits.members(w.prime.vars)]}


@dataclass
class InvariantReport:
    """Everything computed for one graph. Vertex labels in witnesses are 1-based."""

    source: str
    n: int
    m: int
    graph6: str
    complete_multipartite: bool
    chordal: bool
    has_free_vertex: bool
    dominated_edge: Optional[list[int]]
    alpha0: Optional[int] = None
    bight: Optional[int] = None
    unmixed: Optional[bool] = None
    v_edge: Optional[int] = None
    v_cover: Optional[int] = None
    witness_edge: Optional[dict[str, list[int]]] = None
    witness_cover: Optional[dict[str, list[int]]] = None
    reg_RmodJ: Optional[int] = None
    pd_RmodI: Optional[int] = None
    depth_RmodI: Optional[int] = None
    dim_RmodI: Optional[int] = None
    cohen_macaulay: Optional[bool] = None
    im_lower_bound: Optional[int] = None
    collage_upper_bound: Optional[int] = None
    field_tag: str = "gf2"
    timings: dict[str, float] = field(default_factory=dict)
    schema: str = SCHEMA

    def to_json(self, **kwargs) -> str:
        return json.dumps(asdict(self), **kwargs)

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "InvariantReport":
        if data.get("schema") != SCHEMA:
            raise ValueError(f"unsupported report schema {data.get('schema')!r}")
        names = {f.name for f in fields(cls)}
        unknown = set(data) - names
        if unknown:
            raise ValueError(f"unknown report fields {sorted(unknown)}")
        return cls(**data)

    @classmethod
    def from_json(cls, text: str) -> "InvariantReport":
        return cls.from_dict(json.loads(text))

    def row(self) -> dict[str, Any]:
        """Flat CSV-friendly view (witnesses and timings dropped)."""
        out = asdict(self)
        for key in ("witness_edge", "witness_cover", "timings", "schema"):
            out.pop(key)
        if out["dominated_edge"] is not None:
            out["dominated_edge"] = "-".join(map(str, out["dominated_edge"]))
        return out


def build_report(facts: Facts, source: str = "", *, allow_edgeless: bool = False) -> InvariantReport:
    g = facts.g
    dom = facts.dominated_edge
    report = InvariantReport(
        source=source,
        n=g.n,
        m=g.m,
        graph6=to_graph6(g) if g.n <= 62 else "",
        complete_multipartite=facts.multipartite[0],
        chordal=facts.chordal,
        has_free_vertex=free_vertices(g) != 0,
        dominated_edge=[dom[0] + 1, dom[1] + 1] if dom else None,
        field_tag=facts.field,
    )
    if not facts.has_edges:
        if not allow_edgeless:
            raise DegenerateInputError("graph has no edges (pass allow_edgeless to get a partial report)")
        return report
    facts._cap_vnum()
    facts._cap_betti()
    v_cover, w_cover = facts.cover_v
    v_edge, w_edge = facts.edge_v
    alg = facts.algebra
    report.alpha0 = facts.alpha0
    report.bight = facts.bight
    report.unmixed = facts.catalog.unmixed
    report.v_edge = v_edge
    report.v_cover = v_cover
    report.witness_edge = _witness_json(w_edge)
    report.witness_cover = _witness_json(w_cover)
    report.reg_RmodJ = alg.reg_RmodJ
    report.pd_RmodI = alg.pd_RmodI
    report.depth_RmodI = alg.depth_RmodI
    report.dim_RmodI = alg.dim_RmodI
    report.cohen_macaulay = alg.cm
    report.im_lower_bound = facts.im_bound
    report.collage_upper_bound = facts.collage_bound
    report.timings = {k: round(v, 6) for k, v in facts.timings.items()}
    return report


def report_violations(r: InvariantReport) -> list[str]:
    """Theorem-level relations every report must satisfy; returns human-readable failures."""
    if r.v_cover is None:
        return []
    bad = []
    if not r.v_cover <= r.reg_RmodJ:
        bad.append(f"v(J)={r.v_cover} > reg(R/J)={r.reg_RmodJ}")
    if not r.v_cover >= r.alpha0 - 1:
        bad.append(f"v(J)={r.v_cover} < alpha0-1={r.alpha0 - 1}")
    if r.cohen_macaulay != (r.v_cover == r.reg_RmodJ == r.alpha0 - 1):
        bad.append(f"Cohen-Macaulay={r.cohen_macaulay} but v(J)={r.v_cover}, reg={r.reg_RmodJ}, alpha0-1={r.alpha0 - 1}")
    if not r.im_lower_bound <= r.reg_RmodJ <= r.collage_upper_bound:
        bad.append(f"bounds violated: {r.im_lower_bound} <= {r.reg_RmodJ} <= {r.collage_upper_bound}")
    if not r.reg_RmodJ >= r.bight - 1:
        bad.append(f"reg(R/J)={r.reg_RmodJ} < bight-1={r.bight - 1}")
    if r.dominated_edge is not None and not r.v_cover <= r.bight - 1:
        bad.append(f"dominated edge present but v(J)={r.v_cover} > bight-1={r.bight - 1}")
    if r.complete_multipartite and not r.v_cover == r.reg_RmodJ == r.n - 2:
        bad.append(f"complete multipartite but v(J)={r.v_cover}, reg={r.reg_RmodJ}, n-2={r.n - 2}")
    if r.depth_RmodI + r.pd_RmodI != r.n:
        bad.append(f"depth+pd={r.depth_RmodI + r.pd_RmodI} != n={r.n}")
    return bad


def check_report(r: InvariantReport) -> InvariantReport:
    bad = report_violations(r)
    if bad:
        raise CrossCheckError(
            f"graph {r.graph6 or r.source} contradicts a proven relation: " + "; ".join(bad)
            + " -- most likely an engine bug; re-verify independently before treating it as a finding",
            kind="theorem",
        )
    return r


def compute_report(
    g: Graph,
    source: str = "",
    field: str = "gf2",
    *,
    allow_edgeless: bool = False,
    force: bool = False,
    jobs: int = 1,
) -> InvariantReport:
    facts = Facts(g, field, force=force, jobs=jobs)
    return check_report(build_report(facts, source, allow_edgeless=allow_edgeless))
