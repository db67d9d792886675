"""Theorem-verification suites and the counterexample search for v(J) > bight - 1."""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Any, Callable, Iterable, Iterator, Optional

from . import families
from .betti import betti_table
from .covers import cover_ideal
from .errors import CrossCheckError, ResourceCapError
from .graph import Graph, induced_subgraph, is_complete_multipartite
from .ideal import edge_ideal
from .io import to_graph6
from .report import Facts, InvariantReport, build_report


@dataclass(frozen=True)
class Instance:
    label: str
    graph: Graph
    params: dict = field(default_factory=dict)


@dataclass
class Verdict:
    status: str  # "pass", "fail", "skip" or "error"
    expected: str = ""
    actual: str = ""


@dataclass
class SuiteResult:
    suite: str
    instances: int = 0
    skipped: int = 0
    failures: list[dict[str, Any]] = field(default_factory=list)
    internal_errors: list[dict[str, Any]] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures and not self.internal_errors

    def to_dict(self) -> dict[str, Any]:
        out = asdict(self)
        out["passed"] = self.passed
        return out


def _verdict(ok: bool, expected: str, actual: str) -> Verdict:
    return Verdict("pass" if ok else "fail", expected, actual)


def _is_cycle(g: Graph) -> bool:
    if g.n < 3 or g.m != g.n or any(g.degree(v) != 2 for v in g):
        return False
    seen, frontier = 1, 1
    while frontier:
        nxt = 0
        for v in range(g.n):
            if frontier >> v & 1:
                nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= nxt
    return seen == g.vertices


def check_cycles(f: Facts, params: dict) -> Verdict:
    g = f.g
    if not _is_cycle(g):
        return Verdict("skip")
    v = f.cover_v[0]
    ok = v == g.n // 2 and v <= f.alpha0 and (g.n == 4 or v <= f.bight - 1)
    return _verdict(ok, f"v(J)={g.n // 2}, <= alpha0, <= bight-1 unless n=4",
                    f"v(J)={v}, alpha0={f.alpha0}, bight={f.bight}")


def check_multipartite(f: Facts, params: dict) -> Verdict:
    if not f.has_edges or not f.multipartite[0]:
        return Verdict("skip")
    v, reg = f.cover_v[0], f.algebra.reg_RmodJ
    n = f.g.n
    return _verdict(v == reg == n - 2, f"v(J)=reg(R/J)={n - 2}", f"v(J)={v}, reg(R/J)={reg}")


def check_v_le_reg(f: Facts, params: dict) -> Verdict:
    if not f.has_edges:
        return Verdict("skip")
    v, reg = f.cover_v[0], f.algebra.reg_RmodJ
    return _verdict(v <= reg, "v(J) <= reg(R/J)", f"v(J)={v}, reg(R/J)={reg}")


def check_cohen_macaulay(f: Facts, params: dict) -> Verdict:
    if not f.has_edges:
        return Verdict("skip")
    alg = f.algebra
    v = f.cover_v[0]
    rhs = v == alg.reg_RmodJ == f.alpha0 - 1
    return _verdict(alg.cm == rhs, "CM <=> v(J)=reg(R/J)=alpha0-1",
                    f"cm={alg.cm} (depth={alg.depth_RmodI}, dim={alg.dim_RmodI}), v(J)={v}, "
                    f"reg={alg.reg_RmodJ}, alpha0={f.alpha0}")


def check_glued_cycles(f: Facts, params: dict) -> Verdict:
    k = params.get("k")
    if k is None:
        return Verdict("skip")
    v = f.cover_v[0]
    alg = f.algebra
    got = (v, alg.reg_RmodJ, alg.depth_RmodI, f.alpha0)
    want = (3 * k, 4 * k, 2 * k, 3 * k + 1)
    return _verdict(got == want, "v(J)={}, reg(R/J)={}, depth(R/I)={}, alpha0={}".format(*want),
                    "v(J)={}, reg(R/J)={}, depth(R/I)={}, alpha0={}".format(*got))


def check_terai(f: Facts, params: dict) -> Verdict:
    if not f.has_edges:
        return Verdict("skip")
    pd = betti_table(edge_ideal(f.g), f.field).pd
    reg = betti_table(cover_ideal(f.g), f.field).reg
    return _verdict(pd == reg + 1, "pd(R/I) = reg(R/J) + 1", f"pd(R/I)={pd}, reg(R/J)={reg}")


def check_sandwich(f: Facts, params: dict) -> Verdict:
    if not f.has_edges:
        return Verdict("skip")
    lo, reg, hi = f.im_bound, f.algebra.reg_RmodJ, f.collage_bound
    return _verdict(lo <= reg <= hi, "induced matching <= reg(R/J) <= 2-collage", f"{lo} <= {reg} <= {hi}")


def check_bight_bound(f: Facts, params: dict) -> Verdict:
    if not f.has_edges or f.dominated_edge is None:
        return Verdict("skip")
    v, reg = f.cover_v[0], f.algebra.reg_RmodJ
    b = f.bight - 1
    return _verdict(v <= b <= reg, "v(J) <= bight-1 <= reg(R/J)", f"v(J)={v}, bight-1={b}, reg={reg}")


def check_free_vertex(f: Facts, params: dict) -> Verdict:
    g = f.g
    has_leaf = any(g.degree(v) == 1 for v in g)
    if not f.has_edges or not (has_leaf or f.chordal):
        return Verdict("skip")
    v = f.cover_v[0]
    ok = f.dominated_edge is not None and v <= f.bight - 1
    return _verdict(ok, "dominated edge exists and v(J) <= bight-1",
                    f"dominated_edge={f.dominated_edge}, v(J)={v}, bight-1={f.bight - 1}")


def check_lower_bound(f: Facts, params: dict) -> Verdict:
    if not f.has_edges:
        return Verdict("skip")
    v = f.cover_v[0]
    return _verdict(v >= f.alpha0 - 1, "v(J) >= alpha0-1", f"v(J)={v}, alpha0={f.alpha0}")


@dataclass(frozen=True)
class Suite:
    name: str
    summary: str
    check: Callable[[Facts, dict], Verdict]


SUITES = {
    s.name: s
    for s in [
        Suite("cycles", "v(J(C_n)) = floor(n/2), <= alpha0, and <= bight-1 for n != 4", check_cycles),
        Suite("multipartite", "complete multipartite: v(J) = reg(R/J) = n-2", check_multipartite),
        Suite("v-le-reg", "v(J) <= reg(R/J) for every graph", check_v_le_reg),
        Suite("cohen-macaulay", "R/I Cohen-Macaulay <=> v(J) = reg(R/J) = alpha0-1", check_cohen_macaulay),
        Suite("glued-cycles", "k seven-cycles at a vertex: v=3k, reg=4k, depth=2k, alpha0=3k+1", check_glued_cycles),
        Suite("terai", "pd(R/I) = reg(R/J) + 1 from two independent Betti tables", check_terai),
        Suite("sandwich", "induced matching <= reg(R/J) <= 2-collage on J(G)", check_sandwich),
        Suite("bight-bound", "dominated edge => v(J) <= bight-1 <= reg(R/J)", check_bight_bound),
        Suite("free-vertex", "leaf or chordal => dominated edge and v(J) <= bight-1", check_free_vertex),
        Suite("lower-bound", "v(J) >= alpha0-1", check_lower_bound),
    ]
}

DEFAULT_PARTS = "1,1;1,2;2,2;1,1,1;2,2,2;1,2,3;3,3;2,3"
GLUED_FORCE_FROM = 3


def builtin_instances(suite: str, *, ns: Optional[list[int]] = None, ks: Optional[list[int]] = None,
                      parts: Optional[str] = None, force: bool = False) -> Optional[list[Instance]]:
    """Default corpus for suites tied to a family; ``None`` for the general suites."""
    if suite == "cycles":
        return [Instance(f"C_{n}", families.cycle(n)) for n in (ns or range(3, 13))]
    if suite == "multipartite":
        out = []
        for block in (parts or DEFAULT_PARTS).split(";"):
            sizes = [int(s) for s in block.split(",")]
            out.append(Instance(f"K_({block})", families.complete_multipartite(sizes)))
        return out
    if suite == "glued-cycles":
        ks = ks or [1, 2]
        if max(ks) >= GLUED_FORCE_FROM and not force:
            raise ResourceCapError(
                f"glued-cycles k >= {GLUED_FORCE_FROM} means a 2^{6 * GLUED_FORCE_FROM + 1} subset "
                "Hochster sweep; pass --force to run it")
        return [Instance(f"G_{k}", families.glued_cycles(k), {"k": k}) for k in ks]
    return None


def evaluate(suite: str, inst: Instance, field: str = "gf2", force: bool = False) -> Verdict:
    facts = Facts(inst.graph, field, force=force)
    try:
        return SUITES[suite].check(facts, inst.params)
    except CrossCheckError as exc:
        return Verdict("error", "internal cross-checks hold", str(exc))


def _evaluate_packed(args) -> Verdict:
    return evaluate(*args)


def run_suite(
    suite: str,
    instances: Iterable[Instance],
    *,
    field: str = "gf2",
    force: bool = False,
    jobs: int = 1,
    on_verdict: Optional[Callable[[int, Instance, Verdict], None]] = None,
) -> SuiteResult:
    """Run ``suite`` over ``instances``; verdicts are reported in instance order."""
    if suite not in SUITES:
        raise KeyError(f"unknown suite {suite!r}; known: {', '.join(SUITES)}")
    result = SuiteResult(suite)
    t0 = time.perf_counter()
    instances = list(instances) if jobs > 1 else instances

    def verdicts() -> Iterator[tuple[Instance, Verdict]]:
        if jobs <= 1:
            for inst in instances:
                yield inst, evaluate(suite, inst, field, force)
            return
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            args = [(suite, inst, field, force) for inst in instances]
            yield from zip(instances, pool.map(_evaluate_packed, args, chunksize=64))

    for idx, (inst, verdict) in enumerate(verdicts()):
        if on_verdict is not None:
            on_verdict(idx, inst, verdict)
        if verdict.status == "skip":
            result.skipped += 1
            continue
        result.instances += 1
        if verdict.status == "pass":
            continue
        entry = {
            "label": inst.label,
            "graph6": to_graph6(inst.graph),
            "edges": [[u + 1, v + 1] for u, v in inst.graph.edges()],
            "expected": verdict.expected,
            "actual": verdict.actual,
        }
        (result.internal_errors if verdict.status == "error" else result.failures).append(entry)
    result.wall_time = time.perf_counter() - t0
    return result


def without_isolated(g: Graph) -> Graph:
    """Drop isolated vertices; J(G), v(J(G)) and bight(I(G)) do not see them."""
    core = 0
    for v in g:
        if g.adj[v]:
            core |= 1 << v
    if core == g.vertices or not core:
        return g
    return induced_subgraph(g, core)[0]


def search_bight_counterexamples(
    instances: Iterable[Instance], *, field: str = "gf2", keep_isolated: bool = False
) -> tuple[int, list[InvariantReport]]:
    """Graphs that are not complete multipartite but have v(J) > bight - 1.

    The multipartite test is applied after dropping isolated vertices, since
    otherwise every complete multipartite graph plus an isolated vertex would
    be a hit; ``keep_isolated=True`` applies it to the graph as given.
    Returns the number of graphs examined and a full report for every hit. An
    empty list only means no such graph occurs in this corpus.
    """
    examined = 0
    found = []
    for inst in instances:
        facts = Facts(inst.graph, field, force=True)
        if not facts.has_edges:
            continue
        core = inst.graph if keep_isolated else without_isolated(inst.graph)
        if is_complete_multipartite(core)[0]:
            continue
        examined += 1
        if facts.cover_v[0] > facts.bight - 1:
            found.append(build_report(facts, inst.label))
    return examined, found
