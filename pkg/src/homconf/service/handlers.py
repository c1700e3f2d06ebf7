"""Operation handlers shared by the HTTP routes and the CLI.

Every handler takes a request model and returns a response model; the
hom-table and lattice caches live in the core modules, so a long-running
service answers repeated queries for the same quiver without recomputing.
The HOMCONF_CACHE_DIR environment variable adds an on-disk table cache.
"""

from __future__ import annotations

import os

from .. import configs, mutation, noncrossing, typea
from ..cartan import (
    DynkinQuiver,
    coxeter_data,
    parse_quiver,
    positive_roots,
    sink_order,
    sinks,
    sources,
)
from ..errors import InputError
from ..orbit import fundamental_domain, hom_table_cached, table_document
from ..verify import SuiteReport, riedtmann_report, run_suite
from .models import (
    CheckModel,
    CountRequest,
    CountResponse,
    EnumerateResponse,
    HomTableResponse,
    MutationGraphRequest,
    MutationGraphResponse,
    NCElementModel,
    NCRequest,
    NCResponse,
    ObjectModel,
    QuiverInfo,
    QuiverRequest,
    RunReport,
    TypeACheckRequest,
    TypeAFResponse,
    TypeAGammaResponse,
    TypeAPartitionRequest,
    VerifyRequest,
)

LONG_RUNNING = {("E", 7), ("E", 8)}


def _quiver(req: QuiverRequest, enumeration: bool = True) -> DynkinQuiver:
    q = parse_quiver(req.quiver)
    if enumeration and (q.diagram_type, q.rank) in LONG_RUNNING and not req.allow_long:
        raise InputError(
            f"{q.diagram_type}{q.rank} enumeration is long-running; pass allow_long/--allow-long"
        )
    return q


def _cache_dir() -> str | None:
    return os.environ.get("HOMCONF_CACHE_DIR") or None


def _prepare_table(q: DynkinQuiver, threads: int) -> None:
    hom_table_cached(q, _cache_dir(), threads)


def _objects(members) -> list[ObjectModel]:
    return [ObjectModel(root=list(x.root), shift=x.shift) for x in members]


def quiver_info(req: QuiverRequest) -> QuiverInfo:
    q = _quiver(req, enumeration=False)
    data = coxeter_data(q.diagram_type, q.rank)
    return QuiverInfo(
        quiver=q.spec_string(),
        diagram_type=q.diagram_type,
        rank=q.rank,
        arrows=[list(a) for a in q.arrows],
        sinks=list(sinks(q)),
        sources=list(sources(q)),
        sink_order=list(sink_order(q)),
        coxeter_number=data.h,
        exponents=list(data.exponents),
        positive_roots=len(positive_roots(q)),
        domain_size=0 if q.rank > 6 else len(fundamental_domain(q)),
    )


def enumerate_configurations(req: QuiverRequest) -> EnumerateResponse:
    q = _quiver(req)
    _prepare_table(q, req.threads)
    confs = configs.enumerate_hom_configurations(q, req.threads)
    return EnumerateResponse(
        quiver=q.spec_string(),
        count=len(confs),
        configurations=[_objects(c.members) for c in confs],
        labels=[mutation.configuration_label(q, c) for c in confs],
    )


def count(req: CountRequest) -> CountResponse:
    q = _quiver(req, enumeration=req.what == "homconf")
    if req.what == "homconf":
        _prepare_table(q, req.threads)
        value = len(configs.enumerate_hom_configurations(q, req.threads))
        closed = noncrossing.positive_fuss_catalan(q.diagram_type, q.rank)
    elif req.what == "nc":
        value = len(noncrossing.enumerate_nc(q))
        closed = noncrossing.catalan(q.diagram_type, q.rank)
    else:
        value = sum(1 for u in noncrossing.enumerate_nc(q) if noncrossing.is_positive(u))
        closed = noncrossing.positive_fuss_catalan(q.diagram_type, q.rank)
    return CountResponse(
        quiver=q.spec_string(), what=req.what, count=value, closed_form=closed,
        matches=value == closed,
    )


def _report_model(report: SuiteReport, command: str) -> RunReport:
    return RunReport(
        command=command,
        quiver=report.quiver,
        counts=dict(sorted(report.counts.items())),
        checks=[
            CheckModel(name=c.name, passed=c.passed, skipped=c.skipped, detail=c.detail)
            for c in report.checks
        ],
        passed=report.passed,
        wall_time_s=round(report.wall_time_s, 3),
    )


def verify(req: VerifyRequest) -> RunReport:
    q = _quiver(req)
    _prepare_table(q, req.threads)
    report = run_suite(q, req.suite, req.threads)
    return _report_model(report, f"verify --quiver {req.quiver} --suite {req.suite}")


def nc_elements(req: NCRequest) -> NCResponse:
    q = _quiver(req, enumeration=False)
    elements = noncrossing.enumerate_nc(q)
    if req.positive:
        elements = tuple(u for u in elements if noncrossing.is_positive(u))
    models = None
    if req.include_elements:
        models = [NCElementModel(**noncrossing.nc_element_json(u)) for u in elements]
    return NCResponse(quiver=q.spec_string(), count=len(elements), elements=models)


def mutation_graph(req: MutationGraphRequest) -> MutationGraphResponse:
    q = _quiver(req)
    _prepare_table(q, req.threads)
    graph = mutation.mutation_graph(q, req.threads)
    return MutationGraphResponse(
        quiver=q.spec_string(),
        nodes=[_objects(c.members) for c in graph.nodes],
        labels=[mutation.configuration_label(q, c) for c in graph.nodes],
        edges=[[i, j] for (i, j), _ in graph.edges],
        connected=mutation.is_connected(graph),
        dot=mutation.export_dot(graph) if req.include_dot else None,
    )


def hom_table_doc(req: QuiverRequest) -> HomTableResponse:
    q = _quiver(req)
    table = hom_table_cached(q, _cache_dir(), req.threads)
    return HomTableResponse(**table_document(table))


def typea_gamma(req: TypeAPartitionRequest) -> TypeAGammaResponse:
    p = typea.parse_partition(req.n, req.partition)
    conf = typea.gamma(p)
    q = typea.linear_quiver(req.n)
    display = mutation.display_sorted(q, conf)
    return TypeAGammaResponse(
        n=req.n,
        partition=typea.partition_string(p),
        objects=_objects(conf.members),
        labels=[mutation.object_label(q, x) for x in display],
    )


def typea_f(req: TypeAPartitionRequest) -> TypeAFResponse:
    p = typea.parse_partition(req.n, req.partition)
    image = typea.f_map(p)
    return TypeAFResponse(
        n=req.n,
        partition=typea.partition_string(p),
        image=typea.partition_string(image),
        positive=typea.is_positive_classical(image),
    )


def typea_check(req: TypeACheckRequest) -> RunReport:
    report = riedtmann_report(req.n)
    return _report_model(report, f"typea --n {req.n} check")
