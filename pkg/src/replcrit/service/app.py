"""HTTP service exposing the toolkit's computations.

All endpoints are stateless POSTs wrapping pure functions from the core
package; invalid inputs surface as 400s with the underlying message.  The
CLI is a thin client of this app (in-process by default).
"""

from __future__ import annotations

from fractions import Fraction

from fastapi import FastAPI, HTTPException

from .. import __version__
from ..coloring import chromatic_number, criticality
from ..covers import cover_ideal_script, minimal_transversals
from ..fractional import fractional_chromatic_number
from ..gallai import (
    GallaiGraph,
    format_vertex_name,
    format_w_literal,
    parse_w_literal,
)
from ..graphs import Graph, Graph6Error, emit_graph6, parse_graph6
from ..replication import replicate
from ..scan import scan_corpus
from ..signseq import encode_sigma, format_sigma, parse_sigma, z_parity
from ..strolls import Stroll, classify_sequence, format_pattern
from ..theorem import conjecture_check, verify_theorem
from . import models as m

app = FastAPI(
    title="replcrit",
    version=__version__,
    description="Exact colouring computations for vertex replication in "
    "colour-critical graphs",
)


def _bad_request(exc: Exception) -> HTTPException:
    return HTTPException(status_code=400, detail=str(exc))


def _parse(graph6: str) -> Graph:
    try:
        return parse_graph6(graph6)
    except Graph6Error as exc:
        raise _bad_request(exc) from exc


def _frac(x: Fraction) -> str:
    return str(x)


def _stroll_model(st: Stroll) -> m.StrollModel:
    return m.StrollModel(
        sigma=format_sigma(st.sigma),
        patterns=[format_pattern(p) for p in st.patterns],
    )


def _criticality_response(graph6: str, rep) -> m.CriticalityResponse:
    return m.CriticalityResponse(
        graph6=graph6,
        k=rep.k,
        chi=rep.chi,
        per_vertex_chi=list(rep.per_vertex_chi),
        per_edge_chi=list(rep.per_edge_chi) if rep.per_edge_chi is not None else None,
        edge_list=[list(e) for e in rep.edges] if rep.edges is not None else None,
        is_vertex_critical=rep.is_vertex_critical,
        is_edge_critical=rep.is_edge_critical,
    )


@app.get("/health", response_model=m.HealthResponse)
def health() -> m.HealthResponse:
    return m.HealthResponse(status="ok", version=__version__)


@app.post("/gallai/generate", response_model=m.GenerateResponse)
def gallai_generate(req: m.GenerateRequest) -> m.GenerateResponse:
    try:
        h = GallaiGraph(req.n)
    except ValueError as exc:
        raise _bad_request(exc) from exc
    return m.GenerateResponse(
        n=h.n,
        vertices=h.graph.n,
        edges=h.graph.edge_count(),
        graph6=emit_graph6(h.graph),
        columns=[list(h.column(i)) for i in range(h.n)],
        rows=[list(h.row(j)) for j in range(3)],
    )


@app.post("/graphs/chromatic", response_model=m.ChromaticResponse)
def graphs_chromatic(req: m.GraphRequest) -> m.ChromaticResponse:
    g = _parse(req.graph6)
    chi, witness = chromatic_number(g)
    return m.ChromaticResponse(
        graph6=req.graph6.strip(), vertices=g.n, chi=chi, colors=list(witness.colors)
    )


@app.post("/graphs/criticality", response_model=m.CriticalityResponse)
def graphs_criticality(req: m.CriticalityRequest) -> m.CriticalityResponse:
    g = _parse(req.graph6)
    rep = criticality(g, req.k, edges=req.edges)
    return _criticality_response(req.graph6.strip(), rep)


@app.post("/graphs/fractional", response_model=m.FractionalResponse)
def graphs_fractional(req: m.GraphRequest) -> m.FractionalResponse:
    g = _parse(req.graph6)
    try:
        sol = fractional_chromatic_number(g)
    except ValueError as exc:
        raise _bad_request(exc) from exc
    chi, _ = chromatic_number(g)
    return m.FractionalResponse(
        graph6=req.graph6.strip(),
        vertices=g.n,
        value=_frac(sol.value),
        weights=[
            m.SetWeight(vertices=list(s), weight=_frac(w))
            for s, w in sorted(sol.weights.items())
        ],
        dual=[
            m.VertexWeight(vertex=v, weight=_frac(y))
            for v, y in sorted(sol.dual.items())
        ],
        fractional_gap_condition=sol.value > chi - 1,
        chi=chi,
    )


@app.post("/gallai/replicate", response_model=m.ReplicateResponse)
def gallai_replicate(req: m.ReplicateRequest) -> m.ReplicateResponse:
    try:
        h = GallaiGraph(req.n)
        w = parse_w_literal(h, req.w)
    except ValueError as exc:
        raise _bad_request(exc) from exc
    rg = replicate(h.graph, w)
    clones = []
    for c, orig in rg.clone_items():
        i, j = h.name(orig)
        clones.append(
            m.CloneInfo(index=c, original=orig, name=format_vertex_name(h, i, j, clone=True))
        )
    return m.ReplicateResponse(
        n=req.n,
        w=format_w_literal(h, w),
        base_graph6=emit_graph6(h.graph),
        graph6=emit_graph6(rg.graph),
        vertices=rg.graph.n,
        edges=rg.graph.edge_count(),
        clones=clones,
    )


@app.post("/signseq/encode", response_model=m.EncodeSigmaResponse)
def signseq_encode(req: m.EncodeSigmaRequest) -> m.EncodeSigmaResponse:
    try:
        h = GallaiGraph(req.n)
        w = parse_w_literal(h, req.w)
        columns = [h.name(v)[0] for v in w]
        if sorted(columns) != list(range(h.n)):
            raise ValueError(
                "sign-sequence encoding needs exactly one vertex per column"
            )
    except ValueError as exc:
        raise _bad_request(exc) from exc
    rows = [h.name(v)[1] for v in sorted(w)]
    sigma = encode_sigma(rows)
    return m.EncodeSigmaResponse(
        n=req.n,
        w=format_w_literal(h, w),
        rows=rows,
        sigma=format_sigma(sigma),
        z=z_parity(sigma),
    )


@app.post("/strolls/classify", response_model=m.ClassifySigmaResponse)
def strolls_classify(req: m.ClassifySigmaRequest) -> m.ClassifySigmaResponse:
    try:
        sigma = parse_sigma(req.sigma)
    except ValueError as exc:
        raise _bad_request(exc) from exc
    cls = classify_sequence(sigma)
    return m.ClassifySigmaResponse(
        sigma=format_sigma(sigma),
        z=z_parity(sigma),
        good=cls.good,
        reversing=cls.reversing,
        good_stroll=_stroll_model(cls.good_stroll) if cls.good_stroll else None,
        reversing_stroll=(
            _stroll_model(cls.reversing_stroll) if cls.reversing_stroll else None
        ),
    )


@app.post("/theorem/verify", response_model=m.TheoremResponse)
def theorem_verify(req: m.VerifyTheoremRequest) -> m.TheoremResponse:
    try:
        rep = verify_theorem(
            req.n,
            mode=req.mode,
            jobs=req.jobs,
            seed=req.seed,
            audit_rate=req.audit_rate,
            detail=req.detail,
        )
    except ValueError as exc:
        raise _bad_request(exc) from exc
    h = GallaiGraph(req.n)
    entries = [
        m.SubsetEntry(
            w=list(e.w),
            w_name=format_w_literal(h, e.w),
            case=e.case,
            chi=e.chi,
            chi_lower=e.chi_lower,
            chi_upper=e.chi_upper,
            five_critical=e.five_critical,
            certificate=e.certificate,
            source=e.source,
        )
        for e in rep.entries
    ]
    return m.TheoremResponse(
        n=rep.n,
        mode=rep.mode,
        subset_count=rep.subset_count,
        case_counts=rep.case_counts,
        five_critical=[list(w) for w in rep.five_critical],
        disagreements=rep.disagreements,
        falsifications=rep.falsifications,
        audited=rep.audited,
        entries=entries,
        entries_policy=rep.entries_policy,
        passed=rep.passed,
    )


@app.post("/conjecture/check", response_model=m.ConjectureResponse)
def conjecture_endpoint(req: m.ConjectureRequest) -> m.ConjectureResponse:
    g = _parse(req.graph6)
    try:
        result = conjecture_check(g, req.k)
    except ValueError as exc:
        raise _bad_request(exc) from exc
    witness_report = None
    if result.witness_report is not None:
        rg = replicate(g, result.witness)
        witness_report = _criticality_response(
            emit_graph6(rg.graph), result.witness_report
        )
    return m.ConjectureResponse(
        graph6=req.graph6.strip(),
        k=req.k,
        holds=result.holds,
        witness=list(result.witness) if result.witness is not None else None,
        subsets_checked=result.subsets_checked,
        witness_report=witness_report,
    )


@app.post("/scan/corpus", response_model=m.ScanResponse)
def scan_endpoint(req: m.ScanRequest) -> m.ScanResponse:
    report = scan_corpus(
        req.text, req.k, filter_edge_critical=req.filter_edge_critical, jobs=req.jobs
    )
    return m.ScanResponse(
        k=report.k,
        filter_edge_critical=report.filter_edge_critical,
        corpus_sha256=report.corpus_sha256,
        entries=[m.ScanEntryModel(**vars(e)) for e in report.entries],
        counterexamples=report.counterexamples,
    )


@app.post("/covers/export", response_model=m.CoverExportResponse)
def covers_export(req: m.CoverExportRequest) -> m.CoverExportResponse:
    if (req.graph6 is None) == (req.n is None):
        raise HTTPException(
            status_code=400, detail="provide exactly one of graph6 or n"
        )
    if req.graph6 is not None:
        g = _parse(req.graph6)
    else:
        try:
            g = GallaiGraph(req.n).graph
        except ValueError as exc:
            raise _bad_request(exc) from exc
    try:
        script = cover_ideal_script(g, req.max_power)
    except ValueError as exc:
        raise _bad_request(exc) from exc
    return m.CoverExportResponse(
        graph6=emit_graph6(g),
        vertices=g.n,
        generators=[list(t) for t in minimal_transversals(g)],
        script=script,
    )
