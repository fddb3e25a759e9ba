"""Command-line client for the computation service.

Every subcommand builds a request, sends it to the service (in-process by
default, or a remote instance via --server), and renders the JSON response.
Exit codes: 0 success / claims verified, 1 falsification or counterexample
found, 2 usage error.
"""

from __future__ import annotations

import json
from typing import IO, Optional

import click
import httpx

from . import __version__
from .cache import cache_get, cache_key, cache_put


def _dumps(data: dict, pretty: bool = False) -> str:
    if pretty:
        return json.dumps(data, indent=2, sort_keys=True)
    return json.dumps(data, separators=(",", ":"), sort_keys=True)


class ServiceClient:
    """Thin JSON client; without --server the app runs in-process."""

    def __init__(self, server: Optional[str]):
        if server:
            self._client = httpx.Client(base_url=server, timeout=None)
        else:
            import warnings

            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                from starlette.testclient import TestClient

            from .service import app

            self._client = TestClient(app)

    def post(self, path: str, payload: dict) -> dict:
        response = self._client.post(path, json=payload)
        if response.status_code == 400:
            raise click.UsageError(response.json().get("detail", "bad request"))
        if response.status_code == 422:
            raise click.UsageError(str(response.json().get("detail")))
        if response.status_code >= 500:
            raise click.ClickException(f"service error {response.status_code}: {response.text}")
        return response.json()


def _call(ctx: click.Context, path: str, payload: dict) -> dict:
    obj = ctx.obj
    cache_dir = obj["cache"]
    key = None
    if cache_dir:
        key = cache_key(path, payload, __version__)
        hit = cache_get(cache_dir, key)
        if hit is not None:
            return json.loads(hit)
    data = obj["client"].post(path, payload)
    if cache_dir:
        cache_put(cache_dir, key, _dumps(data))
    return data


def _emit(ctx: click.Context, data: dict, text: str) -> None:
    if ctx.obj["format"] == "json":
        click.echo(_dumps(data, pretty=True))
    else:
        click.echo(text)


def _read_graph6_lines(handle: IO[str]) -> list[str]:
    return [ln.strip() for ln in handle.read().splitlines() if ln.strip()]


def _single_graph6(handle: IO[str]) -> str:
    lines = _read_graph6_lines(handle)
    if not lines:
        raise click.UsageError("no graph6 line in input")
    if len(lines) > 1:
        raise click.UsageError(
            f"expected one graph6 line, found {len(lines)} (use 'scan' for corpora)"
        )
    return lines[0]


@click.group()
@click.version_option(version=__version__)
@click.option(
    "--format",
    "fmt",
    type=click.Choice(["text", "json"]),
    default="text",
    help="output rendering",
)
@click.option("--jobs", type=int, default=1, show_default=True, help="parallel workers")
@click.option(
    "--cache",
    "cache_dir",
    type=click.Path(file_okay=False),
    default=None,
    help="directory for content-addressed response caching",
)
@click.option("--seed", type=int, default=0, show_default=True, help="seed for sampled audits")
@click.option("--server", default=None, help="base URL of a running service (default: in-process)")
@click.pass_context
def main(ctx, fmt, jobs, cache_dir, seed, server):
    """Exact colouring toolkit for replication in colour-critical graphs."""
    ctx.obj = {
        "format": fmt,
        "jobs": jobs,
        "cache": cache_dir,
        "seed": seed,
        "client": ServiceClient(server),
    }


@main.command()
@click.option("--n", "n", type=int, required=True, help="number of columns (>= 4)")
@click.option(
    "--format",
    "gen_fmt",
    type=click.Choice(["graph6", "json", "text"]),
    default="graph6",
    show_default=True,
)
@click.pass_context
def gen(ctx, n, gen_fmt):
    """Generate the n-column construction."""
    data = _call(ctx, "/gallai/generate", {"n": n})
    if gen_fmt == "graph6":
        click.echo(data["graph6"])
    elif gen_fmt == "json" or ctx.obj["format"] == "json":
        click.echo(_dumps(data, pretty=True))
    else:
        click.echo(
            f"n={data['n']}: {data['vertices']} vertices, {data['edges']} edges, "
            f"graph6 {data['graph6']}"
        )


@main.command()
@click.argument("input", type=click.File("r"), default="-")
@click.pass_context
def chromatic(ctx, input):
    """Exact chromatic number of each graph6 line."""
    for line in _read_graph6_lines(input):
        data = _call(ctx, "/graphs/chromatic", {"graph6": line})
        _emit(ctx, data, f"{data['graph6']}: chi = {data['chi']}")


@main.command()
@click.option("--k", type=int, required=True, help="criticality level to test")
@click.option("--edges", is_flag=True, help="also test edge deletions")
@click.argument("input", type=click.File("r"), default="-")
@click.pass_context
def critical(ctx, k, edges, input):
    """Vertex (and optionally edge) criticality report."""
    for line in _read_graph6_lines(input):
        data = _call(
            ctx, "/graphs/criticality", {"graph6": line, "k": k, "edges": edges}
        )
        txt = (
            f"{data['graph6']}: chi={data['chi']} "
            f"vertex-critical={data['is_vertex_critical']}"
        )
        if edges:
            txt += f" edge-critical={data['is_edge_critical']}"
        _emit(ctx, data, txt)


@main.command("fractional-chi")
@click.argument("input", type=click.File("r"), default="-")
@click.pass_context
def fractional_chi(ctx, input):
    """Exact fractional chromatic number with certificates."""
    for line in _read_graph6_lines(input):
        data = _call(ctx, "/graphs/fractional", {"graph6": line})
        _emit(
            ctx,
            data,
            f"{data['graph6']}: chi_f = {data['value']} (chi = {data['chi']}, "
            f"gap condition: {data['fractional_gap_condition']})",
        )


@main.command()
@click.option("--n", type=int, required=True, help="number of columns (>= 4)")
@click.option("--w", default="", help="vertices to replicate, e.g. '0,0;1,2'")
@click.pass_context
def replicate(ctx, n, w):
    """Replicate a vertex set in the n-column construction."""
    data = _call(ctx, "/gallai/replicate", {"n": n, "w": w})
    clones = ", ".join(c["name"] for c in data["clones"]) or "(none)"
    _emit(
        ctx,
        data,
        f"n={n} W={data['w'] or '(empty)'}: {data['vertices']} vertices, "
        f"{data['edges']} edges, clones {clones}\n{data['graph6']}",
    )


@main.command("encode-sigma")
@click.option("--n", type=int, required=True)
@click.option("--w", required=True, help="one vertex per column, e.g. '0,0;1,1;2,2;3,0'")
@click.pass_context
def encode_sigma_cmd(ctx, n, w):
    """Sign sequence of a one-per-column selection."""
    data = _call(ctx, "/signseq/encode", {"n": n, "w": w})
    _emit(ctx, data, f"sigma = {data['sigma']} (z = {data['z']})")


@main.command()
@click.option("--sigma", required=True, help="sign sequence literal, e.g. '0+00-'")
@click.pass_context
def stroll(ctx, sigma):
    """Classify a sign sequence and exhibit witness strolls."""
    data = _call(ctx, "/strolls/classify", {"sigma": sigma})
    lines = [f"sigma = {data['sigma']} (z = {data['z']})"]
    lines.append(f"good = {data['good']}")
    if data["good_stroll"]:
        lines.append("  " + " ".join(data["good_stroll"]["patterns"]))
    lines.append(f"reversing = {data['reversing']}")
    if data["reversing_stroll"]:
        lines.append("  " + " ".join(data["reversing_stroll"]["patterns"]))
    _emit(ctx, data, "\n".join(lines))


@main.command("verify-theorem")
@click.option("--n", type=int, required=True)
@click.option(
    "--mode",
    type=click.Choice(["constructive", "solver", "both"]),
    default="both",
    show_default=True,
)
@click.option("--audit-rate", type=float, default=0.01, show_default=True)
@click.option(
    "--detail",
    type=click.Choice(["auto", "full", "sparse"]),
    default="auto",
    show_default=True,
)
@click.pass_context
def verify_theorem_cmd(ctx, n, mode, audit_rate, detail):
    """Exhaustively verify that no replication set is 5-critical.

    Exits 0 when the claim holds for every subset, 1 on any falsification.
    """
    data = _call(
        ctx,
        "/theorem/verify",
        {
            "n": n,
            "mode": mode,
            "jobs": ctx.obj["jobs"],
            "seed": ctx.obj["seed"],
            "audit_rate": audit_rate,
            "detail": detail,
        },
    )
    cc = data["case_counts"]
    _emit(
        ctx,
        data,
        f"n={n} mode={mode}: {data['subset_count']} subsets "
        f"(A={cc['A']} B={cc['B']} C={cc['C']} none={cc['none']}), "
        f"audited={data['audited']}, 5-critical={len(data['five_critical'])}, "
        f"result={'PASS' if data['passed'] else 'FAIL'}",
    )
    if not data["passed"]:
        ctx.exit(1)


@main.command()
@click.option("--k", type=int, required=True, help="criticality level of the input graph")
@click.argument("input", type=click.File("r"), default="-")
@click.pass_context
def conjecture(ctx, k, input):
    """Search all replication sets for a (k+1)-critical replication.

    Exits 0 when a witness exists (the conjecture holds for this graph),
    1 when the scan exhausts without a witness (a counterexample).
    """
    line = _single_graph6(input)
    data = _call(ctx, "/conjecture/check", {"graph6": line, "k": k})
    if data["holds"]:
        _emit(
            ctx,
            data,
            f"{data['graph6']}: holds, witness W={data['witness']} "
            f"({data['subsets_checked']} subsets examined)",
        )
    else:
        _emit(
            ctx,
            data,
            f"{data['graph6']}: FAILS after exhausting {data['subsets_checked']} subsets",
        )
        ctx.exit(1)


@main.command()
@click.option("--k", type=int, required=True)
@click.option("--edge-critical", is_flag=True, help="skip graphs that are not k-edge-critical")
@click.argument("input", type=click.File("r"), default="-")
@click.pass_context
def scan(ctx, k, edge_critical, input):
    """Run the conjecture check over a graph6 corpus.

    Exits 1 when any counterexample is found.
    """
    data = _call(
        ctx,
        "/scan/corpus",
        {
            "text": input.read(),
            "k": k,
            "filter_edge_critical": edge_critical,
            "jobs": ctx.obj["jobs"],
        },
    )
    lines = [
        f"scanned {len(data['entries'])} lines (corpus sha256 {data['corpus_sha256'][:16]}...)"
    ]
    for e in data["entries"]:
        if e["error"]:
            lines.append(f"  line {e['line']}: ERROR {e['error']}")
        elif e["skipped"]:
            lines.append(f"  line {e['line']} {e['graph6']}: skipped ({e['skipped']})")
        elif e["holds"]:
            lines.append(f"  line {e['line']} {e['graph6']}: holds (W={e['witness']})")
        else:
            lines.append(f"  line {e['line']} {e['graph6']}: COUNTEREXAMPLE")
    lines.append(f"counterexamples: {len(data['counterexamples'])}")
    _emit(ctx, data, "\n".join(lines))
    if data["counterexamples"]:
        ctx.exit(1)


@main.command("export-m2")
@click.option("--n", type=int, default=None, help="columns of the stock construction")
@click.option("--max-power", type=int, default=4, show_default=True)
@click.option("--out", type=click.File("w"), default="-", help="where to write the script")
@click.argument("input", type=click.File("r"), required=False)
@click.pass_context
def export_m2(ctx, n, max_power, out, input):
    """Emit a computer-algebra script for the cover ideal's powers."""
    if (n is None) == (input is None):
        raise click.UsageError("provide exactly one of --n or a graph6 input")
    payload = {"max_power": max_power}
    if n is not None:
        payload["n"] = n
    else:
        payload["graph6"] = _single_graph6(input)
    data = _call(ctx, "/covers/export", payload)
    if ctx.obj["format"] == "json" and out.name == "<stdout>":
        click.echo(_dumps(data, pretty=True))
    else:
        out.write(data["script"])


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
def serve(host, port):
    """Run the HTTP service."""
    import uvicorn

    from .service import app

    uvicorn.run(app, host=host, port=port)


@main.command()
def schema():
    """Print the JSON schema all service reports validate against."""
    from importlib.resources import files

    click.echo(files("replcrit.schemas").joinpath("reports.schema.json").read_text())


if __name__ == "__main__":
    main()
