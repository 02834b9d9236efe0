"""
curvpool Command Line Interface.

Batch front end: generate datasets, precompute curvature, pool, report and
benchmark. Machine-readable results go to stdout or files; diagnostics and
logs go to stderr.

Exit codes: 0 success, 1 usage error, 2 data error.
"""

import functools
import json
import time
from pathlib import Path
from typing import Dict, List, Optional, Tuple

import click
import pandas as pd
from pydantic import ValidationError
from rich.console import Console
from rich.markup import escape
from rich.panel import Panel
from rich.table import Table
from rich.text import Text

from .analysis.bench import DEFAULT_LADDER, bench_ladder
from .analysis.stats import dataset_histogram, histogram_text, recommend_threshold, threshold_split
from .core.config import get_config
from .core.curvature import EdgeCurvature
from .core.errors import CurvPoolError, InvalidSpec, InvalidThresholds
from .core.executor import map_graphs
from .core.logger import StageLogger, get_logger, setup_logging
from .core.schemas import RunConfig
from .datasets.formats import (
    read_curvature,
    read_edge_list,
    read_features,
    read_text,
    write_curvature,
    write_edge_list,
    write_features,
    write_pools,
    write_report,
)
from .datasets.generators import DEFAULT_CLASSES, ArtificialClass, CavemanSpec, artificial_specs, caveman, degree_features
from .datasets.manifest import DatasetManifest, ManifestEntry, is_manifest, load_entry, read_manifest, write_manifest
from .workers import GraphJob, PoolJob, PoolResult, curvature_job, pool_job, stats_job

EXIT_USAGE = 1
EXIT_DATA = 2

console = Console(stderr=True)
logger = get_logger("curvpool.cli")
stages = StageLogger("curvpool.cli")


class CurvPoolGroup(click.Group):
    """Click group reporting usage errors with exit code 1."""

    def make_context(self, *args, **kwargs):
        try:
            return super().make_context(*args, **kwargs)
        except click.UsageError as exc:
            exc.exit_code = EXIT_USAGE
            raise

    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except click.UsageError as exc:
            exc.exit_code = EXIT_USAGE
            raise


def handle_errors(fn):
    """Turn library errors into a one-line diagnostic and the matching exit code."""

    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        ctx = click.get_current_context()
        try:
            return fn(*args, **kwargs)
        except (InvalidThresholds, InvalidSpec) as exc:
            console.print(f"[red]Error:[/red] {escape(str(exc))}", soft_wrap=True, highlight=False)
            ctx.exit(EXIT_USAGE)
        except ValidationError as exc:
            console.print(f"[red]Error:[/red] invalid options: {escape(str(exc))}", soft_wrap=True, highlight=False)
            ctx.exit(EXIT_USAGE)
        except (CurvPoolError, OSError, UnicodeDecodeError) as exc:
            logger.debug("command failed", error=str(exc), kind=type(exc).__name__)
            console.print(f"[red]Error:[/red] {escape(str(exc))}", soft_wrap=True, highlight=False)
            ctx.exit(EXIT_DATA)

    return wrapper


def emit_timing(dataset: str, stage: str, seconds: float) -> None:
    click.echo(f"dataset={dataset} stage={stage} seconds={seconds:.6f}")
    stages.stage(dataset, stage, seconds)


def write_output(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)
    stages.output_written(path, path.suffix)


def load_inputs(path: Path, features: Optional[Path] = None) -> Tuple[str, List[GraphJob]]:
    """Dataset name and graphs of an edge-list file or a YAML manifest."""
    if is_manifest(path):
        if features is not None:
            raise click.UsageError("--features only applies to a single edge-list input")
        manifest, base = read_manifest(path)
        items = []
        for entry in manifest.graphs:
            loaded = load_entry(entry, base)
            items.append(GraphJob(loaded.name, loaded.graph, loaded.features, loaded.label))
        names = [item.name for item in items]
        if len(set(names)) != len(names):
            raise InvalidSpec("manifest graph file names must have distinct stems")
        return manifest.name, items

    graph = read_edge_list(read_text(path), name=str(path))
    if features is None:
        feats = degree_features(graph)
    else:
        feats = read_features(read_text(features), name=str(features))
        feats.check_pairs_with(graph)
    stages.graph_loaded(str(path), graph.num_nodes, graph.num_edges)
    return path.stem, [GraphJob(path.stem, graph, feats, None)]


@click.group(cls=CurvPoolGroup)
@click.option("--log-level", type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR"]), default=None,
              help="Set log level (default from CURVPOOL_LOG_LEVEL)")
@click.option("--log-json/--no-log-json", default=None, help="Render logs as JSON")
@click.pass_context
def cli(ctx, log_level: Optional[str], log_json: Optional[bool]):
    """curvpool - curvature-based graph pooling."""

    setup_logging(log_level=log_level, enable_json=log_json)
    ctx.ensure_object(dict)
    ctx.obj["config"] = get_config()


@cli.command()
@click.argument("input_path", type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.option("--out", "out", required=True, type=click.Path(path_type=Path),
              help="Curvature file (edge-list input) or directory (manifest input)")
@click.option("--threads", type=int, default=None, help="Worker processes (0 = all cores)")
@click.pass_context
@handle_errors
def curvature(ctx, input_path: Path, out: Path, threads: Optional[int]):
    """Compute the curvature of every edge."""

    config = ctx.obj["config"]
    run = RunConfig(command="curvature", input=input_path, output=out, threads=threads or 0)
    dataset, items = load_inputs(run.input)

    start = time.perf_counter()
    results = map_graphs(curvature_job, items, config.resolve_threads(threads))
    elapsed = time.perf_counter() - start

    if is_manifest(input_path):
        for item, (curv, _) in zip(items, results):
            write_output(out / f"{item.name}.curv", write_curvature(curv))
    else:
        write_output(out, write_curvature(results[0][0]))
    emit_timing(dataset, "pre", elapsed)


def _pool_outputs(result: PoolResult, levels_requested: int) -> Dict[str, str]:
    files = {}
    for index, level in enumerate(result.levels, start=1):
        tag = f".level{index}" if levels_requested > 1 else ""
        files[f"{result.name}{tag}.pooled.edges"] = write_edge_list(level.graph)
        files[f"{result.name}{tag}.pooled.features"] = write_features(level.features)
        files[f"{result.name}{tag}.pools.json"] = write_pools(level.pools)
        files[f"{result.name}{tag}.report.json"] = write_report(level.report)
    return files


def _load_curvature(path: Path, items: List[GraphJob], manifest_input: bool) -> List[EdgeCurvature]:
    if not manifest_input:
        return [read_curvature(read_text(path), name=str(path), graph=items[0].graph)]
    curvatures = []
    for item in items:
        curv_path = path / f"{item.name}.curv"
        curvatures.append(read_curvature(read_text(curv_path), name=str(curv_path), graph=item.graph))
    return curvatures


def _run_pool(ctx, run: RunConfig, features: Optional[Path]) -> None:
    config = ctx.obj["config"]
    strategy = run.build_strategy() if run.command == "pool" else None
    agg = run.build_aggregator()
    manifest_input = is_manifest(run.input)
    dataset, items = load_inputs(run.input, features)

    curvatures: List[Optional[EdgeCurvature]] = [None] * len(items)
    pre_seconds = 0.0
    if run.curvature is not None:
        start = time.perf_counter()
        curvatures = list(_load_curvature(run.curvature, items, manifest_input))
        pre_seconds = time.perf_counter() - start

    jobs = [
        PoolJob(item=item, agg=agg, strategy=strategy, levels=run.levels, curvature=curv)
        for item, curv in zip(items, curvatures)
    ]
    results = map_graphs(pool_job, jobs, config.resolve_threads(run.threads or None))

    out = run.output
    pooled_entries = []
    for result in results:
        for name, text in _pool_outputs(result, run.levels).items():
            write_output(out / name, text)
        last = result.levels[-1]
        tag = f".level{len(result.levels)}" if run.levels > 1 else ""
        pooled_entries.append(
            ManifestEntry(
                graph=f"{result.name}{tag}.pooled.edges",
                features=f"{result.name}{tag}.pooled.features" if last.features.rows else "degrees",
                label=result.label or 0,
            )
        )
        stages.pooled(result.name, last.report.nodes_before, last.graph.num_nodes, len(last.pools))
    if manifest_input:
        pooled_manifest = DatasetManifest(name=f"{dataset}-pooled", graphs=pooled_entries)
        write_output(out / "pooled.yaml", write_manifest(pooled_manifest))

    emit_timing(dataset, "pre", pre_seconds + sum(r.pre_seconds for r in results))
    emit_timing(dataset, "pool", sum(r.pool_seconds for r in results))


@cli.command()
@click.argument("input_path", type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.option("--strategy", type=click.Choice(["high", "low", "mixed"]), required=True, help="Pooling strategy")
@click.option("--t-low", type=float, default=None, help="Pool edges with curvature below this (low, mixed)")
@click.option("--t-high", type=float, default=None, help="Pool edges with curvature above this (high, mixed)")
@click.option("--agg", type=click.Choice(["sum", "avg", "max"]), default="sum", help="Feature aggregation")
@click.option("--curvature", "curvature_path", type=click.Path(exists=True, path_type=Path), default=None,
              help="Precomputed curvature file (or directory for a manifest)")
@click.option("--features", type=click.Path(exists=True, dir_okay=False, path_type=Path), default=None,
              help="Feature file for an edge-list input (default: node degrees)")
@click.option("--levels", type=int, default=1, help="Pooling steps, recomputing curvature in between")
@click.option("--out", "out", required=True, type=click.Path(file_okay=False, path_type=Path),
              help="Output directory")
@click.option("--threads", type=int, default=None, help="Worker processes (0 = all cores)")
@click.pass_context
@handle_errors
def pool(ctx, input_path, strategy, t_low, t_high, agg, curvature_path, features, levels, out, threads):
    """Pool graphs by curvature thresholds."""

    run = RunConfig(
        command="pool", input=input_path, output=out, strategy=strategy, t_low=t_low, t_high=t_high,
        agg=agg, curvature=curvature_path, levels=levels, threads=threads or 0,
    )
    _run_pool(ctx, run, features)


@cli.command()
@click.argument("input_path", type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.option("--agg", type=click.Choice(["sum", "avg", "max"]), default="sum", help="Feature aggregation")
@click.option("--features", type=click.Path(exists=True, dir_okay=False, path_type=Path), default=None,
              help="Feature file for an edge-list input (default: node degrees)")
@click.option("--out", "out", required=True, type=click.Path(file_okay=False, path_type=Path),
              help="Output directory")
@click.option("--threads", type=int, default=None, help="Worker processes (0 = all cores)")
@click.pass_context
@handle_errors
def cliquepool(ctx, input_path, agg, features, out, threads):
    """Pool graphs by maximal cliques (baseline)."""

    run = RunConfig(command="cliquepool", input=input_path, output=out, agg=agg, threads=threads or 0)
    _run_pool(ctx, run, features)


@cli.command()
@click.option("--num-cliques", "-l", type=int, default=None, help="Caves per graph (fixed-spec mode)")
@click.option("--clique-size", "-k", type=int, default=None, help="Nodes per cave (fixed-spec mode)")
@click.option("--label", type=int, default=0, help="Label of every graph in fixed-spec mode")
@click.option("--artificial", is_flag=True, help="Two-class dataset: few large caves (0) vs many small caves (1)")
@click.option("--count", type=int, required=True, help="Number of graphs")
@click.option("--seed", type=int, default=0, help="Dataset seed")
@click.option("--name", default="artificial", help="Dataset name")
@click.option("--out", "out", required=True, type=click.Path(file_okay=False, path_type=Path),
              help="Output directory")
@click.pass_context
@handle_errors
def generate(ctx, num_cliques, clique_size, label, artificial, count, seed, name, out):
    """Generate a connected caveman dataset."""

    RunConfig(command="generate", output=out, seed=seed)
    if count < 0:
        raise InvalidSpec(f"count must be >= 0, got {count}")
    if artificial:
        if num_cliques is not None or clique_size is not None:
            raise click.UsageError("--artificial cannot be combined with --num-cliques/--clique-size")
        classes = DEFAULT_CLASSES
    else:
        if num_cliques is None or clique_size is None:
            raise click.UsageError("give --num-cliques and --clique-size, or --artificial")
        if label < 0:
            raise InvalidSpec(f"labels must be >= 0, got {label}")
        CavemanSpec(num_cliques=num_cliques, clique_size=clique_size, seed=seed)
        classes = (ArtificialClass(label, (num_cliques, num_cliques), (clique_size, clique_size)),)

    specs = artificial_specs(count, seed, classes)
    entries = []
    for index, (spec, graph_label) in enumerate(specs):
        graph_file = f"graphs/g{index:04d}.edges"
        write_output(out / graph_file, write_edge_list(caveman(spec)))
        entries.append(ManifestEntry(graph=graph_file, features="degrees", label=graph_label))
    write_output(out / "manifest.yaml", write_manifest(DatasetManifest(name=name, graphs=entries)))
    console.print(f"[green]Wrote {len(entries)} graphs to {out}[/green]", highlight=False)


@cli.command()
@click.argument("input_path", type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.option("--bins", type=int, default=None, help="Histogram bins (default 40)")
@click.option("--out-hist", type=click.Path(dir_okay=False, path_type=Path), default=None,
              help="Write the histogram as 'bin_center count' lines")
@click.option("--out-csv", type=click.Path(dir_okay=False, path_type=Path), default=None,
              help="Write the per-graph curvature table as CSV")
@click.option("--threads", type=int, default=None, help="Worker processes (0 = all cores)")
@click.pass_context
@handle_errors
def stats(ctx, input_path, bins, out_hist, out_csv, threads):
    """Curvature histogram, summary and recommended threshold."""

    config = ctx.obj["config"]
    run = RunConfig(command="stats", input=input_path, bins=config.default_bins if bins is None else bins, threads=threads or 0)
    dataset, items = load_inputs(run.input)
    results = map_graphs(stats_job, items, config.resolve_threads(threads))

    rows = [row for row, _ in results]
    values = [v for _, graph_values in results for v in graph_values]
    hist = dataset_histogram([values], run.bins)
    threshold = recommend_threshold(values)
    summary = {
        "dataset": dataset,
        "graphs": len(rows),
        "edges": len(values),
        "histogram": hist.model_dump(),
        "recommended_threshold": threshold,
        "split": threshold_split(values, threshold).model_dump(),
    }
    click.echo(json.dumps(summary, sort_keys=True, indent=2))

    if out_hist is not None:
        write_output(out_hist, histogram_text(hist))
    if out_csv is not None:
        frame = pd.DataFrame([row.model_dump() for row in rows])
        write_output(out_csv, frame.to_csv(index=False, float_format="%.17g"))

    table = Table(title=f"Curvature of {dataset}")
    for column in ("graph", "nodes", "edges", "mean", "median"):
        table.add_column(column)
    for row in rows:
        table.add_row(row.graph, str(row.nodes), str(row.edges), f"{row.curv_mean}", f"{row.curv_median}")
    console.print(table)


@cli.command()
@click.option("--ladder", default=",".join(str(x) for x in DEFAULT_LADDER),
              help="Comma-separated cave counts")
@click.option("--clique-size", "-k", type=int, default=6, help="Nodes per cave")
@click.option("--seed", type=int, default=0, help="Generator seed")
@click.option("--repeats", type=int, default=1, help="Timing repetitions (best is kept)")
@click.pass_context
@handle_errors
def bench(ctx, ladder, clique_size, seed, repeats):
    """Time curvature precompute and pooling over a caveman size ladder."""

    RunConfig(command="bench", seed=seed)
    try:
        sizes = [int(x) for x in ladder.split(",") if x.strip()]
    except ValueError:
        raise click.UsageError(f"--ladder must be comma-separated integers, got {ladder!r}") from None
    for size in sizes:
        CavemanSpec(num_cliques=size, clique_size=clique_size, seed=seed)

    rows = bench_ladder(sizes, clique_size=clique_size, seed=seed, repeats=repeats)
    for row in rows:
        dataset = f"caveman-l{row.num_cliques}-k{row.clique_size}"
        emit_timing(dataset, "pre", row.bfc_seconds)
        emit_timing(dataset, "pool", row.curvpool_seconds)

    table = Table(title="Precompute benchmark")
    for column in ("caves", "nodes", "edges", "bfc s", "curvpool s", "cliquepool s"):
        table.add_column(column)
    for row in rows:
        table.add_row(str(row.num_cliques), str(row.nodes), str(row.edges),
                      f"{row.bfc_seconds:.4f}", f"{row.curvpool_seconds:.4f}", f"{row.cliquepool_seconds:.4f}")
    console.print(table)


@cli.command()
@click.pass_context
def config_info(ctx):
    """Show configuration information."""

    config = ctx.obj["config"]

    info = {
        "Logging": config.get_logging_config(),
        "Analysis": config.get_analysis_config(),
    }

    console.print(Panel.fit(
        Text.assemble(
            ("curvpool Configuration\n\n", "bold blue"),
            *[f"{section}:\n" + "\n".join(f"  {k}: {v}" for k, v in data.items()) + "\n"
              for section, data in info.items()]
        ),
        title="Configuration",
        border_style="green"
    ))


def main():
    """Main entry point for the CLI."""
    cli()


if __name__ == "__main__":
    main()
