import time

import pytest
from click.testing import CliRunner

from curvpool.analysis.bench import bench_ladder, growth_ratios
from curvpool.cli import cli
from curvpool.core.curvature import bfc_all
from curvpool.datasets.generators import CavemanSpec, caveman


def test_bench_rows_describe_the_ladder():
    rows = bench_ladder([4, 8], clique_size=5, seed=1)
    assert [(r.nodes, r.edges) for r in rows] == [(20, 40), (40, 80)]
    assert all(r.bfc_seconds >= 0 and r.curvpool_seconds >= 0 for r in rows)


def test_bench_command_prints_timings():
    result = CliRunner().invoke(cli, ["bench", "--ladder", "4,8", "--clique-size", "4"])
    assert result.exit_code == 0, result.output
    lines = result.stdout.splitlines()
    assert len(lines) == 4
    assert all("stage=cliquepool" not in line for line in lines)
    assert lines[0].startswith("dataset=caveman-l4-k4 stage=pre seconds=")


def test_bench_rejects_bad_ladder():
    assert CliRunner().invoke(cli, ["bench", "--ladder", "4,x"]).exit_code == 1
    assert CliRunner().invoke(cli, ["bench", "--ladder", "1"]).exit_code == 1


@pytest.mark.slow
def test_precompute_time_grows_linearly_at_fixed_degree():
    rows = bench_ladder([200, 400, 800, 1600], clique_size=6, seed=0, repeats=3)
    for ratio in growth_ratios(rows):
        assert ratio < 3.0


@pytest.mark.slow
def test_caveman_dataset_precompute_fits_in_a_minute():
    graphs = [caveman(CavemanSpec(num_cliques=10, clique_size=6, seed=seed)) for seed in range(500)]
    start = time.perf_counter()
    total = sum(len(bfc_all(g)) for g in graphs)
    elapsed = time.perf_counter() - start
    assert total == 500 * 10 * 15
    assert elapsed < 60.0
