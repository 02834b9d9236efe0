import pytest
from structlog.testing import capture_logs

from curvpool.analysis import (
    dataset_histogram,
    graph_stats,
    growth_ratios,
    histogram,
    histogram_text,
    pooling_report,
    recommend_threshold,
    threshold_split,
)
from curvpool.analysis.schemas import BenchRow, PoolingReport
from curvpool.core.curvature import bfc_all
from curvpool.core.errors import EmptyInput, ShapeMismatch
from curvpool.datasets.generators import CavemanSpec, barbell, caveman, complete, degree_features
from curvpool.pooling import PoolAssignment, Strategy, curvpool


def test_histogram_counts_every_value():
    values = [-1.0, 0.0, 0.5, 0.5, 1.0, 1.5]
    hist = histogram(values, num_bins=4)
    assert hist.total == len(values)
    assert hist.counts == [1, 1, 2, 2]
    assert hist.bin_edges[0] == -1.0 and hist.bin_edges[-1] == 1.5
    assert hist.min == -1.0 and hist.max == 1.5
    assert hist.median == pytest.approx(0.5)


def test_histogram_of_equal_values():
    hist = histogram(bfc_all(complete(4)), num_bins=3)
    assert hist.counts == [0, 6, 0]
    assert hist.min == hist.max == pytest.approx(4 / 3)


def test_histogram_rejects_empty_input():
    with pytest.raises(EmptyInput):
        histogram([])
    with pytest.raises(EmptyInput):
        recommend_threshold([])


def test_dataset_histogram_concatenates_graphs():
    a = bfc_all(barbell(4))
    b = bfc_all(complete(5))
    hist = dataset_histogram([a, b], num_bins=10)
    assert hist.total == len(a) + len(b)


def test_histogram_text_two_columns():
    hist = histogram([0.0, 1.0], num_bins=2)
    assert histogram_text(hist) == "0.25 1\n0.75 1\n"


def test_recommended_threshold_is_median():
    values = bfc_all(barbell(4)).sorted_values()
    # 13 values: the bridge, six at 5/6, six at 4/3
    assert recommend_threshold(values) == pytest.approx(5 / 6)
    assert recommend_threshold([3.0, -1.0, 0.0, 10.0]) == pytest.approx(1.5)


def test_recommend_threshold_warns_on_constant_values():
    with capture_logs() as logs:
        assert recommend_threshold([2.0, 2.0, 2.0]) == 2.0
    assert any(entry["log_level"] == "warning" and "all curvature values are equal" in entry["event"] for entry in logs)


def test_threshold_split_fractions():
    split = threshold_split([-1.0, 0.0, 0.0, 2.0], 0.0)
    assert (split.below, split.equal, split.above) == (0.25, 0.5, 0.25)


def test_pooling_report_on_barbell_low_pooling():
    g = barbell(4)
    curv = bfc_all(g)
    pooled, _ = curvpool(g, degree_features(g), Strategy.low(-0.5), curv=curv)
    report = pooling_report(g, curv, pooled.graph, bfc_all(pooled.graph), pooled.origin)
    assert (report.nodes_before, report.nodes_after) == (8, 7)
    assert (report.edges_before, report.edges_after) == (13, 12)
    assert report.mean_curv_before == pytest.approx(12 / 13)
    assert report.mean_curv_after == pytest.approx(10 / 12)
    assert report.pool_size_histogram == {1: 6, 2: 1}
    assert report.mean_curvature_rose is False


def test_pooling_report_on_caveman_high_pooling():
    g = caveman(CavemanSpec(num_cliques=4, clique_size=5, seed=9))
    curv = bfc_all(g)
    pooled, _ = curvpool(g, degree_features(g), Strategy.high(0.0), curv=curv)
    report = pooling_report(g, curv, pooled.graph, bfc_all(pooled.graph), pooled.origin)
    assert report.mean_curvature_rose is True
    assert report.pool_size_histogram == {5: 4}


def test_pooling_report_checks_shapes():
    g = barbell(3)
    curv = bfc_all(g)
    with pytest.raises(ShapeMismatch):
        pooling_report(g, curv, g, curv, PoolAssignment.identity(5))


def test_pooling_report_schema_rejects_inconsistent_counts():
    with pytest.raises(ValueError):
        PoolingReport(
            nodes_before=3,
            nodes_after=4,
            edges_before=2,
            edges_after=1,
            pool_size_histogram={1: 4},
        )


def test_graph_stats():
    row = graph_stats("barbell", barbell(4), bfc_all(barbell(4)), label=1)
    assert row.edges == 13 and row.label == 1
    assert row.curv_min == pytest.approx(-1.0)
    assert row.curv_max == pytest.approx(4 / 3)


def test_growth_ratios():
    rows = [
        BenchRow(num_cliques=n, clique_size=6, nodes=6 * n, edges=15 * n,
                 bfc_seconds=s, curvpool_seconds=0.0, cliquepool_seconds=0.0)
        for n, s in ((10, 1.0), (20, 2.0), (40, 5.0))
    ]
    assert growth_ratios(rows) == [2.0, 2.5]
