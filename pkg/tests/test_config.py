import json
import logging

import pytest
import structlog

from curvpool.core.config import Config, get_config, reload_config
from curvpool.core.executor import map_graphs
from curvpool.core.logger import get_logger, setup_logging
from curvpool.core.schemas import RunConfig
from curvpool.pooling import Aggregator, StrategyKind


def _square(x):
    return x * x


def test_config_defaults():
    config = Config()
    assert config.default_bins == 40
    assert config.histogram_precision == 17
    assert config.rng_algorithm == "PCG64"
    assert config.resolve_threads(3) == 3
    assert config.resolve_threads(0) >= 1


def test_config_reads_environment(monkeypatch):
    monkeypatch.setenv("CURVPOOL_LOG_LEVEL", "debug")
    monkeypatch.setenv("CURVPOOL_THREADS", "2")
    try:
        config = reload_config()
        assert config.log_level == "DEBUG"
        assert config.resolve_threads() == 2
    finally:
        monkeypatch.delenv("CURVPOOL_LOG_LEVEL")
        monkeypatch.delenv("CURVPOOL_THREADS")
        reload_config()
    assert get_config().log_level == "WARNING"


def test_config_rejects_bad_values():
    with pytest.raises(ValueError):
        Config(CURVPOOL_LOG_LEVEL="chatty")
    with pytest.raises(ValueError):
        Config(CURVPOOL_THREADS=-1)


def test_map_graphs_keeps_input_order():
    items = list(range(20))
    assert map_graphs(_square, items, threads=1) == [x * x for x in items]
    assert map_graphs(_square, items, threads=3) == [x * x for x in items]
    assert map_graphs(_square, [], threads=4) == []


def test_run_config_validation():
    run = RunConfig(command="pool", input="g.edges", output="out", strategy="mixed", t_low=-1.0, t_high=1.0, agg="max")
    assert run.build_strategy().kind is StrategyKind.MIXED
    assert run.build_aggregator() is Aggregator.MAX
    with pytest.raises(ValueError):
        RunConfig(command="pool", input="g.edges", output="out")
    with pytest.raises(ValueError):
        RunConfig(command="generate", output="out", seed=-1)
    with pytest.raises(ValueError):
        RunConfig(command="stats", input="g.edges", bins=0)


def test_json_logging_goes_to_stderr(capsys):
    setup_logging(log_level="INFO", enable_json=True)
    try:
        get_logger("curvpool.test").info("graph pooled", pools=3)
        captured = capsys.readouterr()
        assert captured.out == ""
        event = json.loads(captured.err.strip().splitlines()[-1])
        assert event["event"] == "graph pooled" and event["pools"] == 3
        assert event["level"] == "info"
    finally:
        structlog.reset_defaults()
        logging.getLogger().handlers.clear()
