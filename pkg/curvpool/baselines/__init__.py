"""Baseline pooling methods."""

from .cliques import CliqueSet, clique_pool, dedup_cliques, maximal_cliques

__all__ = ["CliqueSet", "clique_pool", "dedup_cliques", "maximal_cliques"]
