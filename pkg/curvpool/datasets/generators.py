"""
Synthetic graphs: the connected caveman family and small deterministic fixtures.

All randomness goes through numpy's PCG64 bit generator, so a seed reproduces
the same graph on every platform.
"""

from dataclasses import dataclass
from itertools import combinations
from typing import List, Tuple

import numpy as np

from ..core.config import get_config
from ..core.errors import InvalidSpec
from ..core.graph import FeatureMatrix, Graph, build_graph

UINT64_LIMIT = 2**64


def make_rng(seed: int) -> np.random.Generator:
    """Seeded generator using the configured (pinned) bit generator."""
    algorithm = get_config().rng_algorithm
    bit_generator = getattr(np.random, algorithm)
    return np.random.Generator(bit_generator(seed))


@dataclass(frozen=True)
class CavemanSpec:
    num_cliques: int
    clique_size: int
    seed: int = 0

    def __post_init__(self) -> None:
        if self.num_cliques < 2:
            raise InvalidSpec(f"caveman graphs need at least 2 cliques, got {self.num_cliques}")
        if self.clique_size < 3:
            raise InvalidSpec(f"caveman cliques need at least 3 nodes, got {self.clique_size}")
        if not 0 <= self.seed < UINT64_LIMIT:
            raise InvalidSpec(f"seed must be an unsigned 64-bit integer, got {self.seed}")


def caveman(spec: CavemanSpec) -> Graph:
    """Connected caveman graph: a ring of K_k cliques, one edge per clique rewired to the next.

    In clique c the seeded generator picks an internal edge (a_c, b_c); the edge is
    removed and b_c is joined to a_{c+1}. Every node keeps degree k-1 and the
    graph has l*k nodes and l*k*(k-1)/2 edges.
    """
    l, k = spec.num_cliques, spec.clique_size
    rng = make_rng(spec.seed)
    picks: List[Tuple[int, int]] = []
    for c in range(l):
        a = int(rng.integers(k))
        b = (a + 1 + int(rng.integers(k - 1))) % k
        picks.append((c * k + a, c * k + b))

    removed = {tuple(sorted(pair)) for pair in picks}
    edges = []
    for c in range(l):
        base = c * k
        for u, v in combinations(range(base, base + k), 2):
            if (u, v) not in removed:
                edges.append((u, v))
    for c in range(l):
        _, b = picks[c]
        a_next, _ = picks[(c + 1) % l]
        edges.append((b, a_next))
    return build_graph(l * k, edges)


def complete(n: int) -> Graph:
    if n < 1:
        raise InvalidSpec(f"complete graph needs n >= 1, got {n}")
    return build_graph(n, combinations(range(n), 2))


def cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidSpec(f"cycle needs n >= 3, got {n}")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise InvalidSpec(f"path needs n >= 1, got {n}")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def star(n: int) -> Graph:
    """Node 0 joined to n-1 leaves."""
    if n < 1:
        raise InvalidSpec(f"star needs n >= 1, got {n}")
    return build_graph(n, [(0, i) for i in range(1, n)])


def barbell(k: int) -> Graph:
    """Two K_k (nodes 0..k-1 and k..2k-1) joined by the bridge (k-1, k)."""
    if k < 3:
        raise InvalidSpec(f"barbell cliques need k >= 3, got {k}")
    left = list(combinations(range(k), 2))
    right = list(combinations(range(k, 2 * k), 2))
    return build_graph(2 * k, left + right + [(k - 1, k)])


def erdos_renyi(n: int, p: float, seed: int = 0) -> Graph:
    """G(n, p): each pair i < j in lexicographic order is kept with probability p."""
    if n < 0:
        raise InvalidSpec(f"n must be >= 0, got {n}")
    if not 0.0 <= p <= 1.0:
        raise InvalidSpec(f"edge probability must lie in [0, 1], got {p}")
    rng = make_rng(seed)
    pairs = list(combinations(range(n), 2))
    if not pairs:
        return build_graph(n, [])
    keep = rng.random(len(pairs)) < p
    return build_graph(n, [pair for pair, kept in zip(pairs, keep) if kept])


def degree_features(g: Graph) -> FeatureMatrix:
    """n x 1 matrix with the node degrees."""
    return FeatureMatrix(np.asarray(g.degrees, dtype=np.float64).reshape(g.num_nodes, 1))


@dataclass(frozen=True)
class ArtificialClass:
    """Cave-count and cave-size ranges (inclusive) of one label."""

    label: int
    num_cliques: Tuple[int, int]
    clique_size: Tuple[int, int]


# Few large caves against many small caves.
DEFAULT_CLASSES = (
    ArtificialClass(label=0, num_cliques=(2, 4), clique_size=(6, 8)),
    ArtificialClass(label=1, num_cliques=(5, 8), clique_size=(3, 5)),
)


def artificial_specs(count: int, seed: int, classes=DEFAULT_CLASSES) -> List[Tuple[CavemanSpec, int]]:
    """Caveman specs and labels for a dataset; labels alternate through `classes`.

    Each graph draws from its own child of SeedSequence(seed), so entry i does not
    depend on how many graphs are generated or in which order.
    """
    if count < 0:
        raise InvalidSpec(f"count must be >= 0, got {count}")
    if not 0 <= seed < UINT64_LIMIT:
        raise InvalidSpec(f"seed must be an unsigned 64-bit integer, got {seed}")
    children = np.random.SeedSequence(seed).spawn(count)
    specs = []
    for index, child in enumerate(children):
        cls = classes[index % len(classes)]
        rng = make_rng(child)
        l = int(rng.integers(cls.num_cliques[0], cls.num_cliques[1] + 1))
        k = int(rng.integers(cls.clique_size[0], cls.clique_size[1] + 1))
        graph_seed = int(child.generate_state(1, dtype=np.uint64)[0])
        specs.append((CavemanSpec(num_cliques=l, clique_size=k, seed=graph_seed), cls.label))
    return specs


def artificial_dataset(count: int, seed: int, classes=DEFAULT_CLASSES) -> List[Tuple[Graph, int]]:
    return [(caveman(spec), label) for spec, label in artificial_specs(count, seed, classes)]
