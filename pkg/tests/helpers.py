"""Grafos aleatorios con compartición (DAG) para pruebas de propiedades."""
import random
from itertools import product
from typing import Iterator, Optional

from andorcut.generator import GeneratorConfig, generate
from andorcut.graph import AndOrGraph, Node


def random_dag(
    rng: random.Random,
    atomic: int = 5,
    inner: int = 4,
    inf_prob: float = 0.1,
    min_cost: int = 0,
    target_cost: Optional[int] = None,
) -> AndOrGraph:
    """Hojas atómicas, nodos internos (AND, OR o atómicos con entradas) y un objetivo ``t``."""
    nodes = []
    edges = []
    pool = []
    for i in range(atomic):
        cost = None if rng.random() < inf_prob else rng.randint(min_cost, 9)
        nodes.append(Node.atomic(f"x{i}", cost))
        pool.append(f"x{i}")
    for j in range(inner):
        name = f"g{j}"
        kind = rng.choice(["and", "or", "or", "and", "atomic"])
        if kind == "atomic":
            nodes.append(Node.atomic(name, rng.randint(max(min_cost, 1), 9)))
        else:
            nodes.append(Node.gate(name, kind))
        for source in rng.sample(pool, rng.randint(1, min(3, len(pool)))):
            edges.append((source, name))
        pool.append(name)
    nodes.append(Node.atomic("t", target_cost))
    edges.append((pool[-1], "t"))
    if len(pool) > 1 and rng.random() < 0.3:
        extra = rng.choice(pool[:-1])
        edges.append((extra, "t"))
    return AndOrGraph(nodes, edges, "t")


def small_generated(seed: int, composition, limit: int = 18) -> Iterator[AndOrGraph]:
    """Grafos del generador con a lo sumo ``limit`` nodos atómicos comprometibles.

    Los tamaños recorren 12..32 para acercarse al límite en ambas composiciones
    (22-23 nodos llegan a 17-18 atómicos con 80/10/10, 30-31 con 60/20/20).
    """
    size = 12 + seed % 21
    graph = generate(GeneratorConfig(size_target=size, composition=composition, seed=seed))
    if len(graph.compromisable()) <= limit:
        yield graph


def all_assignments(names):
    for values in product([False, True], repeat=len(names)):
        yield dict(zip(names, values))
