"""Exact clique and independent-set counting.

``clique_profile`` returns the number of cliques of every size, computed by
the pivot recursion  k(G) = k(G - v) + k(G[N(v)])  on bit-rows, memoized by
the induced vertex set.  ``profile_by_scan`` classifies all 2^n subsets
directly and is kept as the independent oracle; the two paths share no code.

Counts are Python ints (arbitrary precision): k(K_62) = 2^62 already
overflows 64 bits once multiplied into the product quantity.

Conventions: the empty set and singletons count as cliques and as
independent sets, so by_size[0] = 1 and by_size[1] = n for every graph.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, complement


@dataclass(frozen=True)
class CliqueProfile:
    """by_size[t] = number of t-vertex cliques; length n+1."""

    by_size: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.by_size)

    def count(self, t: int) -> int:
        return self.by_size[t] if 0 <= t < len(self.by_size) else 0


def clique_profile(g: Graph) -> CliqueProfile:
    """Exact clique counts of every size, via memoized pivot recursion."""
    adj = g.adj
    memo: dict[int, tuple[int, ...]] = {0: (1,)}

    def rec(mask: int) -> tuple[int, ...]:
        cached = memo.get(mask)
        if cached is not None:
            return cached
        # pivot on the max-degree vertex of the induced subgraph
        best_v = -1
        best_d = -1
        m = mask
        while m:
            low = m & -m
            m ^= low
            v = low.bit_length() - 1
            d = (adj[v] & mask).bit_count()
            if d > best_d:
                best_d, best_v = d, v
        without = rec(mask & ~(1 << best_v))
        nbrs = rec(mask & adj[best_v])
        out = list(without) + [0] * (len(nbrs) + 1 - len(without))
        for size, cnt in enumerate(nbrs):
            out[size + 1] += cnt
        res = tuple(out)
        memo[mask] = res
        return res

    prof = rec(g.vertex_mask)
    return CliqueProfile(prof + (0,) * (g.n + 1 - len(prof)))


def independent_profile(g: Graph) -> CliqueProfile:
    """by_size[t] = number of t-vertex independent sets (cliques of the complement)."""
    return clique_profile(complement(g))


def profile_by_scan(g: Graph) -> CliqueProfile:
    """Oracle: scan all 2^n subsets, extending cliques one vertex at a time.

    Deliberately independent of the pivot recursion.  Capped at n <= 20.
    """
    n = g.n
    if n > 20:
        raise ValueError(f"subset scan is capped at n <= 20, got {n}")
    adj = g.adj
    is_cl = bytearray(1 << n)
    is_cl[0] = 1
    by_size = [0] * (n + 1)
    by_size[0] = 1
    for mask in range(1, 1 << n):
        v = (mask & -mask).bit_length() - 1
        rest = mask & (mask - 1)
        if is_cl[rest] and adj[v] & rest == rest:
            is_cl[mask] = 1
            by_size[mask.bit_count()] += 1
    return CliqueProfile(tuple(by_size))


def count_cliques(g: Graph) -> int:
    return clique_profile(g).total


def count_independent_sets(g: Graph) -> int:
    return independent_profile(g).total


def sigma(g: Graph) -> int:
    """Clique count plus independent-set count."""
    return count_cliques(g) + count_independent_sets(g)


def pi(g: Graph) -> int:
    """Clique count times independent-set count."""
    return count_cliques(g) * count_independent_sets(g)


def _check_t(g: Graph, t: int) -> None:
    if not 0 <= t <= g.n:
        raise ValueError(f"size t must be in [0, {g.n}], got {t}")


def sigma_t(g: Graph, t: int) -> int:
    """Number of size-t cliques plus number of size-t independent sets."""
    _check_t(g, t)
    return clique_profile(g).count(t) + independent_profile(g).count(t)


def pi_t(g: Graph, t: int) -> int:
    """Number of size-t cliques times number of size-t independent sets."""
    _check_t(g, t)
    return clique_profile(g).count(t) * independent_profile(g).count(t)
