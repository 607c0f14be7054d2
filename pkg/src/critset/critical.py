"""Critical difference machinery: double cover, d(G), ker, diadem, enumerations.

The polynomial routes all reduce to bipartite matching on the double cover;
the enumeration routes exist as oracles and are cross-checked in the tests.
"""

from __future__ import annotations

from typing import Iterator, NamedTuple

from .graphs import (BipartitePartition, Graph, LimitExceeded, VertexSet,
                     delete_vertices, difference, is_independent, iter_bits,
                     neighborhood, vlist)
from .matching import (_hopcroft_karp, bipartite_max_independent_set,
                       saturating_matching)

ORACLE_LIMIT = 20


class DoubleCover(NamedTuple):
    """Bipartite companion of g: ids 0..n-1 are the plus copies, n..2n-1 minus."""

    h: Graph
    parts: BipartitePartition

    def up(self, v: int) -> int:
        return v

    def down(self, v: int) -> int:
        return self.h.n // 2 + v


class CriticalProfile(NamedTuple):
    d: int
    a_witness: VertexSet
    ker: VertexSet
    diadem: VertexSet
    method: str


def double_cover(g: Graph) -> DoubleCover:
    """Return H with v+ w- adjacent iff vw is an edge of g."""
    n = g.n
    adj = [0] * (2 * n)
    for v in range(n):
        adj[v] = g.adj[v] << n
        adj[n + v] = g.adj[v]
    labels = tuple(f"{lab}+" for lab in g.labels) + tuple(
        f"{lab}-" for lab in g.labels)
    h = Graph.from_adj(tuple(adj), labels)
    plus = (1 << n) - 1
    return DoubleCover(h, BipartitePartition(plus, plus << n))


def critical_difference(g: Graph) -> int:
    """Return d(g) = alpha(double cover) - |V|, via bipartite matching.

    Every X gives the H-independent set X+ union (V-N(X))-, so alpha(H) =
    n + d(g); with H bipartite, alpha(H) = 2n - mu(H), hence d = n - mu(H).
    """
    cover = double_cover(g)
    mate = _hopcroft_karp(cover.h, cover.parts.side_a, cover.parts.side_b)
    mu_h = sum(1 for v in mate[:g.n] if v != -1)
    return g.n - mu_h


def critical_independent_witness(g: Graph) -> VertexSet:
    """Return an independent J with d(J) = d(g).

    Reads a maximum independent set I off the double cover, takes the critical
    set P = {v : v+ in I}, and returns J = P - N(P); J may be empty when
    d(g) = 0.
    """
    cover = double_cover(g)
    ind = bipartite_max_independent_set(cover.h, cover.parts)
    p = ind & cover.parts.side_a
    return p & ~neighborhood(g, p)


def is_critical_set(g: Graph, x: VertexSet) -> bool:
    """Return True iff d(x) = d(g)."""
    return difference(g, x) == critical_difference(g)


def is_critical_independent(g: Graph, x: VertexSet) -> bool:
    """Return True iff x is independent and d(x) = d(g)."""
    return is_independent(g, x) and is_critical_set(g, x)


def ker(g: Graph) -> VertexSet:
    """Return ker(g): v belongs iff deleting v drops the critical difference."""
    d0 = critical_difference(g)
    out = 0
    for v in range(g.n):
        smaller, _ = delete_vertices(g, 1 << v)
        if critical_difference(smaller) == d0 - 1:
            out |= 1 << v
    return out


def diadem(g: Graph) -> VertexSet:
    """Return diadem(g) by the forcing rule: v is in some critical independent
    set iff 1 - |N(v)| + d(g - N[v]) = d(g)."""
    d0 = critical_difference(g)
    out = 0
    for v in range(g.n):
        rest, _ = delete_vertices(g, neighborhood(g, 1 << v, closed=True))
        if 1 - g.degree(v) + critical_difference(rest) == d0:
            out |= 1 << v
    return out


def critical_profile(g: Graph) -> CriticalProfile:
    """Bundle d, a witness, ker and diadem, all by the polynomial routes."""
    return CriticalProfile(critical_difference(g), critical_independent_witness(g),
                           ker(g), diadem(g), "polynomial")


def _enumerate_target_sets(g: Graph, universe: VertexSet, target: int,
                           independent_only: bool) -> Iterator[VertexSet]:
    """DFS all subsets of universe with d = target, include-first, pruned by
    d(chosen) + |remaining candidates| < target."""
    order = vlist(universe)

    def rec(idx: int, chosen: VertexSet, nbhd: VertexSet) -> Iterator[VertexSet]:
        d_now = chosen.bit_count() - nbhd.bit_count()
        if independent_only:
            remaining = sum(1 for j in range(idx, len(order))
                            if not chosen & g.adj[order[j]])
        else:
            remaining = len(order) - idx
        # each added vertex raises d by at most 1
        if d_now + remaining < target:
            return
        if idx == len(order):
            if d_now == target:
                yield chosen
            return
        v = order[idx]
        if not independent_only or not chosen & g.adj[v]:
            yield from rec(idx + 1, chosen | 1 << v, nbhd | g.adj[v])
        yield from rec(idx + 1, chosen, nbhd)

    yield from rec(0, 0, 0)


def enumerate_critical_independent_sets(
        g: Graph, limit: int = ORACLE_LIMIT) -> Iterator[VertexSet]:
    """Yield every independent set attaining d(g), each exactly once."""
    if g.n > limit:
        raise LimitExceeded(f"n={g.n} exceeds oracle limit {limit}")
    yield from _enumerate_target_sets(g, g.full, critical_difference(g), True)


def enumerate_critical_sets(g: Graph,
                            limit: int = ORACLE_LIMIT) -> Iterator[VertexSet]:
    """Yield every subset attaining d(g), independence not required."""
    if g.n > limit:
        raise LimitExceeded(f"n={g.n} exceeds oracle limit {limit}")
    yield from _enumerate_target_sets(g, g.full, critical_difference(g), False)


def max_subset_difference(g: Graph, x: VertexSet) -> int:
    """Return max{d(T) : T subset of x} for independent x, via the defect form
    of Hall's theorem: the max equals |x| - mu(x, N(x))."""
    if not is_independent(g, x):
        raise ValueError("defect form needs an independent base set")
    mate = _hopcroft_karp(g, x, neighborhood(g, x))
    matched = sum(1 for v in iter_bits(x) if mate[v] != -1)
    return x.bit_count() - matched


def minimal_positive_independent_sets(
        g: Graph, limit: int = ORACLE_LIMIT) -> Iterator[VertexSet]:
    """Yield all inclusion-minimal independent sets with positive difference.

    Minimality is exact: S qualifies iff no proper subset has d > 0, checked
    through max_subset_difference on S - v for each v (every proper subset of
    S lies under some S - v).
    """
    if g.n > limit:
        raise LimitExceeded(f"n={g.n} exceeds oracle limit {limit}")

    def rec(idx: int, chosen: VertexSet, nbhd: VertexSet) -> Iterator[VertexSet]:
        d_now = chosen.bit_count() - nbhd.bit_count()
        if d_now >= 1:
            # any strict superset has this positive set as a proper subset
            if all(max_subset_difference(g, chosen ^ (1 << v)) <= 0
                   for v in iter_bits(chosen)):
                yield chosen
            return
        remaining = sum(1 for j in range(idx, g.n) if not chosen & g.adj[j])
        if d_now + remaining < 1 or idx == g.n:
            return
        if not chosen & g.adj[idx]:
            yield from rec(idx + 1, chosen | 1 << idx, nbhd | g.adj[idx])
        yield from rec(idx + 1, chosen, nbhd)

    yield from rec(0, 0, 0)


def verify_ker_characterization(
        g: Graph, a: VertexSet,
        limit: int = ORACLE_LIMIT) -> tuple[bool, dict | None]:
    """Decide whether a critical independent set a equals ker(g).

    Evaluates two equivalent conditions and insists they agree:
    no nonempty B inside N(a) with |N(B) & a| = |B| (tight set), and
    a matching from N(a) into a - v for every v in a. On a negative answer the
    witness carries either the tight set or the unmatched vertex.
    """
    if not is_critical_independent(g, a):
        raise ValueError("a must be a critical independent set")
    boundary = neighborhood(g, a)
    if boundary.bit_count() > limit:
        raise LimitExceeded("neighborhood too large for the tight-set search")

    tight: VertexSet | None = None
    members = vlist(boundary)
    for code in range(1, 1 << len(members)):
        b = 0
        for k, v in enumerate(members):
            if code >> k & 1:
                b |= 1 << v
        if (neighborhood(g, b) & a).bit_count() == b.bit_count():
            tight = b
            break

    unmatchable: int | None = None
    for v in iter_bits(a):
        found, _ = saturating_matching(g, boundary, a & ~(1 << v))
        if found is None:
            unmatchable = v
            break

    if (tight is None) != (unmatchable is None):
        raise RuntimeError("tight-set and matching conditions disagree")
    if tight is not None:
        return False, {"tight_set": tight, "unmatchable_vertex": unmatchable}
    return True, None
