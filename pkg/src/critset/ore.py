"""Per-side deficiency theory on a fixed bipartition.

For bipartite g = (A, B, E) and X inside one side, the deficiency of X is
|X| - |N(X)|; its maximum over one side connects to the whole-graph critical
machinery through the identities evaluated by ore_report. The per-side kernel
and diadem rules mirror the whole-graph deletion and forcing rules and are
kept honest by subset-enumeration oracles in the tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import islice
from typing import Iterator, Literal

from .critical import (ORACLE_LIMIT, _enumerate_target_sets,
                       critical_difference, diadem,
                       enumerate_critical_independent_sets, ker)
from .graphs import (BipartitePartition, Graph, LimitExceeded, VertexSet,
                     bipartition, delete_vertices, difference, iter_bits,
                     neighborhood)
from .ke import IdentityCheck
from .matching import (_check_parts, maximum_matching_bipartite,
                       saturating_matching)
from .mis import alpha, core_and_corona

Side = Literal["A", "B"]


@dataclass(frozen=True)
class OreProfile:
    delta0_a: int
    delta0_b: int
    ker_a: VertexSet
    ker_b: VertexSet
    diadem_a: VertexSet
    diadem_b: VertexSet


@dataclass(frozen=True)
class OreReport:
    profile: OreProfile
    checks: tuple[IdentityCheck, ...]


def _side_mask(parts: BipartitePartition, side: Side) -> VertexSet:
    if side == "A":
        return parts.side_a
    if side == "B":
        return parts.side_b
    raise ValueError(f"side must be 'A' or 'B', got {side!r}")


def _remap(mask: VertexSet, idmap: dict[int, int]) -> VertexSet:
    out = 0
    for v in iter_bits(mask):
        if v in idmap:
            out |= 1 << idmap[v]
    return out


def _sub_parts(parts: BipartitePartition, gone: VertexSet,
               idmap: dict[int, int]) -> BipartitePartition:
    return BipartitePartition(_remap(parts.side_a & ~gone, idmap),
                              _remap(parts.side_b & ~gone, idmap))


def delta0(g: Graph, parts: BipartitePartition, side: Side) -> int:
    """Largest |X| - |N(X)| over subsets X of the side; computed as
    |side| - mu(g), which the subset oracle confirms in the tests."""
    _check_parts(g, parts)
    mu = len(maximum_matching_bipartite(g, parts))
    return _side_mask(parts, side).bit_count() - mu


def is_side_critical(g: Graph, parts: BipartitePartition, side: Side,
                     x: VertexSet) -> bool:
    """True iff x lies within the side and attains its deficiency maximum."""
    if x & ~_side_mask(parts, side):
        raise ValueError("x is not contained in the chosen side")
    return difference(g, x) == delta0(g, parts, side)


def side_kernel(g: Graph, parts: BipartitePartition, side: Side) -> VertexSet:
    """Intersection of all side-critical sets, by the deletion rule: v belongs
    iff removing it drops the side's deficiency maximum by exactly 1."""
    d0 = delta0(g, parts, side)
    out = 0
    for v in iter_bits(_side_mask(parts, side)):
        bit = 1 << v
        smaller, idmap = delete_vertices(g, bit)
        if delta0(smaller, _sub_parts(parts, bit, idmap), side) == d0 - 1:
            out |= bit
    return out


def side_diadem(g: Graph, parts: BipartitePartition, side: Side) -> VertexSet:
    """Union of all side-critical sets, by the forcing rule: v belongs iff
    1 - |N(v)| + delta0 of the side in g - N[v] matches delta0 of the side."""
    d0 = delta0(g, parts, side)
    out = 0
    for v in iter_bits(_side_mask(parts, side)):
        closed = neighborhood(g, 1 << v, closed=True)
        smaller, idmap = delete_vertices(g, closed)
        rest = delta0(smaller, _sub_parts(parts, closed, idmap), side)
        if 1 - g.degree(v) + rest == d0:
            out |= 1 << v
    return out


def enumerate_side_critical_sets(
        g: Graph, parts: BipartitePartition, side: Side,
        limit: int = ORACLE_LIMIT) -> Iterator[VertexSet]:
    """Yield every X within the side attaining its deficiency maximum."""
    _check_parts(g, parts)
    s = _side_mask(parts, side)
    if s.bit_count() > limit:
        raise LimitExceeded(
            f"side size {s.bit_count()} exceeds oracle limit {limit}")
    yield from _enumerate_target_sets(g, s, delta0(g, parts, side), False)


def ore_report(g: Graph, parts: BipartitePartition | None = None,
               limit: int = ORACLE_LIMIT, sample: int = 8) -> OreReport:
    """Two-sided profile plus the identity bundle tying the sides together.

    Checks that range over enumerated families look at the first `sample`
    members per family, except the side projection check, which walks every
    critical independent set under the limit guard.
    """
    if parts is None:
        parts = bipartition(g)
        if parts is None:
            raise ValueError("graph is not bipartite")
    _check_parts(g, parts)
    d0a = delta0(g, parts, "A")
    d0b = delta0(g, parts, "B")
    profile = OreProfile(d0a, d0b,
                         side_kernel(g, parts, "A"), side_kernel(g, parts, "B"),
                         side_diadem(g, parts, "A"), side_diadem(g, parts, "B"))
    d = critical_difference(g)
    al = alpha(g)
    mu = len(maximum_matching_bipartite(g, parts))
    kr = ker(g)
    dia = diadem(g)
    core = core_and_corona(g, limit).core

    def labels(mask: VertexSet) -> list[str]:
        return g.label_list(mask)

    a_crits = list(islice(enumerate_side_critical_sets(g, parts, "A", limit),
                          sample))
    b_crits = list(islice(enumerate_side_critical_sets(g, parts, "B", limit),
                          sample))

    bad_unions = sum(1 for x in a_crits for y in b_crits
                     if difference(g, x | y) != d)
    bad_projections = 0
    for z in enumerate_critical_independent_sets(g, limit):
        if (difference(g, z & parts.side_a) != d0a
                or difference(g, z & parts.side_b) != d0b):
            bad_projections += 1
    bad_matchings = sum(
        1 for x in a_crits + b_crits
        if x and saturating_matching(g, neighborhood(g, x), x)[0] is None)

    alpha_routes = [parts.side_a.bit_count() + d0b,
                    parts.side_b.bit_count() + d0a, mu + d]
    side_sums = [profile.ker_a.bit_count() + profile.diadem_b.bit_count(),
                 profile.ker_b.bit_count() + profile.diadem_a.bit_count()]

    checks = (
        IdentityCheck("d_eq_delta0_sum", d == d0a + d0b, d, d0a + d0b),
        IdentityCheck("alpha_routes_agree",
                      all(r == al for r in alpha_routes), al, alpha_routes),
        IdentityCheck("cross_unions_critical", bad_unions == 0, bad_unions, 0),
        IdentityCheck("critical_ind_projects_to_sides",
                      bad_projections == 0, bad_projections, 0),
        IdentityCheck("matchings_into_side_criticals",
                      bad_matchings == 0, bad_matchings, 0),
        IdentityCheck("side_kernels_union_to_ker",
                      profile.ker_a | profile.ker_b == kr,
                      labels(profile.ker_a | profile.ker_b), labels(kr)),
        IdentityCheck("ker_plus_diadem_eq_two_alpha",
                      kr.bit_count() + dia.bit_count() == 2 * al,
                      kr.bit_count() + dia.bit_count(), 2 * al),
        IdentityCheck("side_ker_plus_opposite_diadem_eq_alpha",
                      all(s == al for s in side_sums), al, side_sums),
        IdentityCheck("side_diadems_union_to_diadem",
                      profile.diadem_a | profile.diadem_b == dia,
                      labels(profile.diadem_a | profile.diadem_b), labels(dia)),
        IdentityCheck("ker_eq_core", kr == core, labels(kr), labels(core)),
    )
    return OreReport(profile, checks)
