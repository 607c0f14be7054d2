"""Critical-set invariants of finite simple graphs.

The difference of a vertex set X is d(X) = |X| - |N(X)|. Everything here
hangs off that one number: the critical difference d(G), the critical
independent sets attaining it, their intersection (ker) and union (diadem),
and how those relate to the intersection (core) and union (corona) of the
maximum independent sets. The polynomial routes go through matchings on the
bipartite double cover; exponential enumeration exists only as an oracle for
cross-checking and is always bounded.
"""

from .critical import (CriticalProfile, critical_difference,
                       critical_independent_witness, critical_profile, diadem,
                       enumerate_critical_independent_sets,
                       enumerate_critical_sets, is_critical_independent,
                       is_critical_set, ker, max_subset_difference,
                       minimal_positive_independent_sets,
                       verify_ker_characterization)
from .graphs import (BipartitePartition, Graph, LimitExceeded, ParseError,
                     bipartition, complete_bipartite, complete_graph,
                     cycle_graph, delete_edge, delete_vertices, difference,
                     empty_graph, generate, is_independent, neighborhood,
                     parse_graph, path_graph, random_graph, to_edge_list)
from .ke import KeReport, is_ke_via_critical, is_koenig_egervary, ke_identities
from .matching import (Matching, deficiency, maximum_matching_bipartite,
                       maximum_matching_general, saturating_matching)
from .mis import (MisProfile, alpha, core_and_corona,
                  enumerate_maximum_independent_sets,
                  maximum_critical_independent_set)
from .ore import (OreProfile, OreReport, delta0, enumerate_side_critical_sets,
                  is_side_critical, ore_report, side_diadem, side_kernel)
from .props import (Config, CorpusSpec, Facts, Property, PropertyResult,
                    conjecture_scan, exhaustive_corpus, fixtures_corpus,
                    files_corpus, parse_corpus_spec, random_corpus, registry,
                    run, shrink)

__version__ = "0.1.0"

__all__ = [
    "BipartitePartition", "Config", "CorpusSpec", "CriticalProfile", "Facts",
    "Graph", "KeReport", "LimitExceeded", "Matching", "MisProfile",
    "OreProfile", "OreReport", "ParseError", "Property", "PropertyResult",
    "alpha", "bipartition", "complete_bipartite", "complete_graph",
    "conjecture_scan", "core_and_corona", "critical_difference",
    "critical_independent_witness", "critical_profile", "cycle_graph",
    "deficiency", "delete_edge", "delete_vertices", "delta0", "diadem",
    "difference", "empty_graph", "enumerate_critical_independent_sets",
    "enumerate_critical_sets", "enumerate_maximum_independent_sets",
    "enumerate_side_critical_sets", "exhaustive_corpus", "files_corpus",
    "fixtures_corpus", "generate", "is_critical_independent",
    "is_critical_set", "is_independent", "is_ke_via_critical",
    "is_koenig_egervary", "is_side_critical", "ke_identities", "ker",
    "max_subset_difference", "maximum_critical_independent_set",
    "maximum_matching_bipartite", "maximum_matching_general",
    "minimal_positive_independent_sets", "neighborhood", "ore_report",
    "parse_corpus_spec", "parse_graph", "path_graph", "random_corpus",
    "random_graph", "registry", "run", "saturating_matching", "shrink",
    "side_diadem", "side_kernel", "to_edge_list",
    "verify_ker_characterization",
]
