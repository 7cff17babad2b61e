"""Cone-layer graph families, symmetric sphere triangulations, parity
certificates, and near-antipodal embeddings, at desk scale.

Everything is immutable after construction and every operation is a
pure function, so the whole API is safe to call concurrently.
"""

from .borsuk import (CandidateMap, EmbeddedGraph, ProbeReport, choose_rs,
                     drop_normalize_map, embed_family, probe_map, sign_map,
                     simplex_coloring, simplex_vertices, tabulated_map,
                     verify_embedding)
from .coloring import (ChromaticCertificate, Coloring, Inconclusive,
                       chi_exact, dsatur_greedy, greedy_clique,
                       monochromatic_edges)
from .complexes import (BLACK, WHITE, Flag, Quotient, Report, SymmetricComplex,
                        TwoColoring, Violation, bichromatic_skeleton,
                        circle_complex, cross_polytope, quotient_graph,
                        verify_flag, verify_sphere_necessary,
                        verify_symmetric, verify_two_coloring)
from .errors import (ContractError, SamplingExhaustedError, SizeCapError,
                     TheoremViolationError)
from .fan import (Labeling, MonochromeEdgeCert, find_balanced_edge,
                  labeling_from_coloring, mu_transform,
                  positive_alternating_count, random_balanced_free_labelings,
                  refute_coloring, validate_labeling)
from .graphs import (Graph, build_family, complement, complete_graph,
                     cycle_graph, double_cover, is_bipartite, mycielski)
from .iso import find_isomorphism, is_isomorphic, verify_isomorphism
from .lift import (LiftUnsupportedError, SphereModel, general_lift,
                   sphere_model, suspension_lift)
from .names import Apex, Base, Level, VertexName, parse_name

__version__ = "0.1.0"
