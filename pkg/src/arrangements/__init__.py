"""Exact topological and combinatorial invariants of affine plane arrangements.

The library computes, in exact rational or Gaussian-rational arithmetic:

* intersection posets with Mobius values and classification predicates;
* order complexes, local pairs, naive pairs, and connected graph and
  hypergraph complexes, with integral homology via Smith normal form;
* the complement-cohomology decomposition over poset nodes, its wedge
  counterpart for the compactified support, and the shuffle product on the
  associated graded ring;
* the Orlik-Solomon algebra of a central complex hyperplane arrangement,
  an algebraic pipeline that must agree with the poset-theoretic one;
* real region enumeration with sign vectors and exact witnesses, bounded
  region counts, sign-sequence cell censuses of complexified complements,
  and imaginary wedge decompositions for normal crossings;
* twisted-homology dimension predictions from monodromy data;
* matroid rank functions, axiom checking, and the ten-line configuration
  realizable only over fields containing a square root of -1.
"""

from .arrangement import (Arrangement, CanonicalSubspace, InputError,
                          SizeLimitError, arrangement_to_document, complexify,
                          complexified_double, from_plane_equations,
                          parse_arrangement, realify)
from .complexes import (BudgetExceeded, DEFAULT_FACE_BUDGET, SimplicialComplex,
                        SimplicialPair, connected_graph_pair,
                        hyperedges_connected, k_hypergraph_pair,
                        local_order_pair, naive_pair, order_complex)
from .gm import GMReport, WedgeSummary, gm_report, wedge_summary
from .homology import (ChainComplexData, HomologySummary, chain_complex,
                       cycle_basis, euler_characteristic, homology,
                       pair_homology, reduced_homology)
from .linalg import (Matrix, SNFResult, det, elementary_divisors_sparse,
                     kernel_basis, rank, rref, smith_normal_form, solve_affine)
from .matroid import (MnevReport, RankFunction, check_matroid_axioms,
                      matroid_from_arrangement, mnev_check,
                      same_dimensional_data)
from .orlik_solomon import (Circuit, OSAlgebra, circuits, cone_arrangement,
                            decone_poincare, generator, os_algebra, os_product,
                            os_poincare_polynomial)
from .poset import (DimensionSignature, IntersectionPoset,
                    build_intersection_poset, characteristic_polynomial,
                    dimensional_data, is_ge2_arrangement, is_generic,
                    is_normal_crossings, transversal)
from .rationals import QI, QQ, GaussianRational, field_by_tag
from .regions import Region, count_bounded, count_regions, enumerate_regions
from .salvetti import (ImaginaryWedgeCensus, SalvettiCellCensus,
                       imaginary_wedge_census, salvetti_census)
from .shuffle import (GradedClass, GradedRingTable, canonical_orientations,
                      class_of_plane, complex_orientations, graded_ring_table,
                      is_relative_cycle, shuffle_product)
from .twisted import (GENERIC, MonodromyData, TwistedPrediction,
                      monodromy_from_tokens, one_dim_twisted_complex,
                      resonance_generic, twisted_dim_normal_crossing)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
