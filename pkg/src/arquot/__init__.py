"""AR quivers of u-cluster categories of Dynkin type and their quotients."""

from .cluster import ClusterQuiverSpec, cluster_quiver, shape_classify
from .dynkin import DynkinDiagram, coxeter_number, diagram, diagram_automorphism
from .isomorphism import is_isomorphic
from .meshhom import HomMatrix, hammock, hom_dim_orbit, hom_matrix, oracle_hom_matrix, oracle_mesh_hom
from .theorems import (
    VerificationReport,
    corollary_params,
    search_quotients,
    verify_theorem_A,
    verify_theorem_D,
    verify_theorem_E,
)
from .tquiver import (
    TranslationQuiver,
    connected_components,
    delete_tau_stable,
    orbit_quiver,
    tau_orbits,
    validate,
)
from .ztrans import AffineAutomorphism, ZVertex, compose, phi, power, sigma

__version__ = "0.1.0"
