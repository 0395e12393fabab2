"""Subgroup perfect codes in Cayley graphs: decision, construction, search.

A subset C of a finite group G is a perfect code of G when some Cayley
graph Cay(G, S) admits C as a perfect code (an efficient dominating set).
This package decides the question for subgroups, constructs witness
connection sets, classifies which groups have only perfect-code
subgroups, and cross-validates everything against a brute-force
transversal search.
"""

from .cayley import (
    CayleyGraph,
    ConnectionSet,
    MultiplicityMap,
    Transversal,
    build_cayley,
    connection_set,
    export_dot,
    group_ring_product_check,
    is_perfect_code_graph,
    is_transversal,
)
from .classify import (
    CodeDecision,
    Method,
    NegativeWitness,
    decide,
    decide_abelian,
    decide_normal,
    enumerate_codes,
    is_2_pure,
    is_code_perfect,
    quaternion_codes,
)
from .construct import (
    CosetClass,
    CosetClassification,
    OrbitPairing,
    SearchOutcome,
    SearchResult,
    classify_cosets,
    connection_set_from_transversal,
    coset_obstruction,
    involution_transversal,
    lambda2_orbit_pairings,
    order4free_transversal,
    search_transversal,
)
from .errors import (
    BadTableFile,
    ContainsIdentity,
    HasOrder4Element,
    InvalidN,
    InvalidSpec,
    IsSquare,
    MissingIdentity,
    NotAbelian,
    NotInverseClosed,
    NotInvolution,
    NotNormal,
    OrderBoundExceeded,
    PerfcodeError,
    SearchBudgetExceeded,
    SpecSemanticError,
    SpecSyntaxError,
)
from .groups import (
    Abelian,
    Cyclic,
    Dihedral,
    FiniteGroup,
    GeneralizedQuaternion,
    GroupSpec,
    Permutation,
    Product,
    Table,
    build_group,
    element_order,
    element_orders,
    has_element_of_order_4,
    load_table_group,
    power,
    squares,
)
from .specparse import parse_spec, pretty_print
from .subgroups import (
    Coset,
    Subgroup,
    all_subgroups,
    conjugate_subgroup,
    coset_partition,
    cosets,
    generated_subgroup,
    has_complement,
    is_normal,
    subgroup_as_group,
    subgroup_from_elements,
    torsion_components_abelian,
    trivial_subgroup,
)

__version__ = "0.1.0"
