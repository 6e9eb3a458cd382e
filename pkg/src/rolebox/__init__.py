"""Role and positional analysis of multiplex networks with actor attributes.

The package turns a stack of tie relations (and attribute diagonals) into
compound string relations, per-actor containment hierarchies, a cumulated
containment order, actor partitions, blockmodel reductions and the
semigroup of the resulting role structure.
"""

from .datasets import (CutoffSpec, Dataset, binarize, build_generators,
                       florentine, load_dataset, loads_dataset, parse_cutoff)
from .estimator import CompositionalEquivalence, as_relation_stack
from .export import export_hasse, hasse_json, matrix_csv, matrix_json, \
    parse_matrix_csv
from .hierarchy import (CumulatedHierarchy, HierarchyLevels, PersonHierarchy,
                        QuotientOrder, cumulated_hierarchy, hierarchy_levels,
                        mutual_containment, person_hierarchy, quotient)
from .position import (Partition, PositionalSystem, attribute_split,
                       blockmodel, containment_class_partition,
                       structural_equivalence_partition)
from .rbox import (RelationBox, RolePlane, RoleRelation, StringRelation, Word,
                   build_relation_box, relation_plane, role_relation, role_set)
from .relations import (ActorSet, AttributeVector, BooleanRelation,
                        attribute_to_diagonal, classify_diagonal, compose,
                        includes, intersect, transpose, union)
from .semigroup import RelationSemigroup, element_equations, generate_semigroup

__version__ = "0.1.0"

__all__ = [
    "ActorSet", "AttributeVector", "BooleanRelation",
    "compose", "union", "intersect", "transpose", "includes",
    "attribute_to_diagonal", "classify_diagonal",
    "Word", "StringRelation", "RelationBox", "RolePlane", "RoleRelation",
    "build_relation_box", "relation_plane", "role_relation", "role_set",
    "PersonHierarchy", "CumulatedHierarchy", "QuotientOrder", "HierarchyLevels",
    "person_hierarchy", "mutual_containment", "cumulated_hierarchy",
    "quotient", "hierarchy_levels",
    "Partition", "PositionalSystem", "structural_equivalence_partition",
    "containment_class_partition", "blockmodel", "attribute_split",
    "RelationSemigroup", "generate_semigroup", "element_equations",
    "Dataset", "CutoffSpec", "load_dataset", "loads_dataset", "florentine",
    "binarize", "parse_cutoff", "build_generators",
    "matrix_csv", "parse_matrix_csv", "matrix_json", "export_hasse", "hasse_json",
    "CompositionalEquivalence", "as_relation_stack",
    "__version__",
]
