from .core import load, loads, dump, dumps, loads_any, loads_expr, dumps_expr, loads_relation, dumps_relation
from .reader import Reader
from .writer import Writer
from .errors import (PwhError, ComplexError, FoldError, ExprError, RelationError, VerifyError,
                     InvariantError, InputError)
from .complex import (VertexId, SimplicialComplex, SimplicialPair, vertex, face, simplex,
                      boundary_simplex, point, empty_complex, void_complex, join, join_all, union,
                      intersection, full_subcomplex, is_full_subcomplex, isomorphism, is_isomorphic)
from .polyjoin import polyhedral_join, substitution, composition, mf_polyhedral_join
from .folds import Fold, folded_complex, max_folding_complex, classify_partition_fold
from .whitehead import (Mode, Status, Verdict, SpaceRef, MapLeaf, Sum, Hw, Folded, Permutation,
                        koszul_sign, render, triviality)
from .relations import (Partition, Summand, Relation, identity_complex, relation, substituted_relation,
                        folded_relation, fold_within_relation, fold_across_relation, collect)

__version__ = "0.1.0"
