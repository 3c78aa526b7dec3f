"""stmat: exact supertropical (max-plus with ghosts) matrix algebra."""

from .errors import (BoundExhaustedError, EmptyCoreError, JordanDecompositionError,
                     NoCyclesError, ParseError, PreconditionError, SizeCapError,
                     StmatError)
from .semiring import Element, ONE, Tag, ZERO, ghost, tangible
from .poly import Poly
from .matrix import Matrix, Vector, DEFAULT_MAX_N
from .graph import (ANTI_TCORE, BlockForm, CORE, CoreData, Cycle, Digraph,
                    LeadingCycleData, TCORE, build_digraph, core_submatrix,
                    cores, cycle_report, leading_data, scc_block_form,
                    simple_cycles)
from .stability import (CorepowerReport, GhostpotenceVerdict, JordanPair,
                        SemiIdempotentWitness, SemisimpleWitness,
                        StableFormReport, dupl_power_bound, ghostpotence,
                        is_quasi_identity, is_stable_block_form,
                        jordan_decompose, semi_idempotent_coeff,
                        semisimple_witness, stability_index, verify_corepower)
from .eigen import (EigenDecomposition, EigenPair, EigenRecord,
                    TcoreEigenReport, WeakToGeneralizedReport,
                    eigendecomposition, eigenvalues, eigenvector_for,
                    g_annihilators_from_adjoint, g_kernel_member,
                    is_generalized_eigenvector, tcore_strict_eigenvectors,
                    weak_membership, weak_to_generalized)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
