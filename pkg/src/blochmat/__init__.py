"""Two-qubit states as real 4x4 Bloch matrices.

Positivity is decided by three closed-form inequalities on the Bloch
components, the correlation matrix is brought to an SVD canonical form and
entanglement is detected by reversing the orientation sign of that form.
"""

from .algebra import dirac, dirac_basis, pauli, structure_tensors
from .bloch import (
    Bell,
    Components,
    bell_state,
    bloch_to_density,
    components_from_density,
    components_to_density,
    density_to_bloch,
    join,
    partial_trace,
    product_state,
    split,
)
from .canonical import CanonicalForm, canonical_decompose, reduced_lhs, reduced_positivity_lhs, sphere_geometry
from .entanglement import EntanglementReport, is_entangled, partial_transpose, partial_transpose_bloch
from .errors import BlochError, InvalidMatrixError, UnphysicalStateError
from .positivity import PositivityReport, eigenvalue_oracle, is_physical, positivity_lhs
from .scan import RegionClass, ScanMode, ScanSpec, run_scan, scan
from .unitary import (
    CanonicalAngles,
    LocalUnitary,
    apply_basic_nonlocal,
    apply_irreducible,
    apply_local,
    bloch_invariants,
    depolarize,
)

__version__ = "0.1.0"
