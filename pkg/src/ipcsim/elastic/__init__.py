"""Per-element constitutive energies with gradients and PSD local Hessians."""
from .bending import hinge_angle, hinge_bending, hinge_bending_value, hinge_rest
from .common import ElementEnergy, project_psd
from .membrane import (MembraneDeformation, cubic_sl, cubic_sl_eigenvalues, fbw_membrane,
                       membrane_deformation, membrane_values, principal_stretches, shear_energy)
from .neohookean import stable_neo_hookean, stable_neo_hookean_value, tet_deformation
from .orthogonality import abd_orthogonality, abd_orthogonality_value

__all__ = [
    "ElementEnergy", "project_psd", "MembraneDeformation", "membrane_deformation", "cubic_sl",
    "cubic_sl_eigenvalues", "fbw_membrane", "shear_energy", "principal_stretches",
    "stable_neo_hookean", "tet_deformation", "hinge_bending", "hinge_rest", "abd_orthogonality",
    "stable_neo_hookean_value", "membrane_values", "hinge_angle", "hinge_bending_value",
    "abd_orthogonality_value",
]
