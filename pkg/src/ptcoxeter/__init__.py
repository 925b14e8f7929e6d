"""PT-symmetric deformations of A2 and G2 root systems and the associated
Calogero-Moser-Sutherland models with their exact eigensystems."""

__version__ = "0.1.0"

from .rootsys import RationalVector, RootSystem, apply_word, build_group, weyl_reflect  # noqa: E402
from .ptdeform import DeformedSystem, generate_deformed_system, standard_scheme, typeB_scheme  # noqa: E402
from .cmsmodel import CMSModel, assemble_potential  # noqa: E402
from .spectra import WaveFunctionSpec, energy_levels  # noqa: E402

__all__ = [
    "__version__",
    "RationalVector",
    "RootSystem",
    "apply_word",
    "build_group",
    "weyl_reflect",
    "DeformedSystem",
    "generate_deformed_system",
    "standard_scheme",
    "typeB_scheme",
    "CMSModel",
    "assemble_potential",
    "WaveFunctionSpec",
    "energy_levels",
]
