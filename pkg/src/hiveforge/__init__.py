"""hiveforge: exact SU(n) multiplicities via O-blade pictographs.

Littlewood-Richardson coefficients and Kostka numbers by lattice-point
enumeration, stretching polynomials and Horn volume values by exact
interpolation, Weyl characters as an independent cross-check, and the
R / R-hat character combinations of the simple Lie groups.
"""

from .cache import TOOL_VERSION as __version__  # single source of the version
from .errors import BudgetError, DomainError, InconsistencyError
from .oblade import (
    BranchingTriple,
    ObladeFilling,
    ObladeShape,
    build_shape,
    count_fillings,
    enumerate_fillings,
    honeycomb_dual,
    is_degenerate,
    kostant_vectors,
)
from .rootsys import (
    LieType,
    RootSystem,
    conjugate,
    dimension,
    dominant_weights_below,
    is_in_root_lattice,
    root_system,
    weyl_orbit,
    weyl_vector,
)
from .rpoly import (
    CharacterCombo,
    KappaSets,
    g2_combo,
    kappa_sets,
    local_average_volume,
    r7_combo,
    r_coefficients,
    series_R,
    verify_r7,
)
from .stretch import StretchPolynomial, VolumeValue, evaluate, horn_volume, stretch_polynomial
from .tensor import kostka, kostka_sequence, tensor_decompose
from .characters import (
    SymmetricPolySpec,
    decompose_product,
    expand_basis,
    verify_alternative_R5_forms,
    weyl_character,
)
from .render import RenderSpec, render, render_honeycomb, render_oblade
