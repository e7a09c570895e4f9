"""Hardy-type operators, mixed radial-angular norms, and sharp operator-norm
verification on Heisenberg groups.

The package is organized around six pieces: group geometry and gauge metric
(`geometry`), certified radial quadrature plus seeded Monte Carlo sampling
(`quadrature`), the four Hardy-type operators (`operators`), mixed
radial-angular norms and radialization (`mixed_norm`), sharp-constant
computation and convergence verification (`sharp_constants`), and a
reproducible command-line front end (`cli`).
"""

__version__ = "0.1.0"

from .geometry import (
    HeisPoint,
    HeisSpace,
    heis_space,
    group_mul,
    group_inv,
    dilate,
    koranyi_norm,
    heis_distance,
    ball_volume,
)
from .quadrature import (
    QuadratureSpec,
    RadialProfile,
    integrate_radial,
    mc_ball_sample,
    mc_sphere_sample,
)
from .operators import (
    OperatorKind,
    WeightFunction,
    power_weight,
    hardy,
    dual_hardy,
    weighted_hardy,
    weighted_cesaro,
)
from .mixed_norm import MixedExponents, SeparableFunction, mixed_norm_radial, radialize
from .sharp_constants import (
    SharpConstantQuery,
    theoretical_constant,
    extremal_ratio,
    convergence_table,
    upper_bound_probe,
)
