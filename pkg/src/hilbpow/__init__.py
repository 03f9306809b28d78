"""Power structures over coefficient rings and Hilbert series of points on
smooth varieties and orbifolds."""

from .catalog import (AbelianQuotient, Explicit, Smooth, global_smooth_series,
                      kapranov_zeta, punctual_series)
from .errors import (HilbPowError, NonUnitError, ParseError, RingMismatchError,
                     SpecError, TruncationError, UnsupportedModelError)
from .nested import (NestedContext, nested_global_smooth, nested_integrate,
                     nested_punctual_curve)
from .oracles import (SemigroupModel, abelian_quotient_semigroup, cell_class_sum,
                      count_monomial_ideals, euler_punctual_series, smooth_semigroup)
from .orbifold import OrbifoldSpec, Stratum, integrate, toric_euler_global, validate
from .power import PowerDecomposition, decompose, power, recompose, sigma_series
from .rings import Ring, RingElement, parse_element, specialize
from .series import MultiSeries

__version__ = "0.1.0"
