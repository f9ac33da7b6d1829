"""Special conjugacy classes of finite-order elements and cyclic subgroups of SU(n)."""

__version__ = "0.1.0"

from .counting import (CountReport, count_all_enumeration, count_special_enumeration,
                       count_special_exact_order, count_special_formula, count_special_pq,
                       count_special_prime, cross_check)
from .errors import (ConsistencyError, DomainError, ResourceLimitError,
                     UnsupportedHypothesisError, ValidationError)
from .numtheory import (Residue, binomial, catalan, catalan_congruence, divisors, euler_phi,
                        is_prime, mobius, wilson_check)
from .orbits import (OrbitClass, SpcgReport, act, congruence_pq, count_subgroup_classes,
                     count_subgroup_classes_burnside, orbit_of, spcg_closed_form_pp,
                     spcg_closed_form_pq, subgroup_class_representatives,
                     verify_distinct_generators)
from .series import SeriesPoly, coefficient, expand_G, geometric_pow
from .spectra import (ExponentTuple, Spectrum, enumerate_spectra, from_exponent_tuple,
                      is_center, is_special_subgroup_generator, spectrum_order,
                      to_exponent_tuple)
