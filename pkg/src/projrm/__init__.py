"""Projective Reed-Muller codes, their subfield subcodes, trace bases and parameter tables."""

from .fields import FieldCtx, make_field, field_for
from .cyclo import CycSet, minimal_sets, order_lt, overline, conjugate, delta_classify, trace_poly
from .projgeom import Poly, SparsePoly, ProjPointSet, standard_representatives, evaluate, homogenize, evaluates_to_base
from .ideal import groebner_generators, quotient_basis, divide, s_polynomial, verify_buchberger, normal_form_closed
from .codes import (LinearCode, WeightEnumerator, subfield_subcode, trace_code, weight_enumerator,
                    macwilliams, min_distance, is_galois_invariant, gv_exceeds)
from .prm import (PrmSpec, prm_code, rm_affine_basis, classify_Ma, build_sets, build_B, build_D,
                  dim_primary, dim_dual, distance_lower_bound, subfield_subcode_general)

__version__ = "0.1.0"
