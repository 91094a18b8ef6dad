"""Curves on punctured surfaces and finite pieces of their curve graphs."""

from .surface import (CurveClass, CurveError, FreeAutomorphism, SurfaceModel,
                      automorphism, braid_generators, canonical_class,
                      default_generators, default_seeds, identity_automorphism,
                      is_peripheral, load_generators, peripheral_classes,
                      surface_model, validate_automorphism)
from .intersection import (geometric_intersection, intersection_matrix,
                           is_simple, self_intersection)
