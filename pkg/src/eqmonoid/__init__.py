"""Submonoids of (N0 ∪ {inf})^k given by linear equations and congruences.

The main entry points are re-exported here; see the submodules for the
lower-level pieces (exact integer linear algebra, exact LP, box oracles).
"""
from .extvec import INF, format_vector, inf_scale, inf_support, parse_vector, star, support
from .eqsystem import EqSystem, infinite_support_patterns, intersect, member, slack_embed, subsystem_for_support
from .fullaffine import (
    FullAffineMonoid,
    LatticeBasis,
    fas_system,
    minimal_orthogonal_family,
    orthogonal_has_positive,
    positive_kernel_trivial,
)
from .supportsystem import SupportSystem, derived_ss, eq_to_ss, hide, member_MS, ss_to_eq, validate
from .realization import describe_plan, evaluate_plan, plan_congruence, plan_equation, plan_system
from .oracle import Box, check_monoid_axioms, enumerate_box, equal_on_box, fullness_check, minimal_members
from .fixtures import builtin

__version__ = "0.1.0"

__all__ = [
    "INF", "format_vector", "inf_scale", "inf_support", "parse_vector", "star", "support",
    "EqSystem", "infinite_support_patterns", "intersect", "member", "slack_embed", "subsystem_for_support",
    "FullAffineMonoid", "LatticeBasis", "fas_system", "minimal_orthogonal_family",
    "orthogonal_has_positive", "positive_kernel_trivial",
    "SupportSystem", "derived_ss", "eq_to_ss", "hide", "member_MS", "ss_to_eq", "validate",
    "describe_plan", "evaluate_plan", "plan_congruence", "plan_equation", "plan_system",
    "Box", "check_monoid_axioms", "enumerate_box", "equal_on_box", "fullness_check", "minimal_members",
    "builtin",
]
