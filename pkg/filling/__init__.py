"""
Knot fillings of the magic manifold: classification, families, planning and
assembly.
"""

from .classify import (EXCEPTIONAL, ExceptionalPrimary, KnotKind, KnotType,
                       NotAKnotFilling, classify_pair, exceptional,
                       exceptional_label, identity_value, seed_class,
                       type_bc_parameter)
from .planner import (SEED_ORDER, FillingPlan, boundary_count,
                      candidate_plans, plan_filling)
from .families import (FamilyGenerator, Generator, UnknownFamily, evaluate,
                       family_extension, generator_for, predicted_total,
                       secondary_slope, type_a_generator)
from .assemble import FillingResult, execute_plan, fill, minimal_figure_eight

__all__ = [
    'EXCEPTIONAL', 'ExceptionalPrimary', 'KnotKind', 'KnotType',
    'NotAKnotFilling', 'classify_pair', 'exceptional', 'exceptional_label',
    'identity_value', 'seed_class', 'type_bc_parameter',
    'SEED_ORDER', 'FillingPlan', 'boundary_count', 'candidate_plans',
    'plan_filling', 'FamilyGenerator', 'Generator', 'UnknownFamily',
    'evaluate', 'family_extension', 'generator_for', 'predicted_total',
    'secondary_slope', 'type_a_generator', 'FillingResult', 'execute_plan',
    'fill', 'minimal_figure_eight',
]
