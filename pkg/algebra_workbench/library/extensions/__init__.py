from .SimplePrinciples import SimpleILReport, check_simple_il
from .ZeroNegation import ZeroNegationReport, zero_negation_conditions

__all__ = ["SimpleILReport", "ZeroNegationReport", "check_simple_il", "zero_negation_conditions"]
