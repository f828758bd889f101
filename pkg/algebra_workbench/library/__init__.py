from .AlgebraClasses import AlgebraClass, check_membership, class_by_name
from .Catalog import Catalog, catalog_from_source, load_catalog, save_catalog
from .Congruences import Congruence, CongruenceLattice, all_congruences, congruence_generated, is_semisimple
from .Deduction import DeductiveFilter, FilterLattice, MatrixFamily, consequence
from .FiniteAlgebra import FiniteAlgebra, Signature, evaluate
from .Formula import Formula, print_formula
from .FormulaParser import parse
from .Glivenko import GlivenkoPair, glivenko_check, local_glivenko_check, lukinfty_ddt_countermodel
from .Principles import check_ddt, check_dual_il, check_il, check_lem, check_pcp, ddt_from_cil
from .SchemeFamilies import SchemeFamily, family_by_name
from .Search import canonical_form, enumerate_class, enumerate_lattices, is_isomorphic
from .Verdict import Status, Verdict, Witness

__all__ = [
    "extensions",
    "interfaces",
    "AlgebraClass",
    "AlgebraFile",
    "BitsetUtils",
    "Catalog",
    "Congruence",
    "CongruenceLattice",
    "DeductiveFilter",
    "FilterLattice",
    "FiniteAlgebra",
    "Formula",
    "GlivenkoPair",
    "MatrixFamily",
    "PartitionLib",
    "SchemeFamily",
    "Signature",
    "Status",
    "Verdict",
    "Witness",
    "all_congruences",
    "canonical_form",
    "catalog_from_source",
    "check_ddt",
    "check_dual_il",
    "check_il",
    "check_lem",
    "check_membership",
    "check_pcp",
    "class_by_name",
    "congruence_generated",
    "consequence",
    "ddt_from_cil",
    "enumerate_class",
    "enumerate_lattices",
    "evaluate",
    "family_by_name",
    "glivenko_check",
    "is_isomorphic",
    "is_semisimple",
    "load_catalog",
    "local_glivenko_check",
    "lukinfty_ddt_countermodel",
    "parse",
    "print_formula",
    "save_catalog",
]
