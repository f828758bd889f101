# operation symbols (ASCII tokens used in files, formulas and tables)
MEET = "/\\"
JOIN = "\\/"
FUSION = "*"
LEFT_RESIDUAL = "\\"
RIGHT_RESIDUAL = "/"
UNIT = "1"
ZERO = "0"
TOP = "T"
BOTTOM = "B"
BOX = "[]"
DIAMOND = "<>"

# formula-only connectives, expanded away before evaluation
NEG_BOTTOM = "~"
NEG_ZERO = "!"
ARROW = "->"

LATTICE_SYMBOLS = ((MEET, 2), (JOIN, 2), (TOP, 0), (BOTTOM, 0))
FL_SYMBOLS = (
    (MEET, 2),
    (JOIN, 2),
    (FUSION, 2),
    (LEFT_RESIDUAL, 2),
    (RIGHT_RESIDUAL, 2),
    (UNIT, 0),
    (ZERO, 0),
    (TOP, 0),
    (BOTTOM, 0),
)
MODAL_SYMBOLS = FL_SYMBOLS + ((BOX, 1), (DIAMOND, 1))

# distinguished scheme variables
SCHEME_P = "p"
SCHEME_Q = "q"
HOLE = "_"

# caps
DEFAULT_CONGRUENCE_CAP = 12
MAX_CONGRUENCE_CAP = 16
MAX_LATTICE_SIZE = 7
DEFAULT_FL_CAP = 6
DEFAULT_MODAL_CAP = 8
NAIVE_ORACLE_CAP = 4

DEFAULT_SEED = 20240517
DEFAULT_SAMPLE_NODES = 8
DEFAULT_RULE_SAMPLE = 24

CATALOG_ENV = "ALG_CATALOG"
SEED_ENV = "ALG_SEED"
DEFAULT_CATALOG_DIR = "catalog"
MANIFEST_NAME = "manifest.json"
ALGEBRA_SUFFIX = ".alg"
