"""Pure constants shared across the pipeline."""

from fractions import Fraction

# ---------------------------------------------------------------------------
# Spacetime
# ---------------------------------------------------------------------------
SPACETIME_DIM = 4
SPACETIME_INDICES = (1, 2, 3, 4)
# sigma^{1j} for j in 2..4 spans the self-dual 2-forms
SELF_DUAL_INDICES = (2, 3, 4)
SPINOR_INDICES = (1, 2, 3, 4)
VOLUME = (1, 2, 3, 4)

# ---------------------------------------------------------------------------
# Diagrams and local functionals
# ---------------------------------------------------------------------------
DIAGRAM_LABELS = ("I", "II", "III", "IV", "V")

LIE_SLOT_ADJOINT = "C_adj"
LIE_SLOT_MATTER = "C_matter"
LIE_SLOT_PURE = "pure"
LIE_SLOTS = frozenset({LIE_SLOT_ADJOINT, LIE_SLOT_MATTER, LIE_SLOT_PURE})

# Geometric basis of local functionals
FF = ("FF",)
FB = ("FB",)
BB = ("BB",)
DADA = ("dAdA",)
GEOMETRIC_KEYS = (FF, FB, BB, DADA)

# Raw marker families
RAW_J = "J"   # integral of d_i d_j A_a times A_b
RAW_K = "K"   # integral of d_i A_a times B_b
RAW_M = "M"   # integral of B_a times B_b

# Wick orders kept beyond the leading one
DEFAULT_WICK_ORDER = 3

# A-A line of the wheel: 4t (d*d*_+ x 1)K = -1/2 t d_p d_q k P^{pq}_AA
AA_LINE_FACTOR = Fraction(-1, 2)
# "laplacian" keeps the delta^{pq} summand of P_AA, "exact" the other
AA_PARTS = ("full", "laplacian", "exact")

# ---------------------------------------------------------------------------
# Cohomology / beta
# ---------------------------------------------------------------------------
FRAMINGS = ("action", "ff")
DADA_TO_FF = Fraction(2)

# ---------------------------------------------------------------------------
# Numeric oracles
# ---------------------------------------------------------------------------
DEFAULT_EPS_GRID = (1e-3, 1e-4, 1e-5, 1e-6, 1e-7)
WHEEL_EPS_GRID = (1e-5, 1e-6, 1e-7, 1e-8, 1e-9)
MAX_CONDITION_NUMBER = 1e10
WHEEL_TOLERANCE = 1e-2
MAX_WHEEL_VERTICES = 5

# ---------------------------------------------------------------------------
# Built-ins and reports
# ---------------------------------------------------------------------------
BUILTIN_SU_RANGE = range(2, 6)
BUILTIN_REPS = ("adjoint", "fund+conj", "fund-real", "trivial", "zero")
SCHEMA_VERSION = "1.0"
