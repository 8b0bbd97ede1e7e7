"""
Constants and tolerances shared by every check.
"""
from __future__ import annotations

import os

from dotenv import load_dotenv

load_dotenv()

# -------------------------
# TOLERANCES
# -------------------------
IDENTITY_RTOL = 1e-12  # algebraic identities, relative
INEQUALITY_SLACK = 1e-12  # inequality checks may undershoot by this much
SUPERSOLUTION_TOL = 1e-12
REMAINDER_SLACK = 1e-9

# -------------------------
# QUADRATURE
# -------------------------
QUADRATURE_TOL = 1e-10
QUADRATURE_GUARD = 8  # extra points beyond twice the bandwidth
RICHARDSON_TOL = 1e-6
MAX_DOUBLINGS = 6
MAX_GRID_POINTS = 2 ** 22  # doubling stops before a grid exceeds this
FOURIER_GRID = 4096  # default samples per axis for Fourier rearrangement

# -------------------------
# SERIES
# -------------------------
REMAINDER_TERMS = 40  # b_k truncation for the improved Hardy remainder
LIMIT_HEAD_TERMS = 10_000  # explicit terms before the zeta tail
LIMIT_TAIL_TERMS = 60

# -------------------------
# EIGENSOLVERS
# -------------------------
DENSE_EIGEN_POINTS = 6000  # largest box handed to a dense generalised eigensolve

# -------------------------
# SEARCH
# -------------------------
DEFAULT_SEED = int(os.environ.get("LATTICEINEQ_SEED", "0"))
SEARCH_BOX = 3  # supports live in [-SEARCH_BOX, SEARCH_BOX]^2
SEARCH_SUPPORT_SIZE = 5
SEARCH_SUCCESS_MARGIN = 1e-6

# -------------------------
# ISOPERIMETRY
# -------------------------
BRUTE_ISO_CAP = 8
PSI_SCAN_LIMIT = 2000  # desk-scale i_max for the psi scan in the CLI suite
PREFIX_SCAN_LIMIT = 500

# -------------------------
# OUTPUT
# -------------------------
OUTPUT_THRESHOLD = 1e-12  # coefficients below this are dropped
FLOAT_FORMAT = "%.12e"

# -------------------------
# FILES
# -------------------------
LOG_DIR = os.environ.get("LATTICEINEQ_LOG_DIR", "logs")
RUN_LOG = os.path.join(LOG_DIR, "runs.jsonl")
ERROR_LOG = os.path.join(LOG_DIR, "errors.jsonl")

# -------------------------
# ENVIRONMENT
# -------------------------
# LATTICEINEQ_LOG_DIR   - where run and error logs are appended (default: logs)
# LATTICEINEQ_LOG_LEVEL - logging level for the CLI (default: INFO)
# LATTICEINEQ_SEED      - default seed when --seed is not given (default: 0)
LOG_LEVEL = os.environ.get("LATTICEINEQ_LOG_LEVEL", "INFO")
