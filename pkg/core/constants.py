"""
Analyzer Constants
Numeric caps, defaults and tolerances shared by every analysis package
"""

# Largest dimension accepted for an exact truth table (2^30 signs)
MAX_EXACT_N = 30

# Quadratic-time oracles (direct autocorrelation, restriction scans) stop here
MAX_DIRECT_ORACLE_N = 12

# Full complex transform over Z/2^n
MAX_ZP_N = 20

# Exhaustive codeword enumeration over 2^k kernel vectors
MAX_KERNEL_DIM = 24

# Default elementary-operation cap for a single scan
DEFAULT_BUDGET = 2 ** 28

# Monte Carlo defaults
DEFAULT_SEED = 0
DEFAULT_MC_SAMPLES = 100_000
MC_BATCH_SIZE = 4096
CI_LEVEL = 0.99

# Exact injective enumeration is chosen automatically below this many injections
EXACT_INJECTION_CUTOFF = 10 ** 7

# Floating point tolerance for checks on real-valued quantities
FLOAT_TOLERANCE = 1e-10

# Default rho grid for stable-influence profiles
DEFAULT_RHO_GRID = (0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9)

# Default delta for the stable-influence relation check
DEFAULT_STABLE_DELTA = 0.5

# Largest Gowers order reported by the comparison run
MAX_REPORTED_GOWERS_ORDER = 4
