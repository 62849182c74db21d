import os

from dotenv import load_dotenv

load_dotenv()

# Environment configuration
ENVIRONMENT = os.getenv("ENVIRONMENT", "production")
DEBUG = ENVIRONMENT == "development"
LOG_LEVEL = os.getenv("LOG_LEVEL", "DEBUG" if DEBUG else "WARNING")

APP_NAME = "groupcover"
APP_VERSION = "0.1.0"

# Group construction
CLOSURE_CAP = int(os.getenv("CLOSURE_CAP", 10**6))
TABLE_ORDER_CAP = int(os.getenv("TABLE_ORDER_CAP", 5040))
SYMMETRIC_MAX_DEGREE = 8
ASSOCIATIVITY_FULL_CHECK_MAX_ORDER = int(os.getenv("ASSOCIATIVITY_FULL_CHECK_MAX_ORDER", 256))
ASSOCIATIVITY_SAMPLE_FACTOR = int(os.getenv("ASSOCIATIVITY_SAMPLE_FACTOR", 10))

# Exact counting
BRUTEFORCE_CAP = int(os.getenv("BRUTEFORCE_CAP", 10**7))
INTEGER_BACKEND = os.getenv("INTEGER_BACKEND", "exact")  # "exact" or "fixed"
ALLOWED_INTEGER_BACKENDS = {"exact", "fixed"}

# Random walks
PROBABILITY_BACKEND = os.getenv("PROBABILITY_BACKEND", "rational")  # "rational" or "float"
ALLOWED_PROBABILITY_BACKENDS = {"rational", "float"}
DEFAULT_MAX_N = int(os.getenv("DEFAULT_MAX_N", 1000))
DEFAULT_TOL = float(os.getenv("DEFAULT_TOL", 1e-3))
FLOAT_SUM_TOLERANCE = 1e-12
TV_SIGNIFICANT_DIGITS = 12

# Sweeps
RANDOM_SEED = int(os.getenv("RANDOM_SEED", 0))
SWEEP_FAMILIES_PER_GROUP = int(os.getenv("SWEEP_FAMILIES_PER_GROUP", 100))
SWEEP_BRUTEFORCE_CAP = int(os.getenv("SWEEP_BRUTEFORCE_CAP", 10**5))
