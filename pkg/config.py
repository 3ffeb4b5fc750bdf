# config.py - Constants shared by the verification pipeline and the CLI
import logging
import math

# Dilatation of the invariant torus block, (1 + sqrt(5)) / 2
GOLDEN_RATIO = (1 + math.sqrt(5)) / 2

# Absolute tolerance when comparing a computed dilatation with GOLDEN_RATIO
DILATATION_TOLERANCE = 1e-12

# Power iteration is only used for blocks larger than 2x2
POWER_ITERATION_MAX_STEPS = 10_000

# Default range for `scan`
DEFAULT_SCAN_FROM = 3
DEFAULT_SCAN_TO = 25

# Exit code contract of the CLI
EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2

# Minimum fuzzywuzzy score before a "did you mean" hint is shown
FUZZY_SUGGESTION_THRESHOLD = 60

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


def configure_logging(verbosity=0):
    """
    Route log records to standard error.

    Parameters:
    - verbosity: 0 for warnings only, 1 for INFO, 2 or more for DEBUG
    """
    if verbosity >= 2:
        level = logging.DEBUG
    elif verbosity == 1:
        level = logging.INFO
    else:
        level = logging.WARNING

    # force=True replaces handlers left by an earlier call
    logging.basicConfig(level=level, format=LOG_FORMAT, force=True)
