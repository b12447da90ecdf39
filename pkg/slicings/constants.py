# Largest total dimension handed to the exhaustive subrepresentation scan
DEFAULT_DIM_BOUND = 8
SUITE_DIM_BOUND = 6

MAX_QUIVER_VERTICES = 5
SUBSET_SCAN_MAX_VERTICES = 4

GRID_DENOMINATOR = 8
DEFAULT_MAX_CLASSES = 5

DEFAULT_SEED = 0
DEFAULT_SAMPLES = 200
