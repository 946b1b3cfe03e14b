"""
hollab - Reference Data Module
==============================

Single source of truth for the budgets, seeds, supported parameter grids and
provenance tags used across the library. Computation modules import from here
and never hard-code these numbers.
"""

import os
from enum import Enum
from typing import Dict, Tuple

from . import VERSION


# =============================================================================
# PROVENANCE FRAMEWORK
# =============================================================================

class Provenance(Enum):
    """Where an expected value or a checked statement comes from."""
    STATED = "STATED"      # Published result, transcribed and re-checked
    DERIVED = "DERIVED"    # Computed by an independent oracle
    TRIVIAL = "TRIVIAL"    # Follows from the definitions
    INVENTED = "INVENTED"  # Plumbing: no mathematical content


# =============================================================================
# 1. ENUMERATION BUDGETS
# =============================================================================
# Exhaustive checks run up to EXHAUSTIVE_BUDGET elements; beyond that they
# switch to SAMPLE_SIZE seeded samples.
EXHAUSTIVE_BUDGET = 10_000
SAMPLE_SIZE = 500

# GL(3, F_3) has 11232 elements and is still enumerated for invariance checks.
GL_ENUMERATION_BUDGET = 20_000

# Congruence subgroups are enumerated while p^{k(n^2+n)} stays below this.
GAMMA_ENUMERATION_BUDGET = 100_000

# Permutative category checks: whole hom-set when small, else seeded samples.
HOM_SET_ENUMERATION_LIMIT = 200
MORPHISM_SAMPLES = 100

# Unipotent search bound for the p-th root lemma.
ROOT_SEARCH_LIMIT = 10_000


# =============================================================================
# 2. DEGREES AND GRIDS
# =============================================================================
DEFAULT_DEGREE_CAP = 8
MAX_HOMOLOGY_DEGREE = 12

# Supported (p, r) for closed-form integer homology.
HOMOLOGY_TABLE_GRID: Dict[int, Tuple[int, ...]] = {
    2: (3, 4, 5),
    3: (1, 2, 3),
}

# Grid re-checked by the homology-tables suite: {(p, r): qmax}.
HOMOLOGY_CHECK_GRID: Dict[Tuple[int, int], int] = {
    (2, 3): 12,
    (2, 4): 12,
    (2, 5): 12,
    (3, 1): 10,
    (3, 2): 10,
    (3, 3): 10,
}

# Hilbert series are compared with rank formulas up to this degree.
HILBERT_DEGREE = 16

# Large prime used for rational ranks of finite complexes.
RATIONAL_RANK_PRIME = 10_007


# =============================================================================
# 3. SEEDS
# =============================================================================
DEFAULT_SEED = 20240611

SUITE_NAMES: Tuple[str, ...] = (
    "holomorph-basics",
    "resolution-acyclicity",
    "homology-tables",
    "cohomology-ranks",
    "ring-hilbert",
    "dickson-noncollapse",
    "congruence-tower",
    "bockstein",
    "wreath-permutative",
    "number-theory-lemmas",
)

SUITE_SEEDS: Dict[str, int] = {
    name: DEFAULT_SEED + index for index, name in enumerate(SUITE_NAMES)
}

REPORT_VERSION = VERSION


# =============================================================================
# 4. RUNTIME CONFIGURATION
# =============================================================================
THREADS_ENV_VAR = "HOLLAB_THREADS"
LOG_DIR_ENV_VAR = "HOLLAB_LOG_DIR"
DEFAULT_LOG_DIR = "./logs"


def get_thread_cap() -> int:
    """Worker count for parallel checks, from ``HOLLAB_THREADS``."""
    raw = os.environ.get(THREADS_ENV_VAR)
    if raw is None:
        return os.cpu_count() or 1
    try:
        value = int(raw)
    except ValueError:
        return os.cpu_count() or 1
    return max(1, value)


def get_log_dir() -> str:
    return os.environ.get(LOG_DIR_ENV_VAR, DEFAULT_LOG_DIR)


def get_suite_seed(name: str) -> int:
    return SUITE_SEEDS.get(name, DEFAULT_SEED)
