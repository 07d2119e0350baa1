DEFAULT_MINSUP = 2
DEFAULT_MINCONF = '1'
DEFAULT_MAX_ATOMS = 2
DEFAULT_JOBS = 1
DEFAULT_GROUPED_MINSUP = 1

# above this many atoms the search space grows quickly
MAX_ATOMS_WARNING_THRESHOLD = 3
