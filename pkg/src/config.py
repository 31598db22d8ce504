"""Configuration for the CWS code construction toolkit."""

from pathlib import Path

# Graph limits
MAX_NODES = 16
CANONICAL_MAX_NODES = 10  # brute force over n! relabelings
ENUMERATION_MAX_NODES = 7  # full sweep of 2^C(n,2) labeled graphs
LC_ORBIT_MAX_NODES = 12

# Spectral machinery
JACOBI_TOLERANCE = 1e-12
JACOBI_MAX_SWEEPS = 100
FIEDLER_SIGN_TOLERANCE = 1e-9

# Clique search
EXACT_MAX_NODES = 4096
MATERIALIZE_MAX_NODES = 8192
PLS_ATTEMPTS = 100
PLS_MAX_SELECTIONS = 1000
PLS_PENALTY_DECAY = 10  # selections between penalty decrements

# Genetic algorithm
GA_POPULATION = 20
GA_GENERATIONS = 100
GA_CROSSOVER_PROB = 0.9
GA_MUTATION_PROB = 0.1
GA_TOURNAMENT = 10
GA_ELITISM = 2
GA_UNIFORM_EXCHANGE_PROB = 0.5

# Short production runs
GA_PRODUCTION_GENERATIONS = 50
GA_PRODUCTION_POPULATION = 10
GA_PRODUCTION_TOURNAMENT = 5

# Linear programming bound
LP_MAX_N = 32
LP_BISECTION_BITS = 20

# Statevector oracle
ORACLE_MAX_QUBITS = 12

# Paths
BASE_DIR = Path(__file__).parent.parent
DATA_DIR = BASE_DIR / "data"
REFERENCE_BOUNDS_FILE = DATA_DIR / "reference_bounds.csv"
RESULT_CACHE_FILE = DATA_DIR / "cache.jsonl"
OUTPUT_DIR = DATA_DIR / "output"
