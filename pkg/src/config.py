"""
Size caps, search budgets and numeric precision shared by all packages.

Functions take these as keyword defaults so callers (the CLI, tests) can
lower them; RunConfig refuses overrides above these maxima.
"""

# Largest group any constructor will tabulate
MAX_GROUP_ORDER = 4096

# Normal-subgroup enumeration (radical, socle) works on unions of classes
NORMAL_SUBGROUP_ORDER_LIMIT = 512

# Associativity is checked on every triple up to this order, sampled above
EXHAUSTIVE_ASSOCIATIVITY_LIMIT = 512
RANDOM_TRIPLE_SAMPLES = 100_000
RANDOM_PAIR_SAMPLES = 100_000
RANDOM_SEED = 0

# Automorphism engine
AUT_ORDER_LIMIT = 2048
AUT_FULL_LIST_LIMIT = 256
AUT_ELEMENT_LIST_CAP = 200_000
CENTRAL_HOM_LIMIT = 1 << 16
# Counting only (no permutations built) tolerates many more homomorphisms
CENTRAL_COUNT_LIMIT = 1 << 20

# Power-commutator presentations
PRESENTATION_ORDER_LIMIT = 4096
COLLECTION_STEP_BUDGET = 10 ** 7
GN_MAX_INDEX = 3
GN_DEFAULT_MAX_INDEX = 2

# Standard tuples are enumerated one by one
STANDARD_TUPLE_LIMIT = 250_000

# Number theory and bounds
SIEVE_LIMIT = 10 ** 7
EULER_PHI_LIMIT = 10 ** 9
RS_CONSTANT = "1.01624"
MP_DPS = 50
