"""
Reduced words of permutations and pattern containment: isolated factors,
commutation classes, Elnitsky tilings and length-graded avoidance.
"""
from .errors import *  # noqa: F401,F403
from .permutation_core import (  # noqa: F401
    BarredPattern,
    Occurrence,
    Permutation,
    contains,
    contains_barred,
    length,
    occurrences,
    spreads,
    spreads_contained,
)
from .reduced_words import (  # noqa: F401
    CommutationClass,
    ReducedWord,
    braid_graph,
    commutation_classes,
    enumerate_reduced_words,
    evaluate,
    is_reduced,
)
from .pattern_redwords import (  # noqa: F401
    EmbeddingWitness,
    construct_isolated_embedding,
    find_isolated_embedding,
    is_value_stable,
)

__version__ = "0.1.0"
