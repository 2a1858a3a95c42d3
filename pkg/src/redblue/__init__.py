"""Certifying partition of 2-colored cliques into a red and a blue clique.

The core guarantee: `partition` either splits the vertices of a
2-colored complete graph into a red clique and a blue clique, or hands
back a small certificate (a monochromatic induced 4-cycle or a K5*)
that any reader can verify edge by edge.  On top of that sit split
graph recognition, (1-1)-transversals of 2-interval and 2-subtree
families, and a triple coloring showing the guarantee stops at pairs.
"""

from .core import (
    CliquePartition,
    EdgeColor,
    TwoColoredClique,
    build_clique,
    decode_2cg,
    encode_2cg,
    validate_partition,
)
from .obstruct import (
    C4Certificate,
    K5StarCertificate,
    ObstructionReport,
    find_k5_star,
    find_mono_induced_c4,
    scan_obstructions,
    validate_certificate,
)
from .oracle import (
    GeneratorWeights,
    SplitMix64,
    brute_force_partition,
    exhaustive_check,
    generate_random,
)
from .partition import PartitionOutcome, insert_vertex, partition
from .splitgraph import (
    SimpleGraph,
    SplitOutcome,
    SplitWitness,
    recognize_split,
    validate_split,
    validate_split_witness,
)
from .transversal import (
    HostTree,
    InvariantViolation,
    SubtreePair,
    Transversal,
    TwoInterval,
    pierce,
    pierce_subtrees,
    verify_subtree_transversal,
    verify_transversal,
)
from .triples import TripleColoring, example1

__version__ = "0.1.0"

__all__ = [
    "CliquePartition",
    "EdgeColor",
    "TwoColoredClique",
    "build_clique",
    "decode_2cg",
    "encode_2cg",
    "validate_partition",
    "C4Certificate",
    "K5StarCertificate",
    "ObstructionReport",
    "find_k5_star",
    "find_mono_induced_c4",
    "scan_obstructions",
    "validate_certificate",
    "GeneratorWeights",
    "SplitMix64",
    "brute_force_partition",
    "exhaustive_check",
    "generate_random",
    "PartitionOutcome",
    "insert_vertex",
    "partition",
    "SimpleGraph",
    "SplitOutcome",
    "SplitWitness",
    "recognize_split",
    "validate_split",
    "validate_split_witness",
    "HostTree",
    "InvariantViolation",
    "SubtreePair",
    "Transversal",
    "TwoInterval",
    "pierce",
    "pierce_subtrees",
    "verify_subtree_transversal",
    "verify_transversal",
    "TripleColoring",
    "example1",
    "__version__",
]
