"""Exact and Monte Carlo tools for clairvoyant-demon problems.

Three dependent-percolation models share this package: scheduling two random
walks so they never collide, thinning two 0/1 words so they never agree on a
1, and embedding a word into a random environment with bounded gaps.  The
embedding model carries the exact machinery (gap-sequence counts, a linear
recursion for the alternating word, moment diagnostics); the others get
decision procedures and seeded simulation.
"""

from .compatibility import (
    DeletionWitness,
    MajorityCertificate,
    compat_oracle,
    compatible,
    compatible_prefix,
    majority_certificate,
    psi_mc,
    validate_deletion,
)
from .embedding import (
    CharRoots,
    EmbeddingWitness,
    MomentReport,
    RecursionParams,
    ScanReport,
    alternating_reference,
    char_roots,
    embed_count,
    embed_decide,
    embed_prob_exact,
    embed_prob_mc,
    embed_survival_mc,
    extremal_scan,
    mean_embeddings,
    moment_report,
    recursion_params,
    second_moment_ratio,
    validate_embedding,
    vn_recursion,
)
from .environment import (
    ColumnEnvironment,
    FiniteDistribution,
    JointPmf,
    KwiseReport,
    KwiseViolation,
    column_percolation_mc,
    crosses_horizontally,
    kwise_test,
    product_pmf,
    sample_environment,
)
from .errors import BudgetError, PropertyViolation
from .lattice import (
    DIRECTED_SITE_THRESHOLD,
    AbScanReport,
    BlockGrid,
    Embedding2DWitness,
    Field2D,
    LatticeKind,
    Visibility,
    ab_scan,
    block_good_mc,
    block_good_prob,
    block_grid,
    block_percolation,
    block_relation_targets,
    embed_word_2d,
    field_from_text,
    field_to_text,
    sample_field,
    validate_embedding_2d,
    visible_word,
)
from .rng import RngSpec
from .scheduling import (
    CouplingReport,
    PathWitness,
    ScheduleGrid,
    coupling_check,
    directed_survival,
    kwise_joint,
    reduce_value,
    sample_grid,
    survival_curve_mc,
    survival_depth,
    undirected_escape,
    undirected_mc,
    validate_path,
)
from .stats import Estimate
from .words import (
    GapEncoding,
    IntSequence,
    Word,
    alternating_word,
    bernoulli_word,
    constant_word,
    gap_encode,
    make_word,
    periodic_word,
    reduces_to,
    sample_uniform_sequence,
)

__version__ = "0.1.0"

__all__ = [
    "DIRECTED_SITE_THRESHOLD",
    "AbScanReport",
    "BlockGrid",
    "BudgetError",
    "CharRoots",
    "ColumnEnvironment",
    "CouplingReport",
    "DeletionWitness",
    "Embedding2DWitness",
    "EmbeddingWitness",
    "Estimate",
    "Field2D",
    "FiniteDistribution",
    "GapEncoding",
    "IntSequence",
    "JointPmf",
    "KwiseReport",
    "KwiseViolation",
    "LatticeKind",
    "MajorityCertificate",
    "MomentReport",
    "PathWitness",
    "PropertyViolation",
    "RecursionParams",
    "RngSpec",
    "ScanReport",
    "ScheduleGrid",
    "Visibility",
    "Word",
    "ab_scan",
    "alternating_reference",
    "alternating_word",
    "bernoulli_word",
    "block_good_mc",
    "block_good_prob",
    "block_grid",
    "block_percolation",
    "block_relation_targets",
    "char_roots",
    "column_percolation_mc",
    "compat_oracle",
    "compatible",
    "compatible_prefix",
    "constant_word",
    "coupling_check",
    "crosses_horizontally",
    "directed_survival",
    "embed_count",
    "embed_decide",
    "embed_prob_exact",
    "embed_prob_mc",
    "embed_survival_mc",
    "embed_word_2d",
    "extremal_scan",
    "field_from_text",
    "field_to_text",
    "gap_encode",
    "kwise_joint",
    "kwise_test",
    "majority_certificate",
    "make_word",
    "mean_embeddings",
    "moment_report",
    "periodic_word",
    "product_pmf",
    "psi_mc",
    "recursion_params",
    "reduce_value",
    "reduces_to",
    "sample_environment",
    "sample_field",
    "sample_grid",
    "sample_uniform_sequence",
    "second_moment_ratio",
    "survival_curve_mc",
    "survival_depth",
    "undirected_escape",
    "undirected_mc",
    "validate_deletion",
    "validate_embedding",
    "validate_embedding_2d",
    "validate_path",
    "visible_word",
    "vn_recursion",
]
