"""Even-degree characters in principal blocks of symmetric and alternating groups."""
from .blocks import (
    AlternatingConstituent,
    BlockFrame,
    CharacterRecord,
    alternating_constituent,
    block_frame,
    block_members,
    degree,
    enumerate_block,
    in_principal_block,
    legendre_valuation,
)
from .oracle import brute_force_block, cross_validate, enumerate_partitions, partition_count
from .partitions import (
    Cell,
    DomainError,
    HookCensus,
    Partition,
    beta_set,
    conjugate,
    e_core,
    e_quotient,
    from_beta_set,
    hook_census,
    hook_length,
    hook_lengths,
    parse_partition,
    remove_e_hook,
)
from .rangecheck import RangeReport, check_range
from .tower import (
    CoreTower,
    DegreeValuation,
    QExpansion,
    check_k_plus_one_alpha,
    core_tower,
    last_layer_count,
    macdonald_valuation,
    partition_from_tower,
    q_expansion,
)
from .witness import (
    ArithmeticFrame,
    CertificationError,
    WitnessCase,
    WitnessCertificate,
    arithmetic_frame,
    certify,
    classify,
    construct,
    witness,
)

__version__ = "0.1.0"
