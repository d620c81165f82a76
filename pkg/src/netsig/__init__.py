"""netsig: signature vectors and shock-model reliability of two-state networks."""

from .network import FailureSet, Network, NetworkFormatError, is_up, load_network, parse_network
from .partitions import (
    EXACT_ENUMERATION_LIMIT,
    EnumerationLimitError,
    OrderedPartition,
    count_ordered_partitions,
    enumerate_ordered_partitions,
    sample_ordered_partition,
)
from .reliability import (
    ComparisonReport,
    HazardCurve,
    ModelConfig,
    OrderingVerdict,
    RatioProfile,
    ReliabilityCurve,
    TP2Verdict,
    compare_networks,
    default_grid,
    hazard_curve,
    hazard_weights,
    ihr_ratio_profile,
    ihra_check,
    order_check,
    reliability_component_model,
    reliability_fatal,
    reliability_shock_model,
    tp2_check,
)
from .shocks import (
    BetaSequence,
    Binomial,
    Exponential,
    Fatal,
    FirstArrivalLaw,
    LinearHazard,
    OnePerShock,
    PiecewiseMVF,
    ShockSignature,
    Weibull,
    arrival_survival,
    beta_general,
    beta_sequence,
    beta_star,
    beta_star_incbeta,
    count_pmf,
    cumulative_damage_pmf,
    parse_damage,
    parse_law,
    st_signature,
    truncation_index,
)
from .signatures import (
    EstimatedSignature,
    SignatureVector,
    TailVector,
    classical_signature,
    death_number,
    fatal_signature,
    killing_shock_index,
    t_signature,
    t_signature_mc,
    tail,
)
from .simulate import SimConfig, mc_reliability_curve, sample_nhpp_arrivals, simulate_lifetime

__version__ = "0.1.0"
