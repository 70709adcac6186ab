from .common import (
    BranchQueue,
    Context,
    DistanceNotExceeding,
    NotConnectedCore,
    Solution,
    alpha_constant_check,
    closure,
    contraction_rule,
    is_solution,
    p3_suitability,
    peel,
    reduce_distance,
    t_set,
)
from .lpc import (
    family_for,
    longest_path_contractibility,
    lpc_sp1p4,
    p4_suitability_p1p2p3,
    p4_suitability_p1p5,
    p4_suitability_p2p4,
    p5_suitability_p1p2p3,
    p5_suitability_p1p5,
    p5_suitability_p2p4,
    p6_suitability_p1p2p3,
    p6_suitability_p1p5,
    p6_suitability_p2p4,
    p7_suitability_p1p2p3,
    suitability,
)
from .trace import Tracer, tracing
