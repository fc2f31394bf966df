#include "strongmatch/errors.hpp"

namespace strongmatch {

const char* errc_name(errc c) {
    switch (c) {
        case errc::self_loop: return "SelfLoop";
        case errc::duplicate_edge: return "DuplicateEdge";
        case errc::vertex_out_of_range: return "VertexOutOfRange";
        case errc::empty_graph: return "EmptyGraph";
        case errc::unknown_edge_id: return "UnknownEdgeId";
        case errc::not_a_matching: return "NotAMatching";
        case errc::budget_exceeded: return "BudgetExceeded";
        case errc::isolated_edge_present: return "IsolatedEdgePresent";
        case errc::zero_denominator: return "ZeroDenominator";
        case errc::k_too_small: return "KTooSmall";
        case errc::zero_min_neighborhood: return "ZeroMinNeighborhood";
        case errc::invalid_model: return "InvalidModel";
        case errc::unbounded_moment: return "UnboundedMoment";
        case errc::no_feasible_gamma: return "NoFeasibleGamma";
        case errc::too_few_trials: return "TooFewTrials";
        case errc::invalid_parameter_order: return "InvalidParameterOrder";
        case errc::probability_overflow: return "ProbabilityOverflow";
        case errc::empty_vertex_set: return "EmptyVertexSet";
        case errc::epsilon_out_of_range: return "EpsilonOutOfRange";
        case errc::degenerate_input: return "DegenerateInput";
        case errc::infeasible_model: return "InfeasibleModel";
        case errc::bad_format: return "BadFormat";
        case errc::bad_config: return "BadConfig";
        case errc::invalid_argument: return "InvalidArgument";
    }
    return "UnknownError";
}

} // namespace strongmatch
