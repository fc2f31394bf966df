#pragma once

#include <stdexcept>
#include <string>

namespace strongmatch {

enum class errc {
    self_loop,
    duplicate_edge,
    vertex_out_of_range,
    empty_graph,
    unknown_edge_id,
    not_a_matching,
    budget_exceeded,
    isolated_edge_present,
    zero_denominator,
    k_too_small,
    zero_min_neighborhood,
    invalid_model,
    unbounded_moment,
    no_feasible_gamma,
    too_few_trials,
    invalid_parameter_order,
    probability_overflow,
    empty_vertex_set,
    epsilon_out_of_range,
    degenerate_input,
    infeasible_model,
    bad_format,
    bad_config,
    invalid_argument,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
    throw error(code, what);
}

} // namespace strongmatch
