#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace ffint::verify {

/// One theorem check at one parameter point.
struct Record {
    std::string theorem;
    std::uint64_t q = 0;  // field size, or sequence length for Skolem records
    nlohmann::json params = nlohmann::json::object();
    bool condition = false;      // the theorem-side predicate / prediction applied
    bool oracle_agrees = false;  // brute force confirmed the claim
    nlohmann::json census = nlohmann::json::object();
};

nlohmann::json to_json(const Record& r);

struct SweepResult {
    std::string theorem;
    std::vector<Record> records;
    nlohmann::json notes = nlohmann::json::object();

    std::size_t failures() const;
    std::size_t passes() const { return records.size() - failures(); }
};

struct Options {
    std::uint64_t q_max = 0;  // 0 picks the tag default
    std::uint64_t n_max = 0;
    unsigned jobs = 1;
};

std::vector<std::string> known_tags();
bool is_known_tag(const std::string& tag);

/// Runs the sweep registered under the tag; throws InvalidArgument for
/// unknown tags.
SweepResult run_sweep(const std::string& tag, const Options& opt = {});

// Individual sweeps (bounds explicit; the acceptance suite pins them).
SweepResult monomial_involution_sweep(std::uint64_t q_max, std::uint64_t iff_q_max, unsigned jobs);
SweepResult monomial_samelength_sweep(std::uint64_t q_max, unsigned jobs);
SweepResult dickson_involution_sweep(std::uint64_t q_max, unsigned jobs);
SweepResult mobius_census_sweep(std::uint64_t q_min, std::uint64_t q_max, unsigned jobs);
SweepResult mobius_trace0_sweep(std::uint64_t q_min, std::uint64_t q_max, unsigned jobs);
SweepResult redei_inverse_sweep(std::uint64_t q_max, unsigned jobs);
SweepResult redei_nj_sweep(std::uint64_t q_max, unsigned jobs);
SweepResult redei_selfinv_sweep(std::uint64_t q_max, unsigned jobs);
SweepResult redei_cycle_length_sweep(std::uint64_t q_max, unsigned jobs);
SweepResult redei_samelength_sweep(std::uint64_t q_max, unsigned jobs);
SweepResult skolem_selfinv_sweep(std::uint64_t n_max, std::uint64_t k_extended_n_max, unsigned jobs);
SweepResult skolem_generalized_sweep(std::uint64_t jn_max, unsigned jobs);
SweepResult skolem_existence_sweep(std::uint64_t n_max, std::uint64_t gen_jn_max, unsigned jobs);
SweepResult skolem_prescribed_sweep(std::size_t spec_count, std::uint64_t total_max,
                                    std::uint32_t seed, unsigned jobs);
SweepResult field_layer_sweep(std::uint64_t q_max, unsigned jobs);

/// Prime powers p^m in [lo, hi], ascending; odd_only drops characteristic 2.
struct PrimePower {
    std::uint64_t p;
    unsigned m;
    std::uint64_t q;
};
std::vector<PrimePower> prime_powers(std::uint64_t lo, std::uint64_t hi, bool odd_only = false);

}  // namespace ffint::verify
