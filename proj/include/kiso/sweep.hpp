#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kiso/graph.hpp"
#include "json.hpp"

namespace kiso {

// Named check suites of the exhaustive sweep.
enum class Check {
    oracle,      // DP against brute force, DP root independence
    bounds,      // every applicable bound, the regime table, small relations
    f_equality,  // k = 1: (n+l)/4 equality <-> recognize_F, constructive set
    twin,        // k = 1: (n-l+2s)/4 equality <-> stripped tree in F
    tk_equality, // k >= 2: (n+l)/(2k+1) equality <-> K_{1,k} or recognize_Tk
    corollaries, // k >= 2: small-order and diameter consequences
    normalizers, // leaf-free and degree-2-support-free minimum sets
    corona_char, // (n-l)/2 equality <-> C4/corona structure; not part of "all"
};
std::string_view to_string(Check c);

// Comma-separated names ("oracle,bounds", or "all").
std::vector<Check> parse_checks(std::string_view text);

struct SweepConfig {
    int min_n = 1;
    int max_n = 8;
    std::vector<int> k_list{1};
    std::vector<Check> checks;
    int jobs = 1;
    std::uint64_t seed = 0;
    // Brute force runs for n <= 12, or n <= 16 with force_bruteforce.
    bool force_bruteforce = false;
};

// Throws PreconditionError on an empty k list, k < 1, orders outside 1..20
// or a forced brute force above n = 16.
void validate(const SweepConfig& cfg);

struct Violation {
    std::string check;
    int k = 0;
    std::string message;
};

struct SweepRecord {
    std::string tree_code;
    int n = 0, leaves = 0, supports = 0, diam = 0;
    nlohmann::json results = nlohmann::json::array();
    std::vector<Violation> violations;
};

// All enabled checks on one tree. Deterministic for a given tree and config.
SweepRecord sweep_tree(const Tree& t, const SweepConfig& cfg);

struct SweepResult {
    std::vector<SweepRecord> records; // sorted by tree_code
    int violation_count = 0;
};

// One record per free tree of each order in [min_n, max_n].
SweepResult run_sweep(const SweepConfig& cfg);

nlohmann::json to_json(const SweepRecord& r);

} // namespace kiso
