#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "scl/cubes.hpp"
#include "scl/scl_operad.hpp"

namespace scl {

/// Deliberate breakages of the implementation contract, used to show each suite can fail.
enum class Mutation {
    none,
    swap_operands,        // operad axioms: compose with the operands exchanged
    ignore_order,         // kappa: compose in every order, not only linear extensions
    flip_direction,       // ordering: compare against the reverse direction
    mismatched_alphabet,  // pi0: drop a knot label on the free-algebra side
    drop_closed_inputs,   // mu: nested side ignores the closed inputs of the inner operation
};
const char* to_string(Mutation m);
Mutation mutation_from_string(const std::string& s);

struct TrialConfig {
    std::uint64_t seed = 42;
    std::size_t trials = 100;
    std::size_t first_trial = 0;  // replay a single trial with first_trial = i, trials = 1
    std::size_t max_arity = 5;
    std::size_t dimension = 2;
    double tolerance = 1e-6;
    Mutation mutation = Mutation::none;

    /// Throws std::invalid_argument unless trials >= 1, max_arity >= 1 and dimension is 1 or 2.
    void validate() const;
};

struct Counterexample {
    std::uint64_t seed = 0;  // the suite seed; with `trial` it reproduces the inputs
    std::size_t trial = 0;
    std::string message;
    nlohmann::json inputs;
};

struct PropertyResult {
    std::string name;
    std::size_t checked = 0;
    std::size_t failed = 0;
    std::vector<Counterexample> failures;  // the first few

    bool pass() const { return failed == 0; }
};

struct CheckReport {
    std::string suite;
    std::vector<PropertyResult> properties;

    bool ok() const;
    /// One JSON object per property.
    std::vector<nlohmann::json> lines() const;
};

/// splitmix64 of seed + trial.
std::uint64_t trial_seed(std::uint64_t seed, std::size_t trial);

using Rng = std::mt19937_64;
/// Uniform integer in [lo, hi] computed from raw engine output, so streams are portable.
std::int64_t draw(Rng& rng, std::int64_t lo, std::int64_t hi);

/// Random valid configuration with coordinates on the 1/32 grid (scale and offset
/// denominators at most 64). Retries shrink the cubes; as a last resort the cubes are
/// equal vertical slices. In dimension 1 a lowerface configuration holds at most one cube;
/// larger requests throw std::invalid_argument.
CubeConfig gen_config(Rng& rng, std::size_t dim, std::size_t arity, CubeMode mode);
/// Random valid SCL operation with the given output color.
SclElement gen_scl(Rng& rng, std::size_t arity, Color output);

enum class OperadName { C1, C2, SCL };
const char* to_string(OperadName o);

CheckReport check_operad_axioms(const TrialConfig& cfg, OperadName operad);
/// ordering_permutations against the brute-force filter over all permutations.
CheckReport check_ordering(const TrialConfig& cfg);
CheckReport check_kappa_well_defined(const TrialConfig& cfg);
/// Free-algebra models, components of free cube algebras, and the link monoid.
CheckReport check_pi0_theorems(const TrialConfig& cfg);
/// phi_hat consistency, operadic compatibility and equivariance of mu.
CheckReport check_mu_action(const TrialConfig& cfg);

/// c1, c2, scl, ordering, kappa, pi0, mu.
const std::vector<std::string>& suite_names();
CheckReport run_suite(const std::string& name, const TrialConfig& cfg);

}  // namespace scl
