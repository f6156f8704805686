#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "kseg/core.hpp"

namespace kseg {

// Uniform coefficients in [-1, 1].
Element random_element(Signature sig, std::mt19937_64& rng);

struct CheckResult {
    std::string label;
    bool passed;
};

struct VerifyOptions {
    int n_max = 5;
    std::uint64_t seed = 0;
    int samples = 20; // random elements per signature and property
};

// Self-verification: runs the algebraic invariants of every module over
// random elements of all signatures with n <= n_max. Deterministic for a
// fixed seed.
std::vector<CheckResult> run_verification(const VerifyOptions& options);

} // namespace kseg
