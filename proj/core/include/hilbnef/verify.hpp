#pragma once

#include <cstdint>

#include "hilbnef/fundomain.hpp"
#include "hilbnef/hilbwalls.hpp"
#include "hilbnef/nefcone2.hpp"

namespace hilbnef::verify {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // counterexample payload on failure, summary otherwise
};

struct SuiteResult {
    std::string suite;
    std::vector<CheckResult> checks;

    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

struct ExactMathOptions {
    long samples = 300;
    std::uint64_t seed = 0x5eed0001;
};
SuiteResult run_exactmath_suite(const ExactMathOptions& opts = {});

struct LatticeOptions {
    long samples = 300;
    std::uint64_t seed = 0x5eed0002;
};
SuiteResult run_lattice_suite(const LatticeOptions& opts = {});

struct FibOptions {
    std::vector<long> as = {1, 2, 3, 5};
    long range = 30;
};
SuiteResult run_fib_suite(const FibOptions& opts = {});

struct IsometryOptions {
    long samples = 100;
    std::uint64_t seed = 0x5eed0003;
};
SuiteResult run_isometry_suite(const IsometryOptions& opts = {});

struct ConeOptions {
    std::uint64_t seed = 0x5eed0004;
};
SuiteResult run_cone_suite(const ConeOptions& opts = {});

struct FundomainOptions {
    long samples = 1000;
    int max_word_len = 6;
    int tiling_len = 4;
    long tiling_samples = 100;
    std::uint64_t seed = 0x5eed0005;
};
SuiteResult run_fundomain_suite(const FundomainOptions& opts = {});

struct Nef2Options {
    long samples = 1000;
    long box = 20;   // coordinate window for sampled points
    long B = 50;     // enumeration bound for (-2)-classes
    int K = 10;      // orbit depth
    int ident_depth = 12;  // orbit depth for wall identification
    std::uint64_t seed = 0x5eed0006;
};
SuiteResult run_nef2_suite(const Nef2Options& opts = {});

struct LargeNOptions {
    long a = 1;
    long n = 6;
    int K = 4;
};
SuiteResult run_large_n_suite(const LargeNOptions& opts = {});

std::vector<SuiteResult> run_all();

// -- Shared building blocks (also used by the acceptance suite) -------------

/// Random rational in [-box, box] with denominator 1..max_den.
Rat random_rat(std::uint64_t& state, long box, long max_den);

/// Deterministic pseudo-random stream (splitmix64).
std::uint64_t next_rand(std::uint64_t& state);

/// The (-2)-classes from the box-B enumeration whose hyperplane supports
/// the Hassett-Tschinkel cut-out: an exact witness ray with q > 0 on the
/// wall and inside every other halfspace is produced for each.
std::vector<DivClass> supporting_walls_from_box(long a, long B);

/// Exact equivalence of the depth-K orbit-wall nef test and the box-B
/// Hassett-Tschinkel cut-out on `samples` random rational points with
/// q > 0 in the given box. Returns a failure description or empty string.
std::string nef_oracle_equivalence(long samples, long box, long B, int K, std::uint64_t seed);

}  // namespace hilbnef::verify
