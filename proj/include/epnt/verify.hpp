#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "epnt/sieve.hpp"

namespace epnt {

enum class CheckStatus { pass, fail, skipped, info };

const char* to_string(CheckStatus s);

struct CheckResult {
    explicit CheckResult(std::string n = {}) : name(std::move(n)) {}

    std::string name;
    CheckStatus status = CheckStatus::pass;
    std::uint64_t checked = 0;
    std::string detail;  // counterexample, skip reason, or summary
};

struct VerifyOptions {
    std::uint64_t sieve_limit = 1000000;
    int precision_bits = 128;
    std::uint64_t seed = 20240611;
    double goldston_x_max = 1e5;
    double goldston_step = 0.5;
    int window_samples = 10000;
    std::uint64_t orthogonality_q_max = 200;
    int partition_samples = 50;
    int inversion_samples = 20;
    int monotonicity_samples = 200;
    int bv_samples = 100;
};

// sieve-backed inequalities and exact algebra
CheckResult check_r2_window(const LambdaTable& table, const VerifyOptions& opt);
CheckResult check_goldston_left(const LambdaTable& table, const VerifyOptions& opt, LeftRange range);
CheckResult check_goldston_right(const LambdaTable& table, const VerifyOptions& opt);
CheckResult check_prime_window(const LambdaTable& table, const VerifyOptions& opt);
CheckResult check_orthogonality(const VerifyOptions& opt);
CheckResult check_partition(const LambdaTable& table, const VerifyOptions& opt);
CheckResult check_inversion(const LambdaTable& table, const VerifyOptions& opt);

// rounding and pipeline properties
CheckResult check_precision_monotonicity(const VerifyOptions& opt);
CheckResult check_rational_soundness(const VerifyOptions& opt);
CheckResult check_mu_crossover(const VerifyOptions& opt);
CheckResult check_C_monotone_in_Y0(const VerifyOptions& opt);
CheckResult check_bv_term_sum(const VerifyOptions& opt);

std::vector<CheckResult> oracle_suite(const VerifyOptions& opt);
std::vector<CheckResult> property_suite(const VerifyOptions& opt);

// fail counts; skipped and info rows never fail a suite
bool all_passed(const std::vector<CheckResult>& results);

}  // namespace epnt
