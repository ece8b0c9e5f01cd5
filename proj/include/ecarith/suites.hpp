#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ecarith/ffield.hpp"

namespace ecarith::suites {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string claimed;         // what the check expects, printable
    std::string observed;        // what actually happened
    std::string counterexample;  // filled on failure when a witness exists
};

struct SuiteConfig {
    bool binary = false;
    std::uint64_t prime = 13;
    unsigned k = 8;        // binary degree when binary = true
    std::uint64_t u = 1, v = 2;
    std::uint64_t a = 2;   // twisted Hessian parameter
    std::uint64_t trials = 1000;
    std::uint64_t seed = 7;

    FieldSpec field() const {
        return binary ? FieldSpec::binary(k) : FieldSpec::odd_prime(prime);
    }
};

std::vector<CheckResult> run_ffield(const SuiteConfig& cfg);
std::vector<CheckResult> run_wmodel(const SuiteConfig& cfg);
std::vector<CheckResult> run_hessian(const SuiteConfig& cfg);
std::vector<CheckResult> run_quartic(const SuiteConfig& cfg);
std::vector<CheckResult> run_xforms(const SuiteConfig& cfg);
std::vector<CheckResult> run_counts(const SuiteConfig& cfg);

/// Dispatch by suite name ("ffield", "wmodel", "hessian", "quartic",
/// "xforms", "counts", "all"); throws ContractViolationError on unknown names.
std::vector<CheckResult> run_suite(const std::string& name, const SuiteConfig& cfg);

bool all_pass(const std::vector<CheckResult>& rs);

// --- operation-count registry -------------------------------------------------

struct CountReport {
    std::string op;
    OpCounter delta;
    int claimed_M = 0, claimed_S = 0;
    bool pass = false;
};

/// Runs one named operation on a seeded random point and reports the counter
/// delta against the claimed (M,S). Throws ContractViolationError for names
/// outside the registry.
CountReport run_count_op(const std::string& op, const SuiteConfig& cfg);

const std::vector<std::string>& count_op_names();

} // namespace ecarith::suites
