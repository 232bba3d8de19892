#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace folkman {

/// One reproduced desk-scale claim. Details are ordered key-value pairs that
/// surface counts, witnesses (graph6) and timings for the report.
struct ClaimResult {
    std::string id;
    bool pass = false;
    double millis = 0.0;
    std::vector<std::pair<std::string, std::string>> details;
};

struct VerifyOptions {
    int jobs = 1;              // 0 = hardware concurrency
    uint64_t seed = 20250214;  // drives the sampled-instance claims
};

/// Registered claim ids, in report order:
///   T2-EXT, T4, T5, T8, L7, L11, C12-SMALL, G127-PROPS,
///   OBS-J3, OBS-J4, FE33B5, FV223
const std::vector<std::string>& claim_registry();

/// Runs one claim. Throws std::invalid_argument for an unknown id.
ClaimResult run_claim(const std::string& id, const VerifyOptions& options = {});

struct VerifyReport {
    std::vector<ClaimResult> claims;
    bool all_pass = true;

    std::string to_text() const;
    std::string to_json() const;
};

/// Runs the given claims (all of them when ids is empty); idempotent and
/// order-independent across ids.
VerifyReport verify_paper(std::span<const std::string> ids, const VerifyOptions& options = {});

}  // namespace folkman
