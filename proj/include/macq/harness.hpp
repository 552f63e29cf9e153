#ifndef MACQ_HARNESS_HPP
#define MACQ_HARNESS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "macq/binomial.hpp"
#include "macq/specialization.hpp"

namespace macq {

struct IdentityInfo {
    std::string id;
    std::string mode; // exact-finite | exact-graded | numeric
};

const std::vector<IdentityInfo>& catalog();
bool catalog_has(const std::string& id);

struct VerifyOptions {
    bool symbolic_qt = false;     // work over Q(q,t) instead of a rational point
    bool symbolic_params = false; // carry free scalars symbolically (exact-finite ids)
    FieldElement ti_shift = FieldElement(0L); // mutation knob for the T_i operators
    Rat tolerance = Rat(1, 100000000);        // numeric mode, relative
};

struct IdentityReport {
    std::string id;
    int n = 0;
    int D = 0;
    std::string mode;
    std::string status = "pass"; // pass | fail | error
    std::string residual = "0";
    std::int64_t seed = 0;
    long ms = 0;
    int trials = 0;
    std::string detail; // first failure context; not part of the JSONL line
    bool passed() const { return status == "pass"; }
};

IdentityReport verify(const std::string& id, int n, int D, int trials, std::int64_t seed,
                      const VerifyOptions& opts = {});

/// smoke: n=2, D=2, 1 trial (numeric ids keep their truncation deep enough
/// to meet tolerance); desk: n in {2,3}, exact D=3, graded shells D=4,
/// numeric |u| <= 8 (n=2) / 6 (n=3), 3 trials.
std::vector<IdentityReport> verify_all(const std::string& level, std::int64_t seed,
                                       const VerifyOptions& opts = {});

std::string report_json(const IdentityReport& r, bool with_ms = true);

} // namespace macq

#endif
