#pragma once

#include "synpath/serialize.hpp"

#include <string>
#include <vector>

namespace synpath {

enum class CheckStatus { Pass, Fail, Skip };
std::string_view status_name(CheckStatus s);

struct CheckResult {
    int id = 0;
    std::string name;
    CheckStatus status = CheckStatus::Fail;
    std::string detail;  // deterministic: no timings unless a budget was blown
};

struct VerifyOptions {
    bool quick = false;          // skip Golomb N=6 and distributions beyond N=8
    std::string golden_dir;      // empty: default_golden_dir()
};

constexpr int kCriterionCount = 14;

// SYNPATH_GOLDEN_DIR if set, else the directory baked in at build time.
std::string default_golden_dir();

std::string criterion_name(int id);
CheckResult run_check(int id, const VerifyOptions& opts);
std::vector<CheckResult> run_verify(const VerifyOptions& opts);

Json report_json(const std::vector<CheckResult>& results, bool quick);
bool all_passed(const std::vector<CheckResult>& results);  // skips do not fail

}  // namespace synpath
