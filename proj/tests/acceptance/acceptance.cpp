// Acceptance harness: one PASS/FAIL line per criterion.
//   acceptance                 all criteria
//   acceptance --criterion 4   just one (ctest registers each separately)
//   acceptance --quick         quick partition

#include "synpath/verify.hpp"

#include <cstring>
#include <iostream>

using namespace synpath;

int main(int argc, char** argv) {
    VerifyOptions opts;
    std::vector<int> ids;
    for (int i = 1; i < argc; ++i) {
        if (!std::strcmp(argv[i], "--criterion") && i + 1 < argc) ids.push_back(std::atoi(argv[++i]));
        else if (!std::strcmp(argv[i], "--quick")) opts.quick = true;
        else if (!std::strcmp(argv[i], "--golden-dir") && i + 1 < argc) opts.golden_dir = argv[++i];
        else {
            std::cerr << "usage: acceptance [--criterion K]... [--quick] [--golden-dir DIR]\n";
            return 2;
        }
    }
    if (ids.empty())
        for (int k = 1; k <= kCriterionCount; ++k) ids.push_back(k);

    bool ok = true;
    for (int id : ids) {
        if (id < 1 || id > kCriterionCount) {
            std::cerr << "no criterion " << id << "\n";
            return 2;
        }
        auto r = run_check(id, opts);
        const char* tag = r.status == CheckStatus::Pass ? "PASS" : r.status == CheckStatus::Skip ? "SKIP" : "FAIL";
        std::cout << "criterion " << id << " (" << r.name << "): " << tag << " - " << r.detail << std::endl;
        ok = ok && r.status != CheckStatus::Fail;
    }
    return ok ? 0 : 1;
}
