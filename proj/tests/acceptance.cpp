// Acceptance gate: runs every end-to-end criterion and prints one line per
// check. Criteria relying on external tuple data report SKIP when the files
// are not present (set NTVERIFY_DATA_DIR to point at them).
#include <cstdio>
#include <cstdlib>
#include <string>

#include "ntverify/acceptance.hpp"
#include "ntverify/harman.hpp"

int main() {
    std::string data_dir = "data";
    if (const char* env = std::getenv("NTVERIFY_DATA_DIR")) data_dir = env;

    const auto checks = ntv::run_acceptance(data_dir, ntv::kDefaultSeed);
    int failures = 0;
    for (const auto& c : checks) {
        std::printf("criterion %2d [%s] %s: %s\n", c.id, ntv::to_string(c.status),
                    c.name.c_str(), c.detail.c_str());
        if (c.status == ntv::CheckStatus::fail) ++failures;
    }
    std::printf("%zu checks, %d failed\n", checks.size(), failures);
    return failures == 0 ? 0 : 1;
}
