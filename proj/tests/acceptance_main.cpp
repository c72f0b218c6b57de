// Acceptance suite: runs every reproduction item at the default budget and
// prints one line per item. Exit code 0 = all pass (skips allowed),
// 1 = failure, 2 = budget-limited without failure.

#include <cstdio>
#include <cstring>
#include <string>

#include "ringtopo/verification.hpp"

int main(int argc, char** argv) {
    ringtopo::RunConfig config;
    config.certs_dir = std::string(RINGTOPO_SOURCE_DIR) + "/data/certificates";
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--include-slow") == 0) config.include_slow = true;
        if (std::strcmp(argv[i], "--budget") == 0 && i + 1 < argc) config.budget = std::atoll(argv[++i]);
    }

    auto results = ringtopo::run_verification(config);
    for (const auto& r : results)
        std::printf("%-7s %-32s %6.2fs  %s\n", ringtopo::to_string(r.status).c_str(), r.id.c_str(),
                    r.seconds, r.detail.c_str());
    int code = ringtopo::verification_exit_code(results);
    std::printf("%s\n", code == 0 ? "all checks passed" : code == 1 ? "FAILURES present" : "budget-limited");
    return code;
}
