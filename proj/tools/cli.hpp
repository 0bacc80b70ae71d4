#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace loopless::cli {

// Exit codes: 0 success, 1 verification failure, 2 usage or guard error.

int run_gen(const std::string& kind, const std::vector<int>& params,
            const std::string& format, std::ostream& out, std::ostream& err);

int run_verify(const std::string& kind, const std::vector<int>& params,
               std::ostream& out, std::ostream& err);

int run_bench(const std::string& kind, const std::vector<int>& params, int reps,
              std::ostream& out, std::ostream& err);

}  // namespace loopless::cli
