#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace carterlink {

// Exit codes: 0 ok, 1 verification mismatch, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct VerifyResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// table: estim | bmin1 | matrices | gamma8 | unicolored | pairs | covalent | weights
std::vector<VerifyResult> verify_table(const std::string& table, const std::string& data_dir,
                                       int jobs);

std::string default_data_dir();

} // namespace carterlink
