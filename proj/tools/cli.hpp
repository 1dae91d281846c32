#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace oddlen::cli {

// Full command surface of the oddlen tool:
//   stats  --group A|B --window CSV
//   gf     --group A|B --n INT --set CSV [--restrict all|chess|plus|minus] [--chi]
//   closed --formula TAG --n INT [--set CSV]
//   verify [--suite default|ID,...] [--max-n-a INT] [--max-n-b INT]
//          [--threads INT] [--report json|text]
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 resource-limit refusal.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace oddlen::cli
