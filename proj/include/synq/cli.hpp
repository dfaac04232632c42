// Command-line front end; see README for the subcommand list. Exit codes:
// 0 verified/pass, 1 failed, 2 unresolved, 64 usage or input errors.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace synq {

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace synq
