#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sptcrank {

enum ExitCode { kExitPass = 0, kExitFailure = 1, kExitUsage = 2 };

/// Runs the command line `args` (without the program name), writing the
/// document to `out` and warnings, timings and usage errors to `err`.
///
///   table <rank|crank|rankset-q|p-rank|ns|spt|moments> [--n N | --max-n N] [--m M | --max-m M]
///         [--mod T] [--max-k K] [--format csv|json]
///   inspect <parts> [--m M] [--format csv|json]
///   verify <conjecture|injection|identities|moments|spt|spt-crank|all>
///         [--max-n N] [--max-m M] [--n N --m M] [--max-k K] [--detail] [--workers W] [--format csv|json]
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sptcrank
