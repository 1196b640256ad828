#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lipcert {

/// Entry point for the `lipcert` tool. `args[0]` is the program name.
/// Subcommands:
///   bounds  --model M --gram-iterations N [--sqrt-err E] [--sqrt-max-iters K] --out B
///   certify --bounds B --epsilon E [--model M]   (output vectors on `in`)
///   apply   --model M                            (input vectors on `in`)
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace lipcert
