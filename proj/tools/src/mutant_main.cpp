#include <iostream>

#include "commands.hpp"
#include "ulog/testing/mutation.hpp"

// ulog_mutant [--mutate kcompose] <ulog arguments...>
int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  while (args.size() >= 2 && args[0] == "--mutate") {
    if (args[1] != "kcompose") {
      std::cerr << "unknown mutation '" << args[1] << "'\n";
      return ulog::cli::kExitUsage;
    }
    ulog::testing::mutations().corrupt_kcompose = true;
    args.erase(args.begin(), args.begin() + 2);
  }
  return ulog::cli::run(args, std::cout, std::cerr);
}
