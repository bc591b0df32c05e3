#include <cstdio>
#include <string>
#include <vector>

#include "pealab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  pealab::CliResult result = pealab::run_cli(args);
  std::fputs(result.out.c_str(), stdout);
  return result.code;
}
