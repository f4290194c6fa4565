#include <iostream>
#include <string>
#include <vector>

#include "cathankel/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return cathankel::cli::run_cli(std::move(args), std::cout, std::cerr);
}
