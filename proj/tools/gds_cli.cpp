#include <iostream>
#include <string>
#include <vector>

#include "gds/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  const gds::cli::Outcome r = gds::cli::run(args);
  std::cout << r.out;
  std::cerr << r.err;
  return r.code;
}
