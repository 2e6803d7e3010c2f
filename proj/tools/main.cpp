#include <iostream>
#include <string>
#include <vector>

#include "qseq4/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return qseq4::run_cli(args, std::cout, std::cerr);
}
