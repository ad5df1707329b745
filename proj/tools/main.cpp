#include <iostream>
#include <string>
#include <vector>

#include "sharply/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return sharply::cli::dispatch(args, std::cout, std::cerr);
}
