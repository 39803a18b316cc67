#include <cstdlib>
#include <iostream>

#include <unistd.h>

#include "cotq/cli.hpp"

int main(int argc, char** argv) {
  const bool color = ::isatty(STDOUT_FILENO) != 0 && std::getenv("NO_COLOR") == nullptr;
  return cotq::cli::run(argc, argv, std::cout, std::cerr, color);
}
