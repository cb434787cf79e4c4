#include <iostream>

#include "digitop/cli.hpp"

int main(int argc, char** argv) {
  return digitop::cli::run(argc, argv, std::cout, std::cerr);
}
