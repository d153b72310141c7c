#include <iostream>

#include "shufflemerge/harness/cli.hpp"

int main(int argc, char** argv) {
  return shufflemerge::harness::cli_dispatch(argc, argv, std::cout, std::cerr);
}
