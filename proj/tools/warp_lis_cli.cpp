#include <iostream>

#include "warp_lis/cli.hpp"

int main(int argc, char** argv) {
  return warp_lis::cli::run(argc, argv, std::cout, std::cerr);
}
