#include <iostream>

#include "chowbound/cli.hpp"

int main(int argc, char** argv) {
  return chowbound::cli::run(argc, argv, std::cout, std::cerr);
}
