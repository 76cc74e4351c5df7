#include <iostream>

#include "coordlab_cli/cli.hpp"

int main(int argc, char** argv) {
  return coordlab::cli::main_entry(argc, argv, std::cout, std::cerr);
}
