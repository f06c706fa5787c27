#include <iostream>

#include <fexp/cli.hpp>

int main(int argc, char** argv) {
  return fexp::cli::run(argc, argv, std::cout, std::cerr);
}
