#include <iostream>

#include "bsg/cli.hpp"

int main(int argc, char** argv) {
  return bsg::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
