#include <iostream>

#include "bqm/cli.hpp"

int main(int argc, char** argv) {
  return bqm::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
