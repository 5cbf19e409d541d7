#include <iostream>

#include "derange/cli.hpp"

int main(int argc, char** argv) {
  return derange::run(argc, argv, std::cout, std::cerr);
}
