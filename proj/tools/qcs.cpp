#include <iostream>

#include "qcs/cli.hpp"

int main(int argc, char** argv) {
  return qcs::run({argv + 1, argv + argc}, std::cout, std::cerr, std::cin);
}
