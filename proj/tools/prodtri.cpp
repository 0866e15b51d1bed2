#include <iostream>

#include "prodtri/cli.hpp"

int main(int argc, char** argv) {
  return prodtri::run_cli({argv + 1, argv + argc}, std::cout, std::cerr, std::cin);
}
