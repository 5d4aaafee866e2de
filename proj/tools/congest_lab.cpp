#include <iostream>

#include "congest/cli.hpp"

int main(int argc, char** argv) {
  return congest::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
