#include <iostream>

#include "compgraph/cli.hpp"

int main(int argc, char** argv) {
  return compgraph::run_cli({argv, argv + argc}, std::cout, std::cerr);
}
