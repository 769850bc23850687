#include <iostream>

#include "isotori/cli.hpp"

int main(int argc, char** argv) {
  return isotori::cli::run(std::vector<std::string>(argv, argv + argc), std::cin, std::cout, std::cerr);
}
