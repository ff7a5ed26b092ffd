#include <iostream>
#include <string>
#include <vector>

#include "squap/cli.hpp"

int main(int argc, char** argv) {
  return squap::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
