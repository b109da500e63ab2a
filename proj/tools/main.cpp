#include <iostream>

#include "jung/cli.hpp"

int main(int argc, char** argv) {
  return jung::cli::run(std::vector<std::string>(argv, argv + argc), std::cin, std::cout, std::cerr);
}
