#include <iostream>
#include <string>
#include <vector>

#include "kinbound/cli.hpp"

int main(int argc, char** argv) {
  return kinbound::cli::run(std::vector<std::string>(argv + 1, argv + argc),
                            std::cout, std::cerr);
}
