#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "qgame/cli.hpp"

int main(int argc, char** argv) {
  try {
    return qgame::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "qgame: internal error: " << e.what() << "\n";
    return 1;
  }
}
