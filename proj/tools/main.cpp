#include <iostream>

#include "ivc_cli.hpp"

int main(int argc, char** argv) {
  return ivc::cli::run(argc, argv, std::cin, std::cout, std::cerr);
}
