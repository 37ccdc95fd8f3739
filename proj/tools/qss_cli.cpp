#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  auto parsed = qss::cli::parseArgs(argc, argv, std::cout, std::cerr);
  if (const int* code = std::get_if<int>(&parsed)) return *code;
  return qss::cli::run(std::get<qss::cli::RunConfig>(parsed), std::cout, std::cerr);
}
