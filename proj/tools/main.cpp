#include <csignal>
#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::signal(SIGINT, [](int) { cvec::cli::stop_server(); });
  std::signal(SIGTERM, [](int) { cvec::cli::stop_server(); });
  std::vector<std::string> args(argv, argv + argc);
  return cvec::cli::run(args, std::cout, std::cerr);
}
