#include <cstdlib>
#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::optional<std::string> env_pi_bits;
  if (const char* v = std::getenv("MW_PI_BITS")) env_pi_bits = v;
  try {
    return toledo::cli::main_entry(args, env_pi_bits, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return toledo::cli::kExitFailure;
  }
}
