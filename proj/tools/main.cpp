#include <cstdlib>
#include <iostream>

#include "cli.hpp"
#include "nary/tensor.hpp"

int main(int argc, char** argv) {
  if (const char* guard = std::getenv("NARY_SIZE_GUARD")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(guard, &end, 10);
    if (end == guard || *end != '\0') {
      std::cerr << "NARY_SIZE_GUARD must be a positive integer\n";
      return nary::cli::kUsage;
    }
    nary::set_size_guard(static_cast<std::size_t>(v));
  }
  return nary::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
