#include <string>
#include <vector>

#include "frook/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return frook::run_cli(args);
}
