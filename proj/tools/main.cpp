#include <vector>
#include <string>

#include "moserlab/cli_io.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return moserlab::run(args);
}
