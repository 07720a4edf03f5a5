#include <string>
#include <vector>

#include "ipts/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ipts::run(args);
}
