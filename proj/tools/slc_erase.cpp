// Regenerates the bare stdlib: slc_erase stdlib/stdlib.typed.slc > stdlib/stdlib.slc
#include <fstream>
#include <iostream>
#include <sstream>

#include "slc/errors.hpp"
#include "slc/stdlib.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: slc_erase FILE\n";
    return 1;
  }
  std::ifstream in(argv[1]);
  if (!in) {
    std::cerr << "cannot read " << argv[1] << "\n";
    return 1;
  }
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    std::cout << slc::render_erased(slc::parse(ss.str()));
  } catch (const slc::Error& e) {
    std::cerr << e.kind() << ": " << e.what() << "\n";
    return 1;
  }
  return 0;
}
