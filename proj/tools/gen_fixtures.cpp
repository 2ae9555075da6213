// Regenerates the frozen fixture corpus: gen_fixtures <dir>.
#include <cstdio>
#include <iostream>

#include "fixture_lib.hpp"

int main(int argc, char** argv)
{
  if (argc != 2) {
    std::cerr << "usage: gen_fixtures <fixture-dir>\n";
    return 3;
  }
  try {
    for (const auto& [name, j] : pcover::fixtures::build_all()) {
      pcover::write_text_file(std::string(argv[1]) + "/" + name + ".json", pcover::dump(j));
      std::cout << name << "\n";
    }
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
  return 0;
}
