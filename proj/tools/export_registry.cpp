// Writes the reference algebras and groups as JSON files into a directory.
#include <filesystem>
#include <fstream>
#include <iostream>

#include "cob2/frobenius.hpp"
#include "cob2/group.hpp"
#include "cob2/io.hpp"

int main(int argc, char** argv) {
  if (argc != 2 || argv[1][0] == '-') {
    std::cerr << "usage: cob2_export_registry <data-dir>\n";
    return 2;
  }
  const std::filesystem::path root = argv[1];
  std::filesystem::create_directories(root / "algebras");
  std::filesystem::create_directories(root / "groups");
  for (const auto& [name, algebra] : cob2::registry()) {
    std::ofstream(root / "algebras" / (name + ".json")) << cob2::algebra_to_json(algebra) << "\n";
  }
  std::ofstream(root / "algebras" / "matrix_algebra_2.json")
      << cob2::algebra_to_json(cob2::matrix_algebra(2)) << "\n";
  for (const char* name : {"S3", "D4", "Q8"}) {
    std::ofstream(root / "groups" / (std::string(name) + ".json"))
        << cob2::group_to_json(cob2::builtin(name)) << "\n";
  }
  return 0;
}
