#pragma once

// The worked example programs, loaded from the corpus directory.

#include <filesystem>
#include <fstream>
#include <iterator>
#include <string>
#include <vector>

#include "alp/core.hpp"
#include "alp/parser.hpp"

namespace alp::testing {

inline std::filesystem::path corpus_dir() { return ALP_CORPUS_DIR; }

inline std::string read_file(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), {}};
}

inline AbductiveProgram load_corpus(const std::string& name) {
  auto path = corpus_dir() / (name + ".alp");
  return parse_program(SourceProgram{read_file(path), path.string()});
}

inline std::vector<std::filesystem::path> corpus_files() {
  std::vector<std::filesystem::path> out;
  for (const auto& e : std::filesystem::directory_iterator(corpus_dir()))
    if (e.path().extension() == ".alp") out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

/// World from atom names.
inline World world(const Alphabet& alphabet, std::initializer_list<const char*> names) {
  AtomSet s;
  for (const char* n : names) s.insert(alphabet.at(n));
  return World(s);
}

inline AtomSet atoms(const Alphabet& alphabet, std::initializer_list<const char*> names) {
  return world(alphabet, names).atoms();
}

}  // namespace alp::testing
