#ifndef SUPERLIE_CORPUS_HPP
#define SUPERLIE_CORPUS_HPP

#include <string>
#include <vector>

#include "superlie/io.hpp"

namespace superlie::corpus {

/// One bundled file: path relative to the corpus directory and its content.
struct File {
  std::string path;
  io::Json json;
};

/// The bundled example corpus over Q, generated from the constructors.
/// Files under bad/ are negative controls that must be rejected.
std::vector<File> files();

/// Writes every file, one JSON document per file with a trailing newline.
void write(const io::fs::path& dir);

}  // namespace superlie::corpus

#endif
