#ifndef SUPERLIE_VERIFY_HPP
#define SUPERLIE_VERIFY_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "superlie/report.hpp"

namespace superlie::verify {

/// tensor-props, nil-bounds, uce, d3-lemma, hopf, snake, cyclic-sixterm,
/// final-sixterm, miller.
const std::vector<std::string>& suite_ids();

/// Runs one battery over the corpus in `dir`; one check per theorem and
/// example. Throws std::invalid_argument for an unknown id.
Report run(const std::string& id, const std::filesystem::path& dir);

}  // namespace superlie::verify

#endif
