#pragma once

#include "operadix/expr.hpp"
#include "operadix/poly.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace operadix {

/// Data directory compiled into the library (the repository's data/).
std::filesystem::path default_data_dir();

/// Whole file as a string; throws std::runtime_error when unreadable.
std::string read_file(const std::filesystem::path& path);

/// Lowercase hex SHA-256 digest.
std::string sha256_hex(std::string_view bytes);

struct ChecksumEntry {
  std::string file;
  std::string expected;
  std::string actual;  // empty when the file is missing
  bool ok() const { return !actual.empty() && actual == expected; }
};

/// Checks every file listed in `dir`/SHA256SUMS (sha256sum format).
std::vector<ChecksumEntry> verify_checksums(const std::filesystem::path& dir);

struct Presentation {
  Signature signature;
  std::vector<MultilinearExpr> relations;
};

Presentation load_presentation(const std::filesystem::path& sig_file, const std::filesystem::path& rel_file);

std::vector<MultiPoly> load_polys(const std::filesystem::path& file, const ParameterRing& ring);

}  // namespace operadix
