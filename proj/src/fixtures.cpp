#include "operadix/fixtures.hpp"

#include <openssl/evp.h>

#include <array>
#include <fstream>
#include <memory>
#include <sstream>
#include <stdexcept>

#ifndef OPERADIX_DATA_DIR
#define OPERADIX_DATA_DIR "data"
#endif

namespace operadix {

std::filesystem::path default_data_dir() { return OPERADIX_DATA_DIR; }

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string sha256_hex(std::string_view bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 failed");
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 15];
  }
  return out;
}

std::vector<ChecksumEntry> verify_checksums(const std::filesystem::path& dir) {
  std::istringstream in(read_file(dir / "SHA256SUMS"));
  std::vector<ChecksumEntry> out;
  for (std::string line; std::getline(in, line);) {
    std::istringstream words(line);
    ChecksumEntry e;
    if (!(words >> e.expected >> e.file)) continue;
    if (!e.file.empty() && e.file[0] == '*') e.file.erase(0, 1);
    try {
      e.actual = sha256_hex(read_file(dir / e.file));
    } catch (const std::runtime_error&) {
      e.actual.clear();
    }
    out.push_back(std::move(e));
  }
  return out;
}

Presentation load_presentation(const std::filesystem::path& sig_file, const std::filesystem::path& rel_file) {
  Presentation p;
  try {
    p.signature = parse_signature(read_file(sig_file));
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(sig_file.string() + ": " + e.what());
  }
  try {
    p.relations = parse_relations(read_file(rel_file), p.signature);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(rel_file.string() + ": " + e.what());
  }
  return p;
}

std::vector<MultiPoly> load_polys(const std::filesystem::path& file, const ParameterRing& ring) {
  try {
    return parse_poly_list(read_file(file), ring);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(file.string() + ": " + e.what());
  }
}

}  // namespace operadix
