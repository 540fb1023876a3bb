#pragma once

// On-disk zero lists. One JSON-lines file per modulus (header, one record
// per primitive character, end marker) plus manifest.json holding the code
// version and accuracy envelope the lists were computed under.

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "lpair/lfun.hpp"
#include "lpair/stats.hpp"

namespace lpair {

struct CacheEnvelope {
  std::string code_version = "lpair-zeros-1";
  double grid_step = 0.05;
  double bracket_half_width = kBracketHalfWidth;
  double max_height = kMaxHeight;

  bool operator==(const CacheEnvelope&) const = default;
};

struct CacheRecord {
  std::uint32_t q = 0;
  std::vector<std::uint32_t> character;  // generator-exponent tuple
  std::uint32_t conductor = 0;
  double T_max = 0.0;
  bool complete = false;
  double grid_step = 0.0;
  double expected = 0.0;
  double slack = 0.0;
  std::vector<ZeroRecord> zeros;  // strictly increasing ordinates
};

CacheRecord to_record(const CharacterZeros& cz);

class ZeroCache {
 public:
  // Creates the directory and manifest if absent. An existing manifest with
  // a different envelope leaves the cache unreadable for this envelope:
  // reads and writes then throw CacheError.
  explicit ZeroCache(std::filesystem::path dir, CacheEnvelope envelope = {});

  // $LPAIR_ZERO_CACHE, else ./.lpair-zero-cache.
  static std::filesystem::path default_directory();

  const std::filesystem::path& directory() const noexcept { return dir_; }
  const CacheEnvelope& envelope() const noexcept { return env_; }
  std::filesystem::path modulus_file(std::uint32_t q) const;

  // Inserts or replaces one character's record in its modulus file.
  void write(const CacheRecord& record);
  // Replaces the whole modulus file.
  void write_modulus(std::uint32_t q, const std::vector<CharacterZeros>& zeros);

  // Throws CacheError for a missing record, an envelope mismatch, a stored
  // height below T_max, or a damaged file.
  CacheRecord read(std::uint32_t q, const std::vector<std::uint32_t>& character, double T_max) const;
  // Every primitive character mod q, in group index order.
  std::vector<CharacterZeros> read_modulus(std::uint32_t q, double T_max) const;
  bool has_modulus(std::uint32_t q, double T_max) const;

  // Reads from the cache; on a miss scans and stores when `build` is set,
  // otherwise throws CacheError.
  ZeroSource source(bool build, unsigned jobs = 0);

 private:
  std::vector<CacheRecord> load(std::uint32_t q) const;
  void store(std::uint32_t q, const std::vector<CacheRecord>& records) const;
  void require_envelope() const;

  std::filesystem::path dir_;
  CacheEnvelope env_;
  bool envelope_ok_ = true;
};

}  // namespace lpair
