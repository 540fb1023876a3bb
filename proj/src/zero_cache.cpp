#include "lpair/zero_cache.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <mutex>
#include <sstream>
#include <thread>

#include <unistd.h>

#include "lpair/error.hpp"
#include "lpair/parallel.hpp"

namespace lpair {
namespace {

using nlohmann::json;
namespace fs = std::filesystem;

// One mutex per modulus slot serializes writers to the same file within a
// process; distinct moduli proceed independently.
std::mutex& modulus_mutex(std::uint32_t q) {
  static std::array<std::mutex, 64> locks;
  return locks[q % locks.size()];
}

json envelope_json(const CacheEnvelope& e) {
  return {{"code_version", e.code_version},
          {"grid_step", e.grid_step},
          {"bracket_half_width", e.bracket_half_width},
          {"max_height", e.max_height}};
}

CacheEnvelope envelope_from(const json& j) {
  CacheEnvelope e;
  e.code_version = j.at("code_version").get<std::string>();
  e.grid_step = j.at("grid_step").get<double>();
  e.bracket_half_width = j.at("bracket_half_width").get<double>();
  e.max_height = j.at("max_height").get<double>();
  return e;
}

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Numbers arrays are emitted by hand so every ordinate carries 17
// significant digits.
std::string record_line(const CacheRecord& r) {
  json head = {{"kind", "record"},        {"q", r.q},
               {"character", r.character}, {"conductor", r.conductor},
               {"complete", r.complete}};
  std::string s = head.dump();
  s.pop_back();
  s += ",\"T_max\":" + fmt17(r.T_max);
  s += ",\"grid_step\":" + fmt17(r.grid_step);
  s += ",\"expected\":" + fmt17(r.expected);
  s += ",\"slack\":" + fmt17(r.slack);
  s += ",\"ordinates\":[";
  for (std::size_t i = 0; i < r.zeros.size(); ++i) s += (i ? "," : "") + fmt17(r.zeros[i].ordinate);
  s += "],\"brackets\":[";
  for (std::size_t i = 0; i < r.zeros.size(); ++i) s += (i ? "," : "") + fmt17(r.zeros[i].bracket);
  s += "],\"multiplicities\":[";
  for (std::size_t i = 0; i < r.zeros.size(); ++i) s += (i ? "," : "") + std::to_string(r.zeros[i].multiplicity);
  s += "]}";
  return s;
}

void require_increasing(const std::vector<ZeroRecord>& z, const std::string& where) {
  for (std::size_t i = 1; i < z.size(); ++i)
    if (!(z[i].ordinate > z[i - 1].ordinate))
      throw CacheError(where + ": ordinates not strictly increasing");
}

CacheRecord record_from(const json& j) {
  CacheRecord r;
  r.q = j.at("q").get<std::uint32_t>();
  r.character = j.at("character").get<std::vector<std::uint32_t>>();
  r.conductor = j.at("conductor").get<std::uint32_t>();
  r.T_max = j.at("T_max").get<double>();
  r.complete = j.at("complete").get<bool>();
  r.grid_step = j.at("grid_step").get<double>();
  r.expected = j.at("expected").get<double>();
  r.slack = j.at("slack").get<double>();
  const auto ord = j.at("ordinates").get<std::vector<double>>();
  const auto br = j.at("brackets").get<std::vector<double>>();
  const auto mu = j.at("multiplicities").get<std::vector<int>>();
  if (br.size() != ord.size() || mu.size() != ord.size()) throw CacheError("zero cache: ragged record");
  r.zeros.resize(ord.size());
  for (std::size_t i = 0; i < ord.size(); ++i) r.zeros[i] = {ord[i], br[i], mu[i]};
  return r;
}

void atomic_write(const fs::path& target, const std::string& content) {
  std::ostringstream tag;
  tag << ".tmp." << ::getpid() << '.' << std::hash<std::thread::id>{}(std::this_thread::get_id());
  const fs::path tmp = target.string() + tag.str();
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw CacheError("zero cache: cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) throw CacheError("zero cache: write failed for " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw CacheError("zero cache: cannot replace " + target.string());
  }
}

}  // namespace

CacheRecord to_record(const CharacterZeros& cz) {
  CacheRecord r;
  r.q = cz.chi.modulus();
  r.character = cz.chi.generator_exponents();
  r.conductor = cz.chi.conductor();
  r.T_max = cz.scan.T;
  r.complete = cz.scan.complete;
  r.grid_step = cz.scan.grid_step;
  r.expected = cz.scan.expected;
  r.slack = cz.scan.slack;
  r.zeros = cz.scan.zeros;
  return r;
}

ZeroCache::ZeroCache(fs::path dir, CacheEnvelope envelope) : dir_(std::move(dir)), env_(std::move(envelope)) {
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec) throw CacheError("zero cache: cannot create " + dir_.string());
  const fs::path manifest = dir_ / "manifest.json";
  if (fs::exists(manifest)) {
    std::ifstream in(manifest);
    json j;
    try {
      in >> j;
      envelope_ok_ = envelope_from(j.at("envelope")) == env_;
    } catch (const json::exception&) {
      throw CacheError("zero cache: damaged manifest " + manifest.string());
    }
    return;
  }
  json j = {{"format", "lpair zero cache"}, {"envelope", envelope_json(env_)}};
  atomic_write(manifest, j.dump(2) + "\n");
}

fs::path ZeroCache::default_directory() {
  if (const char* env = std::getenv("LPAIR_ZERO_CACHE"); env && *env) return env;
  return fs::current_path() / ".lpair-zero-cache";
}

fs::path ZeroCache::modulus_file(std::uint32_t q) const { return dir_ / ("q" + std::to_string(q) + ".jsonl"); }

void ZeroCache::require_envelope() const {
  if (!envelope_ok_) throw CacheError("zero cache: envelope mismatch with manifest in " + dir_.string());
}

std::vector<CacheRecord> ZeroCache::load(std::uint32_t q) const {
  const fs::path path = modulus_file(q);
  std::ifstream in(path);
  if (!in) return {};
  std::vector<CacheRecord> out;
  std::string line;
  bool header = false;
  bool ended = false;
  try {
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      if (ended) throw CacheError("zero cache: data after end marker in " + path.string());
      const json j = json::parse(line);
      const std::string kind = j.at("kind").get<std::string>();
      if (kind == "header") {
        if (j.at("q").get<std::uint32_t>() != q) throw CacheError("zero cache: wrong modulus in " + path.string());
        if (!(envelope_from(j.at("envelope")) == env_))
          throw CacheError("zero cache: envelope mismatch in " + path.string());
        header = true;
      } else if (kind == "record") {
        if (!header) throw CacheError("zero cache: record before header in " + path.string());
        out.push_back(record_from(j));
        require_increasing(out.back().zeros, path.string());
      } else if (kind == "end") {
        if (j.at("records").get<std::size_t>() != out.size())
          throw CacheError("zero cache: record count mismatch in " + path.string());
        ended = true;
      }
    }
  } catch (const json::exception& e) {
    throw CacheError("zero cache: damaged file " + path.string() + " (" + e.what() + ")");
  }
  if (!ended) throw CacheError("zero cache: truncated file " + path.string());
  return out;
}

void ZeroCache::store(std::uint32_t q, const std::vector<CacheRecord>& records) const {
  std::string content = json{{"kind", "header"}, {"q", q}, {"envelope", envelope_json(env_)}}.dump() + "\n";
  for (const auto& r : records) {
    if (r.q != q) throw CacheError("zero cache: record modulus does not match file");
    require_increasing(r.zeros, "zero cache write");
    content += record_line(r) + "\n";
  }
  content += json{{"kind", "end"}, {"records", records.size()}}.dump() + "\n";
  atomic_write(modulus_file(q), content);
}

void ZeroCache::write(const CacheRecord& record) {
  require_envelope();
  std::lock_guard lk(modulus_mutex(record.q));
  std::vector<CacheRecord> recs;
  try {
    recs = load(record.q);
  } catch (const CacheError&) {
    recs.clear();  // a damaged file is rebuilt from scratch
  }
  auto it = std::find_if(recs.begin(), recs.end(), [&](const CacheRecord& r) { return r.character == record.character; });
  if (it != recs.end())
    *it = record;
  else
    recs.push_back(record);
  store(record.q, recs);
}

void ZeroCache::write_modulus(std::uint32_t q, const std::vector<CharacterZeros>& zeros) {
  require_envelope();
  std::vector<CacheRecord> recs;
  recs.reserve(zeros.size());
  for (const auto& cz : zeros) recs.push_back(to_record(cz));
  std::lock_guard lk(modulus_mutex(q));
  store(q, recs);
}

CacheRecord ZeroCache::read(std::uint32_t q, const std::vector<std::uint32_t>& character, double T_max) const {
  require_envelope();
  std::vector<CacheRecord> recs;
  {
    std::lock_guard lk(modulus_mutex(q));
    recs = load(q);
  }
  for (auto& r : recs) {
    if (r.character != character) continue;
    if (r.T_max < T_max) throw CacheError("zero cache: missing record (stored height below request) for q = " + std::to_string(q));
    return std::move(r);
  }
  throw CacheError("zero cache: missing record for q = " + std::to_string(q));
}

std::vector<CharacterZeros> ZeroCache::read_modulus(std::uint32_t q, double T_max) const {
  require_envelope();
  std::vector<CacheRecord> recs;
  {
    std::lock_guard lk(modulus_mutex(q));
    recs = load(q);
  }
  const CharacterGroup g(q);
  std::vector<CharacterZeros> out;
  for (const auto& chi : g.primitive_characters()) {
    auto it = std::find_if(recs.begin(), recs.end(),
                           [&](const CacheRecord& r) { return r.character == chi.generator_exponents(); });
    if (it == recs.end()) throw CacheError("zero cache: missing record for q = " + std::to_string(q));
    if (it->T_max < T_max)
      throw CacheError("zero cache: missing record (stored height below request) for q = " + std::to_string(q));
    if (it->conductor != chi.conductor()) throw CacheError("zero cache: conductor mismatch for q = " + std::to_string(q));
    ZeroScan s;
    s.zeros = it->zeros;
    s.T = it->T_max;
    s.grid_step = it->grid_step;
    s.expected = it->expected;
    s.slack = it->slack;
    s.complete = it->complete;
    out.push_back({chi, std::move(s)});
  }
  return out;
}

bool ZeroCache::has_modulus(std::uint32_t q, double T_max) const {
  try {
    read_modulus(q, T_max);
    return true;
  } catch (const CacheError&) {
    return false;
  }
}

ZeroSource ZeroCache::source(bool build, unsigned jobs) {
  const unsigned j = jobs == 0 ? default_jobs() : jobs;
  return [this, build, j](std::uint32_t q, double T) {
    try {
      return read_modulus(q, T);
    } catch (const CacheError&) {
      if (!build) throw;
    }
    auto zeros = scan_modulus(q, T, env_.grid_step, j);
    write_modulus(q, zeros);
    return zeros;
  };
}

}  // namespace lpair
