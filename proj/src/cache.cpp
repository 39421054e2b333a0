#include "mollab/cache.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "json.hpp"

#include "mollab/errors.hpp"

namespace mollab {

namespace {

using nlohmann::json;

// FNV-1a, reported as 16 hex digits; plenty for a config fingerprint.
std::string fnv_hex(const std::string& s) {
  u64 h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

constexpr const char* kMethod = "direct";

}  // namespace

std::string oracle_config_hash() {
  return fnv_hex(std::string(kMethod) + "|" + kToolVersion);
}

FileCache::FileCache(std::string path) : path_(std::move(path)) {
  std::ifstream in(path_);
  if (!in) return;  // no file yet: start empty
  const std::string want_hash = oracle_config_hash();
  std::string line;
  i64 lineno = 0;
  bool corrupt = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    json j = json::parse(line, nullptr, /*allow_exceptions=*/false);
    bool ok = j.is_object() && j.contains("q") && j["q"].is_number_integer() &&
              j.contains("index") && j["index"].is_number_integer() && j.contains("re") &&
              j["re"].is_number() && j.contains("im") && j["im"].is_number() &&
              j.contains("method") && j["method"].is_string() && j.contains("config") &&
              j["config"].is_string();
    if (!ok) {
      corrupt = true;
      break;
    }
    if (j["method"] != kMethod || j["config"] != want_hash) {
      foreign_.push_back(line);
      continue;
    }
    Entry e;
    e.value = {j["re"].get<double>(), j["im"].get<double>()};
    e.parity = j.value("parity", "");
    e.conductor = j.value("conductor", i64{0});
    if (!std::isfinite(e.value.real()) || !std::isfinite(e.value.imag())) {
      corrupt = true;
      break;
    }
    entries_[{j["q"].get<i64>(), j["index"].get<i64>()}] = e;
  }
  if (corrupt) {
    // count the rest of the file as dropped alongside the bad line itself
    dropped_ = 1;
    while (std::getline(in, line))
      if (!line.empty()) ++dropped_;
    in.close();
    std::cerr << "warning: cache " << path_ << " is malformed at line " << lineno
              << "; dropping " << dropped_ << " line(s) from there on\n";
    std::lock_guard<std::mutex> lock(mu_);
    checkpoint_locked();  // repair immediately so appends land on a clean file
  }
}

FileCache::~FileCache() {
  try {
    flush();
  } catch (...) {
    // a failing final checkpoint must not terminate; appends are on disk
  }
}

std::optional<cplx> FileCache::lookup(i64 q, i64 index) {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = entries_.find({q, index});
  if (it == entries_.end()) return std::nullopt;
  return it->second.value;
}

std::string FileCache::line_for(i64 q, i64 index, const Entry& e) const {
  json j;
  j["q"] = q;
  j["index"] = index;
  j["parity"] = e.parity;
  j["conductor"] = e.conductor;
  j["method"] = kMethod;
  j["re"] = e.value.real();
  j["im"] = e.value.imag();
  j["config"] = oracle_config_hash();
  j["version"] = kToolVersion;
  return j.dump();
}

void FileCache::store(const Character& chi, cplx value) {
  if (!std::isfinite(value.real()) || !std::isfinite(value.imag()))
    throw ComputeError("cache store rejected a non-finite central value at q=" +
                       std::to_string(chi.q()));
  Entry e{value, chi.is_even() ? "even" : "odd", chi.conductor()};
  std::lock_guard<std::mutex> lock(mu_);
  auto [it, fresh] = entries_.insert_or_assign({chi.q(), chi.index()}, e);
  (void)it;
  if (!fresh) {
    dirty_ = true;  // replaced an entry: the appended line shadows an older one
  }
  // open per append on purpose: the checkpoint renames over path_, and a
  // long-lived append handle would keep writing to the unlinked old inode
  std::ofstream out(path_, std::ios::app);
  if (out) {
    out << line_for(chi.q(), chi.index(), e) << '\n';
  } else {
    dirty_ = true;  // couldn't append; the checkpoint will write it
  }
}

void FileCache::checkpoint_locked() {
  std::string tmp = path_ + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw ComputeError("cache checkpoint: cannot write " + tmp);
    for (const std::string& line : foreign_) out << line << '\n';
    for (const auto& [key, e] : entries_) out << line_for(key.first, key.second, e) << '\n';
    if (!out) throw ComputeError("cache checkpoint: short write to " + tmp);
  }
  std::filesystem::rename(tmp, path_);
  dirty_ = false;
}

void FileCache::flush() {
  std::lock_guard<std::mutex> lock(mu_);
  if (!dirty_) return;  // every entry is already on disk as an appended line
  checkpoint_locked();
}

size_t FileCache::size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return entries_.size();
}

}  // namespace mollab
