#pragma once
// Persistent central-value store: one JSON object per line, so the file can
// be grepped, diffed, and safely appended to.  Lifecycle:
//
//   construct  -> read the file; a malformed line is treated as a torn write
//                 and everything from it on is dropped (with a warning) --
//                 the file itself is repaired on the spot via checkpoint
//   store      -> append the line immediately (the file stays loadable even
//                 if the process dies), remember the entry
//   flush/dtor -> checkpoint: rewrite everything to <path>.tmp and rename
//                 over the original, which is atomic on POSIX
//
// Values are stored through the JSON shortest-round-trip form, so a lookup
// hit returns exactly the bits that were computed -- reruns against a warm
// cache stay deterministic.  Entries whose method tag or config hash do not
// match the running oracle are carried through untouched but never served.

#include <cstddef>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "mollab/moments.hpp"

namespace mollab {

inline constexpr const char* kToolVersion = "0.1.0";

// Hash of everything that could change what the direct oracle returns.  The
// oracle has no tunable parameters, so this only moves when the method or
// its implementation version does.
std::string oracle_config_hash();

class FileCache : public LValueSource {
 public:
  explicit FileCache(std::string path);
  ~FileCache() override;
  FileCache(const FileCache&) = delete;
  FileCache& operator=(const FileCache&) = delete;

  std::optional<cplx> lookup(i64 q, i64 index) override;
  void store(const Character& chi, cplx value) override;

  void flush();  // checkpoint now instead of at destruction

  size_t size() const;
  i64 dropped_lines() const { return dropped_; }  // corruption diagnostic
  const std::string& path() const { return path_; }

 private:
  struct Entry {
    cplx value;
    std::string parity;
    i64 conductor = 0;
  };
  std::string line_for(i64 q, i64 index, const Entry& e) const;
  void checkpoint_locked();

  std::string path_;
  mutable std::mutex mu_;
  std::map<std::pair<i64, i64>, Entry> entries_;
  std::vector<std::string> foreign_;  // lines for other methods/config hashes
  i64 dropped_ = 0;
  bool dirty_ = false;  // file content differs from a clean checkpoint
};

}  // namespace mollab
