#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <mutex>

#include "json.hpp"

#include "superjack/jack.hpp"
#include "superjack/partition.hpp"

namespace superjack {

/// On-disk store of chi tables: <dir>/chi_tables.json holding
///   {"header":{"convention":"k-inverse-alpha","format_version":1},"records":[ChiTable...]}
/// with records in canonical partition order. Loaded records are re-validated against the Jack
/// characterization; failures are dropped and recomputed on demand.
class ChiCache {
 public:
  static constexpr const char* kFileName = "chi_tables.json";
  static constexpr int kFormatVersion = 1;

  explicit ChiCache(std::filesystem::path dir);

  /// $SUPERJACK_CACHE, else $XDG_CACHE_HOME/superjack, else ~/.cache/superjack.
  static std::filesystem::path default_dir();

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path file() const { return dir_ / kFileName; }

  /// Cached table, or a freshly computed one that is remembered for the next save().
  ChiTable get(const Partition& lambda);
  bool contains(const Partition& lambda) const;
  std::size_t size() const;
  std::size_t discarded_on_load() const { return discarded_; }
  bool dirty() const;

  nlohmann::json to_json() const;
  /// Atomic: writes a temporary file next to the target and renames it.
  void save();
  /// Forgets all records and removes the file.
  void clear();

 private:
  void load();

  std::filesystem::path dir_;
  std::map<Partition, ChiTable, CanonicalOrder> records_;
  std::size_t discarded_ = 0;
  bool dirty_ = false;
  mutable std::mutex mutex_;
};

}  // namespace superjack
