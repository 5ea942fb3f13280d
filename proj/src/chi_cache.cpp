#include "superjack/chi_cache.hpp"

#include <cstdlib>
#include <fstream>
#include <unistd.h>

#include "superjack/errors.hpp"
#include "superjack/json_io.hpp"

namespace superjack {

ChiCache::ChiCache(std::filesystem::path dir) : dir_(std::move(dir)) { load(); }

std::filesystem::path ChiCache::default_dir() {
  if (const char* env = std::getenv("SUPERJACK_CACHE"); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return std::filesystem::path(xdg) / "superjack";
  if (const char* home = std::getenv("HOME"); home && *home) return std::filesystem::path(home) / ".cache" / "superjack";
  return ".superjack-cache";
}

void ChiCache::load() {
  std::ifstream in(file());
  if (!in) return;
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception&) {
    dirty_ = true;  // unreadable file: rewrite on next save
    return;
  }
  const auto& header = j.value("header", nlohmann::json::object());
  if (header.value("format_version", 0) != kFormatVersion || header.value("convention", "") != "k-inverse-alpha") {
    dirty_ = true;
    return;
  }
  for (const auto& record : j.value("records", nlohmann::json::array())) {
    try {
      ChiTable t = json_io::chi_from_json(record);
      if (satisfies_jack_characterization(t)) {
        records_.emplace(t.lambda, std::move(t));
        continue;
      }
    } catch (const Error&) {
    }
    ++discarded_;
    dirty_ = true;
  }
}

ChiTable ChiCache::get(const Partition& lambda) {
  {
    std::lock_guard lock(mutex_);
    auto it = records_.find(lambda);
    if (it != records_.end()) return it->second;
  }
  ChiTable t = chi_table(lambda);
  std::lock_guard lock(mutex_);
  records_.emplace(lambda, t);
  dirty_ = true;
  return t;
}

bool ChiCache::contains(const Partition& lambda) const {
  std::lock_guard lock(mutex_);
  return records_.count(lambda) > 0;
}

std::size_t ChiCache::size() const {
  std::lock_guard lock(mutex_);
  return records_.size();
}

bool ChiCache::dirty() const {
  std::lock_guard lock(mutex_);
  return dirty_;
}

nlohmann::json ChiCache::to_json() const {
  std::lock_guard lock(mutex_);
  nlohmann::json records = nlohmann::json::array();
  for (const auto& [lambda, t] : records_) records.push_back(json_io::to_json(t));
  return {{"header", {{"format_version", kFormatVersion}, {"convention", "k-inverse-alpha"}}},
          {"records", std::move(records)}};
}

void ChiCache::save() {
  std::filesystem::create_directories(dir_);
  std::string text = json_io::canonical(to_json());
  auto tmp = dir_ / (std::string(kFileName) + ".tmp." + std::to_string(::getpid()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write cache file " + tmp.string());
    out << text;
    if (!out.flush()) throw Error("cannot write cache file " + tmp.string());
  }
  std::filesystem::rename(tmp, file());
  std::lock_guard lock(mutex_);
  dirty_ = false;
}

void ChiCache::clear() {
  std::lock_guard lock(mutex_);
  records_.clear();
  discarded_ = 0;
  dirty_ = false;
  std::error_code ec;
  std::filesystem::remove(file(), ec);
}

}  // namespace superjack
