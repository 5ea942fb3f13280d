#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace superjack {

/// Integer partition: weakly decreasing positive parts. The empty partition has weight 0.
class Partition {
 public:
  Partition() = default;
  /// Throws InvalidArgument unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Parses "3,1" (or "" for the empty partition).
  static Partition parse(std::string_view text);
  std::string to_string() const;

  int weight() const { return weight_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  /// Zero-padded part access, 0-based.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  const std::vector<int>& parts() const { return parts_; }
  auto begin() const { return parts_.begin(); }
  auto end() const { return parts_.end(); }

  /// Lexicographic on the parts; a linear extension of dominance within a weight class.
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }
  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

/// Orders by weight ascending, then reverse-lexicographically. Used for every serialized list.
struct CanonicalOrder {
  bool operator()(const Partition& a, const Partition& b) const {
    if (a.weight() != b.weight()) return a.weight() < b.weight();
    return b < a;
  }
};

/// Dominance order; throws InvalidArgument when weights differ.
bool dominance_leq(const Partition& mu, const Partition& lambda);

Partition conjugate(const Partition& lambda);

/// z_lambda = prod_i i^{m_i} m_i!
mpz_class z_factor(const Partition& lambda);

/// lambda_{n+1} <= m, i.e. lambda fits the (n,m)-hook.
bool in_hook(const Partition& lambda, int n, int m);

/// All partitions of d in reverse-lexicographic order, (d) first.
std::vector<Partition> partitions_of(int d);

/// Partitions of every weight 0..max_weight in canonical order.
std::vector<Partition> partitions_up_to(int max_weight);

}  // namespace superjack
