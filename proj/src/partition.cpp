#include "superjack/partition.hpp"

#include <algorithm>
#include <charconv>
#include <map>

#include "superjack/errors.hpp"

namespace superjack {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw InvalidArgument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw InvalidArgument("partition parts must be weakly decreasing");
    weight_ += parts_[i];
  }
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  if (text.empty()) return Partition();
  std::size_t pos = 0;
  while (true) {
    auto comma = text.find(',', pos);
    auto token = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
      throw InvalidArgument("malformed partition '" + std::string(text) + "'");
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

bool dominance_leq(const Partition& mu, const Partition& lambda) {
  if (mu.weight() != lambda.weight()) throw InvalidArgument("dominance order needs equal weights");
  int len = std::max(mu.length(), lambda.length());
  int sum_mu = 0, sum_lambda = 0;
  for (int i = 0; i < len; ++i) {
    sum_mu += mu[i];
    sum_lambda += lambda[i];
    if (sum_mu > sum_lambda) return false;
  }
  return true;
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> cols;
  for (int j = 0; j < lambda[0]; ++j) {
    int c = 0;
    while (lambda[c] > j) ++c;
    cols.push_back(c);
  }
  return Partition(std::move(cols));
}

mpz_class z_factor(const Partition& lambda) {
  std::map<int, int> multiplicity;
  for (int p : lambda) ++multiplicity[p];
  mpz_class z = 1;
  for (auto [part, mult] : multiplicity) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), mult);
    mpz_class pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), part, mult);
    z *= pw * f;
  }
  return z;
}

bool in_hook(const Partition& lambda, int n, int m) {
  return lambda[static_cast<std::size_t>(n)] <= m;
}

namespace {

void enumerate(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    enumerate(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int d) {
  if (d < 0) throw InvalidArgument("negative weight");
  std::vector<Partition> out;
  std::vector<int> prefix;
  enumerate(d, d, prefix, out);
  return out;
}

std::vector<Partition> partitions_up_to(int max_weight) {
  std::vector<Partition> out;
  for (int d = 0; d <= max_weight; ++d) {
    auto part = partitions_of(d);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace superjack
