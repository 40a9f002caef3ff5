#ifndef XHERM_PARTITION_HPP
#define XHERM_PARTITION_HPP

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "xherm/int_poly.hpp"

namespace xherm {

/// Integer partition lambda_1 >= ... >= lambda_r >= 1 (possibly empty).
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 1) throw DomainError("partition parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1]) throw DomainError("partition parts must be weakly decreasing");
    }
  }
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Sorts descending first; `was_sorted` reports whether that changed anything.
  static Partition from_unsorted(std::vector<int> parts, bool* was_sorted = nullptr) {
    bool sorted = std::is_sorted(parts.begin(), parts.end(), std::greater<>());
    if (was_sorted) *was_sorted = sorted;
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
  }

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  /// 1-based part, zero past the end.
  int part(int j) const { return (j >= 1 && j <= length()) ? parts_[static_cast<std::size_t>(j - 1)] : 0; }

  /// Even length with lambda_{2k-1} = lambda_{2k}.
  bool is_even() const {
    if (parts_.size() % 2 != 0) return false;
    for (std::size_t i = 0; i < parts_.size(); i += 2)
      if (parts_[i] != parts_[i + 1]) return false;
    return true;
  }

  /// k_j = lambda_j + r - j, strictly decreasing in j.
  std::vector<int> k_sequence() const {
    std::vector<int> k;
    const int r = length();
    for (int j = 1; j <= r; ++j) k.push_back(part(j) + r - j);
    return k;
  }

  /// Hermite indices in Wronskian column order: k_r, ..., k_1 (ascending).
  std::vector<int> hermite_indices() const {
    std::vector<int> k = k_sequence();
    std::reverse(k.begin(), k.end());
    return k;
  }

  std::string to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
    os << ')';
    return os.str();
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return std::lexicographical_compare_three_way(a.parts_.begin(), a.parts_.end(), b.parts_.begin(),
                                                  b.parts_.end());
  }

 private:
  std::vector<int> parts_;
};

/// The degree sequence N_lambda: n >= |lambda| - r, n != |lambda| + lambda_j - j.
class DegreeSequence {
 public:
  explicit DegreeSequence(Partition lambda) : lambda_(std::move(lambda)) {
    const int s = lambda_.size();
    const int r = lambda_.length();
    for (int n = 0; n < s - r; ++n) forbidden_.insert(n);
    for (int j = 1; j <= r; ++j) forbidden_.insert(s + lambda_.part(j) - j);
  }

  const Partition& partition() const { return lambda_; }
  /// Smallest n for which P_n is defined.
  int min_degree() const { return lambda_.size() - lambda_.length(); }
  const std::set<int>& forbidden() const { return forbidden_; }
  /// Forbidden degrees that are still inside the domain n >= |lambda| - r.
  std::vector<int> forbidden_in_domain() const {
    std::vector<int> out;
    for (int n : forbidden_)
      if (n >= min_degree()) out.push_back(n);
    return out;
  }
  int max_forbidden() const { return forbidden_.empty() ? -1 : *forbidden_.rbegin(); }
  bool contains(int n) const { return n >= min_degree() && !forbidden_.count(n); }

  /// Admissible degrees in [from, to].
  std::vector<int> admissible(int from, int to) const {
    std::vector<int> out;
    for (int n = std::max(from, min_degree()); n <= to; ++n)
      if (contains(n)) out.push_back(n);
    return out;
  }

 private:
  Partition lambda_;
  std::set<int> forbidden_;
};

inline bool is_admissible(const Partition& lambda, int n) {
  const int s = lambda.size();
  if (n < s - lambda.length()) return false;
  for (int j = 1; j <= lambda.length(); ++j)
    if (n == s + lambda.part(j) - j) return false;
  return true;
}

/// Streams the partitions of a fixed size in reverse-lexicographic order:
/// (n), (n-1,1), (n-2,2), (n-2,1,1), ...
class PartitionsOfSize {
 public:
  explicit PartitionsOfSize(int n) {
    if (n < 0) throw DomainError("partition size must be non-negative");
    if (n > 0) cur_.push_back(n);
  }

  const std::vector<int>& current() const { return cur_; }
  bool done() const { return done_; }

  void advance() {
    // Rightmost part > 1 is decremented; the freed units are refilled greedily.
    int rem = 0;
    while (!cur_.empty() && cur_.back() == 1) {
      cur_.pop_back();
      ++rem;
    }
    if (cur_.empty()) {
      done_ = true;
      return;
    }
    int v = --cur_.back();
    ++rem;
    while (rem > 0) {
      int t = std::min(v, rem);
      cur_.push_back(t);
      rem -= t;
    }
  }

 private:
  std::vector<int> cur_;
  bool done_ = false;
};

/// All partitions with min_size <= |lambda| <= max_size, by size then reverse-lex.
inline std::vector<Partition> partitions_up_to(int max_size, int min_size = 1) {
  std::vector<Partition> out;
  for (int s = std::max(0, min_size); s <= max_size; ++s) {
    for (PartitionsOfSize g(s); !g.done(); g.advance()) out.emplace_back(g.current());
  }
  return out;
}

/// Even partitions (mu_1, mu_1, mu_2, mu_2, ...) with |lambda| <= max_size, including ().
inline std::vector<Partition> even_partitions_up_to(int max_size) {
  std::vector<Partition> out;
  for (const Partition& mu : partitions_up_to(max_size / 2, 0)) {
    std::vector<int> doubled;
    for (int p : mu.parts()) {
      doubled.push_back(p);
      doubled.push_back(p);
    }
    out.emplace_back(std::move(doubled));
  }
  return out;
}

/// Parses "4,4,2,2" (whitespace tolerated; empty string is the empty partition).
inline Partition parse_partition(const std::string& spec, bool* was_sorted = nullptr) {
  std::vector<int> parts;
  std::string tok;
  std::istringstream is(spec);
  while (std::getline(is, tok, ',')) {
    auto b = tok.find_first_not_of(" \t()");
    auto e = tok.find_last_not_of(" \t()");
    if (b == std::string::npos) {
      if (spec.find_first_not_of(" \t()") == std::string::npos) break;
      throw DomainError("empty part in partition spec '" + spec + "'");
    }
    tok = tok.substr(b, e - b + 1);
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw DomainError("partition part '" + tok + "' is not an integer");
    }
    if (used != tok.size()) throw DomainError("partition part '" + tok + "' is not an integer");
    if (v < 1) throw DomainError("partition part '" + tok + "' must be a positive integer");
    parts.push_back(v);
  }
  return Partition::from_unsorted(std::move(parts), was_sorted);
}

}  // namespace xherm

#endif  // XHERM_PARTITION_HPP
