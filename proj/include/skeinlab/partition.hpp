#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "skeinlab/laurent.hpp"

namespace skeinlab {

struct FrobeniusForm {
  std::vector<int> arms;  // strictly decreasing, >= 0
  std::vector<int> legs;  // strictly decreasing, >= 0

  friend bool operator==(const FrobeniusForm&, const FrobeniusForm&) = default;
};

// A weakly decreasing list of positive parts; the empty list is the empty
// partition.  Ordered by size, then by parts in decreasing lexicographic order
// ((2) before (1,1)), which is the order used for every map keyed by
// partitions.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  // "2,1"; the empty partition is spelled "0".
  static Partition parse(const std::string& text) {
    if (text == "0" || text.empty()) return Partition();
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t comma = text.find(',', pos);
      std::string piece = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                      : comma - pos);
      std::size_t used = 0;
      int value = 0;
      try {
        value = std::stoi(piece, &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad partition text: '" + text + "'");
      }
      if (used != piece.size()) throw std::invalid_argument("bad partition text: '" + text + "'");
      parts.push_back(value);
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    return Partition(std::move(parts));
  }

  std::string to_string() const {
    if (parts_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(parts_[i]);
    }
    return out;
  }

  const std::vector<int>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  std::size_t length() const { return parts_.size(); }
  int size() const {
    int n = 0;
    for (int p : parts_) n += p;
    return n;
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    // Larger parts first within a size.
    return b.parts_ <=> a.parts_;
  }

  Partition conjugate() const {
    std::vector<int> conj;
    if (!parts_.empty()) {
      conj.assign(static_cast<std::size_t>(parts_[0]), 0);
      for (int p : parts_)
        for (int j = 0; j < p; ++j) ++conj[static_cast<std::size_t>(j)];
    }
    return Partition(std::move(conj));
  }

  // Cells as (row, column), 1-based.
  std::vector<std::pair<int, int>> cells() const {
    std::vector<std::pair<int, int>> out;
    for (std::size_t i = 0; i < parts_.size(); ++i)
      for (int j = 1; j <= parts_[i]; ++j) out.emplace_back(static_cast<int>(i) + 1, j);
    return out;
  }

  // Contents j - i of all cells, row by row.
  std::vector<int> contents() const {
    std::vector<int> out;
    for (auto [i, j] : cells()) out.push_back(j - i);
    return out;
  }

  FrobeniusForm frobenius() const {
    FrobeniusForm f;
    Partition conj = conjugate();
    for (std::size_t i = 0; i < parts_.size() && parts_[i] > static_cast<int>(i); ++i) {
      f.arms.push_back(parts_[i] - static_cast<int>(i) - 1);
      f.legs.push_back(conj.parts_[i] - static_cast<int>(i) - 1);
    }
    return f;
  }

  static Partition from_frobenius(const FrobeniusForm& f) {
    if (f.arms.size() != f.legs.size())
      throw std::invalid_argument("frobenius: arms and legs differ in length");
    const std::size_t k = f.arms.size();
    for (std::size_t i = 0; i < k; ++i) {
      if (f.arms[i] < 0 || f.legs[i] < 0 ||
          (i > 0 && (f.arms[i] >= f.arms[i - 1] || f.legs[i] >= f.legs[i - 1])))
        throw std::invalid_argument("frobenius: arms and legs must strictly decrease");
    }
    // Rows above the Durfee square come from the arms, columns from the legs;
    // a row r >= k meets column j < k iff r <= legs[j] + j.
    std::vector<int> parts;
    for (std::size_t i = 0; i < k; ++i) parts.push_back(f.arms[i] + static_cast<int>(i) + 1);
    const int rows = k == 0 ? 0 : f.legs[0] + 1;
    for (int r = static_cast<int>(k); r < rows; ++r) {
      int len = 0;
      for (std::size_t j = 0; j < k; ++j)
        if (r <= f.legs[j] + static_cast<int>(j)) ++len;
      parts.push_back(len);
    }
    return Partition(std::move(parts));
  }

  // All partitions obtained by adding one cell, in partition order.
  std::vector<Partition> plus() const {
    std::vector<Partition> out;
    for (std::size_t i = 0; i <= parts_.size(); ++i) {
      if (i == parts_.size() || i == 0 || parts_[i - 1] > parts_[i]) {
        std::vector<int> p = parts_;
        if (i == p.size()) p.push_back(1);
        else ++p[i];
        out.emplace_back(std::move(p));
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // All partitions obtained by deleting one cell, in partition order.
  std::vector<Partition> minus() const {
    std::vector<Partition> out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i + 1 == parts_.size() || parts_[i] > parts_[i + 1]) {
        std::vector<int> p = parts_;
        if (--p[i] == 0) p.pop_back();
        out.emplace_back(std::move(p));
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // rho^+ and rho^- together, in partition order.
  std::vector<Partition> neighbors() const {
    std::vector<Partition> out = minus();
    for (auto& p : plus()) out.push_back(std::move(p));
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  std::vector<int> parts_;
};

enum class NeighborKind { plus, minus };

inline std::vector<Partition> neighbors(const Partition& rho, NeighborKind which) {
  return which == NeighborKind::plus ? rho.plus() : rho.minus();
}

// Partitions of n, largest parts first.
inline void partitions_of_size(int n, int max_part, std::vector<int>& prefix,
                               std::vector<Partition>& out) {
  if (n == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    prefix.push_back(p);
    partitions_of_size(n - p, p, prefix, out);
    prefix.pop_back();
  }
}

// Every partition of size <= n, ordered by size and then with larger parts
// first.
inline std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw std::invalid_argument("enumerate: n must be non-negative");
  std::vector<Partition> out;
  std::vector<int> prefix;
  for (int k = 0; k <= n; ++k) partitions_of_size(k, k, prefix, out);
  return out;
}

// C_lambda(t) = sum over cells of t^content; t is carried in the s slot.
inline LaurentPoly content_polynomial(const Partition& lambda,
                                      Characteristic ch = Characteristic::zero) {
  std::vector<LaurentPoly::Term> raw;
  for (int c : lambda.contents()) raw.push_back({LaurentPoly::make_key(0, c), 1});
  return LaurentPoly::from_terms(std::move(raw), ch);
}

// Checks (s - s^-1) C_lambda(s^2) == sum_i (s^(2a_i+1) - s^(-2b_i-1)) exactly.
inline bool frobenius_identity_check(const Partition& lambda) {
  LaurentPoly lhs = LaurentPoly::quantum_factor(1) * content_polynomial(lambda).substitute_powers(1, 2);
  LaurentPoly rhs;
  FrobeniusForm f = lambda.frobenius();
  for (std::size_t i = 0; i < f.arms.size(); ++i)
    rhs += LaurentPoly::s(2 * f.arms[i] + 1) - LaurentPoly::s(-2 * f.legs[i] - 1);
  return lhs == rhs;
}

}  // namespace skeinlab
