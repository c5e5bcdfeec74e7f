#pragma once

// Truncated Magnus series over non-commuting generators K_i, reduced modulo
// the two-sided ideal of words with a repeated generator.  The quotient is
// exact for mu-invariants with distinct indices, since a repetition-free word
// only factors through repetition-free words with disjoint support.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "mws/diagram.hpp"

namespace mws {

class MagnusSeries {
public:
  using Word = std::vector<int>;

  explicit MagnusSeries(int max_degree) : max_degree_(max_degree) {
    if (max_degree < 0) throw std::invalid_argument("MagnusSeries: negative truncation");
  }

  static MagnusSeries one(int max_degree) {
    MagnusSeries s(max_degree);
    s.terms_[{}] = 1;
    return s;
  }

  /// 1 + K_label
  static MagnusSeries meridian(int label, int max_degree) {
    MagnusSeries s = one(max_degree);
    if (max_degree >= 1) s.terms_[{label}] = 1;
    return s;
  }

  int max_degree() const { return max_degree_; }
  const std::map<Word, long long>& terms() const { return terms_; }

  long long coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? 0 : it->second;
  }

  void add_term(const Word& w, long long coeff) {
    if (coeff == 0 || static_cast<int>(w.size()) > max_degree_ || !repetition_free(w)) return;
    auto& slot = terms_[w];
    slot += coeff;
    if (slot == 0) terms_.erase(w);
  }

  static bool repetition_free(const Word& w) {
    for (size_t i = 0; i < w.size(); ++i)
      for (size_t j = i + 1; j < w.size(); ++j)
        if (w[i] == w[j]) return false;
    return true;
  }

  friend bool operator==(const MagnusSeries& a, const MagnusSeries& b) {
    return a.max_degree_ == b.max_degree_ && a.terms_ == b.terms_;
  }

  friend MagnusSeries operator+(const MagnusSeries& a, const MagnusSeries& b) {
    check_compatible(a, b);
    MagnusSeries out = a;
    for (const auto& [w, c] : b.terms_) out.add_term(w, c);
    return out;
  }

  friend MagnusSeries operator-(const MagnusSeries& a, const MagnusSeries& b) {
    check_compatible(a, b);
    MagnusSeries out = a;
    for (const auto& [w, c] : b.terms_) out.add_term(w, -c);
    return out;
  }

  friend MagnusSeries operator*(const MagnusSeries& a, const MagnusSeries& b) {
    check_compatible(a, b);
    MagnusSeries out(a.max_degree_);
    // Bucket by word length and pre-reject overlapping supports via a label
    // mask; a zero mask intersection proves disjointness, a nonzero one falls
    // back to the exact check.
    struct Item {
      const Word* w;
      std::uint64_t mask;
      long long c;
    };
    auto bucketize = [&](const MagnusSeries& s) {
      std::vector<std::vector<Item>> buckets(s.max_degree_ + 1);
      for (const auto& [w, c] : s.terms_)
        buckets[w.size()].push_back({&w, support_mask(w), c});
      return buckets;
    };
    const auto ba = bucketize(a);
    const auto bb = bucketize(b);
    Word w;
    for (int la = 0; la <= a.max_degree_; ++la)
      for (int lb = 0; la + lb <= a.max_degree_; ++lb)
        for (const auto& ia : ba[la])
          for (const auto& ib : bb[lb]) {
            if ((ia.mask & ib.mask) != 0 && !disjoint(*ia.w, *ib.w)) continue;
            w.assign(ia.w->begin(), ia.w->end());
            w.insert(w.end(), ib.w->begin(), ib.w->end());
            auto& slot = out.terms_[w];
            slot += ia.c * ib.c;
            if (slot == 0) out.terms_.erase(w);
          }
    return out;
  }

private:
  static void check_compatible(const MagnusSeries& a, const MagnusSeries& b) {
    if (a.max_degree_ != b.max_degree_)
      throw std::logic_error("MagnusSeries: mixed truncation degrees");
  }

  static std::uint64_t support_mask(const Word& w) {
    std::uint64_t m = 0;
    for (int label : w) m |= std::uint64_t{1} << (static_cast<unsigned>(label) % 64);
    return m;
  }

  static bool disjoint(const Word& a, const Word& b) {
    for (int x : a)
      for (int y : b)
        if (x == y) return false;
    return true;
  }

  int max_degree_ = 0;
  std::map<Word, long long> terms_;
};

inline MagnusSeries magnus_mul(const MagnusSeries& a, const MagnusSeries& b) { return a * b; }

/// Neumann-series inverse of 1 + (higher terms); exact within the truncation.
inline MagnusSeries magnus_inv(const MagnusSeries& s) {
  if (s.coefficient({}) != 1)
    throw error("magnus_inv: constant term must be 1");
  MagnusSeries higher = s - MagnusSeries::one(s.max_degree());
  MagnusSeries result = MagnusSeries::one(s.max_degree());
  MagnusSeries power = MagnusSeries::one(s.max_degree());
  int sign = 1;
  for (int r = 1; r <= s.max_degree(); ++r) {
    power = power * higher;
    if (power.terms().empty()) break;
    sign = -sign;
    for (const auto& [w, c] : power.terms()) result.add_term(w, sign * c);
  }
  return result;
}

inline long long coefficient(const MagnusSeries& s, const MagnusSeries::Word& w) {
  return s.coefficient(w);
}

/// s raised to +1 or -1.
inline MagnusSeries magnus_pow(const MagnusSeries& s, int exponent) {
  if (exponent == 1) return s;
  if (exponent == -1) return magnus_inv(s);
  throw std::invalid_argument("magnus_pow: exponent must be +1 or -1");
}

/// by^{-exponent} * s * by^{exponent}
inline MagnusSeries conjugate(const MagnusSeries& s, const MagnusSeries& by, int exponent) {
  return magnus_pow(by, -exponent) * s * magnus_pow(by, exponent);
}

}  // namespace mws
