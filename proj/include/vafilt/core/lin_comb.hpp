#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "vafilt/core/rational.hpp"

namespace vafilt {

using Label = int;

/// Sparse linear combination of basis labels, kept sorted by label with no
/// zero coefficients. The tag keeps algebra and module vectors apart.
template <class Tag>
class LinComb {
 public:
  using Term = std::pair<Label, Rational>;

  LinComb() = default;
  static LinComb basis(Label l) {
    LinComb v;
    v.terms_.emplace_back(l, Rational(1));
    return v;
  }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rational coeff(Label l) const {
    auto it = find(l);
    return (it != terms_.end() && it->first == l) ? it->second : Rational(0);
  }

  void add(Label l, const Rational& c) {
    if (c.is_zero()) return;
    auto it = find(l);
    if (it != terms_.end() && it->first == l) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    } else {
      terms_.insert(it, Term(l, c));
    }
  }

  /// this += c * other
  void add_scaled(const LinComb& other, const Rational& c) {
    if (c.is_zero() || other.terms_.empty()) return;
    std::vector<Term> merged;
    merged.reserve(terms_.size() + other.terms_.size());
    auto a = terms_.begin();
    auto b = other.terms_.begin();
    while (a != terms_.end() || b != other.terms_.end()) {
      if (b == other.terms_.end() || (a != terms_.end() && a->first < b->first)) {
        merged.push_back(std::move(*a++));
      } else if (a == terms_.end() || b->first < a->first) {
        merged.emplace_back(b->first, b->second * c);
        ++b;
      } else {
        Rational s = a->second + b->second * c;
        if (!s.is_zero()) merged.emplace_back(a->first, std::move(s));
        ++a;
        ++b;
      }
    }
    terms_ = std::move(merged);
  }

  LinComb& operator+=(const LinComb& o) {
    add_scaled(o, Rational(1));
    return *this;
  }
  LinComb& operator-=(const LinComb& o) {
    add_scaled(o, Rational(-1));
    return *this;
  }
  LinComb& operator*=(const Rational& c) {
    if (c.is_zero()) {
      terms_.clear();
    } else {
      for (auto& t : terms_) t.second *= c;
    }
    return *this;
  }

  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator*(const Rational& c, LinComb a) { return a *= c; }
  friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }

 private:
  typename std::vector<Term>::iterator find(Label l) {
    return std::lower_bound(terms_.begin(), terms_.end(), l,
                            [](const Term& t, Label x) { return t.first < x; });
  }
  typename std::vector<Term>::const_iterator find(Label l) const {
    return std::lower_bound(terms_.begin(), terms_.end(), l,
                            [](const Term& t, Label x) { return t.first < x; });
  }

  std::vector<Term> terms_;
};

struct AlgebraTag {};
struct ModuleTag {};
using VAElement = LinComb<AlgebraTag>;
using TwistedVector = LinComb<ModuleTag>;

}  // namespace vafilt
