// Permutations on {0,...,degree-1}.
//
// Global convention, used everywhere in this project:
//   * actions are right actions: x^(g*h) = (x^g)^h
//   * composition is left-to-right: compose(a, b)(x) = b(a(x))
//   * conjugation is t^s = s^-1 * t * s
#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace twg {

inline constexpr int kMaxDegree = 1'000'000;

class Perm {
 public:
  Perm() = default;
  // Validates that `images` is a bijection on {0,...,n-1}.
  explicit Perm(std::vector<int> images);

  static Perm identity(int degree);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int x) const { return img_[static_cast<size_t>(x)]; }
  const std::vector<int>& images() const { return img_; }

  bool is_identity() const;

  friend bool operator==(const Perm& a, const Perm& b) = default;
  friend std::strong_ordering operator<=>(const Perm& a, const Perm& b) {
    return a.img_ <=> b.img_;
  }

 private:
  std::vector<int> img_;
};

// compose(a, b)(x) = b(a(x)); throws on degree mismatch.
Perm compose(const Perm& a, const Perm& b);
Perm inverse(const Perm& a);
// t^s = s^-1 t s
Perm conjugate(const Perm& t, const Perm& s);
// Smallest e >= 1 with a^e = identity.
int element_order(const Perm& a);

std::string to_cycle_string(const Perm& a);

}  // namespace twg
