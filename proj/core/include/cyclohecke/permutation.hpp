#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace cyclo::hecke {

// Element of S_n in one-line notation, stored 0-based: w(i) = image(i).
// Composition is (u v)(i) = u(v(i)), so s_r w swaps the values r and r+1
// while w s_r swaps positions r and r+1 (r 1-based as in T_r).
class Permutation {
 public:
  Permutation() = default;
  // Takes 0-based one-line notation; throws ConfigError if not a bijection.
  explicit Permutation(std::vector<std::uint8_t> one_line);

  static Permutation identity(unsigned n);
  static Permutation simple(unsigned n, unsigned r);

  unsigned size() const noexcept { return static_cast<unsigned>(img_.size()); }
  unsigned operator()(unsigned i) const noexcept { return img_[i]; }
  const std::vector<std::uint8_t>& one_line() const noexcept { return img_; }

  unsigned length() const noexcept;
  Permutation inverse() const;
  Permutation compose(const Permutation& v) const;  // this * v

  Permutation left_simple(unsigned r) const;   // s_r w
  Permutation right_simple(unsigned r) const;  // w s_r
  // l(s_r w) > l(w): r appears before r+1 in the one-line notation.
  bool left_ascent(unsigned r) const noexcept;

  // A reduced word (r_1, ..., r_k) with w = s_{r_1} ... s_{r_k}.
  std::vector<unsigned> reduced_word() const;

  std::string to_string() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint8_t> img_;
};

// All of S_n ordered by length, then lexicographically by one-line notation.
std::vector<Permutation> enumerate_permutations(unsigned n);

}  // namespace cyclo::hecke
