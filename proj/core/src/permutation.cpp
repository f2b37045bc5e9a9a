#include "cyclohecke/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "cyclohecke/errors.hpp"

namespace cyclo::hecke {

Permutation::Permutation(std::vector<std::uint8_t> one_line) : img_(std::move(one_line)) {
  std::vector<bool> seen(img_.size(), false);
  for (auto v : img_) {
    if (v >= img_.size() || seen[v]) throw ConfigError("not a permutation");
    seen[v] = true;
  }
}

Permutation Permutation::identity(unsigned n) {
  std::vector<std::uint8_t> v(n);
  std::iota(v.begin(), v.end(), 0);
  Permutation w;
  w.img_ = std::move(v);
  return w;
}

Permutation Permutation::simple(unsigned n, unsigned r) {
  if (r < 1 || r >= n) throw ConfigError("simple reflection index out of range");
  Permutation w = identity(n);
  std::swap(w.img_[r - 1], w.img_[r]);
  return w;
}

unsigned Permutation::length() const noexcept {
  unsigned inv = 0;
  for (std::size_t i = 0; i < img_.size(); ++i) {
    for (std::size_t j = i + 1; j < img_.size(); ++j) {
      if (img_[i] > img_[j]) ++inv;
    }
  }
  return inv;
}

Permutation Permutation::inverse() const {
  Permutation w;
  w.img_.resize(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) w.img_[img_[i]] = static_cast<std::uint8_t>(i);
  return w;
}

Permutation Permutation::compose(const Permutation& v) const {
  Permutation w;
  w.img_.resize(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) w.img_[i] = img_[v.img_[i]];
  return w;
}

Permutation Permutation::left_simple(unsigned r) const {
  Permutation w = *this;
  for (auto& v : w.img_) {
    if (v == r - 1) {
      v = static_cast<std::uint8_t>(r);
    } else if (v == r) {
      v = static_cast<std::uint8_t>(r - 1);
    }
  }
  return w;
}

Permutation Permutation::right_simple(unsigned r) const {
  Permutation w = *this;
  std::swap(w.img_[r - 1], w.img_[r]);
  return w;
}

bool Permutation::left_ascent(unsigned r) const noexcept {
  for (auto v : img_) {
    if (v == r - 1) return true;
    if (v == r) return false;
  }
  return false;
}

std::vector<unsigned> Permutation::reduced_word() const {
  std::vector<unsigned> word;
  Permutation w = *this;
  const unsigned n = size();
  while (true) {
    unsigned r = 1;
    for (; r < n; ++r) {
      if (!w.left_ascent(r)) break;
    }
    if (r >= n) break;
    word.push_back(r);
    w = w.left_simple(r);
  }
  return word;
}

std::string Permutation::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(img_[i] + 1);
  }
  return s + "]";
}

std::vector<Permutation> enumerate_permutations(unsigned n) {
  std::vector<std::uint8_t> v(n);
  std::iota(v.begin(), v.end(), 0);
  std::vector<Permutation> all;
  do {
    all.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  // next_permutation already yields lexicographic order; stable by length.
  std::stable_sort(all.begin(), all.end(), [](const Permutation& a, const Permutation& b) {
    return a.length() < b.length();
  });
  return all;
}

}  // namespace cyclo::hecke
