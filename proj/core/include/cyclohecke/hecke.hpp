#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "cyclohecke/gf.hpp"
#include "cyclohecke/permutation.hpp"
#include "cyclohecke/poly.hpp"

namespace cyclo::hecke {

enum class Flavor { kDegenerate, kNonDegenerate };

std::string to_string(Flavor f);

// Parameters of H_n^Lambda. Lambda is recorded as the multiset kappa of
// residues, so (Lambda, alpha_i) is the multiplicity of i in kappa.
struct AlgebraParams {
  Flavor flavor = Flavor::kDegenerate;
  std::shared_ptr<const gf::Field> field;
  gf::FieldElement q;  // 1 iff degenerate
  unsigned e = 0;      // quantum characteristic
  unsigned n = 1;
  std::vector<unsigned> kappa;  // sorted ascending, entries in [0, e)

  unsigned ell() const noexcept { return static_cast<unsigned>(kappa.size()); }
  // Lambda = ell * Lambda_0.
  bool kappa_all_zero() const noexcept;
  std::uint32_t p() const noexcept { return field->characteristic(); }

  // GF(p), q = 1, e = p.
  static AlgebraParams degenerate(std::uint32_t p, unsigned n, std::vector<unsigned> kappa);
  // Smallest GF(p^k) containing an element of order e; q is the first such
  // element in code order.
  static AlgebraParams nondegenerate(std::uint32_t p, unsigned e, unsigned n,
                                     std::vector<unsigned> kappa);
  static AlgebraParams nondegenerate(std::shared_ptr<const gf::Field> field, gf::FieldElement q,
                                     unsigned n, std::vector<unsigned> kappa);

  // Throws ConfigError on any violated invariant.
  void validate() const;
  std::string describe() const;
};

// ell^n * n!, throwing ConfigError on overflow.
std::uint64_t dimension(unsigned ell, unsigned n);

// X_1^{a_1} ... X_n^{a_n} T_w with 0 <= a_t < ell.
struct NormalWord {
  std::vector<unsigned> exponents;
  Permutation w;

  friend bool operator==(const NormalWord&, const NormalWord&) = default;
};

struct Term {
  std::uint32_t index;  // position in the basis enumeration
  gf::FieldElement coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

// Intentional corruptions of the straightening rules. Used as mutation
// fixtures: relation checks must catch every one of these.
enum class Fault {
  kNone,
  kCommutationShift,    // adds 1 to the coefficient of the T_r / X correction terms
  kCyclotomicConstant,  // perturbs the constant term of the X_1 reduction
};

std::string to_string(Fault f);
Fault fault_from_string(const std::string& s);

struct AlgebraOptions {
  std::uint64_t size_cap = 5000;
  Fault fault = Fault::kNone;
  // Step budget per straightening call; 0 selects a bound derived from the
  // dimension.
  std::uint64_t fuel = 0;
};

class AlgebraElement;

// H_n^Lambda with the basis {X^a T_w}. Left multiplication by T_r and X_t
// on basis words is precomputed as sparse columns at construction; general
// products are evaluated by writing the left factor as generator words.
class Algebra : public std::enable_shared_from_this<Algebra> {
 public:
  static std::shared_ptr<const Algebra> create(AlgebraParams params,
                                               AlgebraOptions options = {});

  const AlgebraParams& params() const noexcept { return params_; }
  const gf::Field& field() const noexcept { return *params_.field; }
  unsigned n() const noexcept { return params_.n; }
  std::size_t dimension() const noexcept { return basis_.size(); }
  Fault fault() const noexcept { return options_.fault; }

  // Deterministic order: exponent vector lexicographic, then permutation by
  // length, then lexicographic one-line notation.
  const std::vector<NormalWord>& basis() const noexcept { return basis_; }
  std::size_t index_of(const NormalWord& word) const;

  // q_i: i in the degenerate flavor, q^i otherwise. i is reduced mod e.
  gf::FieldElement residue_value(unsigned i) const;
  // prod_c (x - q_{kappa_c}).
  gf::Polynomial cyclotomic_polynomial() const;

  AlgebraElement zero() const;
  AlgebraElement one() const;
  AlgebraElement scalar(gf::FieldElement c) const;
  AlgebraElement basis_element(std::size_t index) const;
  AlgebraElement gen_T(unsigned r) const;  // 1 <= r < n
  AlgebraElement gen_X(unsigned r) const;  // 1 <= r <= n

  AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b) const;
  AlgebraElement sub(const AlgebraElement& a, const AlgebraElement& b) const;
  AlgebraElement scale(gf::FieldElement c, const AlgebraElement& a) const;
  AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b) const;
  AlgebraElement pow(const AlgebraElement& a, std::uint64_t m) const;
  AlgebraElement jm_power(unsigned r, std::uint64_t m) const;

  // Left action on sparse coordinate vectors (sorted by index).
  std::vector<Term> apply_T(unsigned r, std::span<const Term> v) const;
  std::vector<Term> apply_X(unsigned t, std::span<const Term> v) const;

  AlgebraElement from_terms(std::vector<Term> terms) const;
  AlgebraElement from_coords(std::span<const gf::FieldElement> coords) const;

 private:
  struct ActionTable {
    std::vector<std::uint32_t> offset;  // size D + 1
    std::vector<Term> terms;
    std::span<const Term> column(std::size_t j) const {
      return {terms.data() + offset[j], terms.data() + offset[j + 1]};
    }
  };

  class Accumulator;

  Algebra(AlgebraParams params, AlgebraOptions options);
  void build_tables();
  std::size_t perm_position(const Permutation& w) const;
  std::size_t exponent_index(std::span<const unsigned> a) const;
  std::vector<Term> apply_table(const ActionTable& table, std::span<const Term> v,
                                Accumulator& acc, std::uint64_t& fuel) const;
  std::vector<Term> apply_word(std::size_t index, std::span<const Term> v,
                               Accumulator& acc, std::uint64_t& fuel) const;
  void charge(std::uint64_t& fuel, std::uint64_t amount) const;

  AlgebraParams params_;
  AlgebraOptions options_;
  std::vector<NormalWord> basis_;
  std::vector<Permutation> perms_;
  std::vector<std::uint32_t> lex_to_pos_;
  std::vector<std::vector<unsigned>> reduced_words_;  // per permutation position
  std::vector<ActionTable> t_tables_;  // index r - 1
  std::vector<ActionTable> x_tables_;  // index t - 1
  std::uint64_t fuel_per_call_ = 0;
};

// Sparse linear combination of normal words with no stored zeros. Value
// semantics; keeps its algebra alive.
class AlgebraElement {
 public:
  AlgebraElement() = default;

  const Algebra& algebra() const { return *alg_; }
  const std::shared_ptr<const Algebra>& algebra_ptr() const noexcept { return alg_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  gf::FieldElement coefficient(std::size_t index) const;

  AlgebraElement operator+(const AlgebraElement& b) const { return alg_->add(*this, b); }
  AlgebraElement operator-(const AlgebraElement& b) const { return alg_->sub(*this, b); }
  AlgebraElement operator*(const AlgebraElement& b) const { return alg_->mul(*this, b); }
  AlgebraElement operator-() const { return alg_->scale(alg_->field().neg(alg_->field().one()), *this); }
  friend AlgebraElement operator*(gf::FieldElement c, const AlgebraElement& a) {
    return a.alg_->scale(c, a);
  }

  // Same algebra instance and identical terms.
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.alg_ == b.alg_ && a.terms_ == b.terms_;
  }

  std::string to_string() const;

 private:
  friend class Algebra;
  AlgebraElement(std::shared_ptr<const Algebra> alg, std::vector<Term> terms)
      : alg_(std::move(alg)), terms_(std::move(terms)) {}

  std::shared_ptr<const Algebra> alg_;
  std::vector<Term> terms_;
};

}  // namespace cyclo::hecke
