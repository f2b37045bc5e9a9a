#include "cyclohecke/regrep.hpp"

#include <algorithm>
#include <functional>

#include "cyclohecke/errors.hpp"

namespace cyclo::regrep {

using gf::FieldElement;
using hecke::Term;

namespace {

Matrix columns_from(const Algebra& alg, const std::function<std::vector<Term>(std::span<const Term>)>& act) {
  const std::size_t D = alg.dimension();
  Matrix m(D, D);
  for (std::size_t j = 0; j < D; ++j) {
    const Term unit{static_cast<std::uint32_t>(j), alg.field().one()};
    for (const auto& t : act({&unit, 1})) m.at(t.index, j) = t.coeff;
  }
  return m;
}

}  // namespace

Matrix generator_matrix_T(const Algebra& alg, unsigned r) {
  return columns_from(alg, [&](std::span<const Term> v) { return alg.apply_T(r, v); });
}

Matrix generator_matrix_X(const Algebra& alg, unsigned r) {
  return columns_from(alg, [&](std::span<const Term> v) { return alg.apply_X(r, v); });
}

std::shared_ptr<const RegularRep> RegularRep::build(std::shared_ptr<const Algebra> alg) {
  if (!alg) throw ConfigError("regular representation needs an algebra");
  std::shared_ptr<RegularRep> rep(new RegularRep(std::move(alg)));
  const Algebra& A = *rep->alg_;
  const auto& F = A.field();
  const unsigned n = A.n();
  const unsigned e = A.params().e;
  for (unsigned r = 1; r < n; ++r) rep->t_.push_back(generator_matrix_T(A, r));
  for (unsigned r = 1; r <= n; ++r) {
    rep->x_.push_back(generator_matrix_X(A, r));
    rep->min_x_.push_back(linalg::min_poly(F, rep->x_.back()));
    std::vector<Matrix> proj;
    std::vector<unsigned> spec;
    for (unsigned i = 0; i < e; ++i) {
      proj.push_back(linalg::crt_projector(F, rep->x_.back(), rep->min_x_.back(),
                                           A.residue_value(i)));
      if (!proj.back().is_zero()) spec.push_back(i);
    }
    rep->projectors_.push_back(std::move(proj));
    rep->spectrum_.push_back(std::move(spec));
  }
  return rep;
}

const Matrix& RegularRep::weight_projector(unsigned r, unsigned residue) const {
  return projectors_.at(r - 1).at(residue % alg_->params().e);
}

Matrix RegularRep::to_matrix(const AlgebraElement& a) const {
  if (a.algebra_ptr() != alg_) throw std::invalid_argument("to_matrix: element of another algebra");
  const std::size_t D = dimension();
  Matrix m(D, D);
  for (std::size_t j = 0; j < D; ++j) {
    const AlgebraElement col = a * alg_->basis_element(j);
    for (const auto& t : col.terms()) m.at(t.index, j) = t.coeff;
  }
  return m;
}

AlgebraElement RegularRep::from_action_on_one(const Matrix& m) const {
  return alg_->from_coords(m.column(0));
}

std::vector<RelationResult> relation_check(const RegularRep& rep) {
  const Algebra& A = rep.algebra();
  const auto& F = A.field();
  const unsigned n = A.n();
  const std::size_t D = A.dimension();
  const bool deg = A.params().flavor == hecke::Flavor::kDegenerate;
  const FieldElement q = A.params().q;
  const Matrix I = Matrix::identity(F, D);
  auto mul = [&](const Matrix& a, const Matrix& b) { return linalg::mul(F, a, b); };
  auto commute = [&](const Matrix& a, const Matrix& b) { return mul(a, b) == mul(b, a); };
  const std::string t = deg ? "s" : "T";
  const std::string x = deg ? "x" : "X";

  std::vector<RelationResult> out;
  for (unsigned r = 1; r < n; ++r) {
    const Matrix& Tr = rep.T(r);
    const Matrix sq = mul(Tr, Tr);
    if (deg) {
      out.push_back({"s" + std::to_string(r) + "^2 = 1", sq == I});
    } else {
      const Matrix rhs = linalg::add(F, linalg::scale(F, F.sub(q, F.one()), Tr),
                                     linalg::scale(F, q, I));
      out.push_back({"T" + std::to_string(r) + "^2 = (q-1)T" + std::to_string(r) + " + q",
                     sq == rhs});
    }
  }
  for (unsigned r = 1; r + 1 < n; ++r) {
    const Matrix& a = rep.T(r);
    const Matrix& b = rep.T(r + 1);
    out.push_back({"braid " + t + std::to_string(r) + t + std::to_string(r + 1),
                   mul(mul(a, b), a) == mul(mul(b, a), b)});
  }
  for (unsigned r = 1; r < n; ++r) {
    for (unsigned s = r + 2; s < n; ++s) {
      out.push_back({t + std::to_string(r) + " commutes with " + t + std::to_string(s),
                     commute(rep.T(r), rep.T(s))});
    }
  }
  for (unsigned r = 1; r <= n; ++r) {
    for (unsigned s = r + 1; s <= n; ++s) {
      out.push_back({x + std::to_string(r) + " commutes with " + x + std::to_string(s),
                     commute(rep.X(r), rep.X(s))});
    }
  }
  for (unsigned r = 1; r < n; ++r) {
    const Matrix& Tr = rep.T(r);
    if (deg) {
      const Matrix lhs = mul(Tr, rep.X(r + 1));
      const Matrix rhs = linalg::add(F, mul(rep.X(r), Tr), I);
      out.push_back({"s" + std::to_string(r) + " x" + std::to_string(r + 1) + " = x" +
                         std::to_string(r) + " s" + std::to_string(r) + " + 1",
                     lhs == rhs});
    } else {
      const Matrix lhs = mul(mul(Tr, rep.X(r)), Tr);
      const Matrix rhs = linalg::scale(F, q, rep.X(r + 1));
      out.push_back({"T" + std::to_string(r) + " X" + std::to_string(r) + " T" +
                         std::to_string(r) + " = q X" + std::to_string(r + 1),
                     lhs == rhs});
    }
    for (unsigned s = 1; s <= n; ++s) {
      if (s == r || s == r + 1) continue;
      out.push_back({t + std::to_string(r) + " commutes with " + x + std::to_string(s),
                     commute(Tr, rep.X(s))});
    }
  }
  if (!deg) {
    out.push_back({"X1 invertible", linalg::rank(F, rep.X(1)) == D});
  }
  out.push_back({"cyclotomic relation",
                 linalg::eval(F, A.cyclotomic_polynomial(), rep.X(1)).is_zero()});
  return out;
}

bool all_passed(const std::vector<RelationResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const RelationResult& r) { return r.passed; });
}

}  // namespace cyclo::regrep
