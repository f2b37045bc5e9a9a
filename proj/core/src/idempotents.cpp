#include "cyclohecke/idempotents.hpp"

#include <algorithm>

#include "cyclohecke/errors.hpp"
#include "cyclohecke/numtheory.hpp"
#include "cyclohecke/periodicity.hpp"

namespace cyclo::idem {

using gf::FieldElement;

std::string to_string(const ResidueSequence& seq) {
  std::string s = "(";
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(seq[i]);
  }
  return s + ")";
}

namespace {

void check_sequence(const Algebra& alg, const ResidueSequence& seq) {
  if (seq.size() != alg.n()) {
    throw ConfigError("residue sequence " + to_string(seq) + " has length " +
                      std::to_string(seq.size()) + ", expected n = " + std::to_string(alg.n()));
  }
}

ResidueSequence reduced(const Algebra& alg, ResidueSequence seq) {
  for (auto& i : seq) i %= alg.params().e;
  return seq;
}

// a^m by squaring, counting products that are not by the identity.
AlgebraElement counted_pow(const Algebra& alg, const AlgebraElement& a, std::uint64_t m,
                           ClosedCost* cost) {
  if (m == 0) return alg.one();
  AlgebraElement result;
  bool have = false;
  AlgebraElement base = a;
  while (true) {
    if (m & 1) {
      if (have) {
        result = result * base;
        if (cost) ++cost->element_multiplications;
      } else {
        result = base;
        have = true;
      }
    }
    m >>= 1;
    if (m == 0) break;
    base = base * base;
    if (cost) ++cost->element_multiplications;
  }
  return result;
}

void search_support(const RegularRep& rep, unsigned r, const Matrix& prefix,
                    ResidueSequence& cur, std::vector<ResidueSequence>& out) {
  if (r > rep.n()) {
    out.push_back(cur);
    return;
  }
  for (unsigned i : rep.spectrum(r)) {
    Matrix next = linalg::mul(rep.field(), prefix, rep.weight_projector(r, i));
    if (next.is_zero()) continue;
    cur.push_back(i);
    search_support(rep, r + 1, next, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<ResidueSequence> residue_support(const RegularRep& rep) {
  std::vector<ResidueSequence> out;
  ResidueSequence cur;
  search_support(rep, 1, Matrix::identity(rep.field(), rep.dimension()), cur, out);
  return out;
}

Matrix spectral_matrix(const RegularRep& rep, const ResidueSequence& seq) {
  check_sequence(rep.algebra(), seq);
  Matrix m = Matrix::identity(rep.field(), rep.dimension());
  for (unsigned r = 1; r <= rep.n(); ++r) {
    m = linalg::mul(rep.field(), m, rep.weight_projector(r, seq[r - 1]));
  }
  return m;
}

AlgebraElement e_spectral(const RegularRep& rep, const ResidueSequence& seq) {
  return rep.from_action_on_one(spectral_matrix(rep, seq));
}

AlgebraElement e_interpolation(const Algebra& alg, const ResidueSequence& raw, std::uint64_t N,
                               const std::vector<ResidueSequence>* support) {
  check_sequence(alg, raw);
  if (N < 1) throw ConfigError("interpolation exponent must be >= 1");
  const ResidueSequence seq = reduced(alg, raw);
  const auto& F = alg.field();
  const unsigned e = alg.params().e;
  AlgebraElement result = alg.one();
  for (unsigned r = 1; r <= alg.n(); ++r) {
    const unsigned ir = seq[r - 1];
    std::vector<unsigned> others;
    for (unsigned j = 0; j < e; ++j) {
      if (j == ir) continue;
      if (support) {
        const bool occurs = std::any_of(support->begin(), support->end(),
                                        [&](const ResidueSequence& s) { return s[r - 1] == j; });
        if (!occurs) continue;
      }
      others.push_back(j);
    }
    if (others.empty()) continue;
    const FieldElement qi = alg.residue_value(ir);
    const AlgebraElement base = alg.scalar(qi) - alg.gen_X(r);
    const AlgebraElement base_n = alg.pow(base, N);
    AlgebraElement factor = alg.one();
    for (unsigned j : others) {
      const FieldElement c = F.pow(F.inv(F.sub(qi, alg.residue_value(j))), N);
      factor = factor * (alg.one() - c * base_n);
    }
    result = result * alg.pow(factor, N);
  }
  return result;
}

AlgebraElement e_closed(const Algebra& alg, const ResidueSequence& raw,
                        std::span<const unsigned> s, ClosedCost* cost) {
  check_sequence(alg, raw);
  if (s.size() != alg.n()) throw ConfigError("need one Frobenius exponent per strand");
  const ResidueSequence seq = reduced(alg, raw);
  const auto& F = alg.field();
  const unsigned p = F.characteristic();
  const unsigned e = alg.params().e;
  const bool deg = alg.params().flavor == hecke::Flavor::kDegenerate;
  if (p == 0 || e == 0) throw ConfigError("closed formulas need p > 0 and e > 0");

  AlgebraElement result;
  bool have = false;
  for (unsigned r = 1; r <= alg.n(); ++r) {
    const unsigned ir = seq[r - 1];
    const std::uint64_t ps = nt::checked_pow(p, s[r - 1]);
    AlgebraElement factor;
    if (deg) {
      if (ir == 0) {
        factor = alg.one() - counted_pow(alg, alg.gen_X(r), (p - 1) * ps, cost);
      } else {
        const AlgebraElement z = counted_pow(alg, alg.gen_X(r), ps, cost);
        const FieldElement inv_i = F.inv(alg.residue_value(ir));
        if (cost) ++cost->scalar_inversions;
        AlgebraElement zk = z;
        FieldElement ck = inv_i;
        factor = alg.zero();
        for (unsigned k = 1; k < p; ++k) {
          if (k > 1) {
            zk = zk * z;
            if (cost) ++cost->element_multiplications;
            ck = F.mul(ck, inv_i);
          }
          factor = factor - ck * zk;
        }
      }
    } else {
      const AlgebraElement z = counted_pow(alg, alg.gen_X(r), ps, cost);
      const FieldElement shift = F.inv(F.pow(alg.params().q, ps * ir));
      if (cost) ++cost->scalar_inversions;
      const AlgebraElement w = shift * z;
      AlgebraElement wk = alg.one();
      factor = alg.one();
      for (unsigned k = 1; k < e; ++k) {
        if (k == 1) {
          wk = w;
        } else {
          wk = wk * w;
          if (cost) ++cost->element_multiplications;
        }
        factor = factor + wk;
      }
    }
    if (have) {
      result = result * factor;
      if (cost) ++cost->element_multiplications;
    } else {
      result = factor;
      have = true;
    }
  }
  if (!deg) {
    const FieldElement e_inv = F.inv(F.from_int(e));
    if (cost) ++cost->scalar_inversions;
    result = F.pow(e_inv, alg.n()) * result;
  }
  return result;
}

std::uint64_t closed_multiplication_bound(const hecke::AlgebraParams& params,
                                          std::span<const unsigned> s) {
  const std::uint64_t p = params.p();
  std::uint64_t total = 0;
  for (unsigned sr : s) {
    std::uint64_t exp = (p - 1) * nt::checked_pow(p, sr);
    unsigned bits = 0;
    for (; exp > 0; exp >>= 1) ++bits;
    total += 2 * bits + std::max<std::uint64_t>(p, params.e);
  }
  return total;
}

AlgebraElement e_closed_auto(const RegularRep& rep, const ResidueSequence& seq,
                             ClosedCost* cost) {
  std::vector<unsigned> s;
  for (unsigned r = 1; r <= rep.n(); ++r) s.push_back(period::nilpotency(rep, r).l);
  return e_closed(rep.algebra(), seq, s, cost);
}

Matrix y_matrix(const RegularRep& rep, unsigned r) {
  const auto& F = rep.field();
  const Algebra& alg = rep.algebra();
  const bool deg = alg.params().flavor == hecke::Flavor::kDegenerate;
  const Matrix& X = rep.X(r);
  Matrix y(rep.dimension(), rep.dimension());
  for (unsigned i : rep.spectrum(r)) {
    Matrix local;
    if (deg) {
      local = linalg::add_scalar(F, X, F.neg(alg.residue_value(i)));
    } else {
      const FieldElement c = F.neg(F.inv(alg.residue_value(i)));
      local = linalg::add_scalar(F, linalg::scale(F, c, X), F.one());
    }
    y = linalg::add(F, y, linalg::mul(F, local, rep.weight_projector(r, i)));
  }
  return y;
}

AlgebraElement y_element(const RegularRep& rep, unsigned r) {
  return rep.from_action_on_one(y_matrix(rep, r));
}

bool IdempotentReport::passed() const {
  if (!orthogonal || !complete || support.empty()) return false;
  return std::all_of(sequences.begin(), sequences.end(), [](const SequenceVerdict& v) {
    return v.idempotent && v.interpolation_equal && v.restricted_equal && v.closed_equal &&
           v.closed_stable;
  });
}

IdempotentReport verify_idempotent_system(const RegularRep& rep, std::size_t outside_limit) {
  const Algebra& alg = rep.algebra();
  const unsigned n = rep.n();
  const unsigned e = alg.params().e;
  const std::uint64_t D = rep.dimension();

  IdempotentReport report;
  report.support = residue_support(rep);
  std::vector<unsigned> l(n);
  for (unsigned r = 1; r <= n; ++r) {
    const auto nil = period::nilpotency(rep, r);
    report.nilpotency.push_back({r, nil.nil_index, nil.l});
    l[r - 1] = nil.l;
  }
  std::vector<unsigned> l_next = l;
  for (auto& x : l_next) ++x;

  auto evaluate = [&](const ResidueSequence& seq, bool supported) {
    SequenceVerdict v;
    v.seq = seq;
    v.supported = supported;
    v.element = e_spectral(rep, seq);
    v.idempotent = (v.element * v.element) == v.element && (v.element.is_zero() != supported);
    v.interpolation_equal = e_interpolation(alg, seq, D) == v.element;
    v.restricted_equal = e_interpolation(alg, seq, D, &report.support) == v.element;
    const AlgebraElement closed = e_closed(alg, seq, l);
    v.closed_equal = closed == v.element;
    v.closed_stable = e_closed(alg, seq, l_next) == closed;
    return v;
  };

  for (const auto& seq : report.support) report.sequences.push_back(evaluate(seq, true));

  // Unsupported sequences in lexicographic order.
  const std::uint64_t total = nt::checked_pow(e, n);
  std::size_t taken = 0;
  for (std::uint64_t code = 0; code < total && taken < outside_limit; ++code) {
    ResidueSequence seq(n);
    std::uint64_t c = code;
    for (unsigned t = n; t-- > 0;) {
      seq[t] = static_cast<unsigned>(c % e);
      c /= e;
    }
    if (std::binary_search(report.support.begin(), report.support.end(), seq)) continue;
    report.sequences.push_back(evaluate(seq, false));
    ++taken;
  }

  report.orthogonal = true;
  AlgebraElement sum = alg.zero();
  for (std::size_t a = 0; a < report.support.size(); ++a) {
    const AlgebraElement& ea = report.sequences[a].element;
    sum = sum + ea;
    for (std::size_t b = 0; b < report.support.size(); ++b) {
      if (a == b) continue;
      if (!(ea * report.sequences[b].element).is_zero()) report.orthogonal = false;
    }
  }
  report.complete = sum == alg.one();
  return report;
}

}  // namespace cyclo::idem
