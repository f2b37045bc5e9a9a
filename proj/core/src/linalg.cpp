#include "cyclohecke/linalg.hpp"

#include <stdexcept>

namespace cyclo::linalg {

namespace {

void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument(std::string(op) + ": shape mismatch");
  }
}

// Gaussian elimination to reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(const Field& F, Matrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t piv = row;
    while (piv < a.rows() && a(piv, col).code == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != row) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(piv, j), a.at(row, j));
    }
    const FieldElement inv = F.inv(a(row, col));
    for (std::size_t j = col; j < a.cols(); ++j) a.at(row, j) = F.mul(inv, a(row, j));
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row) continue;
      const FieldElement f = a(i, col);
      if (f.code == 0) continue;
      for (std::size_t j = col; j < a.cols(); ++j) {
        a.at(i, j) = F.sub(a(i, j), F.mul(f, a(row, j)));
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

// Incremental echelon basis: each stored row has its pivot normalised to 1,
// and every row is zero at earlier rows' pivots.
class EchelonSet {
 public:
  explicit EchelonSet(const Field& F) : F_(F) {}

  // Reduces v in place against the stored rows. Returns the coefficients
  // used (one per stored row) when track is true.
  void reduce(Vector& v, Vector* used) const {
    if (used) used->assign(rows_.size(), FieldElement{});
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const FieldElement c = v[pivots_[k]];
      if (c.code == 0) continue;
      if (used) (*used)[k] = c;
      const Vector& r = rows_[k];
      for (std::size_t j = 0; j < v.size(); ++j) {
        if (r[j].code != 0) v[j] = F_.sub(v[j], F_.mul(c, r[j]));
      }
    }
  }

  bool contains(Vector v) const {
    reduce(v, nullptr);
    for (auto x : v) {
      if (x.code != 0) return false;
    }
    return true;
  }

  // v must already be reduced and nonzero.
  void insert(Vector v) {
    std::size_t piv = 0;
    while (v[piv].code == 0) ++piv;
    const FieldElement inv = F_.inv(v[piv]);
    for (auto& x : v) x = F_.mul(inv, x);
    rows_.push_back(std::move(v));
    pivots_.push_back(piv);
  }

  std::size_t size() const noexcept { return rows_.size(); }

 private:
  const Field& F_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace

Matrix Matrix::identity(const Field& F, std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = F.one();
  return m;
}

Vector Matrix::column(std::size_t j) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

bool Matrix::is_zero() const noexcept {
  for (auto x : data_) {
    if (x.code != 0) return false;
  }
  return true;
}

bool Matrix::is_identity(const Field& F) const noexcept {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if ((*this)(i, j) != (i == j ? F.one() : F.zero())) return false;
    }
  }
  return true;
}

Matrix add(const Field& F, const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "add");
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = F.add(a(i, j), b(i, j));
  }
  return c;
}

Matrix sub(const Field& F, const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "sub");
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = F.sub(a(i, j), b(i, j));
  }
  return c;
}

Matrix scale(const Field& F, FieldElement s, const Matrix& a) {
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = F.mul(s, a(i, j));
  }
  return c;
}

Matrix add_scalar(const Field& F, const Matrix& a, FieldElement s) {
  if (!a.is_square()) throw std::invalid_argument("add_scalar: matrix is not square");
  Matrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i) c.at(i, i) = F.add(c(i, i), s);
  return c;
}

Matrix mul(const Field& F, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("mul: shape mismatch");
  Matrix c(a.rows(), b.cols());
  const std::size_t n = b.cols();
  if (F.is_prime_field()) {
    // Accumulate in 64 bits, reduce once per entry.
    const std::uint64_t p = F.characteristic();
    const std::uint64_t flush = UINT64_MAX / ((p - 1) * (p - 1) + 1) - 1;
    std::vector<std::uint64_t> acc(n);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      std::fill(acc.begin(), acc.end(), 0);
      std::uint64_t pending = 0;
      for (std::size_t k = 0; k < a.cols(); ++k) {
        const std::uint64_t x = a(i, k).code;
        if (x == 0) continue;
        const auto brow = b.row(k);
        for (std::size_t j = 0; j < n; ++j) acc[j] += x * brow[j].code;
        if (++pending == flush) {
          for (auto& s : acc) s %= p;
          pending = 0;
        }
      }
      for (std::size_t j = 0; j < n; ++j) c.at(i, j) = {static_cast<std::uint32_t>(acc[j] % p)};
    }
    return c;
  }
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const FieldElement x = a(i, k);
      if (x.code == 0) continue;
      const auto brow = b.row(k);
      for (std::size_t j = 0; j < n; ++j) {
        if (brow[j].code != 0) c.at(i, j) = F.add(c(i, j), F.mul(x, brow[j]));
      }
    }
  }
  return c;
}

Vector apply(const Field& F, const Matrix& a, std::span<const FieldElement> v) {
  if (a.cols() != v.size()) throw std::invalid_argument("apply: shape mismatch");
  Vector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    FieldElement s{};
    const auto r = a.row(i);
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (r[j].code != 0 && v[j].code != 0) s = F.add(s, F.mul(r[j], v[j]));
    }
    out[i] = s;
  }
  return out;
}

Matrix pow(const Field& F, const Matrix& a, std::uint64_t m) {
  if (!a.is_square()) throw std::invalid_argument("pow: matrix is not square");
  Matrix result = Matrix::identity(F, a.rows());
  Matrix base = a;
  while (m > 0) {
    if (m & 1) result = mul(F, result, base);
    m >>= 1;
    if (m > 0) base = mul(F, base, base);
  }
  return result;
}

std::size_t rank(const Field& F, Matrix a) { return rref(F, a).size(); }

std::vector<Vector> kernel_basis(const Field& F, Matrix a) {
  const auto pivots = rref(F, a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(a.cols());
    v[free] = F.one();
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = F.neg(a(k, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

Polynomial min_poly_of_vector(const Field& F, const Matrix& a, std::span<const FieldElement> v) {
  if (!a.is_square() || a.rows() != v.size()) {
    throw std::invalid_argument("min_poly_of_vector: shape mismatch");
  }
  // Each stored row is a reduced Krylov combination; combos_[k] records it
  // as a polynomial in a applied to v.
  const std::size_t D = v.size();
  EchelonSet echelon(F);
  std::vector<Polynomial> combos;
  Vector w(v.begin(), v.end());
  for (std::size_t deg = 0; deg <= D; ++deg) {
    Vector red = w;
    Vector used;
    echelon.reduce(red, &used);
    // red = x^deg - sum used_k * combos_k (as polynomials applied to v)
    Polynomial combo = Polynomial::monomial(F.one(), deg);
    for (std::size_t k = 0; k < used.size(); ++k) {
      if (used[k].code != 0) combo = gf::poly::sub(F, combo, gf::poly::scale(F, used[k], combos[k]));
    }
    bool zero = true;
    for (auto x : red) {
      if (x.code != 0) {
        zero = false;
        break;
      }
    }
    if (zero) return gf::poly::monic(F, combo);
    std::size_t piv = 0;
    while (red[piv].code == 0) ++piv;
    combos.push_back(gf::poly::scale(F, F.inv(red[piv]), combo));
    echelon.insert(std::move(red));
    w = apply(F, a, w);
  }
  throw std::logic_error("min_poly_of_vector: Krylov sequence did not close");
}

Polynomial min_poly(const Field& F, const Matrix& a) {
  if (!a.is_square()) throw std::invalid_argument("min_poly: matrix is not square");
  const std::size_t D = a.rows();
  Polynomial result = Polynomial::constant(F.one());
  EchelonSet span(F);
  for (std::size_t j = 0; j < D && span.size() < D; ++j) {
    Vector unit(D);
    unit[j] = F.one();
    if (span.contains(unit)) continue;
    result = gf::poly::lcm(F, result, min_poly_of_vector(F, a, unit));
    Vector w = unit;
    for (std::size_t s = 0; s < D && span.size() < D; ++s) {
      Vector red = w;
      span.reduce(red, nullptr);
      bool zero = true;
      for (auto x : red) {
        if (x.code != 0) {
          zero = false;
          break;
        }
      }
      if (zero) break;
      span.insert(std::move(red));
      w = apply(F, a, w);
    }
  }
  return result;
}

Matrix eval(const Field& F, const Polynomial& f, const Matrix& a) {
  if (!a.is_square()) throw std::invalid_argument("eval: matrix is not square");
  Matrix acc(a.rows(), a.cols());
  for (std::size_t i = f.coeffs().size(); i-- > 0;) {
    acc = add_scalar(F, mul(F, acc, a), f.coeffs()[i]);
  }
  return acc;
}

Matrix crt_projector(const Field& F, const Matrix& a, FieldElement eigen) {
  return crt_projector(F, a, min_poly(F, a), eigen);
}

Matrix crt_projector(const Field& F, const Matrix& a, const Polynomial& minimal,
                     FieldElement eigen) {
  const unsigned m = gf::poly::root_multiplicity(F, minimal, eigen);
  if (m == 0) return Matrix(a.rows(), a.cols());
  const Polynomial block = gf::poly::pow(F, Polynomial::linear(F, eigen), m);
  const Polynomial rest = gf::poly::divmod(F, minimal, block).quotient;
  const auto [g, u, v] = gf::poly::xgcd(F, block, rest);
  (void)u;
  (void)g;
  const Polynomial selector = gf::poly::mod(F, gf::poly::mul(F, v, rest), minimal);
  return eval(F, selector, a);
}

std::uint64_t hash(const Matrix& a) noexcept {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t x) {
    for (int b = 0; b < 4; ++b) {
      h ^= (x >> (8 * b)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  mix(a.rows());
  mix(a.cols());
  for (auto x : a.data()) mix(x.code);
  return h;
}

}  // namespace cyclo::linalg
