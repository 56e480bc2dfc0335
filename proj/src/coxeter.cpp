#include "coxtrace/coxeter.hpp"

#include <numeric>
#include <string>

#include "coxtrace/errors.hpp"

namespace coxtrace {

namespace {

void require_coxeter(const GroupSpec& spec) {
  if (!is_coxeter_kind(spec.kind())) {
    throw KindError("operation needs kind coxeter or even-coxeter, got " + std::string(kind_name(spec.kind())));
  }
}

unsigned lcm_of_entries(const CoxeterMatrix& matrix) {
  unsigned m = 1;
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    for (std::size_t j = 0; j < matrix.size(); ++j) {
      if (i != j && matrix[i][j] != 0) m = std::lcm(m, matrix[i][j]);
    }
  }
  return m;
}

const CoxeterMatrix& checked_matrix(const GroupSpec& spec) {
  require_coxeter(spec);
  return spec.matrix();
}

}  // namespace

GeoMatrix GeoMatrix::identity(std::size_t n, unsigned m) {
  GeoMatrix out;
  out.columns_.assign(n, GeoVector(n, CyclotomicElement(m)));
  for (std::size_t i = 0; i < n; ++i) out.columns_[i][i] = CyclotomicElement::constant(m, 1);
  return out;
}

bool GeoMatrix::equals_at_zeta(const GeoMatrix& other) const {
  if (size() != other.size()) return false;
  for (std::size_t c = 0; c < size(); ++c) {
    for (std::size_t r = 0; r < size(); ++r) {
      if (!is_zero_at_zeta(at(r, c) - other.at(r, c))) return false;
    }
  }
  return true;
}

GeoMatrix operator*(const GeoMatrix& a, const GeoMatrix& b) {
  const std::size_t n = a.size();
  const unsigned m = n == 0 ? 1 : a.at(0, 0).half_order();
  GeoMatrix out = GeoMatrix::identity(n, m);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t r = 0; r < n; ++r) {
      CyclotomicElement sum(m);
      for (std::size_t k = 0; k < n; ++k) sum.add_product(a.at(r, k), b.at(k, c));
      out.at(r, c) = std::move(sum);
    }
  }
  return out;
}

CoxeterSystem::CoxeterSystem(const GroupSpec& spec)
    : CoxeterSystem(checked_matrix(spec), lcm_of_entries(spec.matrix())) {}

CoxeterSystem::CoxeterSystem(CoxeterMatrix matrix, unsigned m) : matrix_(std::move(matrix)), m_(m) {
  const std::size_t n = matrix_.size();
  coefficient_.assign(n, std::vector<CyclotomicElement>(n, CyclotomicElement(m_)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const unsigned mij = matrix_[i][j];
      if (i == j) {
        coefficient_[i][j] = CyclotomicElement::constant(m_, -1);
      } else if (mij == 0) {
        coefficient_[i][j] = CyclotomicElement::constant(m_, 2);
      } else {
        const unsigned k = m_ / mij;
        coefficient_[i][j] = CyclotomicElement::monomial(m_, k) + CyclotomicElement::monomial(m_, 2 * m_ - k);
      }
    }
  }
}

CoxeterSystem CoxeterSystem::with_free_letter() const {
  CoxeterMatrix extended = matrix_;
  for (auto& row : extended) row.push_back(0);
  extended.emplace_back(matrix_.size() + 1, 0);
  extended.back().back() = 1;
  return CoxeterSystem(std::move(extended), m_);
}

GeoVector CoxeterSystem::unit(Symbol b) const {
  GeoVector v(size(), CyclotomicElement(m_));
  v[b] = CyclotomicElement::constant(m_, 1);
  return v;
}

GeoMatrix CoxeterSystem::generator(Symbol a) const {
  GeoMatrix g = GeoMatrix::identity(size(), m_);
  for (std::size_t j = 0; j < size(); ++j) g.at(a, j) = coefficient_[a][j];
  return g;
}

void CoxeterSystem::apply(Symbol a, GeoVector& v) const {
  CyclotomicElement updated = -v[a];
  for (std::size_t j = 0; j < size(); ++j) {
    if (j != a) updated.add_product(coefficient_[a][j], v[j]);
  }
  v[a] = std::move(updated);
}

void CoxeterSystem::right_multiply(GeoMatrix& p, Symbol a) const {
  // Column j of p·σ_a is p(e_j + c_aj e_a) for j ≠ a, and -p(e_a) for j = a.
  const GeoVector pivot = p.column(a);
  for (std::size_t j = 0; j < size(); ++j) {
    if (j == a) continue;
    auto& col = p.column(j);
    for (std::size_t r = 0; r < size(); ++r) col[r].add_product(coefficient_[a][j], pivot[r]);
  }
  for (auto& e : p.column(a)) e = -e;
}

int dichotomy_sign(const GeoVector& v) {
  bool positive = false, negative = false;
  for (const auto& c : v) {
    const int s = sign_real(c);
    positive = positive || s > 0;
    negative = negative || s < 0;
  }
  if (positive && negative) throw InternalFault("root vector has coefficients of both signs");
  if (!positive && !negative) throw InternalFault("root vector vanished");
  return positive ? 1 : -1;
}

GeoMatrix sigma_generator(const GroupSpec& spec, std::size_t a) {
  return CoxeterSystem(spec).generator(static_cast<Symbol>(a));
}

GeoVector sigma_apply(const GroupSpec& spec, const Word& w, std::size_t b) {
  const CoxeterSystem system(spec);
  GeoVector v = system.unit(static_cast<Symbol>(b));
  for (auto it = w.rbegin(); it != w.rend(); ++it) system.apply(static_cast<Symbol>(it->index), v);
  return v;
}

int sign_of_coefficient(const GroupSpec& spec, const Word& w, std::size_t a, std::size_t b) {
  return sign_real(sigma_apply(spec, w, a)[b]);
}

std::vector<int> step_signs(const GroupSpec& spec, const Word& w) {
  const CoxeterSystem system(spec);
  GeoMatrix prefix = GeoMatrix::identity(system.size(), system.half_order());
  std::vector<int> signs;
  signs.reserve(w.size());
  for (const auto& letter : w) {
    const auto a = static_cast<Symbol>(letter.index);
    signs.push_back(dichotomy_sign(prefix.column(a)));
    system.right_multiply(prefix, a);
  }
  return signs;
}

std::size_t geodesic_length(const GroupSpec& spec, const Word& w) {
  long length = 0;
  for (int s : step_signs(spec, w)) length += s;
  if (length < 0) throw InternalFault("negative geodesic length");
  return static_cast<std::size_t>(length);
}

std::vector<std::size_t> geodesic_alphabet(const GroupSpec& spec, const Word& w) {
  const CoxeterSystem system = CoxeterSystem(spec).with_free_letter();
  const auto x = static_cast<Symbol>(spec.size());
  GeoVector v = system.unit(x);
  for (auto it = w.rbegin(); it != w.rend(); ++it) system.apply(static_cast<Symbol>(it->index), v);
  std::vector<std::size_t> out;
  for (std::size_t b = 0; b < spec.size(); ++b) {
    if (!is_zero_at_zeta(v[b])) out.push_back(b);
  }
  return out;
}

ParikhVector parikh_even(const GroupSpec& spec, const Word& w) {
  if (spec.kind() != GroupKind::even_coxeter) {
    throw KindError("Parikh images need kind even-coxeter, got " + std::string(kind_name(spec.kind())));
  }
  std::vector<long> counts(spec.size(), 0);
  const auto signs = step_signs(spec, w);
  for (std::size_t i = 0; i < w.size(); ++i) counts[w[i].index] += signs[i];
  ParikhVector out;
  for (long c : counts) {
    if (c < 0) throw InternalFault("negative Parikh count");
    out.push_back(static_cast<std::size_t>(c));
  }
  return out;
}

}  // namespace coxtrace
