#include "hh1/fp.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "hh1/error.hpp"

namespace hh1 {

namespace {

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

Fp::Fp(unsigned p) : p_(p) {
  if (p >= 256 || !is_prime(p))
    fail(ErrorKind::Precondition,
         "field characteristic must be a prime below 256, got " + std::to_string(p));
  inverse_.assign(p, 0);
  for (unsigned a = 1; a < p; ++a)
    for (unsigned b = 1; b < p; ++b)
      if ((a * b) % p == 1) {
        inverse_[a] = Scalar(b);
        break;
      }
}

Scalar Fp::inv(Scalar a) const {
  if (a == 0) fail(ErrorKind::Precondition, "inverse of zero in F_p");
  return inverse_[a];
}

Scalar Fp::pow(Scalar a, unsigned long long n) const noexcept {
  Scalar result = Scalar(1 % p_);
  Scalar base = a;
  while (n) {
    if (n & 1) result = mul(result, base);
    base = mul(base, base);
    n >>= 1;
  }
  return result;
}

Scalar Fp::from_int(long long v) const noexcept {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return Scalar(r);
}

void Fp::axpy(Scalar c, std::span<const Scalar> x, std::span<Scalar> y) const {
  if (c == 0) return;
  const std::size_t n = x.size();
  if (c == 1) {
    for (std::size_t i = 0; i < n; ++i) y[i] = add(y[i], x[i]);
    return;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (x[i]) y[i] = Scalar((y[i] + unsigned(c) * x[i]) % p_);
}

Scalar Fp::dot(std::span<const Scalar> x, std::span<const Scalar> y) const {
  unsigned long long acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i) acc += unsigned(x[i]) * y[i];
  return Scalar(acc % p_);
}

bool is_zero(std::span<const Scalar> v) noexcept {
  return std::all_of(v.begin(), v.end(), [](Scalar s) { return s == 0; });
}

FpMatrix FpMatrix::identity(std::size_t n) {
  FpMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Vec FpMatrix::column(std::size_t c) const {
  Vec out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = at(r, c);
  return out;
}

Vec FpMatrix::apply(const Fp& f, std::span<const Scalar> x) const {
  Vec out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = f.dot(row(r), x);
  return out;
}

FpMatrix FpMatrix::multiply(const Fp& f, const FpMatrix& rhs) const {
  FpMatrix out(rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k)
      f.axpy(at(r, k), rhs.row(k), out.row(r));
  return out;
}

bool FpMatrix::is_zero() const noexcept { return hh1::is_zero(data_); }

FpSubspace::FpSubspace(const Fp& field, std::size_t ambient_dim)
    : field_(field), n_(ambient_dim), row_of_pivot_(ambient_dim, -1) {}

void FpSubspace::reduce(Vec& v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    Scalar c = v[pivot_of_row_[r]];
    if (c) field_.axpy(field_.neg(c), rows_[r], v);
  }
}

bool FpSubspace::insert(Vec v) {
  if (v.size() != n_)
    fail(ErrorKind::Precondition, "vector length does not match subspace ambient dimension");
  reduce(v);
  auto it = std::find_if(v.begin(), v.end(), [](Scalar s) { return s != 0; });
  if (it == v.end()) return false;
  const std::size_t pivot = std::size_t(it - v.begin());
  const Scalar scale = field_.inv(*it);
  for (auto& s : v) s = field_.mul(s, scale);
  // keep the basis fully reduced: clear the new pivot column elsewhere
  for (auto& row : rows_) {
    Scalar c = row[pivot];
    if (c) field_.axpy(field_.neg(c), v, row);
  }
  row_of_pivot_[pivot] = std::ptrdiff_t(rows_.size());
  pivot_of_row_.push_back(pivot);
  rows_.push_back(std::move(v));
  return true;
}

bool FpSubspace::contains(std::span<const Scalar> v) const {
  Vec w(v.begin(), v.end());
  reduce(w);
  return is_zero(w);
}

bool FpSubspace::contains(const FpSubspace& other) const {
  return std::all_of(other.rows_.begin(), other.rows_.end(),
                     [&](const Vec& r) { return contains(r); });
}

std::vector<std::size_t> FpSubspace::pivots() const {
  std::vector<std::size_t> p = pivot_of_row_;
  std::sort(p.begin(), p.end());
  return p;
}

std::vector<Vec> FpSubspace::basis() const {
  std::vector<Vec> out;
  out.reserve(rows_.size());
  for (std::size_t c = 0; c < n_; ++c)
    if (row_of_pivot_[c] >= 0) out.push_back(rows_[std::size_t(row_of_pivot_[c])]);
  return out;
}

std::vector<Vec> FpSubspace::kernel() const {
  std::vector<Vec> out;
  for (std::size_t free = 0; free < n_; ++free) {
    if (row_of_pivot_[free] >= 0) continue;
    Vec v(n_, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < rows_.size(); ++r)
      v[pivot_of_row_[r]] = field_.neg(rows_[r][free]);
    out.push_back(std::move(v));
  }
  return out;
}

bool operator==(const FpSubspace& a, const FpSubspace& b) {
  return a.field_ == b.field_ && a.n_ == b.n_ && a.basis() == b.basis();
}

std::vector<Vec> nullspace(const Fp& f, const FpMatrix& m) {
  FpSubspace rows(f, m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) rows.insert(m.row(r));
  return rows.kernel();
}

std::size_t rank(const Fp& f, const FpMatrix& m) {
  FpSubspace rows(f, m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) rows.insert(m.row(r));
  return rows.dim();
}

}  // namespace hh1
