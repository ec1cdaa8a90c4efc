#pragma once

// Dense linear algebra over a prime field F_p, p < 256.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace hh1 {

using Scalar = std::uint8_t;
using Vec = std::vector<Scalar>;

/// Arithmetic in Z/pZ. Values are kept reduced in [0, p).
class Fp {
 public:
  explicit Fp(unsigned p);

  unsigned prime() const noexcept { return p_; }

  Scalar add(Scalar a, Scalar b) const noexcept {
    unsigned s = unsigned(a) + b;
    return Scalar(s >= p_ ? s - p_ : s);
  }
  Scalar sub(Scalar a, Scalar b) const noexcept {
    return Scalar(a >= b ? a - b : a + p_ - b);
  }
  Scalar neg(Scalar a) const noexcept { return Scalar(a == 0 ? 0 : p_ - a); }
  Scalar mul(Scalar a, Scalar b) const noexcept {
    return Scalar((unsigned(a) * b) % p_);
  }
  Scalar inv(Scalar a) const;
  Scalar pow(Scalar a, unsigned long long n) const noexcept;
  Scalar from_int(long long v) const noexcept;

  /// y += c * x
  void axpy(Scalar c, std::span<const Scalar> x, std::span<Scalar> y) const;
  Scalar dot(std::span<const Scalar> x, std::span<const Scalar> y) const;

  friend bool operator==(const Fp&, const Fp&) = default;

 private:
  unsigned p_;
  std::vector<Scalar> inverse_;
};

bool is_zero(std::span<const Scalar> v) noexcept;

/// Row-major dense matrix over F_p.
class FpMatrix {
 public:
  FpMatrix() = default;
  FpMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static FpMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Scalar at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Scalar> row(std::size_t r) {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<const Scalar> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  Vec column(std::size_t c) const;

  std::span<const Scalar> data() const noexcept { return data_; }

  Vec apply(const Fp& f, std::span<const Scalar> x) const;
  FpMatrix multiply(const Fp& f, const FpMatrix& rhs) const;
  bool is_zero() const noexcept;

  friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// A subspace of F_p^n kept as a basis in reduced row echelon form.
/// Two subspaces are equal iff their RREF bases are equal.
class FpSubspace {
 public:
  FpSubspace(const Fp& field, std::size_t ambient_dim);

  const Fp& field() const noexcept { return field_; }
  std::size_t ambient_dim() const noexcept { return n_; }
  std::size_t dim() const noexcept { return rows_.size(); }
  bool empty() const noexcept { return rows_.empty(); }

  /// Adds v to the spanning set. Returns true if the dimension grew.
  bool insert(Vec v);
  bool insert(std::span<const Scalar> v) { return insert(Vec(v.begin(), v.end())); }
  bool contains(std::span<const Scalar> v) const;
  bool contains(const FpSubspace& other) const;

  /// Reduces v modulo the subspace in place.
  void reduce(Vec& v) const;

  /// Basis rows sorted by pivot column.
  std::vector<Vec> basis() const;
  std::vector<std::size_t> pivots() const;

  /// Basis of the orthogonal complement of the row space, i.e. the kernel of
  /// the matrix whose rows span this subspace.
  std::vector<Vec> kernel() const;

  friend bool operator==(const FpSubspace& a, const FpSubspace& b);

 private:
  Fp field_;
  std::size_t n_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivot_of_row_;
  std::vector<std::ptrdiff_t> row_of_pivot_;
};

/// Kernel of m, as a list of basis vectors of length m.cols().
std::vector<Vec> nullspace(const Fp& f, const FpMatrix& m);
std::size_t rank(const Fp& f, const FpMatrix& m);

}  // namespace hh1
