#pragma once

#include <cstdint>
#include <vector>

#include "pcurv/rational.hpp"

namespace pcurv {

// Dense matrix over F_p with raw residues, for large sparse-ish systems.
class ModMatrix {
 public:
  ModMatrix(std::size_t rows, std::size_t cols, std::uint64_t p) : r_(rows), c_(cols), p_(p), a_(rows * cols, 0) {}

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  std::uint64_t prime() const { return p_; }
  std::uint64_t at(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }
  void set(std::size_t i, std::size_t j, std::uint64_t v) { a_[i * c_ + j] = v % p_; }
  void add(std::size_t i, std::size_t j, std::uint64_t v);

  // In-place reduced row echelon form; returns pivot columns.
  std::vector<std::size_t> rref();
  // Kernel basis, one vector per free column in ascending order.
  std::vector<std::vector<std::uint64_t>> nullspace() const;
  std::size_t rank() const;

 private:
  std::size_t r_, c_;
  std::uint64_t p_;
  std::vector<std::uint64_t> a_;
};

// Kernel of a rational matrix (rows of equal length), one vector per free column.
std::vector<std::vector<Rational>> rational_nullspace(std::vector<std::vector<Rational>> rows, std::size_t cols);

}  // namespace pcurv
