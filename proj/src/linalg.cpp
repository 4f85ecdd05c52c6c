#include "pcurv/linalg.hpp"

#include "pcurv/fp.hpp"

namespace pcurv {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

}  // namespace

void ModMatrix::add(std::size_t i, std::size_t j, std::uint64_t v) {
  std::uint64_t& e = a_[i * c_ + j];
  e = static_cast<std::uint64_t>((static_cast<unsigned __int128>(e) + v % p_) % p_);
}

std::vector<std::size_t> ModMatrix::rref() {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < c_ && row < r_; ++col) {
    std::size_t piv = row;
    while (piv < r_ && at(piv, col) == 0) ++piv;
    if (piv == r_) continue;
    if (piv != row)
      for (std::size_t j = 0; j < c_; ++j) std::swap(a_[piv * c_ + j], a_[row * c_ + j]);
    std::uint64_t inv = Fp::raw(at(row, col), p_).inv().value();
    std::vector<std::size_t> nz;
    for (std::size_t j = col; j < c_; ++j) {
      std::uint64_t& e = a_[row * c_ + j];
      if (e) {
        e = mulmod(e, inv, p_);
        nz.push_back(j);
      }
    }
    for (std::size_t i = 0; i < r_; ++i) {
      if (i == row) continue;
      std::uint64_t f = at(i, col);
      if (!f) continue;
      std::uint64_t nf = p_ - f;
      for (std::size_t j : nz) {
        std::uint64_t& e = a_[i * c_ + j];
        e = static_cast<std::uint64_t>((e + static_cast<unsigned __int128>(nf) * a_[row * c_ + j]) % p_);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::vector<std::vector<std::uint64_t>> ModMatrix::nullspace() const {
  ModMatrix m = *this;
  auto pivots = m.rref();
  std::vector<bool> is_pivot(c_, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<std::uint64_t>> out;
  for (std::size_t f = 0; f < c_; ++f) {
    if (is_pivot[f]) continue;
    std::vector<std::uint64_t> v(c_, 0);
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      std::uint64_t e = m.at(r, f);
      v[pivots[r]] = e ? p_ - e : 0;
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::size_t ModMatrix::rank() const {
  ModMatrix m = *this;
  return m.rref().size();
}

std::vector<std::vector<Rational>> rational_nullspace(std::vector<std::vector<Rational>> a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
    std::size_t piv = row;
    while (piv < a.size() && a[piv][col].is_zero()) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[row]);
    Rational inv = a[row][col].inv();
    for (std::size_t j = col; j < cols; ++j) a[row][j] *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == row || a[i][col].is_zero()) continue;
      Rational f = a[i][col];
      for (std::size_t j = col; j < cols; ++j)
        if (!a[row][j].is_zero()) a[i][j] -= f * a[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rational>> out;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(cols);
    v[f] = Rational(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][f];
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace pcurv
