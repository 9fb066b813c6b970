#pragma once
//
// Dense square matrices over GF(2), rows packed into 64-bit words.

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace stargenus {

class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

  /// From explicit 0/1 rows; throws std::invalid_argument if not square.
  static BitMatrix from_rows(const std::vector<std::vector<int>>& rows) {
    BitMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != rows.size()) throw std::invalid_argument("matrix is not square");
      for (std::size_t j = 0; j < rows.size(); ++j) m.set(i, j, rows[i][j] != 0);
    }
    return m;
  }

  std::size_t size() const { return n_; }

  bool get(std::size_t i, std::size_t j) const {
    return (bits_[i * words_ + j / 64] >> (j % 64)) & 1U;
  }

  void set(std::size_t i, std::size_t j, bool value) {
    std::uint64_t& w = bits_[i * words_ + j / 64];
    const std::uint64_t mask = std::uint64_t{1} << (j % 64);
    w = value ? (w | mask) : (w & ~mask);
  }

  std::vector<std::vector<int>> to_rows() const {
    std::vector<std::vector<int>> out(n_, std::vector<int>(n_, 0));
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) out[i][j] = get(i, j) ? 1 : 0;
    }
    return out;
  }

  bool is_symmetric() const {
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i + 1; j < n_; ++j) {
        if (get(i, j) != get(j, i)) return false;
      }
    }
    return true;
  }

  bool has_zero_diagonal() const {
    for (std::size_t i = 0; i < n_; ++i) {
      if (get(i, i)) return false;
    }
    return true;
  }

  /// Rank over GF(2), by elimination on a private copy.
  std::size_t rank() const {
    std::vector<std::uint64_t> work = bits_;
    std::size_t r = 0;
    for (std::size_t col = 0; col < n_ && r < n_; ++col) {
      const std::size_t w = col / 64;
      const std::uint64_t mask = std::uint64_t{1} << (col % 64);
      std::size_t pivot = r;
      while (pivot < n_ && !(work[pivot * words_ + w] & mask)) ++pivot;
      if (pivot == n_) continue;
      if (pivot != r) {
        for (std::size_t k = 0; k < words_; ++k) std::swap(work[pivot * words_ + k], work[r * words_ + k]);
      }
      for (std::size_t i = r + 1; i < n_; ++i) {
        if (work[i * words_ + w] & mask) {
          // columns left of `w` are already zero in both rows
          for (std::size_t k = w; k < words_; ++k) work[i * words_ + k] ^= work[r * words_ + k];
        }
      }
      ++r;
    }
    return r;
  }

  std::size_t corank() const { return n_ - rank(); }

  /// Rows and columns restricted to `indices`, in the given order.
  /// Throws std::out_of_range on a bad index and std::invalid_argument on duplicates.
  BitMatrix principal_submatrix(std::span<const std::size_t> indices) const {
    std::vector<bool> seen(n_, false);
    for (std::size_t i : indices) {
      if (i >= n_) throw std::out_of_range("index " + std::to_string(i) + " out of range");
      if (seen[i]) throw std::invalid_argument("duplicate index " + std::to_string(i));
      seen[i] = true;
    }
    BitMatrix sub(indices.size());
    for (std::size_t a = 0; a < indices.size(); ++a) {
      for (std::size_t b = 0; b < indices.size(); ++b) {
        if (get(indices[a], indices[b])) sub.set(a, b, true);
      }
    }
    return sub;
  }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

inline std::size_t rank(const BitMatrix& m) { return m.rank(); }
inline std::size_t corank(const BitMatrix& m) { return m.corank(); }
inline BitMatrix principal_submatrix(const BitMatrix& m, std::span<const std::size_t> indices) {
  return m.principal_submatrix(indices);
}

}  // namespace stargenus
