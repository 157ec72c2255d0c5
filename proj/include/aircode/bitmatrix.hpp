// Dense binary matrix with 64-bit packed rows.
#pragma once

#include <cstdint>
#include <vector>

namespace aircode {

class BitMatrix {
  public:
    BitMatrix() = default;
    BitMatrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    bool get(int r, int c) const;
    void set(int r, int c, bool v = true);

    int row_weight(int r) const;
    int col_weight(int c) const;
    std::vector<int> row_support(int r) const;
    std::vector<int> col_support(int c) const;

    // Packed words of one row (words_per_row() of them).
    const std::uint64_t* row_words(int r) const { return bits_.data() + static_cast<std::size_t>(r) * words_; }
    std::uint64_t* row_words(int r) { return bits_.data() + static_cast<std::size_t>(r) * words_; }
    int words_per_row() const { return words_; }

    bool operator==(const BitMatrix&) const = default;

  private:
    void check(int r, int c) const;

    int rows_ = 0;
    int cols_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> bits_;
};

}  // namespace aircode
