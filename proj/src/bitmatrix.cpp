#include "aircode/bitmatrix.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace aircode {

BitMatrix::BitMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0)
        throw std::invalid_argument("matrix dimensions must be non-negative");
    words_ = (cols + 63) / 64;
    bits_.assign(static_cast<std::size_t>(rows) * words_, 0);
}

void BitMatrix::check(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw std::out_of_range("bit index (" + std::to_string(r) + "," + std::to_string(c) +
                                ") outside " + std::to_string(rows_) + "x" + std::to_string(cols_));
}

bool BitMatrix::get(int r, int c) const {
    check(r, c);
    return (row_words(r)[c >> 6] >> (c & 63)) & 1u;
}

void BitMatrix::set(int r, int c, bool v) {
    check(r, c);
    std::uint64_t mask = std::uint64_t{1} << (c & 63);
    if (v)
        row_words(r)[c >> 6] |= mask;
    else
        row_words(r)[c >> 6] &= ~mask;
}

int BitMatrix::row_weight(int r) const {
    check(r, 0);
    int w = 0;
    for (int i = 0; i < words_; ++i)
        w += std::popcount(row_words(r)[i]);
    return w;
}

int BitMatrix::col_weight(int c) const {
    check(0, c);
    int w = 0;
    for (int r = 0; r < rows_; ++r)
        w += get(r, c);
    return w;
}

std::vector<int> BitMatrix::row_support(int r) const {
    check(r, 0);
    std::vector<int> out;
    for (int i = 0; i < words_; ++i) {
        std::uint64_t word = row_words(r)[i];
        while (word) {
            int b = std::countr_zero(word);
            out.push_back(i * 64 + b);
            word &= word - 1;
        }
    }
    return out;
}

std::vector<int> BitMatrix::col_support(int c) const {
    check(0, c);
    std::vector<int> out;
    for (int r = 0; r < rows_; ++r)
        if (get(r, c))
            out.push_back(r);
    return out;
}

}  // namespace aircode
