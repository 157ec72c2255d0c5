#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace aircode {

using Symbol = std::uint32_t;

// Arithmetic mod a prime p. Symbols are kept reduced to [0, p).
class PrimeField {
public:
    explicit PrimeField(Symbol p);

    Symbol modulus() const { return p_; }

    Symbol reduce(std::int64_t v) const;
    Symbol add(Symbol a, Symbol b) const { return (a + b) % p_; }
    Symbol sub(Symbol a, Symbol b) const { return (a + p_ - b) % p_; }
    Symbol neg(Symbol a) const { return (p_ - a) % p_; }
    Symbol mul(Symbol a, Symbol b) const {
        return static_cast<Symbol>(std::uint64_t(a) * b % p_);
    }
    Symbol inv(Symbol a) const;

private:
    Symbol p_;
};

struct MessageVector {
    std::vector<Symbol> x;
};

struct Codeword {
    std::vector<Symbol> c;
};

// Partial message assignment, as handed to a single receiver. Sparse and
// sorted by message index.
class SideInfo {
public:
    void put(int index, Symbol value);
    std::optional<Symbol> get(int index) const;
    const std::vector<std::pair<int, Symbol>>& entries() const { return entries_; }

private:
    std::vector<std::pair<int, Symbol>> entries_;
};

}  // namespace aircode
