#include "aircode/field.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace aircode {

namespace {

bool is_prime(Symbol p) {
    if (p < 2)
        return false;
    for (Symbol d = 2; std::uint64_t(d) * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

}  // namespace

PrimeField::PrimeField(Symbol p) : p_(p) {
    if (!is_prime(p))
        throw std::invalid_argument("field modulus " + std::to_string(p) + " is not prime");
}

Symbol PrimeField::reduce(std::int64_t v) const {
    std::int64_t r = v % std::int64_t(p_);
    if (r < 0)
        r += p_;
    return static_cast<Symbol>(r);
}

Symbol PrimeField::inv(Symbol a) const {
    a %= p_;
    if (a == 0)
        throw std::domain_error("inverse of 0");
    // Extended Euclid on (a, p); p prime so gcd is 1.
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p_, new_r = a;
    while (new_r != 0) {
        const std::int64_t q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    return reduce(t);
}

void SideInfo::put(int index, Symbol value) {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                               [](const auto& e, int i) { return e.first < i; });
    if (it != entries_.end() && it->first == index)
        it->second = value;
    else
        entries_.insert(it, {index, value});
}

std::optional<Symbol> SideInfo::get(int index) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                               [](const auto& e, int i) { return e.first < i; });
    if (it != entries_.end() && it->first == index)
        return it->second;
    return std::nullopt;
}

}  // namespace aircode
