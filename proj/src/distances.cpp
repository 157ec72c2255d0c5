#include "aircode/distances.hpp"

#include <stdexcept>
#include <string>

namespace aircode {

namespace {

void require_one(const BitMatrix& bits, int j, int k, const char* who) {
    if (j < 0 || j >= bits.rows() || k < 0 || k >= bits.cols())
        throw std::out_of_range(std::string(who) + ": cell (" + std::to_string(j) + "," +
                                std::to_string(k) + ") out of range");
    if (!bits.get(j, k))
        throw std::invalid_argument(std::string(who) + ": L(" + std::to_string(j) + "," +
                                    std::to_string(k) + ") is not 1");
}

}  // namespace

int down_distance_scan(const BitMatrix& bits, int k) {
    if (k < 0 || k >= bits.cols())
        throw std::out_of_range("down_distance_scan: column " + std::to_string(k));
    for (int j = bits.rows() - 1; j > k; --j)
        if (bits.get(j, k))
            return j - k;
    throw std::logic_error("down_distance_scan: no 1 below the diagonal in column " +
                           std::to_string(k));
}

int up_distance_scan(const BitMatrix& bits, int j, int k) {
    require_one(bits, j, k, "up_distance_scan");
    if (j < bits.cols())
        throw std::invalid_argument("up_distance_scan: row " + std::to_string(j) +
                                    " is inside the identity rows");
    for (int i = j - 1; i >= 0; --i)
        if (bits.get(i, k))
            return j - i;
    throw std::logic_error("up_distance_scan: column " + std::to_string(k) +
                           " has no 1 above row " + std::to_string(j));
}

std::optional<int> right_distance_scan(const BitMatrix& bits, int j, int k) {
    require_one(bits, j, k, "right_distance_scan");
    for (int c = k + 1; c < bits.cols(); ++c)
        if (bits.get(j, c))
            return c - k;
    return std::nullopt;
}

int down_distance(const LambdaChain& chain, int k) {
    const int K = chain.params.K;
    const int D = chain.params.D;
    if (k < 0 || k > D)
        throw std::out_of_range("down_distance: column " + std::to_string(k));
    int i = 0;
    while (k > D - chain.lambda_at(2 * i + 1))
        ++i;
    const int lam2i = chain.lambda_at(2 * i);
    if (lam2i == 0)
        return K - D - 1;  // column bottoms out in the last stacked block
    const int kr = mod_or_self(k, D + 1 - chain.lambda_at(2 * i - 1));
    const int c = kr / lam2i;
    return K - D - 1 + chain.lambda_at(2 * i + 1) + (chain.beta_at(2 * i) - 1 - c) * lam2i;
}

int up_distance(const AirMatrix& m, int j, int k) {
    const LambdaChain& chain = m.chain();
    const Located loc = m.locate(j, k);
    if (!block_entry_is_one(chain, loc))
        throw std::invalid_argument("up_distance: L(" + std::to_string(j) + "," +
                                    std::to_string(k) + ") is not 1");
    switch (loc.block.kind) {
        case SubmatrixKind::IdentityTop:
            throw std::invalid_argument("up_distance: row " + std::to_string(j) +
                                        " is inside the identity rows");
        case SubmatrixKind::Odd:
            return chain.lambda_at(2 * loc.block.index + 1);
        case SubmatrixKind::Even: {
            const int i = loc.block.index;
            const int c = loc.k_r / chain.lambda_at(2 * i);
            return chain.lambda_at(2 * i - 1) - c * chain.lambda_at(2 * i);
        }
    }
    throw std::logic_error("up_distance: unreachable");
}

std::optional<int> right_distance(const AirMatrix& m, int j, int k) {
    const LambdaChain& chain = m.chain();
    const Located loc = m.locate(j, k);
    if (loc.block.kind != SubmatrixKind::Even)
        throw std::invalid_argument("right_distance: L(" + std::to_string(j) + "," +
                                    std::to_string(k) + ") is not in a side-by-side block");
    if (!block_entry_is_one(chain, loc))
        throw std::invalid_argument("right_distance: L(" + std::to_string(j) + "," +
                                    std::to_string(k) + ") is not 1");
    const int i = loc.block.index;
    const int lam2i = chain.lambda_at(2 * i);
    if (loc.k_r < (chain.beta_at(2 * i) - 1) * lam2i)
        return lam2i;  // next copy repeats the 1 one copy to the right
    // Last copy: the next 1 sits in the stacked block below-right, shifted by
    // the stacking position, except past the last block of an even-length chain.
    if (i > (chain.l + 1) / 2 - 1)
        return std::nullopt;
    const int c = loc.j_r / chain.lambda_at(2 * i + 1);
    return lam2i - c * chain.lambda_at(2 * i + 1);
}

int mu_domain_max(const LambdaChain& chain) {
    return chain.params.D - chain.lambda_at(chain.l);
}

DistanceProfile distance_profile(const AirMatrix& m, int k) {
    if (k < 0 || k > mu_domain_max(m.chain()))
        throw std::out_of_range("distance_profile: column " + std::to_string(k) +
                                " outside [0:" + std::to_string(mu_domain_max(m.chain())) + "]");
    DistanceProfile prof;
    prof.k = k;
    prof.d_down = down_distance_scan(m.bits(), k);
    const int pivot = k + prof.d_down;
    const std::optional<int> mu = right_distance_scan(m.bits(), pivot, k);
    if (!mu)
        throw std::logic_error("distance_profile: pivot (" + std::to_string(pivot) + "," +
                               std::to_string(k) + ") has no 1 to its right");
    prof.mu = *mu;
    for (int j = pivot + 1; j < m.K(); ++j)
        if (m.bits().get(j, k + prof.mu))
            prof.t.push_back(j - pivot);
    prof.p = static_cast<int>(prof.t.size());
    return prof;
}

}  // namespace aircode
