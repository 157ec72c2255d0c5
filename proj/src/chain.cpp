#include "aircode/chain.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace aircode {

ProblemParams derive_params(int K, int D) {
    if (K < 3)
        throw std::invalid_argument("K must be >= 3, got " + std::to_string(K));
    if (D < 1 || D > K - 2)
        throw std::invalid_argument("D must satisfy 1 <= D <= K-2, got D=" + std::to_string(D) +
                                    " for K=" + std::to_string(K));
    ProblemParams p;
    p.K = K;
    p.D = D;
    p.U = std::gcd(K, D + 1) - 1;
    return p;
}

int LambdaChain::lambda_at(int i) const {
    if (i < -1)
        throw std::out_of_range("lambda index must be >= -1");
    if (i == -1)
        return lambda_minus1;
    if (i < static_cast<int>(lambdas.size()))
        return lambdas[i];
    return 0;
}

int LambdaChain::beta_at(int i) const {
    if (i < 0)
        throw std::out_of_range("beta index must be >= 0");
    if (i < static_cast<int>(betas.size()))
        return betas[i];
    return 0;
}

LambdaChain compute_chain(int K, int D) {
    LambdaChain c;
    c.params = derive_params(K, D);
    c.lambda_minus1 = D + 1;
    c.lambdas.push_back(K - D - 1);
    int i = 0;
    while (c.lambdas[i] > 0) {
        int prev = (i == 0) ? c.lambda_minus1 : c.lambdas[i - 1];
        c.betas.push_back(prev / c.lambdas[i]);
        c.lambdas.push_back(prev % c.lambdas[i]);
        ++i;
    }
    c.l = i - 1;  // lambdas = lambda_0 .. lambda_{l+1}, last entry 0
    return c;
}

int gcd_of(const LambdaChain& chain) {
    return chain.lambdas[chain.l];
}

int IntervalLayout::col_interval_of(int k) const {
    for (int i = 0; i < static_cast<int>(cols.size()); ++i)
        if (cols[i].contains(k))
            return i;
    throw std::out_of_range("column index " + std::to_string(k) + " outside [0:D]");
}

IntervalLayout interval_layout(const LambdaChain& chain) {
    const int K = chain.params.K;
    const int D = chain.params.D;
    const int l = chain.l;
    IntervalLayout lay;

    const int nrows = l / 2 + 2;
    lay.rows.reserve(nrows);
    lay.rows.push_back({0, K - chain.lambda_at(0) - 1});
    for (int i = 1; i < nrows; ++i)
        lay.rows.push_back({K - chain.lambda_at(2 * (i - 1)), K - chain.lambda_at(2 * i) - 1});

    const int ncols = (l + 1) / 2 + 1;
    for (int i = 0; i < ncols; ++i) {
        Interval ci;
        if (i == 0)
            ci = {0, chain.beta_at(0) * chain.lambda_at(0) - 1};
        else
            ci = {D - chain.lambda_at(2 * i - 1) + 1, D - chain.lambda_at(2 * i + 1)};
        lay.cols.push_back(ci);

        Interval ct{K - chain.lambda_at(2 * i - 1), K - chain.lambda_at(2 * i + 1) - 1};
        lay.shifted_cols.push_back(ct);

        // Split C~_i after (beta_{2i}-1)*lambda_{2i} entries; the clamp only
        // matters for beta_0 = 0, where C~_0 is empty anyway.
        int head = std::max(0, chain.beta_at(2 * i) - 1) * chain.lambda_at(2 * i);
        lay.dtilde.push_back({ct.lo, std::min(ct.lo + head - 1, ct.hi)});
        lay.etilde.push_back({std::min(ct.lo + head, ct.hi + 1), ct.hi});
    }
    return lay;
}

}  // namespace aircode
