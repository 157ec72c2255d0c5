// Problem parameters and the Euclid quotient chain that drives the whole
// matrix construction: lambda_{-1} = D+1, lambda_0 = K-D-1, and
// lambda_{i-1} = beta_i * lambda_i + lambda_{i+1} down to lambda_l = gcd(K, D+1).
#pragma once

#include <vector>

namespace aircode {

// One sender, K messages x_0..x_{K-1}, receiver R_k wants x_k and sees
// interference from the D messages after it and the U messages before it
// (cyclically). U is never free: U = gcd(K, D+1) - 1.
struct ProblemParams {
    int K = 0;
    int D = 0;
    int U = 0;
};

// Validates K >= 3, 1 <= D <= K-2 and fills in U. Throws std::invalid_argument.
ProblemParams derive_params(int K, int D);

// x mod m, with the convention that modulus 0 acts as the identity map.
// Several interval/local-index formulas hit a zero modulus in degenerate
// chains (beta_0 = 0 makes lambda_1 = D+1); this keeps them total.
inline int mod_or_self(int x, int m) { return m == 0 ? x : x % m; }

struct LambdaChain {
    ProblemParams params;
    int lambda_minus1 = 0;      // D + 1, kept explicit
    std::vector<int> lambdas;   // lambda_0 .. lambda_{l+1}; final entry is 0
    std::vector<int> betas;     // beta_0 .. beta_l; beta_0 may be 0
    int l = 0;

    // lambda_i for any i >= -1; indices past the chain read as 0.
    int lambda_at(int i) const;
    // beta_i; indices past the chain read as 0.
    int beta_at(int i) const;
};

LambdaChain compute_chain(int K, int D);

// gcd(K, D+1), read off the end of the chain (== lambda_l).
int gcd_of(const LambdaChain& chain);

// Inclusive interval of indices; empty iff lo > hi.
struct Interval {
    int lo = 0;
    int hi = -1;
    bool empty() const { return lo > hi; }
    int size() const { return empty() ? 0 : hi - lo + 1; }
    bool contains(int x) const { return x >= lo && x <= hi; }
};

// Row/column interval systems of the matrix, all derived from the chain.
//   rows:         R_0 .. R_{floor(l/2)+1}, a partition of [0:K-1]
//   cols:         C_0 .. C_{ceil(l/2)},    a partition of [0:D] (C_0 empty iff beta_0 = 0)
//   shifted_cols: C~_i = C_i + lambda_0,   a partition of [lambda_0:K-1]
//   dtilde/etilde: per i, C~_i split after the first (beta_{2i}-1)*lambda_{2i} entries
struct IntervalLayout {
    std::vector<Interval> rows;
    std::vector<Interval> cols;
    std::vector<Interval> shifted_cols;
    std::vector<Interval> dtilde;
    std::vector<Interval> etilde;

    // Index i with k in C_i. Throws std::out_of_range for k outside [0:D].
    int col_interval_of(int k) const;
};

IntervalLayout interval_layout(const LambdaChain& chain);

}  // namespace aircode
