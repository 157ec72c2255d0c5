#pragma once

#include <optional>
#include <vector>

#include "aircode/matrix.hpp"

namespace aircode {

// Gap structure between the 1s of the matrix. Closed forms read only the
// quotient chain; scans walk the bits. Tests hold the two equal everywhere.
//
// down:  L(k + d_down, k) is the lowest 1 of column k
// up:    L(j - d_up, k) is the nearest 1 above (j, k), needs j > D
// right: L(j, k + d_right) is the nearest 1 to the right of (j, k),
//        defined only for entries of side-by-side blocks

int down_distance_scan(const BitMatrix& bits, int k);
int up_distance_scan(const BitMatrix& bits, int j, int k);
std::optional<int> right_distance_scan(const BitMatrix& bits, int j, int k);

int down_distance(const LambdaChain& chain, int k);
int up_distance(const AirMatrix& m, int j, int k);
std::optional<int> right_distance(const AirMatrix& m, int j, int k);

// Largest column index with a defined right gap at its down-pivot: D - lambda_l.
// Columns past it bottom out in a stacked block (or, for even l, in the last
// copy of the last side-by-side block) where no 1 lies further right.
int mu_domain_max(const LambdaChain& chain);

struct DistanceProfile {
    int k = 0;           // column in [0 : mu_domain_max]
    int d_down = 0;      // pivot row is k + d_down
    int mu = 0;          // right gap at the pivot
    int p = 0;           // 1s strictly below the pivot row in column k + mu
    std::vector<int> t;  // their row gaps, strictly increasing, size p
};

DistanceProfile distance_profile(const AirMatrix& m, int k);

}  // namespace aircode
