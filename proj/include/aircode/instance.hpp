#pragma once

#include <vector>

#include "aircode/chain.hpp"

namespace aircode {

// Receiver k wants x_k, does not know the D messages after and the U messages
// before it (cyclically), and holds everything else as side-information.

inline bool in_interference(const ProblemParams& p, int k, int j) {
    const int fwd = ((j - k) % p.K + p.K) % p.K;  // steps from k to j going up
    return (fwd >= 1 && fwd <= p.D) || fwd >= p.K - p.U;
}

std::vector<int> interference_set(const ProblemParams& p, int k);
std::vector<int> side_information_set(const ProblemParams& p, int k);

}  // namespace aircode
