#include "aircode/instance.hpp"

#include <stdexcept>
#include <string>

namespace aircode {

std::vector<int> interference_set(const ProblemParams& p, int k) {
    if (k < 0 || k >= p.K)
        throw std::out_of_range("interference_set: receiver " + std::to_string(k));
    std::vector<int> s;
    s.reserve(p.U + p.D);
    for (int j = 0; j < p.K; ++j)
        if (in_interference(p, k, j))
            s.push_back(j);
    return s;
}

std::vector<int> side_information_set(const ProblemParams& p, int k) {
    if (k < 0 || k >= p.K)
        throw std::out_of_range("side_information_set: receiver " + std::to_string(k));
    std::vector<int> s;
    s.reserve(p.K - p.U - p.D - 1);
    for (int j = 0; j < p.K; ++j)
        if (j != k && !in_interference(p, k, j))
            s.push_back(j);
    return s;
}

}  // namespace aircode
