#include "wpq/weights.hpp"

#include <algorithm>
#include <numeric>

namespace wpq {

unsigned long WeightSystem::min_weight() const {
    return *std::min_element(weights.begin(), weights.end());
}

unsigned long WeightSystem::max_weight() const {
    return *std::max_element(weights.begin(), weights.end());
}

Int WeightSystem::weight_product() const {
    Int p = 1;
    for (unsigned long w : weights) p *= w;
    return p;
}

WeightSystem validate(const std::vector<unsigned long>& weights) {
    if (weights.size() < 2)
        throw std::invalid_argument("weight system needs at least two weights");
    WeightSystem ws;
    ws.weights = weights;
    Int q = 1;
    unsigned long d = 0, Q = 0;
    for (unsigned long w : weights) {
        if (w == 0) throw std::invalid_argument("weights must be positive");
        q = lcm_int(q, Int(w));
        if (q > 1000000000) throw std::overflow_error("lcm of weights exceeds 10^9");
        d = std::gcd(d, w);
        Q += w;
    }
    ws.q = q.get_ui();
    ws.d = d;
    ws.Q = Q;
    ws.exponents.reserve(weights.size());
    for (unsigned long w : weights) ws.exponents.push_back(ws.q / w);

    // well-formed iff dropping any single weight leaves gcd 1
    ws.well_formed = true;
    for (std::size_t skip = 0; skip < weights.size(); ++skip) {
        unsigned long g = 0;
        for (std::size_t i = 0; i < weights.size(); ++i)
            if (i != skip) g = std::gcd(g, weights[i]);
        if (g != 1) {
            ws.well_formed = false;
            break;
        }
    }
    return ws;
}

}  // namespace wpq
