#include "springer/coxeter.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "springer/errors.hpp"

namespace springer {

std::vector<WeylElement> enumerate_coxeter(const RootDatum& datum) {
    const size_t r = datum.semisimple_rank();
    if (r > 8)
        fail(ErrorCode::WeylGroupTooLarge,
             "coxeter enumeration capped at semisimple rank 8, got " + std::to_string(r));
    std::vector<int> order(r);
    std::iota(order.begin(), order.end(), 0);
    std::map<IMat, WeylElement> seen;
    do {
        WeylElement w = datum.element_from_word(order);
        if (w.length() != r)
            fail(ErrorCode::Internal, "coxeter element of wrong length " +
                                          std::to_string(w.length()));
        std::set<int> support(w.word.begin(), w.word.end());
        if (support.size() != r) fail(ErrorCode::Internal, "coxeter element without full support");
        seen.emplace(w.mat, w);
    } while (std::next_permutation(order.begin(), order.end()));
    std::vector<WeylElement> out;
    out.reserve(seen.size());
    for (auto& [m, w] : seen) out.push_back(w);
    std::sort(out.begin(), out.end(),
              [](const WeylElement& a, const WeylElement& b) { return a.word < b.word; });
    return out;
}

long count_coxeter(const RootDatum& datum) {
    long total = 1;
    for (size_t rank : datum.simple_factor_ranks()) total <<= (rank - 1);
    return total;
}

}  // namespace springer
