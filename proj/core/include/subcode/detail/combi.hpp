#ifndef SUBCODE_DETAIL_COMBI_HPP
#define SUBCODE_DETAIL_COMBI_HPP

#include <cstdint>
#include <vector>

#include "subcode/errors.hpp"

namespace subcode::combi {

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        // exact at every step: r is C(n-k+i-1, i-1) * ... kept integral by
        // multiplying before dividing; overflow-checked for the supported range
        const std::uint64_t num = n - k + i;
        if (r > UINT64_MAX / num) throw ParamError("binomial overflow");
        r = r * num / i;
    }
    return r;
}

// k-subsets of {0..n-1} in lexicographic order.
inline std::vector<std::size_t> first_combination(std::size_t k) {
    std::vector<std::size_t> c(k);
    for (std::size_t i = 0; i < k; ++i) c[i] = i;
    return c;
}

inline bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
    const std::size_t k = c.size();
    if (k == 0) return false;
    std::size_t i = k;
    while (i-- > 0) {
        if (c[i] < n - k + i) {
            ++c[i];
            for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

// Lexicographic rank of a strictly increasing k-subset of {0..n-1}.
inline std::uint64_t lex_rank(const std::vector<std::size_t>& c, std::size_t n) {
    const std::size_t k = c.size();
    std::uint64_t rank = 0;
    std::size_t prev = 0;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = prev; j < c[i]; ++j)
            rank += binomial(n - 1 - j, k - 1 - i);
        prev = c[i] + 1;
    }
    return rank;
}

}  // namespace subcode::combi

#endif
