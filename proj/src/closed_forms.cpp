#include "sbe/closed_forms.hpp"

#include <cmath>

#include "sbe/errors.hpp"

namespace sbe {

BigInt sbe_size_complete(int n) {
    if (n < 1) throw argument_error("need n >= 1");
    return (BigInt(1) << n) - 1;
}

BigInt usbe_size_complete(int n) {
    if (n < 1) throw argument_error("need n >= 1");
    return BigInt(n + 1) * n / 2;
}

BigInt count_sbe_trees_complete(int n) {
    if (n < 1) throw argument_error("need n >= 1");
    BigInt t = 1; // T(1) = T(2) = 1: a 2-clique splits in exactly one way
    for (int k = 3; k <= n; ++k) t = BigInt(k) * (k - 1) / 2 * t * t;
    return t;
}

WidthProfile path_width_profile(int n) {
    if (n < 0) throw argument_error("need n >= 0");
    std::vector<BigInt> prev2 = {1}; // w_0
    std::vector<BigInt> prev = {1};  // w_1
    for (int k = 2; k <= n; ++k) {
        std::vector<BigInt> row(std::max(prev.size(), prev2.size()) + 1, 0);
        row[0] = 1;
        for (std::size_t l = 1; l < row.size(); ++l) {
            if (l - 1 < prev.size()) row[l] += prev[l - 1];
            if (l - 1 < prev2.size()) row[l] += prev2[l - 1];
        }
        while (row.size() > 1 && row.back() == 0) row.pop_back();
        prev2 = std::move(prev);
        prev = std::move(row);
    }

    WidthProfile profile;
    profile.widths = n == 0 ? prev2 : std::move(prev);
    profile.total = 0;
    for (const auto& w : profile.widths) profile.total += w;
    return profile;
}

double moebius_split_prediction(int n) {
    if (n < 4 || n % 2 != 0) throw argument_error("need even n >= 4");
    const double intercept = n % 4 == 0 ? 1.66485616037 : 1.74055665759;
    return std::exp2(moebius_split_exponent * n + intercept) - 2.0;
}

double random_split_prediction(int n) {
    if (n < 0) throw argument_error("need n >= 0");
    return std::exp2(random_split_exponent * n + 0.56325);
}

} // namespace sbe
