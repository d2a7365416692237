#ifndef SBE_CLOSED_FORMS_HPP
#define SBE_CLOSED_FORMS_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace sbe {

using BigInt = boost::multiprecision::cpp_int;

/// Size of the full SBE-tree of K_n: 2^n - 1.
BigInt sbe_size_complete(int n);

/// Size of the USBE-tree of K_n: C(n+1, 2).
BigInt usbe_size_complete(int n);

/// Number of distinct SBE-trees of K_n:
/// T(1) = T(2) = 1, T(n) = C(n,2) * T(n-1)^2.
BigInt count_sbe_trees_complete(int n);

/// USBE layer widths by depth; total is their sum.
struct WidthProfile {
    std::vector<BigInt> widths;
    BigInt total;
};

/// Layer widths of the path's tree without constructing it. Splitting edge
/// (1,2) leaves a path on n-1 vertices on one side and an isolated vertex
/// plus a path on n-2 on the other, so
///   w_n(0) = 1,  w_n(l) = w_{n-1}(l-1) + w_{n-2}(l-1),  w_0 = w_1 = [1],
/// and the total is 2*Fib(n+1) - 1.
WidthProfile path_width_profile(int n);

/// Measured split-count law for Moebius ladders:
/// 2^(0.347120956815 n + 1.66485616037) - 2 when 4 | n,
/// 2^(0.347120956815 n + 1.74055665759) - 2 when n is even but 4 does not
/// divide n. Odd n is an error.
double moebius_split_prediction(int n);

/// Maximum split count law for random graphs: 2^(0.369425 n + 0.56325).
double random_split_prediction(int n);

inline constexpr double moebius_split_exponent = 0.347120956815;
inline constexpr double random_split_exponent = 0.369425;

} // namespace sbe

#endif
