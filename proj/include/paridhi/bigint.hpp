#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <vector>

namespace paridhi {

using BigInt = boost::multiprecision::cpp_int;

enum class RoundMode { floor, ceil, nearest };

// 10^k as a BigInt; k >= 0.
BigInt pow10(unsigned k);

// Integer square root with an explicit rounding contract:
//   floor:   r*r <= n < (r+1)*(r+1)
//   ceil:    (r-1)*(r-1) < n <= r*r   (r = 0 for n = 0)
//   nearest: r minimizes |r*r - n|; ties go to the larger r
//     (ties cannot actually occur: |n - r²| = |(r+1)² - n| forces 2n odd = even)
// Throws std::domain_error for n < 0.
BigInt isqrt(const BigInt& n, RoundMode mode = RoundMode::floor);

// Rounded integer division, den > 0:
//   floor/ceil as usual; nearest rounds half away from zero.
BigInt div_round(const BigInt& num, const BigInt& den, RoundMode mode);

// m = square * square_free with square_free squarefree.
// Exactness of the decomposition never depends on probabilistic primality:
// factors are verified by exact division; Miller-Rabin only steers Pollard rho.
struct SquareSplit {
  BigInt square_root;  // s with m = s^2 * square_free
  BigInt square_free;
};
SquareSplit split_square(const BigInt& m);

}  // namespace paridhi
