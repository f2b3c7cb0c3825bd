#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace wallscope {

// Exact rational scalar. Everything in the library computes in Q; floating
// point appears only at the SVG rendering boundary.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::domain_error("rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

bool is_integer(const Rat& x);

// x must be an integer that fits in long.
long to_long(const Rat& x);

// Canonical "p" / "p/q" form, q > 0, sign on p.
std::string rat_str(const Rat& x);

// Strict parser for the literal grammar: "p" or "p/q", decimal digits,
// optional leading minus, q > 0. Throws std::invalid_argument naming the
// offending token.
Rat parse_rat(const std::string& token);

// Binomial C(n, k) for n >= 0, 0 as usual when k > n or k < 0.
long binom(long n, long k);

}  // namespace wallscope
