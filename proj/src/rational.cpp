#include "wallscope/rational.hpp"

#include <cctype>

namespace wallscope {

bool is_integer(const Rat& x) {
    return x.get_den() == 1;
}

long to_long(const Rat& x) {
    if (!is_integer(x)) throw std::domain_error("to_long: not an integer: " + rat_str(x));
    if (!x.get_num().fits_slong_p()) throw std::domain_error("to_long: out of range");
    return x.get_num().get_si();
}

std::string rat_str(const Rat& x) {
    return x.get_str();
}

Rat parse_rat(const std::string& token) {
    auto fail = [&] { throw std::invalid_argument("bad rational literal: '" + token + "'"); };
    std::size_t i = 0;
    if (i < token.size() && token[i] == '-') ++i;
    std::size_t digits = 0;
    while (i < token.size() && std::isdigit(static_cast<unsigned char>(token[i]))) ++i, ++digits;
    if (digits == 0) fail();
    if (i < token.size()) {
        if (token[i] != '/') fail();
        ++i;
        std::size_t qdigits = 0;
        while (i < token.size() && std::isdigit(static_cast<unsigned char>(token[i]))) ++i, ++qdigits;
        if (qdigits == 0 || i != token.size()) fail();
    }
    Rat q;
    if (q.set_str(token, 10) != 0) fail();
    if (q.get_den() == 0) fail();
    q.canonicalize();
    return q;
}

long binom(long n, long k) {
    if (k < 0 || k > n) return 0;
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return b.get_si();
}

}  // namespace wallscope
