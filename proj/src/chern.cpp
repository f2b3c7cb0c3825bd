#include "wallscope/chern.hpp"

#include <ostream>
#include <sstream>
#include <vector>

namespace wallscope {

Char3 operator+(const Char3& x, const Char3& y) {
    return {x.ch0 + y.ch0, x.ch1 + y.ch1, x.ch2 + y.ch2, x.ch3 + y.ch3};
}

Char3 operator-(const Char3& x, const Char3& y) {
    return {x.ch0 - y.ch0, x.ch1 - y.ch1, x.ch2 - y.ch2, x.ch3 - y.ch3};
}

Char3 operator-(const Char3& x) {
    return {-x.ch0, -x.ch1, -x.ch2, -x.ch3};
}

Char3 operator*(const Rat& k, const Char3& x) {
    return {k * x.ch0, k * x.ch1, k * x.ch2, k * x.ch3};
}

PlaneChar operator+(const PlaneChar& x, const PlaneChar& y) {
    return {x.r + y.r, x.a + y.a, x.b + y.b};
}

bool lex_less(const Char3& x, const Char3& y) {
    if (x.ch0 != y.ch0) return x.ch0 < y.ch0;
    if (x.ch1 != y.ch1) return x.ch1 < y.ch1;
    if (x.ch2 != y.ch2) return x.ch2 < y.ch2;
    return x.ch3 < y.ch3;
}

std::ostream& operator<<(std::ostream& os, const Char3& c) {
    return os << "(" << rat_str(c.ch0) << "," << rat_str(c.ch1) << "," << rat_str(c.ch2) << ","
              << rat_str(c.ch3) << ")";
}

Char3 make_char(const Rat& c0, const Rat& c1, const Rat& c2, const Rat& c3) {
    return {c0, c1, c2, c3};
}

bool lattice_valid(const Char3& c) {
    return is_integer(c.ch0) && is_integer(c.ch1) && is_integer(Rat(2 * c.ch2)) &&
           is_integer(Rat(6 * c.ch3));
}

bool lattice_valid(const PlaneChar& p) {
    return is_integer(p.r) && is_integer(p.a) && is_integer(Rat(2 * p.b));
}

Char3 twist(const Char3& c, const Rat& beta) {
    // e^{-beta H} = 1 - beta H + beta^2/2 H^2 - beta^3/6 H^3
    const Rat b2 = beta * beta / 2;
    const Rat b3 = beta * beta * beta / 6;
    return {c.ch0,
            c.ch1 - beta * c.ch0,
            c.ch2 - beta * c.ch1 + b2 * c.ch0,
            c.ch3 - beta * c.ch2 + b2 * c.ch1 - b3 * c.ch0};
}

Char3 tensor_line(const Char3& c, long n) {
    return twist(c, rat(-n));
}

Char3 mul3(const Char3& x, const Char3& y) {
    return {x.ch0 * y.ch0,
            x.ch0 * y.ch1 + x.ch1 * y.ch0,
            x.ch0 * y.ch2 + x.ch1 * y.ch1 + x.ch2 * y.ch0,
            x.ch0 * y.ch3 + x.ch1 * y.ch2 + x.ch2 * y.ch1 + x.ch3 * y.ch0};
}

Char3 dual3(const Char3& c) {
    return {c.ch0, -c.ch1, c.ch2, -c.ch3};
}

PlaneChar dual_plane(const PlaneChar& p) {
    return {p.r, -p.a, p.b};
}

PlaneChar tensor_line_plane(const PlaneChar& p, long n) {
    // multiply by e^{n h}
    const Rat nn = rat(n);
    return {p.r, p.a + nn * p.r, p.b + nn * p.a + nn * nn / 2 * p.r};
}

PlaneChar plane_structure_sheaf() {
    return {rat(1), rat(0), rat(0)};
}

PlaneChar plane_points_ideal(long length) {
    if (length < 0) throw std::domain_error("plane_points_ideal: negative length");
    return {rat(1), rat(0), rat(-length)};
}

Char3 ideal_sheaf_char(long d, long g) {
    if (d <= 0) throw std::domain_error("ideal_sheaf_char: degree must be positive");
    return {rat(1), rat(0), rat(-d), rat(2 * d - 1 + g)};
}

Char3 curve_sheaf_char(long d, long g) {
    if (d <= 0) throw std::domain_error("curve_sheaf_char: degree must be positive");
    return {rat(0), rat(0), rat(d), rat(1 - g - 2 * d)};
}

Char3 pushforward_plane(const PlaneChar& p) {
    // ch(iota_* F) = ch_plane(F) . (1 - e^{-H}) read in the P^3 basis, with
    // h^2 = H^2 . (plane class) = one point.
    return {rat(0), p.r, p.a - p.r / 2, p.b - p.a / 2 + p.r / 6};
}

std::string HilbertPolynomial::text() const {
    std::ostringstream os;
    os << "p(t) = " << d << "t";
    const long c = 1 - g;
    if (c >= 0)
        os << " + " << c;
    else
        os << " - " << -c;
    return os.str();
}

HilbertPolynomial hilbert_polynomial(const Char3& c) {
    if (c.ch0 != 1 || c.ch1 != 0)
        throw std::domain_error("hilbert_polynomial: expects a rank-1 class with ch1 = 0");
    if (!is_integer(c.ch2) || c.ch2 >= 0)
        throw std::domain_error("hilbert_polynomial: ch2 must be a negative integer");
    if (!is_integer(c.ch3)) throw std::domain_error("hilbert_polynomial: ch3 must be an integer");
    const long d = to_long(Rat(-c.ch2));
    const long g = to_long(Rat(c.ch3 - 2 * Rat(d) + 1));
    return {d, g};
}

Char3 parse_char3(const std::string& text) {
    std::vector<std::string> tokens;
    std::string cur;
    for (char ch : text) {
        if (ch == ',') {
            tokens.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    tokens.push_back(cur);
    if (tokens.size() != 4)
        throw std::invalid_argument("bad character literal '" + text + "': expected 4 entries");
    return {parse_rat(tokens[0]), parse_rat(tokens[1]), parse_rat(tokens[2]), parse_rat(tokens[3])};
}

std::string char3_str(const Char3& c) {
    return rat_str(c.ch0) + "," + rat_str(c.ch1) + "," + rat_str(c.ch2) + "," + rat_str(c.ch3);
}

}  // namespace wallscope
