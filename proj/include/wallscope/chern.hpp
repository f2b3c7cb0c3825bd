#pragma once

#include <iosfwd>
#include <string>
#include <utility>

#include "wallscope/rational.hpp"

namespace wallscope {

// Chern character on P^3 in the basis 1, H, H^2, H^3 (H^3 = one point).
struct Char3 {
    Rat ch0, ch1, ch2, ch3;

    friend bool operator==(const Char3&, const Char3&) = default;
};

// Chern character on a plane P^2: rank, hyperplane class h, point class.
struct PlaneChar {
    Rat r, a, b;

    friend bool operator==(const PlaneChar&, const PlaneChar&) = default;
};

Char3 operator+(const Char3& x, const Char3& y);
Char3 operator-(const Char3& x, const Char3& y);
Char3 operator-(const Char3& x);
Char3 operator*(const Rat& k, const Char3& x);
PlaneChar operator+(const PlaneChar& x, const PlaneChar& y);

// Lexicographic on (ch0, ch1, ch2, ch3); used for canonical ordering.
bool lex_less(const Char3& x, const Char3& y);

std::ostream& operator<<(std::ostream& os, const Char3& c);

Char3 make_char(const Rat& c0, const Rat& c1, const Rat& c2, const Rat& c3);

// The lattice where sheaf classes live, coordinate-wise:
// ch0, ch1 in Z, 2 ch2 in Z, 6 ch3 in Z.
bool lattice_valid(const Char3& c);
bool lattice_valid(const PlaneChar& p);

// ch^beta = e^{-beta H} . ch.
Char3 twist(const Char3& c, const Rat& beta);

// Multiplication by e^{n H}; equals twist(c, -n) and preserves the lattice.
Char3 tensor_line(const Char3& c, long n);

// Graded (truncated) product of two P^3 classes.
Char3 mul3(const Char3& x, const Char3& y);

// Derived dual: ch_i -> (-1)^i ch_i.
Char3 dual3(const Char3& c);
PlaneChar dual_plane(const PlaneChar& p);

// Plane-side counterparts of the P^3 helpers.
PlaneChar tensor_line_plane(const PlaneChar& p, long n);
PlaneChar plane_structure_sheaf();                 // O_{P^2}
PlaneChar plane_points_ideal(long length);         // I_Z, |Z| = length

// Ideal sheaf of a Cohen-Macaulay curve of degree d, arithmetic genus g
// (chi(O_C) = 1 - g, no embedded points): (1, 0, -d, 2d - 1 + g).
// The ch3 entry is pinned against chi(I_C(n)) = C(n+3,3) - (dn + 1 - g)
// through the Riemann-Roch pairing in the test suite.
Char3 ideal_sheaf_char(long d, long g);

// Structure sheaf of the same curve: (0, 0, d, 1 - g - 2d).
// For a line this gives (0,0,1,-1); the point entry is forced by
// chi(O_L(n)) = n + 1 under the Riemann-Roch pairing.
Char3 curve_sheaf_char(long d, long g);

// ch of the pushforward of a plane class along P^2 -> P^3:
// (0, r, a - r/2, b - a/2 + r/6), i.e. multiplication by 1 - e^{-H}.
Char3 pushforward_plane(const PlaneChar& p);

struct HilbertPolynomial {
    long d, g;  // p(t) = d t + 1 - g
    std::string text() const;
};

// Inverse of ideal_sheaf_char. Requires ch0 = 1, ch1 = 0, ch2 a negative
// integer, ch3 an integer; throws std::domain_error otherwise.
HilbertPolynomial hilbert_polynomial(const Char3& c);

// Literal grammar "r,c,d,e", each entry "p" or "p/q".
Char3 parse_char3(const std::string& text);
std::string char3_str(const Char3& c);

}  // namespace wallscope
