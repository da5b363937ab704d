#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rhomax/numeric.hpp"

namespace rhomax {

// ---------------------------------------------------------------------------
// Bivariate polynomials over Q, sparse representation.
// ---------------------------------------------------------------------------

struct Mon2 {
    int i = 0, j = 0;  // x^i y^j
    auto operator<=>(const Mon2&) const = default;
    int deg() const { return i + j; }
};

class Poly2 {
  public:
    Poly2() = default;
    explicit Poly2(const Rat& c) { set(0, 0, c); }

    static Poly2 var_x() { Poly2 p; p.set(1, 0, 1); return p; }
    static Poly2 var_y() { Poly2 p; p.set(0, 1, 1); return p; }
    static Poly2 mono(int i, int j, const Rat& c) { Poly2 p; p.set(i, j, c); return p; }

    void set(int i, int j, const Rat& c);
    Rat coeff(int i, int j) const;
    const std::map<Mon2, Rat>& terms() const { return t_; }

    bool is_zero() const { return t_.empty(); }
    int degree() const;  // max total degree, -1 for zero
    int order() const;   // min total degree, large sentinel for zero

    Poly2 operator+(const Poly2& o) const;
    Poly2 operator-(const Poly2& o) const;
    Poly2 operator*(const Poly2& o) const;
    Poly2 operator-() const;
    Poly2& operator+=(const Poly2& o) { return *this = *this + o; }
    Poly2& operator*=(const Poly2& o) { return *this = *this * o; }
    bool operator==(const Poly2& o) const { return t_ == o.t_; }

    Poly2 scaled(const Rat& c) const;
    Poly2 dx() const;
    Poly2 dy() const;
    Rat at_origin() const { return coeff(0, 0); }
    Rat eval(const Rat& x, const Rat& y) const;

    // x -> a x + b y, y -> c x + d y
    Poly2 linear_subst(const Rat& a, const Rat& b, const Rat& c, const Rat& d) const;
    // drop all terms of total degree >= n
    Poly2 truncated(int n) const;
    // homogeneous part of given total degree
    Poly2 part(int deg) const;
    // exact division by y (throws unless every term has j >= 1)
    Poly2 div_y() const;
    Poly2 swap_xy() const;

    // f(x, 0) as coefficient vector indexed by x-degree
    std::vector<Rat> restrict_y0() const;

    std::string text() const;

  private:
    std::map<Mon2, Rat> t_;
};

// Sparse germ expression parser: sums/differences of products of rational
// literals, x, y, powers, and parenthesized subexpressions.
// E.g. "x^2 - 2*y^3 + 1/2*x*y", "y*(x^2 - 2*y^3)".
Poly2 parse_poly2(const std::string& text);

// gcd over Q[x,y] (primitive-part Euclid in y over Q[x]); result is
// defined up to a scalar, normalized to have 1 as its leading coefficient.
Poly2 gcd2(Poly2 f, Poly2 g);

// Local intersection multiplicity of the germs f, g at the origin.
// nullopt encodes infinity (common component through the origin).
std::optional<Int> local_intersection_multiplicity(Poly2 f, Poly2 g);

// ---------------------------------------------------------------------------
// Homogeneous trivariate polynomials over Q (plane curves).
// ---------------------------------------------------------------------------

struct Mon3 {
    int a = 0, b = 0, c = 0;  // X0^a X1^b X2^c
    auto operator<=>(const Mon3&) const = default;
    int deg() const { return a + b + c; }
};

class Poly3 {
  public:
    Poly3() = default;

    void set(int a, int b, int c, const Rat& v);
    const std::map<Mon3, Rat>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    int degree() const;
    bool is_homogeneous() const;

    Poly3 operator*(const Poly3& o) const;
    Poly3 operator+(const Poly3& o) const;
    Poly3 scaled(const Rat& c) const;
    bool operator==(const Poly3& o) const { return t_ == o.t_; }

    Rat eval(const std::array<Rat, 3>& p) const;
    Poly3 partial(int var) const;

    // Substitute X_k = point_k + u * b1_k + v * b2_k; the affine chart of a
    // linear change of coordinates carrying the origin to `point`.
    Poly2 chart(const std::array<Rat, 3>& point, const std::array<Rat, 3>& b1,
                const std::array<Rat, 3>& b2) const;

    std::string text() const;

  private:
    std::map<Mon3, Rat> t_;
};

// Line a X0 + b X1 + c X2.
Poly3 line_poly(const Rat& a, const Rat& b, const Rat& c);

// Univariate helpers over Q, coefficient vector indexed by degree.
using QPoly1 = std::vector<Rat>;
int deg1(const QPoly1& p);               // -1 for zero
int ord1(const QPoly1& p);               // sentinel 1<<20 for zero
QPoly1 derivative1(const QPoly1& p);
QPoly1 gcd1(QPoly1 a, QPoly1 b);         // monic gcd
QPoly1 divexact1(const QPoly1& a, const QPoly1& b);

}  // namespace rhomax
