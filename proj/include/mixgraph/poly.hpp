#pragma once

#include <string>
#include <vector>

#include "mixgraph/core.hpp"

namespace mixgraph {

/// Integer polynomial; as a characteristic polynomial it is read as
/// x^n + c_1 x^{n-1} + ... + c_n.
class CharPoly {
public:
    CharPoly() = default;  // zero polynomial
    /// Coefficients in descending powers, leading first.
    explicit CharPoly(const std::vector<BigInt>& descending);
    explicit CharPoly(std::initializer_list<long> descending);

    static CharPoly constant(const BigInt& c);
    static CharPoly x_power(int power);

    bool is_zero() const { return low_.empty(); }
    int degree() const { return static_cast<int>(low_.size()) - 1; }

    /// Descending coefficient vector [c_0, c_1, ..., c_n].
    std::vector<BigInt> coeffs() const;
    /// Coefficient of x^power (zero outside the support).
    BigInt power_coeff(int power) const;
    /// c_k = coefficient of x^{degree - k}.
    BigInt c(int k) const { return power_coeff(degree() - k); }

    CharPoly derivative() const;
    BigInt evaluate(const BigInt& x) const;
    /// Multiplicity of 0 as a root (number of vanishing low-order coefficients).
    int zero_multiplicity() const;
    /// p(-x)
    CharPoly reflected() const;

    CharPoly& operator+=(const CharPoly& o);
    CharPoly& operator-=(const CharPoly& o);
    friend CharPoly operator+(CharPoly a, const CharPoly& b) { return a += b; }
    friend CharPoly operator-(CharPoly a, const CharPoly& b) { return a -= b; }
    friend CharPoly operator*(const CharPoly& a, const CharPoly& b);
    friend CharPoly operator*(const BigInt& s, const CharPoly& p);
    friend bool operator==(const CharPoly& a, const CharPoly& b) { return a.low_ == b.low_; }
    friend bool operator<(const CharPoly& a, const CharPoly& b);

    /// "x^4 - 3*x^2 + 1"
    std::string str() const;
    /// "charpoly: 1 0 -3 0 1"
    std::string machine_line() const;

    const std::vector<BigInt>& ascending() const { return low_; }
    static CharPoly from_ascending(std::vector<BigInt> low);

private:
    void trim();
    std::vector<BigInt> low_;
};

/// p + q * sqrt(d) with d square-free (or 0).
struct QuadraticSurd {
    Rational p{0};
    Rational q{0};
    BigInt d{0};

    static QuadraticSurd integer(long value);
    static QuadraticSurd rational(const Rational& value);
    /// sqrt(k) normalised: sqrt(8) -> 2*sqrt(2), sqrt(4) -> 2.
    static QuadraticSurd sqrt_of(long k);

    QuadraticSurd operator-() const { return {-p, -q, d}; }
    bool is_rational() const { return sgn(q) == 0 || d == 0 || d == 1; }
    int sign() const;
    double approx() const;
    std::string str() const;
};

/// Exact sign of a - b; both must share the radicand unless one is rational.
int compare(const QuadraticSurd& a, const QuadraticSurd& b);

/// Exact sign of p(t).
int sign_at(const CharPoly& p, const QuadraticSurd& t);

/// Square-free decomposition p = c * prod f_i^i (Yun). Entry i holds f_{i+1}.
std::vector<CharPoly> squarefree_decomposition(const CharPoly& p);
CharPoly squarefree_part(const CharPoly& p);

/// Sturm chain of a square-free polynomial, every member primitive with positive scaling.
std::vector<CharPoly> sturm_chain(const CharPoly& squarefree);

/// Distinct real roots in (lo, hi].
int count_roots_in(const CharPoly& p, const QuadraticSurd& lo, const QuadraticSurd& hi);
/// Real roots in (lo, hi] counted with multiplicity.
int count_roots_with_multiplicity(const CharPoly& p, const QuadraticSurd& lo, const QuadraticSurd& hi);
/// Multiplicity of t as a root, via the derivative chain.
int root_multiplicity_at(const CharPoly& p, const QuadraticSurd& t);

}  // namespace mixgraph
