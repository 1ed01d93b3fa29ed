#include "mixgraph/poly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace mixgraph {

CharPoly::CharPoly(const std::vector<BigInt>& descending) : low_(descending.rbegin(), descending.rend()) { trim(); }

CharPoly::CharPoly(std::initializer_list<long> descending) {
    for (auto it = std::rbegin(descending); it != std::rend(descending); ++it) low_.emplace_back(*it);
    trim();
}

CharPoly CharPoly::constant(const BigInt& c) { return from_ascending({c}); }

CharPoly CharPoly::x_power(int power) {
    std::vector<BigInt> low(static_cast<std::size_t>(power) + 1, 0);
    low.back() = 1;
    return from_ascending(std::move(low));
}

CharPoly CharPoly::from_ascending(std::vector<BigInt> low) {
    CharPoly p;
    p.low_ = std::move(low);
    p.trim();
    return p;
}

void CharPoly::trim() {
    while (!low_.empty() && sgn(low_.back()) == 0) low_.pop_back();
}

std::vector<BigInt> CharPoly::coeffs() const { return {low_.rbegin(), low_.rend()}; }

BigInt CharPoly::power_coeff(int power) const {
    if (power < 0 || power >= static_cast<int>(low_.size())) return 0;
    return low_[power];
}

CharPoly CharPoly::derivative() const {
    std::vector<BigInt> out;
    for (std::size_t i = 1; i < low_.size(); ++i) out.push_back(low_[i] * static_cast<unsigned long>(i));
    return from_ascending(std::move(out));
}

BigInt CharPoly::evaluate(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = low_.rbegin(); it != low_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

int CharPoly::zero_multiplicity() const {
    int k = 0;
    while (k < static_cast<int>(low_.size()) && sgn(low_[k]) == 0) ++k;
    return k;
}

CharPoly CharPoly::reflected() const {
    std::vector<BigInt> out = low_;
    for (std::size_t i = 1; i < out.size(); i += 2) out[i] = -out[i];
    return from_ascending(std::move(out));
}

CharPoly& CharPoly::operator+=(const CharPoly& o) {
    if (o.low_.size() > low_.size()) low_.resize(o.low_.size(), 0);
    for (std::size_t i = 0; i < o.low_.size(); ++i) low_[i] += o.low_[i];
    trim();
    return *this;
}

CharPoly& CharPoly::operator-=(const CharPoly& o) {
    if (o.low_.size() > low_.size()) low_.resize(o.low_.size(), 0);
    for (std::size_t i = 0; i < o.low_.size(); ++i) low_[i] -= o.low_[i];
    trim();
    return *this;
}

CharPoly operator*(const CharPoly& a, const CharPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> out(a.low_.size() + b.low_.size() - 1, 0);
    for (std::size_t i = 0; i < a.low_.size(); ++i)
        for (std::size_t j = 0; j < b.low_.size(); ++j) out[i + j] += a.low_[i] * b.low_[j];
    return CharPoly::from_ascending(std::move(out));
}

CharPoly operator*(const BigInt& s, const CharPoly& p) {
    std::vector<BigInt> out = p.low_;
    for (auto& c : out) c *= s;
    return CharPoly::from_ascending(std::move(out));
}

bool operator<(const CharPoly& a, const CharPoly& b) {
    if (a.low_.size() != b.low_.size()) return a.low_.size() < b.low_.size();
    for (std::size_t i = a.low_.size(); i-- > 0;) {
        const int c = cmp(a.low_[i], b.low_[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

std::string CharPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int power = degree(); power >= 0; --power) {
        const BigInt& c = low_[power];
        if (sgn(c) == 0) continue;
        BigInt mag = abs(c);
        if (first) {
            if (sgn(c) < 0) out << '-';
        } else {
            out << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        if (power == 0) {
            out << mag.get_str();
            continue;
        }
        if (mag != 1) out << mag.get_str() << '*';
        out << 'x';
        if (power > 1) out << '^' << power;
    }
    return out.str();
}

std::string CharPoly::machine_line() const {
    std::ostringstream out;
    out << "charpoly:";
    for (const auto& c : coeffs()) out << ' ' << c.get_str();
    return out.str();
}

// ---------------------------------------------------------------------------

QuadraticSurd QuadraticSurd::integer(long value) { return {Rational(value), Rational(0), BigInt(0)}; }

QuadraticSurd QuadraticSurd::rational(const Rational& value) { return {value, Rational(0), BigInt(0)}; }

QuadraticSurd QuadraticSurd::sqrt_of(long k) {
    if (k < 0) throw UsageError("square root of a negative number");
    long outside = 1;
    long inside = k;
    for (long f = 2; f * f <= inside; ++f) {
        while (inside % (f * f) == 0) {
            inside /= f * f;
            outside *= f;
        }
    }
    if (inside == 0) return integer(0);
    if (inside == 1) return integer(outside);
    return {Rational(0), Rational(outside), BigInt(inside)};
}

int QuadraticSurd::sign() const {
    const int sp = sgn(p);
    const int sq = (d == 0) ? 0 : sgn(q);
    if (sq == 0) return sp;
    if (sp == 0 || sp == sq) return sq;
    // p and q*sqrt(d) have opposite signs: compare p^2 with q^2 d.
    Rational lhs = p * p;
    Rational rhs = q * q * Rational(d);
    const int c = cmp(lhs, rhs);
    return c == 0 ? 0 : (c > 0 ? sp : sq);
}

double QuadraticSurd::approx() const { return p.get_d() + q.get_d() * std::sqrt(d.get_d()); }

std::string QuadraticSurd::str() const {
    if (is_rational()) {
        Rational v = p + (d == 1 ? q : Rational(0));
        return v.get_str();
    }
    std::string s;
    if (sgn(p) != 0) s = p.get_str() + " + ";
    return s + q.get_str() + "*sqrt(" + d.get_str() + ")";
}

namespace {

QuadraticSurd normalise(QuadraticSurd s) {
    if (s.d == 1) {
        s.p += s.q;
        s.q = 0;
        s.d = 0;
    }
    if (s.d == 0) s.q = 0;
    return s;
}

}  // namespace

int compare(const QuadraticSurd& a_in, const QuadraticSurd& b_in) {
    QuadraticSurd a = normalise(a_in);
    QuadraticSurd b = normalise(b_in);
    BigInt d = a.d;
    if (sgn(a.q) == 0) d = b.d;
    else if (sgn(b.q) != 0 && a.d != b.d) throw UsageError("cannot compare surds with different radicands");
    return QuadraticSurd{a.p - b.p, a.q - b.q, d}.sign();
}

int sign_at(const CharPoly& poly, const QuadraticSurd& t_in) {
    QuadraticSurd t = normalise(t_in);
    // Horner in Q(sqrt d): value = A + B sqrt(d)
    Rational A = 0, B = 0;
    const Rational dd(t.d);
    const auto& low = poly.ascending();
    for (auto it = low.rbegin(); it != low.rend(); ++it) {
        Rational nA = A * t.p + B * t.q * dd + Rational(*it);
        Rational nB = A * t.q + B * t.p;
        A = std::move(nA);
        B = std::move(nB);
    }
    return QuadraticSurd{A, B, t.d}.sign();
}

// ---------------------------------------------------------------------------
// Rational polynomial helpers (ascending coefficients).

namespace {

using RatPoly = std::vector<Rational>;

void trim(RatPoly& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

RatPoly to_rat(const CharPoly& p) {
    RatPoly out;
    for (const auto& c : p.ascending()) out.emplace_back(c);
    return out;
}

// Primitive integer multiple with positive scale factor.
CharPoly to_primitive(const RatPoly& p) {
    if (p.empty()) return {};
    BigInt den = 1;
    for (const auto& c : p) den = lcm(den, BigInt(c.get_den()));
    std::vector<BigInt> ints;
    BigInt content = 0;
    for (const auto& c : p) {
        BigInt v = BigInt(c.get_num()) * (den / BigInt(c.get_den()));
        content = gcd(content, v);
        ints.push_back(std::move(v));
    }
    if (content != 0)
        for (auto& v : ints) v /= content;
    return CharPoly::from_ascending(std::move(ints));
}

RatPoly monic(RatPoly p) {
    trim(p);
    if (p.empty()) return p;
    Rational lead = p.back();
    for (auto& c : p) c /= lead;
    return p;
}

// Quotient and remainder of a / b.
std::pair<RatPoly, RatPoly> divmod(RatPoly a, const RatPoly& b) {
    trim(a);
    if (b.empty()) throw UsageError("polynomial division by zero");
    if (a.size() < b.size()) return {RatPoly{}, a};
    RatPoly q(a.size() - b.size() + 1, Rational(0));
    const Rational& lead = b.back();
    for (std::size_t i = a.size(); i-- >= b.size();) {
        Rational f = a[i] / lead;
        q[i - (b.size() - 1)] = f;
        if (sgn(f) != 0)
            for (std::size_t j = 0; j < b.size(); ++j) a[i - (b.size() - 1) + j] -= f * b[j];
        if (i == b.size() - 1) break;
    }
    a.resize(b.size() - 1);
    trim(a);
    trim(q);
    return {q, a};
}

RatPoly gcd_poly(RatPoly a, RatPoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

RatPoly derivative(const RatPoly& p) {
    RatPoly out;
    for (std::size_t i = 1; i < p.size(); ++i) out.push_back(p[i] * Rational(static_cast<long>(i)));
    return out;
}

RatPoly sub(RatPoly a, const RatPoly& b) {
    if (b.size() > a.size()) a.resize(b.size(), Rational(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

int sign_variations(const std::vector<int>& signs) {
    int count = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

int variations_at(const std::vector<CharPoly>& chain, const QuadraticSurd& t) {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const auto& p : chain) signs.push_back(sign_at(p, t));
    return sign_variations(signs);
}

}  // namespace

std::vector<CharPoly> squarefree_decomposition(const CharPoly& p) {
    if (p.is_zero()) throw UsageError("square-free decomposition of the zero polynomial");
    std::vector<CharPoly> out;
    RatPoly f = monic(to_rat(p));
    if (f.size() <= 1) return out;
    RatPoly df = derivative(f);
    RatPoly a = gcd_poly(f, df);
    RatPoly b = divmod(f, a).first;
    RatPoly c = divmod(df, a).first;
    RatPoly d = sub(c, derivative(b));
    while (b.size() > 1) {
        RatPoly g = gcd_poly(b, d);
        out.push_back(to_primitive(g));
        b = divmod(b, g).first;
        c = divmod(d, g).first;
        d = sub(c, derivative(b));
    }
    return out;
}

CharPoly squarefree_part(const CharPoly& p) {
    if (p.is_zero()) throw UsageError("square-free part of the zero polynomial");
    RatPoly f = to_rat(p);
    if (f.size() <= 1) return to_primitive(f);
    RatPoly g = gcd_poly(f, derivative(f));
    return to_primitive(divmod(f, g).first);
}

std::vector<CharPoly> sturm_chain(const CharPoly& squarefree) {
    std::vector<CharPoly> chain;
    if (squarefree.is_zero()) return chain;
    RatPoly prev = to_rat(squarefree);
    RatPoly cur = derivative(prev);
    chain.push_back(to_primitive(prev));
    while (!cur.empty()) {
        chain.push_back(to_primitive(cur));
        RatPoly r = divmod(prev, cur).second;
        for (auto& x : r) x = -x;
        prev = std::move(cur);
        cur = std::move(r);
    }
    return chain;
}

int count_roots_in(const CharPoly& p, const QuadraticSurd& lo, const QuadraticSurd& hi) {
    if (compare(lo, hi) >= 0) throw UsageError("count_roots_in requires lo < hi");
    if (p.is_zero()) throw UsageError("root count of the zero polynomial");
    if (p.degree() == 0) return 0;
    const auto chain = sturm_chain(squarefree_part(p));
    return variations_at(chain, lo) - variations_at(chain, hi);
}

int count_roots_with_multiplicity(const CharPoly& p, const QuadraticSurd& lo, const QuadraticSurd& hi) {
    if (compare(lo, hi) >= 0) throw UsageError("count_roots_in requires lo < hi");
    int total = 0;
    const auto factors = squarefree_decomposition(p);
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (factors[i].degree() < 1) continue;
        const auto chain = sturm_chain(factors[i]);
        total += static_cast<int>(i + 1) * (variations_at(chain, lo) - variations_at(chain, hi));
    }
    return total;
}

int root_multiplicity_at(const CharPoly& p, const QuadraticSurd& t) {
    if (p.is_zero()) throw UsageError("root multiplicity in the zero polynomial");
    int k = 0;
    CharPoly q = p;
    while (!q.is_zero() && sign_at(q, t) == 0) {
        ++k;
        q = q.derivative();
    }
    return k;
}

}  // namespace mixgraph
