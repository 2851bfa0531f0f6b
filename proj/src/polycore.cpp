// Copyright (c) 2026 the spinpacket authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#include "spinpacket/polycore.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>
#include <utility>

#include "spinpacket/errors.hpp"

namespace spinpacket {

namespace {
const Int kZero = 0;
}

IntPolynomial::IntPolynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    normalize();
}

IntPolynomial IntPolynomial::monomial(const Int& c, std::size_t k) {
    if (c == 0) return IntPolynomial();
    std::vector<Int> v(k + 1, Int(0));
    v[k] = c;
    return IntPolynomial(std::move(v));
}

void IntPolynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

bool IntPolynomial::is_monic() const {
    return !coeffs_.empty() && coeffs_.back() == 1;
}

const Int& IntPolynomial::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : kZero;
}

const Int& IntPolynomial::leading() const {
    if (coeffs_.empty()) return kZero;
    return coeffs_.back();
}

IntPolynomial IntPolynomial::operator-() const {
    std::vector<Int> v(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] = -coeffs_[i];
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& rhs) const {
    std::vector<Int> v(std::max(coeffs_.size(), rhs.coeffs_.size()), Int(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) v[i] += rhs.coeffs_[i];
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& rhs) const {
    std::vector<Int> v(std::max(coeffs_.size(), rhs.coeffs_.size()), Int(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) v[i] -= rhs.coeffs_[i];
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& rhs) const {
    if (is_zero() || rhs.is_zero()) return IntPolynomial();
    std::vector<Int> v(coeffs_.size() + rhs.coeffs_.size() - 1, Int(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            v[i + j] += coeffs_[i] * rhs.coeffs_[j];
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator*(const Int& scalar) const {
    if (scalar == 0) return IntPolynomial();
    std::vector<Int> v(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] = coeffs_[i] * scalar;
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::derivative() const {
    if (coeffs_.size() <= 1) return IntPolynomial();
    std::vector<Int> v(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * Int(static_cast<long>(i));
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::negate_variable() const {
    std::vector<Int> v(coeffs_);
    for (std::size_t i = 1; i < v.size(); i += 2) v[i] = -v[i];
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::reverse() const {
    std::vector<Int> v(coeffs_.rbegin(), coeffs_.rend());
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::pow(unsigned e) const {
    IntPolynomial result({1});
    IntPolynomial base = *this;
    while (e > 0) {
        if (e & 1u) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

Int IntPolynomial::evaluate(const Int& x) const {
    Int acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Rat IntPolynomial::evaluate(const Rat& x) const {
    Rat acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rat(*it);
    return acc;
}

Int IntPolynomial::content() const {
    Int c = 0;
    for (const Int& a : coeffs_) {
        mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), a.get_mpz_t());
        if (c == 1) break;
    }
    return c;
}

IntPolynomial IntPolynomial::primitive_part() const {
    if (is_zero()) return IntPolynomial();
    Int c = content();
    if (leading() < 0) c = -c;
    std::vector<Int> v(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] = coeffs_[i] / c;
    return IntPolynomial(std::move(v));
}

std::optional<IntPolynomial> IntPolynomial::divide_exact(const IntPolynomial& num,
                                                         const IntPolynomial& den) {
    if (den.is_zero()) throw DomainError("divide_exact: division by zero polynomial");
    if (num.is_zero()) return IntPolynomial();
    if (num.degree() < den.degree()) return std::nullopt;

    // Long division over Q; accept only an exact integer quotient.
    std::vector<Rat> rem(num.coeffs_.size());
    for (std::size_t i = 0; i < num.coeffs_.size(); ++i) rem[i] = Rat(num.coeffs_[i]);
    const int dd = den.degree();
    const Rat dlc{den.leading()};
    std::vector<Rat> quot(static_cast<std::size_t>(num.degree() - dd) + 1);
    for (int k = num.degree() - dd; k >= 0; --k) {
        Rat f = rem[static_cast<std::size_t>(k + dd)] / dlc;
        quot[static_cast<std::size_t>(k)] = f;
        if (f != 0)
            for (int i = 0; i <= dd; ++i)
                rem[static_cast<std::size_t>(k + i)] -= f * Rat(den.coeffs_[static_cast<std::size_t>(i)]);
    }
    for (int i = 0; i < dd; ++i)
        if (rem[static_cast<std::size_t>(i)] != 0) return std::nullopt;
    std::vector<Int> qi(quot.size());
    for (std::size_t i = 0; i < quot.size(); ++i) {
        if (quot[i].get_den() != 1) return std::nullopt;
        qi[i] = quot[i].get_num();
    }
    return IntPolynomial(std::move(qi));
}

int IntPolynomial::compare(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        int c = cmp(a.coeffs_[i], b.coeffs_[i]);
        if (c != 0) return c;
    }
    return 0;
}

std::string IntPolynomial::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Int& c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        Int a = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (a != 1 || i == 0) os << a.get_str();
        if (i > 0) {
            if (a != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) {
    return os << p.to_string();
}

// ---------------------------------------------------------------------------
// gcd / squarefree machinery (primitive pseudo-remainder sequence)
// ---------------------------------------------------------------------------

namespace {

Int int_pow(const Int& base, unsigned e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// prem(a, b): remainder of lc(b)^(deg a - deg b + 1) * a by b, computed
// without fractions. Requires deg a >= deg b, b nonzero. The full power of
// lc(b) is restored even when the degree drops by more than one per step,
// as the subresultant divisions rely on it.
IntPolynomial pseudo_remainder(IntPolynomial a, const IntPolynomial& b) {
    const int db = b.degree();
    const Int& blc = b.leading();
    int scale = a.degree() - db + 1;
    while (!a.is_zero() && a.degree() >= db) {
        const int shift = a.degree() - db;
        const Int alc = a.leading();
        a = a * blc - b * IntPolynomial::monomial(alc, static_cast<std::size_t>(shift));
        --scale;
    }
    if (scale > 0) a = a * int_pow(blc, static_cast<unsigned>(scale));
    return a;
}

}  // namespace

IntPolynomial gcd(const IntPolynomial& p, const IntPolynomial& r) {
    if (p.is_zero() && r.is_zero())
        throw DomainError("gcd: both arguments are zero");
    if (p.is_zero()) return r.primitive_part();
    if (r.is_zero()) return p.primitive_part();

    IntPolynomial a = p.primitive_part();
    IntPolynomial b = r.primitive_part();
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        IntPolynomial rem = pseudo_remainder(a, b).primitive_part();
        a = std::move(b);
        b = std::move(rem);
    }
    return a.primitive_part();
}

IntPolynomial squarefree_part(const IntPolynomial& p) {
    if (p.is_zero()) throw DomainError("squarefree_part: zero polynomial");
    if (p.degree() == 0) return IntPolynomial({1});
    IntPolynomial pp = p.primitive_part();
    IntPolynomial g = gcd(pp, pp.derivative());
    auto q = IntPolynomial::divide_exact(pp, g);
    if (!q) throw InternalContradiction("squarefree_part: gcd does not divide input");
    return q->primitive_part();
}

// ---------------------------------------------------------------------------
// Resultant (subresultant pseudo-remainder chain) and power_map
// ---------------------------------------------------------------------------

Int resultant(const IntPolynomial& p, const IntPolynomial& r) {
    if (p.is_zero() || r.is_zero()) return 0;
    if (p.degree() == 0) return int_pow(p.leading(), static_cast<unsigned>(r.degree()));
    if (r.degree() == 0) return int_pow(r.leading(), static_cast<unsigned>(p.degree()));

    IntPolynomial a = p, b = r;
    Int sign = 1;
    if (a.degree() < b.degree()) {
        std::swap(a, b);
        if ((static_cast<unsigned>(a.degree()) & 1u) && (static_cast<unsigned>(b.degree()) & 1u))
            sign = -sign;
    }

    // Collins' subresultant chain on primitive parts; contents contribute
    // cont(a)^deg(b) * cont(b)^deg(a).
    const Int ca = a.content(), cb = b.content();
    Int scale = int_pow(ca, static_cast<unsigned>(b.degree())) *
                int_pow(cb, static_cast<unsigned>(a.degree()));
    {
        std::vector<Int> va(a.coeffs()), vb(b.coeffs());
        for (Int& x : va) x /= ca;
        for (Int& x : vb) x /= cb;
        a = IntPolynomial(std::move(va));
        b = IntPolynomial(std::move(vb));
    }

    Int g = 1, h = 1;
    while (true) {
        const int da = a.degree(), db = b.degree();
        const unsigned delta = static_cast<unsigned>(da - db);
        if ((static_cast<unsigned>(da) & 1u) && (static_cast<unsigned>(db) & 1u)) sign = -sign;
        IntPolynomial rem = pseudo_remainder(a, b);
        a = std::move(b);
        if (rem.is_zero()) {
            // Positive-degree gcd survives: resultant vanishes.
            return 0;
        }
        const Int divisor = g * int_pow(h, delta);
        std::vector<Int> c(rem.coeffs().size());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = rem.coeffs()[i] / divisor;
        b = IntPolynomial(std::move(c));
        g = a.leading();
        if (delta == 1) {
            h = g;
        } else if (delta > 1) {
            h = int_pow(g, delta) / int_pow(h, delta - 1);
        }
        if (b.degree() == 0) {
            const unsigned dlast = static_cast<unsigned>(a.degree());
            const Int num = int_pow(b.leading(), dlast);
            const Int den = int_pow(h, dlast - 1);
            return sign * scale * (num / den);
        }
    }
}

IntPolynomial power_map(const IntPolynomial& g, unsigned r) {
    if (!g.is_monic()) throw DomainError("power_map: input must be monic");
    if (r == 0) throw DomainError("power_map: exponent must be positive");
    const int n = g.degree();
    if (n == 0) return IntPolynomial({1});
    if (r == 1) return g;

    // Res_S(g(S), t - S^r) is monic of degree n in t: evaluate at
    // t = 0..n and interpolate exactly over Q.
    std::vector<Rat> nodes(static_cast<std::size_t>(n) + 1);
    std::vector<Rat> values(static_cast<std::size_t>(n) + 1);
    for (int t = 0; t <= n; ++t) {
        std::vector<Int> bt(static_cast<std::size_t>(r) + 1, Int(0));
        bt[0] = t;
        bt[r] = -1;
        nodes[static_cast<std::size_t>(t)] = t;
        values[static_cast<std::size_t>(t)] = Rat(resultant(g, IntPolynomial(std::move(bt))));
    }

    // Newton form, then expand to monomial coefficients.
    std::vector<Rat> dd = values;
    for (std::size_t level = 1; level < dd.size(); ++level)
        for (std::size_t i = dd.size() - 1; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (nodes[i] - nodes[i - level]);
    std::vector<Rat> poly{dd.back()};
    for (std::size_t i = dd.size() - 1; i-- > 0;) {
        // poly = poly * (x - nodes[i]) + dd[i]
        poly.insert(poly.begin(), Rat(0));
        for (std::size_t k = 0; k + 1 < poly.size(); ++k) poly[k] -= nodes[i] * poly[k + 1];
        poly[0] += dd[i];
    }

    std::vector<Int> out(poly.size());
    for (std::size_t i = 0; i < poly.size(); ++i) {
        if (poly[i].get_den() != 1)
            throw InternalContradiction("power_map: non-integer interpolation result");
        out[i] = poly[i].get_num();
    }
    IntPolynomial result{std::move(out)};
    if (result.degree() != n || !result.is_monic())
        throw InternalContradiction("power_map: result not monic of input degree");
    return result;
}

// ---------------------------------------------------------------------------
// Quadratic surds
// ---------------------------------------------------------------------------

namespace {

// Largest s with s^2 | d found by trial division up to 10^6 plus a
// perfect-square check. In-scope radicands (4q) are far below that; for
// larger d an unextracted square only costs the single-radical shortcut
// in compare(), never exactness.
Int extract_square_part(Int& d) {
    Int s = 1;
    for (Int f = 2; f * f <= d && f <= 1000000; ++f) {
        Int ff = f * f;
        while (mpz_divisible_p(d.get_mpz_t(), ff.get_mpz_t())) {
            d /= ff;
            s *= f;
        }
    }
    if (d > 1 && mpz_perfect_square_p(d.get_mpz_t())) {
        Int rt;
        mpz_sqrt(rt.get_mpz_t(), d.get_mpz_t());
        s *= rt;
        d = 1;
    }
    return s;
}

int rat_sign(const Rat& x) { return sgn(x); }

}  // namespace

QuadraticSurd::QuadraticSurd(Rat a, Rat b, Int d) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
    if (d_ <= 0) throw DomainError("QuadraticSurd: radicand must be positive");
    Int s = extract_square_part(d_);
    if (s != 1) b_ *= Rat(s);
    if (d_ == 1) {  // sqrt(1) folds into the rational part
        a_ += b_;
        b_ = 0;
    }
    if (b_ == 0) d_ = 1;
    a_.canonicalize();
    b_.canonicalize();
}

int QuadraticSurd::sign() const {
    const int sa = rat_sign(a_);
    const int sb = rat_sign(b_);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: compare a^2 with b^2 d.
    const Rat lhs = a_ * a_;
    const Rat rhs = b_ * b_ * Rat(d_);
    const int c = cmp(lhs, rhs);
    if (c == 0) return 0;
    return c > 0 ? sa : sb;
}

double QuadraticSurd::to_double() const {
    return a_.get_d() + b_.get_d() * std::sqrt(d_.get_d());
}

int compare(const QuadraticSurd& x, const QuadraticSurd& y) {
    // sign of (y' := x - y) = A + B sqrt(d1) + C sqrt(d2).
    const Rat A = x.rational_part() - y.rational_part();
    const Rat& B = x.radical_part();
    const Rat C = -y.radical_part();
    const Int& d1 = x.radicand();
    const Int& d2 = y.radicand();
    if (B == 0 || C == 0 || d1 == d2) {
        // Single radical after merging.
        if (d1 == d2) return QuadraticSurd(A, B + C, d1).sign();
        if (B == 0) return QuadraticSurd(A, C, d2).sign();
        return QuadraticSurd(A, B, d1).sign();
    }
    // Two distinct radicals: u = A + B sqrt(d1), v = C sqrt(d2);
    // |u| vs |v| decided by the single-radical sign of u^2 - v^2.
    const QuadraticSurd u(A, B, d1);
    const int su = u.sign();
    const int sv = rat_sign(C);
    if (su == 0) return sv;
    if (su == sv) return su;
    const Rat head = A * A + B * B * Rat(d1) - C * C * Rat(d2);
    const QuadraticSurd diff(head, 2 * A * B, d1);
    const int s = diff.sign();
    if (s == 0) return 0;
    return s > 0 ? su : sv;
}

bool operator<(const QuadraticSurd& x, const QuadraticSurd& y) { return compare(x, y) < 0; }
bool operator==(const QuadraticSurd& x, const QuadraticSurd& y) { return compare(x, y) == 0; }

// ---------------------------------------------------------------------------
// Sturm chains with exact surd endpoints
// ---------------------------------------------------------------------------

namespace {

// Element of Q(sqrt(d)) during Horner evaluation.
struct SurdValue {
    Rat u, v;  // u + v sqrt(d)
};

int surd_value_sign(const SurdValue& x, const Int& d) {
    return QuadraticSurd(x.u, x.v, d).sign();
}

SurdValue evaluate_at_surd(const std::vector<Rat>& poly, const QuadraticSurd& pt) {
    SurdValue acc{0, 0};
    const Rat& a = pt.rational_part();
    const Rat& b = pt.radical_part();
    const Rat d{pt.radicand()};
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) {
        // acc = acc * (a + b sqrt(d)) + coeff
        Rat u = acc.u * a + acc.v * b * d + *it;
        Rat v = acc.u * b + acc.v * a;
        acc.u = std::move(u);
        acc.v = std::move(v);
    }
    return acc;
}

std::vector<Rat> to_rational(const IntPolynomial& p) {
    std::vector<Rat> v(p.coeffs().size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = Rat(p.coeffs()[i]);
    return v;
}

// Remainder of rational-coefficient division.
std::vector<Rat> rat_remainder(std::vector<Rat> a, const std::vector<Rat>& b) {
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        Rat f = a.back() / b.back();
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        while (!a.empty() && a.back() == 0) a.pop_back();
        if (a.empty()) break;
    }
    return a;
}

int sign_changes(const std::vector<int>& signs) {
    int changes = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

}  // namespace

int sturm_count(const IntPolynomial& p, const QuadraticSurd& lo, const QuadraticSurd& hi) {
    if (p.is_zero()) throw DomainError("sturm_count: zero polynomial");
    const int c = compare(lo, hi);
    if (c >= 0) throw DomainError("sturm_count: lower endpoint must be below upper");
    if (p.degree() == 0) return 0;

    std::vector<std::vector<Rat>> chain;
    chain.push_back(to_rational(p));
    chain.push_back(to_rational(p.derivative()));
    while (chain.back().size() > 1) {
        std::vector<Rat> rem = rat_remainder(chain[chain.size() - 2], chain.back());
        if (rem.empty()) break;  // p not squarefree; gcd stage reached
        for (Rat& x : rem) x = -x;
        chain.push_back(std::move(rem));
    }

    std::vector<int> s_lo, s_hi;
    s_lo.reserve(chain.size());
    s_hi.reserve(chain.size());
    for (const auto& c_i : chain) {
        s_lo.push_back(surd_value_sign(evaluate_at_surd(c_i, lo), lo.radicand()));
        s_hi.push_back(surd_value_sign(evaluate_at_surd(c_i, hi), hi.radicand()));
    }
    if (s_lo.front() == 0 || s_hi.front() == 0)
        throw DomainError("sturm_count: endpoint is a root of p");
    return sign_changes(s_lo) - sign_changes(s_hi);
}

// ---------------------------------------------------------------------------
// Squarefree decomposition (Yun)
// ---------------------------------------------------------------------------

std::vector<PolyFactor> squarefree_decomposition(const IntPolynomial& p) {
    if (p.is_zero()) throw DomainError("squarefree_decomposition: zero polynomial");
    std::vector<PolyFactor> out;
    if (p.degree() == 0) return out;

    // Yun: f = prod h_i^i with h_i = gcd of the multiplicity-i part.
    IntPolynomial f = p.primitive_part();
    IntPolynomial fd = f.derivative();
    IntPolynomial u = gcd(f, fd);
    IntPolynomial v = *IntPolynomial::divide_exact(f, u);
    IntPolynomial w = *IntPolynomial::divide_exact(fd, u);
    unsigned i = 1;
    while (v.degree() > 0) {
        IntPolynomial z = w - v.derivative();
        IntPolynomial h = gcd(v, z);  // gcd(v, 0) = v handles the last factor
        if (h.degree() > 0) out.push_back({h, i});
        v = *IntPolynomial::divide_exact(v, h);
        w = *IntPolynomial::divide_exact(z, h);
        ++i;
    }
    return out;
}

}  // namespace spinpacket
