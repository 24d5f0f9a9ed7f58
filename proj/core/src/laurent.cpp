#include "concordia/laurent.hpp"

#include <numeric>
#include <stdexcept>

namespace concordia {

namespace {
const BigInt kZero = 0;
}

LaurentPoly LaurentPoly::monomial(int exponent, BigInt coeff) {
    LaurentPoly p;
    if (coeff != 0) {
        p.min_exp_ = exponent;
        p.coeffs_.push_back(std::move(coeff));
    }
    return p;
}

LaurentPoly::LaurentPoly(const std::map<int, BigInt>& coeffs) {
    for (const auto& [e, c] : coeffs) {
        if (c == 0) continue;
        if (coeffs_.empty()) min_exp_ = e;
        coeffs_.resize(static_cast<std::size_t>(e - min_exp_) + 1);
        coeffs_.back() = c;
    }
    trim();
}

void LaurentPoly::trim() {
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
    if (lead == coeffs_.size()) {
        coeffs_.clear();
        min_exp_ = 0;
        return;
    }
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    min_exp_ += static_cast<int>(lead);
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

int LaurentPoly::min_exp() const {
    if (is_zero()) throw std::logic_error("min_exp of zero polynomial");
    return min_exp_;
}

int LaurentPoly::max_exp() const {
    if (is_zero()) throw std::logic_error("max_exp of zero polynomial");
    return min_exp_ + static_cast<int>(coeffs_.size()) - 1;
}

const BigInt& LaurentPoly::coeff(int exponent) const {
    if (is_zero() || exponent < min_exp_) return kZero;
    std::size_t k = static_cast<std::size_t>(exponent - min_exp_);
    return k < coeffs_.size() ? coeffs_[k] : kZero;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    LaurentPoly r;
    r.min_exp_ = std::min(min_exp_, o.min_exp_);
    int hi = std::max(max_exp(), o.max_exp());
    r.coeffs_.assign(static_cast<std::size_t>(hi - r.min_exp_) + 1, 0);
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        r.coeffs_[static_cast<std::size_t>(min_exp_ - r.min_exp_) + k] += coeffs_[k];
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k)
        r.coeffs_[static_cast<std::size_t>(o.min_exp_ - r.min_exp_) + k] += o.coeffs_[k];
    r.trim();
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly neg = o;
    for (auto& c : neg.coeffs_) c = -c;
    return *this + neg;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    LaurentPoly r;
    r.min_exp_ = min_exp_ + o.min_exp_;
    r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, 0);
    for (std::size_t a = 0; a < coeffs_.size(); ++a) {
        if (coeffs_[a] == 0) continue;
        for (std::size_t b = 0; b < o.coeffs_.size(); ++b)
            if (o.coeffs_[b] != 0) r.coeffs_[a + b] += coeffs_[a] * o.coeffs_[b];
    }
    r.trim();
    return r;
}

LaurentPoly LaurentPoly::compose_power(int p) const {
    if (p < 1) throw std::invalid_argument("compose_power requires p >= 1");
    std::map<int, BigInt> m;
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        if (coeffs_[k] != 0) m[(min_exp_ + static_cast<int>(k)) * p] = coeffs_[k];
    return LaurentPoly(m);
}

BigInt LaurentPoly::value_at_one() const {
    return std::accumulate(coeffs_.begin(), coeffs_.end(), BigInt(0));
}

bool LaurentPoly::is_symmetric() const {
    if (is_zero()) return true;
    if (min_exp() != -max_exp()) return false;
    for (int e = 0; e <= max_exp(); ++e)
        if (coeff(e) != coeff(-e)) return false;
    return true;
}

std::vector<int> LaurentPoly::support_descending() const {
    std::vector<int> out;
    for (int k = static_cast<int>(coeffs_.size()) - 1; k >= 0; --k)
        if (coeffs_[static_cast<std::size_t>(k)] != 0) out.push_back(min_exp_ + k);
    return out;
}

std::string LaurentPoly::str() const {
    if (is_zero()) return "0";
    std::string s;
    for (int e = max_exp(); e >= min_exp(); --e) {
        const BigInt& c = coeff(e);
        if (c == 0) continue;
        BigInt a = c < 0 ? BigInt(-c) : c;
        if (s.empty())
            s += c < 0 ? "-" : "";
        else
            s += c < 0 ? " - " : " + ";
        if (a != 1 || e == 0) s += a.str();
        if (e != 0) {
            if (a != 1) s += "*";
            s += "t";
            if (e != 1) s += "^" + std::to_string(e);
        }
    }
    return s;
}

namespace {

// Exact division of integer polynomials in non-negative powers; remainder must vanish.
LaurentPoly divide_exact(const LaurentPoly& num, const LaurentPoly& den) {
    LaurentPoly rem = num;
    std::map<int, BigInt> quo;
    const int dtop = den.max_exp();
    const BigInt& dlead = den.coeff(dtop);
    while (!rem.is_zero() && rem.max_exp() >= dtop) {
        int e = rem.max_exp() - dtop;
        BigInt c = rem.coeff(rem.max_exp()) / dlead;
        if (c * dlead != rem.coeff(rem.max_exp()))
            throw std::logic_error("non-exact polynomial division");
        quo[e] = c;
        rem = rem - den * LaurentPoly::monomial(e, c);
    }
    if (!rem.is_zero()) throw std::logic_error("non-exact polynomial division");
    return LaurentPoly(quo);
}

}  // namespace

LaurentPoly torus_alexander(int p, int q) {
    if (p < 1 || q < 1) throw std::invalid_argument("torus_alexander requires p,q >= 1");
    if (std::gcd(p, q) != 1) throw std::invalid_argument("torus_alexander requires gcd(p,q)=1");
    if (p == 1 || q == 1) return LaurentPoly::one();
    auto cyc = [](int n) {  // t^n - 1
        return LaurentPoly::monomial(n, 1) - LaurentPoly::one();
    };
    LaurentPoly quo = divide_exact(cyc(p * q) * cyc(1), cyc(p) * cyc(q));
    int genus = (p - 1) * (q - 1) / 2;
    return quo * LaurentPoly::monomial(-genus, 1);
}

LaurentPoly cable_alexander(const LaurentPoly& companion, int p, int q) {
    if (p < 1) throw std::invalid_argument("cable_alexander requires p >= 1");
    if (std::gcd(p, std::abs(q)) != 1)
        throw std::invalid_argument("cable_alexander requires gcd(p,q)=1");
    LaurentPoly torus_part =
        q >= 0 ? torus_alexander(p, q == 0 ? 1 : q) : torus_alexander(p, -q);
    return companion.compose_power(p) * torus_part;
}

BigInt torsion_coeff(const LaurentPoly& alexander, int k) {
    if (k < 0) throw std::invalid_argument("torsion_coeff requires k >= 0");
    if (!alexander.is_symmetric()) throw std::invalid_argument("torsion_coeff needs a symmetric polynomial");
    BigInt t = 0;
    if (alexander.is_zero()) return t;
    for (int j = 1; k + j <= alexander.max_exp(); ++j) t += j * alexander.coeff(k + j);
    return t;
}

}  // namespace concordia
