#include "concordia/knotexpr.hpp"

#include <cctype>
#include <numeric>
#include <stdexcept>

#include "concordia/errors.hpp"

namespace concordia {

Atom Atom::torus(int p, int q) {
    if (p < 2 || q <= p || std::gcd(p, q) != 1)
        throw std::invalid_argument("torus atom requires 2 <= p < q with gcd(p,q)=1");
    return Atom(p, q, nullptr);
}

Atom Atom::cable(int p, int q, const Atom& c) {
    if (p < 2 || std::gcd(p, std::abs(q)) != 1)
        throw std::invalid_argument("cable atom requires p >= 2 with gcd(p,q)=1");
    return Atom(p, q, std::make_shared<Atom>(c));
}

std::string Atom::str() const {
    std::string pq = "(" + std::to_string(p_) + "," + std::to_string(q_);
    if (is_torus()) return "T" + pq + ")";
    return "C" + pq + ";" + companion_->str() + ")";
}

bool Atom::operator==(const Atom& o) const {
    if (p_ != o.p_ || q_ != o.q_ || is_torus() != o.is_torus()) return false;
    return is_torus() || *companion_ == *o.companion_;
}

SignedAtom normalize_torus(int p, int q) {
    if (p < 1) throw std::invalid_argument("torus parameters require p >= 1");
    int sign = 1;
    if (q < 0) {  // T(p,-q) is the mirror of T(p,q)
        sign = -1;
        q = -q;
    }
    if (std::gcd(p, q) != 1) throw std::invalid_argument("torus parameters require gcd(p,q)=1");
    if (p > q) std::swap(p, q);
    if (p <= 1) return {1, std::nullopt};  // T(1,q) and T(p,0..1) are unknots
    return {sign, Atom::torus(p, q)};
}

SignedAtom normalize_cable(int p, int q, const SignedAtom& companion) {
    if (p < 1) throw std::invalid_argument("cable parameters require p >= 1");
    if (!companion.atom) return normalize_torus(p, q);  // cable of the unknot
    int sign = companion.sign;
    if (sign < 0) q = -q;  // C(p,q;-A) = -C(p,-q;A): mirror both pattern and companion
    if (std::gcd(p, std::abs(q)) != 1)
        throw std::invalid_argument("cable parameters require gcd(p,q)=1");
    if (p == 1) return {sign, companion.atom};  // the (1,q) cable is the companion
    return {sign, Atom::cable(p, q, *companion.atom)};
}

KnotExpr KnotExpr::atom(const Atom& a, long long multiplicity) {
    KnotExpr e;
    if (multiplicity != 0) e.terms_[a] = multiplicity;
    return e;
}

KnotExpr KnotExpr::operator+(const KnotExpr& o) const {
    KnotExpr r = *this;
    for (const auto& [a, m] : o.terms_) {
        auto it = r.terms_.find(a);
        if (it == r.terms_.end()) {
            r.terms_[a] = m;
        } else if ((it->second += m) == 0) {
            r.terms_.erase(it);
        }
    }
    return r;
}

KnotExpr KnotExpr::operator-() const {
    KnotExpr r = *this;
    for (auto& [a, m] : r.terms_) m = -m;
    return r;
}

std::string KnotExpr::str() const {
    if (terms_.empty()) return "U";
    std::string s;
    for (const auto& [a, m] : terms_) {
        long long mag = m < 0 ? -m : m;
        if (s.empty())
            s += m < 0 ? "-" : "";
        else
            s += m < 0 ? " - " : " + ";
        if (mag != 1) s += std::to_string(mag) + "*";
        s += a.str();
    }
    return s;
}

namespace {

KnotExpr scale(const KnotExpr& e, long long k) {
    KnotExpr r;
    for (const auto& [a, m] : e.terms()) r = r + KnotExpr::atom(a, m * k);
    return r;
}

// Recursive-descent parser over the raw input; positions index the original string.
class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    KnotExpr parse() {
        KnotExpr e = expr();
        skip_ws();
        if (pos_ != s_.size()) throw ParseError("trailing input", pos_);
        return e;
    }

private:
    KnotExpr expr() {
        KnotExpr acc = term();
        for (;;) {
            skip_ws();
            if (peek() == '+') {
                ++pos_;
                acc = acc + term();
            } else if (peek() == '-') {
                ++pos_;
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }

    KnotExpr term() {
        skip_ws();
        // A leading integer is a multiplicity only when followed by '*'.
        if (peek() == '+' || peek() == '-' || std::isdigit(peek())) {
            std::size_t save = pos_;
            bool ok = true;
            long long coeff = 0;
            try {
                coeff = integer();
            } catch (const ParseError&) {
                ok = false;
            }
            skip_ws();
            if (ok && peek() == '*') {
                ++pos_;
                return scale(atom_value(), coeff);
            }
            pos_ = save;
        }
        return atom_value();
    }

    KnotExpr atom_value() {
        skip_ws();
        switch (peek()) {
            case 'U':
                ++pos_;
                return KnotExpr();
            case '-': {
                ++pos_;
                return -atom_value();
            }
            case '(': {
                ++pos_;
                KnotExpr sub = expr();
                expect(')');
                return sub;
            }
            case 'T': {
                ++pos_;
                expect('(');
                int p = parameter();
                expect(',');
                int q = parameter();
                expect(')');
                SignedAtom a = checked([&] { return normalize_torus(p, q); });
                return a.atom ? KnotExpr::atom(*a.atom, a.sign) : KnotExpr();
            }
            case 'C': {
                ++pos_;
                expect('(');
                int p = parameter();
                expect(',');
                int q = parameter();
                expect(';');
                SignedAtom inner = companion_atom();
                expect(')');
                SignedAtom a = checked([&] { return normalize_cable(p, q, inner); });
                return a.atom ? KnotExpr::atom(*a.atom, a.sign) : KnotExpr();
            }
            default:
                throw ParseError("expected an atom", pos_);
        }
    }

    // The companion slot of a cable must denote a single atom up to mirroring.
    SignedAtom companion_atom() {
        std::size_t at = pos_;
        KnotExpr v = atom_value();
        if (v.is_identity()) return {1, std::nullopt};
        if (v.terms().size() != 1) throw ParseError("cable companion must be a single atom", at);
        const auto& [a, m] = *v.terms().begin();
        if (m != 1 && m != -1) throw ParseError("cable companion must be a single atom", at);
        return {static_cast<int>(m), a};
    }

    template <class F>
    SignedAtom checked(F&& f) {
        try {
            return f();
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what(), pos_);
        }
    }

    int parameter() {
        long long v = integer();
        if (v < -1000000 || v > 1000000) throw ParseError("parameter out of range", pos_);
        return static_cast<int>(v);
    }

    long long integer() {
        skip_ws();
        std::size_t start = pos_;
        bool neg = false;
        if (peek() == '+' || peek() == '-') {
            neg = peek() == '-';
            ++pos_;
        }
        if (!std::isdigit(peek())) throw ParseError("expected an integer", pos_);
        long long v = 0;
        while (std::isdigit(peek())) {
            v = v * 10 + (s_[pos_] - '0');
            if (v > 1000000000000LL) throw ParseError("integer too large", start);
            ++pos_;
        }
        return neg ? -v : v;
    }

    void expect(char c) {
        skip_ws();
        if (peek() != c) throw ParseError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace

KnotExpr parse_expr(const std::string& input) { return Parser(input).parse(); }

namespace {

void check_staircase_form(const LaurentPoly& alex, const std::string& what) {
    if (alex.is_zero() || !alex.is_symmetric() || alex.value_at_one() != 1)
        throw CertificationError(what + ": Alexander polynomial is not in L-space form");
    std::vector<int> sup = alex.support_descending();
    for (std::size_t i = 0; i < sup.size(); ++i) {
        BigInt expected = (i % 2 == 0) ? 1 : -1;
        if (alex.coeff(sup[i]) != expected)
            throw CertificationError(what + ": coefficients are not alternating +-1");
    }
}

}  // namespace

LSpaceCertificate certify(const Atom& a) {
    if (a.is_torus()) {
        LaurentPoly alex = torus_alexander(a.p(), a.q());
        check_staircase_form(alex, a.str());
        return {a, (a.p() - 1) * (a.q() - 1) / 2, alex};
    }
    LSpaceCertificate inner = certify(a.companion());
    if (a.q() < a.p() * (2 * inner.genus - 1))
        throw CertificationError(a.str() + ": cable parameter q below the L-space threshold " +
                                 std::to_string(a.p() * (2 * inner.genus - 1)));
    LaurentPoly alex = cable_alexander(inner.alexander, a.p(), a.q());
    check_staircase_form(alex, a.str());
    int g = a.p() * inner.genus + (a.p() - 1) * (a.q() - 1) / 2;
    if (alex.max_exp() != g)
        throw EngineError(a.str() + ": cable genus does not match polynomial degree");
    return {a, g, alex};
}

bool is_certified(const Atom& a) {
    try {
        certify(a);
        return true;
    } catch (const CertificationError&) {
        return false;
    }
}

int genus(const Atom& a) { return certify(a).genus; }

long long genus_bound(const KnotExpr& e) {
    long long g = 0;
    for (const auto& [a, m] : e.terms()) g += (m < 0 ? -m : m) * genus(a);
    return g;
}

}  // namespace concordia
