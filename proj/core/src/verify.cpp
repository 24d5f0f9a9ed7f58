#include "concordia/verify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "concordia/cabling.hpp"
#include "concordia/complex.hpp"
#include "concordia/engine.hpp"
#include "concordia/fulltwist.hpp"
#include "concordia/laurent.hpp"
#include "concordia/parallel.hpp"
#include "concordia/poset.hpp"
#include "concordia/surgery.hpp"

namespace concordia {

// Golden value, frozen after two independent routes agreed (the tower engine
// and a direct U-power image search in the truncated homology): nu+ of
// T(2,5) + 2*T(2,3) - C(2,5;T(2,3)), whose tau vanishes. V = [1,1,0].
const int kSeparatingExampleNuPlus = 2;

namespace {

struct Tally {
    std::size_t checks = 0;
    std::string failure;  // first counterexample only

    bool ok() const { return failure.empty(); }
    template <class... Args>
    void expect(bool cond, Args&&... parts) {
        ++checks;
        if (cond || !failure.empty()) return;
        std::ostringstream msg;
        (msg << ... << parts);
        failure = msg.str();
    }
};

CheckResult wrap(const std::string& suite, const Tally& t) {
    return {suite, t.ok(), t.checks, t.failure};
}

long long torus_nu(int p, int q) { return static_cast<long long>(p - 1) * (q - 1) / 2; }

KnotExpr atom_expr(const Atom& a) { return KnotExpr::atom(a); }

// ---- torus: engine nu+ across the coprime grid ------------------------------

CheckResult suite_torus() {
    Tally t;
    std::vector<std::pair<int, int>> grid;
    for (int p = 2; p <= 8; ++p)
        for (int q = p + 1; q <= 8; ++q)
            if (std::gcd(p, q) == 1) grid.emplace_back(p, q);
    std::vector<int> got(grid.size());
    parallel_for(grid.size(), [&](std::size_t i) {
        got[i] = nu_plus(atom_expr(Atom::torus(grid[i].first, grid[i].second)));
    });
    for (std::size_t i = 0; i < grid.size(); ++i) {
        auto [p, q] = grid[i];
        t.expect(got[i] == torus_nu(p, q), "nu+(T(", p, ",", q, ")) = ", got[i], ", expected ",
                 torus_nu(p, q));
    }
    return wrap("torus", t);
}

// ---- oracle: engine V_k against torsion coefficients ------------------------

CheckResult suite_oracle() {
    Tally t;
    std::vector<Atom> family = certified_family(12);
    t.expect(family.size() >= 40, "certified family unexpectedly small: ", family.size());
    std::vector<std::string> failures(family.size());
    parallel_for(family.size(), [&](std::size_t idx) {
        LSpaceCertificate cert = certify(family[idx]);
        BifilteredComplex c = BifilteredComplex::staircase(cert);
        for (int k = 0; k <= cert.genus; ++k) {
            int engine = v_k(c, k);
            BigInt oracle = torsion_coeff(cert.alexander, k);
            if (BigInt(engine) != oracle) {
                std::ostringstream msg;
                msg << "V_" << k << "(" << family[idx].str() << ") = " << engine
                    << " but the torsion coefficient is " << oracle;
                failures[idx] = msg.str();
                return;
            }
        }
    });
    for (std::size_t idx = 0; idx < family.size(); ++idx) {
        t.checks += static_cast<std::size_t>(genus(family[idx])) + 1;
        t.expect(failures[idx].empty(), failures[idx]);
    }
    return wrap("oracle", t);
}

// ---- cp2: disk-class constraints realized at both twist-interval endpoints --

CheckResult suite_cp2() {
    Tally t;
    struct Row {
        int n;
        KnotExpr knot;
        long long expected_nu;
    };
    std::vector<Row> rows;
    for (int n = 2; n <= 8; ++n) {
        rows.push_back({n, atom_expr(Atom::torus(n, n + 1)), torus_nu(n, n + 1)});
        // lower endpoint; T(1,2) is the unknot
        rows.push_back({n, n == 2 ? KnotExpr() : atom_expr(Atom::torus(n - 1, n)),
                        torus_nu(n - 1, n)});
    }
    std::vector<VSequence> seqs(rows.size(), VSequence({0}));
    parallel_for(rows.size(), [&](std::size_t i) { seqs[i] = v_sequence_of(rows[i].knot); });
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const Row& r = rows[i];
        DiskClassVerdict v = check_disk_class(seqs[i], r.n);
        t.expect(v.consistent, r.knot.str(), " violates the ", r.n,
                 "-linking disk-class constraints at k = ", v.witness_k, ": V = ", v.actual,
                 ", required ", v.required);
        t.expect(seqs[i].nu_plus() == r.expected_nu, "nu+(", r.knot.str(),
                 ") = ", seqs[i].nu_plus(), ", expected ", r.expected_nu);
    }
    return wrap("cp2", t);
}

// ---- parity: even-integer classes of f_{n^2} --------------------------------

CheckResult suite_parity() {
    Tally t;
    for (long long n = 1; n <= 60; ++n) {
        std::set<long long> brute = parity_classes(n);
        std::set<long long> closed;
        long long start = (n % 2 == 1) ? 0 : n / 2;
        for (long long i = start; i < n * n; i += n) closed.insert(i);
        t.expect(brute == closed, "parity classes of f_{", n * n, "} differ from the closed form");
        t.expect(static_cast<long long>(brute.size()) == n, "parity class count for n = ", n,
                 " is ", brute.size(), ", expected ", n);
    }
    return wrap("parity", t);
}

// ---- identities: the four algebraic forms of f_{n^2} ------------------------

CheckResult suite_identities() {
    Tally t;
    for (long long n = 1; n <= 99; n += 2) {
        for (long long i = 0; i < n * n; i += n) {
            Rational f = f_p(n * n, i);
            t.expect(f == fn2_form1(n, i), "form 1 differs from f at n = ", n, ", i = ", i);
            t.expect(f == fn2_form2(n, i), "form 2 differs from f at n = ", n, ", i = ", i);
        }
    }
    for (long long n = 2; n <= 98; n += 2) {
        for (long long i = n / 2; i < n * n; i += n) {
            Rational f = f_p(n * n, i);
            t.expect(f == fn2_form3(n, i), "form 3 differs from f at n = ", n, ", i = ", i);
            t.expect(f == fn2_form4(n, i), "form 4 differs from f at n = ", n, ", i = ", i);
        }
    }
    return wrap("identities", t);
}

// ---- recursion: rational-surgery recursion pinned to f_p at q = 1 -----------

CheckResult suite_recursion() {
    Tally t;
    for (long long p = 1; p <= 200 && t.ok(); ++p)
        for (long long i = 0; i < p; ++i)
            t.expect(d_unknot_rational(p, 1, i) == f_p(p, i),
                     "recursion disagrees with the closed form at p = ", p, ", i = ", i);
    return wrap("recursion", t);
}

// ---- wu: exact cable nu+ in the equality regime ------------------------------

CheckResult suite_wu() {
    Tally t;
    const Atom trefoil = Atom::torus(2, 3);
    for (long long q : {3, 5, 7, 9, 11}) {
        long long expected = 2 + (q - 1) / 2;
        t.expect(wu_regime(2, q, 1), "q = ", q, " unexpectedly outside the equality regime");
        CableNu result = cable_nu(atom_expr(trefoil), 2, q);
        t.expect(result.exact && *result.exact == expected, "nu+ of the (2,", q,
                 ")-cable of the trefoil: got ",
                 result.exact ? std::to_string(*result.exact) : "none", ", expected ", expected);
        t.expect(result.route == "engine", "expected the engine route for the certified (2,", q,
                 ")-cable, got ", result.route);
        t.expect(cable_nu_lower(2, q, 1) == expected,
                 "lower bound should meet the exact value at q = ", q);
    }
    return wrap("wu", t);
}

// ---- homwu: the tau-vs-nu+ separating example --------------------------------

CheckResult suite_homwu() {
    Tally t;
    KnotExpr e = parse_expr("T(2,5)+2*T(2,3)-C(2,5;T(2,3))");
    t.expect(tau_additive(e) == 0, "tau of the separating example is ", tau_additive(e),
             ", expected 0");
    int nu = nu_plus(e);
    t.expect(nu >= 1, "nu+ of the separating example is ", nu, ", expected >= 1");
    t.expect(nu == kSeparatingExampleNuPlus, "nu+ of the separating example is ", nu,
             ", the pinned value is ", kSeparatingExampleNuPlus);
    for (long long p = 1; p <= 7; ++p)
        for (long long q = 1; q <= 7; ++q) {
            if (std::gcd(p, q) != 1) continue;
            long long expected = p * nu + (p - 1) * (q - 1) / 2;
            t.expect(g4_cable(p, q, nu) == expected, "cable 4-genus table wrong at (", p, ",", q,
                     ")");
            t.expect(genus_upper(p, q, nu) == expected, "slice-surface bound differs at (", p, ",",
                     q, ")");
        }
    return wrap("homwu", t);
}

// ---- poset: order axioms and monotone invariants on the 27-element universe --

const OrderUniverse& standard_universe() {
    static OrderUniverse u = build_universe(
        {Atom::torus(2, 3), Atom::torus(2, 5), Atom::torus(3, 4)}, 1);
    return u;
}

CheckResult suite_poset() {
    Tally t;
    const OrderUniverse& u = standard_universe();
    const std::size_t n = u.size();
    t.expect(n == 27, "universe size is ", n, ", expected 27");

    for (std::size_t i = 0; i < n; ++i) t.expect(u.leq(i, i), "relation is not reflexive");
    for (std::size_t i = 0; i < n && t.ok(); ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                t.expect(!(u.leq(i, j) && u.leq(j, k)) || u.leq(i, k),
                         "relation is not transitive at (", u.element(i).str(), ", ",
                         u.element(j).str(), ", ", u.element(k).str(), ")");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            t.expect(!(u.leq(i, j) && u.leq(j, i)) || u.class_of(i) == u.class_of(j),
                     "mutually comparable elements landed in different classes");

    std::mt19937 rng(20240817u);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t i = rng() % n, j = rng() % n;
        if (!u.leq(i, j)) {
            --trial;
            continue;
        }
        std::size_t z = rng() % n;
        t.expect(leq(u.element(i) + u.element(z), u.element(j) + u.element(z)),
                 "translation by ", u.element(z).str(), " broke ", u.element(i).str(),
                 " <= ", u.element(j).str());
        t.expect(leq(-u.element(j), -u.element(i)), "negation failed to reverse ",
                 u.element(i).str(), " <= ", u.element(j).str());
    }

    std::vector<MonotoneReport> reports;
    reports.push_back(monotone_check(u, "tau", [](const KnotExpr& e) {
        return Rational(BigInt(tau_additive(e)));
    }));
    reports.push_back(monotone_check(u, "nu+", [](const KnotExpr& e) {
        return Rational(BigInt(cached_nu_plus(e)));
    }));
    for (int k = 0; k <= 3; ++k)
        reports.push_back(monotone_check(u, "V_" + std::to_string(k), [k](const KnotExpr& e) {
            return Rational(BigInt(cached_v(e, k)));
        }));
    for (long long p : {1, 5})
        for (long long i = 0; i < p; ++i) {
            std::string name = "-d(S^3_" + std::to_string(p) + ", " + std::to_string(i) + ")";
            reports.push_back(monotone_check(u, name, [p, i](const KnotExpr& e) {
                long long m = std::min(i, p - i);
                return -(d_unknot_rational(p, 1, i) -
                         2 * Rational(BigInt(cached_v(e, static_cast<int>(m)))));
            }));
        }
    for (const MonotoneReport& r : reports) {
        t.checks += r.pairs_checked;
        if (!r.violations.empty()) {
            const auto& v = r.violations.front();
            t.expect(false, r.invariant, " is not monotone: ", u.element(v.x).str(), " <= ",
                     u.element(v.y).str(), " but ", to_string(v.fx), " > ", to_string(v.fy));
        }
    }
    return wrap("poset", t);
}

// ---- subadditivity: V_{m+n} and nu+ under connected sum ----------------------

CheckResult suite_subadditivity() {
    Tally t;
    const OrderUniverse& u = standard_universe();
    std::mt19937 rng(7117u);
    struct Sample {
        std::size_t x, y;
        int m, n;
    };
    std::vector<Sample> samples;
    for (int trial = 0; trial < 100; ++trial)
        samples.push_back({rng() % u.size(), rng() % u.size(), static_cast<int>(rng() % 6),
                           static_cast<int>(rng() % 6)});
    std::vector<std::string> failures(samples.size());
    parallel_for(samples.size(), [&](std::size_t idx) {
        const Sample& s = samples[idx];
        const KnotExpr &x = u.element(s.x), &y = u.element(s.y);
        int sum = cached_v(x + y, s.m + s.n);
        int vx = cached_v(x, s.m), vy = cached_v(y, s.n);
        if (sum > vx + vy) {
            failures[idx] = "V_" + std::to_string(s.m + s.n) + "(" + (x + y).str() + ") = " +
                            std::to_string(sum) + " exceeds " + std::to_string(vx) + " + " +
                            std::to_string(vy);
            return;
        }
        int nu_sum = cached_nu_plus(x + y);
        if (nu_sum > cached_nu_plus(x) + cached_nu_plus(y))
            failures[idx] = "nu+(" + (x + y).str() + ") = " + std::to_string(nu_sum) +
                            " exceeds nu+(" + x.str() + ") + nu+(" + y.str() + ")";
    });
    for (const std::string& f : failures) {
        t.checks += 2;
        t.expect(f.empty(), f);
    }
    return wrap("subadditivity", t);
}

// ---- fulltwist: admissible linking numbers from the unknot to the trefoil ----

CheckResult suite_fulltwist() {
    Tally t;
    KnotExpr unknot;
    KnotExpr trefoil = atom_expr(Atom::torus(2, 3));
    std::set<int> admissible;
    for (int n = 0; n <= 4; ++n)
        if (!obstruct_full_twist(unknot, trefoil, n).obstructed) admissible.insert(n);
    std::ostringstream got;
    for (int n : admissible) got << n << " ";
    t.expect(admissible == std::set<int>{2},
             "admissible linking numbers are { ", got.str(), "}, the criterion pins { 2 }");
    return wrap("fulltwist", t);
}

}  // namespace

std::vector<Atom> certified_family(int max_genus) {
    std::map<std::string, Atom> seen;
    std::vector<Atom> frontier;
    for (int p = 2; (p - 1) * p / 2 <= max_genus; ++p)
        for (int q = p + 1; (p - 1) * (q - 1) / 2 <= max_genus; ++q)
            if (std::gcd(p, q) == 1) {
                Atom a = Atom::torus(p, q);
                seen.emplace(a.str(), a);
                frontier.push_back(a);
            }
    while (!frontier.empty()) {
        std::vector<Atom> next;
        for (const Atom& companion : frontier) {
            int g = genus(companion);
            for (int p = 2; p * g + (p - 1) * (p * (2 * g - 1) + 1 - 1) / 2 <= max_genus; ++p)
                for (int q = p * (2 * g - 1); p * g + (p - 1) * (q - 1) / 2 <= max_genus; ++q) {
                    if (q < 2 || std::gcd(p, q) != 1) continue;
                    Atom a = Atom::cable(p, q, companion);
                    if (seen.emplace(a.str(), a).second) next.push_back(a);
                }
        }
        frontier = std::move(next);
    }
    std::vector<Atom> family;
    family.reserve(seen.size());
    for (const auto& [key, a] : seen) family.push_back(a);
    return family;
}

std::vector<std::string> verify_suite_names() {
    return {"torus", "oracle",        "cp2",   "parity", "identities", "recursion",
            "wu",    "homwu",         "poset", "subadditivity", "fulltwist"};
}

CheckResult run_verify_suite(const std::string& name) {
    if (name == "torus") return suite_torus();
    if (name == "oracle") return suite_oracle();
    if (name == "cp2") return suite_cp2();
    if (name == "parity") return suite_parity();
    if (name == "identities") return suite_identities();
    if (name == "recursion") return suite_recursion();
    if (name == "wu") return suite_wu();
    if (name == "homwu") return suite_homwu();
    if (name == "poset") return suite_poset();
    if (name == "subadditivity") return suite_subadditivity();
    if (name == "fulltwist") return suite_fulltwist();
    throw std::invalid_argument("unknown verification suite: " + name);
}

std::vector<CheckResult> run_verify(const std::string& name_or_all) {
    std::vector<CheckResult> out;
    if (name_or_all == "all") {
        for (const std::string& name : verify_suite_names()) out.push_back(run_verify_suite(name));
    } else {
        out.push_back(run_verify_suite(name_or_all));
    }
    return out;
}

const std::vector<CriterionSpec>& acceptance_criteria() {
    static const std::vector<CriterionSpec> criteria = {
        {1, "nu+ of T(p,q) equals (p-1)(q-1)/2 on the coprime grid 2 <= p < q <= 8", "torus"},
        {2, "engine V_k equals the torsion coefficient t_k for every certified atom of genus <= 12",
         "oracle"},
        {3, "disk-class constraints hold for T(n,n+1) and T(n,n-1) with both interval endpoints "
            "attained, 2 <= n <= 8",
         "cp2"},
        {4, "even-integer classes of f_{n^2} match the closed form for n <= 60", "parity"},
        {5, "the four algebraic forms of f_{n^2} agree exactly through n = 99", "identities"},
        {6, "the rational-surgery recursion reduces to f_p at q = 1 for p <= 200", "recursion"},
        {7, "engine nu+ of (2,q)-cables of the trefoil matches the closed form, q in {3,...,11}",
         "wu"},
        {8, "the separating example has tau 0 and pinned nu+, and its cable 4-genus table matches",
         "homwu"},
        {9, "order axioms, translation invariance, negation, and monotone invariants hold on the "
            "27-element universe",
         "poset"},
        {10, "V_{m+n} and nu+ are subadditive on 100 sampled pairs", "subadditivity"},
        {11, "admissible linking numbers from U to T(2,3) over 0..4 are exactly {2}", "fulltwist"},
    };
    return criteria;
}

}  // namespace concordia
