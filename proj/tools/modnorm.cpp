// Command-line front end: classification of normalizers of <Gamma0(N), W_N>,
// quotient-group tables, Big Picture queries, and the verification sweeps.
#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "modnorm/bigpicture.hpp"
#include "modnorm/json_io.hpp"
#include "modnorm/normalizer.hpp"

namespace {

using namespace modnorm;

void emit(const Json& payload) { std::cout << with_schema(payload).dump(2) << "\n"; }

LatticeClass parse_class(const std::string& text) {
    auto parse_frac = [](const std::string& s, int64_t& num, int64_t& den) {
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) {
                num = std::stoll(s);
                den = 1;
            } else {
                num = std::stoll(s.substr(0, slash));
                den = std::stoll(s.substr(slash + 1));
            }
        } catch (const std::exception&) {
            throw DomainError(Errc::PreconditionViolation, "cannot parse class component '" + s + "'");
        }
    };
    std::string spart = text, gpart;
    if (auto colon = text.find(':'); colon != std::string::npos) {
        spart = text.substr(0, colon);
        gpart = text.substr(colon + 1);
    }
    int64_t sn, sd;
    parse_frac(spart, sn, sd);
    if (sn <= 0 || sd <= 0) throw DomainError(Errc::PreconditionViolation, "class needs s > 0");
    int64_t g = 0, t = 1;
    if (!gpart.empty()) parse_frac(gpart, g, t);
    return LatticeClass(Rat(Int(sn), Int(sd)), Int(g), Int(t));
}

std::string quotient_text(const QuotientGroupTable& q) {
    std::ostringstream os;
    os << "order " << q.order << ", " << (q.abelian ? "abelian" : "non-abelian") << "\n";
    os << "element orders:";
    for (int o : q.element_orders) os << " " << o;
    os << "\nrepresentatives:\n";
    for (int k = 0; k < q.order; ++k)
        os << "  [" << k << "] " << q.element_reps[k].str() << " (order " << q.element_orders[k] << ")\n";
    os << "table:\n";
    for (const auto& row : q.table) {
        os << " ";
        for (int v : row) os << " " << v;
        os << "\n";
    }
    return os.str();
}

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;
};

// Brute-force tables for the B_j C_i congruence systems.
CheckResult check_bjci_tables() {
    using PairList = std::vector<std::pair<int, int>>;
    CheckResult r{"bjci-tables", true, ""};
    auto t1 = solve_bjci_congruences(1);
    PairList want_diag{{1, 2}, {2, 0}, {4, 1}};
    PairList want_anti{{0, 3}, {3, 4}};
    if (t1.diagonal != want_diag || t1.antidiagonal != want_anti) {
        r.pass = false;
        r.detail = "m=1 tables differ from the frozen solution sets";
        return r;
    }
    for (int m = 1; m <= 4; ++m) {
        auto t = solve_bjci_congruences(m);
        int jm = 0;
        while ((m * jm) % 5 != 2) ++jm;
        std::pair<int, int> sig{jm, 0};
        bool in_diag = std::find(t.diagonal.begin(), t.diagonal.end(), sig) != t.diagonal.end();
        bool in_anti = std::find(t.antidiagonal.begin(), t.antidiagonal.end(), sig) != t.antidiagonal.end();
        bool want_in_diag = (m == 1 || m == 4);  // m^2 = 1 (mod 5)
        if ((want_in_diag && !in_diag) || (!want_in_diag && !in_anti)) {
            r.pass = false;
            r.detail = "sigma pair (j,0) missing from the expected system at m=" + std::to_string(m);
            return r;
        }
        if (t.diagonal.empty() && t.antidiagonal.empty()) {
            r.pass = false;
            r.detail = "empty solution sets at m=" + std::to_string(m);
            return r;
        }
    }
    return r;
}

// sigma w_q sigma^{-1} lies in <Gamma0(25q), w_25, w_q> iff q = +-1 (mod 5).
CheckResult check_twist_sweep() {
    CheckResult r{"twist-q-sweep", true, ""};
    for (int64_t q : {7, 11, 13, 19, 23, 29, 31}) {
        int64_t N = 25 * q;
        GroupSpec g(N, {25, q});
        auto s = sigma(N);
        ProjectiveMatrix z = compose(s.matrix, atkin_lehner(N, q), inverse(s.matrix));
        bool conj_in = in_extended_group(z, g);
        bool expect = (q % 5 == 1 || q % 5 == 4);
        if (conj_in != expect) {
            r.pass = false;
            r.detail = "q=" + std::to_string(q);
            return r;
        }
    }
    return r;
}

CheckResult check_sigma_order3() {
    CheckResult r{"sigma-order3-sweep", true, ""};
    for (int64_t N : {175, 275, 325, 425, 475, 775}) {
        GroupSpec g(N, {25});
        auto s = sigma(N);
        ProjectiveMatrix s3 = compose(s.matrix, s.matrix, s.matrix);
        bool ok = !in_extended_group(s.matrix, g) && coset_of(s3, N) == std::optional<int64_t>(1) &&
                  normalizes(s.matrix, g) &&
                  in_extended_group(compose(s.matrix, sigma_inverse_rep(N)), g);
        int64_t expect_order = 3 * (int64_t(1) << (omega(N) - 1));
        ok = ok && quotient_group(g).order == expect_order;
        if (!ok) {
            r.pass = false;
            r.detail = "N=" + std::to_string(N);
            return r;
        }
    }
    return r;
}

// Conjugate each emitted Atkin-Lehner generator by Y_u, reduce to the
// Gamma0(M) component through the delta representative of its coset, and
// check the S' congruence a c = b d = 0 (mod u).
CheckResult check_sprime() {
    CheckResult r{"sprime-congruence", true, ""};
    struct Case { int64_t N, u; };
    for (auto [N, u] : {Case{98, 7}, Case{242, 11}}) {
        int64_t M = N / (u * u);
        GroupSpec g(N, {u * u});
        for (int64_t e : classify(g).atkin_lehner_generators) {
            ProjectiveMatrix z = compose(ProjectiveMatrix(Int(u), 0, 0, 1), atkin_lehner(N, e),
                                         ProjectiveMatrix(1, 0, 0, Int(u)));
            auto ep = coset_of(z, M);
            if (!ep) {
                r.pass = false;
                r.detail = "conjugate of w_" + std::to_string(e) + " left Gamma0*(" + std::to_string(M) + ")";
                return r;
            }
            ProjectiveMatrix reduced = compose(inverse(delta_rep(*ep, M, u)), z);
            if (!in_gamma0(reduced, M) || !sprime_member(reduced, N, {u})) {
                r.pass = false;
                r.detail = "N=" + std::to_string(N) + " e=" + std::to_string(e);
                return r;
            }
        }
    }
    return r;
}

// Seeded sample: coset_of recovers d on random products w_d * gamma.
CheckResult check_coset_sample(uint64_t seed) {
    CheckResult r{"coset-oracle-sample", true, ""};
    std::mt19937_64 rng(seed);
    const int64_t N = 30;
    auto gens = gamma0_generators(N);
    auto exact = exact_divisors(N);
    for (int trial = 0; trial < 500; ++trial) {
        int64_t d = exact[rng() % exact.size()];
        ProjectiveMatrix x = atkin_lehner(N, d);
        size_t len = 1 + rng() % 6;
        for (size_t w = 0; w < len; ++w) x = compose(x, gens.members[rng() % gens.members.size()]);
        if (coset_of(x, N) != std::optional<int64_t>(d)) {
            r.pass = false;
            r.detail = "trial " + std::to_string(trial);
            return r;
        }
    }
    return r;
}

int run_paper_checks(uint64_t seed, const std::string& format) {
    std::vector<CheckResult> results;
    results.push_back(check_bjci_tables());
    results.push_back(check_twist_sweep());
    results.push_back(check_sigma_order3());
    results.push_back(check_sprime());
    results.push_back(check_coset_sample(seed));
    bool all = true;
    for (const auto& c : results) all = all && c.pass;
    if (format == "json") {
        Json checks = Json::array();
        for (const auto& c : results) {
            Json j;
            j["name"] = c.name;
            j["pass"] = c.pass;
            if (!c.detail.empty()) j["detail"] = c.detail;
            checks.push_back(j);
        }
        Json payload;
        payload["checks"] = checks;
        payload["pass"] = all;
        emit(payload);
    } else {
        for (const auto& c : results)
            std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.name
                      << (c.detail.empty() ? "" : "  (" + c.detail + ")") << "\n";
        std::cout << (all ? "all checks passed" : "some checks FAILED") << "\n";
    }
    return all ? 0 : 1;
}

int run_verify(int64_t N, const std::vector<int64_t>& W, const std::string& format) {
    GroupSpec g(N, W);
    NormalizerResult res = classify(g);
    std::vector<CheckResult> results;
    for (int64_t e : res.atkin_lehner_generators) {
        CheckResult c{"normalizes(w_" + std::to_string(e) + ")", normalizes(atkin_lehner(N, e), g), ""};
        results.push_back(c);
    }
    if (res.sigma)
        results.push_back({"normalizes(sigma)", normalizes(res.sigma->matrix, g), ""});
    bool all = true;
    for (const auto& c : results) all = all && c.pass;
    if (format == "json") {
        Json checks = Json::array();
        for (const auto& c : results) checks.push_back(Json{{"name", c.name}, {"pass", c.pass}});
        Json payload;
        payload["group"] = group_spec_json(g);
        payload["case"] = case_name(res.kind);
        payload["checks"] = checks;
        payload["pass"] = all;
        emit(payload);
    } else {
        std::cout << "case " << case_name(res.kind) << "\n";
        for (const auto& c : results) std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << "\n";
    }
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"normalizers of <Gamma0(N), W_N> and modular automorphism groups"};
    app.require_subcommand(1);

    int64_t N = 0;
    std::vector<int64_t> W;
    std::string format = "text";
    uint64_t seed = 1;
    int64_t orbit_base = -1;
    std::string class_a, class_b;

    auto add_common = [&](CLI::App* sub, bool with_w) {
        sub->add_option("-N", N, "level")->required();
        if (with_w) sub->add_option("-W", W, "Atkin-Lehner divisors")->delimiter(',');
        sub->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
        return sub;
    };

    auto* cmd_classify = add_common(app.add_subcommand("classify", "classify the normalizer case"), true);
    auto* cmd_verify = add_common(app.add_subcommand("verify", "verify conjugation closure on generators"), true);
    auto* cmd_quotient = add_common(app.add_subcommand("quotient", "finite quotient group table"), true);
    auto* cmd_snake = add_common(app.add_subcommand("snake", "the (N|1)-snake"), false);
    auto* cmd_orbit = add_common(app.add_subcommand("orbit", "orbits of snake classes under W"), true);
    cmd_orbit->add_option("--base", orbit_base, "divisor e: only the orbit of L_e");
    auto* cmd_gens = add_common(app.add_subcommand("gens", "Schreier generators of Gamma0(N)"), false);
    auto* cmd_sigma = add_common(app.add_subcommand("sigma", "the order-3 normalizer element"), false);
    auto* cmd_xstar = add_common(app.add_subcommand("xstar", "Aut(X0*(N^2)) for squarefree N coprime to 6"), false);
    auto* cmd_hyper = app.add_subcommand("hyperdist", "hyperdistance between two classes");
    cmd_hyper->add_option("first", class_a, "class, e.g. 2 or 11/5:2/5")->required();
    cmd_hyper->add_option("second", class_b)->required();
    cmd_hyper->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
    auto* cmd_checks = app.add_subcommand("paper-checks", "verification sweeps");
    cmd_checks->add_option("--seed", seed, "seed for sampled checks");
    cmd_checks->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 64;
    }

    try {
        if (*cmd_classify) {
            GroupSpec g(N, W);
            NormalizerResult res = classify(g);
            QuotientGroupTable q = quotient_group(g);
            if (format == "json") {
                emit(normalizer_result_json(res, q));
            } else {
                std::cout << "N = " << N << ", closure = [";
                for (size_t k = 0; k < g.closure().elements.size(); ++k)
                    std::cout << (k ? "," : "") << g.closure().elements[k];
                std::cout << "]\ncase " << case_name(res.kind) << "\n";
                std::cout << "normalizer generators: Gamma0(" << N << ") and w_d for d in [";
                for (size_t k = 0; k < res.atkin_lehner_generators.size(); ++k)
                    std::cout << (k ? "," : "") << res.atkin_lehner_generators[k];
                std::cout << "]\n";
                if (res.sigma)
                    std::cout << "sigma = " << res.sigma->matrix.str() << "  (j=" << res.sigma->j
                              << ", i=" << res.sigma->i << ")\n";
                std::cout << "conjugation level M = " << res.conjugation_level << "\n";
                std::cout << "quotient: " << quotient_text(q);
            }
            return 0;
        }
        if (*cmd_verify) return run_verify(N, W, format);
        if (*cmd_quotient) {
            GroupSpec g(N, W);
            QuotientGroupTable q = quotient_group(g);
            if (format == "json") {
                Json payload;
                payload["N"] = N;
                payload["W"] = W;
                payload["quotient"] = quotient_json(q);
                emit(payload);
            } else {
                std::cout << quotient_text(q);
            }
            return 0;
        }
        if (*cmd_snake) {
            auto sn = snake(N);
            if (format == "json") {
                Json arr = Json::array();
                for (const auto& x : sn) arr.push_back(lattice_json(x));
                Json payload;
                payload["N"] = N;
                payload["snake"] = arr;
                emit(payload);
            } else {
                std::cout << "[";
                for (size_t k = 0; k < sn.size(); ++k)
                    std::cout << (k ? "," : "") << sn[k].s().numerator();
                std::cout << "]\n";
            }
            return 0;
        }
        if (*cmd_orbit) {
            GroupSpec g(N, W);
            std::vector<std::vector<LatticeClass>> orbits;
            if (orbit_base >= 0) {
                orbits.push_back(orbit(g, LatticeClass(Rat(Int(orbit_base)), 0, 1)));
            } else {
                std::set<LatticeClass> seen;
                for (const auto& x : snake(N)) {
                    if (seen.count(x)) continue;
                    auto orb = orbit(g, x);
                    for (const auto& y : orb) seen.insert(y);
                    orbits.push_back(orb);
                }
            }
            if (format == "json") {
                Json arr = Json::array();
                for (const auto& orb : orbits) {
                    Json one = Json::array();
                    for (const auto& x : orb) one.push_back(lattice_json(x));
                    arr.push_back(one);
                }
                Json payload;
                payload["N"] = N;
                payload["W"] = W;
                payload["orbits"] = arr;
                emit(payload);
            } else {
                for (const auto& orb : orbits) {
                    for (size_t k = 0; k < orb.size(); ++k) std::cout << (k ? " " : "") << orb[k].str();
                    std::cout << "  (size " << orb.size() << ")\n";
                }
            }
            return 0;
        }
        if (*cmd_gens) {
            auto gens = gamma0_generators(N);
            if (format == "json") {
                emit(generator_set_json(gens));
            } else {
                std::cout << gens.label << ": " << gens.members.size()
                          << " generators, coset space size " << p1_orbit_size(N) << "\n";
                for (const auto& m : gens.members) std::cout << "  " << m.str() << "\n";
            }
            return 0;
        }
        if (*cmd_sigma) {
            auto s = sigma(N);
            if (format == "json") {
                Json payload;
                payload["N"] = N;
                Json sj = matrix_json(s.matrix);
                sj["j"] = s.j;
                sj["i"] = s.i;
                payload["sigma"] = sj;
                emit(payload);
            } else {
                std::cout << "sigma = " << s.matrix.str() << "  det " << s.matrix.det() << "  (j=" << s.j
                          << ", i=" << s.i << ")\n";
            }
            return 0;
        }
        if (*cmd_xstar) {
            XstarAut a = xstar_square_aut(N);
            const char* name = (a == XstarAut::Cyclic3) ? "Cyclic3" : "Trivial";
            if (format == "json") {
                Json payload;
                payload["N"] = N;
                payload["aut"] = name;
                payload["advisory"] = kXstarAdvisory;
                emit(payload);
            } else {
                std::cout << "Aut(X0*(" << N << "^2)) = " << (a == XstarAut::Cyclic3 ? "Z/3Z" : "trivial")
                          << "\nadvisory: " << kXstarAdvisory << "\n";
            }
            return 0;
        }
        if (*cmd_hyper) {
            Int h = hyperdistance(parse_class(class_a), parse_class(class_b));
            if (format == "json") {
                Json payload;
                payload["hyperdistance"] = int_json(h);
                emit(payload);
            } else {
                std::cout << h << "\n";
            }
            return 0;
        }
        if (*cmd_checks) return run_paper_checks(seed, format);
    } catch (const DomainError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    return 0;
}
