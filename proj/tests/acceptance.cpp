// Acceptance suite: runs each release criterion with its time budget and
// prints one pass/fail line per criterion.  Criterion 1 drives the installed
// CLI binary (path given as argv[1]); the rest call the library directly.
#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "modnorm/bigpicture.hpp"
#include "modnorm/json_io.hpp"
#include "modnorm/normalizer.hpp"

using namespace modnorm;

namespace {

std::string g_cli_path;

struct Criterion {
    int number;
    std::string name;
    double budget_seconds;
    std::function<bool(std::string&)> run;
};

std::string run_cli(const std::string& args, int& exit_code) {
    std::string cmd = g_cli_path + " " + args;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        exit_code = -1;
        return "";
    }
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    int status = pclose(pipe);
    exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return out;
}

LatticeClass L(int64_t e) { return LatticeClass(Rat(Int(e)), 0, 1); }

bool criterion1(std::string& detail) {
    int rc = 0;
    std::string out = run_cli("quotient -N 275 -W 25 --format json", rc);
    if (rc != 0) {
        detail = "CLI exited with " + std::to_string(rc);
        return false;
    }
    auto j = nlohmann::json::parse(out, nullptr, false);
    if (j.is_discarded()) {
        detail = "CLI emitted unparsable JSON";
        return false;
    }
    int order = j["quotient"]["order"].get<int>();
    auto orders = j["quotient"]["element_orders"].get<std::vector<int>>();
    bool has3 = std::count(orders.begin(), orders.end(), 3) > 0;
    detail = "order " + std::to_string(order) + (has3 ? ", has an order-3 element" : ", NO order-3 element");
    return order == 6 && has3;
}

bool criterion2(std::string& detail) {
    auto t = solve_bjci_congruences(1);
    std::vector<std::pair<int, int>> diag{{1, 2}, {2, 0}, {4, 1}};
    std::vector<std::pair<int, int>> anti{{0, 3}, {3, 4}};
    bool ok = t.diagonal == diag && t.antidiagonal == anti;
    detail = ok ? "diagonal {(2,0),(4,1),(1,2)}, antidiagonal {(0,3),(3,4)}" : "solution sets differ";
    return ok;
}

bool criterion3(std::string& detail) {
    for (int64_t N : {175, 275, 325, 425, 475, 775}) {
        GroupSpec g(N, {25});
        auto s = sigma(N);
        if (in_extended_group(s.matrix, g)) {
            detail = "sigma inside the group at N=" + std::to_string(N);
            return false;
        }
        ProjectiveMatrix s3 = compose(s.matrix, s.matrix, s.matrix);
        if (coset_of(s3, N) != std::optional<int64_t>(1)) {
            detail = "sigma^3 not in Gamma0(N) at N=" + std::to_string(N);
            return false;
        }
        if (!normalizes(s.matrix, g)) {
            detail = "sigma fails conjugation closure at N=" + std::to_string(N);
            return false;
        }
        int64_t expect = 3 * (int64_t(1) << (omega(N) - 1));
        int got = quotient_group(g).order;
        if (got != expect) {
            detail = "quotient order " + std::to_string(got) + " at N=" + std::to_string(N);
            return false;
        }
    }
    detail = "six levels, all sigma properties and quotient orders match";
    return true;
}

bool criterion4(std::string& detail) {
    for (int64_t q : {7, 11, 13, 19, 23, 29, 31}) {
        int64_t N = 25 * q;
        GroupSpec g(N, {25, q});
        auto s = sigma(N);
        bool conj_in = in_extended_group(compose(s.matrix, atkin_lehner(N, q), inverse(s.matrix)), g);
        bool expect = (q % 5 == 1 || q % 5 == 4);
        if (conj_in != expect) {
            detail = "mismatch at q=" + std::to_string(q);
            return false;
        }
    }
    detail = "sigma w_q sigma^{-1} membership iff q = +-1 (mod 5), all seven primes";
    return true;
}

bool criterion5(std::string& detail) {
    struct Case {
        int64_t N;
        std::vector<int64_t> W;
        NormalizerCase kind;
    };
    std::vector<Case> cases{{175, {25, 7}, NormalizerCase::Bad25},
                            {30, {6}, NormalizerCase::NoSquare25},
                            {275, {11}, NormalizerCase::NoSquare25}};
    std::ostringstream orders;
    for (const auto& c : cases) {
        GroupSpec g(c.N, c.W);
        auto res = classify(g);
        if (res.kind != c.kind) {
            detail = "wrong case at N=" + std::to_string(c.N);
            return false;
        }
        for (int64_t e : res.atkin_lehner_generators)
            if (!normalizes(atkin_lehner(c.N, e), g)) {
                detail = "w_" + std::to_string(e) + " fails at N=" + std::to_string(c.N);
                return false;
            }
        auto q = quotient_group(g);
        int64_t expect = (int64_t(1) << omega(c.N)) / static_cast<int64_t>(g.closure().elements.size());
        if (q.order != expect) {
            detail = "order " + std::to_string(q.order) + " != 2^omega/|closure| at N=" + std::to_string(c.N);
            return false;
        }
        for (int o : q.element_orders)
            if (o > 2) {
                detail = "element of order > 2 in B(N)/W at N=" + std::to_string(c.N);
                return false;
            }
        orders << (orders.tellp() > 0 ? "," : "") << q.order;
    }
    detail = "cases Bad25/NoSquare25/NoSquare25 with B(N)/W orders " + orders.str();
    return true;
}

bool criterion6(std::string& detail) {
    if (snake(6) != std::vector<LatticeClass>({L(1), L(2), L(3), L(6)})) {
        detail = "snake(6) differs";
        return false;
    }
    std::vector<std::pair<std::vector<int64_t>, size_t>> cases{{{2}, 2}, {{6}, 2}, {{2, 3}, 4}};
    auto sn = snake(6);
    for (const auto& [W, size] : cases) {
        GroupSpec g(6, W);
        auto orb = orbit(g, L(1));
        if (orb.size() != size) {
            detail = "orbit size mismatch";
            return false;
        }
        for (const auto& X : orb)
            if (std::find(sn.begin(), sn.end(), X) == sn.end()) {
                detail = "orbit left the snake";
                return false;
            }
    }
    detail = "snake(6) = {L1,L2,L3,L6}; orbit sizes 2, 2, 4 inside the snake";
    return true;
}

bool criterion7(std::string& detail) {
    GeneratorSet gens = gamma0_generators(275);
    gens.members.push_back(atkin_lehner(275, 25));
    auto fixed = fixed_classes(conjugate_by_upsilon(gens, 5), 5, 11);
    bool ok = fixed == std::vector<LatticeClass>({L(1), L(11)});
    std::ostringstream os;
    for (const auto& X : fixed) os << " " << X.str();
    detail = "fixed classes:" + os.str();
    return ok;
}

bool criterion8(std::string& detail) {
    std::vector<std::pair<int64_t, int64_t>> expect{{6, 12}, {11, 12}, {30, 72}};
    for (auto [N, size] : expect) {
        if (p1_orbit_size(N) != size) {
            detail = "coset space size differs at N=" + std::to_string(N);
            return false;
        }
        if (p1_orbit_size(N) != psi_index(N)) {
            detail = "coset action not transitive at N=" + std::to_string(N);
            return false;
        }
        for (const auto& g : gamma0_generators(N).members)
            if (!in_gamma0(g, N)) {
                detail = "generator outside Gamma0(" + std::to_string(N) + ")";
                return false;
            }
    }
    detail = "coset spaces 12, 12, 72; all Schreier generators inside Gamma0(N)";
    return true;
}

bool criterion9(std::string& detail) {
    std::mt19937_64 rng(20240606);
    auto sn6 = snake(6);
    auto gens6 = gamma0_generators(6);
    auto random_matrix = [&]() {
        auto draw = [&] { return static_cast<long long>(rng() % 15) - 7; };
        for (;;) {
            long long a = draw(), b = draw(), c = draw(), d = draw();
            if (a * d - b * c > 0) return ProjectiveMatrix(a, b, c, d);
        }
    };
    auto random_class = [&]() {
        int64_t t = 1 + rng() % 6;
        int64_t g = 0;
        if (t > 1)
            do {
                g = rng() % t;
            } while (std::gcd(g, t) != 1 || g == 0);
        if (g == 0) t = 1;
        return LatticeClass(Rat(Int(1 + rng() % 12), Int(1 + rng() % 6)), g, t);
    };
    int fixed = 0;
    for (int trial = 0; trial < 500; ++trial) {
        ProjectiveMatrix A;
        switch (rng() % 3) {
            case 0:
                A = gens6.members[rng() % gens6.members.size()];
                break;
            case 1:
                A = atkin_lehner(6, exact_divisors(6)[rng() % 4]);
                break;
            default:
                A = random_matrix();
        }
        LatticeClass X = (rng() % 2) ? sn6[rng() % sn6.size()] : random_class();
        bool by_action = act(A, X) == X;
        // Conway's criterion: P A P^{-1} in PSL2(Z), P = (s, g/t; 0, 1).
        Rat gt(X.g(), X.t());
        Rat a(A.a()), b(A.b()), c(A.c()), d(A.d());
        RationalMatrix conj;
        conj.a = (X.s() * a + gt * c) / X.s();
        conj.b = (X.s() * b + gt * d) - (X.s() * a + gt * c) * gt / X.s();
        conj.c = c / X.s();
        conj.d = d - c * gt / X.s();
        bool by_oracle = canonicalize(conj).det() == 1;
        if (by_action != by_oracle) {
            detail = "disagreement at trial " + std::to_string(trial);
            return false;
        }
        if (by_action) ++fixed;
    }
    detail = "500 seeded pairs agree (" + std::to_string(fixed) + " fixing)";
    return fixed > 0 && fixed < 500;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <path-to-modnorm-cli>\n";
        return 2;
    }
    g_cli_path = argv[1];

    std::vector<Criterion> criteria{
        {1, "order-6 automorphism group of X0(275)/<w25>", 5.0, criterion1},
        {2, "B_j C_i congruence tables at M' = 1 (mod 5)", 1.0, criterion2},
        {3, "sigma order-3 sweep over six levels", 30.0, criterion3},
        {4, "twist criterion over the prime sweep", 30.0, criterion4},
        {5, "case collapse to B(N)/W", 10.0, criterion5},
        {6, "snake and orbit sizes at level 6", 5.0, criterion6},
        {7, "fixed classes of the conjugated group", 30.0, criterion7},
        {8, "Schreier coset spaces and generators", 10.0, criterion8},
        {9, "stabilizer oracle equivalence", 10.0, criterion9},
    };

    int failures = 0;
    for (auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool pass = false;
        try {
            pass = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > c.budget_seconds) {
            pass = false;
            detail += " [over " + std::to_string(c.budget_seconds) + "s budget]";
        }
        std::printf("[%s] criterion %d: %s — %s (%.2fs)\n", pass ? "PASS" : "FAIL", c.number,
                    c.name.c_str(), detail.c_str(), secs);
        if (!pass) ++failures;
    }
    if (failures) std::printf("%d criterion(s) FAILED\n", failures);
    else std::printf("all %zu criteria passed\n", criteria.size());
    return failures == 0 ? 0 : 1;
}
