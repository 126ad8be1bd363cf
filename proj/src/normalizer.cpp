#include "modnorm/normalizer.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

namespace modnorm {

namespace {

constexpr size_t kClosureCap = 1024;

// normalizes() is called repeatedly for the same level during sweeps; the
// Schreier enumeration is the expensive part, so memoize it per level.
const GeneratorSet& gamma0_generators_cached(int64_t N) {
    static std::mutex mu;
    static std::map<int64_t, GeneratorSet> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(N);
    if (it == cache.end()) it = cache.emplace(N, gamma0_generators(N)).first;
    return it->second;
}

void require_25_exact(int64_t N) {
    if (N % 25 != 0 || std::gcd<int64_t>(25, N / 25) != 1)
        throw DomainError(Errc::Not25ExactDivisor,
                          "25 is not an exact divisor of " + std::to_string(N));
}

int64_t mod_inverse5(int64_t a) {
    for (int64_t x = 1; x < 5; ++x)
        if ((a * x) % 5 == 1) return x;
    return 0;
}

}  // namespace

const char* case_name(NormalizerCase c) {
    switch (c) {
        case NormalizerCase::NoSquare25: return "NoSquare25";
        case NormalizerCase::Bad25:      return "Bad25";
        case NormalizerCase::Good25:     return "Good25";
    }
    return "?";
}

SigmaData sigma(int64_t N) {
    require_25_exact(N);
    int64_t mp = N / 25;
    int j = static_cast<int>((2 * mod_inverse5(mp % 5)) % 5);
    int i = (5 - j) % 5;
    SigmaData out;
    out.j = j;
    out.i = i;
    out.matrix = ProjectiveMatrix(Int(5) * (Int(mp) * j + 1), Int(-j), Int(-N), Int(5));
    return out;
}

ProjectiveMatrix sigma_inverse_rep(int64_t N) {
    require_25_exact(N);
    int64_t mp = N / 25;
    int i = sigma(N).i;
    return ProjectiveMatrix(Int(5), Int(i), Int(-N), Int(5) * (Int(1) - Int(mp) * i));
}

BjCiSolutions solve_bjci_congruences(int m) {
    if (m < 1 || m > 4)
        throw DomainError(Errc::PreconditionViolation, "residue m must lie in {1,2,3,4}");
    // Test element gamma = (5, -1; M'r, 5k) with 25k + M'r = 1; any level
    // M' = m (mod 5) coprime to 5 gives the same reductions mod 5, so take
    // M' = m itself.
    int64_t mp = m;
    int64_t r = 1;
    while ((mp * r) % 25 != 1) ++r;
    int64_t k = (1 - mp * r) / 25;
    ProjectiveMatrix gamma(5, -1, Int(mp) * r, Int(5) * k);
    BjCiSolutions out;
    for (int j = 0; j <= 4; ++j) {
        for (int i = 0; i <= 4; ++i) {
            ProjectiveMatrix bj(Int(mp) * j + 1, Int(-j), Int(-mp), Int(1));
            ProjectiveMatrix ci(1, Int(i), 0, 1);
            ProjectiveMatrix u = compose(bj, ci);
            ProjectiveMatrix e = compose(u, gamma, inverse(u));
            bool diag = e.a() % 5 == 0 && e.d() % 5 == 0;
            bool anti = e.b() % 5 == 0 && e.c() % 5 == 0;
            if (diag) out.diagonal.emplace_back(j, i);
            if (anti) out.antidiagonal.emplace_back(j, i);
        }
    }
    return out;
}

NormalizerResult classify(const GroupSpec& g) {
    NormalizerResult res{g, NormalizerCase::NoSquare25, exact_divisors(g.level()), std::nullopt, g.level()};
    int64_t lcm_sq = 1;
    for (int64_t d : g.closure().elements)
        if (is_perfect_square(Int(d))) lcm_sq = std::lcm(lcm_sq, d);
    res.conjugation_level = g.level() / lcm_sq;
    if (!g.contains_25()) {
        res.kind = NormalizerCase::NoSquare25;
    } else if (!g.all_pm1_mod5()) {
        res.kind = NormalizerCase::Bad25;
    } else {
        res.kind = NormalizerCase::Good25;
        res.sigma = sigma(g.level());
    }
    return res;
}

bool normalizes(const ProjectiveMatrix& x, const GroupSpec& g) {
    std::vector<ProjectiveMatrix> gens = gamma0_generators_cached(g.level()).members;
    for (int64_t d : g.generator_divisors()) gens.push_back(atkin_lehner(g.level(), d));
    ProjectiveMatrix xi = inverse(x);
    for (const auto& gen : gens) {
        if (!in_extended_group(compose(x, gen, xi), g)) return false;
        if (!in_extended_group(compose(xi, gen, x), g)) return false;
    }
    return true;
}

QuotientGroupTable quotient_group(const GroupSpec& g) {
    NormalizerResult cls = classify(g);
    std::vector<ProjectiveMatrix> reps{ProjectiveMatrix()};
    auto find_rep = [&](const ProjectiveMatrix& x) -> int {
        for (size_t k = 0; k < reps.size(); ++k)
            if (in_extended_group(compose(x, inverse(reps[k])), g)) return static_cast<int>(k);
        return -1;
    };
    auto add_if_new = [&](const ProjectiveMatrix& x) {
        if (find_rep(x) < 0) {
            if (reps.size() >= kClosureCap)
                throw DomainError(Errc::ClosureOverflow, "quotient closure exceeded 1024 elements");
            reps.push_back(x);
        }
    };
    for (int64_t e : cls.atkin_lehner_generators)
        if (e > 1) add_if_new(atkin_lehner(g.level(), e));
    if (cls.sigma) {
        add_if_new(cls.sigma->matrix);
        add_if_new(compose(cls.sigma->matrix, cls.sigma->matrix));
    }
    bool grew = true;
    while (grew) {
        grew = false;
        size_t n = reps.size();
        for (size_t a = 0; a < n; ++a) {
            for (size_t b = 0; b < n; ++b) {
                ProjectiveMatrix p = compose(reps[a], reps[b]);
                if (find_rep(p) < 0) {
                    if (reps.size() >= kClosureCap)
                        throw DomainError(Errc::ClosureOverflow, "quotient closure exceeded 1024 elements");
                    reps.push_back(p);
                    grew = true;
                }
            }
        }
    }

    QuotientGroupTable out;
    out.element_reps = reps;
    out.order = static_cast<int>(reps.size());
    out.table.assign(out.order, std::vector<int>(out.order, 0));
    for (int a = 0; a < out.order; ++a)
        for (int b = 0; b < out.order; ++b)
            out.table[a][b] = find_rep(compose(reps[a], reps[b]));
    out.abelian = true;
    for (int a = 0; a < out.order && out.abelian; ++a)
        for (int b = 0; b < out.order; ++b)
            if (out.table[a][b] != out.table[b][a]) { out.abelian = false; break; }
    out.element_orders.assign(out.order, 1);
    for (int a = 0; a < out.order; ++a) {
        int k = out.table[0][a], ord = 1;
        while (k != 0) {
            k = out.table[k][a];
            ++ord;
        }
        out.element_orders[a] = ord;
    }
    return out;
}

ProjectiveMatrix delta_rep(int64_t e, int64_t M, int64_t L) {
    if (!is_exact_divisor(e, M))
        throw DomainError(Errc::NotExactDivisor, std::to_string(e) + " is not an exact divisor of " + std::to_string(M));
    if (L < 1) throw DomainError(Errc::PreconditionViolation, "L must be positive");
    if (e == 1) return ProjectiveMatrix();
    int64_t K = (M / e) * L * L;
    if (std::gcd(e, K) != 1)
        throw DomainError(Errc::NotSolvable, "e y - (M/e) L^2 x = 1 has no solution: gcd(e, (M/e)L^2) > 1");
    // Smallest nonnegative y with e y = 1 (mod (M/e) L^2).
    int64_t y = 0;
    {
        int64_t r0 = K, r1 = e % K, t0 = 0, t1 = 1;
        while (r1 != 0) {
            int64_t q = r0 / r1;
            r0 -= q * r1; std::swap(r0, r1);
            t0 -= q * t1; std::swap(t0, t1);
        }
        y = ((t0 % K) + K) % K;
    }
    Int x = (Int(e) * y - 1) / K;
    return ProjectiveMatrix(Int(e), Int(L) * x, Int(M) * L, Int(e) * y);
}

bool sprime_member(const ProjectiveMatrix& x, int64_t N, const std::vector<int64_t>& squares) {
    if (x.det() != 1)
        throw DomainError(Errc::PreconditionViolation, "sprime_member needs a determinant-1 element");
    int64_t L = 1;
    for (int64_t u : squares) {
        if (u < 1 || !is_exact_divisor(u * u, N))
            throw DomainError(Errc::PreconditionViolation,
                              "u^2 must exactly divide N for u = " + std::to_string(u));
        L = std::lcm(L, u);
    }
    return (x.a() * x.c()) % L == 0 && (x.b() * x.d()) % L == 0;
}

const char* const kXstarAdvisory =
    "assumes N >= 10^400 so that every automorphism of the quotient curve is "
    "modular; that bound is an external input, not verified here";

XstarAut xstar_square_aut(int64_t N) {
    if (N < 1 || std::gcd<int64_t>(6, N) != 1)
        throw DomainError(Errc::PreconditionViolation, "N must be coprime to 6");
    for (int64_t p = 2; p * p <= N; ++p)
        if (N % (p * p) == 0)
            throw DomainError(Errc::PreconditionViolation, "N must be squarefree");
    return N % 5 == 0 ? XstarAut::Cyclic3 : XstarAut::Trivial;
}

}  // namespace modnorm
