#include "modnorm/congruence.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <utility>

namespace modnorm {

namespace {

int64_t gcd64(int64_t a, int64_t b) { return std::gcd(a, b); }

// Smallest nonnegative x with x*a = 1 (mod m); requires gcd(a, m) = 1.
int64_t mod_inverse(int64_t a, int64_t m) {
    if (m == 1) return 0;
    int64_t r0 = m, r1 = ((a % m) + m) % m;
    int64_t t0 = 0, t1 = 1;
    while (r1 != 0) {
        int64_t q = r0 / r1;
        r0 -= q * r1;
        std::swap(r0, r1);
        t0 -= q * t1;
        std::swap(t0, t1);
    }
    return ((t0 % m) + m) % m;
}

std::vector<int64_t> prime_divisors(int64_t N) {
    std::vector<int64_t> ps;
    int64_t n = N;
    for (int64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

}  // namespace

bool is_exact_divisor(int64_t d, int64_t N) {
    return d >= 1 && N % d == 0 && gcd64(d, N / d) == 1;
}

std::vector<int64_t> divisors(int64_t N) {
    std::vector<int64_t> ds;
    for (int64_t a = 1; a * a <= N; ++a) {
        if (N % a == 0) {
            ds.push_back(a);
            if (a != N / a) ds.push_back(N / a);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

std::vector<int64_t> exact_divisors(int64_t N) {
    std::vector<int64_t> out;
    for (int64_t d : divisors(N))
        if (gcd64(d, N / d) == 1) out.push_back(d);
    return out;
}

int omega(int64_t N) { return static_cast<int>(prime_divisors(N).size()); }

int64_t psi_index(int64_t N) {
    int64_t psi = N;
    for (int64_t p : prime_divisors(N)) psi += psi / p;
    return psi;
}

bool DivisorSubgroup::contains(int64_t d) const {
    return std::binary_search(elements.begin(), elements.end(), d);
}

int64_t star(int64_t N, int64_t d1, int64_t d2) {
    if (!is_exact_divisor(d1, N))
        throw DomainError(Errc::NotExactDivisor, std::to_string(d1) + " is not an exact divisor of " + std::to_string(N));
    if (!is_exact_divisor(d2, N))
        throw DomainError(Errc::NotExactDivisor, std::to_string(d2) + " is not an exact divisor of " + std::to_string(N));
    int64_t g = gcd64(d1, d2);
    return (d1 / g) * (d2 / g);
}

DivisorSubgroup divisor_closure(int64_t N, const std::vector<int64_t>& gens) {
    std::set<int64_t> closed = {1};
    for (int64_t g : gens) {
        if (!is_exact_divisor(g, N))
            throw DomainError(Errc::NotExactDivisor, std::to_string(g) + " is not an exact divisor of " + std::to_string(N));
        closed.insert(g);
    }
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<int64_t> cur(closed.begin(), closed.end());
        for (int64_t x : cur)
            for (int64_t y : cur)
                if (closed.insert(star(N, x, y)).second) grew = true;
    }
    DivisorSubgroup out;
    out.level = N;
    out.elements.assign(closed.begin(), closed.end());
    return out;
}

GroupSpec::GroupSpec(int64_t N, std::vector<int64_t> generator_divisors)
    : level_(N), generator_divisors_(std::move(generator_divisors)) {
    if (N < 1) throw DomainError(Errc::UnsupportedLevel, "level must be positive");
    if (N % 4 == 0) throw DomainError(Errc::UnsupportedLevel, "level divisible by 4 unsupported");
    if (N % 9 == 0) throw DomainError(Errc::UnsupportedLevel, "level divisible by 9 unsupported");
    closure_ = divisor_closure(N, generator_divisors_);
    contains_25_ = closure_.contains(25);
    all_pm1_mod5_ = true;
    for (int64_t d : closure_.elements) {
        int64_t q = d / gcd64(25, d);
        int64_t r = q % 5;
        if (r != 1 && r != 4) all_pm1_mod5_ = false;
    }
}

bool in_gamma0(const ProjectiveMatrix& x, int64_t N) {
    return x.det() == 1 && x.c() % N == 0;
}

ProjectiveMatrix atkin_lehner(int64_t N, int64_t d) {
    if (!is_exact_divisor(d, N))
        throw DomainError(Errc::NotExactDivisor, std::to_string(d) + " is not an exact divisor of " + std::to_string(N));
    if (d == 1) return ProjectiveMatrix();
    int64_t m = N / d;
    int64_t x = mod_inverse(d, m);  // smallest nonnegative x with x d = 1 (mod N/d)
    Int y = (Int(x) * d - 1) / m;
    return ProjectiveMatrix(Int(d) * x, y, Int(N), Int(d));
}

std::optional<int64_t> coset_of(const ProjectiveMatrix& x, int64_t N) {
    Int D = x.det();
    if (D > N) return std::nullopt;
    int64_t d = D.convert_to<int64_t>();
    if (!is_exact_divisor(d, N)) return std::nullopt;
    if (x.a() % d != 0) return std::nullopt;
    if (x.d() % d != 0) return std::nullopt;
    if (x.c() % N != 0) return std::nullopt;
    return d;
}

bool in_extended_group(const ProjectiveMatrix& x, const GroupSpec& g) {
    auto d = coset_of(x, g.level());
    return d && g.closure().contains(*d);
}

namespace {

struct P1Space {
    int64_t N;
    std::vector<int64_t> units;

    explicit P1Space(int64_t N_) : N(N_) {
        for (int64_t u = 1; u < N; ++u)
            if (gcd64(u, N) == 1) units.push_back(u);
        if (N == 1) units.push_back(0);
    }

    std::pair<int64_t, int64_t> canon(int64_t c, int64_t d) const {
        if (N == 1) return {0, 0};
        c = ((c % N) + N) % N;
        d = ((d % N) + N) % N;
        std::pair<int64_t, int64_t> best{N, N};
        for (int64_t u : units) best = std::min(best, {(u * c) % N, (u * d) % N});
        return best;
    }

    std::pair<int64_t, int64_t> apply(std::pair<int64_t, int64_t> p, const ProjectiveMatrix& g) const {
        // Right action on row vectors (c : d).
        int64_t a = ((g.a() % N) + N).convert_to<int64_t>() % N;
        int64_t b = ((g.b() % N) + N).convert_to<int64_t>() % N;
        int64_t c = ((g.c() % N) + N).convert_to<int64_t>() % N;
        int64_t d = ((g.d() % N) + N).convert_to<int64_t>() % N;
        return canon(p.first * a + p.second * c, p.first * b + p.second * d);
    }
};

struct P1Enumeration {
    std::vector<ProjectiveMatrix> reps;  // reps[i] maps the base point to point i
    std::map<std::pair<int64_t, int64_t>, int> index;
};

P1Enumeration enumerate_cosets(int64_t N, const ProjectiveMatrix& S, const ProjectiveMatrix& T) {
    P1Space space(N);
    P1Enumeration e;
    auto base = space.canon(0, 1);
    e.index[base] = 0;
    e.reps.push_back(ProjectiveMatrix());
    std::queue<std::pair<std::pair<int64_t, int64_t>, int>> q;
    q.push({base, 0});
    while (!q.empty()) {
        auto [pt, i] = q.front();
        q.pop();
        for (const ProjectiveMatrix* g : {&S, &T}) {
            auto nxt = space.apply(pt, *g);
            if (!e.index.count(nxt)) {
                int j = static_cast<int>(e.reps.size());
                e.index[nxt] = j;
                e.reps.push_back(compose(e.reps[i], *g));
                q.push({nxt, j});
            }
        }
    }
    return e;
}

}  // namespace

GeneratorSet gamma0_generators(int64_t N) {
    if (N < 1) throw DomainError(Errc::UnsupportedLevel, "level must be positive");
    ProjectiveMatrix S(0, -1, 1, 0), T(1, 1, 0, 1);
    GeneratorSet out;
    out.label = "Gamma0(" + std::to_string(N) + ")";
    if (N == 1) {
        out.members = {S, T};
        return out;
    }
    P1Space space(N);
    auto e = enumerate_cosets(N, S, T);
    std::set<ProjectiveMatrix> seen;
    for (size_t i = 0; i < e.reps.size(); ++i) {
        // Recover this rep's point by replaying it on the base point.
        auto pt = space.apply({0, 1}, e.reps[i]);
        for (const ProjectiveMatrix* g : {&S, &T}) {
            auto nxt = space.apply(pt, *g);
            ProjectiveMatrix u = compose(compose(e.reps[i], *g), inverse(e.reps.at(e.index.at(nxt))));
            if (!u.is_identity() && seen.insert(u).second) out.members.push_back(u);
        }
    }
    return out;
}

int64_t p1_orbit_size(int64_t N) {
    if (N == 1) return 1;
    ProjectiveMatrix S(0, -1, 1, 0), T(1, 1, 0, 1);
    return static_cast<int64_t>(enumerate_cosets(N, S, T).reps.size());
}

}  // namespace modnorm
