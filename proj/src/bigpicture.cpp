#include "modnorm/bigpicture.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <utility>

namespace modnorm {

namespace {

using boost::multiprecision::abs;
using boost::multiprecision::gcd;
using boost::multiprecision::lcm;

Int floor_mod(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

}  // namespace

LatticeClass::LatticeClass(Rat s, Int g, Int t) : s_(std::move(s)), g_(std::move(g)), t_(std::move(t)) {
    if (s_ <= Rat(0)) throw DomainError(Errc::PreconditionViolation, "lattice class needs s > 0");
    bool ok = t_ >= 1 && g_ >= 0 && g_ < t_ && gcd(g_, t_) == 1 && (g_ != 0 || t_ == 1);
    if (!ok)
        throw DomainError(Errc::PreconditionViolation, "lattice class needs 0 <= g < t, gcd(g,t) = 1, and t = 1 when g = 0");
}

std::strong_ordering LatticeClass::operator<=>(const LatticeClass& o) const {
    if (s_ != o.s_) return s_ < o.s_ ? std::strong_ordering::less : std::strong_ordering::greater;
    Rat lhs(g_, t_), rhs(o.g_, o.t_);
    if (lhs != rhs) return lhs < rhs ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string LatticeClass::str() const {
    std::ostringstream os;
    os << "L_{" << s_.numerator();
    if (s_.denominator() != 1) os << "/" << s_.denominator();
    os << "," << g_;
    if (t_ != 1) os << "/" << t_;
    os << "}";
    return os.str();
}

LatticeClass class_from_basis(const RatVec& v1, const RatVec& v2) {
    if (v1.first * v2.second - v1.second * v2.first == Rat(0))
        throw DomainError(Errc::DegenerateBasis, "basis vectors are linearly dependent");
    // Clear denominators (a Q*-scaling, harmless for the class).
    Int den = lcm(lcm(v1.first.denominator(), v1.second.denominator()),
                  lcm(v2.first.denominator(), v2.second.denominator()));
    auto sc = [&](const Rat& r) { return r.numerator() * (den / r.denominator()); };
    Int r1x = sc(v1.first), r1y = sc(v1.second);
    Int r2x = sc(v2.first), r2y = sc(v2.second);
    // Integer row reduction to an upper-triangular lattice basis.
    while (r2x != 0) {
        Int q = r1x / r2x;
        r1x -= q * r2x;
        r1y -= q * r2y;
        std::swap(r1x, r2x);
        std::swap(r1y, r2y);
    }
    if (r1x < 0) { r1x = -r1x; r1y = -r1y; }
    if (r2y < 0) { r2y = -r2y; }
    r1y = floor_mod(r1y, r2y);
    // Scale by the bottom-right entry: basis (r1x, r1y; 0, r2y) ~ L_{r1x/r2y, r1y/r2y}.
    Rat s(r1x, r2y);
    Int h = gcd(r1y, r2y);  // = r2y when r1y = 0, giving g = 0, t = 1
    return LatticeClass(s, r1y / h, r2y / h);
}

LatticeClass act(const ProjectiveMatrix& x, const LatticeClass& X) {
    // Transport the canonical basis by x^{-1} so that the basis-substitution
    // rule of the commensurator action composes as a left action.
    ProjectiveMatrix m = inverse(x);
    Rat gt(X.g(), X.t());
    Rat a(m.a()), b(m.b()), c(m.c()), d(m.d());
    RatVec v1{X.s() * a + gt * c, X.s() * b + gt * d};
    RatVec v2{c, d};
    return class_from_basis(v1, v2);
}

Int hyperdistance(const LatticeClass& X, const LatticeClass& Y) {
    // Transition matrix P_Y P_X^{-1} with P = (s, g/t; 0, 1).
    Rat gx(X.g(), X.t()), gy(Y.g(), Y.t());
    RationalMatrix t;
    t.a = Y.s() / X.s();
    t.b = gy - Y.s() * gx / X.s();
    t.c = Rat(0);
    t.d = Rat(1);
    return canonicalize(t).det();
}

std::vector<LatticeClass> snake(int64_t N) {
    if (N < 1) throw DomainError(Errc::UnsupportedLevel, "level must be positive");
    if (N % 4 == 0) throw DomainError(Errc::UnsupportedLevel, "level divisible by 4 unsupported");
    if (N % 9 == 0) throw DomainError(Errc::UnsupportedLevel, "level divisible by 9 unsupported");
    std::vector<LatticeClass> out;
    for (int64_t e : divisors(N)) out.emplace_back(Rat(e), Int(0), Int(1));
    return out;
}

std::vector<LatticeClass> orbit(const GroupSpec& g, const LatticeClass& X) {
    auto sn = snake(g.level());
    if (std::find(sn.begin(), sn.end(), X) == sn.end())
        throw DomainError(Errc::NotOnSnake, X.str() + " is not on the (" + std::to_string(g.level()) + "|1)-snake");
    std::set<LatticeClass> images;
    for (int64_t d : g.closure().elements) images.insert(act(atkin_lehner(g.level(), d), X));
    return {images.begin(), images.end()};
}

GeneratorSet conjugate_by_upsilon(const GeneratorSet& gens, int64_t u) {
    if (u < 1) throw DomainError(Errc::PreconditionViolation, "u must be positive");
    ProjectiveMatrix ups(Int(u), 0, 0, 1), ups_inv(1, 0, 0, Int(u));
    GeneratorSet out;
    out.label = "Upsilon_" + std::to_string(u) + "(" + gens.label + ")";
    out.members.reserve(gens.members.size());
    for (const auto& x : gens.members) out.members.push_back(compose(ups, x, ups_inv));
    return out;
}

std::vector<LatticeClass> fixed_classes(const GeneratorSet& gens, int64_t u, int64_t M) {
    if (u < 1 || M < 1 || std::gcd(u, M) != 1)
        throw DomainError(Errc::PreconditionViolation, "fixed_classes needs u, M >= 1 with gcd(u, M) = 1");
    // Candidates L_{s,g/t} with s u integral and s u t^2 | u^2 M; write
    // sigma1 = s u, so sigma1 t^2 | u^2 M.
    const int64_t bound = u * u * M;
    std::set<LatticeClass> fixed;
    for (int64_t t = 1; t * t <= bound; ++t) {
        if (bound % (t * t) != 0) continue;
        for (int64_t sigma1 : divisors(bound / (t * t))) {
            Rat s(sigma1, u);
            for (int64_t g = 0; g < t; ++g) {
                if (g == 0 && t != 1) continue;
                if (g != 0 && std::gcd(g, t) != 1) continue;
                LatticeClass cand(s, Int(g), Int(g == 0 ? 1 : t));
                bool ok = true;
                for (const auto& x : gens.members)
                    if (act(x, cand) != cand) { ok = false; break; }
                if (ok) fixed.insert(cand);
            }
        }
    }
    return {fixed.begin(), fixed.end()};
}

}  // namespace modnorm
