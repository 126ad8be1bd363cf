#include "modnorm/exact.hpp"

#include <ostream>
#include <sstream>
#include <utility>

namespace modnorm {

namespace {

using boost::multiprecision::abs;
using boost::multiprecision::gcd;
using boost::multiprecision::lcm;

Int content4(const Int& a, const Int& b, const Int& c, const Int& d) {
    Int g = gcd(abs(a), abs(b));
    g = gcd(g, abs(c));
    g = gcd(g, abs(d));
    return g;
}

}  // namespace

ProjectiveMatrix::ProjectiveMatrix(Int a, Int b, Int c, Int d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    Int det = a_ * d_ - b_ * c_;
    if (det == 0) throw DomainError(Errc::ZeroDeterminant, "matrix has determinant 0");
    if (det < 0) throw DomainError(Errc::NegativeDeterminant, "matrix has negative determinant");
    Int g = content4(a_, b_, c_, d_);
    if (g > 1) {
        a_ /= g;
        b_ /= g;
        c_ /= g;
        d_ /= g;
    }
    const Int* first = &a_;
    if (a_ == 0) first = (b_ != 0) ? &b_ : (c_ != 0 ? &c_ : &d_);
    if (*first < 0) {
        a_ = -a_;
        b_ = -b_;
        c_ = -c_;
        d_ = -d_;
    }
}

std::strong_ordering ProjectiveMatrix::operator<=>(const ProjectiveMatrix& o) const {
    if (a_ != o.a_) return a_ < o.a_ ? std::strong_ordering::less : std::strong_ordering::greater;
    if (b_ != o.b_) return b_ < o.b_ ? std::strong_ordering::less : std::strong_ordering::greater;
    if (c_ != o.c_) return c_ < o.c_ ? std::strong_ordering::less : std::strong_ordering::greater;
    if (d_ != o.d_) return d_ < o.d_ ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string ProjectiveMatrix::str() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

ProjectiveMatrix canonicalize(const RationalMatrix& m) {
    Rat det = m.det();
    if (det == Rat(0)) throw DomainError(Errc::ZeroDeterminant, "matrix has determinant 0");
    if (det < Rat(0)) throw DomainError(Errc::NegativeDeterminant, "matrix has negative determinant");
    Int den = lcm(lcm(m.a.denominator(), m.b.denominator()),
                  lcm(m.c.denominator(), m.d.denominator()));
    auto scale = [&](const Rat& r) { return r.numerator() * (den / r.denominator()); };
    return ProjectiveMatrix(scale(m.a), scale(m.b), scale(m.c), scale(m.d));
}

ProjectiveMatrix compose(const ProjectiveMatrix& x, const ProjectiveMatrix& y) {
    return ProjectiveMatrix(x.a() * y.a() + x.b() * y.c(), x.a() * y.b() + x.b() * y.d(),
                            x.c() * y.a() + x.d() * y.c(), x.c() * y.b() + x.d() * y.d());
}

ProjectiveMatrix compose(const ProjectiveMatrix& x, const ProjectiveMatrix& y,
                         const ProjectiveMatrix& z) {
    return compose(compose(x, y), z);
}

ProjectiveMatrix inverse(const ProjectiveMatrix& x) {
    // Adjugate; projectively equal to the inverse since det > 0.
    return ProjectiveMatrix(x.d(), -x.b(), -x.c(), x.a());
}

Int determinant(const ProjectiveMatrix& x) { return x.det(); }

bool is_perfect_square(const Int& n) {
    if (n < 0) return false;
    Int r = boost::multiprecision::sqrt(n);
    return r * r == n;
}

std::ostream& operator<<(std::ostream& os, const ProjectiveMatrix& m) {
    return os << "[[" << m.a() << "," << m.b() << "],[" << m.c() << "," << m.d() << "]]";
}

}  // namespace modnorm
