#ifndef MODNORM_EXACT_HPP
#define MODNORM_EXACT_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>
#include <compare>
#include <iosfwd>
#include <string>

#include "modnorm/errors.hpp"

namespace modnorm {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::rational<Int>;

// Input-only rational 2x2 matrix; canonicalize() turns it into the
// unique primitive integer representative of its class in PGL2(Q)+.
struct RationalMatrix {
    Rat a, b, c, d;

    Rat det() const { return a * d - b * c; }
};

// Primitive integer 2x2 matrix with det > 0, sign-normalized so the first
// nonzero entry in (a, b, c, d) order is positive.  This is the canonical
// representative of an element of PSL2(R) of the form M/sqrt(det M); equality
// of group elements is bit-equality of representatives.
class ProjectiveMatrix {
public:
    ProjectiveMatrix() : a_(1), b_(0), c_(0), d_(1) {}

    // Canonicalizing constructor: divides by the content and fixes the sign.
    // Throws ZeroDeterminant / NegativeDeterminant.
    ProjectiveMatrix(Int a, Int b, Int c, Int d);

    const Int& a() const { return a_; }
    const Int& b() const { return b_; }
    const Int& c() const { return c_; }
    const Int& d() const { return d_; }

    Int det() const { return a_ * d_ - b_ * c_; }

    bool is_identity() const { return a_ == 1 && b_ == 0 && c_ == 0 && d_ == 1; }

    bool operator==(const ProjectiveMatrix& o) const = default;
    // Lexicographic order on entries; used only to keep containers deterministic.
    std::strong_ordering operator<=>(const ProjectiveMatrix& o) const;

    std::string str() const;

private:
    Int a_, b_, c_, d_;
};

ProjectiveMatrix canonicalize(const RationalMatrix& m);
ProjectiveMatrix compose(const ProjectiveMatrix& x, const ProjectiveMatrix& y);
ProjectiveMatrix compose(const ProjectiveMatrix& x, const ProjectiveMatrix& y,
                         const ProjectiveMatrix& z);
ProjectiveMatrix inverse(const ProjectiveMatrix& x);
Int determinant(const ProjectiveMatrix& x);

bool is_perfect_square(const Int& n);

std::ostream& operator<<(std::ostream& os, const ProjectiveMatrix& m);

}  // namespace modnorm

#endif
