#ifndef MODNORM_BIGPICTURE_HPP
#define MODNORM_BIGPICTURE_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "modnorm/congruence.hpp"
#include "modnorm/exact.hpp"

namespace modnorm {

// Canonical form L_{s,g/t} of a commensurability class of rank-2 lattices:
// the class of <s e1 + (g/t) e2, e2> up to Q*-scaling, with s > 0 rational,
// 0 <= g < t, gcd(g, t) = 1 and g = 0 forcing t = 1.
class LatticeClass {
public:
    LatticeClass() : s_(1), g_(0), t_(1) {}  // L_1
    LatticeClass(Rat s, Int g, Int t);

    const Rat& s() const { return s_; }
    const Int& g() const { return g_; }
    const Int& t() const { return t_; }

    bool operator==(const LatticeClass& o) const = default;
    std::strong_ordering operator<=>(const LatticeClass& o) const;

    std::string str() const;

private:
    Rat s_;
    Int g_, t_;
};

using RatVec = std::pair<Rat, Rat>;

LatticeClass class_from_basis(const RatVec& v1, const RatVec& v2);

// Left action of PSL2(R) (restricted to the commensurator) on classes.
LatticeClass act(const ProjectiveMatrix& x, const LatticeClass& X);

// Determinant of the primitive integer transition matrix between the
// canonical bases; symmetric, and 1 iff the classes coincide.
Int hyperdistance(const LatticeClass& X, const LatticeClass& Y);

// The (N|1)-snake {L_{e,0} : e | N}, defined here only for 4,9 not | N.
std::vector<LatticeClass> snake(int64_t N);

// {w_d(X) : d in g.closure} for X on the snake of g.level().
std::vector<LatticeClass> orbit(const GroupSpec& g, const LatticeClass& X);

// Replaces each member x by the canonical form of Y_u x Y_u^{-1},
// Y_u = (1,0;0,1/u).
GeneratorSet conjugate_by_upsilon(const GeneratorSet& gens, int64_t u);

// All classes L_{s,g/t} with su integral and s u t^2 | u^2 M that are fixed
// by every generator.  The candidate bound makes the scan finite and complete
// for groups conjugate to Gamma0-type groups of level u^2 M.
std::vector<LatticeClass> fixed_classes(const GeneratorSet& gens, int64_t u, int64_t M);

}  // namespace modnorm

#endif
