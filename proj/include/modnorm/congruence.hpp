#ifndef MODNORM_CONGRUENCE_HPP
#define MODNORM_CONGRUENCE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "modnorm/exact.hpp"

namespace modnorm {

bool is_exact_divisor(int64_t d, int64_t N);
std::vector<int64_t> divisors(int64_t N);
std::vector<int64_t> exact_divisors(int64_t N);
int omega(int64_t N);
// Index of Gamma0(N) in PSL2(Z): N * prod_{p|N} (1 + 1/p).
int64_t psi_index(int64_t N);

// Subgroup of the exact divisors of N under d1*d2 = d1 d2 / (d1,d2)^2.
// Elementary abelian of exponent 2; cardinality a power of 2.
struct DivisorSubgroup {
    int64_t level = 1;
    std::vector<int64_t> elements;  // sorted, always containing 1

    bool contains(int64_t d) const;
};

int64_t star(int64_t N, int64_t d1, int64_t d2);
DivisorSubgroup divisor_closure(int64_t N, const std::vector<int64_t>& gens);

// The group <Gamma0(N), w_d : d in generator list>, for levels with 4,9 | N
// rejected (the classification only covers levels with 4,9 not dividing N).
class GroupSpec {
public:
    GroupSpec(int64_t N, std::vector<int64_t> generator_divisors);

    int64_t level() const { return level_; }
    const std::vector<int64_t>& generator_divisors() const { return generator_divisors_; }
    const DivisorSubgroup& closure() const { return closure_; }
    bool contains_25() const { return contains_25_; }
    // Whether d/(25,d) = +-1 (mod 5) for every d in the closure.
    bool all_pm1_mod5() const { return all_pm1_mod5_; }

private:
    int64_t level_;
    std::vector<int64_t> generator_divisors_;
    DivisorSubgroup closure_;
    bool contains_25_;
    bool all_pm1_mod5_;
};

struct GeneratorSet {
    std::string label;
    std::vector<ProjectiveMatrix> members;
};

bool in_gamma0(const ProjectiveMatrix& x, int64_t N);

// Canonical representative of the coset w_d Gamma0(N).  The representative is
// the matrix (dx, y; N, d) with x the smallest nonnegative solution of
// x d - y (N/d) = 1; d = 1 gives the identity.
ProjectiveMatrix atkin_lehner(int64_t N, int64_t d);

// Some(d) iff x belongs to w_d Gamma0(N) inside Gamma0*(N); None otherwise.
// Decided by the integrality pattern det = d || N, d | a, d | d-entry, N | c.
std::optional<int64_t> coset_of(const ProjectiveMatrix& x, int64_t N);

bool in_extended_group(const ProjectiveMatrix& x, const GroupSpec& g);

// Schreier generators of Gamma0(N) from the right-coset action of PSL2(Z)
// on P^1(Z/N) with generators S = (0,-1;1,0) and T = (1,1;0,1).
GeneratorSet gamma0_generators(int64_t N);

// Number of points of P^1(Z/N) reached from (0:1); equals psi_index(N) when
// the coset action is transitive.
int64_t p1_orbit_size(int64_t N);

}  // namespace modnorm

#endif
