#ifndef MODNORM_NORMALIZER_HPP
#define MODNORM_NORMALIZER_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "modnorm/congruence.hpp"
#include "modnorm/exact.hpp"

namespace modnorm {

// Classification of N(<Gamma0(N), W>) for 4,9 not dividing N:
//   NoSquare25 — w_25 outside the closure: normalizer = Gamma0*(N).
//   Bad25      — w_25 inside but some d in the closure has d/(25,d) != +-1
//                mod 5: normalizer = Gamma0*(N).
//   Good25     — w_25 inside and every d passes the +-1 test: normalizer
//                gains the order-3 generator sigma = Y5^{-1} B_j C_0 Y5.
enum class NormalizerCase { NoSquare25, Bad25, Good25 };

const char* case_name(NormalizerCase c);

struct SigmaData {
    ProjectiveMatrix matrix;  // canonical form of (5((N/25)j+1), -j; -N, 5)
    int j = 0;                // (N/25) j = 2 (mod 5)
    int i = 0;                // i = -j (mod 5)
};

struct NormalizerResult {
    GroupSpec spec;
    NormalizerCase kind;
    std::vector<int64_t> atkin_lehner_generators;  // all exact divisors of N
    std::optional<SigmaData> sigma;                // present iff kind == Good25
    int64_t conjugation_level;                     // N / lcm{u^2 : u^2 in closure}
};

// Finite quotient N(<Gamma0(N), W>)/<Gamma0(N), W> as an explicit group:
// coset representatives (identity first, discovery order), Cayley table,
// and element orders aligned with the representatives.
struct QuotientGroupTable {
    std::vector<ProjectiveMatrix> element_reps;
    std::vector<std::vector<int>> table;
    int order = 1;
    bool abelian = true;
    std::vector<int> element_orders;
};

SigmaData sigma(int64_t N);
// Canonical form of Y5^{-1} B_0 C_i Y5, the quotient-inverse of sigma.
ProjectiveMatrix sigma_inverse_rep(int64_t N);

// Solutions (j, i) in [0,4]^2 of the two congruence systems arising from
// conjugating gamma = (5, -1; M'r, 5k) by B_j C_i, for M' = m (mod 5):
// diagonal means E[0][0] = E[1][1] = 0 (mod 5), antidiagonal means
// E[0][1] = E[1][0] = 0 (mod 5), where E = (B_j C_i) gamma (B_j C_i)^{-1}.
struct BjCiSolutions {
    std::vector<std::pair<int, int>> diagonal;
    std::vector<std::pair<int, int>> antidiagonal;
};

BjCiSolutions solve_bjci_congruences(int m);

NormalizerResult classify(const GroupSpec& g);

// True iff x G x^{-1} = G, checked on the finite generating set
// (Schreier generators of Gamma0(N) plus the listed Atkin-Lehner
// involutions) in both conjugation directions.
bool normalizes(const ProjectiveMatrix& x, const GroupSpec& g);

QuotientGroupTable quotient_group(const GroupSpec& g);

// Coset representative delta_{(e,M,k)} = (e, Lx; ML, ey) with
// e y - (M/e) L^2 x = 1, where L = lcm(u_1, ..., u_k).
ProjectiveMatrix delta_rep(int64_t e, int64_t M, int64_t L);

// Congruence a c = b d = 0 (mod lcm(u_1, ..., u_k)) for determinant-1
// elements, membership test for the S' generating sets.
bool sprime_member(const ProjectiveMatrix& x, int64_t N, const std::vector<int64_t>& squares);

enum class XstarAut { Cyclic3, Trivial };

// Aut(X_0*(N^2)) for squarefree N coprime to 6: Z/3Z iff 5 | N.  Valid for
// sufficiently large N; see kXstarAdvisory.
XstarAut xstar_square_aut(int64_t N);

extern const char* const kXstarAdvisory;

}  // namespace modnorm

#endif
