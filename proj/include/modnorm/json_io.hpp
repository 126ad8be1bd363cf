#ifndef MODNORM_JSON_IO_HPP
#define MODNORM_JSON_IO_HPP

#include <json.hpp>

#include "modnorm/bigpicture.hpp"
#include "modnorm/congruence.hpp"
#include "modnorm/normalizer.hpp"

namespace modnorm {

// All emitted JSON uses insertion-ordered objects, integer-or-string numbers
// (never floats), and a top-level {"schema": 1}; re-serializing parsed output
// is byte-identical.
using Json = nlohmann::ordered_json;

// Matrix entries are JSON integers when they fit in 64 bits, decimal strings
// otherwise.
Json int_json(const Int& v);
Json matrix_entries_json(const ProjectiveMatrix& m);          // [[a,b],[c,d]]
Json matrix_json(const ProjectiveMatrix& m);                  // {"matrix":..., "det":...}
Json group_spec_json(const GroupSpec& g);                     // {"N","gens","closure"}
Json generator_set_json(const GeneratorSet& gens);            // {"label","members"}
Json lattice_json(const LatticeClass& X);                     // {"s":"num/den","g","t"}
Json quotient_json(const QuotientGroupTable& q);
Json normalizer_result_json(const NormalizerResult& r, const QuotientGroupTable& q);

Json with_schema(Json payload);

}  // namespace modnorm

#endif
