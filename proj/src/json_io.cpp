#include "modnorm/json_io.hpp"

#include <limits>
#include <sstream>

namespace modnorm {

Json int_json(const Int& v) {
    if (v >= std::numeric_limits<int64_t>::min() && v <= std::numeric_limits<int64_t>::max())
        return v.convert_to<int64_t>();
    return v.str();
}

Json matrix_entries_json(const ProjectiveMatrix& m) {
    return Json::array({Json::array({int_json(m.a()), int_json(m.b())}),
                        Json::array({int_json(m.c()), int_json(m.d())})});
}

Json matrix_json(const ProjectiveMatrix& m) {
    Json j;
    j["matrix"] = matrix_entries_json(m);
    j["det"] = int_json(m.det());
    return j;
}

Json group_spec_json(const GroupSpec& g) {
    Json j;
    j["N"] = g.level();
    j["gens"] = g.generator_divisors();
    j["closure"] = g.closure().elements;
    return j;
}

Json generator_set_json(const GeneratorSet& gens) {
    Json j;
    j["label"] = gens.label;
    Json members = Json::array();
    for (const auto& m : gens.members) members.push_back(matrix_entries_json(m));
    j["members"] = members;
    return j;
}

Json lattice_json(const LatticeClass& X) {
    std::ostringstream s;
    s << X.s().numerator() << "/" << X.s().denominator();
    Json j;
    j["s"] = s.str();
    j["g"] = int_json(X.g());
    j["t"] = int_json(X.t());
    return j;
}

Json quotient_json(const QuotientGroupTable& q) {
    Json j;
    j["order"] = q.order;
    j["abelian"] = q.abelian;
    j["element_orders"] = q.element_orders;
    j["table"] = q.table;
    return j;
}

Json normalizer_result_json(const NormalizerResult& r, const QuotientGroupTable& q) {
    Json j;
    j["N"] = r.spec.level();
    j["W"] = r.spec.generator_divisors();
    j["case"] = case_name(r.kind);
    j["generators"] = Json{{"atkin_lehner", r.atkin_lehner_generators}};
    if (r.sigma) {
        Json s;
        s["matrix"] = matrix_entries_json(r.sigma->matrix);
        s["j"] = r.sigma->j;
        s["i"] = r.sigma->i;
        j["sigma"] = s;
    } else {
        j["sigma"] = nullptr;
    }
    j["quotient"] = quotient_json(q);
    return j;
}

Json with_schema(Json payload) {
    Json j;
    j["schema"] = 1;
    for (auto& [k, v] : payload.items()) j[k] = v;
    return j;
}

}  // namespace modnorm
