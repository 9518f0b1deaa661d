#pragma once

#include "fxf/ode.hpp"
#include "fxf/verify.hpp"
#include "fxf/xform.hpp"

#include <nlohmann/json.hpp>

namespace fxf::json {

// insertion-ordered documents keep the CLI output byte-stable
using Json = nlohmann::ordered_json;

double to_double(const Float& x);

Json rat_json(const Rat& r);
Rat rat_from(const Json& j);

Json poly_json(const Poly& p);
Poly poly_from(const Json& j);

Json ratfunc_json(const RatFunc& f);
RatFunc ratfunc_from(const Json& j);

Json ode_json(const LinearODE2& e);
Json heun_json(const HeunParams& p);
HeunParams heun_from(const Json& j);
Json hg_json(const HGParams& p);
HGParams hg_from(const Json& j);

// Any of the three equation schemas: {"type":"ode"|"heun"|"hypergeometric"}
// with the type tag optional when the fields identify the schema.
struct OdeInput {
    LinearODE2 ode;
    std::optional<HeunParams> heun;
    std::optional<HGParams> hg;
};
OdeInput ode_input_from(const Json& j);

Json singular_point_json(const SingularPoint& p);
Json classification_json(const Classification& c);
Json report_json(const VerificationReport& r);
Json reduction_json(const ReductionSolution& s);
Json outer_json(const OuterEquation& o);
Json inner_spec_json(const InnerHeunSpec& s);
Json variable_change_json(const VariableChange& vc);

} // namespace fxf::json
