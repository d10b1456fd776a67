// report.hpp -- deterministic text/JSON/CSV rendering of analysis results.
//
// Every renderer walks already-sorted structures, so equal inputs produce
// byte-identical output.  JSON objects carry "schema": 1.

#pragma once

#include <string>

#include "hurwitz/analysis.hpp"
#include "hurwitz/arith.hpp"
#include "hurwitz/geometry.hpp"
#include "hurwitz/lift.hpp"

namespace hurwitz {

std::string render_orbits_text(const Analysis& an);
std::string render_orbits_json(const Analysis& an);

std::string render_sh_incidence_text(const Analysis& an);
std::string render_sh_incidence_json(const Analysis& an);
std::string render_sh_incidence_csv(const Analysis& an);

std::string render_lift_text(const Analysis& an, const catalog::CentralCover& cover,
                             const LiftAnalysis& la);
std::string render_lift_json(const Analysis& an, const catalog::CentralCover& cover,
                             const LiftAnalysis& la);

std::string render_bcl_text(const GroupData& gd, const ClassVector& cv, const BclData& data);
std::string render_bcl_json(const GroupData& gd, const ClassVector& cv, const BclData& data);

}  // namespace hurwitz
