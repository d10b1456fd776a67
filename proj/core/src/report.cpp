#include "hurwitz/report.hpp"

#include <numeric>
#include <sstream>

#include "json.hpp"

namespace hurwitz {

namespace {

using nlohmann::json;  // object keys render sorted, so output is stable

std::string cycles_of_tuple(const std::vector<Permutation>& tuple) {
    std::string out;
    for (std::size_t k = 0; k < tuple.size(); ++k) {
        if (k > 0) out += ", ";
        out += tuple[k].to_cycles();
    }
    return out;
}

std::vector<std::string> tuple_strings(const std::vector<Permutation>& tuple) {
    std::vector<std::string> out;
    out.reserve(tuple.size());
    for (const auto& g : tuple) out.push_back(g.to_cycles());
    return out;
}

const char* mode_name(Equivalence mode) {
    return mode == Equivalence::inner ? "inner" : "absolute";
}

void header_lines(std::ostringstream& os, const Analysis& an) {
    os << "group: " << an.gd->group.name << " (order " << an.gd->group.order() << ", degree "
       << an.gd->group.degree << ")\n";
    os << "classes:";
    for (const auto& label : class_vector_labels(*an.gd, an.cv)) os << ' ' << label;
    os << "\n";
    os << "r: " << an.cv.r() << "\n";
    os << "N_C: " << an.cv.n_c << "\n";
    os << "mode: " << mode_name(an.mode()) << "\n";
    os << "reduced: " << (an.reduced() ? "yes" : "no") << "\n";
    os << "tuples: " << an.ni->count() << "\n";
    os << "equivalence classes: " << an.eq->count() << "\n";
    os << "nodes: " << an.node_count() << "\n";
}

json header_json(const Analysis& an) {
    json j;
    j["schema"] = 1;
    j["group"] = {{"name", an.gd->group.name},
                  {"order", an.gd->group.order()},
                  {"degree", an.gd->group.degree}};
    j["classes"] = class_vector_labels(*an.gd, an.cv);
    j["r"] = an.cv.r();
    j["n_c"] = an.cv.n_c;
    j["mode"] = mode_name(an.mode());
    j["reduced"] = an.reduced();
    j["tuples"] = an.ni->count();
    j["equivalence_classes"] = an.eq->count();
    j["nodes"] = an.node_count();
    return j;
}

}  // namespace

std::string render_orbits_text(const Analysis& an) {
    std::ostringstream os;
    header_lines(os, an);
    os << "braid orbits: " << an.orbits.size() << "\n";
    for (std::size_t b = 0; b < an.orbits.size(); ++b) {
        const BraidOrbit& orb = an.orbits[b];
        os << "\norbit " << b + 1 << ": size " << orb.size() << "\n";
        os << "  flags:";
        if (orb.hm) os << " hm";
        if (orb.double_identity) os << " double-identity";
        if (!orb.hm && !orb.double_identity) os << " -";
        os << "\n";
        if (an.reduced()) {
            GenusReport genus = component_genus(an, static_cast<int>(b));
            os << "  genus: " << genus.genus << " (ind " << genus.ind_gamma0 << ' '
               << genus.ind_gamma1 << ' ' << genus.ind_gamma_inf << ")\n";
            os << "  cusps:";
            for (const auto& cusp : cusp_orbits(an, static_cast<int>(b)))
                os << ' ' << cusp.label;
            os << "\n";
        }
        os << "  canonical: " << cycles_of_tuple(an.canonical_tuple(orb.members[0])) << "\n";
    }
    return os.str();
}

std::string render_orbits_json(const Analysis& an) {
    json j = header_json(an);
    j["orbits"] = json::array();
    for (std::size_t b = 0; b < an.orbits.size(); ++b) {
        const BraidOrbit& orb = an.orbits[b];
        json jo;
        jo["index"] = b + 1;
        jo["size"] = orb.size();
        jo["hm"] = orb.hm;
        jo["double_identity"] = orb.double_identity;
        if (an.reduced()) {
            GenusReport genus = component_genus(an, static_cast<int>(b));
            jo["genus"] = genus.genus;
            jo["indices"] = {genus.ind_gamma0, genus.ind_gamma1, genus.ind_gamma_inf};
            jo["cusp_widths"] = genus.cusp_widths;
            json labels = json::array();
            for (const auto& cusp : cusp_orbits(an, static_cast<int>(b)))
                labels.push_back(cusp.label);
            jo["cusps"] = labels;
        }
        jo["canonical"] = tuple_strings(an.canonical_tuple(orb.members[0]));
        j["orbits"].push_back(std::move(jo));
    }
    return j.dump(2) + "\n";
}

std::string render_sh_incidence_text(const Analysis& an) {
    ShIncidence inc = sh_incidence(an);
    std::size_t width = 0;
    for (const auto& cusp : inc.cusps) width = std::max(width, cusp.label.size());

    std::ostringstream os;
    os << "sh-incidence: " << inc.blocks.size() << " orbit" << (inc.blocks.size() == 1 ? "" : "s")
       << ", " << inc.cusps.size() << " cusp" << (inc.cusps.size() == 1 ? "" : "s") << "\n";
    os << std::string(width, ' ');
    for (const auto& cusp : inc.cusps) {
        os << ' ' << std::string(width - cusp.label.size(), ' ') << cusp.label;
    }
    os << "\n";
    for (std::size_t i = 0; i < inc.cusps.size(); ++i) {
        os << std::string(width - inc.cusps[i].label.size(), ' ') << inc.cusps[i].label;
        for (std::size_t k = 0; k < inc.cusps.size(); ++k) {
            std::string v = std::to_string(inc.matrix[i][k]);
            os << ' ' << std::string(width - v.size(), ' ') << v;
        }
        os << "\n";
    }
    return os.str();
}

std::string render_sh_incidence_json(const Analysis& an) {
    ShIncidence inc = sh_incidence(an);
    json j = header_json(an);
    j["cusps"] = json::array();
    for (const auto& cusp : inc.cusps)
        j["cusps"].push_back({{"label", cusp.label},
                              {"orbit", cusp.orbit_index},
                              {"cusp", cusp.cusp_index},
                              {"width", cusp.width}});
    j["matrix"] = inc.matrix;
    j["blocks"] = json::array();
    for (auto [begin, end] : inc.blocks) j["blocks"].push_back({begin, end});
    return j.dump(2) + "\n";
}

std::string render_sh_incidence_csv(const Analysis& an) {
    ShIncidence inc = sh_incidence(an);
    std::ostringstream os;
    os << "cusp";
    for (const auto& cusp : inc.cusps) os << ',' << cusp.label;
    os << "\n";
    for (std::size_t i = 0; i < inc.cusps.size(); ++i) {
        os << inc.cusps[i].label;
        for (std::size_t k = 0; k < inc.cusps.size(); ++k) os << ',' << inc.matrix[i][k];
        os << "\n";
    }
    return os.str();
}

std::string render_lift_text(const Analysis& an, const catalog::CentralCover& cover,
                             const LiftAnalysis& la) {
    std::ostringstream os;
    os << "cover: " << cover.name << " (kernel " << cover.kernel_order << " over "
       << cover.base.name << ")\n";
    os << "modulus: " << la.modulus << "\n";
    os << "surjectivity: " << (la.surjectivity_checked ? "checked" : "skipped (budget)") << "\n";
    for (std::size_t b = 0; b < an.orbits.size(); ++b) {
        ObstructionReport rep = orbit_obstruction(cover, an, la, static_cast<int>(b));
        os << "orbit " << b + 1 << ": size " << an.orbits[b].size() << ", lift "
           << rep.invariant.value << "/" << rep.invariant.modulus << ", "
           << (rep.obstructed ? "obstructed" : "unobstructed");
        if (rep.surjectivity_checked)
            os << ", routes " << (rep.routes_agree ? "agree" : "DISAGREE");
        os << "\n";
    }
    return os.str();
}

std::string render_lift_json(const Analysis& an, const catalog::CentralCover& cover,
                             const LiftAnalysis& la) {
    json j = header_json(an);
    j["cover"] = {{"name", cover.name},
                  {"kernel_order", cover.kernel_order},
                  {"base", cover.base.name}};
    j["modulus"] = la.modulus;
    j["surjectivity_checked"] = la.surjectivity_checked;
    j["orbits"] = json::array();
    for (std::size_t b = 0; b < an.orbits.size(); ++b) {
        ObstructionReport rep = orbit_obstruction(cover, an, la, static_cast<int>(b));
        json jo;
        jo["index"] = b + 1;
        jo["size"] = an.orbits[b].size();
        jo["value"] = rep.invariant.value;
        jo["obstructed"] = rep.obstructed;
        if (rep.surjectivity_checked) jo["routes_agree"] = rep.routes_agree;
        j["orbits"].push_back(std::move(jo));
    }
    return j.dump(2) + "\n";
}

std::string render_bcl_text(const GroupData& gd, const ClassVector& cv, const BclData& data) {
    std::ostringstream os;
    os << "group: " << gd.group.name << "\n";
    os << "classes:";
    for (const auto& label : class_vector_labels(gd, cv)) os << ' ' << label;
    os << "\n";
    os << "N_C: " << data.n_c << "\n";
    os << "inner stabilizer:";
    for (long long m : data.inner_subgroup) os << ' ' << m;
    os << "\n";
    os << "absolute stabilizer:";
    for (long long m : data.absolute_subgroup) os << ' ' << m;
    os << (data.normalizer_supplied ? "" : " (no normalizer supplied; equals inner)") << "\n";
    os << "rational union: " << (data.rational_union ? "yes" : "no") << "\n";
    return os.str();
}

std::string render_bcl_json(const GroupData& gd, const ClassVector& cv, const BclData& data) {
    json j;
    j["schema"] = 1;
    j["group"] = gd.group.name;
    j["classes"] = class_vector_labels(gd, cv);
    j["n_c"] = data.n_c;
    j["inner_stabilizer"] = data.inner_subgroup;
    j["absolute_stabilizer"] = data.absolute_subgroup;
    j["normalizer_supplied"] = data.normalizer_supplied;
    j["rational_union"] = data.rational_union;
    return j.dump(2) + "\n";
}

}  // namespace hurwitz
