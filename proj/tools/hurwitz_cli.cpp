// hurwitz_cli -- braid orbits, sh-incidence, lift invariants, and cyclotomic
// data from the command line.
//
// Exit codes: 0 success, 1 crosscheck mismatch, 2 budget exceeded,
// 3 bad input.  Output depends only on the inputs, not on --shuffle-seed,
// which randomizes internal visitation order; equal invocations are
// byte-identical.

#include <cstdint>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hurwitz/analysis.hpp"
#include "hurwitz/arith.hpp"
#include "hurwitz/catalog.hpp"
#include "hurwitz/errors.hpp"
#include "hurwitz/geometry.hpp"
#include "hurwitz/lift.hpp"
#include "hurwitz/report.hpp"

namespace {

using namespace hurwitz;

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

struct CommonOpts {
    std::string group;
    std::string classes;
    std::string mode = "inner";
    std::string format = "text";
    std::string normalizer;
    bool reduce_on = false, reduce_off = false;
    std::uint64_t element_cap = 100000;
    std::uint64_t tuple_cap = 10000000;
    std::uint64_t shuffle_seed = 0;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_group = true) {
    if (with_group) {
        cmd->add_option("--group", o.group,
                        "Group name (A4 A5 S4 D5 D7 D25 M5, perm:<cycles>;..., or "
                        "name:classes shorthand)")
            ->required();
        cmd->add_option("--class", o.classes, "Comma-separated class labels, e.g. +3,+3,-3,-3");
        cmd->add_option("--mode", o.mode, "Equivalence: inner or absolute")
            ->check(CLI::IsMember({"inner", "absolute"}));
        cmd->add_option("--normalizer", o.normalizer,
                        "Semicolon-separated cycles generating the normalizer (absolute mode)");
        cmd->add_flag("--reduce", o.reduce_on, "Force reduction (default when r = 4)");
        cmd->add_flag("--no-reduce", o.reduce_off, "Disable reduction");
    }
    cmd->add_option("--element-cap", o.element_cap, "Group closure element cap");
    cmd->add_option("--tuple-cap", o.tuple_cap, "Nielsen enumeration budget");
    cmd->add_option("--shuffle-seed", o.shuffle_seed,
                    "Randomize internal visitation order (output is unaffected)");
}

AnalysisConfig make_config(const CommonOpts& o) {
    AnalysisConfig config;
    std::string group_name = o.group;
    std::string class_part = o.classes;
    if (auto colon = group_name.find(':');
        colon != std::string::npos && !group_name.starts_with("perm:")) {
        if (!class_part.empty())
            throw input_error("give classes either in --group or in --class, not both");
        class_part = group_name.substr(colon + 1);
        group_name = group_name.substr(0, colon);
    }
    if (class_part.empty())
        throw input_error("no class labels given (use --class or --group name:classes)");

    config.group = catalog::group_by_name(group_name, o.element_cap);
    config.class_labels = split(class_part, ',');
    config.mode = o.mode == "absolute" ? Equivalence::absolute : Equivalence::inner;
    config.element_cap = o.element_cap;
    config.tuple_budget = o.tuple_cap;
    config.shuffle_seed = o.shuffle_seed;

    if (o.reduce_on && o.reduce_off)
        throw input_error("--reduce and --no-reduce conflict");
    config.reduce = o.reduce_on ||
                    (!o.reduce_off && config.class_labels.size() == 4);

    if (!o.normalizer.empty()) {
        std::vector<Permutation> gens;
        for (const auto& part : split(o.normalizer, ';'))
            gens.push_back(Permutation::parse_cycles(part, config.group.degree));
        FiniteGroup N;
        N.degree = config.group.degree;
        N.generators = std::move(gens);
        config.normalizer = std::move(N);
    } else if (config.mode == Equivalence::absolute && group_name.size() > 1 &&
               group_name[0] == 'D' && config.group.degree > config.normalizer_degree_bound) {
        // Catalog dihedral groups past the brute-force bound get their affine
        // normalizer filled in.
        config.normalizer = catalog::dihedral_affine_normalizer(config.group.degree);
    }
    return config;
}

// Classical oracle used by the crosscheck subcommand; the test suite carries
// its own independent copy.
struct ClassicalCurve {
    int index = 0;
    std::vector<int> widths;  // ascending
    int genus = 0;
    int nu2 = 0, nu3 = 0;
};

bool is_prime_int(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

int phi_of(int n) {
    int out = 0;
    for (int a = 1; a <= n; ++a)
        if (std::gcd(a, n) == 1) ++out;
    return out;
}

int legendre_plus_one(int a, int p) {
    // 1 + (a|p) evaluated by brute force.
    a %= p;
    if (a < 0) a += p;
    if (a == 0) return 1;
    for (int x = 1; x < p; ++x)
        if (x * x % p == a) return 2;
    return 0;
}

ClassicalCurve gamma0_curve(int n) {
    ClassicalCurve c;
    c.index = n;
    c.nu2 = n % 4 == 0 ? 0 : 1;
    c.nu3 = n % 9 == 0 ? 0 : 1;
    for (int p = 2; p <= n; ++p) {
        if (n % p != 0 || !is_prime_int(p)) continue;
        c.index = c.index / p * (p + 1);
        if (c.nu2) c.nu2 *= legendre_plus_one(-1, p);
        if (c.nu3) c.nu3 *= p == 3 ? 1 : legendre_plus_one(-3, p);
    }
    for (int d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        int count = phi_of(std::gcd(d, n / d));
        int width = n / (d * std::gcd(d, n / d));
        for (int i = 0; i < count; ++i) c.widths.push_back(width);
    }
    std::sort(c.widths.begin(), c.widths.end());
    int nu_inf = static_cast<int>(c.widths.size());
    // 12 g = 12 + index - 3 nu2 - 4 nu3 - 6 nu_inf
    c.genus = (12 + c.index - 3 * c.nu2 - 4 * c.nu3 - 6 * nu_inf) / 12;
    return c;
}

ClassicalCurve gamma1_curve(int n) {
    if (n <= 4)
        throw input_error("oracle handles level 5 and up");
    ClassicalCurve c;
    long long idx = static_cast<long long>(n) * n;
    for (int p = 2; p <= n; ++p)
        if (is_prime_int(p) && n % p == 0) idx = idx / (p * p) * (p * p - 1);
    c.index = static_cast<int>(idx / 2);
    c.nu2 = c.nu3 = 0;
    for (int d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        int count = phi_of(d) * phi_of(n / d) / 2;
        for (int i = 0; i < count; ++i) c.widths.push_back(n / d);
    }
    std::sort(c.widths.begin(), c.widths.end());
    c.genus = (12 + c.index - 6 * static_cast<int>(c.widths.size())) / 12;
    return c;
}

int run_crosscheck(int ell, int k, std::uint64_t tuple_cap) {
    DihedralModularReport rep = dihedral_modular_report(ell, k, tuple_cap);
    ClassicalCurve g0 = gamma0_curve(rep.level);
    ClassicalCurve g1 = gamma1_curve(rep.level);

    bool ok = true;
    auto compare = [&](const char* name, const ModularSide& side, const ClassicalCurve& ref) {
        int size = side.orbit_sizes.empty() ? 0 : side.orbit_sizes[0];
        bool single = side.orbit_sizes.size() == 1;
        bool match = single && size == ref.index && side.cusp_widths == ref.widths &&
                     side.genus == ref.genus && side.gamma0_fixed == ref.nu3 &&
                     side.gamma1_fixed == ref.nu2;
        std::cout << name << ": orbit " << size << (single ? "" : " (split!)") << " vs index "
                  << ref.index << ", genus " << side.genus << " vs " << ref.genus
                  << ", elliptic (" << side.gamma0_fixed << "," << side.gamma1_fixed
                  << ") vs (" << ref.nu3 << "," << ref.nu2 << ")\n";
        std::cout << "  widths:";
        for (int w : side.cusp_widths) std::cout << ' ' << w;
        std::cout << " vs";
        for (int w : ref.widths) std::cout << ' ' << w;
        std::cout << "\n  " << (match ? "MATCH" : "MISMATCH") << "\n";
        ok = ok && match;
    };
    std::cout << "level " << rep.level << " (l = " << ell << ", k = " << k << ")\n";
    compare("absolute vs Gamma_0", rep.absolute, g0);
    compare("inner vs Gamma_1", rep.inner, g1);
    return ok ? 0 : 1;
}

int run_catalog() {
    std::cout << "groups:\n";
    for (const auto& name : catalog::catalog_group_names()) {
        FiniteGroup G = catalog::group_by_name(name);
        std::cout << "  " << name << ": order " << G.order() << ", degree " << G.degree << "\n";
    }
    std::cout << "covers:\n";
    for (const auto& name : catalog::catalog_cover_names()) {
        catalog::CentralCover cover = catalog::cover_by_name(name);
        std::cout << "  " << name << ": kernel " << cover.kernel_order << ", total order "
                  << cover.total.order() << ", base " << cover.base.name << " (order "
                  << cover.base.order() << ")\n";
    }
    return 0;
}

int run_census(int ell, std::uint64_t tuple_cap, std::uint64_t cover_tuple_cap,
               const std::string& format) {
    HeisenbergCensus census = heisenberg_orbit_census(ell, tuple_cap, cover_tuple_cap);
    if (format == "json") {
        std::ostringstream os;
        os << "{\n  \"schema\": 1,\n  \"ell\": " << census.ell
           << ",\n  \"k_ell\": " << census.k_ell << ",\n  \"rows\": [\n";
        for (std::size_t i = 0; i < census.rows.size(); ++i) {
            const auto& row = census.rows[i];
            os << "    {\"orbit\": " << row.orbit_index << ", \"size\": " << row.size
               << ", \"lift\": " << row.lift_value << ", \"hm\": " << (row.hm ? "true" : "false")
               << ", \"double_identity\": " << (row.double_identity ? "true" : "false") << "}"
               << (i + 1 < census.rows.size() ? "," : "") << "\n";
        }
        os << "  ],\n  \"trivial_count\": " << census.trivial_count << "\n}\n";
        std::cout << os.str();
    } else {
        std::cout << "l = " << census.ell << ", predicted unobstructed orbits K_l = "
                  << census.k_ell << "\n";
        for (const auto& row : census.rows) {
            std::cout << "orbit " << row.orbit_index << ": size " << row.size << ", lift "
                      << row.lift_value;
            if (row.hm) std::cout << ", hm";
            if (row.double_identity) std::cout << ", double-identity";
            std::cout << "\n";
        }
        std::cout << "unobstructed orbits: " << census.trivial_count
                  << (census.trivial_count == census.k_ell ? " (= K_l)" : " (!= K_l)") << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Nielsen classes, braid orbits, and their geometry"};
    app.require_subcommand(1);

    CommonOpts orbit_opts, sh_opts, lift_opts, bcl_opts;

    auto* orbits_cmd = app.add_subcommand("orbits", "Braid orbits of a Nielsen class");
    add_common(orbits_cmd, orbit_opts);
    orbits_cmd->add_option("--format", orbit_opts.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* sh_cmd = app.add_subcommand("sh-incidence", "Cusp sh-incidence matrix (r = 4)");
    add_common(sh_cmd, sh_opts);
    sh_cmd->add_option("--format", sh_opts.format, "text, json, or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    auto* lift_cmd = app.add_subcommand("lift-invariant",
                                        "Lift invariants of the orbits through a central cover");
    std::string cover_name;
    std::uint64_t cover_tuple_cap = 10000000;
    lift_cmd->add_option("--cover", cover_name, "Cover name: spinA4, spinA5, heis<l>")
        ->required();
    add_common(lift_cmd, lift_opts);
    lift_cmd->get_option("--group")->required(false);
    lift_cmd->add_option("--cover-tuple-cap", cover_tuple_cap,
                         "Budget for the surjectivity route upstairs");
    lift_cmd->add_option("--format", lift_opts.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* bcl_cmd = app.add_subcommand("bcl", "Cyclotomic stabilizer of the class vector");
    add_common(bcl_cmd, bcl_opts);
    bcl_cmd->add_option("--format", bcl_opts.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* cross_cmd = app.add_subcommand(
        "crosscheck", "Dihedral involution classes against the classical curves");
    int cross_ell = 5, cross_k = 0;
    std::uint64_t cross_cap = 10000000;
    cross_cmd->add_option("--ell", cross_ell, "Odd prime l")->required();
    cross_cmd->add_option("--k", cross_k, "Level exponent: level = l^(k+1)");
    cross_cmd->add_option("--tuple-cap", cross_cap, "Nielsen enumeration budget");

    auto* census_cmd =
        app.add_subcommand("census", "Heisenberg lift census of the metacyclic classes");
    int census_ell = 5;
    std::uint64_t census_cap = 10000000, census_cover_cap = 10000000;
    std::string census_format = "text";
    census_cmd->add_option("--ell", census_ell, "Prime l in {5, 7, 11, 13}")->required();
    census_cmd->add_option("--tuple-cap", census_cap, "Nielsen enumeration budget");
    census_cmd->add_option("--cover-tuple-cap", census_cover_cap, "Budget upstairs");
    census_cmd->add_option("--format", census_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* catalog_cmd = app.add_subcommand("catalog", "List built-in groups and covers");

    CLI11_PARSE(app, argc, argv);

    try {
        if (orbits_cmd->parsed()) {
            Analysis an = run_analysis(make_config(orbit_opts));
            std::cout << (orbit_opts.format == "json" ? render_orbits_json(an)
                                                      : render_orbits_text(an));
            return 0;
        }
        if (sh_cmd->parsed()) {
            Analysis an = run_analysis(make_config(sh_opts));
            if (sh_opts.format == "json")
                std::cout << render_sh_incidence_json(an);
            else if (sh_opts.format == "csv")
                std::cout << render_sh_incidence_csv(an);
            else
                std::cout << render_sh_incidence_text(an);
            return 0;
        }
        if (lift_cmd->parsed()) {
            catalog::CentralCover cover = catalog::cover_by_name(cover_name);
            if (lift_opts.group.empty()) lift_opts.group = cover.base.name;
            AnalysisConfig config = make_config(lift_opts);
            if (config.group.elements != cover.base.elements)
                throw input_error("--group must be the cover's base group");
            Analysis an = run_analysis(config);
            LiftAnalysis la = lift_analysis(cover, an, cover_tuple_cap);
            std::cout << (lift_opts.format == "json" ? render_lift_json(an, cover, la)
                                                     : render_lift_text(an, cover, la));
            return 0;
        }
        if (bcl_cmd->parsed()) {
            AnalysisConfig config = make_config(bcl_opts);
            auto gd = GroupData::make(config.group);
            ClassVector cv = resolve_class_vector(*gd, config.class_labels);
            std::optional<FiniteGroup> normalizer;
            if (config.normalizer) {
                normalizer = normalizer_in_symmetric(gd->group, gd->classes, cv.entries,
                                                     config.normalizer_degree_bound,
                                                     &config.normalizer->generators,
                                                     config.element_cap);
            } else if (gd->group.degree <= config.normalizer_degree_bound) {
                normalizer = normalizer_in_symmetric(gd->group, gd->classes, cv.entries,
                                                     config.normalizer_degree_bound, nullptr,
                                                     config.element_cap);
            }
            BclData data = bcl_data(*gd, cv, normalizer ? &*normalizer : nullptr);
            std::cout << (bcl_opts.format == "json" ? render_bcl_json(*gd, cv, data)
                                                    : render_bcl_text(*gd, cv, data));
            return 0;
        }
        if (cross_cmd->parsed()) return run_crosscheck(cross_ell, cross_k, cross_cap);
        if (census_cmd->parsed())
            return run_census(census_ell, census_cap, census_cover_cap, census_format);
        if (catalog_cmd->parsed()) return run_catalog();
    } catch (const hurwitz::budget_error& e) {
        std::cerr << "budget: " << e.what() << "\n";
        return 2;
    } catch (const hurwitz::input_error& e) {
        std::cerr << "input: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
