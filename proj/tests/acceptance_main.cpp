// Acceptance suite: ten end-to-end checks with pinned expected values and
// time limits, one [PASS]/[FAIL] line each.  Exit code is the number of
// failures.
//
// Usage: hurwitz_acceptance <path-to-hurwitz_cli> <path-to-hurwitz_tests>

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hurwitz/analysis.hpp"
#include "hurwitz/catalog.hpp"
#include "hurwitz/geometry.hpp"
#include "hurwitz/lift.hpp"
#include "oracles.hpp"

using namespace hurwitz;

namespace {

std::string cli_path, tests_path;

struct check_failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void expect(bool cond, const std::string& what) {
    if (!cond) throw check_failure(what);
}

Analysis analyze(FiniteGroup G, const std::vector<std::string>& labels,
                 bool reduce = true) {
    AnalysisConfig config;
    config.group = std::move(G);
    config.class_labels = labels;
    config.reduce = reduce;
    return run_analysis(config);
}

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_command(const std::string& cmd) {
    FILE* pipe = popen((cmd + " 2>&1").c_str(), "r");
    if (!pipe) throw check_failure("cannot spawn: " + cmd);
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    int status = pclose(pipe);
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.output = std::move(out);
    return r;
}

std::string quoted(const std::string& path) { return "'" + path + "'"; }

// The worked r = 4 example everything below revolves around.
Analysis alternating4_analysis() {
    return analyze(catalog::alternating(4), {"+3", "+3", "-3", "-3"});
}

void criterion_components() {
    auto an = alternating4_analysis();
    expect(an.orbits.size() == 2, "expected exactly 2 braid orbits");
    expect(an.orbits[0].size() == 9, "largest orbit must have 9 reduced classes");
    expect(an.orbits[1].size() == 6, "second orbit must have 6 reduced classes");
}

void criterion_sh_incidence() {
    auto an = alternating4_analysis();
    auto inc = sh_incidence(an);
    expect(inc.blocks.size() == 2, "expected 2 diagonal blocks");

    auto block_of = [&](int b) {
        auto [begin, end] = inc.blocks[b];
        std::vector<std::vector<int>> m;
        std::vector<int> widths;
        for (int i = begin; i < end; ++i) {
            widths.push_back(inc.cusps[i].width);
            m.emplace_back(inc.matrix[i].begin() + begin, inc.matrix[i].begin() + end);
        }
        return std::make_pair(m, widths);
    };

    auto [m0, w0] = block_of(0);
    expect(w0 == std::vector<int>{4, 2, 3}, "orbit 1 cusp widths must read (4,2,3)");
    expect(m0 == std::vector<std::vector<int>>{{1, 1, 2}, {1, 0, 1}, {2, 1, 0}},
           "orbit 1 sh-incidence block mismatch");

    auto [m1, w1] = block_of(1);
    expect(w1 == std::vector<int>{4, 1, 1}, "orbit 2 cusp widths must read (4,1,1)");
    expect(m1 == std::vector<std::vector<int>>{{2, 1, 1}, {1, 0, 0}, {1, 0, 0}},
           "orbit 2 sh-incidence block mismatch");
}

void criterion_genus() {
    auto an = alternating4_analysis();
    auto g0 = component_genus(an, 0);
    expect(g0.ind_gamma0 == 6 && g0.ind_gamma1 == 4 && g0.ind_gamma_inf == 6,
           "orbit 1 indices must be (6,4,6)");
    expect(g0.genus == 0, "orbit 1 must have genus 0");
    auto g1 = component_genus(an, 1);
    expect(g1.ind_gamma0 == 4 && g1.ind_gamma1 == 3 && g1.ind_gamma_inf == 3,
           "orbit 2 indices must be (4,3,3)");
    expect(g1.genus == 0, "orbit 2 must have genus 0");
}

void criterion_spin_component() {
    auto cover = catalog::spin_cover_a4();
    auto base_an = alternating4_analysis();
    auto cover_an = analyze(cover.total, {"+3", "+3", "-3", "-3"});
    expect(cover_an.orbits.size() == 1, "spin tuples must form a single orbit");
    expect(cover_an.orbits[0].size() == 9, "spin orbit must have 9 reduced classes");

    auto down = project_nodes(cover, cover_an, base_an);
    std::set<int> images(down.begin(), down.end());
    expect(images.size() == down.size(), "projection must be injective on reduced classes");
    std::set<int> plus(base_an.orbits[0].members.begin(), base_an.orbits[0].members.end());
    expect(images == plus, "projection must land exactly on the unobstructed component");
}

void criterion_lift_values() {
    auto cover = catalog::spin_cover_a4();
    auto an = alternating4_analysis();
    auto la = lift_analysis(cover, an, 10000000);
    auto plus = orbit_obstruction(cover, an, la, 0);
    auto minus = orbit_obstruction(cover, an, la, 1);
    expect(plus.invariant.value == 0 && !plus.obstructed,
           "component of size 9 must be unobstructed");
    expect(minus.invariant.value == 1 && minus.obstructed,
           "component of size 6 must have lift value 1");
    expect(plus.routes_agree && minus.routes_agree, "lift routes must agree");

    auto an3 = analyze(catalog::alternating(4), {"+3", "+3", "+3"}, false);
    auto la3 = lift_analysis(cover, an3, 10000000);
    for (std::size_t o = 0; o < an3.orbits.size(); ++o) {
        auto rep = orbit_obstruction(cover, an3, la3, static_cast<int>(o));
        expect(rep.invariant.value == 1, "order-3 triples must have lift value 1");
        expect(rep.routes_agree, "triple routes must agree");
    }

    auto cover5 = catalog::spin_cover_a5();
    auto an5 = analyze(catalog::alternating(5), {"3", "3", "3", "3"});
    expect(an5.orbits.size() == 1, "degree-5 3-cycle tuples must form a single orbit");
    auto la5 = lift_analysis(cover5, an5, 10000000);
    auto rep5 = orbit_obstruction(cover5, an5, la5, 0);
    expect(rep5.invariant.value == 0 && !rep5.obstructed,
           "degree-5 3-cycle orbit must be unobstructed");
    expect(rep5.routes_agree, "degree-5 routes must agree");
}

void criterion_elliptic_points() {
    auto an = alternating4_analysis();
    auto plus = fine_moduli_report(an, 0);
    expect(plus.gamma0_fixed_points == 0, "gamma0 must be fixed-point-free on the 9-orbit");
    expect(plus.gamma1_fixed_points == 1, "gamma1 must fix exactly one reduced class");
    auto minus = fine_moduli_report(an, 1);
    expect(minus.gamma0_fixed_points == 0 && minus.gamma1_fixed_points == 0,
           "both words must be fixed-point-free on the 6-orbit");
}

void criterion_modular_match() {
    for (int ell : {5, 7}) {
        auto rep = dihedral_modular_report(ell, 0);
        auto g0 = oracle::gamma0_shape(ell);
        auto g1 = oracle::gamma1_shape(ell);
        auto side_matches = [](const ModularSide& side, const oracle::CurveShape& ref) {
            return side.orbit_sizes == std::vector<int>{ref.index} &&
                   side.cusp_widths == ref.widths && side.genus == ref.genus &&
                   side.gamma0_fixed == ref.nu3 && side.gamma1_fixed == ref.nu2;
        };
        expect(side_matches(rep.absolute, g0),
               "absolute side must match the level-" + std::to_string(ell) + " quotient");
        expect(side_matches(rep.inner, g1),
               "inner side must match the level-" + std::to_string(ell) + " cover");
    }
}

void criterion_census() {
    for (int ell : {5, 7}) {
        auto census = heisenberg_orbit_census(ell);
        expect(census.k_ell == 1, "predicted unobstructed count must be 1");
        expect(census.trivial_count == 1,
               "exactly one orbit must lift at l = " + std::to_string(ell));
        expect(census.trivial_all_hm, "the lifting orbit must contain HM tuples");
        expect(census.nontrivial_all_double_identity,
               "obstructed orbits must contain double-identity tuples");
        expect(census.nontrivial_values_distinct,
               "obstructed orbits must carry distinct lift values");
    }
}

void criterion_unit_suite() {
    auto r = run_command(quoted(tests_path));
    expect(r.exit_code == 0, "unit suite exited with code " + std::to_string(r.exit_code));
}

void criterion_determinism() {
    std::vector<std::string> commands = {
        " orbits --group A4 --class +3,+3,-3,-3 --format json --shuffle-seed ",
        " sh-incidence --group A4 --class +3,+3,-3,-3 --shuffle-seed ",
        " lift-invariant --cover spinA4 --class +3,+3,-3,-3 --format json --shuffle-seed ",
    };
    std::string reference;
    for (int seed = 1; seed <= 5; ++seed) {
        std::string combined;
        for (const auto& cmd : commands) {
            auto r = run_command(quoted(cli_path) + cmd + std::to_string(seed));
            expect(r.exit_code == 0, "cli exited with code " + std::to_string(r.exit_code) +
                                         " on" + cmd + std::to_string(seed));
            combined += r.output;
        }
        if (seed == 1)
            reference = combined;
        else
            expect(combined == reference, "output differs between shuffle seeds");
    }
    expect(!reference.empty(), "cli produced no output");
}

struct Criterion {
    int number;
    std::string title;
    double limit_seconds;
    std::function<void()> body;
};

}  // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::cerr << "usage: hurwitz_acceptance <hurwitz_cli> <hurwitz_tests>\n";
        return 99;
    }
    cli_path = argv[1];
    tests_path = argv[2];

    std::vector<Criterion> criteria = {
        {1, "two components of sizes 9 and 6", 1.0, criterion_components},
        {2, "pinned sh-incidence blocks", 1.0, criterion_sh_incidence},
        {3, "genus 0 with indices (6,4,6) and (4,3,3)", 1.0, criterion_genus},
        {4, "spin orbit of size 9 projects onto the plus component", 5.0,
         criterion_spin_component},
        {5, "lift values 0/1, obstructed triples, degree-5 lift", 30.0,
         criterion_lift_values},
        {6, "elliptic fixed points 1 and 0", 1.0, criterion_elliptic_points},
        {7, "dihedral classes match the classical curves", 10.0, criterion_modular_match},
        {8, "Heisenberg census at l = 5 and 7", 600.0, criterion_census},
        {9, "unit and property suites pass", 300.0, criterion_unit_suite},
        {10, "byte-identical output across shuffle seeds", 120.0, criterion_determinism},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::string verdict = "PASS", detail;
        try {
            c.body();
        } catch (const std::exception& e) {
            verdict = "FAIL";
            detail = e.what();
        }
        double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (verdict == "PASS" && seconds > c.limit_seconds) {
            verdict = "FAIL";
            detail = "exceeded " + std::to_string(c.limit_seconds) + "s limit";
        }
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(2);
        line << "[" << verdict << "] " << c.number << ": " << c.title << " (" << seconds
             << "s)";
        if (!detail.empty()) line << " -- " << detail;
        std::cout << line.str() << std::endl;
        if (verdict == "FAIL") ++failures;
    }
    std::cout << "acceptance: " << (criteria.size() - failures) << "/" << criteria.size()
              << " criteria passed" << std::endl;
    return failures;
}
