#include "hurwitz/geometry.hpp"

#include <algorithm>
#include <numeric>

#include "hurwitz/catalog.hpp"
#include "hurwitz/errors.hpp"

namespace hurwitz {

namespace {

const BraidOrbit& reduced_orbit(const Analysis& an, int orbit_index) {
    if (orbit_index < 0 || orbit_index >= static_cast<int>(an.orbits.size()))
        throw input_error("orbit index out of range");
    const BraidOrbit& orb = an.orbits[orbit_index];
    if (!orb.reduced || orb.gamma_inf.empty())
        throw input_error("cusp geometry needs a reduced analysis");
    return orb;
}

// Index of a permutation given as position maps: points - cycles, fixed
// points included in the cycle count.
int permutation_index(const std::vector<int>& map) {
    std::vector<char> seen(map.size(), 0);
    int cycles = 0;
    for (std::size_t p = 0; p < map.size(); ++p) {
        if (seen[p]) continue;
        ++cycles;
        for (int q = static_cast<int>(p); !seen[q]; q = map[q]) seen[q] = 1;
    }
    return static_cast<int>(map.size()) - cycles;
}

// The node-level sh map, needed across orbits for the incidence matrix.
std::vector<int> node_sh_map(const Analysis& an) {
    std::vector<int> map(an.node_count(), -1);
    const GroupOps& ops = *an.gd->ops;
    std::vector<std::uint32_t> t(an.ni->r());
    for (int c = 0; c < an.eq->count(); ++c) {
        auto src = an.ni->tuple(an.eq->canonical(c));
        std::copy(src.begin(), src.end(), t.begin());
        apply_sh(t);
        auto found = an.ni->find(t);
        if (!found)
            throw internal_error("sh image missing from the Nielsen class");
        int from = an.red ? an.red->reduced_of(c) : c;
        int to = an.node_of_tuple(*found);
        if (map[from] >= 0 && map[from] != to)
            throw internal_error("sh is not well defined on reduced classes");
        map[from] = to;
    }
    return map;
}

}  // namespace

std::vector<CuspOrbit> cusp_orbits(const Analysis& an, int orbit_index) {
    const BraidOrbit& orb = reduced_orbit(an, orbit_index);
    const int n = orb.size();

    // Cycles of gamma_inf on the member positions.
    std::vector<int> cycle_of(n, -1);
    std::vector<std::vector<int>> cycles;
    for (int p = 0; p < n; ++p) {
        if (cycle_of[p] >= 0) continue;
        int id = static_cast<int>(cycles.size());
        cycles.push_back({});
        for (int q = p; cycle_of[q] < 0; q = orb.gamma_inf[q]) {
            cycle_of[q] = id;
            cycles[id].push_back(q);
        }
        std::sort(cycles[id].begin(), cycles[id].end());
    }

    // Listing order fixes the row and column order of incidence tables: the
    // widest cusp leads, the rest follow by ascending width, and ties under
    // either rule go to the cusp holding the least class id.
    std::vector<int> listed(cycles.size());
    std::iota(listed.begin(), listed.end(), 0);
    auto least = [&](int c) { return orb.members[cycles[c][0]]; };
    std::sort(listed.begin(), listed.end(), [&](int a, int b) {
        if (cycles[a].size() != cycles[b].size())
            return cycles[a].size() < cycles[b].size();
        return least(a) < least(b);
    });
    auto lead = std::min_element(listed.begin(), listed.end(), [&](int a, int b) {
        if (cycles[a].size() != cycles[b].size())
            return cycles[a].size() > cycles[b].size();
        return least(a) < least(b);
    });
    std::rotate(listed.begin(), lead, lead + 1);

    std::vector<CuspOrbit> out;
    out.reserve(cycles.size());
    for (std::size_t k = 0; k < listed.size(); ++k) {
        const auto& cyc = cycles[listed[k]];
        CuspOrbit cusp;
        cusp.orbit_index = orbit_index + 1;
        cusp.cusp_index = static_cast<int>(k) + 1;
        cusp.width = static_cast<int>(cyc.size());
        cusp.member_positions = cyc;
        cusp.least_node = orb.members[cyc[0]];
        cusp.label = "O(" + std::to_string(cusp.orbit_index) + "," +
                     std::to_string(cusp.cusp_index) + ")^" + std::to_string(cusp.width);
        out.push_back(std::move(cusp));
    }
    return out;
}

GenusReport component_genus(const Analysis& an, int orbit_index) {
    const BraidOrbit& orb = reduced_orbit(an, orbit_index);
    GenusReport rep;
    rep.orbit_size = orb.size();
    rep.ind_gamma0 = permutation_index(orb.gamma0);
    rep.ind_gamma1 = permutation_index(orb.gamma1);
    rep.ind_gamma_inf = permutation_index(orb.gamma_inf);
    int total = rep.ind_gamma0 + rep.ind_gamma1 + rep.ind_gamma_inf;
    int twice = total - 2 * rep.orbit_size + 2;
    if (twice < 0 || twice % 2 != 0)
        throw internal_error("orbit indices do not give a nonnegative integer genus");
    rep.genus = twice / 2;
    for (const auto& cusp : cusp_orbits(an, orbit_index)) rep.cusp_widths.push_back(cusp.width);
    return rep;
}

int cover_genus(const std::vector<Permutation>& tuple) {
    if (tuple.empty())
        throw input_error("cover genus needs a nonempty tuple");
    const int n = tuple[0].degree();
    Permutation prod(n);
    for (const auto& g : tuple) prod = compose(prod, g);
    if (!prod.is_identity())
        throw input_error("cover genus needs a product-one tuple");

    // Transitivity on the letters.
    std::vector<char> seen(n, 0);
    std::vector<Letter> frontier{0};
    seen[0] = 1;
    int reached = 1;
    while (!frontier.empty()) {
        Letter v = frontier.back();
        frontier.pop_back();
        for (const auto& g : tuple) {
            Letter w = g(v);
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                frontier.push_back(w);
            }
        }
    }
    if (reached != n)
        throw input_error("cover genus needs a transitive tuple");

    int total = 0;
    for (const auto& g : tuple) total += n - g.cycle_count();
    int twice = total - 2 * n + 2;
    if (twice < 0 || twice % 2 != 0)
        throw input_error("tuple indices do not give a nonnegative integer genus");
    return twice / 2;
}

ShIncidence sh_incidence(const Analysis& an) {
    ShIncidence inc;
    auto sh_map = node_sh_map(an);
    std::vector<int> cusp_of_node(an.node_count(), -1);
    for (std::size_t b = 0; b < an.orbits.size(); ++b) {
        int begin = static_cast<int>(inc.cusps.size());
        for (auto& cusp : cusp_orbits(an, static_cast<int>(b))) {
            for (int p : cusp.member_positions)
                cusp_of_node[an.orbits[b].members[p]] = static_cast<int>(inc.cusps.size());
            inc.cusps.push_back(std::move(cusp));
        }
        inc.blocks.emplace_back(begin, static_cast<int>(inc.cusps.size()));
    }

    inc.matrix.assign(inc.cusps.size(), std::vector<int>(inc.cusps.size(), 0));
    for (int node = 0; node < an.node_count(); ++node)
        ++inc.matrix[cusp_of_node[node]][cusp_of_node[sh_map[node]]];
    return inc;
}

FineModuliFlags fine_moduli_report(const Analysis& an, int orbit_index) {
    const BraidOrbit& orb = reduced_orbit(an, orbit_index);
    FineModuliFlags flags;
    flags.inner_fine =
        an.mode() == Equivalence::inner && center(an.gd->group).size() == 1;
    flags.b_fine = true;
    for (int node : orb.members)
        if (an.node_eq_classes(node).size() != 4) flags.b_fine = false;
    for (std::size_t p = 0; p < orb.gamma0.size(); ++p) {
        if (orb.gamma0[p] == static_cast<int>(p)) ++flags.gamma0_fixed_points;
        if (orb.gamma1[p] == static_cast<int>(p)) ++flags.gamma1_fixed_points;
    }
    flags.reduced_fine =
        flags.b_fine && flags.gamma0_fixed_points == 0 && flags.gamma1_fixed_points == 0;
    return flags;
}

DihedralModularReport dihedral_modular_report(int ell, int k, std::uint64_t tuple_budget) {
    bool prime = ell >= 3;
    for (int d = 2; d * d <= ell; ++d)
        if (ell % d == 0) prime = false;
    if (!prime || ell % 2 == 0 || k < 0)
        throw input_error("dihedral report needs an odd prime l and k >= 0");
    DihedralModularReport rep;
    rep.ell = ell;
    rep.k = k;
    rep.level = 1;
    for (int i = 0; i <= k; ++i) rep.level *= ell;

    AnalysisConfig config;
    config.group = catalog::dihedral(rep.level);
    config.class_labels = {"2", "2", "2", "2"};
    config.reduce = true;
    config.tuple_budget = tuple_budget;

    auto side = [&](Equivalence mode) {
        config.mode = mode;
        if (mode == Equivalence::absolute)
            config.normalizer = catalog::dihedral_affine_normalizer(rep.level);
        Analysis an = run_analysis(config);
        ModularSide out;
        for (const auto& orb : an.orbits) out.orbit_sizes.push_back(orb.size());
        GenusReport genus = component_genus(an, 0);
        out.cusp_widths = genus.cusp_widths;
        std::sort(out.cusp_widths.begin(), out.cusp_widths.end());
        out.genus = genus.genus;
        FineModuliFlags flags = fine_moduli_report(an, 0);
        out.gamma0_fixed = flags.gamma0_fixed_points;
        out.gamma1_fixed = flags.gamma1_fixed_points;
        return out;
    };
    rep.absolute = side(Equivalence::absolute);
    rep.inner = side(Equivalence::inner);
    return rep;
}

}  // namespace hurwitz
