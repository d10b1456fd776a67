#include "hurwitz/lift.hpp"

#include <algorithm>
#include <numeric>

#include "hurwitz/errors.hpp"

namespace hurwitz {

namespace {

std::uint32_t base_id_of(const catalog::CentralCover& cover, const Permutation& g) {
    auto it = std::lower_bound(cover.base.elements.begin(), cover.base.elements.end(), g);
    if (it == cover.base.elements.end() || *it != g)
        throw input_error("element is not in the cover's base group");
    return static_cast<std::uint32_t>(it - cover.base.elements.begin());
}

// Shared tables for repeated lifting through one cover.
struct LiftContext {
    const catalog::CentralCover& cover;
    GroupOps tot;
    std::vector<std::uint32_t> z_power;       // z^j as total ids, j in 0..l-1
    std::vector<int> dlog;                    // total id -> j when a kernel power, else -1
    std::vector<std::uint32_t> preimage;      // base id -> least total id above it
    std::vector<std::uint32_t> lift_cache;    // base id -> lifted total id (lazy)
    static constexpr std::uint32_t kUnset = 0xffffffffu;

    explicit LiftContext(const catalog::CentralCover& c)
        : cover(c), tot(c.total), dlog(c.total.order(), -1) {
        std::uint32_t z = tot.id_of(c.kernel_generator);
        std::uint32_t cur = tot.identity();
        for (int j = 0; j < c.kernel_order; ++j) {
            z_power.push_back(cur);
            dlog[cur] = j;
            cur = tot.mul(cur, z);
        }
        if (cur != tot.identity())
            throw internal_error("kernel generator order mismatch");
        preimage.assign(cover.base.order(), kUnset);
        for (std::uint32_t a = 0; a < tot.size(); ++a)
            if (preimage[cover.projection[a]] == kUnset) preimage[cover.projection[a]] = a;
        lift_cache.assign(cover.base.order(), kUnset);
    }

    // The unique preimage of base element b with the same order; requires
    // the order prime to the kernel order.
    std::uint32_t lift(std::uint32_t b) {
        if (lift_cache[b] != kUnset) return lift_cache[b];
        const int l = cover.kernel_order;
        const int m = cover.base.elements[b].order();
        if (m % l == 0)
            throw input_error("no same-order lift: the kernel order divides the element order");
        std::uint32_t h = preimage[b];
        int a = dlog[tot.power(h, m)];
        if (a < 0)
            throw internal_error("m-th power of a preimage is not in the kernel");
        // (h z^t)^m = h^m z^(t m); solve t m + a = 0 mod l.
        int m_inv = 1;
        while ((m_inv * (m % l)) % l != 1) ++m_inv;
        int t = ((l - a) * m_inv) % l;
        std::uint32_t lifted = tot.mul(h, z_power[t]);
        if (tot.order(lifted) != m)
            throw internal_error("same-order lift has the wrong order");
        return lift_cache[b] = lifted;
    }
};

}  // namespace

Permutation same_order_lift(const catalog::CentralCover& cover, const Permutation& g) {
    LiftContext ctx(cover);
    return ctx.tot.perm(ctx.lift(base_id_of(cover, g)));
}

LiftInvariant lift_invariant(const catalog::CentralCover& cover,
                             const std::vector<Permutation>& tuple) {
    if (tuple.empty())
        throw input_error("lift invariant needs a nonempty tuple");
    LiftContext ctx(cover);
    std::uint32_t prod = ctx.tot.identity();
    for (const auto& g : tuple) prod = ctx.tot.mul(prod, ctx.lift(base_id_of(cover, g)));
    int a = ctx.dlog[prod];
    if (a < 0)
        throw input_error("lift invariant needs a product-one tuple");
    return {a, cover.kernel_order};
}

namespace {

void check_same_base(const catalog::CentralCover& cover, const Analysis& an) {
    if (an.gd->group.elements != cover.base.elements)
        throw input_error("analysis group is not the cover's base group");
}

}  // namespace

LiftAnalysis lift_analysis(const catalog::CentralCover& cover,
                           const Analysis& an,
                           std::uint64_t cover_tuple_budget) {
    check_same_base(cover, an);
    LiftContext ctx(cover);
    LiftAnalysis la;
    la.modulus = cover.kernel_order;

    // The analysis group has the same sorted element list as the base, so
    // tuple ids transfer directly.
    la.value_of_node.reserve(an.node_count());
    for (int node = 0; node < an.node_count(); ++node) {
        auto t = an.ni->tuple(an.canonical_tuple_index(node));
        std::uint32_t prod = ctx.tot.identity();
        for (std::uint32_t b : t) prod = ctx.tot.mul(prod, ctx.lift(b));
        int a = ctx.dlog[prod];
        if (a < 0)
            throw internal_error("lift of a product-one tuple is not in the kernel");
        la.value_of_node.push_back(a);
    }

    // Surjectivity route: enumerate the Nielsen class of the lifted classes
    // upstairs and project every tuple down.
    auto total_gd = GroupData::make(cover.total);
    ClassVector cover_cv;
    for (int c : an.cv.entries) {
        std::uint32_t rep = ctx.lift(base_id_of(cover, an.gd->classes[c].representative));
        cover_cv.entries.push_back(total_gd->class_of[rep]);
    }
    std::sort(cover_cv.entries.begin(), cover_cv.entries.end());
    cover_cv.n_c = 1;
    for (int c : cover_cv.entries)
        cover_cv.n_c = std::lcm(cover_cv.n_c,
                                static_cast<long long>(total_gd->classes[c].element_order));
    try {
        NielsenClass cover_ni = NielsenClass::enumerate(total_gd, cover_cv, cover_tuple_budget);
        la.node_hit.assign(an.node_count(), 0);
        std::vector<std::uint32_t> down(an.ni->r());
        for (std::size_t idx = 0; idx < cover_ni.count(); ++idx) {
            auto t = cover_ni.tuple(idx);
            for (int k = 0; k < an.ni->r(); ++k) down[k] = cover.projection[t[k]];
            auto found = an.ni->find(down);
            if (!found)
                throw internal_error("projected cover tuple missing from the base class");
            la.node_hit[an.node_of_tuple(*found)] = 1;
        }
        la.surjectivity_checked = true;
    } catch (const budget_error&) {
        la.surjectivity_checked = false;
    }
    return la;
}

ObstructionReport orbit_obstruction(const catalog::CentralCover& cover,
                                    const Analysis& an,
                                    const LiftAnalysis& la,
                                    int orbit_index) {
    check_same_base(cover, an);
    if (orbit_index < 0 || orbit_index >= static_cast<int>(an.orbits.size()))
        throw input_error("orbit index out of range");
    if (static_cast<int>(la.value_of_node.size()) != an.node_count())
        throw input_error("lift analysis does not match the analysis");
    const BraidOrbit& orb = an.orbits[orbit_index];

    ObstructionReport rep;
    rep.invariant = {la.value_of_node[orb.members[0]], la.modulus};
    for (int node : orb.members)
        if (la.value_of_node[node] != rep.invariant.value)
            throw internal_error("lift invariant is not constant on a braid orbit");
    rep.obstructed = rep.invariant.value != 0;
    rep.surjectivity_checked = la.surjectivity_checked;
    if (la.surjectivity_checked) {
        for (int node : orb.members) {
            bool hit = la.node_hit[node] != 0;
            if (hit == rep.obstructed) rep.routes_agree = false;
        }
    }
    return rep;
}

std::vector<int> project_nodes(const catalog::CentralCover& cover,
                               const Analysis& cover_an,
                               const Analysis& base_an) {
    if (cover_an.gd->group.elements != cover.total.elements)
        throw input_error("cover analysis group is not the cover's total group");
    check_same_base(cover, base_an);

    std::vector<int> out;
    out.reserve(cover_an.node_count());
    std::vector<std::uint32_t> down(base_an.ni->r());
    for (int node = 0; node < cover_an.node_count(); ++node) {
        auto t = cover_an.ni->tuple(cover_an.canonical_tuple_index(node));
        if (static_cast<int>(t.size()) != base_an.ni->r())
            throw input_error("cover and base analyses have different tuple lengths");
        for (std::size_t k = 0; k < t.size(); ++k) down[k] = cover.projection[t[k]];
        auto found = base_an.ni->find(down);
        if (!found)
            throw input_error("projected tuple is not in the base Nielsen class");
        out.push_back(base_an.node_of_tuple(*found));
    }
    return out;
}

HeisenbergCensus heisenberg_orbit_census(int ell,
                                         std::uint64_t tuple_budget,
                                         std::uint64_t cover_tuple_budget) {
    if (ell != 5 && ell != 7 && ell != 11 && ell != 13)
        throw input_error("census supports l in {5, 7, 11, 13}");
    HeisenbergCensus census;
    census.ell = ell;
    census.k_ell = ell % 6 == 1 ? (ell - 1) / 6 : (ell + 1) / 6;

    catalog::CentralCover cover = catalog::heisenberg_cover(ell);

    AnalysisConfig config;
    config.group = catalog::metacyclic_l2_3(ell);
    config.class_labels = {"+3", "+3", "-3", "-3"};
    config.mode = Equivalence::inner;
    config.reduce = true;
    config.tuple_budget = tuple_budget;
    census.analysis = run_analysis(config);
    const Analysis& an = census.analysis;

    LiftAnalysis la = lift_analysis(cover, an, cover_tuple_budget);

    census.trivial_all_hm = true;
    census.nontrivial_all_double_identity = true;
    std::vector<int> nontrivial_values;
    for (std::size_t b = 0; b < an.orbits.size(); ++b) {
        ObstructionReport rep = orbit_obstruction(cover, an, la, static_cast<int>(b));
        HeisenbergCensus::Row row;
        row.orbit_index = static_cast<int>(b) + 1;
        row.size = an.orbits[b].size();
        row.lift_value = rep.invariant.value;
        row.hm = an.orbits[b].hm;
        row.double_identity = an.orbits[b].double_identity;
        if (row.lift_value == 0) {
            ++census.trivial_count;
            census.trivial_all_hm = census.trivial_all_hm && row.hm;
        } else {
            census.nontrivial_all_double_identity =
                census.nontrivial_all_double_identity && row.double_identity;
            nontrivial_values.push_back(row.lift_value);
        }
        census.rows.push_back(row);
    }
    std::sort(nontrivial_values.begin(), nontrivial_values.end());
    census.nontrivial_values_distinct =
        std::adjacent_find(nontrivial_values.begin(), nontrivial_values.end()) ==
        nontrivial_values.end();
    return census;
}

}  // namespace hurwitz
