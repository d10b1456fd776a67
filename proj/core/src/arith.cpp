#include "hurwitz/arith.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "hurwitz/errors.hpp"

namespace hurwitz {

BclData bcl_data(const GroupData& gd, const ClassVector& cv, const FiniteGroup* normalizer) {
    BclData data;
    data.n_c = cv.n_c;
    data.normalizer_supplied = normalizer != nullptr;

    const GroupOps& ops = *gd.ops;
    auto powered_entries = [&](long long m) {
        std::vector<int> image;
        image.reserve(cv.entries.size());
        for (int c : cv.entries) {
            std::uint32_t rep = ops.id_of(gd.classes[c].representative);
            image.push_back(gd.class_of[ops.power(rep, m)]);
        }
        std::sort(image.begin(), image.end());
        return image;
    };

    // Entry multisets reachable by normalizer conjugation.
    std::set<std::vector<int>> conjugates;
    conjugates.insert(cv.entries);
    if (normalizer != nullptr) {
        for (const auto& h : normalizer->elements) {
            std::vector<int> image;
            image.reserve(cv.entries.size());
            for (int c : cv.entries) {
                Permutation conj_rep = conjugate(gd.classes[c].representative, h);
                if (!gd.group.contains(conj_rep))
                    throw input_error("normalizer does not normalize the group");
                image.push_back(gd.class_of[ops.id_of(conj_rep)]);
            }
            std::sort(image.begin(), image.end());
            conjugates.insert(std::move(image));
        }
    }

    for (long long m = 1; m < data.n_c; ++m) {
        if (std::gcd(m, data.n_c) != 1) continue;
        std::vector<int> image = powered_entries(m);
        if (image == cv.entries) data.inner_subgroup.push_back(m);
        if (conjugates.count(image)) data.absolute_subgroup.push_back(m);
    }
    if (data.n_c == 1) {
        data.inner_subgroup.push_back(1);
        data.absolute_subgroup.push_back(1);
    }

    long long unit_count = 0;
    for (long long m = 1; m <= data.n_c; ++m)
        if (std::gcd(m, data.n_c) == 1) ++unit_count;
    data.rational_union =
        static_cast<long long>(data.inner_subgroup.size()) == unit_count;
    return data;
}

bool is_ell_perfect(const FiniteGroup& G, int ell) {
    if (ell < 2)
        throw input_error("l must be at least 2");
    GroupOps ops(G);
    std::vector<std::uint32_t> gens;
    for (std::uint32_t a = 0; a < ops.size(); ++a) {
        gens.push_back(ops.power(a, ell));
        for (std::uint32_t b = 0; b < ops.size(); ++b)
            gens.push_back(ops.mul(ops.mul(ops.mul(a, b), ops.inv(a)), ops.inv(b)));
    }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::size_t sub = subgroup_closure_ids(ops, gens).size();
    return (G.elements.size() / sub) % static_cast<std::size_t>(ell) != 0;
}

bool ell_prime_classes(const GroupData& gd, const ClassVector& cv, int ell) {
    if (ell < 2)
        throw input_error("l must be at least 2");
    for (int c : cv.entries)
        if (gd.classes[c].element_order % ell == 0) return false;
    return true;
}

}  // namespace hurwitz
