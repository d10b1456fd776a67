#include "hurwitz/nielsen.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "hurwitz/braid.hpp"
#include "hurwitz/errors.hpp"

namespace hurwitz {

ClassVector resolve_class_vector(const GroupData& gd, const std::vector<std::string>& labels) {
    if (labels.empty())
        throw input_error("class vector must have at least one entry");
    ClassVector cv;
    for (const auto& label : labels) {
        int idx = gd.class_index_of_label(label);
        if (idx < 0 && !label.empty() &&
            std::all_of(label.begin(), label.end(), [](char c) { return c >= '0' && c <= '9'; })) {
            // Bare "k" falls back to the first order-k class.
            int k = std::stoi(label);
            for (std::size_t c = 0; c < gd.classes.size(); ++c)
                if (gd.classes[c].element_order == k) {
                    idx = static_cast<int>(c);
                    break;
                }
        }
        if (idx < 0)
            throw input_error("no conjugacy class labeled '" + label + "' in " + gd.group.name);
        cv.entries.push_back(idx);
    }
    std::sort(cv.entries.begin(), cv.entries.end());
    cv.n_c = 1;
    for (int c : cv.entries)
        cv.n_c = std::lcm(cv.n_c, static_cast<long long>(gd.classes[c].element_order));
    return cv;
}

std::vector<std::string> class_vector_labels(const GroupData& gd, const ClassVector& cv) {
    std::vector<std::string> labels;
    labels.reserve(cv.entries.size());
    for (int c : cv.entries) labels.push_back(gd.classes[c].label);
    return labels;
}

bool class_vector_generates(const GroupData& gd, const ClassVector& cv) {
    std::vector<std::uint32_t> ids;
    std::vector<int> distinct = cv.entries;
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int c : distinct)
        for (const auto& m : gd.classes[c].members) ids.push_back(gd.ops->id_of(m));
    return generates_group(*gd.ops, ids);
}

NielsenClass NielsenClass::enumerate(std::shared_ptr<const GroupData> gd,
                                     ClassVector cv,
                                     std::uint64_t tuple_budget) {
    const int r = cv.r();
    if (r == 0)
        throw input_error("Nielsen class needs a nonempty class vector");
    if (!class_vector_generates(*gd, cv))
        throw input_error("class vector does not generate the group");
    const GroupOps& ops = *gd->ops;

    // Union of the entry classes, ids ascending.  Every tuple entry lies in
    // it, including the determined last one.
    std::vector<int> distinct = cv.entries;
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::vector<std::uint32_t> pool;
    for (int c : distinct)
        for (const auto& m : gd->classes[c].members) pool.push_back(ops.id_of(m));
    std::sort(pool.begin(), pool.end());

    std::uint64_t work = 1;
    for (int k = 0; k + 1 < r; ++k) {
        if (work > tuple_budget / std::max<std::uint64_t>(pool.size(), 1))
            throw budget_error("Nielsen enumeration exceeds the tuple budget");
        work *= pool.size();
    }

    std::vector<int> needed(gd->classes.size(), 0);
    for (int c : cv.entries) ++needed[c];

    NielsenClass ni;
    ni.gd_ = gd;
    ni.cv_ = std::move(cv);

    // Generation depends only on the set of distinct entries; memoize on it.
    std::map<std::vector<std::uint32_t>, bool> gen_memo;
    std::vector<std::uint32_t> t(r), prefix(r);  // prefix[k] = product of t[0..k]
    std::vector<int> used(gd->classes.size(), 0);

    auto accept = [&]() {
        std::fill(used.begin(), used.end(), 0);
        for (int k = 0; k < r; ++k) ++used[gd->class_of[t[k]]];
        if (used != needed) return;
        std::vector<std::uint32_t> key(t.begin(), t.end());
        std::sort(key.begin(), key.end());
        key.erase(std::unique(key.begin(), key.end()), key.end());
        auto [it, fresh] = gen_memo.try_emplace(key, false);
        if (fresh) it->second = generates_group(ops, it->first);
        if (!it->second) return;
        ni.flat_.insert(ni.flat_.end(), t.begin(), t.end());
        ++ni.count_;
    };

    // Odometer over the first r-1 positions in pool order; enumeration order
    // is therefore lexicographic, so the flat storage comes out sorted.
    std::vector<std::size_t> at(std::max(r - 1, 0), 0);
    int k = 0;
    if (r == 1) {
        t[0] = ops.identity();
        accept();
    }
    while (r > 1) {
        if (k == r - 1) {
            t[r - 1] = ops.inv(prefix[r - 2]);
            accept();
            --k;
            continue;
        }
        if (at[k] == pool.size()) {
            at[k] = 0;
            if (--k < 0) break;
            continue;
        }
        t[k] = pool[at[k]++];
        prefix[k] = k == 0 ? t[0] : ops.mul(prefix[k - 1], t[k]);
        ++k;
    }
    return ni;
}

std::optional<std::size_t> NielsenClass::find(std::span<const std::uint32_t> t) const {
    const std::size_t r = static_cast<std::size_t>(cv_.r());
    if (t.size() != r)
        throw input_error("tuple length does not match the class vector");
    std::size_t lo = 0, hi = count_;
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        const std::uint32_t* m = flat_.data() + mid * r;
        if (std::lexicographical_compare(m, m + r, t.begin(), t.end()))
            lo = mid + 1;
        else
            hi = mid;
    }
    if (lo < count_ && std::equal(t.begin(), t.end(), flat_.data() + lo * r))
        return lo;
    return std::nullopt;
}

std::vector<Permutation> NielsenClass::materialize(std::size_t idx) const {
    std::vector<Permutation> out;
    out.reserve(static_cast<std::size_t>(cv_.r()));
    for (std::uint32_t id : tuple(idx)) out.push_back(gd_->ops->perm(id));
    return out;
}

namespace {

// Entrywise conjugation maps, one per conjugating generator: element id ->
// id of its conjugate.  Throws input_error if conjugation leaves the group.
std::vector<std::vector<std::uint32_t>> conjugation_maps(const GroupData& gd,
                                                         const std::vector<Permutation>& by) {
    std::vector<std::vector<std::uint32_t>> maps;
    for (const auto& h : by) {
        std::vector<std::uint32_t> m(gd.ops->size());
        for (std::uint32_t e = 0; e < gd.ops->size(); ++e) {
            Permutation c = conjugate(gd.ops->perm(e), h);
            if (!gd.group.contains(c))
                throw input_error("conjugating element does not normalize the group");
            m[e] = gd.ops->id_of(c);
        }
        maps.push_back(std::move(m));
    }
    return maps;
}

std::vector<std::size_t> seed_order(std::size_t n, std::uint64_t shuffle_seed) {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    if (shuffle_seed != 0) {
        std::mt19937_64 rng(shuffle_seed);
        std::shuffle(order.begin(), order.end(), rng);
    }
    return order;
}

struct OrbitPartition {
    int count = 0;
    std::vector<std::int32_t> class_of;   // per item, renumbered by least member
    std::vector<std::size_t> canonical;   // per class, least item
};

// Orbits of the items 0..n-1 under the conjugation maps, classes renumbered
// so canonical items increase with the class id.
OrbitPartition conjugation_orbits(const NielsenClass& ni,
                                  const std::vector<Permutation>& conjugators,
                                  std::uint64_t shuffle_seed) {
    auto maps = conjugation_maps(ni.data(), conjugators);
    const std::size_t n = ni.count();
    const int r = ni.r();
    std::vector<std::int32_t> cls(n, -1);
    std::vector<std::size_t> least;

    std::vector<std::size_t> stack;
    std::vector<std::uint32_t> image(r);
    for (std::size_t seed : seed_order(n, shuffle_seed)) {
        if (cls[seed] >= 0) continue;
        const std::int32_t id = static_cast<std::int32_t>(least.size());
        std::size_t orbit_min = seed;
        cls[seed] = id;
        stack.assign(1, seed);
        while (!stack.empty()) {
            std::size_t cur = stack.back();
            stack.pop_back();
            auto t = ni.tuple(cur);
            for (const auto& m : maps) {
                for (int k = 0; k < r; ++k) image[k] = m[t[k]];
                auto found = ni.find(image);
                if (!found)
                    throw internal_error("conjugate tuple missing from the Nielsen class");
                if (cls[*found] < 0) {
                    cls[*found] = id;
                    orbit_min = std::min(orbit_min, *found);
                    stack.push_back(*found);
                }
            }
        }
        least.push_back(orbit_min);
    }

    std::vector<std::int32_t> by_least(least.size());
    std::iota(by_least.begin(), by_least.end(), 0);
    std::sort(by_least.begin(), by_least.end(),
              [&](std::int32_t a, std::int32_t b) { return least[a] < least[b]; });
    std::vector<std::int32_t> renumber(least.size());
    for (std::size_t i = 0; i < by_least.size(); ++i)
        renumber[by_least[i]] = static_cast<std::int32_t>(i);

    OrbitPartition part;
    part.count = static_cast<int>(least.size());
    part.class_of.resize(n);
    for (std::size_t i = 0; i < n; ++i) part.class_of[i] = renumber[cls[i]];
    part.canonical.resize(least.size());
    for (std::size_t old = 0; old < least.size(); ++old)
        part.canonical[renumber[old]] = least[old];
    return part;
}

}  // namespace

EquivalenceTable EquivalenceTable::build_inner(const NielsenClass& ni,
                                               std::uint64_t shuffle_seed) {
    OrbitPartition part = conjugation_orbits(ni, ni.data().group.generators, shuffle_seed);
    EquivalenceTable table;
    table.mode_ = Equivalence::inner;
    table.count_ = part.count;
    table.class_of_tuple_ = std::move(part.class_of);
    table.canonical_ = std::move(part.canonical);
    return table;
}

EquivalenceTable EquivalenceTable::build_absolute(const NielsenClass& ni,
                                                  const FiniteGroup& normalizer,
                                                  std::uint64_t shuffle_seed) {
    const GroupData& gd = ni.data();
    if (normalizer.degree != gd.group.degree)
        throw input_error("normalizer degree does not match the group");
    // The entry classes must be permuted among themselves with multiplicity;
    // generator checks suffice since the property is closed under products.
    std::vector<int> want = ni.class_vector().entries;
    for (const auto& h : normalizer.generators) {
        std::vector<int> image;
        for (int c : want) {
            Permutation conj_rep = conjugate(gd.classes[c].representative, h);
            if (!gd.group.contains(conj_rep))
                throw input_error("normalizer does not normalize the group");
            image.push_back(gd.class_of[gd.ops->id_of(conj_rep)]);
        }
        std::sort(image.begin(), image.end());
        if (image != want)
            throw input_error("normalizer does not preserve the class vector");
    }
    // Conjugate by the group's own generators as well, so the orbits come out
    // right even if the supplied normalizer misses inner elements.
    std::vector<Permutation> conjugators = normalizer.generators;
    conjugators.insert(conjugators.end(), gd.group.generators.begin(),
                       gd.group.generators.end());
    OrbitPartition part = conjugation_orbits(ni, conjugators, shuffle_seed);
    EquivalenceTable table;
    table.mode_ = Equivalence::absolute;
    table.count_ = part.count;
    table.class_of_tuple_ = std::move(part.class_of);
    table.canonical_ = std::move(part.canonical);
    return table;
}

ReducedTable ReducedTable::build(const NielsenClass& ni,
                                 const EquivalenceTable& eq,
                                 std::uint64_t shuffle_seed) {
    if (ni.r() != 4)
        throw input_error("reduction is defined for r = 4 only");
    const GroupOps& ops = *ni.data().ops;

    ReducedTable table;
    const int n = eq.count();
    table.q1q3inv_.resize(n);
    table.sh2_.resize(n);
    static constexpr int kQ1Q3Inv[] = {1, -3};
    static constexpr int kShSh[] = {SH, SH};
    std::vector<std::uint32_t> t(4);
    auto class_after = [&](int c, std::span<const int> word) {
        auto src = ni.tuple(eq.canonical(c));
        std::copy(src.begin(), src.end(), t.begin());
        apply_word(ops, t, word);
        auto found = ni.find(t);
        if (!found)
            throw internal_error("reduction image missing from the Nielsen class");
        return eq.class_of(*found);
    };
    for (int c = 0; c < n; ++c) {
        table.q1q3inv_[c] = class_after(c, kQ1Q3Inv);
        table.sh2_[c] = class_after(c, kShSh);
    }

    std::vector<std::int32_t> red(n, -1);
    std::vector<int> least;
    std::vector<int> stack;
    for (std::size_t seed : seed_order(static_cast<std::size_t>(n), shuffle_seed)) {
        int c = static_cast<int>(seed);
        if (red[c] >= 0) continue;
        const std::int32_t id = static_cast<std::int32_t>(least.size());
        int orbit_min = c;
        red[c] = id;
        stack.assign(1, c);
        while (!stack.empty()) {
            int cur = stack.back();
            stack.pop_back();
            for (int next : {table.q1q3inv_[cur], table.sh2_[cur]}) {
                if (red[next] < 0) {
                    red[next] = id;
                    orbit_min = std::min(orbit_min, next);
                    stack.push_back(next);
                }
            }
        }
        least.push_back(orbit_min);
    }

    std::vector<std::int32_t> by_least(least.size());
    std::iota(by_least.begin(), by_least.end(), 0);
    std::sort(by_least.begin(), by_least.end(),
              [&](std::int32_t a, std::int32_t b) { return least[a] < least[b]; });
    std::vector<std::int32_t> renumber(least.size());
    for (std::size_t i = 0; i < by_least.size(); ++i) renumber[by_least[i]] = static_cast<std::int32_t>(i);

    table.count_ = static_cast<int>(least.size());
    table.red_of_class_.resize(n);
    table.members_.assign(least.size(), {});
    for (int c = 0; c < n; ++c) {
        std::int32_t nid = renumber[red[c]];
        table.red_of_class_[c] = nid;
        table.members_[nid].push_back(c);  // ascending: c runs upward
    }
    table.canonical_class_.resize(least.size());
    for (std::size_t old = 0; old < least.size(); ++old)
        table.canonical_class_[renumber[old]] = least[old];
    return table;
}

}  // namespace hurwitz
