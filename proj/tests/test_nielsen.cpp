// Nielsen class enumeration and the equivalence/reduction tables, checked
// against a from-the-definition enumeration and naive orbit partitions.
// The two worked cases sized for exhaustive cross-checking:
//   dihedral degree 5, four involution classes: 120 tuples, 12 inner classes;
//   alternating degree 4, classes (+3, +3, -3, -3): 360 tuples, 30 inner.

#include <algorithm>
#include <set>

#include "doctest.h"
#include "hurwitz/braid.hpp"
#include "hurwitz/catalog.hpp"
#include "hurwitz/errors.hpp"
#include "hurwitz/nielsen.hpp"
#include "oracles.hpp"

using namespace hurwitz;

namespace {

NielsenClass enumerate(const FiniteGroup& G, const std::vector<std::string>& labels,
                       std::uint64_t budget = 10000000) {
    auto gd = GroupData::make(G);
    return NielsenClass::enumerate(gd, resolve_class_vector(*gd, labels), budget);
}

std::set<std::vector<Permutation>> materialize_all(const NielsenClass& ni) {
    std::set<std::vector<Permutation>> out;
    for (std::size_t i = 0; i < ni.count(); ++i) out.insert(ni.materialize(i));
    return out;
}

std::set<Permutation> class_members(const GroupData& gd, int cls) {
    return {gd.classes[cls].members.begin(), gd.classes[cls].members.end()};
}

}  // namespace

TEST_SUITE_BEGIN("nielsen");

TEST_CASE("resolve_class_vector") {
    auto gd = GroupData::make(catalog::alternating(4));
    auto cv = resolve_class_vector(*gd, {"-3", "+3", "-3", "+3"});
    CHECK(cv.r() == 4);
    CHECK(std::is_sorted(cv.entries.begin(), cv.entries.end()));
    CHECK(cv.n_c == 3);
    CHECK(class_vector_labels(*gd, cv) ==
          std::vector<std::string>{"+3", "+3", "-3", "-3"});

    // A bare order resolves to the first class of that order.
    auto bare = resolve_class_vector(*gd, {"3"});
    CHECK(bare.entries == std::vector<int>{gd->class_index_of_label("+3")});

    auto mixed = resolve_class_vector(*gd, {"2", "+3"});
    CHECK(mixed.n_c == 6);

    CHECK_THROWS_AS(resolve_class_vector(*gd, {"7"}), input_error);
    CHECK_THROWS_AS(resolve_class_vector(*gd, {"+5"}), input_error);
    CHECK_THROWS_AS(resolve_class_vector(*gd, {}), input_error);

    CHECK(class_vector_generates(*gd, cv));
    auto just2 = resolve_class_vector(*gd, {"2", "2"});
    CHECK_FALSE(class_vector_generates(*gd, just2));  // closes to order 4
}

TEST_CASE("dihedral involution tuples match the naive enumeration") {
    auto G = catalog::dihedral(5);
    auto ni = enumerate(G, {"2", "2", "2", "2"});
    CHECK(ni.count() == 120);

    auto gd = ni.data_ptr();
    std::set<Permutation> refl = class_members(*gd, ni.class_vector().entries[0]);
    auto naive = oracle::naive_nielsen(
        {G.elements.begin(), G.elements.end()}, {refl, refl, refl, refl});
    CHECK(naive.size() == 120);
    CHECK(materialize_all(ni) == naive);
}

TEST_CASE("alternating degree-4 tuples match the naive enumeration") {
    auto G = catalog::alternating(4);
    auto ni = enumerate(G, {"+3", "+3", "-3", "-3"});
    CHECK(ni.count() == 360);

    auto gd = ni.data_ptr();
    auto plus = class_members(*gd, gd->class_index_of_label("+3"));
    auto minus = class_members(*gd, gd->class_index_of_label("-3"));
    auto naive = oracle::naive_nielsen({G.elements.begin(), G.elements.end()},
                                       {plus, plus, minus, minus});
    CHECK(naive.size() == 360);
    CHECK(materialize_all(ni) == naive);
}

TEST_CASE("tuple storage is sorted and searchable") {
    auto ni = enumerate(catalog::alternating(4), {"+3", "+3", "-3", "-3"});
    const auto& ops = *ni.data().ops;
    for (std::size_t i = 0; i + 1 < ni.count(); ++i) {
        auto a = ni.tuple(i), b = ni.tuple(i + 1);
        CHECK(std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end()));
    }
    for (std::size_t i = 0; i < ni.count(); i += 17) {
        auto t = ni.tuple(i);
        CHECK(ni.find(t) == i);
        // Product one, entrywise.
        auto mat = ni.materialize(i);
        CHECK(oracle::tuple_product(mat).is_identity());
        std::vector<std::uint32_t> gens(t.begin(), t.end());
        CHECK(generates_group(ops, gens));
    }
    std::vector<std::uint32_t> absent = {0, 0, 0, 0};
    CHECK_FALSE(ni.find(absent).has_value());
}

TEST_CASE("enumeration corner cases") {
    // Trivial group, r = 1: the identity tuple is the only member.
    auto trivial = enumerate(catalog::group_by_name("perm:(1)"), {"1"});
    CHECK(trivial.count() == 1);
    CHECK(trivial.materialize(0)[0].is_identity());

    // Class union generates but no tuple survives the subgroup filter.
    auto pairs = enumerate(catalog::symmetric(4), {"2.1", "2.1"});
    CHECK(pairs.count() == 0);

    // Class union does not generate at all.
    CHECK_THROWS_AS(enumerate(catalog::symmetric(4), {"2.2", "2.2", "2.2", "2.2"}),
                    input_error);

    // Budget: the pool of order-3 elements in the degree-5 alternating group
    // has 20 members, so r = 4 needs 20^3 candidate prefixes.
    CHECK_THROWS_AS(enumerate(catalog::alternating(5), {"3", "3", "3", "3"}, 100),
                    budget_error);
}

TEST_CASE("inner equivalence classes match naive conjugation orbits") {
    auto ni = enumerate(catalog::dihedral(5), {"2", "2", "2", "2"});
    auto eq = EquivalenceTable::build_inner(ni);
    CHECK(eq.mode() == Equivalence::inner);
    CHECK(eq.count() == 12);

    std::vector<std::vector<Permutation>> items;
    for (std::size_t i = 0; i < ni.count(); ++i) items.push_back(ni.materialize(i));
    std::vector<std::function<std::vector<Permutation>(const std::vector<Permutation>&)>>
        moves;
    for (const auto& h : catalog::dihedral(5).elements)
        moves.push_back([h](const std::vector<Permutation>& t) {
            std::vector<Permutation> out;
            for (const auto& g : t) out.push_back(conjugate(g, h));
            return out;
        });
    auto naive = oracle::naive_orbits(items, moves);
    CHECK(naive.size() == 12);

    std::set<std::set<std::vector<Permutation>>> got;
    std::vector<std::set<std::vector<Permutation>>> buckets(eq.count());
    for (std::size_t i = 0; i < ni.count(); ++i)
        buckets[eq.class_of(i)].insert(items[i]);
    for (auto& b : buckets) got.insert(std::move(b));
    CHECK(got == naive);
}

TEST_CASE("canonical representatives are class minima") {
    auto ni = enumerate(catalog::alternating(4), {"+3", "+3", "-3", "-3"});
    auto eq = EquivalenceTable::build_inner(ni);
    CHECK(eq.count() == 30);
    std::vector<std::size_t> least(eq.count(), SIZE_MAX);
    for (std::size_t i = 0; i < ni.count(); ++i)
        least[eq.class_of(i)] = std::min(least[eq.class_of(i)], i);
    for (int c = 0; c < eq.count(); ++c) CHECK(eq.canonical(c) == least[c]);
    // Class ids increase with their canonical tuples.
    for (int c = 0; c + 1 < eq.count(); ++c) CHECK(eq.canonical(c) < eq.canonical(c + 1));
}

TEST_CASE("equivalence tables ignore the visitation shuffle") {
    auto ni = enumerate(catalog::alternating(4), {"+3", "+3", "-3", "-3"});
    auto a = EquivalenceTable::build_inner(ni, 0);
    auto b = EquivalenceTable::build_inner(ni, 987654321);
    REQUIRE(a.count() == b.count());
    for (std::size_t i = 0; i < ni.count(); ++i) CHECK(a.class_of(i) == b.class_of(i));
}

TEST_CASE("absolute classes: dihedral tuples under the affine normalizer") {
    auto G = catalog::dihedral(5);
    auto ni = enumerate(G, {"2", "2", "2", "2"});
    auto eq = EquivalenceTable::build_absolute(ni, catalog::dihedral_affine_normalizer(5));
    CHECK(eq.mode() == Equivalence::absolute);
    CHECK(eq.count() == 6);

    // Conjugating by the group itself reproduces the inner classes.
    auto self = EquivalenceTable::build_absolute(ni, G);
    CHECK(self.count() == 12);

    // A "normalizer" that moves the class vector is rejected.
    auto s5 = catalog::symmetric(5);
    CHECK_THROWS_AS(EquivalenceTable::build_absolute(ni, s5), input_error);
}

TEST_CASE("reduction at r = 4") {
    auto ni = enumerate(catalog::alternating(4), {"+3", "+3", "-3", "-3"});
    auto eq = EquivalenceTable::build_inner(ni);
    auto red = ReducedTable::build(ni, eq);
    CHECK(red.count() == 15);

    int member_total = 0;
    for (int c = 0; c < red.count(); ++c) {
        const auto& mem = red.members(c);
        CHECK(std::is_sorted(mem.begin(), mem.end()));
        CHECK(red.canonical_class(c) == mem.front());
        for (int m : mem) CHECK(red.reduced_of(m) == c);
        member_total += static_cast<int>(mem.size());
    }
    CHECK(member_total == eq.count());

    // The generators of the reduction group act as inverse-closed maps.
    for (int c = 0; c < eq.count(); ++c) {
        CHECK(red.q1q3inv_of(red.q1q3inv_of(c)) == c);  // involution on classes here
        CHECK(red.reduced_of(red.sh2_of(c)) == red.reduced_of(c));
        CHECK(red.reduced_of(red.q1q3inv_of(c)) == red.reduced_of(c));
    }
}

TEST_CASE("reduction is trivial on the dihedral involution classes") {
    auto ni = enumerate(catalog::dihedral(5), {"2", "2", "2", "2"});
    auto eq = EquivalenceTable::build_inner(ni);
    auto red = ReducedTable::build(ni, eq);
    CHECK(red.count() == 12);
    for (int c = 0; c < eq.count(); ++c) {
        CHECK(red.q1q3inv_of(c) == c);
        CHECK(red.sh2_of(c) == c);
    }
}

TEST_CASE("reduction requires r = 4") {
    auto ni = enumerate(catalog::alternating(4), {"+3", "+3", "+3"});
    auto eq = EquivalenceTable::build_inner(ni);
    CHECK_THROWS_AS(ReducedTable::build(ni, eq), input_error);
}

TEST_SUITE_END();
