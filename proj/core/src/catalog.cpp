#include "hurwitz/catalog.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "hurwitz/errors.hpp"

namespace hurwitz::catalog {

namespace {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

long long mod_pow(long long b, long long e, long long m) {
    long long r = 1 % m;
    b %= m;
    for (; e > 0; e >>= 1) {
        if (e & 1) r = r * b % m;
        b = b * b % m;
    }
    return r;
}

// Inverse of a mod prime l.
int inv_mod(int a, int l) {
    a %= l;
    if (a < 0) a += l;
    if (a == 0) throw internal_error("inv_mod: zero");
    return static_cast<int>(mod_pow(a, l - 2, l));
}

Permutation cycle(std::initializer_list<int> letters, int degree) {
    std::vector<Letter> images(degree);
    std::iota(images.begin(), images.end(), Letter{0});
    auto it = letters.begin();
    for (std::size_t j = 0; j + 1 < letters.size(); ++j)
        images[*(it + j) - 1] = static_cast<Letter>(*(it + j + 1) - 1);
    if (letters.size() > 1)
        images[*(it + letters.size() - 1) - 1] = static_cast<Letter>(*it - 1);
    return Permutation::from_images(std::move(images));
}

Permutation full_cycle(int from, int to, int degree) {
    std::vector<Letter> images(degree);
    std::iota(images.begin(), images.end(), Letter{0});
    for (int v = from; v < to; ++v)
        images[v - 1] = static_cast<Letter>(v);  // v -> v+1 in 1-based letters
    images[to - 1] = static_cast<Letter>(from - 1);
    return Permutation::from_images(std::move(images));
}

void check_order(const FiniteGroup& G, long long want, const char* who) {
    if (G.order() != want)
        throw internal_error(std::string(who) + ": unexpected group order");
}

// Exhaustive checks every cover must pass: projection is a homomorphism,
// the kernel is exactly the cyclic group on kernel_generator, prime order,
// and central.
void validate_cover(const CentralCover& cover) {
    const GroupOps tot(cover.total);
    const GroupOps bas(cover.base);
    const auto& proj = cover.projection;
    if (proj.size() != cover.total.elements.size())
        throw internal_error("cover: projection table size mismatch");
    if (static_cast<long long>(cover.total.order()) !=
        static_cast<long long>(cover.kernel_order) * cover.base.order())
        throw internal_error("cover: order mismatch");
    if (!is_prime(cover.kernel_order))
        throw internal_error("cover: kernel order not prime");

    for (std::uint32_t a = 0; a < tot.size(); ++a)
        for (std::uint32_t b = 0; b < tot.size(); ++b)
            if (proj[tot.mul(a, b)] != bas.mul(proj[a], proj[b]))
                throw internal_error("cover: projection is not a homomorphism");

    std::vector<char> hit(bas.size(), 0);
    for (std::uint32_t a = 0; a < tot.size(); ++a) hit[proj[a]] = 1;
    if (std::count(hit.begin(), hit.end(), 1) != static_cast<long long>(bas.size()))
        throw internal_error("cover: projection not surjective");

    std::uint32_t z = tot.id_of(cover.kernel_generator);
    std::set<std::uint32_t> kernel_gen;
    std::uint32_t cur = tot.identity();
    do {
        kernel_gen.insert(cur);
        cur = tot.mul(cur, z);
    } while (cur != tot.identity());
    if (kernel_gen.size() != static_cast<std::size_t>(cover.kernel_order))
        throw internal_error("cover: kernel generator has wrong order");
    std::set<std::uint32_t> kernel_actual;
    for (std::uint32_t a = 0; a < tot.size(); ++a)
        if (proj[a] == bas.identity()) kernel_actual.insert(a);
    if (kernel_actual != kernel_gen)
        throw internal_error("cover: kernel is not the cyclic group on the generator");
    for (std::uint32_t a = 0; a < tot.size(); ++a)
        if (tot.mul(a, z) != tot.mul(z, a))
            throw internal_error("cover: kernel not central");
}

// Builds base + projection from a block map on the total group's letters:
// blocks[letter] names the base letter it belongs to.  The induced action of
// each total element on blocks must be a well-defined permutation.
void project_by_blocks(CentralCover& cover, const std::vector<int>& blocks, int block_count,
                       const char* who) {
    std::vector<int> rep(block_count, -1);  // one letter per block
    for (int v = static_cast<int>(blocks.size()) - 1; v >= 0; --v)
        rep[blocks[v]] = v;

    std::map<Permutation, std::vector<std::uint32_t>> base_elems;  // perm -> total ids
    for (std::uint32_t a = 0; a < cover.total.elements.size(); ++a) {
        const Permutation& h = cover.total.elements[a];
        std::vector<Letter> images(block_count);
        for (int b = 0; b < block_count; ++b)
            images[b] = static_cast<Letter>(blocks[h(static_cast<Letter>(rep[b]))]);
        base_elems[Permutation::from_images(std::move(images))].push_back(a);
    }

    cover.base.degree = block_count;
    cover.base.elements.clear();
    cover.projection.assign(cover.total.elements.size(), 0);
    std::uint32_t id = 0;
    for (const auto& [perm, ids] : base_elems) {
        cover.base.elements.push_back(perm);
        for (std::uint32_t a : ids) cover.projection[a] = id;
        ++id;
    }
    // Project the total group's generators to generate the base.
    for (const auto& g : cover.total.generators) {
        std::vector<Letter> images(block_count);
        for (int b = 0; b < block_count; ++b)
            images[b] = static_cast<Letter>(blocks[g(static_cast<Letter>(rep[b]))]);
        Permutation p = Permutation::from_images(std::move(images));
        if (!p.is_identity()) cover.base.generators.push_back(p);
    }
    if (cover.base.generators.empty())
        throw internal_error(std::string(who) + ": trivial base");
}

}  // namespace

FiniteGroup alternating(int n) {
    if (n < 3 || n > 8)
        throw input_error("alternating: n must be in 3..8");
    std::vector<Permutation> gens{cycle({1, 2, 3}, n)};
    if (n > 3)
        gens.push_back(n % 2 == 1 ? full_cycle(1, n, n) : full_cycle(2, n, n));
    long long half = 1;
    for (int i = 2; i <= n; ++i) half *= i;
    FiniteGroup G = group_closure(std::move(gens), static_cast<std::size_t>(half),
                                  "A" + std::to_string(n));
    check_order(G, half / 2, "alternating");
    return G;
}

FiniteGroup symmetric(int n) {
    if (n < 3 || n > 8)
        throw input_error("symmetric: n must be in 3..8");
    std::vector<Permutation> gens{cycle({1, 2}, n), full_cycle(1, n, n)};
    long long fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    FiniteGroup G = group_closure(std::move(gens), static_cast<std::size_t>(fact),
                                  "S" + std::to_string(n));
    check_order(G, fact, "symmetric");
    return G;
}

FiniteGroup dihedral(int m) {
    if (m < 3 || m % 2 == 0)
        throw input_error("dihedral: m must be odd and at least 3");
    std::vector<Letter> rot(m), refl(m);
    for (int i = 0; i < m; ++i) {
        rot[i] = static_cast<Letter>((i + 1) % m);
        refl[i] = static_cast<Letter>((m - i) % m);
    }
    FiniteGroup G = group_closure({Permutation::from_images(std::move(rot)),
                                   Permutation::from_images(std::move(refl))},
                                  static_cast<std::size_t>(2 * m) + 1,
                                  "D" + std::to_string(m));
    check_order(G, 2 * m, "dihedral");
    return G;
}

namespace {

// The order-3 matrix A = [[0,-1],[1,-1]]: (x,y) -> (-y, x-y) mod l.
std::pair<int, int> apply_A(int x, int y, int l, int times) {
    for (int t = 0; t < times; ++t) {
        int nx = (l - y) % l;
        int ny = ((x - y) % l + l) % l;
        x = nx;
        y = ny;
    }
    return {x, y};
}

}  // namespace

FiniteGroup metacyclic_l2_3(int ell) {
    if (!is_prime(ell) || ell == 3)
        throw input_error("metacyclic_l2_3: l must be prime and not 3");
    const int n = ell * ell;
    auto pt = [&](int x, int y) { return x * ell + y; };

    std::vector<Letter> tx(n), ty(n), w(n);
    for (int x = 0; x < ell; ++x)
        for (int y = 0; y < ell; ++y) {
            tx[pt(x, y)] = static_cast<Letter>(pt((x + 1) % ell, y));
            ty[pt(x, y)] = static_cast<Letter>(pt(x, (y + 1) % ell));
            auto [ax, ay] = apply_A(x, y, ell, 2);  // A^-1 = A^2
            w[pt(x, y)] = static_cast<Letter>(pt(ax, ay));
        }
    FiniteGroup G = group_closure({Permutation::from_images(std::move(tx)),
                                   Permutation::from_images(std::move(ty)),
                                   Permutation::from_images(std::move(w))},
                                  static_cast<std::size_t>(3 * n) + 1,
                                  "M" + std::to_string(ell));
    check_order(G, 3LL * n, "metacyclic_l2_3");
    return G;
}

FiniteGroup dihedral_affine_normalizer(int m) {
    if (m < 3 || m % 2 == 0)
        throw input_error("dihedral_affine_normalizer: m must be odd");
    // phi(m) and a generator of the units mod m; m is expected to be an odd
    // prime power, where the unit group is cyclic.
    int phi = 0;
    for (int a = 1; a < m; ++a)
        if (std::gcd(a, m) == 1) ++phi;
    int u = -1;
    for (int a = 2; a < m && u < 0; ++a) {
        if (std::gcd(a, m) != 1) continue;
        int ord = 1;
        long long v = a % m;
        while (v != 1) {
            v = v * a % m;
            ++ord;
        }
        if (ord == phi) u = a;
    }
    if (u < 0)
        throw input_error("dihedral_affine_normalizer: unit group not cyclic");

    std::vector<Letter> shift(m), scale(m);
    for (int i = 0; i < m; ++i) {
        shift[i] = static_cast<Letter>((i + 1) % m);
        scale[i] = static_cast<Letter>(static_cast<int>(static_cast<long long>(u) * i % m));
    }
    FiniteGroup N = group_closure({Permutation::from_images(std::move(shift)),
                                   Permutation::from_images(std::move(scale))},
                                  static_cast<std::size_t>(m) * phi + 1,
                                  "Aff" + std::to_string(m));
    check_order(N, static_cast<long long>(m) * phi, "dihedral_affine_normalizer");
    return N;
}

namespace {

// SL(2, q) acting on the nonzero vectors of F_q^2, vectors ordered
// lexicographically.
struct VecAction {
    int q = 0;
    std::vector<int> letter_of;           // x*q+y -> letter or -1
    std::vector<std::pair<int, int>> vec; // letter -> (x, y)

    explicit VecAction(int q_) : q(q_), letter_of(q_ * q_, -1) {
        for (int x = 0; x < q; ++x)
            for (int y = 0; y < q; ++y) {
                if (x == 0 && y == 0) continue;
                letter_of[x * q + y] = static_cast<int>(vec.size());
                vec.emplace_back(x, y);
            }
    }

    Permutation matrix_perm(int a, int b, int c, int d) const {
        std::vector<Letter> images(vec.size());
        for (std::size_t v = 0; v < vec.size(); ++v) {
            auto [x, y] = vec[v];
            int nx = ((a * x + b * y) % q + q) % q;
            int ny = ((c * x + d * y) % q + q) % q;
            images[v] = static_cast<Letter>(letter_of[nx * q + ny]);
        }
        return Permutation::from_images(std::move(images));
    }

    // Line through the origin containing each vector, numbered by the
    // lexicographically least vector on it.
    std::vector<int> line_blocks(int* line_count) const {
        std::vector<int> block(vec.size(), -1);
        int next = 0;
        for (std::size_t v = 0; v < vec.size(); ++v) {
            if (block[v] >= 0) continue;
            auto [x, y] = vec[v];
            for (int s = 1; s < q; ++s)
                block[letter_of[(s * x % q) * q + (s * y % q)]] = next;
            ++next;
        }
        *line_count = next;
        return block;
    }
};

CentralCover spin_cover(int q, const char* name) {
    VecAction act(q);
    FiniteGroup total = group_closure({act.matrix_perm(0, q - 1, 1, 0),
                                       act.matrix_perm(1, 1, 0, 1)},
                                      2000, std::string(name) + "_total");
    long long order = static_cast<long long>(q) * (q * q - 1);  // |SL(2,q)|
    check_order(total, order, "spin_cover");

    CentralCover cover;
    cover.name = name;
    cover.total = std::move(total);
    cover.kernel_order = 2;
    cover.kernel_generator = act.matrix_perm(q - 1, 0, 0, q - 1);  // v -> -v
    return cover;
}

}  // namespace

CentralCover spin_cover_a4() {
    CentralCover cover = spin_cover(3, "spinA4");
    int lines = 0;
    std::vector<int> blocks = VecAction(3).line_blocks(&lines);
    project_by_blocks(cover, blocks, lines, "spin_cover_a4");
    cover.base.name = "A4";
    check_order(cover.base, 12, "spin_cover_a4");
    if (cover.base.elements != alternating(4).elements)
        throw internal_error("spin_cover_a4: base is not the alternating group");
    validate_cover(cover);
    return cover;
}

CentralCover spin_cover_a5() {
    CentralCover cover = spin_cover(5, "spinA5");
    const auto& elems = cover.total.elements;
    const std::size_t n = elems.size();

    // An order-24 subgroup (they all contain the unique involution -1, so
    // the coset action has kernel exactly the center).  First generating
    // pair in element order wins; the subgroup search is tiny.
    std::vector<Permutation> U;
    for (std::size_t i = 0; i < n && U.empty(); ++i)
        for (std::size_t j = i + 1; j < n && U.empty(); ++j) {
            try {
                FiniteGroup H = group_closure({elems[i], elems[j]}, 24);
                if (H.order() == 24) U = H.elements;
            } catch (const budget_error&) {
            }
        }
    if (U.empty())
        throw internal_error("spin_cover_a5: no order-24 subgroup found");

    // Right cosets U*x, each named by its least member, sorted.
    std::map<Permutation, int> coset_of_elem;  // least member of U*x per element
    std::map<Permutation, int> coset_ids;
    for (const auto& x : elems) {
        if (coset_of_elem.count(x)) continue;
        std::vector<Permutation> coset;
        for (const auto& u : U) coset.push_back(compose(u, x));
        Permutation least = *std::min_element(coset.begin(), coset.end());
        coset_ids.emplace(least, 0);
        for (auto& c : coset) coset_of_elem.emplace(std::move(c), 0);
    }
    {
        int id = 0;
        for (auto& [least, cid] : coset_ids) cid = id++;
        for (auto& [e, cid] : coset_of_elem) cid = -1;
        for (const auto& x : elems) {
            std::vector<Permutation> coset;
            for (const auto& u : U) coset.push_back(compose(u, x));
            int cid = coset_ids.at(*std::min_element(coset.begin(), coset.end()));
            for (auto& c : coset) coset_of_elem[c] = cid;
        }
    }

    // blocks on "letters": here the letters are the 120 elements themselves
    // via the regular action?  Simpler: build base perms directly from the
    // coset action x -> coset_of(rep_i * x).
    std::vector<Permutation> coset_reps(coset_ids.size(), Permutation());
    for (const auto& [least, cid] : coset_ids) coset_reps[cid] = least;

    std::map<Permutation, std::vector<std::uint32_t>> base_elems;
    for (std::size_t a = 0; a < n; ++a) {
        std::vector<Letter> images(coset_ids.size());
        for (std::size_t c = 0; c < coset_reps.size(); ++c)
            images[c] = static_cast<Letter>(coset_of_elem.at(compose(coset_reps[c], elems[a])));
        base_elems[Permutation::from_images(std::move(images))].push_back(
            static_cast<std::uint32_t>(a));
    }

    cover.base.degree = static_cast<int>(coset_ids.size());
    cover.projection.assign(n, 0);
    std::uint32_t id = 0;
    for (const auto& [perm, ids] : base_elems) {
        cover.base.elements.push_back(perm);
        for (std::uint32_t a : ids) cover.projection[a] = id;
        ++id;
    }
    for (const auto& g : cover.total.generators) {
        auto it = std::lower_bound(elems.begin(), elems.end(), g);
        cover.base.generators.push_back(cover.base.elements[cover.projection[it - elems.begin()]]);
    }
    cover.base.name = "A5";
    check_order(cover.base, 60, "spin_cover_a5");
    if (cover.base.elements != alternating(5).elements)
        throw internal_error("spin_cover_a5: base is not the alternating group");
    validate_cover(cover);
    return cover;
}

CentralCover heisenberg_cover(int ell) {
    if (!is_prime(ell) || ell <= 3)
        throw input_error("heisenberg_cover: l must be a prime above 3");
    const int l = ell;
    const int n = l * l * l;
    auto pt = [&](int x, int y, int z) { return (x * l + y) * l + z; };

    // The Z/3 twist sends (v, z) to (A v, z + beta(v)); beta is the quadratic
    // form forced by the automorphism condition
    //   beta(v + v') - beta(v) - beta(v') = (Av)_x (Av')_y - x_v y_v'.
    // Solve for its three coefficients by polarization, then verify.
    auto rhs = [&](int x1, int y1, int x2, int y2) {
        auto [ax1, ay1] = apply_A(x1, y1, l, 1);
        auto [ax2, ay2] = apply_A(x2, y2, l, 1);
        return ((ax1 * ay2 - x1 * y2) % l + l) % l;
    };
    const int inv2 = inv_mod(2, l);
    const int ca = static_cast<int>(static_cast<long long>(rhs(1, 0, 1, 0)) * inv2 % l);
    const int cc = static_cast<int>(static_cast<long long>(rhs(0, 1, 0, 1)) * inv2 % l);
    const int cb = rhs(1, 0, 0, 1);
    auto beta = [&](int x, int y) {
        long long v = static_cast<long long>(ca) * x % l * x % l +
                      static_cast<long long>(cb) * x % l * y % l +
                      static_cast<long long>(cc) * y % l * y % l;
        return static_cast<int>(v % l);
    };
    for (int x1 = 0; x1 < l; ++x1)
        for (int y1 = 0; y1 < l; ++y1)
            for (int x2 = 0; x2 < l; ++x2)
                for (int y2 = 0; y2 < l; ++y2) {
                    int lhs = ((beta((x1 + x2) % l, (y1 + y2) % l) - beta(x1, y1) -
                                beta(x2, y2)) % l + l) % l;
                    if (lhs != rhs(x1, y1, x2, y2))
                        throw internal_error("heisenberg_cover: twist correction is wrong");
                }
    auto tau = [&](int x, int y, int z) {
        auto [ax, ay] = apply_A(x, y, l, 1);
        return std::tuple<int, int, int>(ax, ay, (z + beta(x, y)) % l);
    };
    for (int x = 0; x < l; ++x)
        for (int y = 0; y < l; ++y) {
            auto [x1, y1, z1] = tau(x, y, 0);
            auto [x2, y2, z2] = tau(x1, y1, z1);
            auto [x3, y3, z3] = tau(x2, y2, z2);
            if (x3 != x || y3 != y || z3 != 0)
                throw internal_error("heisenberg_cover: twist does not have order 3");
        }

    // Right translations p -> p*m with (x,y,z)(x',y',z') = (x+x', y+y',
    // z+z'+x*y'), and the inverse twist.
    std::vector<Letter> tx(n), ty(n), tz(n), w(n);
    for (int x = 0; x < l; ++x)
        for (int y = 0; y < l; ++y)
            for (int z = 0; z < l; ++z) {
                int p = pt(x, y, z);
                tx[p] = static_cast<Letter>(pt((x + 1) % l, y, z));
                ty[p] = static_cast<Letter>(pt(x, (y + 1) % l, (z + x) % l));
                tz[p] = static_cast<Letter>(pt(x, y, (z + 1) % l));
                auto [x1, y1, z1] = tau(x, y, z);
                auto [x2, y2, z2] = tau(x1, y1, z1);  // tau^-1 = tau^2
                w[p] = static_cast<Letter>(pt(x2, y2, z2));
            }

    CentralCover cover;
    cover.name = "heis" + std::to_string(l);
    cover.kernel_order = l;
    cover.kernel_generator = Permutation::from_images(std::move(tz));
    cover.total = group_closure({Permutation::from_images(std::move(tx)),
                                 Permutation::from_images(std::move(ty)),
                                 Permutation::from_images(std::move(w))},
                                static_cast<std::size_t>(3) * n + 1, cover.name + "_total");
    check_order(cover.total, 3LL * n, "heisenberg_cover");

    // Blocks: forget the center coordinate.
    std::vector<int> blocks(n);
    for (int x = 0; x < l; ++x)
        for (int y = 0; y < l; ++y)
            for (int z = 0; z < l; ++z) blocks[pt(x, y, z)] = x * l + y;
    project_by_blocks(cover, blocks, l * l, "heisenberg_cover");
    cover.base.name = "M" + std::to_string(l);
    if (cover.base.elements != metacyclic_l2_3(l).elements)
        throw internal_error("heisenberg_cover: base is not the metacyclic group");
    validate_cover(cover);
    return cover;
}

const Permutation& CentralCover::project(const Permutation& h) const {
    auto it = std::lower_bound(total.elements.begin(), total.elements.end(), h);
    if (it == total.elements.end() || *it != h)
        throw input_error("CentralCover::project: element not in the cover group");
    return base.elements[projection[it - total.elements.begin()]];
}

FiniteGroup group_by_name(std::string_view name, std::size_t element_cap) {
    // A<n>, S<n>, D<m>, M<l> with a numeric tail.
    if (name.size() >= 2 && (name[0] == 'A' || name[0] == 'S' || name[0] == 'D' || name[0] == 'M')) {
        bool numeric = true;
        for (char c : name.substr(1))
            if (c < '0' || c > '9') numeric = false;
        if (numeric) {
            int v = std::stoi(std::string(name.substr(1)));
            switch (name[0]) {
                case 'A': return alternating(v);
                case 'S': return symmetric(v);
                case 'D': return dihedral(v);
                default: return metacyclic_l2_3(v);
            }
        }
    }
    if (name.starts_with("perm:")) {
        std::string_view rest = name.substr(5);
        std::vector<std::string> parts;
        while (!rest.empty()) {
            auto semi = rest.find(';');
            parts.emplace_back(rest.substr(0, semi));
            rest = semi == std::string_view::npos ? std::string_view{} : rest.substr(semi + 1);
        }
        if (parts.empty())
            throw input_error("perm: group needs at least one generator");
        int degree = 0;
        std::vector<Permutation> gens;
        for (const auto& p : parts)
            degree = std::max(degree, Permutation::parse_cycles(p).degree());
        for (const auto& p : parts)
            gens.push_back(Permutation::parse_cycles(p, degree));
        return group_closure(std::move(gens), element_cap, std::string(name));
    }
    throw input_error("unknown group name: " + std::string(name));
}

bool is_cover_name(std::string_view name) {
    if (name == "spinA4" || name == "spinA5") return true;
    if (!name.starts_with("heis")) return false;
    for (char c : name.substr(4))
        if (c < '0' || c > '9') return false;
    return name.size() > 4;
}

CentralCover cover_by_name(std::string_view name) {
    if (!is_cover_name(name))
        throw input_error("unknown cover name: " + std::string(name));
    if (name == "spinA4") return spin_cover_a4();
    if (name == "spinA5") return spin_cover_a5();
    return heisenberg_cover(std::stoi(std::string(name.substr(4))));
}

std::vector<std::string> catalog_group_names() {
    return {"A4", "A5", "S4", "D5", "D7", "D25", "M5"};
}

std::vector<std::string> catalog_cover_names() {
    return {"spinA4", "spinA5", "heis5"};
}

}  // namespace hurwitz::catalog
