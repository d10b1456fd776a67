// permutation.hpp -- permutations of {1..n} with a fixed composition order.
//
// Convention used everywhere in this library: compose(p, q) applies p first,
// then q, so products read left to right.  A tuple (g1,...,gr) has product one
// exactly when compose(g1, compose(g2, ...)) is the identity.
//
// Letters are 1-based in all text I/O ("(1 2 3)(4 5)"); internally images are
// stored 0-based.

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hurwitz {

using Letter = std::uint16_t;

class Permutation {
public:
    Permutation() = default;                 // degree 0
    explicit Permutation(int degree);        // identity of the given degree

    // images[i] is the 0-based image of letter i; must be a bijection.
    static Permutation from_images(std::vector<Letter> images);

    // Parses cycle notation, e.g. "(1 2 3)(4 5)"; "()" is the identity.
    // Commas and whitespace both separate letters.  The degree is the largest
    // letter seen, or min_degree if that is larger.
    static Permutation parse_cycles(std::string_view text, int min_degree = 0);

    int degree() const { return static_cast<int>(img_.size()); }
    Letter operator()(Letter i) const { return img_[i]; }
    const std::vector<Letter>& images() const { return img_; }

    bool is_identity() const;
    Permutation inverse() const;
    int order() const;

    // Number of cycles including fixed points; degree() - cycle_count() is
    // the index used in the genus computations.
    int cycle_count() const;

    // Nontrivial cycles, 1-based letters, each cycle rotated to start at its
    // least letter, cycles sorted by least letter.
    std::vector<std::vector<int>> cycle_decomposition() const;

    std::string to_cycles() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
        return a.img_ <=> b.img_;
    }

private:
    std::vector<Letter> img_;
};

// Applies p first, then q.  Degrees must match.
Permutation compose(const Permutation& p, const Permutation& q);

inline Permutation operator*(const Permutation& p, const Permutation& q) {
    return compose(p, q);
}

// h g h^-1 as a product in the left-to-right convention.
Permutation conjugate(const Permutation& g, const Permutation& h);

}  // namespace hurwitz
