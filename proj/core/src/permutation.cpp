#include "hurwitz/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "hurwitz/errors.hpp"

namespace hurwitz {

Permutation::Permutation(int degree) {
    if (degree < 0 || degree > 65535)
        throw input_error("permutation degree out of range");
    img_.resize(degree);
    std::iota(img_.begin(), img_.end(), Letter{0});
}

Permutation Permutation::from_images(std::vector<Letter> images) {
    if (images.size() > 65535)
        throw input_error("permutation degree out of range");
    std::vector<char> seen(images.size(), 0);
    for (Letter v : images) {
        if (v >= images.size() || seen[v])
            throw input_error("image array is not a bijection");
        seen[v] = 1;
    }
    Permutation p;
    p.img_ = std::move(images);
    return p;
}

Permutation Permutation::parse_cycles(std::string_view text, int min_degree) {
    std::vector<std::vector<int>> cycles;
    std::size_t i = 0;
    int max_letter = 0;
    auto skip_ws = [&] {
        while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
            ++i;
    };
    skip_ws();
    while (i < text.size()) {
        if (text[i] != '(')
            throw input_error("cycle notation: expected '('");
        ++i;
        std::vector<int> cycle;
        skip_ws();
        while (i < text.size() && text[i] != ')') {
            if (!std::isdigit(static_cast<unsigned char>(text[i])))
                throw input_error("cycle notation: expected a letter");
            int v = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                v = v * 10 + (text[i] - '0');
                if (v > 65535)
                    throw input_error("cycle notation: letter out of range");
                ++i;
            }
            if (v < 1)
                throw input_error("cycle notation: letters are 1-based");
            cycle.push_back(v);
            max_letter = std::max(max_letter, v);
            skip_ws();
        }
        if (i >= text.size())
            throw input_error("cycle notation: unterminated cycle");
        ++i;  // ')'
        if (!cycle.empty())
            cycles.push_back(std::move(cycle));
        skip_ws();
    }
    int degree = std::max(max_letter, min_degree);
    std::vector<Letter> images(degree);
    std::iota(images.begin(), images.end(), Letter{0});
    std::vector<char> used(degree + 1, 0);
    for (const auto& cycle : cycles) {
        for (int v : cycle) {
            if (used[v])
                throw input_error("cycle notation: repeated letter");
            used[v] = 1;
        }
        for (std::size_t j = 0; j < cycle.size(); ++j) {
            int from = cycle[j] - 1;
            int to = cycle[(j + 1) % cycle.size()] - 1;
            images[from] = static_cast<Letter>(to);
        }
    }
    return from_images(std::move(images));
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < img_.size(); ++i)
        if (img_[i] != i) return false;
    return true;
}

Permutation Permutation::inverse() const {
    std::vector<Letter> inv(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i)
        inv[img_[i]] = static_cast<Letter>(i);
    Permutation p;
    p.img_ = std::move(inv);
    return p;
}

int Permutation::order() const {
    long long ord = 1;
    std::vector<char> seen(img_.size(), 0);
    for (std::size_t i = 0; i < img_.size(); ++i) {
        if (seen[i]) continue;
        long long len = 0;
        for (std::size_t j = i; !seen[j]; j = img_[j]) {
            seen[j] = 1;
            ++len;
        }
        ord = std::lcm(ord, len);
    }
    return static_cast<int>(ord);
}

int Permutation::cycle_count() const {
    int count = 0;
    std::vector<char> seen(img_.size(), 0);
    for (std::size_t i = 0; i < img_.size(); ++i) {
        if (seen[i]) continue;
        ++count;
        for (std::size_t j = i; !seen[j]; j = img_[j]) seen[j] = 1;
    }
    return count;
}

std::vector<std::vector<int>> Permutation::cycle_decomposition() const {
    std::vector<std::vector<int>> cycles;
    std::vector<char> seen(img_.size(), 0);
    for (std::size_t i = 0; i < img_.size(); ++i) {
        if (seen[i] || img_[i] == i) {
            seen[i] = 1;
            continue;
        }
        std::vector<int> cycle;
        for (std::size_t j = i; !seen[j]; j = img_[j]) {
            seen[j] = 1;
            cycle.push_back(static_cast<int>(j) + 1);
        }
        cycles.push_back(std::move(cycle));
    }
    return cycles;
}

std::string Permutation::to_cycles() const {
    auto cycles = cycle_decomposition();
    if (cycles.empty()) return "()";
    std::string out;
    for (const auto& cycle : cycles) {
        out += '(';
        for (std::size_t j = 0; j < cycle.size(); ++j) {
            if (j) out += ' ';
            out += std::to_string(cycle[j]);
        }
        out += ')';
    }
    return out;
}

Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.degree() != q.degree())
        throw input_error("compose: degree mismatch");
    std::vector<Letter> images(p.degree());
    for (int i = 0; i < p.degree(); ++i)
        images[i] = q(p(static_cast<Letter>(i)));
    return Permutation::from_images(std::move(images));
}

Permutation conjugate(const Permutation& g, const Permutation& h) {
    return compose(compose(h, g), h.inverse());
}

}  // namespace hurwitz
