#pragma once

// n-cycles in the symmetric group and their per-element statistics: descent
// number, degree (cyclic descent number), symmetry order under rotation
// conjugation, combinatorial-type canonicalization and the binary signature.
//
// A cycle is stored in one-line notation on the ground set {1,...,n}:
// images[i] = value of the permutation at i+1. Cycle notation
// (1 v(1) v^2(1) ...) is an I/O format only. All values are immutable.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cyclic/errors.hpp"
#include "cyclic/number_theory.hpp"

namespace cyclic {

class Cycle;
Cycle make_cycle(std::vector<int> images);
Cycle from_cycle_notation(std::span<const int> seq);

class Cycle {
  public:
    int size() const { return static_cast<int>(images_.size()); }

    /// Image of i under the permutation, 1-based.
    int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }

    const std::vector<int>& one_line() const { return images_; }

    /// The orbit of 1: (1, v(1), v^2(1), ..., v^{n-1}(1)).
    std::vector<int> cycle_notation() const {
        std::vector<int> seq;
        seq.reserve(images_.size());
        int x = 1;
        do {
            seq.push_back(x);
            x = (*this)(x);
        } while (x != 1);
        return seq;
    }

    auto operator<=>(const Cycle&) const = default;

  private:
    explicit Cycle(std::vector<int> images) : images_(std::move(images)) {}
    friend Cycle make_cycle(std::vector<int>);

    std::vector<int> images_;
};

namespace detail {

inline void require_permutation(std::span<const int> values) {
    const int n = static_cast<int>(values.size());
    if (n == 0) throw NotAPermutation("empty sequence");
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int v : values) {
        if (v < 1 || v > n) throw NotAPermutation("value " + std::to_string(v) + " out of range 1.." + std::to_string(n));
        if (seen[static_cast<std::size_t>(v - 1)]++) throw NotAPermutation("duplicate value " + std::to_string(v));
    }
}

/// Conjugate in-place: out[i] = rho^j . one_line . rho^-j, 0-based buffers.
inline void conjugate_one_line(std::span<const int> one_line, int j, std::span<int> out) {
    const int n = static_cast<int>(one_line.size());
    j = ((j % n) + n) % n;
    for (int i = 0; i < n; ++i) {
        const int src = (i - j + n) % n;
        out[static_cast<std::size_t>(i)] = (one_line[static_cast<std::size_t>(src)] - 1 + j) % n + 1;
    }
}

/// Lexicographically smallest one-line notation among all rotation conjugates.
inline std::vector<int> canonical_one_line(std::span<const int> one_line) {
    const int n = static_cast<int>(one_line.size());
    std::vector<int> best(one_line.begin(), one_line.end());
    std::vector<int> scratch(static_cast<std::size_t>(n));
    for (int j = 1; j < n; ++j) {
        conjugate_one_line(one_line, j, scratch);
        if (scratch < best) best = scratch;
    }
    return best;
}

/// Smallest j >= 1 with rho^j v rho^-j = v; always a divisor of n.
inline int stabilizer_period(std::span<const int> one_line) {
    const int n = static_cast<int>(one_line.size());
    for (long long j : divisors(n)) {
        if (j == n) break;
        bool fixed = true;
        for (int i = 0; i < n; ++i) {
            const int ij = (i + static_cast<int>(j)) % n;
            if (one_line[static_cast<std::size_t>(ij)] !=
                (one_line[static_cast<std::size_t>(i)] - 1 + static_cast<int>(j)) % n + 1) {
                fixed = false;
                break;
            }
        }
        if (fixed) return static_cast<int>(j);
    }
    return n;
}

inline int cyclic_descents(std::span<const int> one_line) {
    const int n = static_cast<int>(one_line.size());
    int d = 0;
    for (int i = 0; i + 1 < n; ++i)
        if (one_line[static_cast<std::size_t>(i)] > one_line[static_cast<std::size_t>(i + 1)]) ++d;
    if (one_line[static_cast<std::size_t>(n - 1)] > one_line[0]) ++d;
    return d;
}

} // namespace detail

inline Cycle make_cycle(std::vector<int> images) {
    detail::require_permutation(images);
    const int n = static_cast<int>(images.size());
    if (n < 2) throw NotAnNCycle("need n >= 2");
    int x = 1, steps = 0;
    do {
        x = images[static_cast<std::size_t>(x - 1)];
        ++steps;
    } while (x != 1 && steps <= n);
    if (steps != n) throw NotAnNCycle("permutation is not a single n-cycle");
    return Cycle(std::move(images));
}

inline Cycle from_cycle_notation(std::span<const int> seq) {
    detail::require_permutation(seq);
    if (seq.empty() || seq[0] != 1) throw FirstElementNotOne("cycle notation must start with 1");
    const int n = static_cast<int>(seq.size());
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        images[static_cast<std::size_t>(seq[static_cast<std::size_t>(i)] - 1)] =
            seq[static_cast<std::size_t>((i + 1) % n)];
    return make_cycle(std::move(images));
}

/// Number of linear descents: #{1 <= i <= n-1 : v(i) > v(i+1)}.
inline int descent_number(const Cycle& c) {
    const auto& img = c.one_line();
    int d = 0;
    for (std::size_t i = 0; i + 1 < img.size(); ++i)
        if (img[i] > img[i + 1]) ++d;
    return d;
}

/// Cyclic descent number: descents plus one when v(n) > v(1).
inline int degree(const Cycle& c) { return detail::cyclic_descents(c.one_line()); }

/// Order of the stabilizer of c under conjugation by powers of (1 2 ... n).
inline int symmetry_order(const Cycle& c) {
    return c.size() / detail::stabilizer_period(c.one_line());
}

inline Cycle conjugate_by_rotation(const Cycle& c, int j) {
    std::vector<int> out(static_cast<std::size_t>(c.size()));
    detail::conjugate_one_line(c.one_line(), j, out);
    return make_cycle(std::move(out));
}

inline Cycle inverse(const Cycle& c) {
    const auto& img = c.one_line();
    std::vector<int> inv(img.size());
    for (std::size_t i = 0; i < img.size(); ++i)
        inv[static_cast<std::size_t>(img[i] - 1)] = static_cast<int>(i) + 1;
    return make_cycle(std::move(inv));
}

struct Signature {
    int n = 0;
    std::vector<std::uint8_t> bits; // 1-based semantics: bits[i-1] = a_i

    int ones() const {
        int k = 0;
        for (auto b : bits) k += b;
        return k;
    }
    auto operator<=>(const Signature&) const = default;
};

/// Binary vector with a_i = 1 exactly when the four points
/// v(i), i, i+1, v(i+1) (indices cyclic, so n+1 wraps to 1) are pairwise
/// distinct and occur in that strict positive cyclic order on {1,...,n}.
inline Signature signature(const Cycle& c) {
    const int n = c.size();
    if (n < 3) throw TooSmall("signature needs n >= 3");
    Signature sig{n, std::vector<std::uint8_t>(static_cast<std::size_t>(n), 0)};
    for (int i = 1; i <= n; ++i) {
        const int inext = i % n + 1;
        const int a = c(i), b = i, d = inext, e = c(inext);
        const int bb = (b - a + n) % n;
        const int dd = (d - a + n) % n;
        const int ee = (e - a + n) % n;
        if (bb != 0 && dd != 0 && ee != 0 && bb < dd && dd < ee)
            sig.bits[static_cast<std::size_t>(i - 1)] = 1;
    }
    return sig;
}

struct TypeRepresentative {
    Cycle canonical;
    int orbit_size = 0; // n / sym
    auto operator<=>(const TypeRepresentative&) const = default;
};

/// Deterministic representative of the rotation-conjugacy class of c:
/// the lexicographically smallest one-line notation among all conjugates.
inline TypeRepresentative canonical_type(const Cycle& c) {
    auto best = detail::canonical_one_line(c.one_line());
    const int sym = symmetry_order(c);
    return TypeRepresentative{make_cycle(std::move(best)), c.size() / sym};
}

inline std::string format_cycle(const Cycle& c) {
    std::string out = "(";
    bool first = true;
    for (int v : c.cycle_notation()) {
        if (!first) out += ' ';
        out += std::to_string(v);
        first = false;
    }
    out += ')';
    return out;
}

inline std::string format_one_line(const Cycle& c) {
    std::string out = "[";
    bool first = true;
    for (int v : c.one_line()) {
        if (!first) out += ',';
        out += std::to_string(v);
        first = false;
    }
    out += ']';
    return out;
}

/// Accepts cycle notation "(1 3 2 4 6 5)" and one-line "[3,4,2,6,1,5]".
/// Separators inside brackets may be spaces or commas.
inline Cycle parse_cycle(std::string_view text) {
    auto first = text.find_first_not_of(" \t\r\n");
    auto last = text.find_last_not_of(" \t\r\n");
    if (first == std::string_view::npos) throw ParseError("empty cycle literal");
    text = text.substr(first, last - first + 1);
    if (text.size() < 2) throw ParseError("malformed cycle literal");
    const char open = text.front(), close = text.back();
    if (!((open == '(' && close == ')') || (open == '[' && close == ']')))
        throw ParseError("cycle literal must be (...) or [...]");
    std::vector<int> values;
    std::string_view body = text.substr(1, text.size() - 2);
    std::size_t pos = 0;
    while (pos < body.size()) {
        if (body[pos] == ' ' || body[pos] == ',' || body[pos] == '\t') {
            ++pos;
            continue;
        }
        std::size_t end = pos;
        while (end < body.size() && body[end] >= '0' && body[end] <= '9') ++end;
        if (end == pos) throw ParseError(std::string("unexpected character '") + body[pos] + "' in cycle literal");
        values.push_back(std::stoi(std::string(body.substr(pos, end - pos))));
        pos = end;
    }
    if (values.empty()) throw ParseError("no values in cycle literal");
    return open == '(' ? from_cycle_notation(values) : make_cycle(std::move(values));
}

} // namespace cyclic
