#include "twofold/permutation.hpp"

#include <numeric>
#include <sstream>

#include "twofold/errors.hpp"

namespace twofold {

Permutation Permutation::identity(int n) {
    if (n < 0) throw std::invalid_argument("permutation size must be non-negative");
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 0);
    return Permutation(std::move(img));
}

Permutation Permutation::from_images(std::vector<int> img) {
    const int n = static_cast<int>(img.size());
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int v : img) {
        if (v < 0 || v >= n) throw std::invalid_argument("permutation image out of range");
        if (seen[static_cast<std::size_t>(v)]) throw std::invalid_argument("permutation image repeated: not a bijection");
        seen[static_cast<std::size_t>(v)] = 1;
    }
    return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
    for (int v = 0; v < size(); ++v)
        if (img_[static_cast<std::size_t>(v)] != v) return false;
    return true;
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(img_.size());
    for (int v = 0; v < size(); ++v) inv[static_cast<std::size_t>(img_[static_cast<std::size_t>(v)])] = v;
    return Permutation(std::move(inv));
}

std::uint64_t Permutation::order() const {
    std::vector<char> done(img_.size(), 0);
    std::uint64_t result = 1;
    for (int v = 0; v < size(); ++v) {
        if (done[static_cast<std::size_t>(v)]) continue;
        std::uint64_t len = 0;
        for (int u = v; !done[static_cast<std::size_t>(u)]; u = img_[static_cast<std::size_t>(u)]) {
            done[static_cast<std::size_t>(u)] = 1;
            ++len;
        }
        const std::uint64_t g = std::gcd(result, len);
        // result = lcm(result, len), with an explicit overflow check: cycle
        // structures on a few hundred points can exceed 64 bits.
        std::uint64_t lcm;
        if (__builtin_mul_overflow(result / g, len, &lcm))
            throw ResourceLimitError("permutation order exceeds 64-bit range");
        result = lcm;
    }
    return result;
}

std::string Permutation::cycles() const {
    std::vector<std::string> names;
    names.reserve(img_.size());
    for (int v = 0; v < size(); ++v) names.push_back(std::to_string(v));
    return cycles(names);
}

std::string Permutation::cycles(const std::vector<std::string>& names) const {
    if (static_cast<int>(names.size()) != size())
        throw std::invalid_argument("name table size does not match permutation size");
    std::ostringstream out;
    std::vector<char> done(img_.size(), 0);
    bool any = false;
    for (int v = 0; v < size(); ++v) {
        if (done[static_cast<std::size_t>(v)] || img_[static_cast<std::size_t>(v)] == v) continue;
        any = true;
        out << '(';
        bool first = true;
        for (int u = v; !done[static_cast<std::size_t>(u)]; u = img_[static_cast<std::size_t>(u)]) {
            done[static_cast<std::size_t>(u)] = 1;
            if (!first) out << ' ';
            out << names[static_cast<std::size_t>(u)];
            first = false;
        }
        out << ')';
    }
    return any ? out.str() : "id";
}

Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.size() != q.size()) throw std::invalid_argument("permutation size mismatch in compose");
    std::vector<int> img(static_cast<std::size_t>(p.size()));
    for (int v = 0; v < p.size(); ++v) img[static_cast<std::size_t>(v)] = p(q(v));
    return Permutation::from_images(std::move(img));
}

Permutation inverse(const Permutation& p) { return p.inverse(); }

std::uint64_t order(const Permutation& p) { return p.order(); }

} // namespace twofold
