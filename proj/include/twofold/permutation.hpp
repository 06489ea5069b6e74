// permutation.hpp: permutations on {0..n-1} with the composition convention
// used by every group-theoretic module in this library:
//
//   compose(p, q)(v) = p(q(v))   -- the RIGHT factor acts first.
//
// All products of permutations (and of TF pairs built from them) follow this
// rule; tests pin it down so it cannot drift.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace twofold {

class Permutation {
public:
    Permutation() = default;

    // Identity on n points.
    static Permutation identity(int n);

    // From an image array: img[v] = image of v. Throws std::invalid_argument
    // if img is not a bijection on {0..size-1}.
    static Permutation from_images(std::vector<int> img);

    int size() const { return static_cast<int>(img_.size()); }
    int operator()(int v) const { return img_[v]; }
    const std::vector<int>& images() const { return img_; }

    bool is_identity() const;

    Permutation inverse() const;

    // Least k >= 1 with p^k = id, computed as the lcm of cycle lengths.
    // Throws ResourceLimitError if the value does not fit in 64 bits.
    std::uint64_t order() const;

    // Cycle notation, e.g. "(0 2)(1 3)" or "id". Fixed points are omitted.
    std::string cycles() const;
    // Same, but with external vertex names substituted.
    std::string cycles(const std::vector<std::string>& names) const;

    bool operator==(const Permutation& o) const { return img_ == o.img_; }
    bool operator!=(const Permutation& o) const { return img_ != o.img_; }
    // Lexicographic order on image arrays; used wherever deterministic
    // output order is promised (generator lists, certificates).
    bool operator<(const Permutation& o) const { return img_ < o.img_; }

private:
    explicit Permutation(std::vector<int> img) : img_(std::move(img)) {}
    std::vector<int> img_;
};

// p after q: (compose(p, q))(v) = p(q(v)). Throws on size mismatch.
Permutation compose(const Permutation& p, const Permutation& q);

Permutation inverse(const Permutation& p);

std::uint64_t order(const Permutation& p);

} // namespace twofold
