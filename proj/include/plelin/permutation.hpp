#pragma once

#include <cstddef>
#include <numeric>
#include <utility>
#include <vector>

#include "plelin/errors.hpp"

namespace plelin {

// Permutation acting on row indices: images[i] is where source row i lands.
// Composition convention: (p * q)(i) = p(q(i)), i.e. apply q first, matching
// the matrix product of the corresponding permutation matrices.
class RowPermutation {
public:
    RowPermutation() = default;

    static RowPermutation identity(std::size_t size) {
        std::vector<std::size_t> images(size);
        std::iota(images.begin(), images.end(), std::size_t{0});
        return RowPermutation{std::move(images)};
    }

    static RowPermutation transposition(std::size_t size, std::size_t i, std::size_t j) {
        if (i >= size || j >= size)
            throw dimension_error("RowPermutation: transposition index out of range");
        auto p = identity(size);
        std::swap(p.images_[i], p.images_[j]);
        return p;
    }

    // Throws dimension_error unless images is a bijection on {0..n-1}.
    static RowPermutation from_images(std::vector<std::size_t> images) {
        std::vector<bool> seen(images.size(), false);
        for (std::size_t image : images) {
            if (image >= images.size() || seen[image])
                throw dimension_error("RowPermutation: images are not a bijection");
            seen[image] = true;
        }
        return RowPermutation{std::move(images)};
    }

    std::size_t size() const { return images_.size(); }
    std::size_t operator()(std::size_t i) const { return images_[i]; }
    const std::vector<std::size_t>& images() const { return images_; }

    bool is_identity() const {
        for (std::size_t i = 0; i < images_.size(); ++i)
            if (images_[i] != i) return false;
        return true;
    }

    RowPermutation inverse() const {
        std::vector<std::size_t> inv(images_.size());
        for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = i;
        return RowPermutation{std::move(inv)};
    }

    // -1 for odd permutations, +1 for even ones.
    int sign() const {
        std::vector<bool> visited(images_.size(), false);
        int sign = 1;
        for (std::size_t i = 0; i < images_.size(); ++i) {
            if (visited[i]) continue;
            std::size_t length = 0;
            for (std::size_t j = i; !visited[j]; j = images_[j]) {
                visited[j] = true;
                ++length;
            }
            if (length % 2 == 0) sign = -sign;
        }
        return sign;
    }

    friend RowPermutation operator*(const RowPermutation& p, const RowPermutation& q) {
        if (p.size() != q.size())
            throw dimension_error("RowPermutation: composing permutations of different sizes");
        std::vector<std::size_t> images(p.size());
        for (std::size_t i = 0; i < p.size(); ++i) images[i] = p.images_[q.images_[i]];
        return RowPermutation{std::move(images)};
    }

    friend bool operator==(const RowPermutation& a, const RowPermutation& b) {
        return a.images_ == b.images_;
    }

private:
    explicit RowPermutation(std::vector<std::size_t> images) : images_(std::move(images)) {}

    std::vector<std::size_t> images_;
};

}  // namespace plelin
