#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "ffint/errors.hpp"
#include "ffint/gf.hpp"

namespace ffint {

/// A bijection on {0, ..., N-1} stored as its image array.
class Permutation {
public:
    /// Validates that image is a bijection; throws NotABijection otherwise.
    explicit Permutation(std::vector<std::uint32_t> image);

    static Permutation identity(std::size_t n);

    std::size_t size() const { return image_.size(); }
    std::uint32_t operator()(std::uint32_t i) const { return image_[i]; }
    const std::vector<std::uint32_t>& image() const { return image_; }

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<std::uint32_t> image_;
};

/// compose(p1, p2)(i) = p1(p2(i)).
Permutation compose(const Permutation& p1, const Permutation& p2);
Permutation invert(const Permutation& p);

/// Multiset of cycle lengths; counts[1], when present, equals the number of
/// fixed points.
struct CycleStructure {
    std::map<std::uint64_t, std::uint64_t> counts;  // length -> N_j
    std::vector<std::uint32_t> fixed_points;        // sorted

    friend bool operator==(const CycleStructure&, const CycleStructure&) = default;
};

CycleStructure cycle_structure(const Permutation& p);

/// True iff p composed with itself is the identity (all cycles have length <= 2).
bool is_self_inverse(const Permutation& p);

/// The index permutation of a field permutation P: index 0 stands for the zero
/// element, index i in [1, q-1] for alpha^i, and the image of i is dlog(P(.)).
/// Throws NotABijection when P is not a permutation of the field.
template <typename Fn>
Permutation interleaver_from_field_map(const Field& F, Fn&& P) {
    std::vector<std::uint32_t> image(F.q());
    for (std::uint64_t i = 0; i < F.q(); ++i)
        image[i] = static_cast<std::uint32_t>(F.dlog(P(F.from_code(i))));
    return Permutation(std::move(image));
}

nlohmann::json to_json(const Permutation& p);
Permutation permutation_from_json(const nlohmann::json& j);

/// Two-row matrix form: indices on the first row, images on the second.
std::string two_row(const Permutation& p, unsigned index_base = 0);
std::string to_csv(const Permutation& p);

nlohmann::json to_json(const CycleStructure& cs);
/// Compact census text like "{1:3, 2:5}".
std::string census_text(const CycleStructure& cs);

}  // namespace ffint
