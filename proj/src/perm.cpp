#include "ffint/perm.hpp"

#include <numeric>
#include <sstream>

namespace ffint {

Permutation::Permutation(std::vector<std::uint32_t> image) : image_(std::move(image)) {
    std::vector<bool> seen(image_.size(), false);
    for (auto v : image_) {
        if (v >= image_.size() || seen[v])
            throw NotABijection("image array is not a bijection");
        seen[v] = true;
    }
}

Permutation Permutation::identity(std::size_t n) {
    std::vector<std::uint32_t> image(n);
    std::iota(image.begin(), image.end(), 0u);
    return Permutation(std::move(image));
}

Permutation compose(const Permutation& p1, const Permutation& p2) {
    if (p1.size() != p2.size()) throw SizeMismatch("compose: sizes differ");
    std::vector<std::uint32_t> image(p1.size());
    for (std::size_t i = 0; i < image.size(); ++i) image[i] = p1(p2(static_cast<std::uint32_t>(i)));
    return Permutation(std::move(image));
}

Permutation invert(const Permutation& p) {
    std::vector<std::uint32_t> image(p.size());
    for (std::size_t i = 0; i < image.size(); ++i) image[p(static_cast<std::uint32_t>(i))] = static_cast<std::uint32_t>(i);
    return Permutation(std::move(image));
}

CycleStructure cycle_structure(const Permutation& p) {
    CycleStructure cs;
    std::vector<bool> visited(p.size(), false);
    for (std::uint32_t i = 0; i < p.size(); ++i) {
        if (visited[i]) continue;
        std::uint64_t len = 0;
        std::uint32_t j = i;
        do {
            visited[j] = true;
            j = p(j);
            ++len;
        } while (j != i);
        ++cs.counts[len];
        if (len == 1) cs.fixed_points.push_back(i);
    }
    return cs;
}

bool is_self_inverse(const Permutation& p) {
    for (std::uint32_t i = 0; i < p.size(); ++i)
        if (p(p(i)) != i) return false;
    return true;
}

nlohmann::json to_json(const Permutation& p) {
    return {{"size", p.size()}, {"image", p.image()}};
}

Permutation permutation_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("size") || !j.contains("image") || !j["image"].is_array())
        throw InvalidArgument("permutation json must have size and image fields");
    auto image = j["image"].get<std::vector<std::uint32_t>>();
    if (image.size() != j["size"].get<std::size_t>())
        throw InvalidArgument("permutation json: size does not match image length");
    return Permutation(std::move(image));
}

std::string two_row(const Permutation& p, unsigned index_base) {
    std::ostringstream os;
    for (std::size_t i = 0; i < p.size(); ++i) os << (i ? " " : "") << i + index_base;
    os << '\n';
    for (std::size_t i = 0; i < p.size(); ++i)
        os << (i ? " " : "") << p(static_cast<std::uint32_t>(i)) + index_base;
    os << '\n';
    return os.str();
}

std::string to_csv(const Permutation& p) {
    std::ostringstream os;
    os << "index,image\n";
    for (std::size_t i = 0; i < p.size(); ++i)
        os << i << ',' << p(static_cast<std::uint32_t>(i)) << '\n';
    return os.str();
}

nlohmann::json to_json(const CycleStructure& cs) {
    nlohmann::json counts = nlohmann::json::object();
    for (auto [len, n] : cs.counts) counts[std::to_string(len)] = n;
    return {{"counts", counts}, {"fixed_points", cs.fixed_points}};
}

std::string census_text(const CycleStructure& cs) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (auto [len, n] : cs.counts) {
        if (!first) os << ", ";
        os << len << ':' << n;
        first = false;
    }
    os << '}';
    return os.str();
}

}  // namespace ffint
