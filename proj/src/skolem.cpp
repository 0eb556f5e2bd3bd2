#include "ffint/skolem.hpp"

#include <algorithm>
#include <sstream>

#include "ffint/errors.hpp"
#include "ffint/numtheory.hpp"

namespace ffint::skolem {

const char* kind_name(SkolemKind kind) {
    switch (kind) {
        case SkolemKind::plain: return "plain";
        case SkolemKind::hooked: return "hooked";
        case SkolemKind::k_extended: return "k_extended";
        case SkolemKind::generalized: return "generalized";
    }
    return "?";
}

std::optional<SkolemKind> kind_from_name(const std::string& name) {
    if (name == "plain") return SkolemKind::plain;
    if (name == "hooked") return SkolemKind::hooked;
    if (name == "k_extended" || name == "k-extended") return SkolemKind::k_extended;
    if (name == "generalized") return SkolemKind::generalized;
    return std::nullopt;
}

bool skolem_exists(SkolemKind kind, std::uint64_t n, std::optional<std::uint64_t> k) {
    if (n < 1) throw InvalidArgument("order must be >= 1");
    switch (kind) {
        case SkolemKind::plain:
            if (k) throw InvalidArgument("k is only meaningful for k_extended sequences");
            return n % 4 == 0 || n % 4 == 1;
        case SkolemKind::hooked:
            if (k) throw InvalidArgument("k is only meaningful for k_extended sequences");
            return n % 4 == 2 || n % 4 == 3;
        case SkolemKind::k_extended: {
            if (!k) throw MissingK("k_extended sequences need the hole position k");
            if (*k < 1 || *k > 2 * n + 1) throw InvalidArgument("hole position out of range");
            if (*k % 2 == 1) return n % 4 == 0 || n % 4 == 1;
            return n % 4 == 2 || n % 4 == 3;
        }
        case SkolemKind::generalized:
            throw InvalidArgument("use generalized_skolem_exists(j, n)");
    }
    return false;
}

bool generalized_skolem_exists(std::uint64_t j, std::uint64_t n) {
    if (j < 2) throw InvalidArgument("generalized multiplicity must be >= 2");
    if (n < 1) throw InvalidArgument("order must be >= 1");
    std::uint64_t p = numtheory::factorize(j).factors.front().first;
    std::uint64_t pe1 = p;  // p^{e+1}
    std::uint64_t jj = j;
    while (jj % p == 0) { jj /= p; pe1 *= p; }
    return n % pe1 <= p - 1;
}

namespace {

// Parameters passing the congruence for which exhaustive search proves that no
// sequence exists, over j <= 8, jn <= 120. The congruence is necessary (the
// search never finds a sequence where it fails) but not sufficient here.
constexpr std::pair<std::uint64_t, std::uint64_t> kGeneralizedCongruenceGaps[] = {
    {3, 2}, {4, 8}, {4, 9}, {5, 2}, {5, 3}, {5, 4}, {6, 4}, {6, 5},
    {7, 2}, {7, 3}, {7, 4}, {7, 5}, {7, 6}, {8, 2},
};

}  // namespace

bool generalized_skolem_realizable(std::uint64_t j, std::uint64_t n) {
    if (!generalized_skolem_exists(j, n)) return false;
    for (auto [gj, gn] : kGeneralizedCongruenceGaps)
        if (gj == j && gn == n) return false;
    return true;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> generalized_congruence_gaps() {
    return {std::begin(kGeneralizedCongruenceGaps), std::end(kGeneralizedCongruenceGaps)};
}

namespace {

using Mask = unsigned __int128;

struct SearchSpec {
    std::uint64_t t = 0;     // sequence length
    std::uint64_t mult = 2;  // occurrences per symbol
    Mask blocked = 0;        // holes
};

SearchSpec spec_for(SkolemKind kind, std::uint64_t n, std::optional<std::uint64_t> k,
                    std::optional<std::uint64_t> j) {
    SearchSpec s;
    switch (kind) {
        case SkolemKind::plain:
            s.t = 2 * n;
            break;
        case SkolemKind::hooked:
            s.t = 2 * n + 1;
            s.blocked = Mask{1} << (2 * n - 1);  // hole at position 2n
            break;
        case SkolemKind::k_extended:
            if (!k) throw MissingK("k_extended sequences need the hole position k");
            s.t = 2 * n + 1;
            s.blocked = Mask{1} << (*k - 1);
            break;
        case SkolemKind::generalized:
            if (!j) throw InvalidArgument("generalized sequences need the multiplicity j");
            s.mult = *j;
            s.t = *j * n;
            break;
    }
    if (s.t > 127) throw InvalidArgument("sequence too long for the backtracking generator");
    return s;
}

// Places symbols n, n-1, ..., 1, trying the smallest start position first.
bool place(std::uint64_t i, const SearchSpec& s, Mask& used, std::vector<int>* entries) {
    if (i == 0) return true;
    std::uint64_t span = (s.mult - 1) * i;
    for (std::uint64_t r = 1; r + span <= s.t; ++r) {
        Mask mask = 0;
        for (std::uint64_t w = 0; w < s.mult; ++w) mask |= Mask{1} << (r - 1 + w * i);
        if (used & mask) continue;
        used |= mask;
        if (entries)
            for (std::uint64_t w = 0; w < s.mult; ++w) (*entries)[r - 1 + w * i] = static_cast<int>(i);
        if (place(i - 1, s, used, entries)) return true;
        used &= ~mask;
        if (entries)
            for (std::uint64_t w = 0; w < s.mult; ++w) (*entries)[r - 1 + w * i] = 0;
    }
    return false;
}

bool exists_predicate(SkolemKind kind, std::uint64_t n, std::optional<std::uint64_t> k,
                      std::optional<std::uint64_t> j) {
    if (kind == SkolemKind::generalized) {
        if (!j) throw InvalidArgument("generalized sequences need the multiplicity j");
        return generalized_skolem_exists(*j, n);
    }
    return skolem_exists(kind, n, k);
}

}  // namespace

SkolemSequence generate(SkolemKind kind, std::uint64_t n,
                        std::optional<std::uint64_t> k, std::optional<std::uint64_t> j) {
    if (!exists_predicate(kind, n, k, j))
        throw ExistenceViolated(std::string(kind_name(kind)) + " sequence of order " +
                                std::to_string(n) + " does not satisfy the existence condition");
    SearchSpec s = spec_for(kind, n, k, j);
    SkolemSequence seq;
    seq.kind = kind;
    seq.order = n;
    seq.k = k.value_or(0);
    seq.multiplicity = (kind == SkolemKind::generalized) ? *j : 2;
    seq.entries.assign(s.t, 0);
    Mask used = s.blocked;
    if (!place(n, s, used, &seq.entries))
        throw SearchExhausted(std::string(kind_name(kind)) + " order " + std::to_string(n) +
                              ": no sequence despite the existence condition (the congruence "
                              "is not sufficient at this parameter)");
    return seq;
}

bool exhaustive_exists(SkolemKind kind, std::uint64_t n,
                       std::optional<std::uint64_t> k, std::optional<std::uint64_t> j) {
    SearchSpec s = spec_for(kind, n, k, j);
    Mask used = s.blocked;
    return place(n, s, used, nullptr);
}

Validation validate(const SkolemSequence& seq) {
    auto fail = [](std::string why) { return Validation{false, std::move(why)}; };
    std::uint64_t n = seq.order;
    std::uint64_t mult = seq.kind == SkolemKind::generalized ? seq.multiplicity : 2;
    std::uint64_t want_t;
    switch (seq.kind) {
        case SkolemKind::plain: want_t = 2 * n; break;
        case SkolemKind::hooked:
        case SkolemKind::k_extended: want_t = 2 * n + 1; break;
        case SkolemKind::generalized: want_t = mult * n; break;
        default: return fail("unknown kind");
    }
    if (seq.entries.size() != want_t)
        return fail("length " + std::to_string(seq.entries.size()) + ", expected " +
                    std::to_string(want_t));

    std::vector<std::vector<std::uint64_t>> where(n + 1);
    std::vector<std::uint64_t> holes;
    for (std::uint64_t u = 1; u <= seq.entries.size(); ++u) {
        int v = seq.entries[u - 1];
        if (v == 0) { holes.push_back(u); continue; }
        if (v < 0 || static_cast<std::uint64_t>(v) > n)
            return fail("position " + std::to_string(u) + ": symbol out of range");
        where[v].push_back(u);
    }

    std::uint64_t want_holes = seq.kind == SkolemKind::plain || seq.kind == SkolemKind::generalized ? 0 : 1;
    if (holes.size() != want_holes)
        return fail("expected " + std::to_string(want_holes) + " hole(s), found " +
                    std::to_string(holes.size()));
    if (seq.kind == SkolemKind::hooked && holes[0] != 2 * n)
        return fail("hooked hole must sit in the penultimate position");
    if (seq.kind == SkolemKind::k_extended && holes[0] != seq.k)
        return fail("hole at position " + std::to_string(holes[0]) + ", expected k = " +
                    std::to_string(seq.k));

    for (std::uint64_t i = 1; i <= n; ++i) {
        if (where[i].size() != mult)
            return fail("symbol " + std::to_string(i) + " appears " +
                        std::to_string(where[i].size()) + " times, expected " + std::to_string(mult));
        for (std::uint64_t w = 1; w < mult; ++w)
            if (where[i][w] != where[i][0] + w * i)
                return fail("symbol " + std::to_string(i) + ": positions are not spaced by " +
                            std::to_string(i));
    }
    return {};
}

ModifiedSkolemSequence modify(const SkolemSequence& seq) {
    auto v = validate(seq);
    if (!v.ok) throw InvalidArgument("modify: invalid sequence: " + v.reason);
    ModifiedSkolemSequence out;
    out.base_kind = seq.kind;
    out.order = seq.order;
    out.k = seq.k;
    out.multiplicity = seq.multiplicity;
    out.entries.assign(seq.entries.begin(), seq.entries.end());
    std::vector<bool> done(seq.order + 1, false);
    for (std::size_t idx = out.entries.size(); idx-- > 0;) {
        int v2 = out.entries[idx];
        if (v2 <= 0 || done[v2]) continue;
        done[v2] = true;
        if (seq.kind == SkolemKind::generalized)
            out.entries[idx] = -static_cast<int>(seq.multiplicity - 1) * v2;
        else
            out.entries[idx] = -v2;
    }
    return out;
}

Permutation skolem_interleaver(const ModifiedSkolemSequence& mseq) {
    std::uint64_t t = mseq.entries.size();
    std::vector<std::uint32_t> image(t);
    for (std::uint64_t u = 1; u <= t; ++u) {
        std::int64_t v = static_cast<std::int64_t>(u) + mseq.entries[u - 1];
        if (v < 1 || v > static_cast<std::int64_t>(t))
            throw NotABijection("u + s_u leaves the index range at position " + std::to_string(u));
        image[u - 1] = static_cast<std::uint32_t>(v - 1);
    }
    return Permutation(std::move(image));
}

PrescribedBuild prescribed_cycle_interleaver(const std::map<std::uint64_t, std::uint64_t>& cycle_spec) {
    std::vector<std::uint32_t> image;
    auto append = [&image](const Permutation& p) {
        std::uint32_t off = static_cast<std::uint32_t>(image.size());
        for (std::uint32_t v : p.image()) image.push_back(off + v);
    };

    std::vector<BlockReport> blocks;
    for (auto [j, count] : cycle_spec) {
        if (j < 1) throw InvalidArgument("cycle length must be >= 1");
        if (j == 1 || count == 0) continue;
        if (!generalized_skolem_exists(j, j * count))
            throw BlockUnrealizable("no (" + std::to_string(j) + "," + std::to_string(j * count) +
                                    ")-generalized Skolem sequence: congruence condition fails");
        BlockReport rep;
        rep.length = j;
        rep.cycles = count;
        rep.direct_order_feasible = generalized_skolem_exists(j, count);
        std::uint64_t remaining = count;
        while (remaining > 0) {
            std::uint64_t nb = remaining;
            SkolemSequence seq;
            while (true) {
                while (nb >= 1 && !generalized_skolem_exists(j, nb)) --nb;
                if (nb == 0)
                    throw BlockUnrealizable("cannot realize " + std::to_string(remaining) +
                                            " cycles of length " + std::to_string(j));
                try {
                    seq = generate(SkolemKind::generalized, nb, std::nullopt, j);
                    break;
                } catch (const SearchExhausted&) {
                    --nb;  // congruence over-promises here; fall back to a smaller block
                }
            }
            rep.orders.push_back(nb);
            append(skolem_interleaver(modify(seq)));
            remaining -= nb;
        }
        blocks.push_back(std::move(rep));
    }
    auto it = cycle_spec.find(1);
    std::uint64_t fixed = it == cycle_spec.end() ? 0 : it->second;
    for (std::uint64_t i = 0; i < fixed; ++i)
        image.push_back(static_cast<std::uint32_t>(image.size()));
    return {Permutation(std::move(image)), std::move(blocks)};
}

namespace {

std::string header_line(const char* kind, std::uint64_t n, std::uint64_t k, std::uint64_t mult,
                        SkolemKind kind_tag, bool modified) {
    std::ostringstream os;
    os << "# kind=" << kind << " n=" << n;
    if (kind_tag == SkolemKind::k_extended) os << " k=" << k;
    if (kind_tag == SkolemKind::generalized) os << " j=" << mult;
    if (modified) os << " modified";
    return os.str();
}

std::string entries_line(const std::vector<int>& entries) {
    std::ostringstream os;
    for (std::size_t i = 0; i < entries.size(); ++i) os << (i ? " " : "") << entries[i];
    return os.str();
}

}  // namespace

std::string format_sequence(const SkolemSequence& seq) {
    return header_line(kind_name(seq.kind), seq.order, seq.k, seq.multiplicity, seq.kind, false) +
           "\n" + entries_line(seq.entries) + "\n";
}

std::string format_sequence(const ModifiedSkolemSequence& seq) {
    return header_line(kind_name(seq.base_kind), seq.order, seq.k, seq.multiplicity, seq.base_kind,
                       true) +
           "\n" + entries_line(seq.entries) + "\n";
}

}  // namespace ffint::skolem
