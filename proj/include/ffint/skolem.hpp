#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ffint/perm.hpp"

namespace ffint::skolem {

enum class SkolemKind { plain, hooked, k_extended, generalized };

const char* kind_name(SkolemKind kind);
std::optional<SkolemKind> kind_from_name(const std::string& name);

/// A Skolem-type sequence. Entries are 1-based positions stored 0-based in
/// the vector; a zero entry is a hole. Plain sequences have length 2n, hooked
/// and k-extended 2n+1 (hole at position 2n resp. k), (j,n)-generalized jn.
struct SkolemSequence {
    SkolemKind kind = SkolemKind::plain;
    std::uint64_t order = 0;         // n
    std::uint64_t k = 0;             // hole position, k_extended only
    std::uint64_t multiplicity = 2;  // j, generalized only (2 otherwise)
    std::vector<int> entries;
};

/// A Skolem-type sequence with the last occurrence of each symbol negated
/// (replaced by -(j-1)i for generalized sequences); encodes a permutation
/// via u -> u + s_u.
struct ModifiedSkolemSequence {
    SkolemKind base_kind = SkolemKind::plain;
    std::uint64_t order = 0;
    std::uint64_t k = 0;
    std::uint64_t multiplicity = 2;
    std::vector<int> entries;
};

/// Existence by the congruence conditions: plain n = 0,1 (mod 4); hooked
/// n = 2,3 (mod 4); k-extended n = 0,1 for odd k and n = 2,3 for even k.
bool skolem_exists(SkolemKind kind, std::uint64_t n, std::optional<std::uint64_t> k = std::nullopt);

/// Existence condition for (j,n)-generalized sequences: with j = p^e t for the
/// smallest prime factor p of j, n = 0, 1, ..., p-1 (mod p^{e+1}).
/// Note: this congruence is necessary but fails to be sufficient at a few
/// small parameters (e.g. (j,n) = (3,2)); generate() reports those via
/// SearchExhausted and the verification sweep documents them.
bool generalized_skolem_exists(std::uint64_t j, std::uint64_t n);

/// The congruence condition minus the finitely many small parameters where
/// exhaustive search shows no sequence exists (see the table in skolem.cpp).
bool generalized_skolem_realizable(std::uint64_t j, std::uint64_t n);

/// The known (j, n) pairs passing the congruence without any sequence existing.
std::vector<std::pair<std::uint64_t, std::uint64_t>> generalized_congruence_gaps();

/// Deterministic backtracking generation: symbols are placed in decreasing
/// order, each at its smallest feasible first position. Throws
/// ExistenceViolated when the existence predicate fails and SearchExhausted
/// when the search space is empty despite the predicate.
SkolemSequence generate(SkolemKind kind, std::uint64_t n,
                        std::optional<std::uint64_t> k = std::nullopt,
                        std::optional<std::uint64_t> j = std::nullopt);

/// Exhaustive search oracle: true iff some sequence with these parameters
/// exists (complete backtracking; intended for small orders).
bool exhaustive_exists(SkolemKind kind, std::uint64_t n,
                       std::optional<std::uint64_t> k = std::nullopt,
                       std::optional<std::uint64_t> j = std::nullopt);

struct Validation {
    bool ok = true;
    std::string reason;
};

/// Full structural check of the kind's invariants; on failure the reason
/// names the first violated position or symbol.
Validation validate(const SkolemSequence& seq);

ModifiedSkolemSequence modify(const SkolemSequence& seq);

/// The interleaver u -> u + s_u (1-based positions mapped to 0-based
/// indices); holes are fixed points.
Permutation skolem_interleaver(const ModifiedSkolemSequence& mseq);

struct BlockReport {
    std::uint64_t length = 0;          // j
    std::uint64_t cycles = 0;          // requested count i_j
    std::vector<std::uint64_t> orders; // orders of the generalized blocks used
    bool direct_order_feasible = true; // generalized_skolem_exists(j, i_j)
};

struct PrescribedBuild {
    Permutation perm;
    std::vector<BlockReport> blocks;
};

/// Builds a permutation with the given cycle structure (map length -> count)
/// from generalized Skolem blocks, fixed points appended last. Each length
/// j >= 2 requires the (j, j*i_j) existence condition; an order-i_j block is
/// then used directly, split greedily when needed.
PrescribedBuild prescribed_cycle_interleaver(const std::map<std::uint64_t, std::uint64_t>& cycle_spec);

/// Text form: `# kind=... n=... [k=...] [j=...]` header, then the entries
/// space-separated on one line (0 = hole, negatives only in modified form).
std::string format_sequence(const SkolemSequence& seq);
std::string format_sequence(const ModifiedSkolemSequence& seq);

}  // namespace ffint::skolem
