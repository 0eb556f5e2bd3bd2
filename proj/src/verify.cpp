#include "ffint/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <thread>

#include "ffint/cycletheory.hpp"
#include "ffint/errors.hpp"
#include "ffint/families.hpp"
#include "ffint/gf.hpp"
#include "ffint/numtheory.hpp"
#include "ffint/perm.hpp"
#include "ffint/skolem.hpp"

namespace ffint::verify {

nlohmann::json to_json(const Record& r) {
    return {{"theorem", r.theorem}, {"q", r.q},        {"params", r.params},
            {"condition", r.condition}, {"oracle_agrees", r.oracle_agrees}, {"census", r.census}};
}

std::size_t SweepResult::failures() const {
    return static_cast<std::size_t>(
        std::count_if(records.begin(), records.end(), [](const Record& r) { return !r.oracle_agrees; }));
}

std::vector<PrimePower> prime_powers(std::uint64_t lo, std::uint64_t hi, bool odd_only) {
    std::vector<PrimePower> out;
    for (std::uint64_t p = 2; p <= hi; ++p) {
        if (!numtheory::is_prime(p)) continue;
        if (odd_only && p == 2) continue;
        std::uint64_t q = p;
        unsigned m = 1;
        while (q <= hi) {
            if (q >= lo) out.push_back({p, m, q});
            if (q > hi / p) break;
            q *= p;
            ++m;
        }
    }
    std::sort(out.begin(), out.end(), [](const PrimePower& a, const PrimePower& b) { return a.q < b.q; });
    return out;
}

namespace {

using cycletheory::QuadExt;
using families::DicksonParams;
using families::MobiusParams;
using families::RedeiParams;

void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& task) {
    jobs = std::max(1u, jobs);
    if (jobs == 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) task(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::size_t nthreads = std::min<std::size_t>(jobs, count);
    std::vector<std::exception_ptr> errors(nthreads);
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (std::size_t t = 0; t < nthreads; ++t) {
        pool.emplace_back([&, t] {
            try {
                while (true) {
                    std::size_t i = next.fetch_add(1);
                    if (i >= count) break;
                    task(i);
                }
            } catch (...) {
                errors[t] = std::current_exception();
                next.store(count);
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

nlohmann::json census_json(const std::map<std::uint64_t, std::uint64_t>& counts) {
    nlohmann::json j = nlohmann::json::object();
    for (auto [len, n] : counts) j[std::to_string(len)] = n;
    return j;
}

// Sweep skeleton: one bucket of records per field/task, concatenated in order.
SweepResult gather(std::string theorem, std::size_t count, unsigned jobs,
                   const std::function<void(std::size_t, std::vector<Record>&)>& task) {
    std::vector<std::vector<Record>> buckets(count);
    parallel_for(count, jobs, [&](std::size_t i) { task(i, buckets[i]); });
    SweepResult res;
    res.theorem = std::move(theorem);
    for (auto& b : buckets)
        for (auto& r : b) res.records.push_back(std::move(r));
    return res;
}

std::vector<std::uint64_t> coprime_upto(std::uint64_t modulus, std::uint64_t n_max) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = 1; n <= n_max; ++n)
        if (std::gcd(n, modulus) == 1) out.push_back(n);
    return out;
}

}  // namespace

SweepResult monomial_involution_sweep(std::uint64_t q_max, std::uint64_t iff_q_max, unsigned jobs) {
    auto fields = prime_powers(3, q_max, /*odd_only=*/true);
    auto res = gather("monomial-involution", fields.size(), jobs, [&](std::size_t fi, std::vector<Record>& out) {
        auto [p, m, q] = fields[fi];
        Field F = Field::build(p, m);
        auto corollary_set = cycletheory::monomial_involution_exponents(F);

        auto involution_with_small_fix = [&](std::uint64_t n) {
            Permutation perm = families::monomial_interleaver(F, n);
            if (!is_self_inverse(perm)) return false;
            auto cs = cycle_structure(perm);
            std::vector<std::uint32_t> want{0, static_cast<std::uint32_t>((q - 1) / 2),
                                            static_cast<std::uint32_t>(q - 1)};
            return cs.fixed_points == want;
        };

        // x^{q-2} inverts the nonzero elements; its fixed set is {0, 1, -1} for
        // every odd q, independent of the corollary's case split.
        Record inv_rec;
        inv_rec.theorem = "monomial-involution";
        inv_rec.q = q;
        inv_rec.params = {{"n", q - 2}, {"check", "q-2-involution"}};
        inv_rec.condition = true;
        inv_rec.oracle_agrees = involution_with_small_fix(q - 2);
        out.push_back(inv_rec);

        if ((q - 1) % 8 == 0) {
            Record r2;
            r2.theorem = "monomial-involution";
            r2.q = q;
            r2.params = {{"n", (q - 3) / 2}, {"check", "(q-3)/2-involution"}};
            r2.condition = true;
            r2.oracle_agrees = involution_with_small_fix((q - 3) / 2);
            out.push_back(r2);
        }

        // The corollary is an iff for 4 | q-1 (its case split starts at k0 = 2).
        if (q <= iff_q_max && (q - 1) % 4 == 0) {
            bool all_agree = true;
            for (std::uint64_t n : coprime_upto(q - 1, q - 1)) {
                bool in_set = std::find(corollary_set.begin(), corollary_set.end(), n) != corollary_set.end();
                if (in_set != involution_with_small_fix(n)) { all_agree = false; break; }
            }
            Record r3;
            r3.theorem = "monomial-involution";
            r3.q = q;
            r3.params = {{"check", "corollary-iff"}, {"exponents", corollary_set}};
            r3.condition = true;
            r3.oracle_agrees = all_agree;
            out.push_back(r3);
        }
    });
    return res;
}

SweepResult monomial_samelength_sweep(std::uint64_t q_max, unsigned jobs) {
    auto fields = prime_powers(3, q_max, false);
    return gather("monomial-samelength", fields.size(), jobs, [&](std::size_t fi, std::vector<Record>& out) {
        auto [p, m, q] = fields[fi];
        Field F = Field::build(p, m);
        for (std::uint64_t n : coprime_upto(q - 1, q)) {
            Permutation perm = families::monomial_interleaver(F, n);
            auto cs = cycle_structure(perm);
            bool all_agree = true;
            std::uint64_t first_bad_j = 0;
            for (std::uint64_t j = 1; j <= q && all_agree; ++j) {
                bool oracle = std::all_of(cs.counts.begin(), cs.counts.end(),
                                          [&](auto kv) { return kv.first == 1 || kv.first == j; });
                if (cycletheory::monomial_same_length_condition(F, n, j) != oracle) {
                    all_agree = false;
                    first_bad_j = j;
                }
            }
            Record r;
            r.theorem = "monomial-samelength";
            r.q = q;
            r.params = {{"n", n}};
            if (!all_agree) r.params["first_bad_j"] = first_bad_j;
            r.condition = true;
            r.oracle_agrees = all_agree;
            r.census = census_json(cs.counts);
            out.push_back(r);
        }
    });
}

SweepResult dickson_involution_sweep(std::uint64_t q_max, unsigned jobs) {
    auto fields = prime_powers(3, q_max, false);
    std::atomic<std::uint64_t> verbatim_mismatches{0};
    auto res = gather("dickson-involution", fields.size(), jobs, [&](std::size_t fi, std::vector<Record>& out) {
        auto [p, m, q] = fields[fi];
        Field F = Field::build(p, m);
        std::uint64_t M = q * q - 1;
        for (int a : {1, -1}) {
            FieldElement ae = families::dickson_a_element(F, a);
            // incremental recurrence rows over every field element
            std::vector<std::uint32_t> prev(q), cur(q);
            FieldElement two = F.from_int(2);
            for (std::uint64_t i = 0; i < q; ++i) {
                prev[i] = static_cast<std::uint32_t>(two.code());
                cur[i] = static_cast<std::uint32_t>(i);  // D_1(x) = x
            }
            for (std::uint64_t n = 1; n <= M; ++n) {
                if (std::gcd(n, M) == 1) {
                    Permutation perm{std::vector<std::uint32_t>(cur)};
                    bool oracle = is_self_inverse(perm);
                    bool cond = cycletheory::dickson_involution_condition(F, n, a);
                    bool verb = cycletheory::dickson_involution_condition_verbatim(F, n, a);
                    if (verb != oracle) verbatim_mismatches.fetch_add(1);
                    Record r;
                    r.theorem = "dickson-involution";
                    r.q = q;
                    r.params = {{"n", n}, {"a", a}, {"verbatim_condition", verb}};
                    r.condition = cond;
                    r.oracle_agrees = cond == oracle;
                    out.push_back(r);
                }
                for (std::uint64_t i = 0; i < q; ++i) {
                    FieldElement x = F.from_code(i);
                    FieldElement next = F.sub(F.mul(x, F.from_code(cur[i])), F.mul(ae, F.from_code(prev[i])));
                    prev[i] = cur[i];
                    cur[i] = static_cast<std::uint32_t>(next.code());
                }
            }
        }
    });
    res.notes["verbatim_mismatches"] = verbatim_mismatches.load();
    res.notes["note"] = "condition uses the corrected reading; the printed clause lists "
                        "(verbatim_condition) disagree with the oracle, e.g. q=11 n=19 a=1";
    return res;
}

namespace {

SweepResult mobius_sweep_impl(const char* theorem, std::uint64_t q_min, std::uint64_t q_max,
                              unsigned jobs, bool trace0_mode) {
    auto fields = prime_powers(q_min, q_max, false);
    std::atomic<std::uint64_t> converse_hits{0};  // self-inverse without zero trace
    auto res = gather(theorem, fields.size(), jobs, [&](std::size_t fi, std::vector<Record>& out) {
        auto [p, m, q] = fields[fi];
        Field F = Field::build(p, m);
        QuadExt ext(F);
        for (std::uint64_t ae = 0; ae < q; ++ae)
            for (std::uint64_t be = 0; be < q; ++be)
                for (std::uint64_t ce = 1; ce < q; ++ce)
                    for (std::uint64_t de = 0; de < q; ++de) {
                        FieldElement A = F.from_encoding(ae), B = F.from_encoding(be),
                                     C = F.from_encoding(ce), D = F.from_encoding(de);
                        if (F.sub(F.mul(A, D), F.mul(B, C)).is_zero()) continue;
                        MobiusParams params(A, B, C, D);
                        Permutation perm = families::mobius_interleaver(F, params);
                        auto cs = cycle_structure(perm);
                        bool trace0 = cycletheory::mobius_trace_zero_self_inverse(F, params);
                        bool selfinv = is_self_inverse(perm);
                        if (selfinv && !trace0) converse_hits.fetch_add(1);
                        if (trace0_mode) {
                            if (!trace0) continue;
                            Record r;
                            r.theorem = theorem;
                            r.q = q;
                            r.params = {{"a", ae}, {"b", be}, {"c", ce}, {"d", de}};
                            r.condition = true;
                            r.oracle_agrees = selfinv;
                            r.census = census_json(cs.counts);
                            out.push_back(r);
                        } else {
                            auto pred = cycletheory::mobius_cycle_prediction(ext, params);
                            Record r;
                            r.theorem = theorem;
                            r.q = q;
                            r.params = {{"a", ae}, {"b", be}, {"c", ce}, {"d", de},
                                        {"case", pred.case_id}, {"k", pred.k}, {"s", pred.s}};
                            r.condition = true;
                            r.oracle_agrees = pred.census == cs.counts;
                            r.census = census_json(cs.counts);
                            out.push_back(r);
                        }
                    }
    });
    if (trace0_mode) {
        res.notes["self_inverse_with_nonzero_trace"] = converse_hits.load();
        res.notes["note"] = "the theorem is one-directional; converse observations are "
                            "reported here without being asserted";
    }
    return res;
}

}  // namespace

SweepResult mobius_census_sweep(std::uint64_t q_min, std::uint64_t q_max, unsigned jobs) {
    return mobius_sweep_impl("mobius-census", q_min, q_max, jobs, false);
}

SweepResult mobius_trace0_sweep(std::uint64_t q_min, std::uint64_t q_max, unsigned jobs) {
    return mobius_sweep_impl("mobius-trace0", q_min, q_max, jobs, true);
}

namespace {

// Enumeration shared by the Redei sweeps: every non-square a (odd codes) and
// every n <= q+1 coprime to q+1.
template <typename Fn>
SweepResult redei_sweep(const char* theorem, std::uint64_t q_max, unsigned jobs, Fn&& per_point) {
    auto fields = prime_powers(3, q_max, /*odd_only=*/true);
    return gather(theorem, fields.size(), jobs, [&](std::size_t fi, std::vector<Record>& out) {
        auto [p, m, q] = fields[fi];
        Field F = Field::build(p, m);
        for (std::uint64_t code = 1; code < q; code += 2) {
            FieldElement a = F.from_code(code);
            for (std::uint64_t n : coprime_upto(q + 1, q + 1)) {
                RedeiParams params(n, a);
                Record r;
                r.theorem = theorem;
                r.q = q;
                r.params = {{"a_code", code}, {"a", F.encoding(a)}, {"n", n}};
                per_point(F, params, r);
                out.push_back(r);
            }
        }
    });
}

}  // namespace

SweepResult redei_inverse_sweep(std::uint64_t q_max, unsigned jobs) {
    return redei_sweep("redei-inverse", q_max, jobs, [](const Field& F, const RedeiParams& params, Record& r) {
        std::uint64_t mm = families::redei_inverse_degree(F, params);
        Permutation pn = families::redei_interleaver(F, params);
        Permutation pm = families::redei_interleaver(F, RedeiParams(mm, params.a));
        r.params["m"] = mm;
        r.condition = true;
        r.oracle_agrees = compose(pn, pm) == Permutation::identity(F.q()) &&
                          compose(pm, pn) == Permutation::identity(F.q());
    });
}

SweepResult redei_nj_sweep(std::uint64_t q_max, unsigned jobs) {
    return redei_sweep("redei-Nj", q_max, jobs, [](const Field& F, const RedeiParams& params, Record& r) {
        Permutation perm = families::redei_interleaver(F, params);
        auto cs = cycle_structure(perm);
        auto formula = cycletheory::redei_cycle_counts(F, params, F.q() + 1);
        r.condition = true;
        r.oracle_agrees = formula == cs.counts;
        r.census = census_json(cs.counts);
    });
}

SweepResult redei_selfinv_sweep(std::uint64_t q_max, unsigned jobs) {
    return redei_sweep("redei-selfinv", q_max, jobs, [](const Field& F, const RedeiParams& params, Record& r) {
        Permutation perm = families::redei_interleaver(F, params);
        bool cond = cycletheory::redei_self_inverse_condition(F, params);
        r.condition = cond;
        r.oracle_agrees = cond == is_self_inverse(perm);
    });
}

SweepResult redei_cycle_length_sweep(std::uint64_t q_max, unsigned jobs) {
    return redei_sweep("redei-cycle-length", q_max, jobs, [](const Field& F, const RedeiParams& params, Record& r) {
        Permutation perm = families::redei_interleaver(F, params);
        auto cs = cycle_structure(perm);
        bool all_agree = true;
        for (std::uint64_t j = 1; j <= F.q() + 1 && all_agree; ++j) {
            bool oracle = cs.counts.count(j) > 0;
            if (cycletheory::redei_has_cycle_of_length(F, params, j) != oracle) all_agree = false;
        }
        r.condition = true;
        r.oracle_agrees = all_agree;
        r.census = census_json(cs.counts);
    });
}

SweepResult redei_samelength_sweep(std::uint64_t q_max, unsigned jobs) {
    return redei_sweep("redei-samelength", q_max, jobs, [](const Field& F, const RedeiParams& params, Record& r) {
        Permutation perm = families::redei_interleaver(F, params);
        auto cs = cycle_structure(perm);
        bool all_agree = true;
        for (std::uint64_t j = 1; j <= F.q() + 1 && all_agree; ++j) {
            bool oracle = std::all_of(cs.counts.begin(), cs.counts.end(),
                                      [&](auto kv) { return kv.first == 1 || kv.first == j; });
            bool divisor_form = cycletheory::redei_all_same_length_condition(F, params, j);
            bool prime_power_form = cycletheory::redei_prime_power_condition(F, params, j);
            if (divisor_form != oracle || prime_power_form != divisor_form) all_agree = false;
        }
        r.condition = true;
        r.oracle_agrees = all_agree;
        r.census = census_json(cs.counts);
    });
}

namespace {

struct SkolemTask {
    skolem::SkolemKind kind;
    std::uint64_t n = 0;
    std::optional<std::uint64_t> k;
};

}  // namespace

SweepResult skolem_selfinv_sweep(std::uint64_t n_max, std::uint64_t k_extended_n_max, unsigned jobs) {
    std::vector<SkolemTask> tasks;
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        if (skolem::skolem_exists(skolem::SkolemKind::plain, n))
            tasks.push_back({skolem::SkolemKind::plain, n, std::nullopt});
        if (skolem::skolem_exists(skolem::SkolemKind::hooked, n))
            tasks.push_back({skolem::SkolemKind::hooked, n, std::nullopt});
    }
    for (std::uint64_t n = 1; n <= k_extended_n_max; ++n)
        for (std::uint64_t k = 1; k <= 2 * n + 1; ++k)
            if (skolem::skolem_exists(skolem::SkolemKind::k_extended, n, k))
                tasks.push_back({skolem::SkolemKind::k_extended, n, k});

    return gather("skolem-selfinv", tasks.size(), jobs, [&](std::size_t ti, std::vector<Record>& out) {
        const auto& task = tasks[ti];
        auto seq = skolem::generate(task.kind, task.n, task.k);
        bool valid = skolem::validate(seq).ok;
        auto mseq = skolem::modify(seq);
        Permutation perm = skolem::skolem_interleaver(mseq);
        auto cs = cycle_structure(perm);
        // holes are exactly the fixed points
        std::vector<std::uint32_t> holes;
        for (std::uint32_t u = 0; u < mseq.entries.size(); ++u)
            if (mseq.entries[u] == 0) holes.push_back(u);
        Record r;
        r.theorem = "skolem-selfinv";
        r.q = perm.size();
        r.params = {{"kind", skolem::kind_name(task.kind)}, {"n", task.n}};
        if (task.k) r.params["k"] = *task.k;
        r.condition = true;
        r.oracle_agrees = valid && is_self_inverse(perm) && cs.fixed_points == holes;
        r.census = census_json(cs.counts);
        out.push_back(r);
    });
}

SweepResult skolem_generalized_sweep(std::uint64_t jn_max, unsigned jobs) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> tasks;  // (j, n)
    nlohmann::json skipped = nlohmann::json::array();
    for (std::uint64_t j = 2; j <= 8; ++j)
        for (std::uint64_t n = 1; j * n <= jn_max; ++n) {
            if (!skolem::generalized_skolem_exists(j, n)) continue;
            if (!skolem::generalized_skolem_realizable(j, n)) {
                skipped.push_back({{"j", j}, {"n", n}});
                continue;
            }
            tasks.emplace_back(j, n);
        }
    auto res = gather("skolem-generalized", tasks.size(), jobs, [&](std::size_t ti, std::vector<Record>& out) {
        auto [j, n] = tasks[ti];
        auto seq = skolem::generate(skolem::SkolemKind::generalized, n, std::nullopt, j);
        bool valid = skolem::validate(seq).ok;
        Permutation perm = skolem::skolem_interleaver(skolem::modify(seq));
        auto cs = cycle_structure(perm);
        std::map<std::uint64_t, std::uint64_t> want{{j, n}};
        Record r;
        r.theorem = "skolem-generalized";
        r.q = perm.size();
        r.params = {{"j", j}, {"n", n}};
        r.condition = true;
        r.oracle_agrees = valid && cs.counts == want;
        r.census = census_json(cs.counts);
        out.push_back(r);
    });
    res.notes["congruence_without_sequence"] = skipped;
    return res;
}

SweepResult skolem_existence_sweep(std::uint64_t n_max, std::uint64_t gen_jn_max, unsigned jobs) {
    struct Task {
        skolem::SkolemKind kind;
        std::uint64_t n;
        std::optional<std::uint64_t> k;
        std::optional<std::uint64_t> j;
    };
    std::vector<Task> tasks;
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        tasks.push_back({skolem::SkolemKind::plain, n, std::nullopt, std::nullopt});
        tasks.push_back({skolem::SkolemKind::hooked, n, std::nullopt, std::nullopt});
        for (std::uint64_t k = 1; k <= 2 * n + 1; ++k)
            tasks.push_back({skolem::SkolemKind::k_extended, n, k, std::nullopt});
    }
    for (std::uint64_t j = 2; j <= 6; ++j)
        for (std::uint64_t n = 1; j * n <= gen_jn_max; ++n)
            tasks.push_back({skolem::SkolemKind::generalized, n, std::nullopt, j});

    auto res = gather("skolem-existence", tasks.size(), jobs, [&](std::size_t ti, std::vector<Record>& out) {
        const auto& task = tasks[ti];
        bool predicted, congruence = true;
        if (task.kind == skolem::SkolemKind::generalized) {
            congruence = skolem::generalized_skolem_exists(*task.j, task.n);
            predicted = skolem::generalized_skolem_realizable(*task.j, task.n);
        } else {
            predicted = skolem::skolem_exists(task.kind, task.n, task.k);
        }
        bool found = skolem::exhaustive_exists(task.kind, task.n, task.k, task.j);
        Record r;
        r.theorem = "skolem-existence";
        r.q = task.kind == skolem::SkolemKind::generalized ? *task.j * task.n
              : task.kind == skolem::SkolemKind::plain     ? 2 * task.n
                                                           : 2 * task.n + 1;
        r.params = {{"kind", skolem::kind_name(task.kind)}, {"n", task.n}};
        if (task.k) r.params["k"] = *task.k;
        if (task.j) r.params["j"] = *task.j;
        if (task.kind == skolem::SkolemKind::generalized) r.params["congruence"] = congruence;
        r.condition = predicted;
        r.oracle_agrees = predicted == found;
        out.push_back(r);
    });
    nlohmann::json gaps = nlohmann::json::array();
    for (auto [j, n] : skolem::generalized_congruence_gaps())
        gaps.push_back({{"j", j}, {"n", n}});
    res.notes["congruence_without_sequence"] = gaps;
    res.notes["note"] = "for generalized sequences the predicate is the congruence minus the "
                        "documented gap table; the raw congruence value is in params.congruence";
    return res;
}

SweepResult skolem_prescribed_sweep(std::size_t spec_count, std::uint64_t total_max,
                                    std::uint32_t seed, unsigned jobs) {
    // draw specs up front so results are independent of the job count
    std::mt19937 rng(seed);
    std::vector<std::map<std::uint64_t, std::uint64_t>> specs;
    while (specs.size() < spec_count) {
        std::map<std::uint64_t, std::uint64_t> spec;
        std::uint64_t budget = 5 + rng() % (total_max - 4);
        std::uint64_t classes = 1 + rng() % 4;
        for (std::uint64_t c = 0; c < classes; ++c) {
            std::uint64_t j = 1 + rng() % 6;
            if (spec.count(j)) continue;
            std::uint64_t room = budget;
            for (auto [jj, cc] : spec) room -= jj * cc;
            if (room < j) continue;
            std::uint64_t count = 1 + rng() % (room / j);
            if (j >= 2) {
                // honor the block precondition; shrink until it holds
                while (count >= 1 && !skolem::generalized_skolem_exists(j, j * count)) --count;
                if (count == 0) continue;
            }
            spec[j] = count;
        }
        if (!spec.empty()) specs.push_back(std::move(spec));
    }

    return gather("skolem-prescribed", specs.size(), jobs, [&](std::size_t si, std::vector<Record>& out) {
        const auto& spec = specs[si];
        auto build = skolem::prescribed_cycle_interleaver(spec);
        auto cs = cycle_structure(build.perm);
        Record r;
        r.theorem = "skolem-prescribed";
        r.q = build.perm.size();
        r.params = {{"spec", census_json(spec)}};
        nlohmann::json blocks = nlohmann::json::array();
        for (const auto& b : build.blocks)
            blocks.push_back({{"j", b.length}, {"cycles", b.cycles}, {"orders", b.orders},
                              {"direct_order_feasible", b.direct_order_feasible}});
        r.params["blocks"] = blocks;
        r.condition = true;
        r.oracle_agrees = cs.counts == spec;
        r.census = census_json(cs.counts);
        out.push_back(r);
    });
}

SweepResult field_layer_sweep(std::uint64_t q_max, unsigned jobs) {
    auto fields = prime_powers(2, q_max, false);
    return gather("field-layer", fields.size(), jobs, [&](std::size_t fi, std::vector<Record>& out) {
        auto [p, m, q] = fields[fi];
        Field F = Field::build(p, m);
        bool ok = true;
        std::string why;

        // exp/log are mutually inverse and the encodings cover [0, q) once
        std::vector<bool> seen(q, false);
        for (std::uint64_t code = 0; code < q && ok; ++code) {
            std::uint64_t enc = F.encoding(F.from_code(code));
            if (enc >= q || seen[enc]) { ok = false; why = "encoding collision"; break; }
            seen[enc] = true;
            if (F.from_encoding(enc).code() != code) { ok = false; why = "exp/log roundtrip"; }
        }
        // dlog convention: ln(0) = 0, ln(alpha) = 1, ln(1) = q-1
        if (ok && (F.dlog(F.zero()) != 0 || F.dlog(F.alpha()) != 1 || F.dlog(F.one()) != q - 1)) {
            ok = false;
            why = "dlog convention";
        }
        // a * a^{-1} = 1 for every nonzero a
        for (std::uint64_t code = 1; code < q && ok; ++code) {
            FieldElement a = F.from_code(code);
            if (!(F.mul(a, F.inv(a)) == F.one())) { ok = false; why = "a*inv(a) != 1"; }
        }
        // prime fields: addition in the polynomial representation is integer
        // addition mod p
        if (ok && m == 1) {
            for (std::uint64_t x = 0; x < q && ok; ++x)
                for (std::uint64_t y = 0; y <= x; ++y) {
                    auto s = F.encoding(F.add(F.from_encoding(x), F.from_encoding(y)));
                    if (s != (x + y) % p) { ok = false; why = "prime-field addition"; break; }
                }
        }
        Record r;
        r.theorem = "field-layer";
        r.q = q;
        r.params = {{"p", p}, {"m", m}};
        if (!ok) r.params["reason"] = why;
        r.condition = true;
        r.oracle_agrees = ok;
        out.push_back(r);
    });
}

std::vector<std::string> known_tags() {
    return {"field-layer",       "monomial-involution", "monomial-samelength", "dickson-involution",
            "mobius-census",     "mobius-trace0",       "redei-inverse",       "redei-Nj",
            "redei-selfinv",     "redei-cycle-length",  "redei-samelength",    "skolem-selfinv",
            "skolem-generalized", "skolem-existence",   "skolem-prescribed"};
}

bool is_known_tag(const std::string& tag) {
    auto tags = known_tags();
    return std::find(tags.begin(), tags.end(), tag) != tags.end();
}

SweepResult run_sweep(const std::string& tag, const Options& opt) {
    unsigned jobs = std::max(1u, opt.jobs);
    auto q_or = [&](std::uint64_t dflt) { return opt.q_max ? opt.q_max : dflt; };
    auto n_or = [&](std::uint64_t dflt) { return opt.n_max ? opt.n_max : dflt; };

    if (tag == "field-layer") return field_layer_sweep(q_or(1024), jobs);
    if (tag == "monomial-involution") return monomial_involution_sweep(q_or(1024), 128, jobs);
    if (tag == "monomial-samelength") return monomial_samelength_sweep(q_or(128), jobs);
    if (tag == "dickson-involution") return dickson_involution_sweep(q_or(64), jobs);
    if (tag == "mobius-census") return mobius_census_sweep(3, q_or(13), jobs);
    if (tag == "mobius-trace0") return mobius_trace0_sweep(3, q_or(13), jobs);
    if (tag == "redei-inverse") return redei_inverse_sweep(q_or(64), jobs);
    if (tag == "redei-Nj") return redei_nj_sweep(q_or(64), jobs);
    if (tag == "redei-selfinv") return redei_selfinv_sweep(q_or(128), jobs);
    if (tag == "redei-cycle-length") return redei_cycle_length_sweep(q_or(64), jobs);
    if (tag == "redei-samelength") return redei_samelength_sweep(q_or(64), jobs);
    if (tag == "skolem-selfinv") return skolem_selfinv_sweep(n_or(50), n_or(50), jobs);
    if (tag == "skolem-generalized") return skolem_generalized_sweep(n_or(120), jobs);
    if (tag == "skolem-existence") return skolem_existence_sweep(n_or(12), 36, jobs);
    if (tag == "skolem-prescribed") return skolem_prescribed_sweep(100, 200, 12345, jobs);
    throw InvalidArgument("unknown verification tag: " + tag);
}

}  // namespace ffint::verify
