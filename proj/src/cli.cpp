#include "ffint/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ffint/cycletheory.hpp"
#include "ffint/errors.hpp"
#include "ffint/families.hpp"
#include "ffint/gf.hpp"
#include "ffint/numtheory.hpp"
#include "ffint/perm.hpp"
#include "ffint/skolem.hpp"
#include "ffint/verify.hpp"

namespace ffint::cli {

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 2;
constexpr int kCondition = 3;
constexpr int kBadInput = 4;
constexpr int kVerifyFailed = 5;

std::uint64_t field_bound() {
    if (const char* env = std::getenv("INTERLEAVER_QMAX")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v >= 2) return v;
        throw InvalidArgument("INTERLEAVER_QMAX must be an integer >= 2");
    }
    return kDefaultFieldBound;
}

struct FieldOpts {
    std::uint64_t p = 0;
    unsigned m = 1;
    std::string poly;  // comma-separated coefficients, constant first
};

void add_field_opts(CLI::App* cmd, FieldOpts& fo) {
    cmd->add_option("-p", fo.p, "field characteristic (prime)")->required();
    cmd->add_option("-m", fo.m, "extension degree");
    cmd->add_option("--poly", fo.poly,
                    "primitive polynomial coefficients, constant term first (e.g. 1,1,0,0,1)");
}

std::optional<std::vector<std::uint32_t>> parse_poly(const std::string& s) {
    if (s.empty()) return std::nullopt;
    std::vector<std::uint32_t> coeffs;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        coeffs.push_back(static_cast<std::uint32_t>(std::stoul(item)));
    return coeffs;
}

Field build_field(const FieldOpts& fo) { return Field::build(fo.p, fo.m, parse_poly(fo.poly), field_bound()); }

struct FamilyOpts {
    std::string family;
    std::uint64_t n = 0;
    std::int64_t a = 0;
    bool a_set = false;
    std::int64_t b = 0, c = 0, d = 0;
    bool inverse = false;
};

void add_family_opts(CLI::App* cmd, FamilyOpts& fam) {
    cmd->add_option("family", fam.family, "monomial | dickson | mobius | redei")->required();
    cmd->add_option("-n", fam.n, "degree / exponent");
    cmd->add_option("-a", fam.a, "family parameter a (field element encoding; for dickson: -1, 0 or 1)")
        ->each([&fam](const std::string&) { fam.a_set = true; });
    cmd->add_option("-b", fam.b, "mobius parameter b (encoding)");
    cmd->add_option("-c", fam.c, "mobius parameter c (encoding)");
    cmd->add_option("-d", fam.d, "mobius parameter d (encoding)");
    cmd->add_flag("--inverse", fam.inverse, "emit the inverse interleaver");
}

FieldElement elt_from_signed(const Field& F, std::int64_t v) {
    if (v >= 0) return F.from_encoding(static_cast<std::uint64_t>(v));
    return F.neg(F.from_encoding(static_cast<std::uint64_t>(-v)));
}

struct BuiltInterleaver {
    Permutation perm;
    std::string describe;  // provenance comment, e.g. "monomial n=11"
};

BuiltInterleaver build_family_interleaver(const Field& F, const FamilyOpts& fam) {
    std::ostringstream desc;
    if (fam.family == "monomial") {
        if (fam.n == 0) throw InvalidArgument("monomial needs -n");
        std::uint64_t n = fam.inverse ? families::monomial_inverse_exponent(F, fam.n) : fam.n;
        desc << "monomial n=" << n;
        return {families::monomial_interleaver(F, n), desc.str()};
    }
    if (fam.family == "dickson") {
        if (fam.n == 0 || !fam.a_set) throw InvalidArgument("dickson needs -n and -a");
        if (fam.a < -1 || fam.a > 1)
            throw InvalidArgument("dickson parameter a must be -1, 0 or 1");
        families::DicksonParams params{fam.n, static_cast<int>(fam.a)};
        if (fam.inverse) params.n = families::dickson_inverse_degree(F, params);
        desc << "dickson n=" << params.n << " a=" << params.a;
        return {families::dickson_interleaver(F, params), desc.str()};
    }
    if (fam.family == "mobius") {
        families::MobiusParams params(elt_from_signed(F, fam.a), elt_from_signed(F, fam.b),
                                      elt_from_signed(F, fam.c), elt_from_signed(F, fam.d));
        if (fam.inverse) params = families::mobius_inverse_params(params);
        desc << "mobius a=" << F.encoding(params.a) << " b=" << F.encoding(params.b)
             << " c=" << F.encoding(params.c) << " d=" << F.encoding(params.d);
        return {families::mobius_interleaver(F, params), desc.str()};
    }
    if (fam.family == "redei") {
        if (fam.n == 0 || !fam.a_set) throw InvalidArgument("redei needs -n and -a");
        families::RedeiParams params(fam.n, elt_from_signed(F, fam.a));
        if (fam.inverse) params.n = families::redei_inverse_degree(F, params);
        desc << "redei n=" << params.n << " a=" << F.encoding(params.a);
        return {families::redei_interleaver(F, params), desc.str()};
    }
    throw InvalidArgument("unknown family: " + fam.family);
}

void emit_permutation(std::ostream& out, const Field& F, const BuiltInterleaver& built,
                      const std::string& format) {
    if (format == "json") {
        auto j = to_json(built.perm);
        j["field"] = F.header();
        out << j.dump() << '\n';
    } else if (format == "csv") {
        out << "# field " << F.header() << "\n# " << built.describe << '\n' << to_csv(built.perm);
    } else {
        out << "# field " << F.header() << "\n# " << built.describe << '\n' << two_row(built.perm);
    }
}

int cmd_field(std::ostream& out, const FieldOpts& fo, bool tables, const std::string& format) {
    Field F = build_field(fo);
    if (format == "json") {
        nlohmann::json j{{"p", F.p()}, {"m", F.m()}, {"q", F.q()},
                         {"poly", F.primitive_poly()}, {"alpha", F.encoding(F.alpha())}};
        if (tables) {
            std::vector<std::uint64_t> exps, logs;
            for (std::uint64_t i = 1; i < F.q(); ++i) exps.push_back(F.encoding(F.from_code(i)));
            for (std::uint64_t e = 1; e < F.q(); ++e) logs.push_back(F.from_encoding(e).code());
            j["exp"] = exps;
            j["log"] = logs;
        }
        out << j.dump() << '\n';
        return kOk;
    }
    out << "# field " << F.header() << '\n';
    out << "p " << F.p() << '\n' << "m " << F.m() << '\n' << "q " << F.q() << '\n';
    out << "poly";
    for (auto c : F.primitive_poly()) out << ' ' << c;
    out << '\n' << "alpha " << F.encoding(F.alpha()) << '\n';
    if (tables) {
        out << "exp";
        for (std::uint64_t i = 1; i < F.q(); ++i) out << ' ' << F.encoding(F.from_code(i));
        out << '\n' << "log";
        for (std::uint64_t e = 1; e < F.q(); ++e) out << ' ' << F.from_encoding(e).code();
        out << '\n';
    }
    return kOk;
}

int cmd_cycles_output(std::ostream& out, const Permutation& perm, const std::string& format,
                      const std::string& provenance) {
    auto cs = cycle_structure(perm);
    if (format == "json") {
        out << to_json(cs).dump() << '\n';
    } else if (format == "csv") {
        out << "length,count\n";
        for (auto [len, n] : cs.counts) out << len << ',' << n << '\n';
    } else {
        if (!provenance.empty()) out << provenance;
        out << census_text(cs) << '\n';
        out << "fixed";
        for (auto i : cs.fixed_points) out << ' ' << i;
        out << '\n';
    }
    return kOk;
}

int cmd_verify(std::ostream& out, std::ostream& err, const std::string& tag,
               const verify::Options& opt, const std::string& jsonl_path) {
    if (!verify::is_known_tag(tag)) {
        err << "unknown verification tag: " << tag << "\nknown tags:";
        for (const auto& t : verify::known_tags()) err << ' ' << t;
        err << '\n';
        return kUsage;
    }
    auto result = verify::run_sweep(tag, opt);
    nlohmann::json summary{{"theorem", result.theorem}, {"summary", true},
                           {"pass", result.passes()}, {"fail", result.failures()},
                           {"notes", result.notes}};
    if (!jsonl_path.empty() && jsonl_path != "-") {
        std::ofstream f(jsonl_path);
        if (!f) {
            err << "cannot open " << jsonl_path << " for writing\n";
            return kBadInput;
        }
        for (const auto& r : result.records) f << verify::to_json(r).dump() << '\n';
        f << summary.dump() << '\n';
        out << "pass " << result.passes() << " fail " << result.failures() << '\n';
    } else {
        for (const auto& r : result.records) out << verify::to_json(r).dump() << '\n';
        out << summary.dump() << '\n';
    }
    return result.failures() ? kVerifyFailed : kOk;
}

std::string skolem_requirement(skolem::SkolemKind kind, std::uint64_t n,
                               std::optional<std::uint64_t> k, std::optional<std::uint64_t> j) {
    std::ostringstream os;
    switch (kind) {
        case skolem::SkolemKind::plain:
            os << "n=" << n << " = " << n % 4 << " (mod 4), need 0 or 1 (mod 4)";
            break;
        case skolem::SkolemKind::hooked:
            os << "n=" << n << " = " << n % 4 << " (mod 4), need 2 or 3 (mod 4)";
            break;
        case skolem::SkolemKind::k_extended:
            os << "n=" << n << " = " << n % 4 << " (mod 4), need "
               << (*k % 2 == 1 ? "0 or 1" : "2 or 3") << " (mod 4) for k=" << *k;
            break;
        case skolem::SkolemKind::generalized: {
            std::uint64_t p = numtheory::factorize(*j).factors.front().first;
            std::uint64_t pe1 = p, jj = *j;
            while (jj % p == 0) { jj /= p; pe1 *= p; }
            os << "n=" << n << " = " << n % pe1 << " (mod " << pe1 << "), need 0.." << p - 1
               << " (mod " << pe1 << ")";
            break;
        }
    }
    return os.str();
}

int cmd_skolem(std::ostream& out, std::ostream& err, const std::string& kind_name,
               std::uint64_t n, std::optional<std::uint64_t> k, std::optional<std::uint64_t> j,
               bool do_modify, bool do_interleave) {
    auto kind = skolem::kind_from_name(kind_name);
    if (!kind) {
        err << "unknown sequence kind: " << kind_name << '\n';
        return kUsage;
    }
    bool exists = *kind == skolem::SkolemKind::generalized
                      ? skolem::generalized_skolem_exists(j.value_or(0), n)
                      : skolem::skolem_exists(*kind, n, k);
    if (!exists) {
        err << "no " << kind_name << " sequence: " << skolem_requirement(*kind, n, k, j) << '\n';
        return kCondition;
    }
    auto seq = skolem::generate(*kind, n, k, j);
    out << skolem::format_sequence(seq);
    if (do_modify || do_interleave) {
        auto mseq = skolem::modify(seq);
        out << skolem::format_sequence(mseq);
        if (do_interleave) out << two_row(skolem::skolem_interleaver(mseq), 1);
    }
    return kOk;
}

}  // namespace

std::string reproduce_table(const std::string& id) {
    if (id == "monomial-13") {
        Field F = Field::build(13, 1);
        return two_row(families::monomial_interleaver(F, 11));
    }
    if (id == "dickson-11") {
        Field F = Field::build(11, 1);
        return two_row(families::dickson_interleaver(F, {19, 1}));
    }
    if (id == "skolem-hooked-6") {
        skolem::SkolemSequence seq;
        seq.kind = skolem::SkolemKind::hooked;
        seq.order = 6;
        seq.entries = {2, 5, 2, 6, 1, 1, 5, 3, 4, 6, 3, 0, 4};
        auto v = skolem::validate(seq);
        if (!v.ok) throw Error("reproduction sequence invalid: " + v.reason);
        return two_row(skolem::skolem_interleaver(skolem::modify(seq)), 1);
    }
    throw InvalidArgument("unknown reproduction id: " + id);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"interleavers from permutation functions over finite fields"};
    app.name("ffint");
    app.require_subcommand(1);

    // field
    FieldOpts field_fo;
    bool field_tables = false;
    std::string field_format = "table";
    auto* field_cmd = app.add_subcommand("field", "build a field and report its tables");
    add_field_opts(field_cmd, field_fo);
    field_cmd->add_flag("--tables", field_tables, "print the exp/log tables");
    field_cmd->add_option("--format", field_format)->check(CLI::IsMember({"table", "json"}));

    // interleave
    FieldOpts il_fo;
    FamilyOpts il_fam;
    std::string il_format = "table";
    bool il_two_row = false;
    auto* il_cmd = app.add_subcommand("interleave", "construct a family interleaver");
    add_family_opts(il_cmd, il_fam);
    add_field_opts(il_cmd, il_fo);
    il_cmd->add_option("--format", il_format)->check(CLI::IsMember({"table", "json", "csv"}));
    il_cmd->add_flag("--two-row", il_two_row, "paper-style two-row matrix output");

    // cycles
    FieldOpts cy_fo;
    FamilyOpts cy_fam;
    std::string cy_format = "table";
    std::string cy_json_file;
    auto* cy_cmd = app.add_subcommand("cycles", "report the cycle structure of an interleaver");
    cy_cmd->add_option("--from-json", cy_json_file, "read a permutation from a JSON file (- for stdin)");
    add_family_opts(cy_cmd, cy_fam);
    cy_cmd->get_option("family")->required(false);
    add_field_opts(cy_cmd, cy_fo);
    cy_cmd->get_option("-p")->required(false);
    cy_cmd->add_option("--format", cy_format)->check(CLI::IsMember({"table", "json", "csv"}));

    // verify
    std::string vf_tag;
    verify::Options vf_opt;
    std::string vf_jsonl;
    auto* vf_cmd = app.add_subcommand("verify", "run a theorem-verification sweep");
    vf_cmd->add_option("tag", vf_tag, "theorem tag (see --list)")->required();
    vf_cmd->add_option("--q-max", vf_opt.q_max, "largest field size in the sweep");
    vf_cmd->add_option("--n-max", vf_opt.n_max, "largest order in the sweep");
    vf_cmd->add_option("--jobs", vf_opt.jobs, "worker threads");
    vf_cmd->add_option("--jsonl", vf_jsonl, "write records to this file instead of stdout");

    // skolem
    std::string sk_kind;
    std::uint64_t sk_n = 0;
    std::uint64_t sk_k = 0, sk_j = 0;
    bool sk_modify = false, sk_interleave = false;
    auto* sk_cmd = app.add_subcommand("skolem", "generate Skolem-type sequences");
    sk_cmd->add_option("kind", sk_kind, "plain | hooked | k_extended | generalized")->required();
    sk_cmd->add_option("-n", sk_n, "order")->required();
    sk_cmd->add_option("-k", sk_k, "hole position (k_extended)");
    sk_cmd->add_option("-j", sk_j, "multiplicity (generalized)");
    sk_cmd->add_flag("--modify", sk_modify, "also print the modified sequence");
    sk_cmd->add_flag("--interleave", sk_interleave, "also print the induced interleaver");

    // reproduce
    std::string rp_id;
    auto* rp_cmd = app.add_subcommand("reproduce", "emit a worked-example table byte-exactly");
    rp_cmd->add_option("id", rp_id, "monomial-13 | dickson-11 | skolem-hooked-6")->required();

    std::vector<const char*> argv;
    argv.push_back("ffint");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e, out, err);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (field_cmd->parsed()) return cmd_field(out, field_fo, field_tables, field_format);

        if (il_cmd->parsed()) {
            std::optional<Field> F;
            try {
                F.emplace(build_field(il_fo));
            } catch (const Error& e) {
                err << "field error: " << e.what() << '\n';
                return kUsage;
            }
            auto built = build_family_interleaver(*F, il_fam);
            emit_permutation(out, *F, built, il_two_row ? "table" : il_format);
            return kOk;
        }

        if (cy_cmd->parsed()) {
            if (!cy_json_file.empty()) {
                nlohmann::json j;
                try {
                    if (cy_json_file == "-") {
                        j = nlohmann::json::parse(std::cin);
                    } else {
                        std::ifstream f(cy_json_file);
                        if (!f) throw InvalidArgument("cannot open " + cy_json_file);
                        j = nlohmann::json::parse(f);
                    }
                    return cmd_cycles_output(out, permutation_from_json(j), cy_format, "");
                } catch (const nlohmann::json::exception& e) {
                    err << "bad permutation file: " << e.what() << '\n';
                    return kBadInput;
                } catch (const Error& e) {
                    err << "bad permutation file: " << e.what() << '\n';
                    return kBadInput;
                }
            }
            if (cy_fam.family.empty() || cy_fo.p == 0) {
                err << "cycles needs either --from-json or an inline family with -p\n";
                return kUsage;
            }
            std::optional<Field> F;
            try {
                F.emplace(build_field(cy_fo));
            } catch (const Error& e) {
                err << "field error: " << e.what() << '\n';
                return kUsage;
            }
            auto built = build_family_interleaver(*F, cy_fam);
            std::string provenance = "# field " + F->header() + "\n# " + built.describe + "\n";
            return cmd_cycles_output(out, built.perm, cy_format, provenance);
        }

        if (vf_cmd->parsed()) return cmd_verify(out, err, vf_tag, vf_opt, vf_jsonl);

        if (sk_cmd->parsed())
            return cmd_skolem(out, err, sk_kind, sk_n,
                              sk_k ? std::optional<std::uint64_t>(sk_k) : std::nullopt,
                              sk_j ? std::optional<std::uint64_t>(sk_j) : std::nullopt,
                              sk_modify, sk_interleave);

        if (rp_cmd->parsed()) {
            try {
                out << reproduce_table(rp_id);
                return kOk;
            } catch (const InvalidArgument& e) {
                err << e.what() << '\n';
                return kUsage;
            }
        }
    } catch (const NotAPermutation& e) {
        err << "condition violated: " << e.what() << '\n';
        return kCondition;
    } catch (const ExistenceViolated& e) {
        err << "condition violated: " << e.what() << '\n';
        return kCondition;
    } catch (const InvalidArgument& e) {
        err << "condition violated: " << e.what() << '\n';
        return kCondition;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return kUsage;
}

int run(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, std::cout, std::cerr);
}

}  // namespace ffint::cli
