// Command-line surface of the library: Groebner bases, ideal arithmetic,
// Hilbert data, closure families, Hankel verification, reduction mod p,
// and the named reproduction suites.
//
// Exit codes: 0 success, 1 a check failed, 2 usage error, 3 cap exceeded.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "knutson/poly_io.hpp"
#include "knutson/suites.hpp"

namespace {

using nlohmann::json;
using namespace knutson;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapExceeded = 3;

// ---------------------------------------------------------------------
// Ring specification shared by the algebra subcommands.

struct RingSpec {
    std::size_t vars = 0;
    std::string order = "lex";
    std::uint64_t characteristic = 0;
};

void add_ring_flags(CLI::App* cmd, RingSpec& ring) {
    cmd->add_option("--vars", ring.vars,
                    "number of variables x1..xn (default: inferred from the input)");
    cmd->add_option("--order", ring.order,
                    "term order: lex | grevlex | matrix:<rows> (rows ';'-separated, "
                    "entries ','-separated)")
        ->capture_default_str();
    cmd->add_option("--char", ring.characteristic,
                    "coefficient field: 0 for Q, a prime p for F_p")
        ->capture_default_str();
}

TermOrderPtr make_order(const std::string& spec) {
    if (spec == "lex") return TermOrder::lex();
    if (spec == "grevlex") return TermOrder::grevlex();
    const std::string prefix = "matrix:";
    if (spec.rfind(prefix, 0) == 0) {
        std::vector<std::vector<long long>> rows;
        std::stringstream body(spec.substr(prefix.size()));
        std::string row;
        while (std::getline(body, row, ';')) {
            std::vector<long long> entries;
            std::stringstream cells(row);
            std::string cell;
            while (std::getline(cells, cell, ',')) {
                std::size_t used = 0;
                long long v = 0;
                try {
                    v = std::stoll(cell, &used);
                } catch (const std::exception&) {
                    used = std::string::npos;
                }
                if (used != cell.size()) {
                    throw ParseError(0, "bad matrix entry '" + cell + "'");
                }
                entries.push_back(v);
            }
            rows.push_back(std::move(entries));
        }
        return TermOrder::matrix(std::move(rows));
    }
    throw ParseError(0, "unknown order '" + spec +
                            "' (expected lex, grevlex or matrix:<rows>)");
}

// ---------------------------------------------------------------------
// Input plumbing: a polynomial-list argument is inline text, '@file', or a
// bare path to an existing file.  Files hold one generator per line, with
// '#' comments and blank lines ignored.

std::string read_generator_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot read file '" + path + "'");
    std::string joined;
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        auto last = line.find_last_not_of(" \t\r");
        if (!joined.empty()) joined += ";";
        joined += line.substr(first, last - first + 1);
    }
    return joined;
}

std::string resolve_spec(const std::string& spec) {
    if (!spec.empty() && spec[0] == '@') return read_generator_file(spec.substr(1));
    std::error_code ec;
    if (std::filesystem::is_regular_file(spec, ec)) return read_generator_file(spec);
    return spec;
}

// Largest variable index mentioned in the text, for inferring --vars.
std::size_t scan_max_var(const std::string& text) {
    std::size_t best = 0;
    for (std::size_t i = 0; i + 1 < text.size(); ++i) {
        if (text[i] != 'x' || !std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
            continue;
        }
        std::size_t j = i + 1;
        std::size_t v = 0;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
            v = v * 10 + static_cast<std::size_t>(text[j] - '0');
            ++j;
        }
        best = std::max(best, v);
    }
    return best;
}

std::vector<Polynomial<Rational>> parse_gens(const std::string& spec,
                                             const RingSpec& ring,
                                             const TermOrderPtr& ord) {
    return parse_polynomial_list(resolve_spec(spec), ring.vars, ord);
}

std::vector<Polynomial<Fp>> reduce_gens(const std::vector<Polynomial<Rational>>& gens,
                                        std::uint64_t p) {
    std::vector<Polynomial<Fp>> out;
    out.reserve(gens.size());
    for (const auto& f : gens) out.push_back(reduce_poly_mod_p(f, p));
    return out;
}

// ---------------------------------------------------------------------
// Output plumbing.

bool g_timestamp = false;

std::string now_iso8601() {
    auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::strftime(buf, sizeof buf, "%FT%TZ", std::gmtime(&t));
    return buf;
}

void write_json(const std::string& path, json j) {
    if (path.empty()) return;
    if (g_timestamp) j["timestamp"] = now_iso8601();
    std::string text = j.dump(2) + "\n";
    if (path == "-") {
        std::fputs(text.c_str(), stdout);
        return;
    }
    std::ofstream out(path);
    if (!out) throw ParseError(0, "cannot write file '" + path + "'");
    out << text;
}

// write_json for text already serialized by the library (suite reports).
void write_text(const std::string& path, const std::string& text) {
    if (path.empty()) return;
    std::string body = text;
    if (g_timestamp) {
        json j = json::parse(text);
        j["timestamp"] = now_iso8601();
        body = j.dump(2) + "\n";
    }
    if (path == "-") {
        std::fputs(body.c_str(), stdout);
        return;
    }
    std::ofstream out(path);
    if (!out) throw ParseError(0, "cannot write file '" + path + "'");
    out << body;
}

template <class K>
json basis_json(const ReducedGB<K>& gb) {
    json j;
    j["basis"] = json::array();
    for (const auto& f : gb.basis) j["basis"].push_back(f.str());
    j["initial_ideal"] = gb.initial().str();
    return j;
}

json hilbert_json(const HilbertSummary& h) {
    json j;
    j["unit"] = h.unit;
    j["h_vector"] = h.h_vector;
    j["dim"] = h.dim;
    j["height"] = h.height;
    j["multiplicity"] = h.multiplicity;
    return j;
}

template <class K>
void print_basis(const ReducedGB<K>& gb) {
    if (gb.basis.empty()) {
        std::puts("0");
        return;
    }
    for (const auto& f : gb.basis) std::puts(f.str().c_str());
}

// ---------------------------------------------------------------------
// Algebra subcommands, templated over the coefficient field.

struct AlgebraArgs {
    RingSpec ring;
    std::string gens;  // gb, initial, hilbert, member
    std::string poly;  // member
    std::string left;  // sum, intersect, colon, equal
    std::string right;
    std::string json_path;
};

template <class K>
struct FieldOps;

template <>
struct FieldOps<Rational> {
    static Ideal<Rational> ideal(const std::string& spec, const RingSpec& ring,
                                 const TermOrderPtr& ord) {
        return Ideal<Rational>(ring.vars, ord, parse_gens(spec, ring, ord));
    }
    static Polynomial<Rational> poly(const std::string& spec, const RingSpec& ring,
                                     const TermOrderPtr& ord) {
        return parse_polynomial(resolve_spec(spec), ring.vars, ord);
    }
};

template <>
struct FieldOps<Fp> {
    static Ideal<Fp> ideal(const std::string& spec, const RingSpec& ring,
                           const TermOrderPtr& ord) {
        return Ideal<Fp>(ring.vars, ord,
                         reduce_gens(parse_gens(spec, ring, ord), ring.characteristic));
    }
    static Polynomial<Fp> poly(const std::string& spec, const RingSpec& ring,
                               const TermOrderPtr& ord) {
        return reduce_poly_mod_p(parse_polynomial(resolve_spec(spec), ring.vars, ord),
                                 ring.characteristic);
    }
};

template <class K>
int run_gb(const AlgebraArgs& a) {
    TermOrderPtr ord = make_order(a.ring.order);
    Ideal<K> ideal = FieldOps<K>::ideal(a.gens, a.ring, ord);
    const auto& gb = ideal.groebner();
    print_basis(gb);
    write_json(a.json_path, basis_json(gb));
    return kExitOk;
}

template <class K>
int run_initial(const AlgebraArgs& a) {
    TermOrderPtr ord = make_order(a.ring.order);
    MonomialIdeal lt = initial_ideal(FieldOps<K>::ideal(a.gens, a.ring, ord), ord);
    std::puts(lt.str().c_str());
    json j;
    j["initial_ideal"] = lt.str();
    write_json(a.json_path, j);
    return kExitOk;
}

template <class K>
int run_member(const AlgebraArgs& a) {
    TermOrderPtr ord = make_order(a.ring.order);
    bool in = ideal_member(FieldOps<K>::poly(a.poly, a.ring, ord),
                           FieldOps<K>::ideal(a.gens, a.ring, ord));
    std::puts(in ? "member" : "not a member");
    json j;
    j["member"] = in;
    write_json(a.json_path, j);
    return in ? kExitOk : kExitCheckFailed;
}

template <class K>
int run_equal(const AlgebraArgs& a) {
    TermOrderPtr ord = make_order(a.ring.order);
    bool eq = ideal_equal(FieldOps<K>::ideal(a.left, a.ring, ord),
                          FieldOps<K>::ideal(a.right, a.ring, ord));
    std::puts(eq ? "equal" : "different");
    json j;
    j["equal"] = eq;
    write_json(a.json_path, j);
    return eq ? kExitOk : kExitCheckFailed;
}

template <class K>
int run_binop(const AlgebraArgs& a, const std::string& op) {
    TermOrderPtr ord = make_order(a.ring.order);
    Ideal<K> left = FieldOps<K>::ideal(a.left, a.ring, ord);
    Ideal<K> right = FieldOps<K>::ideal(a.right, a.ring, ord);
    Ideal<K> result = op == "sum"         ? ideal_sum(left, right)
                      : op == "intersect" ? ideal_intersect(left, right)
                                          : ideal_colon(left, right);
    const auto& gb = result.groebner(ord);
    print_basis(gb);
    write_json(a.json_path, basis_json(gb));
    return kExitOk;
}

template <class K>
int run_hilbert(const AlgebraArgs& a) {
    TermOrderPtr ord = make_order(a.ring.order);
    HilbertSummary h = ideal_hilbert(FieldOps<K>::ideal(a.gens, a.ring, ord), ord);
    std::puts(h.str().c_str());
    write_json(a.json_path.empty() ? "-" : a.json_path, hilbert_json(h));
    return kExitOk;
}

template <class K>
int dispatch_algebra(const std::string& cmd, const AlgebraArgs& a) {
    if (cmd == "gb") return run_gb<K>(a);
    if (cmd == "initial") return run_initial<K>(a);
    if (cmd == "member") return run_member<K>(a);
    if (cmd == "equal") return run_equal<K>(a);
    if (cmd == "hilbert") return run_hilbert<K>(a);
    return run_binop<K>(a, cmd);
}

int run_algebra(const std::string& cmd, AlgebraArgs a) {
    for (std::string* field : {&a.gens, &a.poly, &a.left, &a.right}) {
        if (!field->empty()) *field = resolve_spec(*field);
    }
    if (a.ring.vars == 0) {
        for (const std::string* field : {&a.gens, &a.poly, &a.left, &a.right}) {
            a.ring.vars = std::max(a.ring.vars, scan_max_var(*field));
        }
    }
    if (a.ring.characteristic == 0) return dispatch_algebra<Rational>(cmd, a);
    check_prime_modulus(a.ring.characteristic);
    return dispatch_algebra<Fp>(cmd, a);
}

// ---------------------------------------------------------------------
// knutson-closure.

struct ClosureArgs {
    RingSpec ring;
    std::string seed;
    std::string witnesses = "default";
    std::size_t max_members = ClosureCaps{}.max_members;
    std::size_t max_iterations = ClosureCaps{}.max_iterations;
    std::string out_path;
};

template <class K>
json closure_report(const KnutsonFamily<K>& fam, const CertifyReport& cert) {
    json members = json::array();
    for (const auto& m : fam.members()) {
        json jm;
        jm["key"] = m.key;
        jm["generators"] = json::array();
        for (const auto& f : m.ideal.generators()) jm["generators"].push_back(f.str());
        jm["initial_ideal"] = initial_ideal(m.ideal, fam.order()).str();
        jm["hilbert_summary"] = hilbert_json(ideal_hilbert(m.ideal, fam.order()));
        jm["provenance"] = {{"op", m.provenance.op},
                            {"parents", m.provenance.parents},
                            {"witness", m.provenance.witness}};
        members.push_back(std::move(jm));
    }
    const ClosureStats& s = fam.stats();
    json j;
    j["members"] = std::move(members);
    j["checks"] = {{"members_checked", cert.members_checked},
                   {"pairs_checked", cert.pairs_checked},
                   {"violations", cert.violations},
                   {"ok", cert.ok()}};
    j["stats"] = {{"iterations", s.iterations},
                  {"colon_ops", s.colon_ops},
                  {"sum_ops", s.sum_ops},
                  {"intersect_ops", s.intersect_ops},
                  {"membership_shortcuts", s.membership_shortcuts},
                  {"containment_shortcuts", s.containment_shortcuts},
                  {"gb_runs", s.gb_runs},
                  {"witness_pool_size", s.witness_pool_size}};
    return j;
}

template <class K>
int report_closure(const KnutsonFamily<K>& fam, const std::string& out_path) {
    CertifyReport cert = certify_family(fam);
    std::printf("family of %zu members (witness pool %zu, %zu iterations, %llu GB runs)\n",
                fam.size(), fam.witness_pool().size(), fam.stats().iterations,
                static_cast<unsigned long long>(fam.stats().gb_runs));
    for (std::size_t i = 0; i < fam.size(); ++i) {
        const auto& m = fam.members()[i];
        std::string how = m.provenance.op;
        if (!m.provenance.parents.empty()) {
            how += "(";
            for (std::size_t k = 0; k < m.provenance.parents.size(); ++k) {
                if (k) how += ",";
                how += "#" + std::to_string(m.provenance.parents[k]);
            }
            if (!m.provenance.witness.empty()) how += " : " + m.provenance.witness;
            how += ")";
        }
        std::printf("#%-3zu %-28s initial = %s\n", i, how.c_str(),
                    initial_ideal(m.ideal, fam.order()).str().c_str());
    }
    std::printf("certify: %zu members, %zu pairs, %zu violations\n",
                cert.members_checked, cert.pairs_checked, cert.violations.size());
    for (const auto& v : cert.violations) std::printf("  violation: %s\n", v.c_str());
    write_json(out_path, closure_report(fam, cert));
    return cert.ok() ? kExitOk : kExitCheckFailed;
}

int run_closure(const ClosureArgs& a) {
    TermOrderPtr ord = make_order(a.ring.order);
    std::string seed_text = resolve_spec(a.seed);
    std::string witness_text;
    if (a.witnesses != "default" && a.witnesses != "none") {
        if (a.witnesses.empty() || a.witnesses[0] != '@') {
            throw ParseError(0, "--witnesses expects default, none or @file");
        }
        witness_text = read_generator_file(a.witnesses.substr(1));
    }
    std::size_t vars = a.ring.vars;
    if (vars == 0) {
        vars = std::max(scan_max_var(seed_text), scan_max_var(witness_text));
    }

    Polynomial<Rational> seed = parse_polynomial(seed_text, vars, ord);
    WitnessPolicy<Rational> policy;
    if (a.witnesses == "none") {
        policy.member_generators = false;
        policy.single_variables = false;
    } else if (!witness_text.empty()) {
        policy.user_supplied = parse_polynomial_list(witness_text, vars, ord);
    }
    ClosureCaps caps{a.max_members, a.max_iterations};

    if (a.ring.characteristic == 0) {
        return report_closure(knutson_closure(seed, ord, policy, caps), a.out_path);
    }
    return report_closure(
        knutson_family_mod_p(seed, a.ring.characteristic, policy, caps), a.out_path);
}

// ---------------------------------------------------------------------
// modp compare / scan.

void print_reduction_report(const ReductionReport& r) {
    if (r.match) {
        std::printf("p=%llu  match\n", static_cast<unsigned long long>(r.p));
    } else if (!r.good) {
        std::printf("p=%llu  bad (%s)\n", static_cast<unsigned long long>(r.p),
                    r.reason.c_str());
    } else {
        std::printf("p=%llu  MISMATCH\n", static_cast<unsigned long long>(r.p));
    }
}

json reduction_json(const ReductionReport& r) {
    json j;
    j["p"] = r.p;
    j["good"] = r.good;
    j["match"] = r.match;
    j["reason"] = r.reason;
    j["lt_of_reduction"] = r.lt_of_reduction.str();
    j["reduction_of_lt"] = r.reduction_of_lt.str();
    return j;
}

Ideal<Rational> rational_ideal_arg(const std::string& spec, RingSpec ring,
                                   const TermOrderPtr& ord) {
    std::string text = resolve_spec(spec);
    if (ring.vars == 0) ring.vars = scan_max_var(text);
    return Ideal<Rational>(ring.vars, ord, parse_polynomial_list(text, ring.vars, ord));
}

int report_scan(const std::vector<ReductionReport>& reports,
                const std::string& json_path) {
    std::size_t flagged = 0;
    json arr = json::array();
    for (const auto& r : reports) {
        print_reduction_report(r);
        arr.push_back(reduction_json(r));
        if (!r.match) ++flagged;
    }
    std::printf("%zu of %zu primes flagged\n", flagged, reports.size());
    json j;
    j["reports"] = std::move(arr);
    j["flagged"] = flagged;
    write_json(json_path, j);
    return flagged == 0 ? kExitOk : kExitCheckFailed;
}

// ---------------------------------------------------------------------
// Suites and hankel verify.

int report_suite(const SuiteReport& rep, const std::string& json_path) {
    std::fputs(rep.table().c_str(), stdout);
    write_text(json_path, rep.json());
    return rep.ok() ? kExitOk : kExitCheckFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computer algebra: Groebner bases, Knutson closure "
                 "families, Hankel determinantal ideals, reduction mod p"};
    app.require_subcommand(1);
    app.add_flag("--timestamp", g_timestamp,
                 "add a timestamp field to JSON reports (off by default so "
                 "identical runs are byte-identical)");

    int rc = kExitOk;

    // --- algebra commands ------------------------------------------------
    AlgebraArgs alg;
    auto add_json = [&](CLI::App* cmd) {
        cmd->add_option("--json", alg.json_path, "write a JSON report to this path ('-' for stdout)");
    };
    auto one_ideal_cmd = [&](const char* name, const char* help) {
        CLI::App* cmd = app.add_subcommand(name, help);
        add_ring_flags(cmd, alg.ring);
        cmd->add_option("--gens", alg.gens, "generators: ';'-separated list, @file, or path")
            ->required();
        add_json(cmd);
        cmd->callback([&, name] { rc = run_algebra(name, alg); });
        return cmd;
    };
    auto two_ideal_cmd = [&](const char* name, const char* help) {
        CLI::App* cmd = app.add_subcommand(name, help);
        add_ring_flags(cmd, alg.ring);
        cmd->add_option("--left", alg.left, "left ideal: ';'-separated list, @file, or path")
            ->required();
        cmd->add_option("--right", alg.right, "right ideal: ';'-separated list, @file, or path")
            ->required();
        add_json(cmd);
        cmd->callback([&, name] { rc = run_algebra(name, alg); });
        return cmd;
    };

    one_ideal_cmd("gb", "reduced Groebner basis of an ideal");
    one_ideal_cmd("initial", "initial (leading-term) ideal of an ideal");
    one_ideal_cmd("hilbert", "h-vector, dimension, height and multiplicity of S/I");
    CLI::App* member = one_ideal_cmd("member", "ideal membership of a polynomial (exit 1 if not a member)");
    member->add_option("--poly", alg.poly, "the polynomial to test")->required();
    two_ideal_cmd("equal", "ideal equality (exit 1 if different)");
    two_ideal_cmd("sum", "reduced Groebner basis of the sum");
    two_ideal_cmd("intersect", "reduced Groebner basis of the intersection");
    two_ideal_cmd("colon", "reduced Groebner basis of the quotient (left : right)");

    // --- knutson-closure --------------------------------------------------
    ClosureArgs clo;
    {
        CLI::App* cmd = app.add_subcommand(
            "knutson-closure", "close a seed under colon, sum and intersection "
                               "and certify the family");
        add_ring_flags(cmd, clo.ring);
        cmd->add_option("--seed", clo.seed, "seed polynomial (text or @file)")->required();
        cmd->add_option("--witnesses", clo.witnesses,
                        "colon witness policy: default | none | @file")
            ->capture_default_str();
        cmd->add_option("--max-members", clo.max_members, "member cap")
            ->capture_default_str();
        cmd->add_option("--max-iterations", clo.max_iterations, "iteration cap")
            ->capture_default_str();
        cmd->add_option("--out", clo.out_path, "write the JSON report to this path");
        cmd->callback([&] { rc = run_closure(clo); });
    }

    // --- hankel verify ----------------------------------------------------
    std::size_t hv_m = 2;
    std::string hv_shape = "square";
    std::uint64_t hv_char = 0;
    std::string hv_report;
    {
        CLI::App* hankel = app.add_subcommand("hankel", "Hankel determinantal ideals");
        hankel->require_subcommand(1);
        CLI::App* cmd = hankel->add_subcommand(
            "verify", "verify invariants, decompositions and closure membership");
        cmd->add_option("--m", hv_m, "row count of the Hankel matrix")->required();
        cmd->add_option("--shape", hv_shape, "square (m x m) or rect (m x (m+1))")
            ->check(CLI::IsMember({"square", "rect"}))
            ->capture_default_str();
        cmd->add_option("--char", hv_char, "0 for Q, a prime p for F_p")
            ->capture_default_str();
        cmd->add_option("--report", hv_report, "write the JSON report to this path");
        cmd->callback([&] {
            rc = report_suite(run_hankel_verify(hv_m, hv_shape == "square", hv_char),
                              hv_report);
        });
    }

    // --- modp compare / scan ----------------------------------------------
    RingSpec modp_ring;
    std::string modp_ideal;
    std::vector<std::uint64_t> modp_primes;
    std::uint64_t modp_upto = 200;
    std::uint64_t modp_max_prime = SuiteLimits{}.max_scan_prime;
    std::string modp_json;
    {
        CLI::App* modp = app.add_subcommand("modp", "reduction modulo a prime");
        modp->require_subcommand(1);

        CLI::App* cmp = modp->add_subcommand(
            "compare", "compare initial ideals before and after reduction at "
                       "chosen primes (exit 1 on any mismatch)");
        add_ring_flags(cmp, modp_ring);
        cmp->add_option("--ideal", modp_ideal,
                        "rational ideal: ';'-separated list, @file, or path")
            ->required();
        cmp->add_option("--primes", modp_primes, "primes to test, comma-separated")
            ->required()
            ->delimiter(',');
        cmp->add_option("--json", modp_json, "write a JSON report to this path");
        cmp->callback([&] {
            TermOrderPtr ord = make_order(modp_ring.order);
            Ideal<Rational> ideal = rational_ideal_arg(modp_ideal, modp_ring, ord);
            rc = report_scan(prime_scan(ideal, modp_primes, ord), modp_json);
        });

        CLI::App* scan = modp->add_subcommand(
            "scan", "scan every prime up to a bound (exit 1 on any mismatch)");
        add_ring_flags(scan, modp_ring);
        scan->add_option("--ideal", modp_ideal,
                         "rational ideal: ';'-separated list, @file, or path")
            ->required();
        scan->add_option("--upto", modp_upto, "scan primes p <= this bound")
            ->capture_default_str();
        scan->add_option("--max-prime", modp_max_prime, "desk-scale bound on --upto")
            ->capture_default_str();
        scan->add_option("--json", modp_json, "write a JSON report to this path");
        scan->callback([&] {
            if (modp_upto > modp_max_prime) {
                throw DeskScaleGuard("scan bound " + std::to_string(modp_upto) +
                                     " exceeds the desk-scale limit " +
                                     std::to_string(modp_max_prime));
            }
            TermOrderPtr ord = make_order(modp_ring.order);
            Ideal<Rational> ideal = rational_ideal_arg(modp_ideal, modp_ring, ord);
            rc = report_scan(prime_scan(ideal, primes_up_to(modp_upto), ord),
                             modp_json);
        });
    }

    // --- suites -------------------------------------------------------------
    std::size_t suite_m = 2, suite_n = 3;
    SuiteLimits limits;
    std::string suite_json;
    {
        CLI::App* suite = app.add_subcommand("suite", "named reproduction suites "
                                                      "(exit 1 on any failed check)");
        suite->require_subcommand(1);

        CLI::App* sq = suite->add_subcommand("hankel-square",
                                             "the m x m Hankel pipeline over Q and F_101");
        sq->add_option("--m", suite_m, "row count")->required();
        sq->add_option("--max-m", limits.max_square_m, "desk-scale bound on --m")
            ->capture_default_str();
        sq->add_option("--json", suite_json, "write the JSON report to this path");
        sq->callback([&] { rc = report_suite(run_suite_hankel_square(suite_m, limits),
                                             suite_json); });

        CLI::App* rect = suite->add_subcommand("hankel-rect",
                                               "the m x (m+1) Hankel pipeline");
        rect->add_option("--m", suite_m, "row count")->required();
        rect->add_option("--max-m", limits.max_rect_m, "desk-scale bound on --m")
            ->capture_default_str();
        rect->add_option("--json", suite_json, "write the JSON report to this path");
        rect->callback([&] { rc = report_suite(run_suite_hankel_rect(suite_m, limits),
                                               suite_json); });

        CLI::App* mp = suite->add_subcommand("modp", "reduction-compatibility suite");
        mp->add_option("--json", suite_json, "write the JSON report to this path");
        mp->callback([&] { rc = report_suite(run_suite_modp(limits), suite_json); });

        CLI::App* mono = suite->add_subcommand(
            "squarefree-monomial", "closure of x1*...*xn against the antichain census");
        mono->add_option("--n", suite_n, "number of variables")->required();
        mono->add_option("--max-n", limits.max_monomial_n, "desk-scale bound on --n")
            ->capture_default_str();
        mono->add_option("--json", suite_json, "write the JSON report to this path");
        mono->callback([&] {
            rc = report_suite(run_suite_squarefree_monomial(suite_n, limits), suite_json);
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    } catch (const DeskScaleGuard& e) {
        std::fprintf(stderr, "refused: %s\n", e.what());
        return kExitUsage;
    } catch (const CapExceeded& e) {
        std::fprintf(stderr, "cap exceeded: %s\n", e.what());
        return kExitCapExceeded;
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    }
    return rc;
}
