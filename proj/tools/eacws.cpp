#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "eacws/ea_reduction.hpp"
#include "eacws/fixtures.hpp"
#include "eacws/pipeline.hpp"

namespace {

using namespace eacws;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerifyFail = 2;
constexpr int kExitBudget = 3;

struct ConstructArgs {
    std::size_t n = 0;
    std::size_t c = 0;
    std::size_t d = 3;
    std::string graph = "ring";
    std::string edges;
};

void add_construct_flags(CLI::App* cmd, ConstructArgs& a) {
    cmd->add_option("--n", a.n, "sender qubit count")->required();
    cmd->add_option("--c", a.c, "ebit count (default 0)");
    cmd->add_option("--d", a.d, "target distance, odd and >= 3 (default 3)");
    cmd->add_option("--graph", a.graph, "graph kind: ring or custom (default ring)");
    cmd->add_option("--edges", a.edges, "custom graph edges as a-b,c-d with 0-based vertices");
}

GraphSpec parse_graph(const ConstructArgs& a) {
    if (a.graph == "ring") {
        if (!a.edges.empty()) throw std::invalid_argument("--edges applies only to --graph custom");
        return ring_graph(a.n);
    }
    if (a.graph != "custom") throw std::invalid_argument("unknown graph kind: " + a.graph);
    if (a.edges.empty()) throw std::invalid_argument("--graph custom requires --edges");
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::stringstream ss(a.edges);
    std::string token;
    while (std::getline(ss, token, ',')) {
        auto dash = token.find('-');
        if (dash == std::string::npos || dash == 0 || dash + 1 == token.size())
            throw std::invalid_argument("bad edge token '" + token + "', expected a-b");
        edges.emplace_back(std::stoul(token.substr(0, dash)), std::stoul(token.substr(dash + 1)));
    }
    return custom_graph(a.n, std::move(edges));
}

std::vector<std::size_t> parse_columns(const std::string& csv) {
    std::vector<std::size_t> cols;
    std::stringstream ss(csv);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (token.empty()) throw std::invalid_argument("empty entry in column list");
        cols.push_back(std::stoul(token));
    }
    return cols;
}

std::string resolve_catalog_dir(const std::string& flag) {
    if (!flag.empty()) return flag;
    if (const char* env = std::getenv("EACWS_CATALOG"); env && *env) return env;
    return "catalog";
}

std::string yn(bool v) { return v ? "yes" : "no"; }

std::string construction_text(const ConstructedCode& cc) {
    std::ostringstream os;
    const auto& layout = cc.layout;
    os << "layout: n=" << layout.n << " sender qubits, c=" << layout.c
       << " ebits, d=" << cc.d << ", graph=" << cc.graph.kind << "\n";
    os << "generators g (" << cc.generators.g.size() << "):\n";
    for (std::size_t i = 0; i < cc.generators.g.size(); ++i)
        os << "  g" << i + 1 << " = " << format_pauli(cc.generators.g[i]) << "\n";
    if (layout.c == 0) {
        os << "no h generators (c = 0)\n";
    } else {
        os << "generators h (" << cc.generators.h.size() << "):\n";
        for (std::size_t j = 0; j < cc.generators.h.size(); ++j)
            os << "  h" << j + 1 << " = " << format_pauli(cc.generators.h[j]) << "\n";
    }
    os << "effective errors: " << cc.catalog.distinct_nonzero()
       << " distinct nonidentity patterns from " << cc.error_set.size()
       << " enumerated errors (identity included):\n";
    for (const auto& [err, eff] : cc.catalog.entries)
        os << "  " << format_pauli(err) << " -> " << eff.pattern.str_split(layout.n) << "\n";
    os << "equivalence pairs (" << cc.catalog.equivalence_pairs.size() << "):\n";
    for (const auto& [receiver, sender] : cc.catalog.equivalence_pairs)
        os << "  " << format_pauli(receiver) << " == " << format_pauli(sender) << "\n";
    os << "conflict set: " << cc.conflicts.forbidden.size() << " forbidden difference patterns\n";
    return os.str();
}

void print_verification(std::ostream& os, const VerificationInfo& v) {
    if (!v.checked) {
        os << "verification: not run\n";
        return;
    }
    os << "verification:\n";
    os << "  classical conflict-free:          " << yn(v.classical_conflict_free) << "\n";
    os << "  gram matrix is identity:          " << yn(v.gram_identity) << "\n";
    if (!v.gram_identity) return;
    os << "  recovery, full single-error set:  " << (v.kl_single_errors_pass ? "pass" : "FAIL") << "\n";
    if (!v.kl_single_errors_pass)
        os << "    first violation: " << v.kl_first_violation << "\n";
    os << "  certified distance, all qubits:   ";
    if (v.distance_exact)
        os << "exactly " << v.certified_distance << " (witness " << v.distance_witness << ")\n";
    else
        os << ">= " << v.certified_distance << "\n";
    os << "  recovery, sender-side model:      " << (v.kl_sender_model_pass ? "pass" : "FAIL") << "\n";
    os << "  certified distance, sender side:  ";
    if (v.distance_sender_exact)
        os << "exactly " << v.certified_distance_sender << " (witness " << v.distance_sender_witness
           << ")\n";
    else
        os << ">= " << v.certified_distance_sender << "\n";
}

bool verification_passes(const VerificationInfo& v, std::size_t d, const std::string& model) {
    if (!v.checked || !v.classical_conflict_free || !v.gram_identity) return false;
    if (model == "sender")
        return v.kl_sender_model_pass && v.certified_distance_sender >= d;
    return v.kl_single_errors_pass && v.certified_distance >= d;
}

std::string verification_summary(const VerificationInfo& v, std::size_t d) {
    if (!v.checked) return "unchecked";
    if (!v.classical_conflict_free) return "fail(classical)";
    if (!v.gram_identity) return "fail(gram)";
    if (!v.kl_single_errors_pass) return "fail(recovery)";
    if (v.certified_distance < d) return "fail(distance)";
    return "pass";
}

int run_construct(const ConstructArgs& a, const std::string& out) {
    auto cc = construct_code(a.n, a.c, parse_graph(a), a.d);
    std::string text = construction_text(cc);
    std::cout << text;
    if (!out.empty()) {
        write_text_file(out, text);
        std::cout << "written to " << out << "\n";
    }
    return kExitOk;
}

struct SearchArgs {
    ConstructArgs ca;
    unsigned jobs = 1;
    std::uint64_t budget_nodes = 0;
    std::uint64_t budget_millis = 0;
    bool exact = false;
    bool no_verify = false;
    std::string name, out, catalog_dir;
    std::string provenance = "search output";
};

int run_search(const SearchArgs& s) {
    if (s.exact && (s.budget_nodes || s.budget_millis))
        throw std::invalid_argument("--exact conflicts with --budget-nodes/--budget-millis");
    auto cc = construct_code(s.ca.n, s.ca.c, parse_graph(s.ca), s.ca.d);
    SearchOptions opts;
    opts.jobs = s.jobs;
    opts.budget = SearchBudget{s.budget_nodes, s.budget_millis};
    auto sr = max_clique_code(cc.conflicts, opts);

    bool verify = !s.no_verify;
    if (verify && cc.layout.total() > kMaxDenseQubits) {
        std::cout << "note: dense verification skipped, n+c exceeds " << kMaxDenseQubits
                  << " qubits\n";
        verify = false;
    }
    std::string name = s.name;
    if (name.empty()) {
        std::ostringstream os;
        os << cc.graph.kind << "-n" << cc.layout.n << "-c" << cc.layout.c << "-d" << cc.d;
        name = os.str();
    }
    auto rec = make_record(cc, sr, name, s.provenance, verify);
    std::string path = s.out;
    if (path.empty())
        path = (std::filesystem::path(resolve_catalog_dir(s.catalog_dir)) / (name + ".json")).string();
    write_text_file(path, record_to_json(rec));

    std::cout << "search: K=" << rec.K << " exact=" << yn(sr.exact) << " nodes=" << sr.nodes << "\n";
    print_verification(std::cout, rec.verification);
    std::cout << "record written to " << path << "\n";
    if (!sr.exact) {
        std::cout << "budget exhausted; record flagged non-exact\n";
        return kExitBudget;
    }
    return kExitOk;
}

CodeRecord load_record_target(const std::string& target) {
    if (std::filesystem::is_regular_file(target)) return record_from_json(read_text_file(target));
    return load_fixture_record(target);
}

int run_verify(const std::string& target, const std::string& model, double tol) {
    if (model != "combined" && model != "sender")
        throw std::invalid_argument("--error-model must be combined or sender");
    auto rec = load_record_target(target);
    std::cout << "record: " << rec.name << " ((" << rec.n << "," << rec.K << "," << rec.d << ";"
              << rec.c << "))\n";
    VerificationInfo v;
    try {
        v = verify_record(rec, tol);
    } catch (const std::runtime_error& e) {
        std::cout << "structural check failed: " << e.what() << "\n";
        std::cout << "RESULT: FAIL (" << model << " model)\n";
        return kExitVerifyFail;
    }
    print_verification(std::cout, v);
    bool pass = verification_passes(v, rec.d, model);
    std::cout << "RESULT: " << (pass ? "pass" : "FAIL") << " (" << model << " model)\n";
    return pass ? kExitOk : kExitVerifyFail;
}

int run_equiv(const std::string& target, const std::string& ebits_csv) {
    CheckMatrix cm;
    if (std::filesystem::is_regular_file(target))
        cm = parse_check_matrix(read_text_file(target));
    else
        cm = load_fixture_check_matrix(target);
    validate_check_matrix(cm);

    std::vector<std::size_t> columns;
    if (!ebits_csv.empty()) {
        columns = parse_columns(ebits_csv);
    } else {
        // A column already in reduced form is touched by exactly two rows:
        // one X-only and one Z-only on that column.
        for (std::size_t e = 0; e < cm.n; ++e) {
            std::size_t x_only = 0, z_only = 0, other = 0;
            for (std::size_t r = 0; r < cm.rows(); ++r) {
                bool x = cm.hx.rows[r].get(e), z = cm.hz.rows[r].get(e);
                if (x && !z)
                    ++x_only;
                else if (z && !x)
                    ++z_only;
                else if (x && z)
                    ++other;
            }
            if (x_only == 1 && z_only == 1 && other == 0) columns.push_back(e);
        }
        if (columns.empty())
            throw std::invalid_argument(
                "no reduced-form columns detected; specify --ebits with 0-based column indices");
    }

    auto red = reduce_check_matrix(cm, columns);
    std::cout << "input: " << cm.rows() << " rows on n=" << cm.n << " qubits\n";
    std::cout << "ebit columns (0-based):";
    for (auto e : red.ebit_columns) std::cout << " " << e;
    std::cout << "  -> c = " << red.c << "\n";
    bool unchanged = format_check_matrix(red.reduced) == format_check_matrix(cm);
    if (unchanged)
        std::cout << "input already in reduced form; no row operations needed\n";
    else
        std::cout << "reduced matrix:\n" << format_check_matrix(red.reduced);
    std::cout << "generators on the (n-c, c) layout:\n";
    for (std::size_t j = 0; j < red.c; ++j)
        std::cout << "  h'" << j + 1 << " = " << format_pauli(red.h_rows[j]) << "\n";
    for (std::size_t j = 0; j < red.c; ++j)
        std::cout << "  g'" << j + 1 << " = " << format_pauli(red.g_rows[j]) << "\n";
    for (std::size_t r = 0; r < red.remainder.size(); ++r)
        std::cout << "  s" << r + 1 << "  = " << format_pauli(red.remainder[r]) << "\n";
    try {
        verify_reduction(red, cm);
    } catch (const std::runtime_error& e) {
        std::cout << "verify_reduction: FAIL: " << e.what() << "\n";
        return kExitVerifyFail;
    }
    std::cout << "verify_reduction: ok (row space preserved, truncated pairing checked)\n";
    return kExitOk;
}

int run_catalog_list(const std::string& dir) {
    auto entries = catalog_list(dir);
    if (entries.empty()) {
        std::cout << "no records in " << dir << "\n";
        return kExitOk;
    }
    for (const auto& entry : entries) {
        const auto& r = entry.record;
        std::cout << "((" << r.n << "," << r.K << "," << r.d << ";" << r.c << "))  " << r.name
                  << "  search=" << (r.search.exact ? "exact" : "budgeted")
                  << "  verification=" << verification_summary(r.verification, r.d) << "  "
                  << entry.file << "\n";
    }
    return kExitOk;
}

int run_catalog_show(const std::string& dir, const std::string& name) {
    for (const auto& entry : catalog_list(dir)) {
        if (entry.record.name == name) {
            std::cout << read_text_file(entry.file);
            return kExitOk;
        }
    }
    throw std::invalid_argument("no record named '" + name + "' in " + dir);
}

int run_catalog_export(const std::string& dir, const std::string& out) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& entry : catalog_list(dir))
        arr.push_back(nlohmann::ordered_json::parse(record_to_json(entry.record)));
    std::string text = arr.dump(2) + "\n";
    if (out.empty())
        std::cout << text;
    else {
        write_text_file(out, text);
        std::cout << "exported " << arr.size() << " records to " << out << "\n";
    }
    return kExitOk;
}

int run_catalog_import(const std::string& dir, const std::string& file) {
    auto j = nlohmann::ordered_json::parse(read_text_file(file));
    std::vector<CodeRecord> records;
    if (j.is_array()) {
        for (const auto& item : j) records.push_back(record_from_json(item.dump()));
    } else {
        records.push_back(record_from_json(j.dump()));
    }
    for (const auto& rec : records) {
        auto path = (std::filesystem::path(dir) / (rec.name + ".json")).string();
        write_text_file(path, record_to_json(rec));
        std::cout << "imported " << rec.name << " -> " << path << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"entanglement-assisted codeword-stabilized code toolkit"};
    app.require_subcommand(1);
    int rc = kExitOk;

    ConstructArgs construct_args;
    std::string construct_out;
    auto* cmd_construct =
        app.add_subcommand("construct", "build generators, effective errors and the conflict set");
    add_construct_flags(cmd_construct, construct_args);
    cmd_construct->add_option("--out", construct_out, "also write the printout to this file");
    cmd_construct->callback([&] { rc = run_construct(construct_args, construct_out); });

    SearchArgs search_args;
    auto* cmd_search =
        app.add_subcommand("search", "run the clique search and write a code record");
    add_construct_flags(cmd_search, search_args.ca);
    cmd_search->add_option("--jobs", search_args.jobs, "worker threads for the bounding phase");
    cmd_search->add_option("--budget-nodes", search_args.budget_nodes,
                           "node budget, 0 = unlimited");
    cmd_search->add_option("--budget-millis", search_args.budget_millis,
                           "time budget in milliseconds, 0 = unlimited");
    cmd_search->add_flag("--exact", search_args.exact,
                         "insist on exact mode (the default); conflicts with budgets");
    cmd_search->add_flag("--no-verify", search_args.no_verify, "skip the dense-state verification");
    cmd_search->add_option("--name", search_args.name, "record name (default <graph>-n<n>-c<c>-d<d>)");
    cmd_search->add_option("--out", search_args.out, "record path (default <catalog-dir>/<name>.json)");
    cmd_search->add_option("--catalog-dir", search_args.catalog_dir,
                           "catalog directory (default ./catalog, env EACWS_CATALOG)");
    cmd_search->add_option("--provenance", search_args.provenance, "provenance note for the record");
    cmd_search->callback([&] { rc = run_search(search_args); });

    std::string verify_target, verify_model = "combined";
    double verify_tol = 1e-9;
    auto* cmd_verify = app.add_subcommand("verify", "re-verify a stored record or bundled fixture");
    cmd_verify->add_option("target", verify_target, "record file path or fixture name")->required();
    cmd_verify->add_option("--error-model", verify_model,
                           "combined (default) or sender: which model gates the result");
    cmd_verify->add_option("--tol", verify_tol, "numeric tolerance (default 1e-9)");
    cmd_verify->callback([&] { rc = run_verify(verify_target, verify_model, verify_tol); });

    std::string equiv_target, equiv_ebits;
    auto* cmd_equiv =
        app.add_subcommand("equiv", "reduce a check matrix into ebit-isolating block form");
    cmd_equiv->add_option("target", equiv_target, "check-matrix file path or fixture name")
        ->required();
    cmd_equiv->add_option("--ebits", equiv_ebits, "0-based ebit column indices, e.g. 3,4");
    cmd_equiv->callback([&] { rc = run_equiv(equiv_target, equiv_ebits); });

    std::string catalog_dir_flag, catalog_show_name, catalog_export_out, catalog_import_file;
    auto* cmd_catalog = app.add_subcommand("catalog", "operate on a directory of code records");
    cmd_catalog->add_option("--catalog-dir", catalog_dir_flag,
                            "catalog directory (default ./catalog, env EACWS_CATALOG)");
    cmd_catalog->require_subcommand(1);
    auto* cat_list = cmd_catalog->add_subcommand("list", "stable listing sorted by (n+c, K desc)");
    cat_list->callback([&] { rc = run_catalog_list(resolve_catalog_dir(catalog_dir_flag)); });
    auto* cat_show = cmd_catalog->add_subcommand("show", "print one record by name");
    cat_show->add_option("name", catalog_show_name, "record name")->required();
    cat_show->callback(
        [&] { rc = run_catalog_show(resolve_catalog_dir(catalog_dir_flag), catalog_show_name); });
    auto* cat_export = cmd_catalog->add_subcommand("export", "concatenate all records");
    cat_export->add_option("--out", catalog_export_out, "write to this file instead of stdout");
    cat_export->callback(
        [&] { rc = run_catalog_export(resolve_catalog_dir(catalog_dir_flag), catalog_export_out); });
    auto* cat_import = cmd_catalog->add_subcommand("import", "split an exported bundle into records");
    cat_import->add_option("file", catalog_import_file, "exported JSON bundle")->required();
    cat_import->callback(
        [&] { rc = run_catalog_import(resolve_catalog_dir(catalog_dir_flag), catalog_import_file); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return rc;
}
