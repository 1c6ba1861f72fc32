#include "eacws/record.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace eacws {

namespace {

using json = nlohmann::ordered_json;

json graph_to_json(const GraphSpec& g) {
    json edges = json::array();
    for (auto [a, b] : g.edges) edges.push_back(json::array({a, b}));
    return json{{"kind", g.kind}, {"n", g.n}, {"edges", std::move(edges)}};
}

GraphSpec graph_from_json(const json& j) {
    GraphSpec g;
    g.kind = j.at("kind").get<std::string>();
    g.n = j.at("n").get<std::size_t>();
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("graph edge must be a two-element array");
        g.edges.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
    }
    return g;
}

json verification_to_json(const VerificationInfo& v) {
    json j;
    j["checked"] = v.checked;
    if (!v.checked) return j;
    j["classical_conflict_free"] = v.classical_conflict_free;
    j["gram_identity"] = v.gram_identity;
    j["kl_single_errors_pass"] = v.kl_single_errors_pass;
    j["kl_first_violation"] = v.kl_first_violation;
    j["certified_distance"] = v.certified_distance;
    j["distance_exact"] = v.distance_exact;
    j["distance_witness"] = v.distance_witness;
    j["kl_sender_model_pass"] = v.kl_sender_model_pass;
    j["certified_distance_sender"] = v.certified_distance_sender;
    j["distance_sender_exact"] = v.distance_sender_exact;
    j["distance_sender_witness"] = v.distance_sender_witness;
    return j;
}

VerificationInfo verification_from_json(const json& j) {
    VerificationInfo v;
    v.checked = j.value("checked", false);
    if (!v.checked) return v;
    v.classical_conflict_free = j.value("classical_conflict_free", false);
    v.gram_identity = j.value("gram_identity", false);
    v.kl_single_errors_pass = j.value("kl_single_errors_pass", false);
    v.kl_first_violation = j.value("kl_first_violation", std::string{});
    v.certified_distance = j.value("certified_distance", std::size_t{0});
    v.distance_exact = j.value("distance_exact", false);
    v.distance_witness = j.value("distance_witness", std::string{});
    v.kl_sender_model_pass = j.value("kl_sender_model_pass", false);
    v.certified_distance_sender = j.value("certified_distance_sender", std::size_t{0});
    v.distance_sender_exact = j.value("distance_sender_exact", false);
    v.distance_sender_witness = j.value("distance_sender_witness", std::string{});
    return v;
}

}  // namespace

std::string record_to_json(const CodeRecord& rec) {
    json j;
    j["schema"] = rec.schema;
    j["name"] = rec.name;
    j["n"] = rec.n;
    j["c"] = rec.c;
    j["K"] = rec.K;
    j["d"] = rec.d;
    j["graph"] = graph_to_json(rec.graph);
    j["generators"] = json{{"g", rec.generators_g}, {"h", rec.generators_h}};
    j["codewords"] = rec.codewords;
    json ops = json::array();
    for (const auto& op : rec.word_operators)
        ops.push_back(json{{"codeword", op.codeword}, {"pre", op.pre}, {"post", op.post}});
    j["word_operators"] = std::move(ops);
    j["search"] = json{{"exact", rec.search.exact},
                       {"nodes", rec.search.nodes},
                       {"budget_exhausted", rec.search.budget_exhausted}};
    j["verification"] = verification_to_json(rec.verification);
    j["provenance"] = rec.provenance;
    return j.dump(2) + "\n";
}

CodeRecord record_from_json(const std::string& text) {
    json j = json::parse(text);
    CodeRecord rec;
    rec.schema = j.at("schema").get<int>();
    if (rec.schema != 1) {
        std::ostringstream os;
        os << "unsupported record schema " << rec.schema;
        throw std::invalid_argument(os.str());
    }
    rec.name = j.at("name").get<std::string>();
    rec.n = j.at("n").get<std::size_t>();
    rec.c = j.at("c").get<std::size_t>();
    rec.K = j.at("K").get<std::size_t>();
    rec.d = j.at("d").get<std::size_t>();
    rec.graph = graph_from_json(j.at("graph"));
    rec.generators_g = j.at("generators").at("g").get<std::vector<std::string>>();
    rec.generators_h = j.at("generators").at("h").get<std::vector<std::string>>();
    rec.codewords = j.at("codewords").get<std::vector<std::string>>();
    for (const auto& op : j.value("word_operators", json::array())) {
        rec.word_operators.push_back(WordOpRecord{op.at("codeword").get<std::string>(),
                                                  op.at("pre").get<std::string>(),
                                                  op.at("post").get<std::string>()});
    }
    if (j.contains("search")) {
        const auto& s = j["search"];
        rec.search.exact = s.value("exact", true);
        rec.search.nodes = s.value("nodes", std::uint64_t{0});
        rec.search.budget_exhausted = s.value("budget_exhausted", false);
    }
    if (j.contains("verification")) rec.verification = verification_from_json(j["verification"]);
    rec.provenance = j.value("provenance", std::string{});
    return rec;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::filesystem::path target(path);
    if (target.has_parent_path()) std::filesystem::create_directories(target.parent_path());
    std::filesystem::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        out << content;
        if (!out) throw std::runtime_error("failed writing " + tmp.string());
    }
    std::filesystem::rename(tmp, target);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::vector<CatalogEntry> catalog_list(const std::string& dir) {
    std::vector<CatalogEntry> entries;
    if (!std::filesystem::is_directory(dir)) return entries;
    for (const auto& item : std::filesystem::directory_iterator(dir)) {
        if (!item.is_regular_file() || item.path().extension() != ".json") continue;
        try {
            entries.push_back(
                CatalogEntry{item.path().string(), record_from_json(read_text_file(item.path().string()))});
        } catch (const std::exception& e) {
            throw std::runtime_error(item.path().string() + ": " + e.what());
        }
    }
    std::sort(entries.begin(), entries.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
        auto ka = a.record.n + a.record.c, kb = b.record.n + b.record.c;
        if (ka != kb) return ka < kb;
        if (a.record.K != b.record.K) return a.record.K > b.record.K;
        return a.record.name < b.record.name;
    });
    return entries;
}

}  // namespace eacws
