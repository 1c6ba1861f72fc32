#include "eacws/fixtures.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <stdexcept>

namespace eacws {

#ifndef EACWS_SOURCE_FIXTURE_DIR
#define EACWS_SOURCE_FIXTURE_DIR ""
#endif

std::string fixture_dir(const std::string& override_dir) {
    if (!override_dir.empty()) return override_dir;
    if (const char* env = std::getenv("EACWS_FIXTURES"); env && *env) return env;
    std::string local = "data/fixtures";
    if (std::filesystem::is_directory(local)) return local;
    std::string baked = EACWS_SOURCE_FIXTURE_DIR;
    if (!baked.empty() && std::filesystem::is_directory(baked)) return baked;
    return local;
}

std::vector<std::string> fixture_names(const std::string& override_dir) {
    std::vector<std::string> names;
    std::string dir = fixture_dir(override_dir);
    if (!std::filesystem::is_directory(dir)) return names;
    for (const auto& item : std::filesystem::directory_iterator(dir)) {
        if (!item.is_regular_file()) continue;
        auto ext = item.path().extension();
        if (ext == ".json" || ext == ".txt") names.push_back(item.path().stem().string());
    }
    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());
    return names;
}

CodeRecord load_fixture_record(const std::string& name, const std::string& override_dir) {
    auto path = std::filesystem::path(fixture_dir(override_dir)) / (name + ".json");
    return record_from_json(read_text_file(path.string()));
}

CheckMatrix load_fixture_check_matrix(const std::string& name, const std::string& override_dir) {
    auto path = std::filesystem::path(fixture_dir(override_dir)) / (name + ".txt");
    return parse_check_matrix(read_text_file(path.string()));
}

}  // namespace eacws
