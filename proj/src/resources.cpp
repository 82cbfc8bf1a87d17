#include "radtext/resources.hpp"

#include "radtext/errors.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>

namespace radtext::resources {

namespace fs = std::filesystem;

namespace {

std::mutex g_mutex;
std::string g_resource_dir;

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open resource file \"" + path.string() + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

std::string embedded(const std::string& name) {
    for (std::size_t i = 0; i < kEmbeddedFileCount; ++i) {
        if (name == kEmbeddedFiles[i].name)
            return std::string(reinterpret_cast<const char*>(kEmbeddedFiles[i].data),
                               kEmbeddedFiles[i].size);
    }
    throw ConfigError("no bundled resource named \"" + name + "\"");
}

std::vector<std::string> embedded_names() {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < kEmbeddedFileCount; ++i) names.emplace_back(kEmbeddedFiles[i].name);
    return names;
}

std::string resource_dir() {
    std::lock_guard<std::mutex> lock(g_mutex);
    if (!g_resource_dir.empty()) return g_resource_dir;
    if (const char* env = std::getenv("RADTEXT_RESOURCES")) return env;
    return {};
}

void set_resource_dir(const std::string& dir) {
    std::lock_guard<std::mutex> lock(g_mutex);
    g_resource_dir = dir;
}

std::string load(const std::string& name, const std::string& explicit_path) {
    if (!explicit_path.empty()) return read_file(explicit_path);
    const std::string dir = resource_dir();
    if (!dir.empty()) {
        fs::path candidate = fs::path(dir) / name;
        if (fs::exists(candidate)) return read_file(candidate);
    }
    return embedded(name);
}

std::vector<std::string> install_all(const std::string& dir) {
    std::vector<std::string> written;
    for (std::size_t i = 0; i < kEmbeddedFileCount; ++i) {
        fs::path target = fs::path(dir) / kEmbeddedFiles[i].name;
        fs::create_directories(target.parent_path());
        std::ofstream out(target, std::ios::binary);
        if (!out) throw ConfigError("cannot write resource file \"" + target.string() + "\"");
        out.write(reinterpret_cast<const char*>(kEmbeddedFiles[i].data),
                  static_cast<std::streamsize>(kEmbeddedFiles[i].size));
        written.push_back(target.string());
    }
    return written;
}

} // namespace radtext::resources
