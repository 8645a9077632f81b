#pragma once

#include "mzv/ball.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace mzv {

// Constant store keyed by (canonical index string, precision bits).  A
// lower-precision entry never serves a higher-precision request.  When bound
// to a directory, entries append to an append-only JSON-lines file:
//   {"key":"z(3,9)","prec_bits":256,"mid":"<decimal>","rad_log2":-200}
class ConstantCache {
public:
    ConstantCache() = default;
    ConstantCache(ConstantCache&& o) noexcept
        : mem_(std::move(o.mem_)), file_(std::move(o.file_)) {}
    ConstantCache& operator=(ConstantCache&& o) noexcept {
        if (this != &o) {
            mem_ = std::move(o.mem_);
            file_ = std::move(o.file_);
        }
        return *this;
    }

    static std::filesystem::path file_in(const std::filesystem::path& dir) {
        return dir / "constants.jsonl";
    }

    // Loads any existing file; malformed lines are skipped.
    static ConstantCache bind_dir(const std::filesystem::path& dir) {
        ConstantCache c;
        c.file_ = file_in(dir);
        std::ifstream in(c.file_);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            auto j = nlohmann::json::parse(line, nullptr, false);
            if (j.is_discarded() || !j.contains("key") || !j.contains("prec_bits") ||
                !j.contains("mid") || !j.contains("rad_log2"))
                continue;
            long bits = j["prec_bits"].get<long>();
            Ball b = Ball::from_mid_str(j["mid"].get<std::string>(), j["rad_log2"].get<long>(),
                                        static_cast<mpfr_prec_t>(bits));
            c.mem_.insert_or_assign({j["key"].get<std::string>(), bits}, std::move(b));
        }
        return c;
    }

    std::optional<Ball> lookup(const std::string& key, mpfr_prec_t min_bits) const {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = mem_.lower_bound({key, static_cast<long>(min_bits)});
        if (it != mem_.end() && it->first.first == key) return it->second;
        return std::nullopt;
    }

    void store(const std::string& key, mpfr_prec_t bits, const Ball& b) {
        std::lock_guard<std::mutex> lock(mu_);
        auto [it, inserted] = mem_.insert_or_assign({key, static_cast<long>(bits)}, b);
        if (!inserted) return;
        if (file_.empty()) return;
        std::error_code ec;
        std::filesystem::create_directories(file_.parent_path(), ec);
        std::ofstream out(file_, std::ios::app);
        nlohmann::ordered_json j;
        j["key"] = key;
        j["prec_bits"] = static_cast<long>(bits);
        j["mid"] = b.mid_str();
        j["rad_log2"] = b.rad_log2_ceil();
        out << j.dump() << "\n";
    }

    std::size_t entry_count() const {
        std::lock_guard<std::mutex> lock(mu_);
        return mem_.size();
    }
    std::size_t key_count() const {
        std::lock_guard<std::mutex> lock(mu_);
        std::size_t n = 0;
        std::string last;
        for (const auto& [k, b] : mem_) {
            if (n == 0 || k.first != last) {
                ++n;
                last = k.first;
            }
        }
        return n;
    }
    const std::filesystem::path& file() const { return file_; }

    std::vector<std::tuple<std::string, long, Ball>> entries() const {
        std::lock_guard<std::mutex> lock(mu_);
        std::vector<std::tuple<std::string, long, Ball>> out;
        out.reserve(mem_.size());
        for (const auto& [k, b] : mem_) out.emplace_back(k.first, k.second, b);
        return out;
    }

    void discard_all() {
        std::lock_guard<std::mutex> lock(mu_);
        mem_.clear();
    }

    static void clear_dir(const std::filesystem::path& dir) {
        std::error_code ec;
        std::filesystem::remove(file_in(dir), ec);
    }

private:
    mutable std::mutex mu_;
    std::map<std::pair<std::string, long>, Ball> mem_;
    std::filesystem::path file_;
};

}  // namespace mzv
