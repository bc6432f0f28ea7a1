#include "nckit/report.hpp"

#include <chrono>

namespace nckit {

void Report::add_check(const std::string& name, double residual, double tol) {
    bool ok = residual <= tol;
    entries_.push_back({{"name", name}, {"residual", residual}, {"tol", tol},
                        {"pass", ok}});
    pass_ = pass_ && ok;
}

void Report::add_verdict(const std::string& name, const std::string& verdict, bool pass,
                         const std::string& note) {
    Json e = {{"name", name}, {"verdict", verdict}, {"pass", pass}};
    if (!note.empty()) e["note"] = note;
    entries_.push_back(std::move(e));
    pass_ = pass_ && pass;
}

void Report::add_out_of_scope(const std::string& name, const std::string& note) {
    entries_.push_back({{"name", name}, {"verdict", "out of scope"}, {"note", note}});
}

void Report::absorb(const ResidualReport& r, const std::string& prefix) {
    for (const auto& e : r.entries) add_check(prefix + e.name, e.residual, e.tol);
}

Json Report::to_json() const {
    Json j;
    j["tool"] = "nckit";
    j["version"] = kToolVersion;
    j["subcommand"] = subcommand_;
    if (timestamp_) {
        auto now = std::chrono::system_clock::now().time_since_epoch();
        j["timestamp"] = std::chrono::duration_cast<std::chrono::seconds>(now).count();
    }
    j["config"] = config_;
    for (auto it = payload_.begin(); it != payload_.end(); ++it) j[it.key()] = it.value();
    j["checks"] = entries_;
    j["pass"] = pass_;
    return j;
}

}  // namespace nckit
