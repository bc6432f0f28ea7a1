#pragma once

#include <string>

#include "nckit/json_io.hpp"
#include "nckit/numerics.hpp"

namespace nckit {

inline constexpr const char* kToolVersion = "0.1.0";

/// Consolidated check report with deterministic field order. Overall PASS
/// iff every entry passes; out-of-scope entries are informational only.
class Report {
public:
    explicit Report(std::string subcommand) : subcommand_(std::move(subcommand)) {}

    void set_config(Json config) { config_ = std::move(config); }
    void set_timestamp_enabled(bool on) { timestamp_ = on; }
    void set_payload(const std::string& key, Json value) { payload_[key] = std::move(value); }

    void add_check(const std::string& name, double residual, double tol);
    void add_verdict(const std::string& name, const std::string& verdict, bool pass,
                     const std::string& note = "");
    void add_out_of_scope(const std::string& name, const std::string& note);
    void absorb(const ResidualReport& r, const std::string& prefix = "");

    bool pass() const { return pass_; }
    Json to_json() const;

private:
    std::string subcommand_;
    Json config_ = Json::object();
    Json payload_ = Json::object();
    Json entries_ = Json::array();
    bool pass_ = true;
    bool timestamp_ = true;
};

}  // namespace nckit
