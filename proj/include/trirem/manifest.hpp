#pragma once

#include <map>
#include <string>
#include <string_view>

namespace trirem {

/// Record of one CLI run. `result_digest` is the SHA-256 of the output payload,
/// so identical invocations produce identical digests.
struct RunManifest {
    std::string command;
    std::map<std::string, std::string> parameters;
    std::string tool_version;
    std::string started;
    std::string finished;
    std::string result_digest;

    std::string to_json() const;
};

std::string sha256_hex(std::string_view payload);

/// Current UTC time as YYYY-MM-DDTHH:MM:SSZ.
std::string utc_timestamp();

} // namespace trirem
