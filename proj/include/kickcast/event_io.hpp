#ifndef KICKCAST_EVENT_IO_HPP
#define KICKCAST_EVENT_IO_HPP

#include <string>
#include <vector>

#include "json.hpp"
#include "kickcast/synth_generator.hpp"

namespace kickcast {

/// Event files live as <dir>/events.csv plus <dir>/events.meta.json. One CSV line per
/// event holds the FULL state, the NOISY state, and the oracle action as flat named
/// numeric fields; players are listed by ascending unum. The column list is fixed by
/// the header and stable across versions.
inline constexpr const char* kEventFileName = "events.csv";
inline constexpr const char* kEventMetaName = "events.meta.json";
inline constexpr const char* kEventFormatName = "kickcast-events-v1";

/// Writes events.csv and events.meta.json under dir (created if missing).
/// `meta_config` is recorded verbatim under the "config" key.
void write_events(const std::string& dir, const std::vector<KickEvent>& events,
                  const nlohmann::ordered_json& meta_config);

struct EventFile {
    std::vector<KickEvent> events;
    nlohmann::ordered_json meta;
};

/// Reads an event directory back. Throws IoError when files are missing,
/// ParseError/SchemaError when contents are malformed.
EventFile read_events(const std::string& dir);

}  // namespace kickcast

#endif  // KICKCAST_EVENT_IO_HPP
