#include "kickcast/event_io.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "kickcast/textio.hpp"

namespace kickcast {

namespace {

const char* kPlayerFields[] = {"side",       "unum",          "px",
                               "py",         "vx",            "vy",
                               "body",       "face",          "stamina",
                               "tackling",   "kicking",       "card",
                               "pos_count",  "vel_count",     "stamina_count",
                               "dash_rate",  "effort_max",    "effort_min",
                               "kickable_dist", "margin_dist", "kick_power_rate",
                               "decay",      "size",          "speed_max"};

std::vector<std::string> event_columns() {
    std::vector<std::string> cols = {"event_id", "cycle", "kicker_unum"};
    for (const char* flavor : {"full", "noisy"}) {
        std::string f(flavor);
        for (const char* b : {"ball_px", "ball_py", "ball_vx", "ball_vy"})
            cols.push_back(f + "_" + b);
        cols.push_back(f + "_offside_count");
        for (const char* team : {"tm", "opp"})
            for (int i = 1; i <= kTeamSize; ++i)
                for (const char* field : kPlayerFields)
                    cols.push_back(f + "_" + team + (i < 10 ? "0" : "") +
                                   std::to_string(i) + "_" + field);
    }
    for (const char* a : {"category", "description", "target_unum", "target_x",
                          "target_y", "kick_angle", "kick_speed"})
        cols.push_back(std::string("action_") + a);
    return cols;
}

void append_player(std::vector<double>& out, const PlayerState& p) {
    out.insert(out.end(),
               {static_cast<double>(static_cast<int>(p.side)),
                static_cast<double>(p.unum), p.pos.x, p.pos.y, p.vel.x, p.vel.y, p.body,
                p.face, p.stamina, p.tackling ? 1.0 : 0.0, p.kicking ? 1.0 : 0.0,
                p.card ? 1.0 : 0.0, static_cast<double>(p.pos_count),
                static_cast<double>(p.vel_count), static_cast<double>(p.stamina_count),
                p.type_params.dash_rate, p.type_params.effort_max,
                p.type_params.effort_min, p.type_params.kickable_dist,
                p.type_params.margin_dist, p.type_params.kick_power_rate,
                p.type_params.decay, p.type_params.size, p.type_params.speed_max});
}

void append_state(std::vector<double>& out, const WorldState& ws) {
    out.insert(out.end(), {ws.ball.pos.x, ws.ball.pos.y, ws.ball.vel.x, ws.ball.vel.y,
                           static_cast<double>(ws.offside_count)});
    for (const auto* team : {&ws.teammates, &ws.opponents}) {
        std::vector<const PlayerState*> sorted;
        for (const auto& p : *team) sorted.push_back(&p);
        std::sort(sorted.begin(), sorted.end(),
                  [](const PlayerState* a, const PlayerState* b) { return a->unum < b->unum; });
        for (const auto* p : sorted) append_player(out, *p);
    }
}

PlayerState read_player(const double*& it) {
    PlayerState p;
    p.side = static_cast<Side>(static_cast<int>(*it++));
    p.unum = static_cast<int>(*it++);
    p.pos = {*it++, *it++};
    p.vel = {*it++, *it++};
    p.body = *it++;
    p.face = *it++;
    p.stamina = *it++;
    p.tackling = *it++ != 0.0;
    p.kicking = *it++ != 0.0;
    p.card = *it++ != 0.0;
    p.pos_count = static_cast<int>(*it++);
    p.vel_count = static_cast<int>(*it++);
    p.stamina_count = static_cast<int>(*it++);
    p.type_params.dash_rate = *it++;
    p.type_params.effort_max = *it++;
    p.type_params.effort_min = *it++;
    p.type_params.kickable_dist = *it++;
    p.type_params.margin_dist = *it++;
    p.type_params.kick_power_rate = *it++;
    p.type_params.decay = *it++;
    p.type_params.size = *it++;
    p.type_params.speed_max = *it++;
    return p;
}

WorldState read_state(const double*& it, Flavor flavor, int cycle, int kicker_unum) {
    WorldState ws;
    ws.flavor = flavor;
    ws.cycle = cycle;
    ws.kicker_unum = kicker_unum;
    ws.ball.pos = {*it++, *it++};
    ws.ball.vel = {*it++, *it++};
    ws.offside_count = static_cast<int>(*it++);
    for (int i = 0; i < kTeamSize; ++i) ws.teammates.push_back(read_player(it));
    for (int i = 0; i < kTeamSize; ++i) ws.opponents.push_back(read_player(it));
    return ws;
}

}  // namespace

void write_events(const std::string& dir, const std::vector<KickEvent>& events,
                  const nlohmann::ordered_json& meta_config) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(dir, ec);

    const auto cols = event_columns();
    std::string out;
    for (std::size_t i = 0; i < cols.size(); ++i) {
        if (i) out += ',';
        out += cols[i];
    }
    out += '\n';

    std::vector<double> vals;
    for (const auto& ev : events) {
        vals.clear();
        vals.insert(vals.end(),
                    {static_cast<double>(ev.event_id), static_cast<double>(ev.fws.cycle),
                     static_cast<double>(ev.fws.kicker_unum)});
        append_state(vals, ev.fws);
        append_state(vals, ev.ws);
        vals.insert(vals.end(),
                    {static_cast<double>(static_cast<int>(ev.action.category)),
                     static_cast<double>(static_cast<int>(ev.action.description)),
                     static_cast<double>(ev.action.target_unum), ev.action.target_position.x,
                     ev.action.target_position.y, ev.action.first_kick_angle,
                     ev.action.first_kick_speed});
        for (std::size_t i = 0; i < vals.size(); ++i) {
            if (i) out += ',';
            append_double(out, vals[i]);
        }
        out += '\n';
    }

    std::string csv_path = (fs::path(dir) / kEventFileName).string();
    std::ofstream f(csv_path, std::ios::binary);
    if (!f) throw IoError("cannot open " + csv_path + " for writing");
    f << out;
    if (!f) throw IoError("failed writing " + csv_path);

    nlohmann::ordered_json meta;
    meta["format"] = kEventFormatName;
    meta["n_events"] = events.size();
    meta["columns"] = cols.size();
    meta["config"] = meta_config;
    std::string meta_path = (fs::path(dir) / kEventMetaName).string();
    std::ofstream mf(meta_path, std::ios::binary);
    if (!mf) throw IoError("cannot open " + meta_path + " for writing");
    mf << meta.dump(2) << '\n';
}

EventFile read_events(const std::string& dir) {
    namespace fs = std::filesystem;
    std::string csv_path = (fs::path(dir) / kEventFileName).string();
    std::string meta_path = (fs::path(dir) / kEventMetaName).string();

    std::ifstream mf(meta_path, std::ios::binary);
    if (!mf) throw IoError("missing event metadata file " + meta_path);
    EventFile out;
    try {
        out.meta = nlohmann::ordered_json::parse(mf);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError("invalid JSON in " + meta_path + ": " + e.what());
    }
    if (out.meta.value("format", "") != kEventFormatName)
        throw SchemaError("event file format '" + out.meta.value("format", "") +
                          "' does not match expected '" + kEventFormatName + "'");

    std::ifstream f(csv_path, std::ios::binary);
    if (!f) throw IoError("missing event file " + csv_path);

    std::string header;
    if (!std::getline(f, header)) throw ParseError("empty event file " + csv_path, 1);
    const auto cols = event_columns();
    {
        std::size_t n = header.empty() ? 0 : 1;
        for (char c : header)
            if (c == ',') ++n;
        if (n != cols.size())
            throw SchemaError("event file has " + std::to_string(n) +
                              " columns, expected " + std::to_string(cols.size()));
    }

    std::string line;
    std::vector<double> vals;
    vals.reserve(cols.size());
    int line_no = 1;
    while (std::getline(f, line)) {
        ++line_no;
        if (line.empty()) continue;
        vals.clear();
        std::size_t start = 0;
        while (true) {
            std::size_t comma = line.find(',', start);
            std::string_view tok(line.data() + start,
                                 (comma == std::string::npos ? line.size() : comma) - start);
            vals.push_back(parse_double(tok, line_no));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        if (vals.size() != cols.size())
            throw SchemaError("event row at line " + std::to_string(line_no) + " has " +
                              std::to_string(vals.size()) + " values, expected " +
                              std::to_string(cols.size()));

        const double* it = vals.data();
        KickEvent ev;
        ev.event_id = static_cast<std::int64_t>(*it++);
        int cycle = static_cast<int>(*it++);
        int kicker = static_cast<int>(*it++);
        ev.fws = read_state(it, Flavor::kFull, cycle, kicker);
        ev.ws = read_state(it, Flavor::kNoisy, cycle, kicker);
        ev.action.category = static_cast<ActionCategory>(static_cast<int>(*it++));
        ev.action.description = static_cast<ActionDescription>(static_cast<int>(*it++));
        ev.action.target_unum = static_cast<int>(*it++);
        ev.action.target_position = {*it++, *it++};
        ev.action.first_kick_angle = *it++;
        ev.action.first_kick_speed = *it++;
        out.events.push_back(std::move(ev));
    }
    return out;
}

}  // namespace kickcast
