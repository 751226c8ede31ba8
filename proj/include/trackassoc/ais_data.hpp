#pragma once

#include <algorithm>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "trackassoc/config.hpp"
#include "trackassoc/errors.hpp"
#include "trackassoc/geodesy.hpp"

namespace trackassoc {

// One knot in meters per second (international knot).
inline constexpr double kKnotsToMps = 0.514444;

// One CSV row as it appeared on disk. The original field text is kept so a
// dataset can be written back without reformatting anything.
struct RawRecord {
    std::optional<std::string> vid;
    std::string time_text;    // hh:mm:ss
    std::string lat_text;
    std::string lon_text;
    std::string speed_text;   // integral tenths of knots
    std::string course_text;  // integral tenths of degrees
    double lat_deg = 0.0;
    double lon_deg = 0.0;
    long long speed_tenths_knots = 0;
    long long course_tenths_degrees = 0;
};

// One normalized AIS report.
struct Node {
    int index = -1;      // global record ordinal, 0-based, input order
    double t = 0.0;      // seconds since dataset start
    GeoPoint pos;
    double speed_mps = 0.0;
    double course_deg = 0.0;  // [0, 360)
    std::optional<std::string> true_vid;  // ground truth, training data only
};

// All records of one file. `nodes` is sorted by (t, index); ties keep input
// order. `records[node.index]` is the raw row behind each node.
struct Dataset {
    std::vector<Node> nodes;
    std::vector<RawRecord> records;
    bool has_ground_truth = false;

    bool empty() const { return nodes.empty(); }
    size_t size() const { return nodes.size(); }
    double duration_s() const { return nodes.empty() ? 0.0 : nodes.back().t; }
};

namespace detail {

inline std::vector<std::string> split_csv(std::string_view line) {
    std::vector<std::string> out;
    size_t start = 0;
    while (true) {
        const size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            out.emplace_back(line.substr(start));
            break;
        }
        out.emplace_back(line.substr(start, comma - start));
        start = comma + 1;
    }
    if (!out.empty() && !out.back().empty() && out.back().back() == '\r') out.back().pop_back();
    return out;
}

inline double parse_number_field(const std::string& text, int line_no, const char* what) {
    if (text.empty()) throw MalformedRow(line_no, std::string(what) + " is empty");
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (end != text.c_str() + text.size())
        throw MalformedRow(line_no, std::string(what) + " is not a number: '" + text + "'");
    return v;
}

inline long long parse_tenths_field(const std::string& text, int line_no, const char* what) {
    if (text.empty()) throw MalformedRow(line_no, std::string(what) + " is empty");
    size_t i = text[0] == '-' ? 1 : 0;
    if (i == text.size()) throw MalformedRow(line_no, std::string(what) + " is not an integer");
    for (; i < text.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw MalformedRow(line_no, std::string(what) + " must be integral tenths: '" + text + "'");
    return std::stoll(text);
}

}  // namespace detail

// Seconds since midnight for a strict "hh:mm:ss" string.
inline double seconds_since_midnight(const std::string& time_text, int line_no = -1) {
    const auto fail = [&](const std::string& why) -> double {
        throw MalformedRow(line_no, "bad time '" + time_text + "': " + why);
    };
    if (time_text.size() != 8 || time_text[2] != ':' || time_text[5] != ':')
        return fail("expected hh:mm:ss");
    for (size_t i : {0u, 1u, 3u, 4u, 6u, 7u})
        if (!std::isdigit(static_cast<unsigned char>(time_text[i]))) return fail("expected digits");
    const int hh = (time_text[0] - '0') * 10 + (time_text[1] - '0');
    const int mm = (time_text[3] - '0') * 10 + (time_text[4] - '0');
    const int ss = (time_text[6] - '0') * 10 + (time_text[7] - '0');
    if (hh >= 24) return fail("hours out of range");
    if (mm >= 60) return fail("minutes out of range");
    if (ss >= 60) return fail("seconds out of range");
    return hh * 3600.0 + mm * 60.0 + ss;
}

// Parse one data row. Layout is (VID,)TIME,LAT,LON,SPEED,COURSE; the VID
// column is present iff `expect_vid`.
inline RawRecord parse_record(std::string_view line, int line_no, bool expect_vid) {
    const auto fields = detail::split_csv(line);
    const size_t expected = expect_vid ? 6 : 5;
    if (fields.size() != expected)
        throw MalformedRow(line_no, "expected " + std::to_string(expected) + " columns, got " +
                                        std::to_string(fields.size()));
    RawRecord r;
    size_t i = 0;
    if (expect_vid) {
        if (fields[0].empty()) throw MalformedRow(line_no, "VID is empty");
        r.vid = fields[i++];
    }
    r.time_text = fields[i++];
    seconds_since_midnight(r.time_text, line_no);  // validate now, reuse later
    r.lat_text = fields[i++];
    r.lon_text = fields[i++];
    r.speed_text = fields[i++];
    r.course_text = fields[i++];
    r.lat_deg = detail::parse_number_field(r.lat_text, line_no, "LAT");
    r.lon_deg = detail::parse_number_field(r.lon_text, line_no, "LON");
    r.speed_tenths_knots = detail::parse_tenths_field(r.speed_text, line_no, "SPEED");
    r.course_tenths_degrees = detail::parse_tenths_field(r.course_text, line_no, "COURSE");
    return r;
}

// Convert a raw record into a node relative to dataset start t0 (seconds
// since midnight). Speed comes in tenths of knots, course in tenths of
// degrees; both are divided by ten, speed is converted to m/s and the course
// reduced into [0, 360).
inline Node normalize(const RawRecord& raw, double t0_s) {
    if (raw.lat_deg < -90.0 || raw.lat_deg > 90.0)
        throw OutOfRange("latitude out of range: " + raw.lat_text);
    if (raw.lon_deg < -180.0 || raw.lon_deg > 180.0)
        throw OutOfRange("longitude out of range: " + raw.lon_text);
    if (raw.speed_tenths_knots < 0)
        throw OutOfRange("negative speed: " + raw.speed_text);
    Node n;
    n.t = seconds_since_midnight(raw.time_text) - t0_s;
    n.pos = GeoPoint{raw.lat_deg, normalize_lon(raw.lon_deg)};
    n.speed_mps = (static_cast<double>(raw.speed_tenths_knots) / 10.0) * kKnotsToMps;
    n.course_deg = normalize_course(static_cast<double>(raw.course_tenths_degrees) / 10.0);
    n.true_vid = raw.vid;
    return n;
}

// Build a dataset from already-parsed records (input order). Times are made
// monotone across midnight: a drop of more than 20 hours between consecutive
// rows is treated as a day rollover.
inline Dataset dataset_from_records(std::vector<RawRecord> records, bool has_ground_truth) {
    if (records.empty()) throw EmptyDataset();
    std::vector<double> adjusted(records.size());
    double offset = 0.0;
    for (size_t i = 0; i < records.size(); ++i) {
        double s = seconds_since_midnight(records[i].time_text) + offset;
        if (i > 0 && s < adjusted[i - 1] - 20.0 * 3600.0) {
            offset += 24.0 * 3600.0;
            s += 24.0 * 3600.0;
        }
        adjusted[i] = s;
    }
    const double t0 = *std::min_element(adjusted.begin(), adjusted.end());

    Dataset ds;
    ds.has_ground_truth = has_ground_truth;
    ds.records = std::move(records);
    ds.nodes.reserve(ds.records.size());
    for (size_t i = 0; i < ds.records.size(); ++i) {
        // normalize() reads the wall-clock time again; shift t0 per record so
        // rollover-adjusted rows land on the same timeline.
        const double row_offset = adjusted[i] - seconds_since_midnight(ds.records[i].time_text);
        try {
            Node n = normalize(ds.records[i], t0 - row_offset);
            n.index = static_cast<int>(i);
            ds.nodes.push_back(std::move(n));
        } catch (const OutOfRange& e) {
            throw OutOfRange(static_cast<int>(i) + 2, e.what());  // +2: header + 1-based
        }
    }
    std::stable_sort(ds.nodes.begin(), ds.nodes.end(),
                     [](const Node& a, const Node& b) { return a.t < b.t; });
    return ds;
}

// Read a whole CSV file (header line required).
inline Dataset load_dataset(std::istream& in, bool expect_vid) {
    std::string line;
    if (!std::getline(in, line)) throw EmptyDataset();
    std::vector<RawRecord> records;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        records.push_back(parse_record(line, line_no, expect_vid));
    }
    if (records.empty()) throw EmptyDataset();
    return dataset_from_records(std::move(records), expect_vid);
}

inline Dataset load_dataset(const std::string& path, bool expect_vid) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open input file: " + path);
    return load_dataset(in, expect_vid);
}

inline std::string csv_header(bool with_vid, bool with_track_id) {
    std::string h = with_vid ? "VID,TIME,LAT,LON,SPEED,COURSE" : "TIME,LAT,LON,SPEED,COURSE";
    if (with_track_id) h += ",TRACK_ID";
    return h;
}

// Write records back in input order, optionally dropping the VID column.
inline size_t write_dataset(const Dataset& ds, std::ostream& out, bool include_vid) {
    out << csv_header(include_vid && ds.has_ground_truth, false) << '\n';
    for (const auto& r : ds.records) {
        if (include_vid && r.vid) out << *r.vid << ',';
        out << r.time_text << ',' << r.lat_text << ',' << r.lon_text << ',' << r.speed_text << ','
            << r.course_text << '\n';
    }
    return ds.records.size();
}

// Write the association output: every input column plus TRACK_ID, rows in
// input order. `assignment[index]` is the 1-based track id of each node.
inline size_t write_associated(const Dataset& ds, const std::vector<int>& assignment,
                               std::ostream& out) {
    const bool with_vid = !ds.records.empty() && ds.records.front().vid.has_value();
    out << csv_header(with_vid, true) << '\n';
    for (size_t i = 0; i < ds.records.size(); ++i) {
        if (i >= assignment.size() || assignment[i] <= 0)
            throw MissingAssignment(static_cast<int>(i));
        const auto& r = ds.records[i];
        if (r.vid) out << *r.vid << ',';
        out << r.time_text << ',' << r.lat_text << ',' << r.lon_text << ',' << r.speed_text << ','
            << r.course_text << ',' << assignment[i] << '\n';
    }
    return ds.records.size();
}

}  // namespace trackassoc
