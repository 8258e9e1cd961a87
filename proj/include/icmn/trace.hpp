// Contact-trace ingestion and discretization. Two text formats:
//   interval-csv: node_a,node_b,t_start_seconds,t_end_seconds
//   event-csv:    t_seconds,node_a,node_b,up|down
// '#' comment lines are allowed in both; interval-csv may carry a header
// row. Node ids are opaque strings densified by first appearance; per-pair
// intervals are canonicalized (u < v) and overlapping or adjacent ones
// merged.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "icmn/temporal_graph.hpp"

namespace icmn {

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, long line)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg), line(line) {}
    long line;
};

struct Contact {
    int u, v;  // dense ids, u < v
    double t_start, t_end;  // seconds, t_start < t_end
};

struct ContactTrace {
    std::vector<std::string> node_ids;  // dense id -> original id
    std::vector<Contact> contacts;      // sorted by (u, v, t_start)
    double duration = 0.0;              // max t_end
    std::vector<std::string> warnings;

    int node_count() const { return static_cast<int>(node_ids.size()); }
};

enum class TraceFormat { IntervalCsv, EventCsv };

// Maps a CLI/file label ("interval-csv" / "event-csv"); throws
// std::domain_error on anything else.
TraceFormat trace_format_from_name(const std::string& name);

ContactTrace parse_contacts(std::istream& in, TraceFormat format);

// Canonical interval-csv serialization; parse(write(parse(x))) == parse(x).
void write_interval_csv(std::ostream& out, const ContactTrace& trace);

// Event-csv dump of a temporal graph: one up event at the start of each
// contact run, one down event at its end (runs touching the trace end are
// closed there). Node ids are the decimal node numbers.
void write_event_csv(std::ostream& out, const TemporalGraph& g);

// Snapshot k covers [k*tau, (k+1)*tau); an edge is present when the pair's
// total up-time inside the window is at least min_coverage * tau. Steps
// count is ceil(duration / tau).
TemporalGraph discretize(const ContactTrace& trace, double tau, double min_coverage = 0.5);

struct LinkStats {
    double mean_contact = 0.0;                 // seconds
    std::optional<double> mean_intercontact;   // absent when no pair has 2+ contacts
    std::map<long, long> lifetime_histogram;   // floor(duration_s) -> count
    std::vector<double> durations;             // sorted contact lengths
    long contact_count = 0;

    double fraction_shorter_than(double tau) const;
};

// Throws std::domain_error on a trace without contacts.
LinkStats link_stats(const ContactTrace& trace);

struct ModelEstimate {
    double r = 1.0;
    double lambda = 1.0;
    bool r_clamped = false;       // raw mean_contact/tau was below 1
    bool lambda_clamped = false;  // raw ratio was below 1/r
};

// Inverts the expected-duration formulas: r = mean_contact/tau,
// lambda = mean_intercontact/mean_contact, clamped into the model's domain.
ModelEstimate estimate_model(const LinkStats& stats, double tau);

}  // namespace icmn
