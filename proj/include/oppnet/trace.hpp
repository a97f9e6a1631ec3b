#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "oppnet/types.hpp"

namespace oppnet {

struct ContactTrace {
  std::vector<ContactEvent> events;
  std::uint32_t node_count = 0;
  SimTime duration = 0.0;
};

class TraceError : public std::runtime_error {
 public:
  TraceError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Parses the `<time> CONN <id1> <id2> <up|down>` text format. Blank lines and
// lines starting with '#' are skipped. Throws TraceError (1-based line number)
// on malformed lines, negative times, self-contacts, duplicate up, or down
// without a preceding up for the pair.
ContactTrace parse_contact_trace(std::string_view text);

// Serializes a trace so that parse(write(t)) reproduces events bit-exactly.
std::string write_contact_trace(const ContactTrace& trace);

struct CommunityParams {
  std::uint32_t groups = 2;
  std::uint32_t nodes_per_group = 10;
  double intra_rate_per_hour = 2.0;
  double inter_rate_per_hour = 0.2;
  double mean_contact_duration_s = 120.0;
  double duration_s = 14400.0;
  std::uint64_t seed = 1;
};

// Synthetic mobility: every node pair is an independent alternating renewal
// process (exponential gaps at the pair's rate, exponential contact
// durations). Contacts still open at the end are truncated to duration_s.
ContactTrace generate_community_trace(const CommunityParams& params);

}  // namespace oppnet
