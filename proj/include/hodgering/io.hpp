#pragma once

#include <map>
#include <string>
#include <vector>

#include "hodgering/lefschetz.hpp"
#include "hodgering/ring.hpp"

namespace hodgering {

/// On-disk form of a ring: the ring itself plus named elements.
struct RingDocument {
  HodgeRing ring;
  std::map<std::string, Element> elements;
};

/// Canonical JSON text: fixed field order, sorted keys, lowest-terms
/// rationals as {num, den} integer pairs. serialize(deserialize(s)) is
/// byte-identical for canonical inputs.
std::string serialize(const RingDocument& doc);

/// Parses and validates. Throws ParseError, SchemaVersionMismatch, or
/// ValidationFailed (the latter after a failed validate()).
RingDocument deserialize(const std::string& text);

RingDocument load(const std::string& path);
void save(const RingDocument& doc, const std::string& path);

/// Square matrix of rationals from a JSON array of arrays; entries may be
/// integers or {num, den} pairs.
Mat load_matrix(const std::string& path);

struct CheckResult {
  std::string name;
  bool ok = true;
  bool skipped = false;
  std::string witness;
  std::string skipped_reason;
};

struct Report {
  bool passed = true;
  std::vector<CheckResult> checks;
  std::map<std::pair<int, int>, Index> hodge_table;   // (p, l)
  std::map<std::pair<int, int>, Index> weight_table;  // (k, l)
  std::map<int, int> nu;

  void add(CheckResult c) {
    if (!c.skipped && !c.ok) passed = false;
    checks.push_back(std::move(c));
  }
};

std::string report_json(const Report& rep);
std::string report_text(const Report& rep);

/// Aligned-text rhombus of dim Gr_F^p H^l: one row per degree l, the entry
/// for p placed at column 2d + 2p - l, so the vertical center axis is the
/// locus 2p = l.
std::string render_diamond(const HodgeRing& r);
std::string diamond_json(const HodgeRing& r);

}  // namespace hodgering
