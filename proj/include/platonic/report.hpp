#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "platonic/decoration.hpp"
#include "platonic/diagram.hpp"

namespace platonic {

struct FaceRow {
  std::string decoration;
  int d = 0;
  int v = 0;
  std::vector<int> face_nodes;
  std::vector<int> stab_nodes;
  Count count = 0;

  friend bool operator==(const FaceRow&, const FaceRow&) = default;
};

struct MeetRow {
  int c = 0;
  int d = 0;
  Count ratio = 0;
  std::optional<Count> geometric;  // null when not computed

  friend bool operator==(const MeetRow&, const MeetRow&) = default;
};

/// Face table report. JSON shape:
///   {diagram, end, rows: [{decoration, d, v, face_nodes, stab_nodes, count}],
///    meets: [{c, d, ratio, geometric}], notes: [string]}
/// `end` is "left", "right" or "both" (interleaved rows, no meets).
struct FaceReport {
  std::string diagram;
  std::string end;
  std::vector<FaceRow> rows;
  std::vector<MeetRow> meets;
  std::vector<std::string> notes;

  friend bool operator==(const FaceReport&, const FaceReport&) = default;
};

void to_json(nlohmann::json& j, const FaceRow& r);
void from_json(const nlohmann::json& j, FaceRow& r);
void to_json(nlohmann::json& j, const MeetRow& r);
void from_json(const nlohmann::json& j, MeetRow& r);
void to_json(nlohmann::json& j, const FaceReport& r);
void from_json(const nlohmann::json& j, FaceReport& r);

/// Largest rank for which geometric incidence counts are computed.
inline constexpr int kGeometricRankLimit = 8;

/// Rows of one chain (or both, interleaved, when `end` is empty). For a
/// single chain, `meets` lists consecutive dimensions (d-1, d).
FaceReport make_face_report(const Diagram& d, std::optional<End> end);

/// Report for one pair of dimensions: the two rows plus a single meet entry
/// carrying both the stabilizer ratio and the geometric count.
FaceReport make_meet_report(const Diagram& d, End end, int c, int dim_d);

/// Explanatory notes for a meeting number: flag-versus-face counting when
/// dimensions are not consecutive, and the frequently misprinted
/// edges-per-vertex value of the 600-cell.
std::vector<std::string> meeting_notes(const Diagram& d, End end, int c, int dim_d);

void print_face_report(std::ostream& os, const Diagram& d, const FaceReport& report);

}  // namespace platonic
