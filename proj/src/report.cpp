#include "platonic/report.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

#include "platonic/error.hpp"
#include "platonic/facelattice.hpp"

namespace platonic {

using nlohmann::json;

void to_json(json& j, const FaceRow& r) {
  j = json{{"decoration", r.decoration}, {"d", r.d},
           {"v", r.v},                   {"face_nodes", r.face_nodes},
           {"stab_nodes", r.stab_nodes}, {"count", r.count}};
}

void from_json(const json& j, FaceRow& r) {
  j.at("decoration").get_to(r.decoration);
  j.at("d").get_to(r.d);
  j.at("v").get_to(r.v);
  j.at("face_nodes").get_to(r.face_nodes);
  j.at("stab_nodes").get_to(r.stab_nodes);
  j.at("count").get_to(r.count);
}

void to_json(json& j, const MeetRow& r) {
  j = json{{"c", r.c}, {"d", r.d}, {"ratio", r.ratio}};
  j["geometric"] = r.geometric ? json(*r.geometric) : json(nullptr);
}

void from_json(const json& j, MeetRow& r) {
  j.at("c").get_to(r.c);
  j.at("d").get_to(r.d);
  j.at("ratio").get_to(r.ratio);
  const json& g = j.at("geometric");
  r.geometric = g.is_null() ? std::nullopt : std::optional<Count>(g.get<Count>());
}

void to_json(json& j, const FaceReport& r) {
  j = json{{"diagram", r.diagram}, {"end", r.end},     {"rows", r.rows},
           {"meets", r.meets},     {"notes", r.notes}};
}

void from_json(const json& j, FaceReport& r) {
  j.at("diagram").get_to(r.diagram);
  j.at("end").get_to(r.end);
  j.at("rows").get_to(r.rows);
  j.at("meets").get_to(r.meets);
  r.notes = j.contains("notes") ? j.at("notes").get<std::vector<std::string>>()
                                : std::vector<std::string>{};
}

namespace {

FaceRow make_row(const FaceClass& fc) {
  return {fc.decoration.to_string(), fc.dimension,          fc.dual_dimension,
          fc.face_nodes.nodes(),     fc.stab_nodes.nodes(), fc.count};
}

std::string generators(const std::vector<int>& nodes) {
  if (nodes.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (i) out += ",";
    out += "r" + std::to_string(nodes[i]);
  }
  return out;
}

}  // namespace

FaceReport make_face_report(const Diagram& d, std::optional<End> end) {
  FaceReport report;
  report.diagram = d.name();
  if (!end) {
    report.end = "both";
    for (const FaceClass& fc : face_table(d)) report.rows.push_back(make_row(fc));
    return report;
  }
  report.end = std::string(end_name(*end));
  const auto rows = face_table(d, *end);
  for (const FaceClass& fc : rows) report.rows.push_back(make_row(fc));

  std::optional<FaceComplex> complex;
  if (d.rank() <= kGeometricRankLimit) complex.emplace(d, *end);
  for (int k = 1; k < d.rank(); ++k) {
    MeetRow m{k - 1, k, stabilizer_ratio(d, rows[k - 1].decoration, rows[k].decoration),
              std::nullopt};
    if (complex) m.geometric = complex->incidence(k - 1, k);
    report.meets.push_back(m);
    for (auto& note : meeting_notes(d, *end, k - 1, k)) report.notes.push_back(std::move(note));
  }
  return report;
}

FaceReport make_meet_report(const Diagram& d, End end, int c, int dim_d) {
  if (c < 0 || dim_d <= c || dim_d > d.rank() - 1) {
    throw Error("need 0 <= c < d <= " + std::to_string(d.rank() - 1) + ", got c = " +
                std::to_string(c) + ", d = " + std::to_string(dim_d));
  }
  FaceReport report;
  report.diagram = d.name();
  report.end = std::string(end_name(end));
  const auto rows = face_table(d, end);
  report.rows.push_back(make_row(rows[c]));
  report.rows.push_back(make_row(rows[dim_d]));

  MeetRow m{c, dim_d, stabilizer_ratio(d, rows[c].decoration, rows[dim_d].decoration),
            std::nullopt};
  if (d.rank() <= kGeometricRankLimit) m.geometric = FaceComplex(d, end).incidence(c, dim_d);
  report.meets.push_back(m);
  report.notes = meeting_notes(d, end, c, dim_d);
  return report;
}

std::vector<std::string> meeting_notes(const Diagram& d, End end, int c, int dim_d) {
  std::vector<std::string> notes;
  if (dim_d - c > 1) {
    notes.push_back(
        "ratio counts flags f_" + std::to_string(c) + " < ... < f_" + std::to_string(dim_d) +
        " through a fixed f_" + std::to_string(c) +
        "; geometric counts distinct faces f_" + std::to_string(dim_d) + " containing it");
  }
  if (d.family() == Family::H4 && end == End::Left && c == 0 && dim_d == 1) {
    notes.push_back(
        "erratum: 12 edges meet at each vertex of the 600-cell (2 * 720 edges / 120 vertices); "
        "the value 20 sometimes printed for this entry is the number of cells per vertex");
  }
  return notes;
}

void print_face_report(std::ostream& os, const Diagram& d, const FaceReport& report) {
  os << d.name() << " (|W| = " << group_order(d) << ")";
  if (report.end != "both") {
    os << ", " << report.end << " seed: " << polytope_name(d, parse_end(report.end));
  }
  os << "\n";
  os << std::left << std::setw(4 * d.rank() + 2) << "face" << std::setw(16) << "G_f"
     << std::setw(16) << "G_s" << std::setw(4) << "d" << std::setw(4) << "v" << "count\n";
  for (const FaceRow& r : report.rows) {
    const std::string glyphs = Decoration::parse(r.decoration).to_glyphs();
    // Glyphs are 3 bytes wide in UTF-8 but one column on screen.
    const int pad = 4 * d.rank() + 2 - (2 * d.rank() - 1);
    os << glyphs << std::string(static_cast<std::size_t>(std::max(pad, 1)), ' ') << std::setw(16)
       << generators(r.face_nodes) << std::setw(16) << generators(r.stab_nodes) << std::setw(4)
       << r.d << std::setw(4) << r.v << r.count << "\n";
  }
  for (const MeetRow& m : report.meets) {
    os << "#f" << m.d << "(f" << m.c << "): ratio " << m.ratio;
    if (m.geometric) os << ", geometric " << *m.geometric;
    os << "\n";
  }
  for (const std::string& n : report.notes) os << "note: " << n << "\n";
}

}  // namespace platonic
