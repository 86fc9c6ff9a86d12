#include "platonic/commands.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "platonic/decoration.hpp"
#include "platonic/diagram.hpp"
#include "platonic/error.hpp"
#include "platonic/export.hpp"
#include "platonic/facelattice.hpp"
#include "platonic/report.hpp"
#include "platonic/verify.hpp"

namespace platonic {

namespace {

using nlohmann::json;

struct Options {
  std::string diagram;
  std::string end;
  std::string format;
  std::optional<int> rank;
  std::optional<int> c;
  std::optional<int> d;
  std::string out_path;
  bool json = false;
};

Diagram load(const Options& o) { return Diagram::parse(o.diagram, o.rank); }

End require_end(const Options& o) {
  if (o.end.empty()) throw ParseError("this command needs an end: left or right");
  return parse_end(o.end);
}

int cmd_info(const Options& o, std::ostream& out) {
  const Diagram d = load(o);
  const bool chain = is_platonic_chain(d);
  std::vector<std::array<int, 3>> edges;
  for (int i = 1; i <= d.rank(); ++i) {
    for (int j = i + 1; j <= d.rank(); ++j) {
      if (d.adjacent(i, j)) edges.push_back({i, j, d.label(i, j)});
    }
  }
  if (o.json) {
    json j{{"diagram", d.name()},
           {"family", std::string(family_name(d.family()))},
           {"rank", d.rank()},
           {"order", group_order(d)},
           {"roots", root_count(d)},
           {"chain", chain}};
    j["edges"] = json::array();
    for (const auto& e : edges) j["edges"].push_back({{"i", e[0]}, {"j", e[1]}, {"m", e[2]}});
    json cartan = json::array();
    for (int r = 0; r < d.rank(); ++r) {
      json row = json::array();
      for (int c = 0; c < d.rank(); ++c) row.push_back(d.cartan()(r, c).to_string());
      cartan.push_back(row);
    }
    j["cartan"] = cartan;
    if (chain) {
      j["polytopes"] = {{"left", polytope_name(d, End::Left)},
                        {"right", polytope_name(d, End::Right)}};
    }
    out << j.dump(2) << "\n";
    return 0;
  }
  out << d.name() << "\n";
  out << "  family: " << family_name(d.family()) << "\n";
  out << "  rank: " << d.rank() << "\n";
  out << "  edges:";
  if (edges.empty()) out << " none";
  for (const auto& e : edges) out << " " << e[0] << "-" << e[1] << ":" << e[2];
  out << "\n";
  out << "  |W| = " << group_order(d) << "\n";
  out << "  |roots| = " << root_count(d) << "\n";
  out << "  platonic chain: " << (chain ? "yes" : "no") << "\n";
  if (chain) {
    out << "  polytopes: left " << polytope_name(d, End::Left) << ", right "
        << polytope_name(d, End::Right) << "\n";
  }
  return 0;
}

int cmd_faces(const Options& o, std::ostream& out) {
  const Diagram d = load(o);
  const std::optional<End> end =
      o.end.empty() ? std::nullopt : std::optional<End>(parse_end(o.end));
  const FaceReport report = make_face_report(d, end);
  if (o.json) {
    out << json(report).dump(2) << "\n";
  } else {
    print_face_report(out, d, report);
  }
  return 0;
}

int cmd_meet(const Options& o, std::ostream& out) {
  const Diagram d = load(o);
  const End end = require_end(o);
  if (!o.c || !o.d) throw ParseError("meet needs --c <int> and --d <int>");
  const FaceReport report = make_meet_report(d, end, *o.c, *o.d);
  if (o.json) {
    out << json(report).dump(2) << "\n";
    return 0;
  }
  const MeetRow& m = report.meets.front();
  out << polytope_name(d, end) << " (" << d.name() << " " << end_name(end) << "): #f" << m.d
      << "(f" << m.c << ")\n";
  out << "  stabilizer ratio: " << m.ratio << "\n";
  if (m.geometric) out << "  geometric count:  " << *m.geometric << "\n";
  for (const auto& n : report.notes) out << "  note: " << n << "\n";
  return 0;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  const Diagram d = load(o);
  const End end = require_end(o);
  const FaceComplex complex(d, end);
  const auto& points = complex.vertices().points();
  const int dim = o.d.value_or(0);
  if (dim < 0 || dim >= d.rank()) {
    throw Error("face dimension must lie in 0.." + std::to_string(d.rank() - 1));
  }
  const auto& faces = complex.faces(dim);
  const Count expected = face_count(d, complex.decorations()[static_cast<std::size_t>(dim)]);
  if (o.json) {
    json vertices = json::array();
    for (const Point& p : points) {
      json coords = json::array();
      for (const QSqrt5& c : p.coords()) coords.push_back(c.to_string());
      vertices.push_back(coords);
    }
    out << json{{"diagram", d.name()},
                {"end", std::string(end_name(end))},
                {"dimension", dim},
                {"count", faces.size()},
                {"expected", expected},
                {"vertices", vertices},
                {"faces", faces}}
               .dump(2)
        << "\n";
    return 0;
  }
  out << polytope_name(d, end) << " (" << d.name() << " " << end_name(end) << "): "
      << faces.size() << " faces of dimension " << dim << " (group-order count " << expected
      << ")\n";
  if (dim == 0) {
    for (std::size_t i = 0; i < points.size(); ++i) {
      out << "  " << i << ": " << points[i].to_weight_string() << "\n";
    }
    return 0;
  }
  for (const auto& f : faces) {
    out << " ";
    for (auto v : f) out << " " << v;
    out << "\n";
  }
  return 0;
}

int cmd_export(const Options& o, std::ostream& out) {
  const Diagram d = load(o);
  const End end = require_end(o);
  std::string format = o.format;
  if (o.json) {
    if (!format.empty() && format != "json") throw ParseError("--json conflicts with format " + format);
    format = "json";
  }
  if (format.empty()) format = d.rank() == 3 ? "off" : "json";
  std::ostringstream body;
  if (format == "off") {
    write_off(body, build_off_mesh(d, end));
  } else if (format == "json") {
    body << incidence_json(d, end).dump(2) << "\n";
  } else {
    throw ParseError("unknown export format '" + format + "' (off or json)");
  }
  if (o.out_path.empty()) {
    out << body.str();
    return 0;
  }
  std::ofstream file(o.out_path);
  if (!file) throw Error("cannot open '" + o.out_path + "' for writing");
  file << body.str();
  if (!file) throw Error("failed writing '" + o.out_path + "'");
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const auto results = run_verification();
  if (o.json) {
    json arr = json::array();
    for (const auto& r : results) {
      arr.push_back({{"id", r.id},
                     {"title", r.title},
                     {"status", r.status == CheckStatus::Fail           ? "FAIL"
                                : r.status == CheckStatus::PassWithNote ? "PASS-WITH-NOTE"
                                                                        : "PASS"},
                     {"seconds", r.seconds},
                     {"notes", r.notes},
                     {"mismatches", r.mismatches}});
    }
    out << arr.dump(2) << "\n";
  } else {
    print_verification(out, results);
  }
  return all_passed(results) ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Platonic polytopes from decorated Coxeter-Dynkin diagrams", "platonic"};
  app.require_subcommand(1);
  Options o;

  const auto add_diagram = [&](CLI::App* cmd) {
    cmd->add_option("diagram", o.diagram, "Diagram name, e.g. A3, B5, F4, H4")->required();
    cmd->add_option("--n", o.rank, "Rank for a bare family letter, e.g. 'B --n 6'");
    cmd->add_flag("--json", o.json, "Emit JSON");
  };
  const auto add_end = [&](CLI::App* cmd, bool required) {
    auto* opt = cmd->add_option("end", o.end, "Seed end: left or right");
    opt->check(CLI::IsMember({"left", "right"}, CLI::ignore_case));
    if (required) opt->required();
  };

  auto* info = app.add_subcommand("info", "Group order, root count and diagram shape");
  add_diagram(info);

  auto* faces = app.add_subcommand("faces", "Face classes with counts");
  add_diagram(faces);
  add_end(faces, false);

  auto* meet = app.add_subcommand("meet", "Number of d-faces meeting at a c-face");
  add_diagram(meet);
  add_end(meet, true);
  meet->add_option("c,--c", o.c, "Smaller face dimension")->required();
  meet->add_option("d,--d", o.d, "Larger face dimension")->required();

  auto* enumerate = app.add_subcommand("enumerate", "List vertices or faces of one dimension");
  add_diagram(enumerate);
  add_end(enumerate, true);
  enumerate->add_option("--d", o.d, "Face dimension (default 0: vertices)");

  auto* exporter = app.add_subcommand("export", "Write an OFF mesh (rank 3) or JSON incidences");
  add_diagram(exporter);
  add_end(exporter, true);
  exporter->add_option("format", o.format, "off or json")
      ->check(CLI::IsMember({"off", "json"}, CLI::ignore_case));
  exporter->add_option("--out", o.out_path, "Output path (default: stdout)");

  auto* verify = app.add_subcommand("verify", "Reproduce the reference tables and invariants");
  verify->add_flag("--json", o.json, "Emit JSON");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    // --help exits 0; every other parse failure is a usage error
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }
  std::transform(o.end.begin(), o.end.end(), o.end.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  std::transform(o.format.begin(), o.format.end(), o.format.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });

  try {
    if (info->parsed()) return cmd_info(o, out);
    if (faces->parsed()) return cmd_faces(o, out);
    if (meet->parsed()) return cmd_meet(o, out);
    if (enumerate->parsed()) return cmd_enumerate(o, out);
    if (exporter->parsed()) return cmd_export(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
  } catch (const InvalidDiagram& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace platonic
